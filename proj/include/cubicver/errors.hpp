#pragma once

#include <stdexcept>
#include <string>

namespace cubicver {

// Every failure mode the library reports deliberately. The CLI maps parse and
// environment problems to exit code 2; verification failures are report
// entries, not exceptions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};

// rank_mod_p: the chosen prime divides a denominator of the matrix.
struct BadPrime : Error {
    using Error::Error;
};

// An operation that requires a smooth cubic was handed a singular one.
struct NotSmooth : Error {
    using Error::Error;
};

// iterate_theta on a family whose values do not pairwise commute.
struct NotAHiggsField : Error {
    using Error::Error;
};

// induced_c with a non-surjective Kodaira-Spencer map: the induced map is not
// unique, so we refuse rather than pick an extension.
struct NotVersal : Error {
    using Error::Error;
};

// The two independent Grassmannian section counts disagree.
struct InconsistentMethods : Error {
    using Error::Error;
};

// Root-system type outside the supported list.
struct Unsupported : Error {
    using Error::Error;
};

// Weyl-dimension / duality queries need a dominant weight.
struct InvalidWeight : Error {
    using Error::Error;
};

} // namespace cubicver
