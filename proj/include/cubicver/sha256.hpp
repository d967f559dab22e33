#pragma once

#include <string>
#include <string_view>

namespace cubicver {

// FIPS 180-4 SHA-256 digest of the bytes, as 64 lowercase hex characters.
// Self-contained so report hashes and the branching-table pin need no
// external dependency.
std::string sha256_hex(std::string_view data);

} // namespace cubicver
