#ifndef COXGROWTH_SHA256_HPP
#define COXGROWTH_SHA256_HPP

#include <string>
#include <string_view>

namespace coxgrowth {

// Hex digest of the FIPS 180-4 SHA-256 of the data; used for the catalog
// data manifest only.
std::string sha256_hex(std::string_view data);

}  // namespace coxgrowth

#endif
