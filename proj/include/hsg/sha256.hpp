#pragma once

#include <cstdint>
#include <string>

namespace hsg {

// SHA-256 of the input bytes as a 64-character lowercase hex string.
std::string sha256_hex(const std::string &data);

} // namespace hsg
