#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "pbc/bit_string.hpp"

namespace pbc {

/// Lowercase hex, two characters per byte.
std::string to_hex(std::span<const std::uint8_t> bytes);
/// Accepts upper or lower case; throws std::invalid_argument on odd length or non-hex characters.
Bytes from_hex(std::string_view hex);

}  // namespace pbc
