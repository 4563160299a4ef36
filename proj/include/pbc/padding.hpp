#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include "pbc/bit_string.hpp"

namespace pbc {

/// Returns the padding string for a message of `message_bits` bits at block
/// length `rate` bits. The padded message M || pad is a positive multiple of rate.
using PaddingRule = std::function<BitString(std::size_t message_bits, std::size_t rate)>;

/// 1 0^q with q minimal such that |M| + 1 + q is a multiple of rate.
BitString pad10star(std::size_t message_bits, std::size_t rate);

/// 1 0^q 1 with q minimal such that |M| + q + 2 is a multiple of rate.
BitString pad10star1(std::size_t message_bits, std::size_t rate);

/// One-byte length encoding.
std::uint8_t enc8(unsigned value);

/// M || pad(|M|, rate).
BitString apply_padding(const PaddingRule& rule, const BitString& message, std::size_t rate);

}  // namespace pbc
