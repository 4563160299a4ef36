#include "pbc/padding.hpp"

#include <stdexcept>

namespace pbc {

BitString pad10star(std::size_t message_bits, std::size_t rate) {
  if (rate < 1) {
    throw std::invalid_argument("pad10*: rate must be at least 1");
  }
  const std::size_t q = (rate - (message_bits + 1) % rate) % rate;
  BitString pad(1 + q);
  pad.set(0, true);
  return pad;
}

BitString pad10star1(std::size_t message_bits, std::size_t rate) {
  if (rate < 2) {
    throw std::invalid_argument("pad10*1: rate must be at least 2");
  }
  const std::size_t q = (rate - (message_bits + 2) % rate) % rate;
  BitString pad(q + 2);
  pad.set(0, true);
  pad.set(q + 1, true);
  return pad;
}

std::uint8_t enc8(unsigned value) {
  if (value > 255) {
    throw std::out_of_range("enc8: value does not fit in one byte");
  }
  return static_cast<std::uint8_t>(value);
}

BitString apply_padding(const PaddingRule& rule, const BitString& message, std::size_t rate) {
  return concat(message, rule(message.size(), rate));
}

}  // namespace pbc
