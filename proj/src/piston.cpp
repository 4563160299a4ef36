#include "pbc/piston.hpp"

#include <stdexcept>
#include <utility>

namespace pbc {

Piston::Piston(Permutation f, std::size_t squeeze_rate, std::size_t absorb_rate)
    : m_f(std::move(f)), m_squeeze_rate(squeeze_rate), m_absorb_rate(absorb_rate) {
  if (m_f.width() % 8 != 0) {
    throw std::invalid_argument("Piston: permutation width must be byte aligned");
  }
  if (squeeze_rate > absorb_rate || absorb_rate + FragmentOffset::kCount > m_f.width() / 8) {
    throw std::invalid_argument("Piston: need R_s <= R_a and R_a + 4 <= b/8");
  }
  // Offsets are written as single bytes.
  if (absorb_rate > 255) {
    throw std::invalid_argument("Piston: absorb rate must fit in one byte");
  }
  m_state.assign(m_f.width() / 8, 0);
}

void Piston::crypt(ByteStream& in, ByteStream& out, std::size_t omega, bool unwrap) {
  if (omega > m_squeeze_rate) {
    throw std::invalid_argument("Piston::crypt: omega beyond squeeze rate");
  }
  while (in.has_more() && omega < m_squeeze_rate) {
    const std::uint8_t x = in.get();
    out.put(static_cast<std::uint8_t>(m_state[omega] ^ x));
    m_state[omega] = unwrap ? x : static_cast<std::uint8_t>(m_state[omega] ^ x);
    ++omega;
  }
  m_state[offset_index(FragmentOffset::kCryptEnd)] ^= static_cast<std::uint8_t>(omega);
}

void Piston::inject(ByteStream& in, bool crypting) {
  std::size_t omega = crypting ? m_squeeze_rate : 0;
  m_state[offset_index(FragmentOffset::kInjectStart)] ^= static_cast<std::uint8_t>(omega);
  while (in.has_more() && omega < m_absorb_rate) {
    m_state[omega++] ^= in.get();
  }
  m_state[offset_index(FragmentOffset::kInjectEnd)] ^= static_cast<std::uint8_t>(omega);
}

void Piston::spark(bool end_of_message, std::uint8_t tag_length) {
  if (end_of_message) {
    m_state[offset_index(FragmentOffset::kEndOfMessage)] ^= tag_length == 0 ? 0xFF : tag_length;
  }
  m_f(m_state);
}

void Piston::get_tag(ByteStream& out, std::size_t length) const {
  if (length > m_squeeze_rate) {
    throw std::invalid_argument("Piston::get_tag: length exceeds squeeze rate");
  }
  out.put(std::span(m_state).first(length));
}

}  // namespace pbc
