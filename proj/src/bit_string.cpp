#include "pbc/bit_string.hpp"

#include <stdexcept>

namespace pbc {

BitString::BitString(std::size_t bits) : m_bytes((bits + 7) / 8, 0), m_bits(bits) {}

BitString::BitString(std::span<const std::uint8_t> bytes)
    : m_bytes(bytes.begin(), bytes.end()), m_bits(bytes.size() * 8) {}

BitString::BitString(std::span<const std::uint8_t> bytes, std::size_t bits) : m_bits(bits) {
  if (bits > bytes.size() * 8) {
    throw std::invalid_argument("BitString: bit length exceeds byte buffer");
  }
  m_bytes.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((bits + 7) / 8));
  mask_tail();
}

bool BitString::bit(std::size_t i) const {
  if (i >= m_bits) {
    throw std::out_of_range("BitString::bit");
  }
  return (m_bytes[i / 8] >> (i % 8)) & 1;
}

void BitString::set(std::size_t i, bool value) {
  if (i >= m_bits) {
    throw std::out_of_range("BitString::set");
  }
  const auto mask = static_cast<std::uint8_t>(1u << (i % 8));
  if (value) {
    m_bytes[i / 8] |= mask;
  } else {
    m_bytes[i / 8] &= static_cast<std::uint8_t>(~mask);
  }
}

void BitString::flip(std::size_t i) { set(i, !bit(i)); }

void BitString::push_back(bool value) {
  if (m_bits % 8 == 0) {
    m_bytes.push_back(0);
  }
  ++m_bits;
  set(m_bits - 1, value);
}

void BitString::append(const BitString& other) {
  if (byte_aligned()) {
    m_bytes.insert(m_bytes.end(), other.m_bytes.begin(), other.m_bytes.end());
    m_bits += other.m_bits;
    return;
  }
  for (std::size_t i = 0; i < other.size(); ++i) {
    push_back(other.bit(i));
  }
}

void BitString::append_bytes(std::span<const std::uint8_t> bytes) { append(BitString(bytes)); }

void BitString::xor_at(std::size_t offset, const BitString& other) {
  if (offset > m_bits || other.size() > m_bits - offset) {
    throw std::out_of_range("BitString::xor_at");
  }
  if (offset % 8 == 0) {
    for (std::size_t i = 0; i < other.m_bytes.size(); ++i) {
      m_bytes[offset / 8 + i] ^= other.m_bytes[i];
    }
    return;
  }
  for (std::size_t i = 0; i < other.size(); ++i) {
    if (other.bit(i)) {
      flip(offset + i);
    }
  }
}

BitString BitString::slice(std::size_t begin, std::size_t len) const {
  if (begin > m_bits || len > m_bits - begin) {
    throw std::out_of_range("BitString::slice");
  }
  if (begin % 8 == 0) {
    return BitString(std::span(m_bytes).subspan(begin / 8), len);
  }
  BitString out(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.set(i, bit(begin + i));
  }
  return out;
}

void BitString::resize(std::size_t bits) {
  m_bytes.resize((bits + 7) / 8, 0);
  m_bits = bits;
  mask_tail();
}

void BitString::mask_tail() {
  if (m_bits % 8 != 0) {
    m_bytes.back() &= static_cast<std::uint8_t>((1u << (m_bits % 8)) - 1);
  }
}

BitString concat(const BitString& a, const BitString& b) {
  BitString out = a;
  out.append(b);
  return out;
}

}  // namespace pbc
