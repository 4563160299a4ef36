#include "pbc/testkit/bit_oracle.hpp"

#include <array>
#include <stdexcept>

namespace pbc::testkit {

namespace {

std::size_t mod(long long a, long long m) { return static_cast<std::size_t>(((a % m) + m) % m); }

}  // namespace

BitState BitState::zero(unsigned width_log) {
  if (width_log > 6) {
    throw std::invalid_argument("oracle: width log must be at most 6");
  }
  BitState s;
  s.width_log = width_log;
  s.bits.assign(s.width(), 0);
  return s;
}

std::uint8_t& BitState::at(unsigned x, unsigned y, std::size_t z) {
  return bits.at(lane_width() * (5 * (y % 5) + (x % 5)) + z % lane_width());
}

std::uint8_t BitState::at(unsigned x, unsigned y, std::size_t z) const {
  return bits.at(lane_width() * (5 * (y % 5) + (x % 5)) + z % lane_width());
}

std::uint8_t oracle_rc_bit(unsigned t) {
  // Coefficients of x^0..x^7 of the running remainder.
  std::array<std::uint8_t, 8> poly{1, 0, 0, 0, 0, 0, 0, 0};
  for (unsigned step = 0; step < t; ++step) {
    const std::uint8_t carry = poly[7];
    for (unsigned k = 7; k > 0; --k) {
      poly[k] = poly[k - 1];
    }
    poly[0] = 0;
    if (carry) {
      // x^8 = x^6 + x^5 + x^4 + 1
      poly[6] ^= 1;
      poly[5] ^= 1;
      poly[4] ^= 1;
      poly[0] ^= 1;
    }
  }
  return poly[0];
}

unsigned oracle_rotation_offset(unsigned x, unsigned y) {
  if (x == 0 && y == 0) {
    return 0;
  }
  unsigned cx = 1;
  unsigned cy = 0;
  for (unsigned t = 0; t < 24; ++t) {
    if (cx == x && cy == y) {
      return (t + 1) * (t + 2) / 2;
    }
    const unsigned nx = cy;
    const unsigned ny = (2 * cx + 3 * cy) % 5;
    cx = nx;
    cy = ny;
  }
  throw std::out_of_range("oracle_rotation_offset: coordinates outside 0..4");
}

BitState oracle_round(const BitState& in, unsigned round_index) {
  const std::size_t w = in.lane_width();
  BitState a = in;

  // theta
  std::array<std::vector<std::uint8_t>, 5> c;
  for (unsigned x = 0; x < 5; ++x) {
    c[x].assign(w, 0);
    for (std::size_t z = 0; z < w; ++z) {
      c[x][z] = a.at(x, 0, z) ^ a.at(x, 1, z) ^ a.at(x, 2, z) ^ a.at(x, 3, z) ^ a.at(x, 4, z);
    }
  }
  for (unsigned x = 0; x < 5; ++x) {
    for (unsigned y = 0; y < 5; ++y) {
      for (std::size_t z = 0; z < w; ++z) {
        const std::uint8_t d = c[mod(static_cast<long long>(x) - 1, 5)][z] ^
                               c[mod(static_cast<long long>(x) + 1, 5)][mod(static_cast<long long>(z) - 1, static_cast<long long>(w))];
        a.at(x, y, z) ^= d;
      }
    }
  }

  // rho and pi
  BitState b = BitState::zero(a.width_log);
  for (unsigned x = 0; x < 5; ++x) {
    for (unsigned y = 0; y < 5; ++y) {
      const long long r = oracle_rotation_offset(x, y);
      for (std::size_t z = 0; z < w; ++z) {
        b.at(y, (2 * x + 3 * y) % 5, z) = a.at(x, y, mod(static_cast<long long>(z) - r, static_cast<long long>(w)));
      }
    }
  }

  // chi
  for (unsigned x = 0; x < 5; ++x) {
    for (unsigned y = 0; y < 5; ++y) {
      for (std::size_t z = 0; z < w; ++z) {
        a.at(x, y, z) = b.at(x, y, z) ^ ((1 - b.at((x + 1) % 5, y, z)) & b.at((x + 2) % 5, y, z));
      }
    }
  }

  // iota
  for (unsigned j = 0; j <= a.width_log; ++j) {
    a.at(0, 0, (std::size_t{1} << j) - 1) ^= oracle_rc_bit(j + 7 * round_index);
  }
  return a;
}

BitState oracle_permutation(const BitState& state, unsigned rounds) {
  const unsigned total = 12 + 2 * state.width_log;
  if (rounds > total) {
    throw std::invalid_argument("oracle_permutation: too many rounds");
  }
  BitState s = state;
  for (unsigned i = total - rounds; i < total; ++i) {
    s = oracle_round(s, i);
  }
  return s;
}

std::vector<std::uint8_t> to_packed(const BitState& state) {
  std::vector<std::uint8_t> out((state.width() + 7) / 8, 0);
  for (std::size_t i = 0; i < state.width(); ++i) {
    out[i / 8] |= static_cast<std::uint8_t>((state.bits[i] & 1) << (i % 8));
  }
  return out;
}

BitState from_packed(const std::vector<std::uint8_t>& packed, unsigned width_log) {
  BitState s = BitState::zero(width_log);
  if (packed.size() != (s.width() + 7) / 8) {
    throw std::invalid_argument("from_packed: wrong byte count");
  }
  for (std::size_t i = 0; i < s.width(); ++i) {
    s.bits[i] = (packed[i / 8] >> (i % 8)) & 1;
  }
  return s;
}

}  // namespace pbc::testkit
