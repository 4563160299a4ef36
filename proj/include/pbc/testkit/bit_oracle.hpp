#pragma once

// Naive bit-level Keccak round function. Shares no code with keccak_p.hpp:
// rotation offsets are derived from the (x, y) -> (y, 2x + 3y) walk and round
// constant bits from polynomial reduction in GF(2)[x]. Slow on purpose.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pbc::testkit {

/// One entry per state bit, each 0 or 1, indexed by w(5y + x) + z.
struct BitState {
  unsigned width_log = 6;
  std::vector<std::uint8_t> bits;

  static BitState zero(unsigned width_log);
  std::size_t lane_width() const { return std::size_t{1} << width_log; }
  std::size_t width() const { return 25 * lane_width(); }

  std::uint8_t& at(unsigned x, unsigned y, std::size_t z);
  std::uint8_t at(unsigned x, unsigned y, std::size_t z) const;

  friend bool operator==(const BitState&, const BitState&) = default;
};

/// x^t mod (x^8 + x^6 + x^5 + x^4 + 1), constant term.
std::uint8_t oracle_rc_bit(unsigned t);
/// r[x, y] = (t + 1)(t + 2) / 2 along the walk starting at (1, 0).
unsigned oracle_rotation_offset(unsigned x, unsigned y);

BitState oracle_round(const BitState& state, unsigned round_index);
/// Last `rounds` rounds of the full 12 + 2l schedule.
BitState oracle_permutation(const BitState& state, unsigned rounds);

/// Packed LSB-first bytes, ceil(b / 8) long.
std::vector<std::uint8_t> to_packed(const BitState& state);
BitState from_packed(const std::vector<std::uint8_t>& packed, unsigned width_log);

}  // namespace pbc::testkit
