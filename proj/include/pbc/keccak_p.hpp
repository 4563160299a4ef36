#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "pbc/bit_string.hpp"

namespace pbc {

/// Lane width exponent l: lanes are w = 2^l bits, the state is b = 25w bits.
constexpr unsigned kMaxWidthLog = 6;

constexpr std::size_t lane_bits(unsigned width_log) { return std::size_t{1} << width_log; }
constexpr std::size_t state_bits(unsigned width_log) { return 25 * lane_bits(width_log); }
/// Full Keccak-f round count 12 + 2l.
constexpr unsigned full_rounds(unsigned width_log) { return 12 + 2 * width_log; }

/// Maps b in {25, 50, ..., 1600} to l. Throws std::invalid_argument otherwise.
unsigned width_log_for(std::size_t width_bits);

/// Keccak-p[b, n_r]: the last n_r rounds of Keccak-f[b].
struct PermutationSpec {
  std::size_t width;  // b
  unsigned rounds;    // n_r

  /// Validates b and 1 <= n_r <= 12 + 2l.
  PermutationSpec(std::size_t width_bits, unsigned round_count);
  static PermutationSpec keccak_f(std::size_t width_bits);

  unsigned width_log() const { return width_log_for(width); }
  /// Index of the first round applied, 12 + 2l - n_r.
  unsigned first_round() const { return full_rounds(width_log()) - rounds; }

  friend bool operator==(const PermutationSpec&, const PermutationSpec&) = default;
};

struct RoundConstant {
  std::uint64_t value;
  unsigned round_index;
  unsigned width_log;
};

/// rc[t] = (x^t mod x^8 + x^6 + x^5 + x^4 + 1) mod x. Period 255.
bool lfsr_rc(std::uint64_t t);

/// RC[i] truncated to a 2^l-bit lane: bit 2^j - 1 = rc[j + 7i] for 0 <= j <= l.
RoundConstant round_constant(unsigned round_index, unsigned width_log = kMaxWidthLog);

/// r[x, y] of the rho step, unreduced.
unsigned rotation_offset(unsigned x, unsigned y);

/// 5x5 lanes of w bits each. lane(x, y) bit z is global state bit w(5y + x) + z.
class KeccakState {
 public:
  using Lanes = std::array<std::uint64_t, 25>;

  explicit KeccakState(unsigned width_log = kMaxWidthLog);
  static KeccakState for_width(std::size_t width_bits);

  unsigned width_log() const { return m_width_log; }
  std::size_t lane_width() const { return lane_bits(m_width_log); }
  std::size_t width() const { return state_bits(m_width_log); }
  std::uint64_t lane_mask() const;

  std::uint64_t lane(unsigned x, unsigned y) const { return m_lanes[index(x, y)]; }
  /// Stores `value` masked to the lane width.
  void set_lane(unsigned x, unsigned y, std::uint64_t value);
  std::uint64_t& operator()(unsigned x, unsigned y) { return m_lanes[index(x, y)]; }

  bool bit(std::size_t global_index) const;
  void set_bit(std::size_t global_index, bool value);

  /// Packs all b bits LSB-first into ceil(b / 8) bytes. Works at every width.
  BitString to_bits() const;
  static KeccakState from_bits(const BitString& bits);

  friend bool operator==(const KeccakState&, const KeccakState&) = default;

 private:
  static constexpr unsigned index(unsigned x, unsigned y) { return 5 * (y % 5) + (x % 5); }

  unsigned m_width_log;
  Lanes m_lanes{};
};

/// Byte views; require b to be a multiple of 8 (b >= 200).
Bytes state_to_bytes(const KeccakState& state);
KeccakState bytes_to_state(std::span<const std::uint8_t> bytes);

/// Cyclic lane rotation moving bit i to (i + offset) mod w.
std::uint64_t rotate_lane(std::uint64_t lane, unsigned offset, unsigned width_log);

// Individual step mappings, exposed for tracing.
void theta(KeccakState& state);
void rho_pi(KeccakState& state);
void chi(KeccakState& state);
void iota(KeccakState& state, const RoundConstant& rc);

KeccakState apply_round(KeccakState state, const RoundConstant& rc);
KeccakState keccak_p(KeccakState state, const PermutationSpec& spec);
KeccakState keccak_f(KeccakState state);

/// In-place Keccak-p over packed state bits (ceil(b / 8) bytes).
void keccak_p_packed(std::span<std::uint8_t> state, const PermutationSpec& spec);

/// A b-bit permutation acting in place on packed bits (ceil(b / 8) bytes).
class Permutation {
 public:
  using Function = std::function<void(std::span<std::uint8_t>)>;

  Permutation(std::size_t width_bits, Function fn, std::string name);

  std::size_t width() const { return m_width; }
  std::size_t width_bytes() const { return (m_width + 7) / 8; }
  const std::string& name() const { return m_name; }

  void operator()(std::span<std::uint8_t> state) const;
  BitString operator()(const BitString& state) const;

 private:
  std::size_t m_width;
  Function m_fn;
  std::string m_name;
};

Permutation keccak_p_permutation(const PermutationSpec& spec);
Permutation keccak_f_permutation(std::size_t width_bits);

}  // namespace pbc
