#pragma once

#include <cstddef>
#include <string>

#include "pbc/byte_stream.hpp"
#include "pbc/engine.hpp"
#include "pbc/keccak_p.hpp"

namespace pbc {

/// Squeeze rate, absorb rate (bytes) and chaining value length (bits).
struct MotoristRates {
  std::size_t squeeze_rate;
  std::size_t absorb_rate;
  std::size_t chaining_bits;

  friend bool operator==(const MotoristRates&, const MotoristRates&) = default;
};

/// R_s: largest multiple of W leaving max(c, 32) bits never used as output.
/// R_a: largest multiple of W leaving 32 bits for the fragment offsets.
/// c':  smallest multiple of W that is >= c.
/// Throws std::invalid_argument when no usable rates exist.
MotoristRates derive_rates(std::size_t width_bits, std::size_t alignment_bits, std::size_t capacity_bits);

struct MotoristParams {
  PermutationSpec permutation;
  std::size_t parallelism;     // Pi
  std::size_t alignment_bits;  // W
  std::size_t capacity_bits;   // c
  std::size_t tag_bits;        // tau

  MotoristRates rates() const { return derive_rates(permutation.width, alignment_bits, capacity_bits); }
};

enum class MotoristPhase { kReady, kRiding, kFailed };

std::string to_string(MotoristPhase phase);

/// Session layer over an Engine.
///
/// tag and forget flags are protocol parameters: both parties must pass the
/// same values for every call or tags will not verify. A failed verification
/// moves the session to kFailed permanently.
class Motorist {
 public:
  explicit Motorist(const MotoristParams& params);

  /// Injects the SUV with diversification, optionally knots, then produces
  /// (wrap side) or checks (unwrap side) a start tag when `tag` is set.
  bool start_engine(ByteStream& suv, bool tag, ByteStream& tag_stream, bool unwrap, bool forget);

  /// Wraps plaintext `in` with metadata `metadata` into `out`, appending the
  /// tag to `tag_stream`; or, with `unwrap`, decrypts and checks the next tau/8
  /// bytes of `tag_stream`. On a bad tag `out` is erased and false returned.
  bool wrap(ByteStream& in, ByteStream& out, ByteStream& metadata, ByteStream& tag_stream, bool unwrap, bool forget);

  MotoristPhase phase() const { return m_phase; }
  const MotoristParams& params() const { return m_params; }
  const MotoristRates& rates() const { return m_rates; }
  const Engine& engine() const { return m_engine; }
  Engine& engine() { return m_engine; }

 private:
  void make_knot();
  bool handle_tag(bool tag, ByteStream& tag_stream, bool unwrap);

  MotoristParams m_params;
  MotoristRates m_rates;
  Engine m_engine;
  MotoristPhase m_phase = MotoristPhase::kReady;
};

/// Constant-time equality over equal-length byte strings.
bool constant_time_equal(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

}  // namespace pbc
