#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbc/byte_stream.hpp"
#include "pbc/piston.hpp"

namespace pbc {

/// Raised when an Engine or Motorist operation is called in the wrong phase.
/// The object is left unchanged.
class PhaseError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class EnginePhase { kFresh, kCrypted, kEndOfCrypt, kEndOfMessage };

std::string to_string(EnginePhase phase);

/// Drives Pi pistons in lockstep. Streams are sliced into consecutive
/// fragments, piston 0 first; only the permutation calls may run concurrently.
class Engine {
 public:
  Engine(const Permutation& f, std::size_t parallelism, std::size_t squeeze_rate, std::size_t absorb_rate);

  /// Runs the per-piston permutations of a spark on separate threads.
  void set_parallel(bool parallel) { m_parallel = parallel; }
  bool parallel() const { return m_parallel; }

  void spark(bool end_of_message, const std::vector<std::size_t>& tag_lengths);
  void crypt(ByteStream& in, ByteStream& out, bool unwrap);
  void inject(ByteStream& metadata);
  void get_tags(ByteStream& out, const std::vector<std::size_t>& tag_lengths);
  void inject_collective(ByteStream& data, bool diversify);

  EnginePhase phase() const { return m_phase; }
  std::size_t parallelism() const { return m_pistons.size(); }
  const std::vector<std::size_t>& tag_usage() const { return m_tag_usage; }
  const Piston& piston(std::size_t i) const { return m_pistons.at(i); }
  Piston& piston(std::size_t i) { return m_pistons.at(i); }

 private:
  void require(bool condition, const char* operation) const;
  void check_lengths(const std::vector<std::size_t>& tag_lengths) const;

  std::vector<Piston> m_pistons;
  std::vector<std::size_t> m_tag_usage;
  EnginePhase m_phase = EnginePhase::kFresh;
  bool m_parallel = false;
};

}  // namespace pbc
