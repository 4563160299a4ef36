#include "pbc/engine.hpp"

#include <future>

namespace pbc {

std::string to_string(EnginePhase phase) {
  switch (phase) {
    case EnginePhase::kFresh:
      return "fresh";
    case EnginePhase::kCrypted:
      return "crypted";
    case EnginePhase::kEndOfCrypt:
      return "endOfCrypt";
    case EnginePhase::kEndOfMessage:
      return "endOfMessage";
  }
  return "unknown";
}

Engine::Engine(const Permutation& f, std::size_t parallelism, std::size_t squeeze_rate, std::size_t absorb_rate) {
  if (parallelism == 0 || parallelism > 255) {
    throw std::invalid_argument("Engine: parallelism must be in 1..255");
  }
  m_pistons.reserve(parallelism);
  for (std::size_t i = 0; i < parallelism; ++i) {
    m_pistons.emplace_back(f, squeeze_rate, absorb_rate);
  }
  m_tag_usage.assign(parallelism, 0);
}

void Engine::require(bool condition, const char* operation) const {
  if (!condition) {
    throw PhaseError(std::string("Engine::") + operation + " not allowed in phase " + to_string(m_phase));
  }
}

void Engine::check_lengths(const std::vector<std::size_t>& tag_lengths) const {
  if (tag_lengths.size() != m_pistons.size()) {
    throw std::invalid_argument("Engine: tag length vector must have one entry per piston");
  }
  for (std::size_t l : tag_lengths) {
    if (l > m_pistons.front().squeeze_rate()) {
      throw std::invalid_argument("Engine: tag length exceeds squeeze rate");
    }
  }
}

void Engine::spark(bool end_of_message, const std::vector<std::size_t>& tag_lengths) {
  check_lengths(tag_lengths);
  if (m_parallel && m_pistons.size() > 1) {
    std::vector<std::future<void>> jobs;
    jobs.reserve(m_pistons.size());
    for (std::size_t i = 0; i < m_pistons.size(); ++i) {
      jobs.push_back(std::async(std::launch::async, [this, i, end_of_message, &tag_lengths] {
        m_pistons[i].spark(end_of_message, static_cast<std::uint8_t>(tag_lengths[i]));
      }));
    }
    for (auto& job : jobs) {
      job.get();
    }
  } else {
    for (std::size_t i = 0; i < m_pistons.size(); ++i) {
      m_pistons[i].spark(end_of_message, static_cast<std::uint8_t>(tag_lengths[i]));
    }
  }
  m_tag_usage = tag_lengths;
}

void Engine::crypt(ByteStream& in, ByteStream& out, bool unwrap) {
  require(m_phase == EnginePhase::kFresh, "crypt");
  for (std::size_t i = 0; i < m_pistons.size(); ++i) {
    m_pistons[i].crypt(in, out, m_tag_usage[i], unwrap);
  }
  m_phase = in.has_more() ? EnginePhase::kCrypted : EnginePhase::kEndOfCrypt;
}

void Engine::inject(ByteStream& metadata) {
  require(m_phase != EnginePhase::kEndOfMessage, "inject");
  const bool crypting = m_phase == EnginePhase::kCrypted || m_phase == EnginePhase::kEndOfCrypt;
  for (auto& piston : m_pistons) {
    piston.inject(metadata, crypting);
  }
  if (m_phase == EnginePhase::kCrypted || metadata.has_more()) {
    spark(false, std::vector<std::size_t>(m_pistons.size(), 0));
    m_phase = EnginePhase::kFresh;
  } else {
    m_phase = EnginePhase::kEndOfMessage;
  }
}

void Engine::get_tags(ByteStream& out, const std::vector<std::size_t>& tag_lengths) {
  require(m_phase == EnginePhase::kEndOfMessage, "get_tags");
  check_lengths(tag_lengths);
  spark(true, tag_lengths);
  for (std::size_t i = 0; i < m_pistons.size(); ++i) {
    m_pistons[i].get_tag(out, tag_lengths[i]);
  }
  m_phase = EnginePhase::kFresh;
}

void Engine::inject_collective(ByteStream& data, bool diversify) {
  require(m_phase == EnginePhase::kFresh, "inject_collective");
  const std::size_t count = m_pistons.size();
  std::vector<ByteStream> copies(count);
  while (data.has_more()) {
    const std::uint8_t x = data.get();
    for (auto& copy : copies) {
      copy.put(x);
    }
  }
  if (diversify) {
    for (std::size_t i = 0; i < count; ++i) {
      copies[i].put(static_cast<std::uint8_t>(count));
      copies[i].put(static_cast<std::uint8_t>(i));
    }
  }
  for (auto& copy : copies) {
    copy.seek(0);
  }
  while (copies[0].has_more()) {
    for (std::size_t i = 0; i < count; ++i) {
      m_pistons[i].inject(copies[i], false);
    }
    if (copies[0].has_more()) {
      spark(false, std::vector<std::size_t>(count, 0));
    }
  }
  m_phase = EnginePhase::kEndOfMessage;
}

}  // namespace pbc
