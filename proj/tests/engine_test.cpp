#include <doctest.h>

#include <set>

#include "pbc/engine.hpp"
#include "phase_model.hpp"
#include "support.hpp"

using namespace pbc;

namespace {

const Permutation& lake_f() {
  static const Permutation f = keccak_p_permutation(PermutationSpec(1600, 12));
  return f;
}

Engine lake_engine(std::size_t pi) { return Engine(lake_f(), pi, 168, 192); }

Bytes state_of(const Engine& e, std::size_t i) { return Bytes(e.piston(i).state().begin(), e.piston(i).state().end()); }

}  // namespace

TEST_SUITE("engine") {
  TEST_CASE("spark sets tag usage") {
    Engine e = lake_engine(2);
    const Bytes before = state_of(e, 0);
    e.spark(false, {0, 0});
    CHECK(state_of(e, 0) != before);
    CHECK(e.tag_usage() == std::vector<std::size_t>{0, 0});
    e.spark(true, {16, 3});
    CHECK(e.tag_usage() == std::vector<std::size_t>{16, 3});
    CHECK_THROWS(e.spark(false, {0}));
    CHECK_THROWS(e.spark(false, {0, 169}));

    Engine single = lake_engine(1);
    Piston reference = single.piston(0);
    single.spark(true, {16});
    reference.spark(true, 16);
    CHECK(state_of(single, 0) == Bytes(reference.state().begin(), reference.state().end()));
  }

  TEST_CASE("crypt fragment arithmetic") {
    Engine e = lake_engine(2);
    ByteStream empty;
    ByteStream out;
    e.crypt(empty, out, false);
    CHECK(e.phase() == EnginePhase::kEndOfCrypt);

    Engine full = lake_engine(2);
    ByteStream in(test::random_bytes(2 * 168));
    full.crypt(in, out, false);
    CHECK(full.phase() == EnginePhase::kEndOfCrypt);
    CHECK(out.size() == 2 * 168);

    Engine over = lake_engine(2);
    ByteStream in2(test::random_bytes(2 * 168 + 1));
    ByteStream out2;
    over.crypt(in2, out2, false);
    CHECK(over.phase() == EnginePhase::kCrypted);
    CHECK(in2.remaining() == 1);
  }

  TEST_CASE("fragment conservation with tag usage") {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t pi = test::random_size(1, 4);
      Engine e = lake_engine(pi);
      std::vector<std::size_t> used(pi);
      std::size_t room = 0;
      for (auto& u : used) {
        u = test::random_size(0, 168);
        room += 168 - u;
      }
      e.spark(false, used);
      const std::size_t n = test::random_size(0, pi * 168);
      ByteStream in(test::random_bytes(n));
      ByteStream out;
      e.crypt(in, out, false);
      CHECK(in.position() == std::min(n, room));
      CHECK(out.size() == std::min(n, room));
    }
  }

  TEST_CASE("keystream starts after tag bytes") {
    Engine e = lake_engine(1);
    e.spark(false, {16});
    const Bytes state = state_of(e, 0);
    ByteStream in(Bytes(10, 0));
    ByteStream out;
    e.crypt(in, out, false);
    CHECK(out.contents() == Bytes(state.begin() + 16, state.begin() + 26));
  }

  TEST_CASE("inject phases") {
    {
      Engine e = lake_engine(1);
      ByteStream a;
      e.inject(a);
      CHECK(e.phase() == EnginePhase::kEndOfMessage);
      CHECK_THROWS_AS(e.inject(a), PhaseError);
    }
    {
      Engine e = lake_engine(1);
      ByteStream i;
      ByteStream o;
      ByteStream a;
      e.crypt(i, o, false);
      e.inject(a);
      CHECK(e.phase() == EnginePhase::kEndOfMessage);
    }
    {
      Engine e = lake_engine(1);
      ByteStream i(test::random_bytes(169));
      ByteStream o;
      ByteStream a;
      e.crypt(i, o, false);
      REQUIRE(e.phase() == EnginePhase::kCrypted);
      const Bytes before = state_of(e, 0);
      e.inject(a);
      CHECK(e.phase() == EnginePhase::kFresh);
      CHECK(state_of(e, 0) != before);
    }
  }

  TEST_CASE("inject capacity") {
    for (std::size_t pi : {1, 2, 4}) {
      Engine fresh = lake_engine(pi);
      ByteStream a(test::random_bytes(1000));
      fresh.inject(a);
      CHECK(a.position() == pi * 192);

      Engine crypting = lake_engine(pi);
      ByteStream i;
      ByteStream o;
      crypting.crypt(i, o, false);
      ByteStream b(test::random_bytes(1000));
      crypting.inject(b);
      CHECK(b.position() == pi * (192 - 168));
      CHECK(crypting.phase() == EnginePhase::kFresh);
    }
  }

  TEST_CASE("get_tags") {
    Engine e = lake_engine(2);
    ByteStream a;
    ByteStream t;
    CHECK_THROWS_AS(e.get_tags(t, {0, 0}), PhaseError);
    e.inject(a);
    e.get_tags(t, {0, 0});
    CHECK(t.size() == 0);
    CHECK(e.phase() == EnginePhase::kFresh);

    Engine f = lake_engine(2);
    f.inject(a);
    Piston p0 = f.piston(0);
    p0.spark(true, 16);
    f.get_tags(t, {16, 0});
    CHECK(t.size() == 16);
    CHECK(t.contents() == Bytes(p0.state().begin(), p0.state().begin() + 16));
  }

  TEST_CASE("inject_collective") {
    {
      Engine e = lake_engine(2);
      ByteStream x;
      e.inject_collective(x, false);
      CHECK(e.phase() == EnginePhase::kEndOfMessage);
      CHECK(state_of(e, 0) == Bytes(200, 0));
      CHECK_THROWS_AS(e.inject_collective(x, false), PhaseError);
    }
    {
      Engine e = lake_engine(2);
      ByteStream x;
      e.inject_collective(x, true);
      const Bytes s0 = state_of(e, 0);
      const Bytes s1 = state_of(e, 1);
      CHECK(s0[0] == 0x02);
      CHECK(s0[1] == 0x00);
      CHECK(s1[0] == 0x02);
      CHECK(s1[1] == 0x01);
      CHECK(s0[194] == 0);
      CHECK(s0[195] == 2);
    }
    {
      // R_a + 1 bytes: two blocks, one intermediate spark.
      const Bytes data = test::random_bytes(193);
      Engine e = lake_engine(1);
      ByteStream x(data);
      e.inject_collective(x, false);
      Piston p(lake_f(), 168, 192);
      ByteStream y(data);
      p.inject(y, false);
      p.spark(false, 0);
      p.inject(y, false);
      CHECK(state_of(e, 0) == Bytes(p.state().begin(), p.state().end()));
    }
  }

  TEST_CASE("diversification gives distinct pistons") {
    for (int trial = 0; trial < 1000; ++trial) {
      Engine e = lake_engine(4);
      ByteStream x(test::random_bytes(test::random_size(0, 400)));
      e.inject_collective(x, true);
      std::set<Bytes> states;
      for (std::size_t i = 0; i < 4; ++i) states.insert(state_of(e, i));
      CHECK(states.size() == 4);
    }
  }

  TEST_CASE("parallel sparks match sequential") {
    for (int trial = 0; trial < 20; ++trial) {
      Engine a = lake_engine(4);
      Engine b = lake_engine(4);
      b.set_parallel(true);
      const Bytes data = test::random_bytes(test::random_size(0, 900));
      ByteStream xa(data);
      ByteStream xb(data);
      a.inject_collective(xa, true);
      b.inject_collective(xb, true);
      ByteStream ta;
      ByteStream tb;
      a.get_tags(ta, {16, 16, 16, 16});
      b.get_tags(tb, {16, 16, 16, 16});
      CHECK(ta.contents() == tb.contents());
    }
  }

  TEST_CASE("phase errors leave the engine untouched") {
    Engine e = lake_engine(2);
    ByteStream a;
    e.inject(a);
    const Bytes before = state_of(e, 0);
    ByteStream in(Bytes{1, 2, 3});
    ByteStream out;
    CHECK_THROWS_AS(e.crypt(in, out, false), PhaseError);
    CHECK(in.position() == 0);
    CHECK(out.size() == 0);
    CHECK(state_of(e, 0) == before);
    CHECK(e.phase() == EnginePhase::kEndOfMessage);
  }

  TEST_CASE("model-based phase fuzz") {
    const auto report = test::fuzz_engine(1, 1000);
    INFO(report.first_violation);
    CHECK(report.violations == 0);
    CHECK(report.rejected > 0);
  }
}
