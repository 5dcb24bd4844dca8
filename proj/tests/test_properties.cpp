#include <doctest.h>

#include <random>

#include "wittforge/witt.hpp"

using namespace wittforge;

// Hand-rolled generators: a random finite or torsion-free base ring, an index
// set and Witt vectors over it. Each case carries its seed for replay.
namespace {

struct Case {
  std::uint64_t seed;
  Ring ring;
  IndexSet e;
};

Case gen_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  static const std::vector<std::string> rings{"integers", "zmod:8", "zmod:9", "zmod:6", "quot(poly(zmod:4; t); t^2)",
                                              "poly(integers; t)", "quot(poly(integers; t); t^2 - 2)"};
  static const std::vector<std::string> sets{"div:2", "div:4", "div:6", "ptyp:3:2", "set:1,3,9", "div:1"};
  return {seed, Ring::parse(rings[rng() % rings.size()]), IndexSet::parse(sets[rng() % sets.size()])};
}

}  // namespace

TEST_CASE("W_E(R) is a commutative ring") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Case c = gen_case(seed);
    std::mt19937_64 rng(seed * 7919);
    const auto a = witt_random(c.e, c.ring, rng, 3), b = witt_random(c.e, c.ring, rng, 3),
               d = witt_random(c.e, c.ring, rng, 3);
    CAPTURE(seed);
    CAPTURE(c.ring.descriptor());
    CAPTURE(c.e.key());
    CHECK(witt_add(a, b) == witt_add(b, a));
    CHECK(witt_mul(a, b) == witt_mul(b, a));
    CHECK(witt_add(witt_add(a, b), d) == witt_add(a, witt_add(b, d)));
    CHECK(witt_mul(witt_mul(a, b), d) == witt_mul(a, witt_mul(b, d)));
    CHECK(witt_mul(a, witt_add(b, d)) == witt_add(witt_mul(a, b), witt_mul(a, d)));
    CHECK(witt_add(a, witt_neg(a)).is_zero());
    CHECK(witt_mul(a, witt_one(c.e, c.ring)) == a);
    CHECK(witt_sub(witt_add(a, b), b) == a);
  }
}

TEST_CASE("strategies agree where both apply") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    std::mt19937_64 rng(seed);
    const Ring q = Ring::rationals();
    const IndexSet e = IndexSet::divisors_of(1 + rng() % 12);
    const auto a = witt_random(e, q, rng), b = witt_random(e, q, rng);
    CAPTURE(seed);
    CHECK(witt_add(a, b, WittStrategy::ghost) == witt_add(a, b, WittStrategy::polynomial));
    CHECK(witt_mul(a, b, WittStrategy::ghost) == witt_mul(a, b, WittStrategy::polynomial));
  }
}

TEST_CASE("change of ring is a ring map") {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    std::mt19937_64 rng(seed);
    const IndexSet e = IndexSet::divisors_of(1 + rng() % 6);
    const Ring z = Ring::integers(), z8 = Ring::zmod(8);
    const auto a = witt_random(e, z, rng), b = witt_random(e, z, rng);
    CAPTURE(seed);
    CHECK(witt_change_ring(witt_mul(a, b), z8) == witt_mul(witt_change_ring(a, z8), witt_change_ring(b, z8)));
    CHECK(witt_change_ring(witt_add(a, b), z8) == witt_add(witt_change_ring(a, z8), witt_change_ring(b, z8)));
  }
}

TEST_CASE("restriction is a ring map") {
  for (std::uint64_t seed = 300; seed < 330; ++seed) {
    std::mt19937_64 rng(seed);
    const IndexSet e = IndexSet::divisors_of(12), sub = IndexSet::divisors_of(4);
    const Ring z9 = Ring::zmod(9);
    const auto a = witt_random(e, z9, rng), b = witt_random(e, z9, rng);
    CAPTURE(seed);
    CHECK(witt_restrict(witt_mul(a, b), sub) == witt_mul(witt_restrict(a, sub), witt_restrict(b, sub)));
  }
}
