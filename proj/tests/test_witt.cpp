#include <doctest.h>

#include <random>

#include "wittforge/errors.hpp"
#include "wittforge/witt.hpp"

using namespace wittforge;

namespace {
WittVector wv(const char* e, const char* r, const std::vector<std::string>& c) {
  return witt_parse(IndexSet::parse(e), Ring::parse(r), c);
}
}  // namespace

TEST_CASE("one plus one") {
  const auto one = wv("div:2", "integers", {"1", "0"});
  CHECK(witt_add(one, one) == wv("div:2", "integers", {"2", "-1"}));
  CHECK(witt_add(one, one, WittStrategy::polynomial) == wv("div:2", "integers", {"2", "-1"}));
  CHECK(witt_add(one, one, WittStrategy::ghost) == wv("div:2", "integers", {"2", "-1"}));
}

TEST_CASE("W_2(F_2) is Z/4") {
  const IndexSet e = IndexSet::p_typical(2, 2);
  const Ring f2 = Ring::zmod(2);
  CHECK(witt_from_integer(e, f2, 2) == witt_parse(e, f2, {"0", "1"}));
  CHECK(witt_from_integer(e, f2, 3) == witt_parse(e, f2, {"1", "1"}));
  CHECK(witt_from_integer(e, f2, 4).is_zero());
  CHECK(witt_enumerate(e, f2).size() == 4);
}

TEST_CASE("ghost is a ring map over Z") {
  std::mt19937_64 rng(3);
  const IndexSet e = IndexSet::divisors_of(6);
  const Ring z = Ring::integers();
  for (int k = 0; k < 30; ++k) {
    const auto a = witt_random(e, z, rng), b = witt_random(e, z, rng);
    const auto ga = ghost(a), gb = ghost(b), gs = ghost(witt_add(a, b)), gp = ghost(witt_mul(a, b));
    for (std::size_t i = 0; i < e.size(); ++i) {
      CHECK(gs[i] == ga[i] + gb[i]);
      CHECK(gp[i] == ga[i] * gb[i]);
    }
    CHECK(unghost(ga, e, z) == a);
  }
}

TEST_CASE("frobenius and verschiebung") {
  std::mt19937_64 rng(5);
  const IndexSet e = IndexSet::divisors_of(12);
  const Ring z = Ring::integers();
  for (int k = 0; k < 20; ++k) {
    const auto a = witt_random(e.quotient_by(2), z, rng);
    // F_2 V_2 = 2
    CHECK(frobenius(2, verschiebung(2, a, e)) == witt_scale(a, 2));
    const auto x = witt_random(e, z, rng);
    // V_2(F_2(x)) = V_2(1) x
    CHECK(verschiebung(2, frobenius(2, x), e) == witt_mul(verschiebung(2, witt_one(e.quotient_by(2), z), e), x));
  }
  // F_3 V_2 = V_2 F_3 on coprime indices
  const auto y = witt_random(IndexSet::divisors_of(6), z, rng);
  const IndexSet e6 = IndexSet::divisors_of(6);
  CHECK(frobenius(3, verschiebung(2, witt_restrict(y, IndexSet::divisors_of(3)), e6)) ==
        verschiebung(2, frobenius(3, witt_restrict(y, IndexSet::divisors_of(3))), IndexSet::divisors_of(2)));
}

TEST_CASE("teichmuller is multiplicative") {
  const Ring r = Ring::parse("poly(integers; a, b)");
  const IndexSet e = IndexSet::divisors_of(4);
  const auto a = r.variable("a"), b = r.variable("b");
  CHECK(witt_mul(teichmuller(a, e), teichmuller(b, e)) == teichmuller(a * b, e));
  const auto g = ghost(teichmuller(a, e));
  CHECK(g[2] == pow(a, 4));
}

TEST_CASE("dwork congruences") {
  const IndexSet e = IndexSet::divisors_of(4);
  CHECK(dwork_check({1, 1, 1}, e));
  CHECK(dwork_check({3, 9, 81}, e));
  CHECK_FALSE(dwork_check({1, 2, 1}, e));
}

TEST_CASE("mismatched operands") {
  const auto a = wv("div:2", "integers", {"1", "0"});
  const auto b = wv("div:3", "integers", {"1", "0"});
  const auto c = wv("div:2", "zmod:4", {"1", "0"});
  CHECK_THROWS_AS(witt_add(a, b), RingMismatch);
  CHECK_THROWS_AS(witt_add(a, c), RingMismatch);
  CHECK_THROWS(witt_parse(IndexSet::divisors_of(2), Ring::integers(), {"1"}));
  CHECK_THROWS_AS(witt_add(wv("div:2", "zmod:4", {"1", "0"}), wv("div:2", "zmod:4", {"1", "0"}), WittStrategy::ghost),
                  Error);
}
