#include <doctest.h>

#include <random>

#include "wittforge/errors.hpp"
#include "wittforge/universal.hpp"

using namespace wittforge;

namespace {

// Independent ghost arithmetic over Z with plain loops.
std::vector<Integer> ghost_of(const std::vector<std::uint64_t>& e, const std::vector<Integer>& a) {
  std::vector<Integer> g(e.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[i] % e[j] == 0) {
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), a[j].get_mpz_t(), e[i] / e[j]);
        g[i] += Integer(static_cast<unsigned long>(e[j])) * t;
      }
  return g;
}

std::vector<Integer> unghost_of(const std::vector<std::uint64_t>& e, const std::vector<Integer>& g) {
  std::vector<Integer> a(e.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    Integer rest = g[i];
    for (std::size_t j = 0; j < i; ++j)
      if (e[i] % e[j] == 0) {
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), a[j].get_mpz_t(), e[i] / e[j]);
        rest -= Integer(static_cast<unsigned long>(e[j])) * t;
      }
    REQUIRE(rest % Integer(static_cast<unsigned long>(e[i])) == 0);
    a[i] = rest / Integer(static_cast<unsigned long>(e[i]));
  }
  return a;
}

IntPoly poly(std::size_t n, const std::vector<std::pair<std::vector<int>, Integer>>& t) { return IntPoly::from_terms(n, t); }

}  // namespace

TEST_CASE("small families by hand") {
  const auto e12 = IndexSet::divisors_of(2);
  CHECK(generate_universal(e12, UniversalOp::sum).at(2) == poly(4, {{{0, 1, 0, 0}, 1}, {{0, 0, 0, 1}, 1}, {{1, 0, 1, 0}, -1}}));
  CHECK(generate_universal(e12, UniversalOp::negation).at(2) == poly(2, {{{2, 0}, -1}, {{0, 1}, -1}}));
  const auto fr = generate_universal(e12, UniversalOp::frobenius, 2);
  CHECK(fr.target == IndexSet::divisors_of(1));
  CHECK(fr.at(1) == poly(2, {{{2, 0}, 1}, {{0, 1}, 2}}));

  const auto e13 = IndexSet::divisors_of(3);
  CHECK(generate_universal(e13, UniversalOp::sum).at(3) ==
        poly(4, {{{0, 1, 0, 0}, 1}, {{0, 0, 0, 1}, 1}, {{2, 0, 1, 0}, -1}, {{1, 0, 2, 0}, -1}}));
  CHECK(generate_universal(e13, UniversalOp::product).at(3) ==
        poly(4, {{{3, 0, 0, 1}, 1}, {{0, 1, 3, 0}, 1}, {{0, 1, 0, 1}, 3}}));
}

TEST_CASE("universal polynomials match plain ghost arithmetic") {
  std::mt19937_64 rng(11);
  for (const char* desc : {"div:4", "div:6", "div:12", "ptyp:3:3", "div:10"}) {
    const IndexSet e = IndexSet::parse(desc);
    const auto& el = e.elements();
    const auto sum = universal_family(e, UniversalOp::sum);
    const auto prod = universal_family(e, UniversalOp::product);
    const auto neg = universal_family(e, UniversalOp::negation);
    for (int k = 0; k < 20; ++k) {
      std::vector<Integer> a, b;
      for (std::size_t i = 0; i < el.size(); ++i) a.push_back(static_cast<long>(rng() % 11) - 5);
      for (std::size_t i = 0; i < el.size(); ++i) b.push_back(static_cast<long>(rng() % 11) - 5);
      const auto ga = ghost_of(el, a), gb = ghost_of(el, b);
      std::vector<Integer> gs, gp, gn;
      for (std::size_t i = 0; i < el.size(); ++i) {
        gs.push_back(ga[i] + gb[i]);
        gp.push_back(ga[i] * gb[i]);
        gn.push_back(-ga[i]);
      }
      const auto s = unghost_of(el, gs), p = unghost_of(el, gp), n = unghost_of(el, gn);
      std::vector<Integer> ab = a;
      ab.insert(ab.end(), b.begin(), b.end());
      for (std::size_t i = 0; i < el.size(); ++i) {
        CHECK(sum->polys[i].eval_integer(ab) == s[i]);
        CHECK(prod->polys[i].eval_integer(ab) == p[i]);
        CHECK(neg->polys[i].eval_integer(a) == n[i]);
      }
    }
  }
}

TEST_CASE("ghost polynomial") {
  const auto e = IndexSet::divisors_of(4);
  // g_4 = x1^4 + 2 x2^2 + 4 x4
  CHECK(ghost_polynomial(e, 4, 3, 0) == poly(3, {{{4, 0, 0}, 1}, {{0, 2, 0}, 2}, {{0, 0, 1}, 4}}));
}

TEST_CASE("cache is write once") {
  const auto e = IndexSet::divisors_of(6);
  const auto a = universal_family(e, UniversalOp::sum);
  const auto b = universal_family(e, UniversalOp::sum);
  CHECK(a.get() == b.get());
  CHECK(universal_key(e, UniversalOp::frobenius, 2) == "E=1,2,3,6;op=frobenius:2");
}

TEST_CASE("index sets") {
  CHECK(IndexSet::divisors_of(12).key() == "1,2,3,4,6,12");
  CHECK(IndexSet::p_typical(2, 3).key() == "1,2,4");
  CHECK(IndexSet::divisors_of(12).quotient_by(2).key() == "1,2,3,6");
  CHECK(IndexSet::divisors_of(12).coprime_to(2).key() == "1,3");
  CHECK(IndexSet::divisors_of(12).powers_of(2).key() == "1,2,4");
  CHECK(IndexSet::divisors_of(12).primes() == std::vector<std::uint64_t>{2, 3});
  CHECK_THROWS_AS(IndexSet::from_list({1, 4}), ValidationError);
  CHECK_THROWS_AS(IndexSet::from_list({2, 3}), ValidationError);
  CHECK_THROWS_AS(IndexSet::from_list({1, 2, 3}), ValidationError);  // 6 missing
  CHECK_THROWS_AS(IndexSet::parse("div:"), ParseError);
}
