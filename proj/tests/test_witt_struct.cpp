#include <doctest.h>

#include <chrono>

#include "wittforge/errors.hpp"
#include "wittforge/witt_struct.hpp"

using namespace wittforge;

namespace {
const IndexSet kP2 = IndexSet::p_typical(2, 2);
}

TEST_CASE("W[F] over F_2 and Z/4") {
  const Ring f2 = Ring::zmod(2);
  std::size_t n = 0;
  for (const auto& a : witt_enumerate(kP2, f2)) n += is_in_wf(a);
  CHECK(n == 2);
  const Ring z4 = Ring::zmod(4);
  CHECK(is_in_wf(witt_parse(kP2, z4, {"2", "0"})));
  CHECK_FALSE(is_in_wf(witt_parse(kP2, z4, {"1", "0"})));
  CHECK(wf_annihilator_check(witt_parse(kP2, f2, {"0", "1"}), AnnihilatorDirection::kills_vw));
  CHECK_FALSE(wf_annihilator_check(witt_parse(kP2, f2, {"1", "0"}), AnnihilatorDirection::kills_vw));
}

TEST_CASE("units of W") {
  const Ring z4 = Ring::zmod(4);
  std::size_t n = 0;
  for (const auto& a : witt_enumerate(kP2, z4)) {
    const auto inv = witt_is_unit(a);
    if (inv) {
      ++n;
      CHECK(witt_mul(a, *inv) == witt_one(kP2, z4));
    }
  }
  // a unit iff a_1 is a unit of Z/4
  CHECK(n == 8);
  const Ring z = Ring::integers();
  CHECK_FALSE(witt_is_unit(witt_from_integer(IndexSet::divisors_of(2), z, 3)));
  CHECK(witt_is_unit(witt_from_integer(IndexSet::divisors_of(2), z, -1)));
}

TEST_CASE("Hodge-Tate over Z/4 and Z/9") {
  const Ring z4 = Ring::zmod(4);
  const auto ctx = PredicateContext::local(2, z4, kP2);
  std::vector<std::string> ht;
  for (const auto& a : witt_enumerate(kP2, z4))
    if (is_hodge_tate(a, ctx)) ht.push_back(a.at(1).to_string() + "," + a.at(2).to_string());
  CHECK(ht == std::vector<std::string>{"0,1", "0,3"});

  const Ring z9 = Ring::zmod(9);
  const IndexSet p3 = IndexSet::p_typical(3, 2);
  const auto c9 = PredicateContext::local(3, z9, p3);
  std::size_t n = 0;
  for (const auto& a : witt_enumerate(p3, z9)) n += is_hodge_tate(a, c9);
  CHECK(n == 6);
}

TEST_CASE("distinguished counts") {
  const Ring z4 = Ring::zmod(4);
  const auto ctx = PredicateContext::local(2, z4, kP2);
  std::size_t n = 0;
  for (const auto& a : witt_enumerate(kP2, z4)) n += is_distinguished(a, ctx).has_value();
  CHECK(n == 4);
  const Ring z9 = Ring::zmod(9);
  const IndexSet p3 = IndexSet::p_typical(3, 2);
  const auto c9 = PredicateContext::local(3, z9, p3);
  n = 0;
  for (const auto& a : witt_enumerate(p3, z9)) n += is_distinguished(a, c9).has_value();
  CHECK(n == 18);
  const auto w = is_distinguished(witt_from_integer(kP2, z4, 2), ctx);
  REQUIRE(w);
  CHECK(witt_add(teichmuller(w->x, kP2), w->v) == witt_from_integer(kP2, z4, 2));
}

TEST_CASE("predicate contexts") {
  const Ring z = Ring::integers();
  CHECK_THROWS_AS(PredicateContext::local(2, z, IndexSet::divisors_of(6)), PreconditionError);
  const Ring q = Ring::rationals();
  const auto ctx = PredicateContext::automatic(q, IndexSet::divisors_of(6));
  CHECK(ctx.kind == PredicateContext::Kind::rational);
  CHECK(ctx.verify());
  CHECK(ctx.inverse_of(6) == q.from_rational(Rational(1, 6)));
  const auto z9 = PredicateContext::automatic(Ring::zmod(9), IndexSet::divisors_of(6));
  CHECK(z9.kind == PredicateContext::Kind::local);
  CHECK(z9.p == 3);
}

TEST_CASE("local decomposition over Q") {
  const Ring q = Ring::rationals();
  const IndexSet e = IndexSet::divisors_of(6);
  const auto ctx = PredicateContext::local(3, q, e);
  const auto one = local_decompose(witt_one(e, q), ctx);
  CHECK(one.labels == std::vector<std::uint64_t>{1, 2});
  CHECK(one == decomposed_one(ctx));
  const auto a = witt_parse(e, q, {"1/2", "3", "-1", "2/5"});
  CHECK(local_recompose(local_decompose(a, ctx), ctx) == a);
}

TEST_CASE("non-freeness search") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = v_nonfree_obstruction(IndexSet::divisors_of(10));
  CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 1.0);
  CHECK_FALSE(c.satisfiable);
  CHECK(*c.n == 10);
  CHECK(*c.m == 2);
  CHECK(*c.p == 5);
  CHECK(c.profiles_checked == 8);
  const auto two = v_nonfree_obstruction(IndexSet::divisors_of(2));
  CHECK(two.satisfiable);
  CHECK(two.ghost_values == std::vector<Integer>{0, 2});
  CHECK(two.coords == std::vector<Integer>{0, 1});
}
