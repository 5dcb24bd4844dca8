#include "wittforge/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>

#include "wittforge/cone.hpp"
#include "wittforge/derham.hpp"
#include "wittforge/errors.hpp"
#include "wittforge/filtration.hpp"
#include "wittforge/prismatic.hpp"
#include "wittforge/universal.hpp"
#include "wittforge/witt_struct.hpp"

namespace wittforge {

namespace {

using linalg::Matrix;
using Rng = std::mt19937_64;

class Checker {
 public:
  explicit Checker(SuiteReport& r) : r_(r) {}

  bool check(bool ok, const std::string& what, Json counterexample = Json::object()) {
    ++r_.cases;
    if (!ok) r_.failures.push_back({what, std::move(counterexample)});
    return ok;
  }

  // Runs f, turning an escaped exception into a failure.
  template <class F>
  void guard(const std::string& what, F f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(false, what, Json{{"exception", e.what()}});
    }
  }

  // Expects f to throw E.
  template <class E, class F>
  void expect_throw(const std::string& what, F f) {
    try {
      f();
    } catch (const E&) {
      check(true, what);
      return;
    } catch (const std::exception& e) {
      check(false, what, Json{{"wrong_exception", e.what()}});
      return;
    }
    check(false, what, Json{{"error", "no exception"}});
  }

  Json& details() { return r_.details; }

 private:
  SuiteReport& r_;
};

Json wj(const WittVector& a) { return witt_to_json(a); }

bool ghost_equal(const std::vector<Element>& a, const std::vector<Element>& b) { return a == b; }

std::vector<Element> ghost_sum(const std::vector<Element>& a, const std::vector<Element>& b) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

std::vector<Element> ghost_prod(const std::vector<Element>& a, const std::vector<Element>& b) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
  return out;
}

WittVector single(const Element& r) { return WittVector(IndexSet(), r.ring(), {r}); }

// ---------------------------------------------------------------------------

void suite_witt_ring_axioms(Checker& c, Rng& rng, const SuiteBudget& b) {
  for (const char* rd : {"integers", "zmod:12", "zmod:4", "rationals"}) {
    for (const char* ed : {"div:6", "ptyp:2:3"}) {
      const Ring r = Ring::parse(rd);
      const IndexSet e = IndexSet::parse(ed);
      const auto zero = witt_zero(e, r);
      const auto one = witt_one(e, r);
      for (std::size_t i = 0; i < b.random_cases; ++i) {
        const auto x = witt_random(e, r, rng);
        const auto y = witt_random(e, r, rng);
        const auto z = witt_random(e, r, rng);
        const Json ce{{"ring", rd}, {"index_set", ed}, {"a", wj(x)}, {"b", wj(y)}, {"c", wj(z)}};
        const auto xy = witt_add(x, y);
        const auto xm = witt_mul(x, y);
        c.check(witt_add(xy, z) == witt_add(x, witt_add(y, z)), "addition associative", ce);
        c.check(xy == witt_add(y, x), "addition commutative", ce);
        c.check(witt_mul(xm, z) == witt_mul(x, witt_mul(y, z)), "multiplication associative", ce);
        c.check(xm == witt_mul(y, x), "multiplication commutative", ce);
        c.check(witt_mul(x, witt_add(y, z)) == witt_add(xm, witt_mul(x, z)), "distributive", ce);
        c.check(witt_add(x, zero) == x && witt_mul(x, one) == x, "identities", ce);
        c.check(witt_add(x, witt_neg(x)).is_zero(), "additive inverse", ce);
        c.check(witt_sub(x, y) == witt_add(x, witt_neg(y)), "subtraction", ce);
        c.check(ghost_equal(ghost(xy), ghost_sum(ghost(x), ghost(y))), "ghost additive", ce);
        c.check(ghost_equal(ghost(xm), ghost_prod(ghost(x), ghost(y))), "ghost multiplicative", ce);
        if (r.is_torsion_free()) {
          c.check(witt_add(x, y, WittStrategy::polynomial) == witt_add(x, y, WittStrategy::ghost) &&
                            witt_mul(x, y, WittStrategy::polynomial) == witt_mul(x, y, WittStrategy::ghost),
                        "polynomial and ghost strategies agree", ce);
        }
      }
      bool one_ok = true;
      for (const auto& g : ghost(one)) one_ok &= g.is_one();
      c.check(one_ok, "ghost of 1 is 1", Json{{"ring", rd}, {"index_set", ed}});
    }
  }
}

void suite_witt_operators(Checker& c, Rng& rng, const SuiteBudget& b) {
  const IndexSet e = IndexSet::divisors_of(12);
  std::vector<std::pair<IndexSet::Index, IndexSet::Index>> pairs;
  for (auto m : e.elements())
    for (auto n : e.elements())
      if (m > 1 && n > 1 && e.contains(m * n)) pairs.emplace_back(m, n);
  std::vector<IndexSet::Index> ns(e.elements().begin() + 1, e.elements().end());
  for (const char* rd : {"zmod:12", "integers"}) {
    const Ring r = Ring::parse(rd);
    for (std::size_t i = 0; i < b.operator_cases; ++i) {
      const auto x = witt_random(e, r, rng);
      const auto y = witt_random(e, r, rng);
      const auto n = ns[rng() % ns.size()];
      const Json ce{{"ring", rd}, {"n", n}, {"a", wj(x)}, {"b", wj(y)}};
      c.check(frobenius(n, witt_add(x, y)) == witt_add(frobenius(n, x), frobenius(n, y)) &&
                  frobenius(n, witt_mul(x, y)) == witt_mul(frobenius(n, x), frobenius(n, y)) &&
                  frobenius(n, witt_one(e, r)) == witt_one(e.quotient_by(n), r),
              "F_n is a ring map", ce);

      const auto [m, k] = pairs[rng() % pairs.size()];
      c.check(frobenius(m, frobenius(k, x)) == frobenius(m * k, x), "F_m F_n = F_mn",
              Json{{"ring", rd}, {"m", m}, {"n", k}, {"a", wj(x)}});
      c.check(frobenius(2, frobenius(3, x)) == frobenius(3, frobenius(2, x)), "F_2 F_3 = F_3 F_2",
              Json{{"ring", rd}, {"a", wj(x)}});

      for (IndexSet::Index p : {2, 3}) {
        const auto sub = witt_random(e.quotient_by(p), r, rng);
        c.check(frobenius(p, verschiebung(p, sub, e)) == witt_scale(sub, p), "F_p V_p = p",
                Json{{"ring", rd}, {"p", p}, {"a", wj(sub)}});
      }

      const auto xs = witt_random(e.quotient_by(n), r, rng);
      c.check(witt_mul(verschiebung(n, xs, e), y) == verschiebung(n, witt_mul(xs, frobenius(n, y)), e),
              "V_n(x) y = V_n(x F_n(y))", Json{{"ring", rd}, {"n", n}, {"x", wj(xs)}, {"y", wj(y)}});
      const auto xs2 = witt_random(e.quotient_by(n), r, rng);
      c.check(verschiebung(n, witt_add(xs, xs2), e) == witt_add(verschiebung(n, xs, e), verschiebung(n, xs2, e)),
              "V_n additive", Json{{"ring", rd}, {"n", n}, {"x", wj(xs)}, {"y", wj(xs2)}});

      const Element s = r.random(rng), t = r.random(rng);
      c.check(teichmuller(s * t, e) == witt_mul(teichmuller(s, e), teichmuller(t, e)), "Teichmuller multiplicative",
              Json{{"ring", rd}, {"r", s.to_string()}, {"s", t.to_string()}});
    }
  }
}

void suite_universal_integrality(Checker& c, Rng&, const SuiteBudget&) {
  std::vector<IndexSet> sets;
  for (IndexSet::Index n : {2, 3, 4, 6, 8, 10, 12, 16, 18, 20, 24, 30}) sets.push_back(IndexSet::divisors_of(n));
  for (IndexSet::Index p : {2, 3, 5}) sets.push_back(IndexSet::p_typical(p, 4));
  std::size_t terms = 0;
  for (const auto& e : sets) {
    std::vector<std::pair<UniversalOp, IndexSet::Index>> ops{
        {UniversalOp::sum, 1}, {UniversalOp::product, 1}, {UniversalOp::negation, 1}};
    for (auto p : e.primes()) ops.emplace_back(UniversalOp::frobenius, p);
    for (const auto& [op, k] : ops) {
      c.guard("generation " + universal_key(e, op, k), [&] {
        const auto fam = generate_universal(e, op, k);
        for (const auto& poly : fam.polys) terms += poly.size();
        c.check(true, "generation " + universal_key(e, op, k));
      });
    }
  }
  c.details()["total_terms"] = terms;

  const auto sum = generate_universal(IndexSet::divisors_of(2), UniversalOp::sum);
  const auto prod = generate_universal(IndexSet::divisors_of(2), UniversalOp::product);
  auto v = [](std::size_t i) { return IntPoly::variable(4, i); };
  // x1 x2 y1 y2
  c.check(sum.at(2) == v(1) + v(3) - v(0) * v(2), "s_2 = x2 + y2 - x1 y1",
          Json{{"got", sum.at(2).to_string(sum.var_names())}});
  c.check(prod.at(2) == v(0) * v(0) * v(3) + v(1) * v(2) * v(2) + (v(1) * v(3)).scaled(2),
          "m_2 = x1^2 y2 + x2 y1^2 + 2 x2 y2", Json{{"got", prod.at(2).to_string(prod.var_names())}});

  const IndexSet e6 = IndexSet::divisors_of(6);
  for (auto op : {UniversalOp::sum, UniversalOp::product, UniversalOp::negation}) {
    const auto fam = generate_universal(e6, op);
    const auto back = universal_from_json(universal_to_json(fam), e6, op, 1);
    c.check(back.polys == fam.polys, "JSON round trip " + to_string(op));
    c.check(universal_family(e6, op)->polys == fam.polys, "cached family matches " + to_string(op));
  }
}

void suite_annihilator(Checker& c, Rng&, const SuiteBudget& b) {
  const IndexSet e = IndexSet::p_typical(2, 2);
  for (const char* rd : {"zmod:2", "zmod:4"}) {
    const Ring r = Ring::parse(rd);
    std::size_t in_wf = 0;
    for (const auto& a : witt_enumerate(e, r, b.enum_limit)) {
      const bool wf = is_in_wf(a);
      in_wf += wf;
      c.check(wf == wf_annihilator_check(a, AnnihilatorDirection::kills_vw, b.enum_limit),
              "a in W[F] iff a VW = 0", wj(a));
      if (a.at(1).is_zero()) {
        c.check(wf_annihilator_check(a, AnnihilatorDirection::killed_by_wf, b.enum_limit), "VW W[F] = 0", wj(a));
      }
    }
    c.details()[std::string("wf_size_") + rd] = in_wf;
  }
  const Ring f2 = Ring::zmod(2);
  for (const char* cc : {"0", "1"}) c.check(is_in_wf(witt_parse(e, f2, {"0", cc})), "(0, c) in W[F] over F_2");
  const auto one = teichmuller(f2.one(), e);
  c.check(!is_in_wf(one), "[1] not in W[F]");
  c.check(!wf_annihilator_check(one, AnnihilatorDirection::kills_vw), "[1] does not kill VW");
  c.check(wf_annihilator_check(witt_zero(e, f2), AnnihilatorDirection::kills_vw) &&
              wf_annihilator_check(witt_zero(e, f2), AnnihilatorDirection::killed_by_wf),
          "0 passes both directions");
}

DecomposedWitt dmap(const DecomposedWitt& a, const DecomposedWitt& b, ArithOp op) {
  DecomposedWitt out = a;
  for (std::size_t i = 0; i < a.factors.size(); ++i) out.factors[i] = witt_arith(op, a.factors[i], b.factors[i]);
  return out;
}

DecomposedWitt random_decomposed(const PredicateContext& ctx, Rng& rng) {
  DecomposedWitt d = decomposed_zero(ctx);
  for (auto& f : d.factors) f = witt_random(f.index_set(), ctx.ring, rng);
  return d;
}

void suite_local_decomposition(Checker& c, Rng& rng, const SuiteBudget& b) {
  const IndexSet e6 = IndexSet::divisors_of(6);
  struct Setup {
    const char* ring;
    IndexSet::Index p;
  };
  for (const Setup& s : {Setup{"zmod:9", 3}, Setup{"rationals", 3}, Setup{"rationals", 2}}) {
    const Ring r = Ring::parse(s.ring);
    const auto ctx = PredicateContext::local(s.p, r, e6);
    c.check(ctx.verify(), std::string("context certificates ") + s.ring);
    c.check(local_decompose(witt_one(e6, r), ctx) == decomposed_one(ctx) &&
                local_decompose(witt_zero(e6, r), ctx) == decomposed_zero(ctx),
            std::string("0 and 1 ") + s.ring);
    for (std::size_t i = 0; i < b.random_cases; ++i) {
      const auto x = witt_random(e6, r, rng);
      const auto y = witt_random(e6, r, rng);
      const Json ce{{"ring", s.ring}, {"p", s.p}, {"a", wj(x)}, {"b", wj(y)}};
      const auto dx = local_decompose(x, ctx);
      const auto dy = local_decompose(y, ctx);
      c.check(local_recompose(dx, ctx) == x, "recompose(decompose(a)) = a", ce);
      c.check(local_decompose(witt_add(x, y), ctx) == dmap(dx, dy, ArithOp::add), "decompose additive", ce);
      c.check(local_decompose(witt_mul(x, y), ctx) == dmap(dx, dy, ArithOp::mul), "decompose multiplicative", ce);
      const auto d = random_decomposed(ctx, rng);
      c.check(local_decompose(local_recompose(d, ctx), ctx) == d, "decompose(recompose(d)) = d", ce);

      const Element t = r.random(rng);
      const auto dt = local_decompose(teichmuller(t, e6), ctx);
      bool teich_ok = true;
      for (std::size_t k = 0; k < dt.labels.size(); ++k)
        teich_ok &= dt.factors[k] == teichmuller(pow(t, dt.labels[k]), dt.factors[k].index_set());
      c.check(teich_ok, "[r] decomposes into [r^n]", Json{{"ring", s.ring}, {"r", t.to_string()}});

      const auto v1 = v_one_apply(d, ctx);
      c.check(ghost(v1)[0].is_zero(), "V(1) lands in VW", wj(v1));
      const auto u = witt_random(e6, r, rng);
      c.check(v_one_apply(dmap(local_decompose(u, ctx), d, ArithOp::mul), ctx) == witt_mul(u, v1),
              "V(1) is W-linear", Json{{"ring", s.ring}, {"u", wj(u)}, {"w", wj(local_recompose(d, ctx))}});
    }
  }
  // Naturality along Z/9 -> Z/3.
  {
    const Ring r9 = Ring::zmod(9), r3 = Ring::zmod(3);
    const auto c9 = PredicateContext::local(3, r9, e6);
    const auto c3 = PredicateContext::local(3, r3, e6);
    for (std::size_t i = 0; i < b.random_cases / 4; ++i) {
      const auto x = witt_random(e6, r9, rng);
      auto d9 = local_decompose(x, c9);
      for (auto& f : d9.factors) f = witt_change_ring(f, r3);
      c.check(local_decompose(witt_change_ring(x, r3), c3) == d9, "decompose natural in the ring", wj(x));
    }
  }
  // Kernel of V(1), exhaustively.
  {
    const Ring r3 = Ring::zmod(3);
    const auto ctx = PredicateContext::local(3, r3, e6);
    const auto sub = IndexSet::p_typical(3, 2);
    const auto elems = witt_enumerate(sub, r3);
    for (const auto& f1 : elems)
      for (const auto& f2 : elems) {
        DecomposedWitt d = decomposed_zero(ctx);
        d.factors[0] = f1;
        d.factors[1] = f2;
        const bool zero = v_one_apply(d, ctx).is_zero();
        c.check(zero == (f2.is_zero() && is_in_wf(f1)), "ker V(1) = W[F] x 0", Json{{"f1", wj(f1)}, {"f2", wj(f2)}});
      }
  }
  {
    const Ring r9 = Ring::zmod(9);
    const auto ctx = PredicateContext::local(3, r9, IndexSet::p_typical(3, 2));
    const auto v = v_one_apply(local_decompose(witt_one(IndexSet::p_typical(3, 2), r9), ctx), ctx);
    c.check(v == witt_parse(IndexSet::p_typical(3, 2), r9, {"0", "1"}), "V(1) of [1] is (0, 1)", wj(v));
    c.check(is_hodge_tate(v, ctx), "V(1) of the generator is Hodge-Tate", wj(v));
  }
}

// Kernel of multiplication by v equals W[F], over R and R[e]/(e^2).
bool kernel_is_wf(const WittVector& v, const Ring& s, const std::vector<WittVector>& elems,
                  const std::vector<bool>& wf) {
  const auto vs = witt_change_ring(v, s);
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (witt_mul(vs, elems[i]).is_zero() != wf[i]) return false;
  return true;
}

void suite_hodge_tate(Checker& c, Rng&, const SuiteBudget& b) {
  struct Setup {
    const char* ring;
    const char* dual;
    IndexSet::Index p;
  };
  std::size_t exhaustive = 0, ht_count = 0, r_only_disagreements = 0;
  for (const Setup& s : {Setup{"zmod:4", "quot(poly(zmod:4; e); e^2)", 2},
                         Setup{"zmod:9", "quot(poly(zmod:9; e); e^2)", 3}}) {
    const Ring r = Ring::parse(s.ring);
    const Ring dual = Ring::parse(s.dual);
    const IndexSet e = IndexSet::p_typical(s.p, 2);
    const auto ctx = PredicateContext::local(s.p, r, e);
    const auto elems_r = witt_enumerate(e, r, b.enum_limit);
    const auto elems_d = witt_enumerate(e, dual, b.enum_limit);
    std::vector<bool> wf_r, wf_d;
    for (const auto& a : elems_r) wf_r.push_back(is_in_wf(a));
    for (const auto& a : elems_d) wf_d.push_back(is_in_wf(a));
    std::vector<Element> units;
    for (const auto& u : r.enumerate())
      if (elem_is_unit(u)) units.push_back(u);
    for (const auto& v : elems_r) {
      const bool ht = is_hodge_tate(v, ctx);
      bool is_v_unit = false;
      for (const auto& u : units)
        if (verschiebung(s.p, single(u), e) == v) is_v_unit = true;
      const bool ker_r = kernel_is_wf(v, r, elems_r, wf_r);
      const bool ker = ker_r && kernel_is_wf(v, dual, elems_d, wf_d);
      if (ker_r != ker) ++r_only_disagreements;
      ++exhaustive;
      ht_count += ht;
      c.check(ht == is_v_unit, "Hodge-Tate iff V(unit)", Json{{"ring", s.ring}, {"v", wj(v)}, {"ht", ht}});
      c.check(ht == ker, "Hodge-Tate iff kernel = W[F]", Json{{"ring", s.ring}, {"v", wj(v)}, {"ht", ht}});
    }
    // Units of W: predicate against brute-force inverse search.
    for (const auto& a : elems_r) {
      bool brute = false;
      for (const auto& x : elems_r)
        if (witt_mul(a, x) == witt_one(e, r)) brute = true;
      const auto inv = witt_is_unit(a);
      c.check(inv.has_value() == brute && (!inv || witt_mul(a, *inv) == witt_one(e, r)), "unit iff inverse exists",
              Json{{"ring", s.ring}, {"a", wj(a)}});
    }
  }
  c.details()["exhaustive_cases"] = exhaustive;
  c.details()["hodge_tate_elements"] = ht_count;
  c.details()["kernel_test_over_R_alone_disagreements"] = r_only_disagreements;
  c.check(exhaustive >= 16, "at least 16 exhaustive cases");

  const Ring r4 = Ring::zmod(4);
  const IndexSet e = IndexSet::p_typical(2, 2);
  const auto ctx = PredicateContext::local(2, r4, e);
  c.check(is_hodge_tate(witt_parse(e, r4, {"0", "3"}), ctx), "(0, 3) Hodge-Tate over Z/4");
  c.check(!is_hodge_tate(witt_parse(e, r4, {"0", "2"}), ctx), "(0, 2) not Hodge-Tate");
  c.check(!is_hodge_tate(witt_parse(e, r4, {"2", "3"}), ctx), "(2, 3) not Hodge-Tate");
  c.check(!is_hodge_tate(witt_zero(e, r4), ctx), "0 not Hodge-Tate");

  const Ring q = Ring::rationals();
  const IndexSet d2 = IndexSet::divisors_of(2);
  const auto qctx = PredicateContext::rational(q, d2);
  c.check(is_hodge_tate(unghost({q.zero(), q.from_integer(5)}, d2, q), qctx), "ghost (0, 5) Hodge-Tate over Q");
  c.check(!is_hodge_tate(unghost({q.zero(), q.zero()}, d2, q), qctx), "ghost (0, 0) not Hodge-Tate over Q");
}

void suite_distinguished(Checker& c, Rng&, const SuiteBudget& b) {
  for (const char* rd : {"zmod:4", "zmod:9"}) {
    const Ring r = Ring::parse(rd);
    const IndexSet::Index p = r.modulus() == 4 ? 2 : 3;
    const IndexSet e = IndexSet::p_typical(p, 2);
    const auto ctx = PredicateContext::local(p, r, e);
    std::vector<Element> nil, units;
    for (const auto& x : r.enumerate()) {
      if (elem_is_nilpotent(x)) nil.push_back(x);
      if (elem_is_unit(x)) units.push_back(x);
    }
    const auto elems = witt_enumerate(e, r, b.enum_limit);
    std::vector<WittVector> wunits;
    for (const auto& a : elems)
      if (witt_is_unit(a)) wunits.push_back(a);
    std::size_t count = 0;
    for (const auto& xi : elems) {
      bool brute = false;
      for (const auto& x : nil)
        for (const auto& w : units)
          if (witt_add(teichmuller(x, e), verschiebung(p, single(w), e)) == xi) brute = true;
      const auto wit = is_distinguished(xi, ctx);
      count += wit.has_value();
      c.check(wit.has_value() == brute, "distinguished iff [x] + V(unit)", Json{{"ring", rd}, {"xi", wj(xi)}});
      if (wit) {
        c.check(wit->x == xi.at(1) && witt_add(teichmuller(wit->x, e), wit->v) == xi, "witness reassembles xi",
                wj(xi));
      }
      for (const auto& u : wunits) {
        const auto uxi = witt_mul(u, xi);
        c.check(is_distinguished(uxi, ctx).has_value() == wit.has_value() &&
                    is_hodge_tate(uxi, ctx) == is_hodge_tate(xi, ctx),
                "predicates invariant under unit scaling", Json{{"ring", rd}, {"xi", wj(xi)}, {"u", wj(u)}});
      }
    }
    c.details()[std::string("distinguished_") + rd] = count;
  }
  const Ring r4 = Ring::zmod(4);
  const IndexSet e = IndexSet::p_typical(2, 2);
  const auto ctx = PredicateContext::local(2, r4, e);
  const auto w = is_distinguished(witt_parse(e, r4, {"2", "3"}), ctx);
  c.check(w && w->x == r4.from_integer(2) && w->v == witt_parse(e, r4, {"0", "3"}), "(2, 3) = [2] + (0, 3)");
  c.check(is_distinguished(witt_from_integer(e, r4, 2), ctx).has_value(), "2 = 1 + 1 is distinguished");
  c.check(!is_distinguished(witt_parse(e, r4, {"1", "1"}), ctx), "(1, 1) not distinguished");
}

void suite_v_nonfree(Checker& c, Rng&, const SuiteBudget&) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cert = v_nonfree_obstruction(IndexSet::divisors_of(10));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.check(!cert.satisfiable && cert.n == 10u && cert.m == 2u && cert.p == 5u, "div(10) unsat via v10 = v2 mod 5",
          Json{{"satisfiable", cert.satisfiable}, {"profiles", cert.profiles_checked}});
  c.check(secs < 1.0, "div(10) search under 1 s", Json{{"seconds", secs}});
  const auto two = v_nonfree_obstruction(IndexSet::divisors_of(2));
  c.check(two.satisfiable && dwork_check(two.ghost_values, IndexSet::divisors_of(2)), "div(2) satisfiable");
  const auto thirty = v_nonfree_obstruction(IndexSet::divisors_of(30));
  c.check(!thirty.satisfiable, "div(30) unsat");
  c.details()["div6_satisfiable"] = v_nonfree_obstruction(IndexSet::divisors_of(6)).satisfiable;
  c.expect_throw<PreconditionError>("E without primes rejected",
                                    [] { v_nonfree_obstruction(IndexSet::from_list({1})); });
}

template <class Ops>
void cone_ring_laws(Checker& c, const QuasiIdeal<Ops>& q, const std::string& label, Rng& rng, std::size_t cases) {
  for (std::size_t level : {2u, 3u}) {
    for (std::size_t i = 0; i < cases; ++i) {
      const auto u = cone_random(q, level, rng);
      const auto v = cone_random(q, level, rng);
      const auto w = cone_random(q, level, rng);
      const Json ce{{"quasi_ideal", label}, {"level", level}, {"u", cone_str(q, u)}, {"v", cone_str(q, v)},
                    {"w", cone_str(q, w)}};
      c.check(cone_equal(q, cone_mul(q, cone_mul(q, u, v), w), cone_mul(q, u, cone_mul(q, v, w))),
              "cone multiplication associative", ce);
      c.check(cone_equal(q, cone_mul(q, u, v), cone_mul(q, v, u)), "cone multiplication commutative", ce);
      c.check(cone_equal(q, cone_mul(q, u, cone_add(q, v, w)), cone_add(q, cone_mul(q, u, v), cone_mul(q, u, w))),
              "cone distributive", ce);
      c.check(cone_equal(q, cone_mul(q, u, cone_one(q, level)), u), "cone unit", ce);
    }
  }
}

template <class Ops>
void cone_finite_checks(Checker& c, const QuasiIdeal<Ops>& q, const std::string& label, std::size_t limit) {
  const auto elems = q.ops.enumerate(limit);
  const auto module = module_enumerate(q, limit);
  const auto kernel = cone_kernel(q, limit);
  const auto pi0 = cone_pi0(q, limit);
  // |pi_0| |I| / |ker d| = |R|
  c.check(pi0.classes.size() * module.size() == elems.size() * kernel.size(), "pi_0 order consistency",
          Json{{"quasi_ideal", label}, {"pi0", pi0.classes.size()}, {"I", module.size()}, {"ker", kernel.size()},
               {"R", elems.size()}});
  std::map<std::pair<std::size_t, std::size_t>, std::vector<typename QuasiIdeal<Ops>::ModuleElem>> homs;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) homs[{i, j}] = cone_hom_set(q, elems[i], elems[j], limit).elements;
  std::size_t comps = 0;
  bool ok = true;
  for (std::size_t i = 0; i < elems.size() && ok; ++i)
    for (std::size_t j = 0; j < elems.size() && ok; ++j)
      for (std::size_t k = 0; k < elems.size() && ok; ++k)
        for (const auto& x : homs[{i, j}])
          for (const auto& y : homs[{j, k}]) {
            ++comps;
            const auto s = q.madd(x, y);
            const auto& target = homs[{i, k}];
            if (std::none_of(target.begin(), target.end(), [&](const auto& t) { return q.module_equal(s, t); })) {
              ok = false;
            }
          }
  c.check(ok, "Hom composition closed", Json{{"quasi_ideal", label}, {"compositions", comps}});
}

void suite_cone(Checker& c, Rng& rng, const SuiteBudget& b) {
  const Ring z = Ring::integers();
  const QuasiIdeal<ElementOps> two{ElementOps{z}, {z.from_integer(2)}, {}};
  {
    const ConeElement<ElementOps> u{z.from_integer(1), {{z.from_integer(3)}}};
    const ConeElement<ElementOps> v{z.from_integer(2), {{z.from_integer(5)}}};
    const auto p = cone_mul(two, u, v);
    c.check(p.r == z.from_integer(2) && p.xs[0][0] == z.from_integer(41), "(1,3)(2,5) = (2,41)",
            Json{{"got", cone_str(two, p)}});
    for (std::size_t i = 0; i < 20; ++i) {
      const Element r = z.random(rng), s = z.random(rng), x = z.random(rng), y = z.random(rng);
      const auto a = cone_mul(two, {r, {{z.zero()}}}, {s, {{z.zero()}}});
      c.check(a.r == r * s && a.xs[0][0].is_zero(), "(r,0)(s,0) = (rs,0)");
      const auto m = cone_mul(two, {z.zero(), {{x}}}, {z.zero(), {{y}}});
      c.check(m.r.is_zero() && m.xs[0][0] == z.from_integer(2) * x * y, "(0,x)(0,y) = (0, d(x) y)");
    }
  }

  // Positive controls.
  const Ring z4 = Ring::zmod(4), z12 = Ring::zmod(12);
  const Ring zab = Ring::parse("poly(integers; a, b)");
  const QuasiIdeal<ElementOps> two4{ElementOps{z4}, {z4.from_integer(2)}, {}};
  const auto ideal12 = ideal_as_quasi_ideal(z12, {z12.from_integer(4), z12.from_integer(6)}, b.enum_limit);
  const QuasiIdeal<ElementOps> zero12{ElementOps{z12}, {z12.zero()}, {}};
  const QuasiIdeal<ElementOps> rank1{ElementOps{zab}, {zab.parse_element("a*b+1")}, {}};
  const IndexSet e = IndexSet::p_typical(2, 2);
  const QuasiIdeal<WittOps> wbar{WittOps{e, z4}, {witt_parse(e, z4, {"2", "3"})}, {}};
  const std::size_t n = b.random_cases;
  for (const auto& [label, q] : std::vector<std::pair<std::string, const QuasiIdeal<ElementOps>*>>{
           {"Z, d = 2", &two}, {"Z/4, d = 2", &two4}, {"Z/12, I = (4, 6)", &ideal12}, {"Z[a,b], d = ab + 1", &rank1}}) {
    c.check(quasi_ideal_check(*q).holds, "quasi-ideal law holds: " + label);
    cone_ring_laws(c, *q, label, rng, n);
  }
  c.check(quasi_ideal_check(wbar).holds, "quasi-ideal law holds: W-bar");
  cone_ring_laws(c, wbar, "W-bar over W_2(Z/4)", rng, n / 4);

  // Negative control: commutativity fails together with the law.
  const QuasiIdeal<ElementOps> bad{ElementOps{zab}, {zab.parse_element("a"), zab.parse_element("b")}, {}};
  const auto verdict = quasi_ideal_check(bad);
  c.check(!verdict.holds, "law fails for d(e1) = a, d(e2) = b");
  {
    const ConeElement<ElementOps> u{zab.zero(), {bad.basis(0)}};
    const ConeElement<ElementOps> v{zab.zero(), {bad.basis(1)}};
    c.check(!cone_equal(bad, cone_mul(bad, u, v), cone_mul(bad, v, u)), "negative control is not commutative");
  }

  // Hom sets and pi_0.
  const auto h04 = cone_hom_set(two, z.zero(), z.from_integer(4));
  c.check(h04.elements.size() == 1 && h04.elements[0][0] == z.from_integer(2), "Hom(0,4) = {2}");
  c.check(cone_hom_set(two, z.zero(), z.from_integer(3)).elements.empty(), "Hom(0,3) empty");
  const auto h02 = cone_hom_set(two4, z4.zero(), z4.from_integer(2));
  c.check(h02.elements.size() == 2 && h02.elements[0][0] == z4.from_integer(1) &&
              h02.elements[1][0] == z4.from_integer(3),
          "Hom(0,2) = {1,3} over Z/4");
  c.check(cone_pi0(two).descriptor == "zmod:2", "pi_0 of d = 2 on Z is Z/2", Json{{"got", cone_pi0(two).descriptor}});
  const QuasiIdeal<ElementOps> three{ElementOps{z}, {z.from_integer(3)}, {}};
  c.check(cone_pi0(three).descriptor == "zmod:3", "pi_0 of I = (3) is Z/3");
  bool isotropy = true;
  for (int r = -3; r <= 3; ++r) {
    const auto h = cone_hom_set(three, z.from_integer(r), z.from_integer(r));
    isotropy &= h.elements.size() == 1 && h.elements[0][0].is_zero();
  }
  c.check(isotropy, "injective d has trivial isotropy");
  const QuasiIdeal<ElementOps> zero_z{ElementOps{z}, {z.zero()}, {}};
  c.check(cone_pi0(zero_z).descriptor == "integers", "pi_0 of d = 0 is R");

  cone_finite_checks(c, two4, "Z/4, d = 2", b.enum_limit);
  cone_finite_checks(c, ideal12, "Z/12, I = (4, 6)", b.enum_limit);
  cone_finite_checks(c, zero12, "Z/12, d = 0", b.enum_limit);
  cone_finite_checks(c, wbar, "W-bar over W_2(Z/4)", b.enum_limit);
}

// Random filtration on Q^m: lo in [-2, 2], decreasing subspaces of random vectors.
FilteredModule random_filtration(Rng& rng, std::size_t max_dim = 3) {
  const std::size_t m = 1 + rng() % max_dim;
  const int lo = static_cast<int>(rng() % 5) - 2;
  const std::size_t steps = 1 + rng() % 3;
  std::vector<Matrix> pieces{Matrix::identity(m)};
  Matrix current = Matrix::identity(m);
  for (std::size_t s = 0; s < steps; ++s) {
    // Keep a random subset of random combinations of the current basis.
    const std::size_t keep = current.rows() == 0 ? 0 : rng() % (current.rows() + 1);
    Matrix next(0, m);
    for (std::size_t k = 0; k < keep; ++k) {
      std::vector<Rational> v(m);
      for (std::size_t row = 0; row < current.rows(); ++row) {
        const int coef = static_cast<int>(rng() % 5) - 2;
        for (std::size_t col = 0; col < m; ++col) v[col] += coef * current(row, col);
      }
      next.append_row(v);
    }
    current = linalg::span(next);
    pieces.push_back(current);
  }
  return FilteredModule(m, lo, std::move(pieces), rng() % 4 != 0);
}

// Permutation taking coordinates of N (x) M to M (x) N.
Matrix swap_tensor(const FilteredModule& m, const FilteredModule& n, const Matrix& rows_nm) {
  const std::size_t a = m.ambient_dim(), bdim = n.ambient_dim();
  Matrix out(rows_nm.rows(), a * bdim);
  for (std::size_t r = 0; r < rows_nm.rows(); ++r)
    for (std::size_t j = 0; j < bdim; ++j)
      for (std::size_t i = 0; i < a; ++i) out(r, i * bdim + j) = rows_nm(r, j * a + i);
  return linalg::span(out);
}

void suite_rees(Checker& c, Rng& rng, const SuiteBudget& b) {
  const auto unit = FilteredModule::trivial();
  for (std::size_t i = 0; i < b.random_cases / 2; ++i) {
    const auto m = random_filtration(rng);
    const auto n = random_filtration(rng);
    const auto p = random_filtration(rng, 2);
    const Json ce{{"M", m.to_string()}, {"N", n.to_string()}};
    const auto g = rees_of_filtered(m);
    c.check(g.is_t_torsion_free(), "Rees module is t-torsion-free", ce);
    c.check(filtered_of_rees(g) == m, "filtered_of_rees(rees_of_filtered(M)) = M", ce);
    // Conjugate the graded pieces by random invertible matrices and come back.
    ReesModule h = g;
    std::vector<Matrix> basis_change;
    for (auto d : g.dims) {
      Matrix pmat = Matrix::identity(d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t col = r + 1; col < d; ++col) pmat(r, col) = static_cast<int>(rng() % 5) - 2;
      basis_change.push_back(pmat);
    }
    for (std::size_t k = 0; k < h.t_maps.size(); ++k)
      h.t_maps[k] = basis_change[k + 1] * g.t_maps[k] * *linalg::inverse(basis_change[k]);
    const auto back = rees_of_filtered(filtered_of_rees(h));
    c.check(back.dims == h.dims && back.lo_degree == h.lo_degree && back.generator_degrees() == h.generator_degrees(),
            "rees_of_filtered(filtered_of_rees(G)) = G up to isomorphism", ce);

    c.check(day_tensor(unit, m) == m && day_tensor(m, unit) == m, "Day unit", ce);
    const auto mn = day_tensor(m, n);
    const auto nm = day_tensor(n, m);
    bool comm = mn.lo() == nm.lo();
    for (int k = mn.lo() - 1; k <= std::max(mn.hi(), nm.hi()) + 1 && comm; ++k)
      comm = swap_tensor(m, n, nm.fil(k)) == mn.fil(k);
    c.check(comm, "Day commutative", ce);
    c.check(day_tensor(mn, p) == day_tensor(m, day_tensor(n, p)), "Day associative", ce);

    for (int s = -3; s <= 3; ++s) {
      c.check(rees_of_filtered(shift_filtration(m, s)) == shift_rees(g, -s), "M{n} is a degree shift by -n",
              Json{{"M", m.to_string()}, {"n", s}});
    }
    c.check(shift_filtration(m, 0) == m, "M{0} = M", ce);
  }
  c.check(day_tensor(FilteredModule::twist(1), FilteredModule::twist(1)) == FilteredModule::twist(2),
          "Q{1} (x) Q{1} = Q{2}");
  c.check(shift_filtration(FilteredModule::twist(1), -1) == unit, "Q{1}{-1} = Q");
  c.check(shift_filtration(unit, 1) == FilteredModule::twist(1), "Q{1} = Q shifted once");
  const auto g1 = rees_of_filtered(FilteredModule::twist(1));
  c.check(g1.generator_degrees() == std::vector<std::pair<int, std::size_t>>{{-1, 1}} &&
              g1 == shift_rees(rees_of_filtered(unit), -1),
          "Q{1} is generated in degree -1", rees_to_json(g1));
  c.check(rees_of_filtered(unit).generator_degrees() == std::vector<std::pair<int, std::size_t>>{{0, 1}},
          "the unit is generated in degree 0");
  {
    ReesModule torsion{0, {1, 1}, {Matrix(1, 1)}, true};
    c.expect_throw<PreconditionError>("t-torsion rejected", [&] { filtered_of_rees(torsion); });
  }
  c.expect_throw<ValidationError>("increasing filtration rejected",
                                  [] { FilteredModule::flag(0, {1, 2}); });
  c.check(complete_filtration(FilteredModule::flag(0, {2, 1, 0}), 2).complete, "bounded filtration complete");
  c.check(!complete_filtration(FilteredModule::constant(1), 2).complete, "constant filtration not complete");
  {
    const auto k = complete_filtration(FilteredModule::flag(0, {3, 2}, false), 3);
    c.check(!k.complete && k.completed.ambient_dim() == 1 && k.completed.zero_above(), "completion kills Fil^infty");
  }
  {
    const auto t = complete_filtration(iadic_truncated(2, 3), 3);
    c.check(t.complete && t.tower_dims == std::vector<std::size_t>{0, 1, 3, 6}, "I-adic tower dims to depth 3",
            Json{{"tower", t.tower_dims}});
  }
}

void suite_derham(Checker& c, Rng&, const SuiteBudget& b) {
  std::map<std::pair<int, int>, HodgeFilteredCohomology> memo;
  auto hodge = [&](int a, int bb) -> const HodgeFilteredCohomology& {
    auto it = memo.find({a, bb});
    if (it == memo.end()) it = memo.emplace(std::make_pair(a, bb), hodge_cohomology({a, bb}, b.character_bound)).first;
    return it->second;
  };
  const auto& gm = hodge(1, 0);
  c.check(gm.h == std::vector<std::size_t>{1, 1} && gm.fil_dim(1, 1) == 1 && gm.fil_dim(2, 1) == 0,
          "G_m: H = (1, 1), Fil^1 H^1 = H^1, Fil^2 H^1 = 0", derham_report(gm));
  c.check(hodge(0, 1).h == std::vector<std::size_t>{1, 0}, "A^1: H = (1, 0)");
  c.check(hodge(2, 0).h == std::vector<std::size_t>{1, 2, 1}, "G_m^2: H = (1, 2, 1)");
  {
    const Json report = derham_report(gm);
    c.check(report["H"] == Json::parse(R"({"0":1,"1":1})") && report["Fil"] == Json::parse(R"({"1":{"1":1,"2":0}})"),
            "G_m report", report);
  }
  // Kunneth: (a1 + a2, b1 + b2) against the convolution.
  for (int a = 0; a <= 3; ++a)
    for (int bb = 0; bb <= 2; ++bb)
      for (int a1 = 0; a1 <= a; ++a1)
        for (int b1 = 0; b1 <= bb; ++b1) {
          const auto& x = hodge(a1, b1).h;
          const auto& y = hodge(a - a1, bb - b1).h;
          std::vector<std::size_t> conv(x.size() + y.size() - 1, 0);
          for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) conv[i + j] += x[i] * y[j];
          c.check(hodge(a, bb).h == conv, "Kunneth", Json{{"a", a}, {"b", bb}, {"a1", a1}, {"b1", b1}});
        }
  for (int a = 0; a <= 4; ++a)
    for (int bb = 0; a + bb <= 4; ++bb) {
      const auto& h = hodge(a, bb);
      const Json ce{{"a", a}, {"b", bb}};
      long euler = 0;
      for (std::size_t j = 0; j < h.h.size(); ++j) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a), j);
        c.check(h.h[j] == binom.get_ui(), "dim H^j = C(a, j)", ce);
        euler += (j % 2 ? -1 : 1) * static_cast<long>(h.h[j]);
        for (int i = -1; i <= static_cast<int>(j) + 2; ++i) {
          const std::size_t want = i <= static_cast<int>(j) ? h.h[j] : 0;
          c.check(h.fil_dim(i, static_cast<int>(j)) == want, "Fil^i H^j pattern",
                  Json{{"a", a}, {"b", bb}, {"i", i}, {"j", j}});
        }
      }
      c.check(euler == (a == 0 ? 1 : 0), "Euler characteristic", ce);
      const auto rees = rees_package(h);
      c.check(rees[0].generator_degrees() == std::vector<std::pair<int, std::size_t>>{{0, 1}}, "H^0 = Q in degree 0",
              ce);
      for (std::size_t j = 1; j < rees.size(); ++j) {
        std::vector<std::pair<int, std::size_t>> want;
        if (h.h[j]) want.emplace_back(-static_cast<int>(j), h.h[j]);
        c.check(rees[j].generator_degrees() == want && rees[j].is_t_torsion_free(), "H^j free, generated in degree -j",
                ce);
      }
      for (const auto& s : build_complex({a, bb}, b.character_bound)) {
        std::size_t positive = 0;
        bool zero = true;
        for (int k = 0; k < a + bb; ++k) {
          if (k >= a && s.character[static_cast<std::size_t>(k)] > 0) ++positive;
          if (s.character[static_cast<std::size_t>(k)] != 0) zero = false;
        }
        bool dd = true;
        for (std::size_t k = 0; k + 1 < s.differentials.size(); ++k) {
          const Matrix sq = s.differentials[k + 1] * s.differentials[k];
          dd &= linalg::rank(sq) == 0;
        }
        c.check(dd, "d o d = 0", Json{{"character", s.character}});
        bool dims = true;
        for (int i = 0; i <= a + bb; ++i) {
          Integer binom;
          mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a) + positive, static_cast<unsigned long>(i));
          dims &= s.dim(i) == binom.get_ui();
        }
        c.check(dims, "slice dimensions", Json{{"character", s.character}});
        if (!zero) c.check(slice_is_exact(s), "nonzero slices exact", Json{{"character", s.character}});
      }
    }
  for (int a = 0; a <= 2; ++a)
    for (int bb = 0; a + bb <= 3; ++bb) {
      const auto wide = hodge_cohomology({a, bb}, b.character_bound + 1);
      c.check(wide.h == hodge(a, bb).h, "enlarging the character box changes nothing", Json{{"a", a}, {"b", bb}});
    }
  {
    const auto r2 = rees_package(hodge(2, 0));
    c.check(r2[1].generator_degrees() == std::vector<std::pair<int, std::size_t>>{{-1, 2}}, "G_m^2: H^1 rank 2 in degree -1");
    const auto r1 = rees_package(hodge(0, 1));
    c.check(r1[1].generator_degrees().empty(), "A^1: H^1 is zero");
  }
  // G_a^dR points.
  const Ring qt = Ring::parse("quot(poly(rationals; t); t^3)");
  c.check(cone_pi0(gadr_points(qt, qt.parse_element("t"))).descriptor == "quot(poly(rationals; t); t)",
          "pi_0 of eta = t is Q[t]/(t)", Json{{"got", cone_pi0(gadr_points(qt, qt.parse_element("t"))).descriptor}});
  c.check(cone_pi0(gadr_points(qt, qt.one())).descriptor == "zero", "eta = 1 gives 0");
  c.check(cone_pi0(gadr_points(qt, qt.zero())).descriptor == qt.descriptor(), "eta = 0 gives R");
}

void suite_iadic_gr(Checker& c, Rng&, const SuiteBudget& b) {
  struct Setup {
    const char* ring;
    std::vector<std::string> gens;
    std::size_t kahler_rank;
  };
  for (const auto& s : {Setup{"poly(rationals; x)", {"x_2 - x"}, 1}, Setup{"poly(rationals; x, z)", {"x_2 - x", "z_2 - z"}, 2},
                        Setup{"poly(rationals; x; inv x)", {"x_2 - x"}, 1},
                        Setup{"poly(rationals; x, z)", {"x_2 - x", "z_2 - z", "x_2 + z_2 - x - z"}, 2}}) {
    const auto pieces = iadic_gr(Ring::parse(s.ring), s.gens, b.gr_degree);
    for (const auto& p : pieces) {
      Integer want;
      mpz_bin_uiui(want.get_mpz_t(), s.kahler_rank + static_cast<unsigned long>(p.degree) - 1,
                   static_cast<unsigned long>(p.degree));
      if (p.degree == 0) want = 1;
      c.check(p.rank == want.get_ui(), "gr^i rank = rank Sym^i of the Kahler module",
              Json{{"ring", s.ring}, {"generators", s.gens}, {"degree", p.degree}, {"rank", p.rank}});
      c.check(p.generators.size() - p.relations.rows() == p.rank, "relations account for the rank gap",
              Json{{"ring", s.ring}, {"degree", p.degree}});
    }
  }
  const auto none = iadic_gr(Ring::parse("poly(rationals; x)"), {}, 3);
  bool zero_ok = none[0].rank == 1;
  for (std::size_t i = 1; i < none.size(); ++i) zero_ok &= none[i].rank == 0;
  c.check(zero_ok, "I = 0: gr^0 = A (x) A, higher pieces vanish");
  c.expect_throw<Unsupported>("non-linear generator rejected",
                              [] { iadic_gr(Ring::parse("poly(rationals; x)"), {"x_2^2 - x^2"}, 2); });
}

void suite_prismatic(Checker& c, Rng&, const SuiteBudget& b) {
  const Ring z4 = Ring::zmod(4);
  const IndexSet e2 = IndexSet::p_typical(2, 2);
  const IndexSet e1 = IndexSet::p_typical(2, 1);
  const auto ctx = PrismaticContext::make(witt_parse(e2, z4, {"2", "3"}));
  const auto rep = wbar_ring(ctx, 2, b.enum_limit);
  c.check(rep.ok(), "W-bar pi_0 maps onto R-bar with nilpotent kernels", wbar_to_json(rep));
  c.check(rep.wbar_kernel_nilpotency && *rep.wbar_kernel_nilpotency <= 2, "kernel squares to zero",
          wbar_to_json(rep));
  const auto ctx1 = PrismaticContext::make(witt_from_integer(e1, z4, 2));
  const auto rep1 = wbar_ring(ctx1, 2, b.enum_limit);
  c.check(rep1.pi0.order == Integer(2) && rep1.ok(), "W_1(Z/4) / 2 = Z/2", wbar_to_json(rep1));
  c.expect_throw<PreconditionError>("unit xi rejected", [&] { PrismaticContext::make(witt_one(e2, z4)); });

  const auto x2 = AffinePresentation::parse({"x"}, {"x^2"});
  const auto free = AffinePresentation::parse({"x"}, {});
  const auto g = prismatic_points_affine(x2, ctx1, b.groupoid_budget);
  c.check(g.objects.size() == 4, "Z[x]/(x^2) has 4 objects over (Z/4, xi = 2)", groupoid_to_json(g));
  c.details()["x2_objects"] = g.objects.size();
  c.details()["x2_morphisms"] = g.morphism_count();
  c.details()["x2_components"] = g.num_components;
  // Unit scaling.
  for (const auto& [label, base, pres] : std::vector<std::tuple<std::string, PrismaticContext, AffinePresentation>>{
           {"Z[x]/(x^2), W_1(Z/4)", ctx1, x2}, {"Z[x], W_2(Z/4)", ctx, free}, {"Z[x]/(x^2), W_2(Z/4)", ctx, x2}}) {
    const auto ref = prismatic_points_affine(pres, base, b.groupoid_budget);
    const auto ref_pi0 = wbar_ring(base, 2, b.enum_limit).pi0.order;
    const auto axioms = check_groupoid_axioms(ref, pres, base);
    c.check(axioms.failures.empty(), "groupoid axioms: " + label, Json{{"failures", axioms.failures}});
    c.check(ref.syzygy_violations == 0, "relation syzygies consistent: " + label);
    for (const auto& u : witt_enumerate(base.index_set, base.ring, b.enum_limit)) {
      if (!witt_is_unit(u)) continue;
      const auto scaled = prismatic_points_affine(pres, base.scaled(u), b.groupoid_budget);
      c.check(scaled.objects.size() == ref.objects.size() && scaled.morphism_count() == ref.morphism_count() &&
                  scaled.num_components == ref.num_components,
              "counts invariant under xi -> u xi: " + label, Json{{"u", wj(u)}});
      c.check(wbar_ring(base.scaled(u), 2, b.enum_limit).pi0.order == ref_pi0,
              "W-bar pi_0 order invariant under unit scaling: " + label, Json{{"u", wj(u)}});
    }
  }
  {
    const auto gf = prismatic_points_affine(free, ctx, b.groupoid_budget);
    c.check(gf.objects.size() == 16, "Z[x]: objects = W");
    c.check(gf.num_components == rep.pi0.classes.size(), "Z[x]: pi_0 of the groupoid = pi_0 of W-bar",
            Json{{"groupoid", gf.num_components}, {"wbar", rep.pi0.classes.size()}});
    bool constant = true;
    std::map<std::size_t, std::size_t> per_class;
    for (std::size_t s = 0; s < gf.objects.size(); ++s)
      for (std::size_t t = 0; t < gf.objects.size(); ++t) {
        const auto k = gf.morphisms[s][t].size();
        if (gf.component[s] != gf.component[t]) {
          constant &= k == 0;
          continue;
        }
        auto [it, fresh] = per_class.emplace(gf.component[s], k);
        constant &= fresh || it->second == k;
      }
    c.check(constant, "Z[x]: |Hom| constant on classes, zero across");
  }
  // Witt points.
  const Ring f2 = Ring::zmod(2);
  const IndexSet d2 = IndexSet::divisors_of(2);
  c.check(witt_points(free, d2, f2).size() == 4, "Z[x] points in W_2(F_2)");
  const auto idem = witt_points(AffinePresentation::parse({"x"}, {"x^2 - x"}), d2, f2);
  // (a, b)^2 = (a^2, 2 a^2 b + 2 b^2) = (a, 0) over F_2: idempotents are (0,0), (1,0).
  c.check(idem.size() == 2, "idempotents of W_2(F_2)", Json{{"count", idem.size()}});
  c.check(witt_points(AffinePresentation::parse({"x"}, {"1"}), d2, f2).empty(), "Z[x]/(1) has no points");
  {
    const auto big = witt_points(AffinePresentation::parse({"x"}, {"x^2 - x"}), IndexSet::divisors_of(2), z4);
    const auto small = witt_points(AffinePresentation::parse({"x"}, {"x^2 - x"}), IndexSet(), z4);
    bool restricts = true;
    for (const auto& p : big) {
      const auto r = witt_restrict(p[0], IndexSet());
      restricts &= std::any_of(small.begin(), small.end(), [&](const auto& s) { return s[0] == r; });
    }
    c.check(restricts, "points restrict along E' in E");
  }
}

void suite_ring_core(Checker& c, Rng& rng, const SuiteBudget&) {
  for (const char* d : {"integers", "rationals", "zmod:12", "poly(integers; x, y)", "poly(rationals; t; inv t)",
                        "quot(poly(zmod:9; t); t^2 - 3)", "quot(poly(rationals; t); t^3)"}) {
    const Ring r = Ring::parse(d);
    c.check(Ring::parse(r.descriptor()) == r, std::string("descriptor round trip ") + d);
    for (int i = 0; i < 50; ++i) {
      const Element a = r.random(rng), b2 = r.random(rng), cc = r.random(rng);
      c.check((a + b2) * cc == a * cc + b2 * cc && (a * b2) * cc == a * (b2 * cc) && a * b2 == b2 * a &&
                  a - a == r.zero() && r.parse_element(a.to_string()) == a,
              std::string("ring axioms and printing ") + d, Json{{"a", a.to_string()}, {"b", b2.to_string()}});
    }
  }
  const Ring z4 = Ring::zmod(4);
  const auto inv3 = elem_is_unit(z4.from_integer(3));
  c.check(inv3 && *inv3 == z4.from_integer(3), "3^-1 = 3 in Z/4");
  const Ring r9 = Ring::parse("quot(poly(zmod:9; t); t^2 - 3)");
  const auto inv = elem_is_unit(r9.parse_element("2 + t"));
  c.check(inv && *inv == r9.parse_element("2 + 8*t"), "(2 + t)^-1 = 2 + 8t");
  for (const char* d : {"zmod:12", "quot(poly(zmod:4; e); e^2)", "quot(poly(zmod:9; t); t^2 - 3)",
                        "quot(poly(zmod:2; s, t); s^2, t^2 + t)"}) {
    const Ring r = Ring::parse(d);
    const auto elems = r.enumerate();
    c.check(r.order() && *r.order() == Integer(static_cast<unsigned long>(elems.size())), std::string("order ") + d);
    for (const auto& a : elems) {
      bool brute_unit = false;
      for (const auto& x : elems)
        if ((a * x).is_one()) brute_unit = true;
      bool brute_nil = false;
      Element p = a;
      for (std::size_t k = 0; k <= elems.size() && !brute_nil; ++k, p = p * a) brute_nil = p.is_zero();
      c.check(elem_is_unit(a).has_value() == brute_unit, std::string("unit test ") + d, Json{{"a", a.to_string()}});
      c.check(elem_is_nilpotent(a).has_value() == brute_nil, std::string("nilpotent test ") + d,
              Json{{"a", a.to_string()}});
    }
  }
}

using SuiteFn = std::function<void(Checker&, Rng&, const SuiteBudget&)>;

const std::map<std::string, std::pair<SuiteFn, std::vector<std::string>>>& registry() {
  static const std::map<std::string, std::pair<SuiteFn, std::vector<std::string>>> reg{
      {"annihilator",
       {suite_annihilator,
        {"W[F] = annihilator of VW, exhaustive over W_2(Z/2) and W_2(Z/4)", "VW is killed by W[F]",
         "is_in_wf examples"}}},
      {"cone",
       {suite_cone,
        {"quasi-ideal law and commutativity (positive and negative controls)",
         "associativity, distributivity, unit at levels 2 and 3", "Hom composition closed",
         "pi_0 order consistency on finite rings", "trivial isotropy for injective d", "Hom and pi_0 examples"}}},
      {"derham",
       {suite_derham,
        {"d o d = 0 per slice", "slice dimensions", "nonzero slices exact", "character box soundness",
         "Kunneth for a <= 3, b <= 2", "Euler characteristic", "Fil^i H^j pattern for a + b <= 4",
         "H^0 = Q in degree 0", "Rees packaging", "G_a^dR points"}}},
      {"distinguished",
       {suite_distinguished,
        {"distinguished iff [x] + V(unit), exhaustive over W_2(Z/4) and W_2(Z/9)", "witness reassembles xi",
         "unit scaling invariance of the predicates"}}},
      {"hodge-tate-equivalences",
       {suite_hodge_tate,
        {"Hodge-Tate iff V(unit) iff kernel = W[F], exhaustive over W_2(Z/4) and W_2(Z/9)",
         "unit iff inverse exists, exhaustive", "rational Hodge-Tate examples"}}},
      {"iadic-gr",
       {suite_iadic_gr, {"gr^i ranks equal Sym^i of the Kahler module", "I = 0 case", "unsupported generators"}}},
      {"local-decomposition",
       {suite_local_decomposition,
        {"round trips both ways", "ring isomorphism", "naturality in the ring", "Teichmuller factors",
         "V(1) lands in VW", "V(1) is W-linear", "kernel of V(1)"}}},
      {"prismatic",
       {suite_prismatic,
        {"W-bar pi_0 maps surjective with nilpotent kernels", "groupoid axioms", "unit scaling invariance",
         "Hom constant on classes for free B", "pi_0 comparison with W-bar", "Witt points examples",
         "restriction compatibility"}}},
      {"rees",
       {suite_rees,
        {"round trips", "Day convolution unital, commutative, associative", "shift = degree shift by -n",
         "twist normalization", "t-torsion rejected", "completeness verdicts", "I-adic tower"}}},
      {"ring-core",
       {suite_ring_core,
        {"descriptor round trips", "ring axioms and printing", "unit and nilpotent tests against brute force"}}},
      {"universal-integrality",
       {suite_universal_integrality,
        {"integrality up to div(30) and p_typical(p, 4)", "s_2 and m_2 exact", "JSON round trip", "cache"}}},
      {"v-nonfree",
       {suite_v_nonfree, {"div(10) unsatisfiable via v10 = v2 mod 5", "div(2) satisfiable", "timing under 1 s"}}},
      {"witt-operators",
       {suite_witt_operators,
        {"F_n ring map", "F_m F_n = F_mn", "F_p F_l = F_l F_p", "F_p V_p = p", "V_n(x) y = V_n(x F_n(y))",
         "V_n additive", "Teichmuller multiplicative"}}},
      {"witt-ring-axioms",
       {suite_witt_ring_axioms,
        {"ring axioms over Z, Z/12, Z/4, Q with div(6) and p_typical(2,3)", "ghost map is a ring map",
         "polynomial and ghost strategies agree"}}},
  };
  return reg;
}

std::uint64_t suite_seed(const std::string& name, std::uint64_t seed) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : name) h = (h ^ ch) * 1099511628211ull;
  return seed ^ h;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
  }();
  return ids;
}

Json coverage_map() {
  Json out = Json::object();
  for (const auto& [k, v] : registry()) out[k] = v.second;
  return out;
}

SuiteReport suite_run(const std::string& name, std::uint64_t seed, const SuiteBudget& budget) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw ValidationError("unknown suite: " + name);
  SuiteReport rep;
  rep.name = name;
  rep.seed = seed;
  Rng rng(suite_seed(name, seed));
  Checker c(rep);
  const auto t0 = std::chrono::steady_clock::now();
  c.guard("suite raised", [&] { it->second.first(c, rng, budget); });
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<SuiteReport> suite_run_all(const std::vector<std::string>& names, std::uint64_t seed,
                                       const SuiteBudget& budget) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& n : sorted)
    if (!registry().count(n)) throw ValidationError("unknown suite: " + n);
  std::vector<std::future<SuiteReport>> futures;
  for (const auto& n : sorted) futures.push_back(std::async(std::launch::async, suite_run, n, seed, budget));
  std::vector<SuiteReport> out;
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

Json report_to_json(const SuiteReport& r, bool with_timing) {
  Json out;
  out["suite"] = r.name;
  out["seed"] = r.seed;
  out["cases"] = r.cases;
  Json fails = Json::array();
  for (const auto& f : r.failures) fails.push_back(Json{{"check", f.check}, {"counterexample", f.counterexample}});
  out["failures"] = fails;
  out["passed"] = r.passed();
  if (with_timing) out["wall_seconds"] = r.wall_seconds;
  out["details"] = r.details;
  return out;
}

}  // namespace wittforge
