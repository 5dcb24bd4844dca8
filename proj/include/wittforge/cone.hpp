#pragma once

// Quasi-ideals d: I -> R and the cone rings R_n = R x I^(n-1).
//
// Everything is templated over a small "ring ops" object so the same code
// serves plain rings and Witt vector rings.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wittforge/errors.hpp"
#include "wittforge/ring.hpp"
#include "wittforge/witt.hpp"

namespace wittforge {

struct ElementOps {
  using Value = Element;
  Ring ring;

  Value zero() const { return ring.zero(); }
  Value one() const { return ring.one(); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  bool is_finite() const { return ring.is_finite(); }
  std::vector<Value> enumerate(std::size_t limit) const { return ring.enumerate(limit); }
  Value random(std::mt19937_64& rng) const { return ring.random(rng); }
  std::string str(const Value& a) const { return a.to_string(); }
  std::string descriptor() const { return ring.descriptor(); }
};

struct WittOps {
  using Value = WittVector;
  IndexSet index_set;
  Ring ring;

  Value zero() const { return witt_zero(index_set, ring); }
  Value one() const { return witt_one(index_set, ring); }
  Value add(const Value& a, const Value& b) const { return witt_add(a, b); }
  Value mul(const Value& a, const Value& b) const { return witt_mul(a, b); }
  Value neg(const Value& a) const { return witt_neg(a); }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  bool is_finite() const { return ring.is_finite(); }
  std::vector<Value> enumerate(std::size_t limit) const { return witt_enumerate(index_set, ring, limit); }
  Value random(std::mt19937_64& rng) const { return witt_random(index_set, ring, rng); }
  std::string str(const Value& a) const { return a.to_string(); }
  std::string descriptor() const { return "W[" + index_set.key() + "](" + ring.descriptor() + ")"; }
};

/// A module I = R^k / (relations) with d given on the basis e_1..e_k.
template <class Ops>
struct QuasiIdeal {
  using Value = typename Ops::Value;
  using ModuleElem = std::vector<Value>;

  Ops ops;
  std::vector<Value> d_values;
  std::vector<ModuleElem> relations;  // finite base only
  mutable std::shared_ptr<const std::vector<ModuleElem>> span_cache{};

  std::size_t rank() const { return d_values.size(); }

  ModuleElem module_zero() const { return ModuleElem(rank(), ops.zero()); }
  ModuleElem basis(std::size_t i) const {
    ModuleElem e = module_zero();
    e.at(i) = ops.one();
    return e;
  }
  ModuleElem madd(const ModuleElem& x, const ModuleElem& y) const {
    ModuleElem out;
    for (std::size_t i = 0; i < rank(); ++i) out.push_back(ops.add(x[i], y[i]));
    return out;
  }
  ModuleElem mneg(const ModuleElem& x) const {
    ModuleElem out;
    for (const auto& v : x) out.push_back(ops.neg(v));
    return out;
  }
  ModuleElem smul(const Value& r, const ModuleElem& x) const {
    ModuleElem out;
    for (const auto& v : x) out.push_back(ops.mul(r, v));
    return out;
  }
  Value d(const ModuleElem& x) const {
    Value acc = ops.zero();
    for (std::size_t i = 0; i < rank(); ++i) acc = ops.add(acc, ops.mul(x[i], d_values[i]));
    return acc;
  }

  /// The submodule spanned by the relations (finite base only).
  const std::vector<ModuleElem>& relation_span(std::size_t limit = 1'000'000) const {
    if (!span_cache) span_cache = std::make_shared<const std::vector<ModuleElem>>(compute_span(limit));
    return *span_cache;
  }

  std::vector<ModuleElem> compute_span(std::size_t limit) const {
    std::vector<ModuleElem> span{module_zero()};
    if (relations.empty()) return span;
    const auto scalars = ops.enumerate(limit);
    for (const auto& rel : relations) {
      std::vector<ModuleElem> next;
      for (const auto& s : span) {
        for (const auto& c : scalars) {
          auto v = madd(s, smul(c, rel));
          if (std::none_of(next.begin(), next.end(), [&](const ModuleElem& w) { return vec_equal(v, w); })) {
            next.push_back(std::move(v));
          }
          if (next.size() > limit) throw BudgetExceeded("relation span exceeds budget");
        }
      }
      span = std::move(next);
    }
    return span;
  }

  bool vec_equal(const ModuleElem& x, const ModuleElem& y) const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (!ops.equal(x[i], y[i])) return false;
    return true;
  }

  bool module_equal(const ModuleElem& x, const ModuleElem& y) const {
    if (vec_equal(x, y)) return true;
    if (relations.empty()) return false;
    const auto diff = madd(x, mneg(y));
    const auto& span = relation_span();
    return std::any_of(span.begin(), span.end(), [&](const ModuleElem& s) { return vec_equal(s, diff); });
  }

  std::string module_str(const ModuleElem& x) const {
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + ops.str(x[i]);
    return s + "]";
  }
};

/// d must kill every relation for the map to be defined.
template <class Ops>
void quasi_ideal_validate(const QuasiIdeal<Ops>& q) {
  for (const auto& rel : q.relations) {
    if (rel.size() != q.rank()) throw ValidationError("relation has the wrong length");
    if (!q.ops.equal(q.d(rel), q.ops.zero())) throw ValidationError("d does not vanish on relation " + q.module_str(rel));
  }
}

template <class Ops>
struct QuasiIdealVerdict {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;  // generator indices
};

/// x d(y) = y d(x) on all generator pairs.
template <class Ops>
QuasiIdealVerdict<Ops> quasi_ideal_check(const QuasiIdeal<Ops>& q) {
  QuasiIdealVerdict<Ops> v;
  for (std::size_t i = 0; i < q.rank(); ++i) {
    for (std::size_t j = i + 1; j < q.rank(); ++j) {
      const auto lhs = q.smul(q.d_values[j], q.basis(i));
      const auto rhs = q.smul(q.d_values[i], q.basis(j));
      if (!q.module_equal(lhs, rhs)) {
        v.holds = false;
        v.violating_pair = std::make_pair(i, j);
        return v;
      }
    }
  }
  return v;
}

/// An element (r, x_1, ..., x_{n-1}) of the cone level R_n.
template <class Ops>
struct ConeElement {
  typename Ops::Value r;
  std::vector<typename QuasiIdeal<Ops>::ModuleElem> xs;
};

template <class Ops>
ConeElement<Ops> cone_add(const QuasiIdeal<Ops>& q, const ConeElement<Ops>& u, const ConeElement<Ops>& v) {
  if (u.xs.size() != v.xs.size()) throw ValidationError("cone elements at different levels");
  ConeElement<Ops> out{q.ops.add(u.r, v.r), {}};
  for (std::size_t i = 0; i < u.xs.size(); ++i) out.xs.push_back(q.madd(u.xs[i], v.xs[i]));
  return out;
}

template <class Ops>
ConeElement<Ops> cone_neg(const QuasiIdeal<Ops>& q, const ConeElement<Ops>& u) {
  ConeElement<Ops> out{q.ops.neg(u.r), {}};
  for (const auto& x : u.xs) out.xs.push_back(q.mneg(x));
  return out;
}

/// (r, x)(s, y) = (rs, r y + s x + d(x) y), in each module slot.
template <class Ops>
ConeElement<Ops> cone_mul(const QuasiIdeal<Ops>& q, const ConeElement<Ops>& u, const ConeElement<Ops>& v) {
  if (u.xs.size() != v.xs.size()) throw ValidationError("cone elements at different levels");
  ConeElement<Ops> out{q.ops.mul(u.r, v.r), {}};
  for (std::size_t i = 0; i < u.xs.size(); ++i) {
    const auto& x = u.xs[i];
    const auto& y = v.xs[i];
    out.xs.push_back(q.madd(q.madd(q.smul(u.r, y), q.smul(v.r, x)), q.smul(q.d(x), y)));
  }
  return out;
}

template <class Ops>
ConeElement<Ops> cone_arith(const QuasiIdeal<Ops>& q, ArithOp op, const ConeElement<Ops>& u,
                            const ConeElement<Ops>& v) {
  switch (op) {
    case ArithOp::add: return cone_add(q, u, v);
    case ArithOp::sub: return cone_add(q, u, cone_neg(q, v));
    case ArithOp::mul: return cone_mul(q, u, v);
    case ArithOp::neg: return cone_neg(q, u);
  }
  return u;
}

template <class Ops>
bool cone_equal(const QuasiIdeal<Ops>& q, const ConeElement<Ops>& u, const ConeElement<Ops>& v) {
  if (!q.ops.equal(u.r, v.r) || u.xs.size() != v.xs.size()) return false;
  for (std::size_t i = 0; i < u.xs.size(); ++i)
    if (!q.module_equal(u.xs[i], v.xs[i])) return false;
  return true;
}

template <class Ops>
ConeElement<Ops> cone_one(const QuasiIdeal<Ops>& q, std::size_t level) {
  return {q.ops.one(), std::vector<typename QuasiIdeal<Ops>::ModuleElem>(level - 1, q.module_zero())};
}

template <class Ops>
ConeElement<Ops> cone_random(const QuasiIdeal<Ops>& q, std::size_t level, std::mt19937_64& rng) {
  ConeElement<Ops> out{q.ops.random(rng), {}};
  for (std::size_t i = 0; i + 1 < level; ++i) {
    typename QuasiIdeal<Ops>::ModuleElem x;
    for (std::size_t j = 0; j < q.rank(); ++j) x.push_back(q.ops.random(rng));
    out.xs.push_back(std::move(x));
  }
  return out;
}

template <class Ops>
std::string cone_str(const QuasiIdeal<Ops>& q, const ConeElement<Ops>& u) {
  std::string s = "(" + q.ops.str(u.r);
  for (const auto& x : u.xs) s += ", " + q.module_str(x);
  return s + ")";
}

/// All module elements R^k modulo relations, one representative per class.
template <class Ops>
std::vector<typename QuasiIdeal<Ops>::ModuleElem> module_enumerate(const QuasiIdeal<Ops>& q,
                                                                    std::size_t limit = 1'000'000) {
  using ModuleElem = typename QuasiIdeal<Ops>::ModuleElem;
  const auto scalars = q.ops.enumerate(limit);
  std::vector<ModuleElem> all{ModuleElem{}};
  for (std::size_t i = 0; i < q.rank(); ++i) {
    std::vector<ModuleElem> next;
    for (const auto& v : all) {
      for (const auto& c : scalars) {
        auto w = v;
        w.push_back(c);
        next.push_back(std::move(w));
        if (next.size() > limit) throw BudgetExceeded("module enumeration exceeds budget");
      }
    }
    all = std::move(next);
  }
  if (q.relations.empty()) return all;
  const auto& span = q.relation_span(limit);
  std::vector<ModuleElem> reps;
  std::vector<bool> taken(all.size(), false);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (taken[i]) continue;
    reps.push_back(all[i]);
    for (const auto& s : span) {
      const auto w = q.madd(all[i], s);
      for (std::size_t j = i; j < all.size(); ++j) {
        if (!taken[j] && q.vec_equal(all[j], w)) {
          taken[j] = true;
          break;
        }
      }
    }
  }
  return reps;
}

template <class Ops>
struct HomSet {
  bool infinite = false;
  std::vector<typename QuasiIdeal<Ops>::ModuleElem> elements;  // when finite
  std::string description;
};

/// Hom(r1, r2) = d^{-1}(r2 - r1).
template <class Ops>
HomSet<Ops> cone_hom_set(const QuasiIdeal<Ops>& q, const typename Ops::Value& r1, const typename Ops::Value& r2,
                         std::size_t limit = 1'000'000) {
  HomSet<Ops> out;
  const auto target = q.ops.add(r2, q.ops.neg(r1));
  if (q.ops.is_finite()) {
    for (const auto& x : module_enumerate(q, limit))
      if (q.ops.equal(q.d(x), target)) out.elements.push_back(x);
    out.description = std::to_string(out.elements.size()) + " elements";
    return out;
  }
  if constexpr (std::is_same_v<Ops, ElementOps>) {
    const Ring& r = q.ops.ring;
    if (q.rank() == 1 && q.relations.empty() && r.num_vars() == 0) {
      const Rational delta = *q.d_values[0].constant_value();
      const Rational t = *target.constant_value();
      if (delta == 0) {
        out.infinite = t == 0;
        out.description = out.infinite ? "all of I" : "empty";
        return out;
      }
      const Rational x = t / delta;
      if (r.base_kind() == BaseKind::rationals || x.get_den() == 1) out.elements.push_back({r.from_rational(x)});
      out.description = std::to_string(out.elements.size()) + " elements";
      return out;
    }
  }
  throw Unsupported("hom sets need a finite base or a rank-one quasi-ideal over Z or Q");
}

/// pi_0 = R / image(d).
template <class Ops>
struct Pi0 {
  std::string descriptor;                    // symbolic description
  std::optional<Integer> order;              // finite cases
  std::vector<typename Ops::Value> ideal;    // image of d, finite cases
  std::vector<typename Ops::Value> classes;  // one representative per class, finite cases
};

namespace detail {

// Univariate polynomial helpers over Q, coefficients low degree first.
using QPoly = std::vector<Rational>;
inline void qpoly_trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
inline QPoly qpoly_mod(QPoly a, const QPoly& b) {
  qpoly_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    qpoly_trim(a);
  }
  return a;
}
inline QPoly qpoly_gcd(QPoly a, QPoly b) {
  qpoly_trim(a);
  qpoly_trim(b);
  while (!b.empty()) {
    QPoly r = qpoly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace detail

/// Symbolic pi_0 for plain rings where the cokernel has a closed form.
inline std::optional<Pi0<ElementOps>> pi0_symbolic(const QuasiIdeal<ElementOps>& q) {
  const Ring& r = q.ops.ring;
  Pi0<ElementOps> out;
  if (r.num_vars() == 0) {
    Integer g = 0;
    bool any_nonzero = false;
    for (const auto& dv : q.d_values) {
      const Rational c = *dv.constant_value();
      if (c != 0) any_nonzero = true;
      if (r.base_kind() != BaseKind::rationals) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    }
    switch (r.base_kind()) {
      case BaseKind::rationals: out.descriptor = any_nonzero ? "zero" : r.descriptor(); break;
      case BaseKind::integers:
        out.descriptor = g == 0 ? r.descriptor() : (g == 1 ? "zero" : "zmod:" + g.get_str());
        if (g != 0) out.order = g;
        break;
      case BaseKind::zmod: {
        Integer h;
        mpz_gcd(h.get_mpz_t(), g.get_mpz_t(), r.modulus().get_mpz_t());
        out.descriptor = h == 1 ? "zero" : "zmod:" + h.get_str();
        out.order = h;
        break;
      }
    }
    return out;
  }
  // Univariate Q[t] or Q[t]/(f).
  if (r.num_vars() == 1 && r.base_kind() == BaseKind::rationals && !r.is_inverted(0)) {
    detail::QPoly g;
    if (const auto& rel = r.relation(0)) {
      g = rel->lower;
      g.push_back(1);
    }
    for (const auto& dv : q.d_values) {
      detail::QPoly p;
      for (const auto& [e, c] : dv.terms()) {
        if (p.size() <= static_cast<std::size_t>(e[0])) p.resize(static_cast<std::size_t>(e[0]) + 1);
        p[static_cast<std::size_t>(e[0])] = c;
      }
      g = detail::qpoly_gcd(g, p);
    }
    if (g.empty()) {
      out.descriptor = r.descriptor();
    } else if (g.size() == 1) {
      out.descriptor = "zero";
    } else {
      const Ring poly = Ring::polynomial(Ring::rationals(), {r.vars()[0]});
      Element::Terms t;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0) t[Exponents{static_cast<std::int32_t>(i)}] = g[i];
      out.descriptor = "quot(" + poly.descriptor() + "; " + poly.make(t).to_string() + ")";
    }
    return out;
  }
  return std::nullopt;
}

/// pi_0 by enumeration: the ideal generated by the d-values and its cosets.
template <class Ops>
Pi0<Ops> pi0_enumerate(const QuasiIdeal<Ops>& q, std::size_t limit = 1'000'000) {
  using Value = typename Ops::Value;
  Pi0<Ops> out;
  const auto elems = q.ops.enumerate(limit);
  std::vector<Value> ideal{q.ops.zero()};
  auto contains = [&](const std::vector<Value>& set, const Value& v) {
    return std::any_of(set.begin(), set.end(), [&](const Value& w) { return q.ops.equal(v, w); });
  };
  for (const auto& dv : q.d_values) {
    std::vector<Value> multiples;
    for (const auto& r : elems) {
      auto m = q.ops.mul(r, dv);
      if (!contains(multiples, m)) multiples.push_back(std::move(m));
    }
    std::vector<Value> next;
    for (const auto& a : ideal)
      for (const auto& b : multiples) {
        auto s = q.ops.add(a, b);
        if (!contains(next, s)) next.push_back(std::move(s));
      }
    ideal = std::move(next);
  }
  std::vector<bool> taken(elems.size(), false);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (taken[i]) continue;
    out.classes.push_back(elems[i]);
    for (const auto& a : ideal) {
      const auto w = q.ops.add(elems[i], a);
      for (std::size_t j = i; j < elems.size(); ++j) {
        if (!taken[j] && q.ops.equal(elems[j], w)) {
          taken[j] = true;
          break;
        }
      }
    }
  }
  out.ideal = std::move(ideal);
  out.order = Integer(static_cast<unsigned long>(out.classes.size()));
  out.descriptor = "quotient of " + q.ops.descriptor() + " of order " + out.order->get_str();
  if (out.classes.size() == 1) out.descriptor = "zero";
  return out;
}

template <class Ops>
Pi0<Ops> cone_pi0(const QuasiIdeal<Ops>& q, std::size_t limit = 1'000'000) {
  if constexpr (std::is_same_v<Ops, ElementOps>) {
    if (auto s = pi0_symbolic(q)) {
      if (q.ops.is_finite()) {
        auto e = pi0_enumerate(q, limit);
        e.descriptor = s->descriptor;
        return e;
      }
      return *s;
    }
  }
  if (q.ops.is_finite()) return pi0_enumerate(q, limit);
  throw Unsupported("pi_0 of a cone over " + q.ops.descriptor());
}

/// The kernel of d, enumerated (finite base only).
template <class Ops>
std::vector<typename QuasiIdeal<Ops>::ModuleElem> cone_kernel(const QuasiIdeal<Ops>& q,
                                                               std::size_t limit = 1'000'000) {
  std::vector<typename QuasiIdeal<Ops>::ModuleElem> out;
  for (const auto& x : module_enumerate(q, limit))
    if (q.ops.equal(q.d(x), q.ops.zero())) out.push_back(x);
  return out;
}

/// Presents the ideal (gens) of a finite ring as a quasi-ideal with d = inclusion:
/// free on the generators modulo all syzygies.
inline QuasiIdeal<ElementOps> ideal_as_quasi_ideal(const Ring& r, const std::vector<Element>& gens,
                                                   std::size_t limit = 1'000'000) {
  QuasiIdeal<ElementOps> q{ElementOps{r}, gens, {}};
  if (!r.is_finite()) {
    if (gens.size() > 1) throw Unsupported("syzygies of ideals need a finite base ring");
    return q;
  }
  // Keep only syzygies not already spanned by the earlier ones.
  for (const auto& x : module_enumerate(q, limit)) {
    if (!q.d(x).is_zero() || q.module_equal(x, q.module_zero())) continue;
    q.relations.push_back(x);
    q.span_cache.reset();
  }
  return q;
}

}  // namespace wittforge
