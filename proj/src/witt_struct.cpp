#include "wittforge/witt_struct.hpp"

#include <algorithm>
#include <tuple>

#include "wittforge/errors.hpp"

namespace wittforge {

namespace {

Integer as_integer(IndexSet::Index n) { return Integer(static_cast<unsigned long>(n)); }

std::optional<IndexSet::Index> prime_power_base(IndexSet::Index n) {
  if (n < 2) return std::nullopt;
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return std::nullopt;
  return ps.front();
}

}  // namespace

// ---------------------------------------------------------------------------
// Contexts

PredicateContext PredicateContext::local(IndexSet::Index p, const Ring& r, const IndexSet& e) {
  if (!is_prime(p)) throw ValidationError("local context needs a prime, got " + std::to_string(p));
  PredicateContext ctx;
  ctx.kind = Kind::local;
  ctx.p = p;
  ctx.ring = r;
  ctx.index_set = e;
  for (auto n : e.elements()) {
    for (auto ell : prime_divisors(n)) {
      if (ell == p || ctx.inverses.count(ell)) continue;
      auto inv = elem_is_unit(r.from_integer(as_integer(ell)));
      if (!inv) {
        throw PreconditionError("missing invertibility certificate: " + std::to_string(ell) + " is not a unit in " +
                                r.descriptor());
      }
      ctx.inverses.emplace(ell, *inv);
    }
  }
  return ctx;
}

PredicateContext PredicateContext::rational(const Ring& r, const IndexSet& e) {
  PredicateContext ctx;
  ctx.kind = Kind::rational;
  ctx.ring = r;
  ctx.index_set = e;
  for (auto n : e.elements()) {
    for (auto ell : prime_divisors(n)) {
      if (ctx.inverses.count(ell)) continue;
      auto inv = elem_is_unit(r.from_integer(as_integer(ell)));
      if (!inv) {
        throw PreconditionError("rational context needs " + std::to_string(ell) + " invertible in " + r.descriptor());
      }
      ctx.inverses.emplace(ell, *inv);
    }
  }
  return ctx;
}

PredicateContext PredicateContext::automatic(const Ring& r, const IndexSet& e) {
  std::vector<IndexSet::Index> bad;
  std::vector<IndexSet::Index> primes;
  for (auto n : e.elements())
    for (auto ell : prime_divisors(n))
      if (std::find(primes.begin(), primes.end(), ell) == primes.end()) primes.push_back(ell);
  std::sort(primes.begin(), primes.end());
  for (auto ell : primes)
    if (!elem_is_unit(r.from_integer(as_integer(ell)))) bad.push_back(ell);
  if (bad.empty()) return rational(r, e);
  if (bad.size() == 1) return local(bad.front(), r, e);
  throw PreconditionError("no usable context: several primes of E are non-units in " + r.descriptor());
}

Element PredicateContext::inverse_of(IndexSet::Index n) const {
  Element acc = ring.one();
  for (auto ell : prime_divisors(n)) {
    auto it = inverses.find(ell);
    if (it == inverses.end()) throw PreconditionError("no inverse certified for " + std::to_string(ell));
    IndexSet::Index m = n;
    while (m % ell == 0) {
      acc = acc * it->second;
      m /= ell;
    }
  }
  return acc;
}

bool PredicateContext::verify() const {
  for (const auto& [ell, inv] : inverses)
    if (!(ring.from_integer(as_integer(ell)) * inv).is_one()) return false;
  return true;
}

const WittVector& DecomposedWitt::factor(IndexSet::Index n) const {
  auto it = std::find(labels.begin(), labels.end(), n);
  if (it == labels.end()) throw ValidationError("no factor labelled " + std::to_string(n));
  return factors[static_cast<std::size_t>(it - labels.begin())];
}

// ---------------------------------------------------------------------------
// W[F], annihilators, units

bool is_in_wf(const WittVector& a) {
  for (auto p : a.index_set().primes())
    if (!frobenius(p, a).is_zero()) return false;
  return true;
}

bool wf_annihilator_check(const WittVector& a, AnnihilatorDirection dir, std::size_t limit) {
  const IndexSet& e = a.index_set();
  const Ring& r = a.ring();
  if (dir == AnnihilatorDirection::kills_vw) {
    for (auto p : e.primes()) {
      for (const auto& b : witt_enumerate(e.quotient_by(p), r, limit)) {
        if (!witt_mul(a, verschiebung(p, b, e)).is_zero()) return false;
      }
    }
    return true;
  }
  for (const auto& c : witt_enumerate(e, r, limit)) {
    if (is_in_wf(c) && !witt_mul(a, c).is_zero()) return false;
  }
  return true;
}

std::optional<WittVector> witt_is_unit(const WittVector& a) {
  const Ring& r = a.ring();
  const IndexSet& e = a.index_set();
  const auto g = ghost(a);
  std::vector<Element> ginv;
  for (const auto& x : g) {
    auto inv = elem_is_unit(x);
    if (!inv) return std::nullopt;
    ginv.push_back(*inv);
  }
  // The product coordinate m_n(a, b) is g_n(a) b_n plus terms in b_d, d < n.
  std::vector<Element> b(e.size(), r.zero());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto trial = witt_mul(a, WittVector(e, r, b), WittStrategy::polynomial);
    const Element target = i == 0 ? r.one() : r.zero();
    b[i] = (target - trial.coords()[i]) * ginv[i];
  }
  WittVector inv(e, r, std::move(b));
  if (!(witt_mul(a, inv) == witt_one(e, r))) throw Error("unit inverse failed verification");
  return inv;
}

// ---------------------------------------------------------------------------
// Local decomposition

namespace {

void require_local(const PredicateContext& ctx, const IndexSet& e) {
  if (ctx.kind != PredicateContext::Kind::local) throw PreconditionError("local decomposition needs a p-local context");
  if (!(ctx.index_set == e)) throw ValidationError("context index set differs from the vector's");
}

}  // namespace

DecomposedWitt local_decompose(const WittVector& a, const PredicateContext& ctx) {
  require_local(ctx, a.index_set());
  if (!(a.ring() == ctx.ring)) throw RingMismatch("context ring differs from the vector's");
  const IndexSet& e = a.index_set();
  const IndexSet ep = e.powers_of(ctx.p);
  DecomposedWitt d;
  d.p = ctx.p;
  d.index_set = e;
  const IndexSet coprime = e.coprime_to(ctx.p);
  for (auto n : coprime.elements()) {
    d.labels.push_back(n);
    d.factors.push_back(witt_restrict(frobenius(n, a), ep));
  }
  return d;
}

WittVector local_recompose(const DecomposedWitt& d, const PredicateContext& ctx) {
  require_local(ctx, d.index_set);
  const IndexSet& e = d.index_set;
  const Ring& r = ctx.ring;
  std::vector<Element> coords(e.size(), r.zero());
  // (F_n a)_{p^k} = n a_{n p^k} + terms in a_d with d | n p^k, d < n p^k.
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto big = e.elements()[i];
    IndexSet::Index n = big;
    IndexSet::Index q = 1;
    while (n % ctx.p == 0) {
      n /= ctx.p;
      q *= ctx.p;
    }
    coords[i] = r.zero();
    const WittVector partial(e, r, coords);
    const Element c = frobenius(n, partial).at(q);
    const Element b = d.factor(n).at(q);
    coords[i] = (b - c) * ctx.inverse_of(n);
  }
  return WittVector(e, r, std::move(coords));
}

DecomposedWitt decomposed_zero(const PredicateContext& ctx) {
  return local_decompose(witt_zero(ctx.index_set, ctx.ring), ctx);
}

DecomposedWitt decomposed_one(const PredicateContext& ctx) {
  return local_decompose(witt_one(ctx.index_set, ctx.ring), ctx);
}

WittVector v_one_apply(const DecomposedWitt& w, const PredicateContext& ctx) {
  require_local(ctx, w.index_set);
  const IndexSet ep = w.index_set.powers_of(ctx.p);
  if (!ep.contains(ctx.p)) throw PreconditionError("p does not belong to the index set");
  DecomposedWitt out = w;
  auto& f1 = out.factors[0];
  f1 = verschiebung(ctx.p, frobenius(ctx.p, f1), ep);
  return local_recompose(out, ctx);
}

// ---------------------------------------------------------------------------
// Predicates

bool is_hodge_tate(const WittVector& v, const PredicateContext& ctx) {
  if (ctx.kind == PredicateContext::Kind::rational) {
    const auto g = ghost(v);
    if (!g[0].is_zero()) return false;
    for (std::size_t i = 1; i < g.size(); ++i)
      if (!elem_is_unit(g[i])) return false;
    return true;
  }
  const auto d = local_decompose(v, ctx);
  const auto& f1 = d.factors[0];
  if (f1.index_set().size() < 2) throw PreconditionError("p does not belong to the index set");
  if (!f1.at(1).is_zero() || !elem_is_unit(f1.at(ctx.p))) return false;
  for (std::size_t i = 1; i < d.factors.size(); ++i)
    if (!witt_is_unit(d.factors[i])) return false;
  return true;
}

std::optional<DistinguishedWitness> is_distinguished(const WittVector& xi, const PredicateContext& ctx) {
  const Element x = xi.at(1);
  if (!elem_is_nilpotent(x)) return std::nullopt;
  WittVector v = witt_sub(xi, teichmuller(x, xi.index_set()));
  if (!is_hodge_tate(v, ctx)) return std::nullopt;
  return DistinguishedWitness{x, std::move(v)};
}

// ---------------------------------------------------------------------------
// Non-freeness obstruction

NonfreeCertificate v_nonfree_obstruction(const IndexSet& e, std::size_t bound) {
  if (e.primes().empty()) throw PreconditionError("index set {" + e.key() + "} contains no prime");
  const auto& idx = e.elements();
  const std::size_t free_slots = idx.size() - 1;
  if (free_slots >= 63 || (std::size_t{1} << free_slots) > bound) {
    throw BudgetExceeded("2^" + std::to_string(free_slots) + " sign profiles exceed the budget");
  }
  struct Congruence {
    IndexSet::Index n, m, p;
    Integer modulus;
  };
  std::vector<Congruence> congs;
  for (auto p : e.primes()) {
    for (auto m : idx) {
      if (!e.contains(m * p)) continue;
      Integer mod;
      mpz_ui_pow_ui(mod.get_mpz_t(), p, 1 + valuation(m, p));
      congs.push_back({m * p, m, p, mod});
    }
  }
  std::sort(congs.begin(), congs.end(), [](const auto& a, const auto& b) {
    return std::tie(a.n, a.p) < std::tie(b.n, b.p);
  });
  std::vector<bool> always_fails(congs.size(), true);
  NonfreeCertificate cert;
  const std::size_t total = std::size_t{1} << free_slots;
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<Integer> g(idx.size());
    g[0] = 0;
    for (std::size_t i = 1; i < idx.size(); ++i) {
      const auto base = prime_power_base(idx[i]);
      Integer mag = base ? as_integer(*base) : Integer(1);
      g[i] = (mask >> (i - 1)) & 1 ? Integer(-mag) : mag;
    }
    ++cert.profiles_checked;
    bool ok = true;
    for (std::size_t c = 0; c < congs.size(); ++c) {
      const Integer diff = g[*e.position(congs[c].n)] - g[*e.position(congs[c].m)];
      if (mpz_divisible_p(diff.get_mpz_t(), congs[c].modulus.get_mpz_t())) {
        always_fails[c] = false;
      } else {
        ok = false;
      }
    }
    if (ok && !cert.satisfiable) {
      cert.satisfiable = true;
      cert.ghost_values = g;
      const Ring z = Ring::integers();
      std::vector<Element> ge;
      for (const auto& x : g) ge.push_back(z.from_integer(x));
      const auto w = unghost(ge, e, z);
      for (const auto& c : w.coords()) cert.coords.push_back(c.constant_value()->get_num());
    }
  }
  if (!cert.satisfiable) {
    for (std::size_t c = 0; c < congs.size(); ++c) {
      if (always_fails[c]) {
        cert.n = congs[c].n;
        cert.m = congs[c].m;
        cert.p = congs[c].p;
        break;
      }
    }
  }
  return cert;
}

}  // namespace wittforge
