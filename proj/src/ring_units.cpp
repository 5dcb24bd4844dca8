#include <algorithm>

#include "wittforge/errors.hpp"
#include "wittforge/linalg.hpp"
#include "wittforge/ring.hpp"

namespace wittforge {

namespace {

bool all_bound(const Ring& r) {
  for (std::size_t i = 0; i < r.num_vars(); ++i)
    if (!r.relation(i)) return false;
  return true;
}

bool has_free_and_bound(const Ring& r) {
  return r.has_relations() && !all_bound(r);
}

std::vector<Exponents> bound_basis(const Ring& r) {
  std::vector<Exponents> basis{Exponents(r.num_vars(), 0)};
  for (std::size_t i = 0; i < r.num_vars(); ++i) {
    std::vector<Exponents> next;
    for (const auto& e : basis) {
      for (int k = 0; k < r.relation(i)->degree; ++k) {
        Exponents f = e;
        f[i] = k;
        next.push_back(std::move(f));
      }
    }
    basis = std::move(next);
  }
  return basis;
}

Element monomial(const Ring& r, const Exponents& e, const Rational& c) {
  Element::Terms t;
  t[e] = c;
  return r.make(t);
}

// Units of a ring that is free of finite rank over its scalars.
std::optional<Element> finite_rank_inverse(const Element& a) {
  const Ring& r = a.ring();
  const auto basis = bound_basis(r);
  const std::size_t n = basis.size();
  linalg::Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Element col = a * monomial(r, basis[j], 1);
    for (std::size_t i = 0; i < n; ++i) {
      auto it = col.terms().find(basis[i]);
      if (it != col.terms().end()) m(i, j) = it->second;
    }
  }
  const Rational det = linalg::determinant(m);
  Rational scale_by = 1;
  switch (r.base_kind()) {
    case BaseKind::integers:
      if (det != 1 && det != -1) return std::nullopt;
      break;
    case BaseKind::rationals:
      if (det == 0) return std::nullopt;
      break;
    case BaseKind::zmod: {
      if (det == 0) return std::nullopt;
      auto inv = mod_inverse(det.get_num(), r.modulus());
      if (!inv) return std::nullopt;
      // x = det^{-1} adj(m) e0 and adj(m) = det m^{-1} is integral.
      scale_by = det * Rational(*inv);
      break;
    }
  }
  auto minv = linalg::inverse(m);
  if (!minv) return std::nullopt;
  Element::Terms t;
  for (std::size_t i = 0; i < n; ++i) {
    Rational c = (*minv)(i, 0) * scale_by;
    c.canonicalize();
    if (r.base_kind() == BaseKind::zmod) {
      // Coefficients of adj(m) e0 times det^{-1}: integral after reduction.
      Integer num = c.get_num();
      Integer den = c.get_den();
      auto dinv = mod_inverse(den, r.modulus());
      if (!dinv) return std::nullopt;
      c = Rational(mod_floor(num * *dinv, r.modulus()));
    }
    if (c != 0) t[basis[i]] = c;
  }
  return r.make(t);
}

// A single term with a unit coefficient on inverted variables only.
std::optional<Element> single_term_inverse(const Element& a) {
  const Ring& r = a.ring();
  if (a.terms().size() != 1) return std::nullopt;
  const auto& [e, c] = *a.terms().begin();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0 && !r.is_inverted(i)) return std::nullopt;
  Rational ci;
  switch (r.base_kind()) {
    case BaseKind::integers:
      if (c != 1 && c != -1) return std::nullopt;
      ci = c;
      break;
    case BaseKind::rationals:
      ci = 1 / c;
      break;
    case BaseKind::zmod: {
      auto inv = mod_inverse(c.get_num(), r.modulus());
      if (!inv) return std::nullopt;
      ci = Rational(*inv);
      break;
    }
  }
  Exponents ne = e;
  for (auto& x : ne) x = -x;
  return monomial(r, ne, ci);
}

// Z/p^k[vars]: a unit is (unit term) + p*(anything); invert by a finite series.
std::optional<Element> prime_power_inverse(const Element& a, const Integer& p, unsigned k) {
  const Ring& r = a.ring();
  std::optional<Element> lead;
  for (const auto& [e, c] : a.terms()) {
    if (c.get_num() % p == 0) continue;
    if (lead) return std::nullopt;
    lead = monomial(r, e, c);
  }
  if (!lead) return std::nullopt;
  auto u_inv = single_term_inverse(*lead);
  if (!u_inv) return std::nullopt;
  const Element nil = (a - *lead) * *u_inv;
  Element sum = r.one();
  Element power = r.one();
  for (unsigned j = 1; j < k; ++j) {
    power = power * -nil;
    sum = sum + power;
  }
  return sum * *u_inv;
}

std::optional<Element> zmod_poly_inverse(const Element& a) {
  const Ring& r = a.ring();
  std::vector<std::string> inv_names;
  for (std::size_t i = 0; i < r.num_vars(); ++i)
    if (r.is_inverted(i)) inv_names.push_back(r.vars()[i]);
  Element::Terms acc;
  Integer modulus_so_far = 1;
  for (const auto& [p, k] : factorize(r.modulus())) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), k);
    const Ring local = Ring::polynomial(Ring::zmod(pk), r.vars(), inv_names);
    auto inv = prime_power_inverse(local.coerce(a), p, k);
    if (!inv) return std::nullopt;
    // CRT merge coefficientwise.
    Element::Terms merged;
    std::map<Exponents, std::pair<Integer, Integer>, MonomialOrder> both;
    for (const auto& [e, c] : acc) both[e].first = c.get_num();
    for (const auto& [e, c] : inv->terms()) both[e].second = c.get_num();
    const Integer m1 = modulus_so_far;
    const Integer m1_inv = *mod_inverse(m1, pk);
    for (const auto& [e, cs] : both) {
      const auto& [x1, x2] = cs;
      Integer t = mod_floor((x2 - x1) * m1_inv, pk);
      merged[e] = Rational(x1 + m1 * t);
    }
    acc = std::move(merged);
    modulus_so_far *= pk;
  }
  return r.make(acc);
}

}  // namespace

std::optional<Element> elem_is_unit(const Element& a) {
  const Ring& r = a.ring();
  if (a.is_zero()) return std::nullopt;
  if (r.num_vars() == 0) return single_term_inverse(a);
  if (r.has_relations()) {
    if (has_free_and_bound(r))
      throw Unsupported("unit test in quotient rings with free variables: " + r.descriptor());
    return finite_rank_inverse(a);
  }
  if (r.base_kind() == BaseKind::zmod) return zmod_poly_inverse(a);
  return single_term_inverse(a);
}

std::optional<unsigned> elem_is_nilpotent(const Element& a) {
  const Ring& r = a.ring();
  if (a.is_zero()) return 1u;
  if (r.base_kind() != BaseKind::zmod && !r.has_relations()) return std::nullopt;
  // Nilpotents of the bound part form an ideal J with J^(rank * e) = 0.
  unsigned e = 1;
  if (r.base_kind() == BaseKind::zmod) {
    for (const auto& [p, k] : factorize(r.modulus())) e = std::max(e, k);
  }
  const std::size_t bound = r.bound_rank() * e;
  Element power = a;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (power.is_zero()) return static_cast<unsigned>(k);
    power = power * a;
  }
  return std::nullopt;
}

}  // namespace wittforge
