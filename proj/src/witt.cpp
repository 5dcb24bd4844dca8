#include "wittforge/witt.hpp"

#include "wittforge/errors.hpp"

namespace wittforge {

namespace {

Integer as_integer(IndexSet::Index n) { return Integer(static_cast<unsigned long>(n)); }

void require_compatible(const WittVector& a, const WittVector& b) {
  if (!(a.index_set() == b.index_set())) {
    throw RingMismatch("Witt vectors over different index sets {" + a.index_set().key() + "} and {" +
                        b.index_set().key() + "}");
  }
  if (!(a.ring() == b.ring())) {
    throw RingMismatch("Witt vectors over different rings: " + a.ring().descriptor() + " vs " +
                       b.ring().descriptor());
  }
}

bool scalar_integral_ring(const Ring& r) {
  return r.num_vars() == 0 && r.base_kind() != BaseKind::rationals;
}

Integer to_integer(const Element& e) {
  auto v = e.constant_value();
  return v->get_num();
}

std::vector<Element> eval_family(const UniversalFamily& fam, const std::vector<Element>& values, const Ring& r) {
  std::vector<Element> out;
  out.reserve(fam.polys.size());
  if (scalar_integral_ring(r)) {
    std::vector<Integer> ints;
    ints.reserve(values.size());
    for (const auto& v : values) ints.push_back(to_integer(v));
    for (const auto& p : fam.polys) {
      if (r.base_kind() == BaseKind::zmod) {
        out.push_back(r.from_integer(p.eval_mod(ints, r.modulus())));
      } else {
        out.push_back(r.from_integer(p.eval_integer(ints)));
      }
    }
    return out;
  }
  for (const auto& p : fam.polys) out.push_back(p.eval(values, r));
  return out;
}

bool use_ghost(const Ring& r, WittStrategy s) {
  switch (s) {
    case WittStrategy::ghost: return true;
    case WittStrategy::polynomial: return false;
    case WittStrategy::automatic: return r.is_torsion_free();
  }
  return false;
}

}  // namespace

WittVector::WittVector(IndexSet e, Ring ring, std::vector<Element> coords)
    : e_(std::move(e)), ring_(std::move(ring)), coords_(std::move(coords)) {
  if (coords_.size() != e_.size()) {
    throw ValidationError("Witt vector needs " + std::to_string(e_.size()) + " coordinates, got " +
                          std::to_string(coords_.size()));
  }
  for (auto& c : coords_) {
    if (!(c.ring() == ring_)) throw RingMismatch("Witt coordinate outside " + ring_.descriptor());
  }
}

const Element& WittVector::at(IndexSet::Index n) const {
  auto pos = e_.position(n);
  if (!pos) throw ValidationError("index " + std::to_string(n) + " not in {" + e_.key() + "}");
  return coords_[*pos];
}

bool WittVector::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

std::string WittVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ", " : "") + coords_[i].to_string();
  return s + ")";
}

bool WittVector::operator==(const WittVector& other) const {
  return e_ == other.e_ && ring_ == other.ring_ && coords_ == other.coords_;
}

WittVector witt_zero(const IndexSet& e, const Ring& r) {
  return WittVector(e, r, std::vector<Element>(e.size(), r.zero()));
}

WittVector witt_one(const IndexSet& e, const Ring& r) { return teichmuller(r.one(), e); }

WittVector witt_from_integer(const IndexSet& e, const Ring& r, const Integer& k) {
  const Ring z = Ring::integers();
  const WittVector over_z = unghost(std::vector<Element>(e.size(), z.from_integer(k)), e, z);
  std::vector<Element> coords;
  for (const auto& c : over_z.coords()) coords.push_back(r.from_integer(to_integer(c)));
  return WittVector(e, r, std::move(coords));
}

WittVector witt_parse(const IndexSet& e, const Ring& r, const std::vector<std::string>& coords) {
  if (coords.size() != e.size()) {
    throw ValidationError("expected " + std::to_string(e.size()) + " coordinates for index set {" + e.key() +
                          "}, got " + std::to_string(coords.size()));
  }
  std::vector<Element> out;
  for (const auto& c : coords) out.push_back(r.parse_element(c));
  return WittVector(e, r, std::move(out));
}

WittVector witt_random(const IndexSet& e, const Ring& r, std::mt19937_64& rng, int bound) {
  std::vector<Element> coords;
  for (std::size_t i = 0; i < e.size(); ++i) coords.push_back(r.random(rng, bound));
  return WittVector(e, r, std::move(coords));
}

std::vector<WittVector> witt_enumerate(const IndexSet& e, const Ring& r, std::size_t limit) {
  const auto elems = r.enumerate(limit);
  Integer total = 1;
  for (std::size_t i = 0; i < e.size(); ++i) total *= static_cast<unsigned long>(elems.size());
  if (total > Integer(static_cast<unsigned long>(limit))) {
    throw BudgetExceeded("W_E(R) has " + total.get_str() + " elements, over the budget of " + std::to_string(limit));
  }
  std::vector<WittVector> out;
  std::vector<std::size_t> digits(e.size(), 0);
  while (true) {
    std::vector<Element> coords;
    for (auto d : digits) coords.push_back(elems[d]);
    out.emplace_back(e, r, std::move(coords));
    std::size_t pos = digits.size();
    bool carry = true;
    while (carry && pos > 0) {
      --pos;
      if (++digits[pos] < elems.size()) {
        carry = false;
      } else {
        digits[pos] = 0;
      }
    }
    if (carry) return out;
  }
}

std::vector<Element> ghost(const WittVector& a) {
  const auto& idx = a.index_set().elements();
  std::vector<Element> g;
  g.reserve(idx.size());
  for (auto n : idx) {
    Element acc = a.ring().zero();
    for (std::size_t j = 0; j < idx.size() && idx[j] <= n; ++j) {
      const auto d = idx[j];
      if (n % d) continue;
      acc = acc + scale(pow(a.coords()[j], n / d), as_integer(d));
    }
    g.push_back(std::move(acc));
  }
  return g;
}

WittVector unghost(const std::vector<Element>& w, const IndexSet& e, const Ring& r) {
  if (w.size() != e.size()) throw ValidationError("ghost vector length does not match index set");
  if (scalar_integral_ring(r) && r.base_kind() == BaseKind::integers) {
    std::vector<Integer> ints;
    for (const auto& x : w) ints.push_back(to_integer(x));
    if (!dwork_check(ints, e)) throw PreconditionError("ghost vector is not integral: a Dwork congruence fails");
  }
  const auto& idx = e.elements();
  std::vector<Element> x;
  x.reserve(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto n = idx[i];
    Element rest = w[i];
    for (std::size_t j = 0; j < i; ++j) {
      const auto d = idx[j];
      if (n % d) continue;
      rest = rest - scale(pow(x[j], n / d), as_integer(d));
    }
    x.push_back(exact_div(rest, as_integer(n)));
  }
  return WittVector(e, r, std::move(x));
}

WittVector witt_arith(ArithOp op, const WittVector& a, const WittVector& b, WittStrategy s) {
  switch (op) {
    case ArithOp::add: return witt_add(a, b, s);
    case ArithOp::sub: return witt_sub(a, b, s);
    case ArithOp::mul: return witt_mul(a, b, s);
    case ArithOp::neg: return witt_neg(a, s);
  }
  return a;
}

namespace {

WittVector binary_op(UniversalOp op, const WittVector& a, const WittVector& b, WittStrategy s) {
  require_compatible(a, b);
  const Ring& r = a.ring();
  const IndexSet& e = a.index_set();
  if (use_ghost(r, s)) {
    auto ga = ghost(a);
    auto gb = ghost(b);
    for (std::size_t i = 0; i < ga.size(); ++i) ga[i] = op == UniversalOp::sum ? ga[i] + gb[i] : ga[i] * gb[i];
    return unghost(ga, e, r);
  }
  auto fam = universal_family(e, op);
  std::vector<Element> vars = a.coords();
  vars.insert(vars.end(), b.coords().begin(), b.coords().end());
  return WittVector(e, r, eval_family(*fam, vars, r));
}

}  // namespace

WittVector witt_add(const WittVector& a, const WittVector& b, WittStrategy s) {
  return binary_op(UniversalOp::sum, a, b, s);
}

WittVector witt_mul(const WittVector& a, const WittVector& b, WittStrategy s) {
  return binary_op(UniversalOp::product, a, b, s);
}

WittVector witt_neg(const WittVector& a, WittStrategy s) {
  const Ring& r = a.ring();
  if (use_ghost(r, s)) {
    auto g = ghost(a);
    for (auto& x : g) x = -x;
    return unghost(g, a.index_set(), r);
  }
  auto fam = universal_family(a.index_set(), UniversalOp::negation);
  return WittVector(a.index_set(), r, eval_family(*fam, a.coords(), r));
}

WittVector witt_sub(const WittVector& a, const WittVector& b, WittStrategy s) {
  return witt_add(a, witt_neg(b, s), s);
}

WittVector frobenius(IndexSet::Index n, const WittVector& a, WittStrategy s) {
  const IndexSet& e = a.index_set();
  if (!e.contains(n)) throw ValidationError("Frobenius index " + std::to_string(n) + " not in {" + e.key() + "}");
  const IndexSet target = e.quotient_by(n);
  if (n == 1) return WittVector(target, a.ring(), a.coords());
  const Ring& r = a.ring();
  if (use_ghost(r, s)) {
    const auto g = ghost(a);
    std::vector<Element> h;
    for (auto d : target.elements()) h.push_back(g[*e.position(n * d)]);
    return unghost(h, target, r);
  }
  auto fam = universal_family(e, UniversalOp::frobenius, n);
  return WittVector(target, r, eval_family(*fam, a.coords(), r));
}

WittVector verschiebung(IndexSet::Index n, const WittVector& a, const IndexSet& e) {
  if (!e.contains(n)) throw ValidationError("Verschiebung index " + std::to_string(n) + " not in {" + e.key() + "}");
  if (!(a.index_set() == e.quotient_by(n))) {
    throw ValidationError("Verschiebung V_" + std::to_string(n) + " expects a vector over {" + e.quotient_by(n).key() +
                          "}, got {" + a.index_set().key() + "}");
  }
  std::vector<Element> coords;
  for (auto m : e.elements()) coords.push_back(m % n == 0 ? a.at(m / n) : a.ring().zero());
  return WittVector(e, a.ring(), std::move(coords));
}

WittVector teichmuller(const Element& r, const IndexSet& e) {
  std::vector<Element> coords(e.size(), r.ring().zero());
  coords[0] = r;
  return WittVector(e, r.ring(), std::move(coords));
}

bool dwork_check(const std::vector<Integer>& w, const IndexSet& e) {
  if (w.size() != e.size()) throw ValidationError("ghost vector length does not match index set");
  for (auto p : e.primes()) {
    for (auto m : e.elements()) {
      if (!e.contains(m * p)) continue;
      Integer mod;
      mpz_ui_pow_ui(mod.get_mpz_t(), p, 1 + valuation(m, p));
      const Integer diff = w[*e.position(m * p)] - w[*e.position(m)];
      if (!mpz_divisible_p(diff.get_mpz_t(), mod.get_mpz_t())) return false;
    }
  }
  return true;
}

WittVector witt_restrict(const WittVector& a, const IndexSet& sub) {
  if (!sub.is_subset_of(a.index_set())) throw ValidationError("restriction target is not a subset of E");
  std::vector<Element> coords;
  for (auto n : sub.elements()) coords.push_back(a.at(n));
  return WittVector(sub, a.ring(), std::move(coords));
}

WittVector witt_change_ring(const WittVector& a, const Ring& target) {
  std::vector<Element> coords;
  for (const auto& c : a.coords()) coords.push_back(target.coerce(c));
  return WittVector(a.index_set(), target, std::move(coords));
}

WittVector witt_scale(const WittVector& a, const Integer& k) {
  return witt_mul(witt_from_integer(a.index_set(), a.ring(), k), a);
}

}  // namespace wittforge
