#include "wittforge/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wittforge/errors.hpp"

namespace wittforge {

namespace {

std::int64_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

void require_same_ring(const Element& a, const Element& b) {
  if (!(a.ring() == b.ring())) {
    throw RingMismatch("operands belong to different rings: " + a.ring().descriptor() +
                       " vs " + b.ring().descriptor());
  }
}

}  // namespace

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  return b < a;
}

Integer mod_floor(const Integer& n, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<Integer> mod_inverse(const Integer& a, const Integer& m) {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) return std::nullopt;
  return mod_floor(inv, m);
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  std::vector<std::pair<Integer, unsigned>> out;
  Integer rest = abs(n);
  for (Integer p = 2; p * p <= rest; ++p) {
    unsigned k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (k > 0) out.emplace_back(p, k);
  }
  if (rest > 1) out.emplace_back(rest, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Ring construction

Ring Ring::integers() {
  auto d = std::make_shared<detail::RingData>();
  d->base = BaseKind::integers;
  return Ring(std::move(d));
}

Ring Ring::rationals() {
  auto d = std::make_shared<detail::RingData>();
  d->base = BaseKind::rationals;
  return Ring(std::move(d));
}

Ring Ring::zmod(const Integer& modulus) {
  if (modulus < 2) throw ValidationError("zmod requires N >= 2, got " + modulus.get_str());
  auto d = std::make_shared<detail::RingData>();
  d->base = BaseKind::zmod;
  d->modulus = modulus;
  return Ring(std::move(d));
}

Ring Ring::polynomial(const Ring& base, const std::vector<std::string>& vars,
                      const std::vector<std::string>& inverted) {
  if (base.has_relations()) {
    throw ValidationError("polynomial rings over quotient rings are not supported");
  }
  auto d = std::make_shared<detail::RingData>(*base.data_);
  for (const auto& v : vars) {
    if (v.empty()) throw ValidationError("empty variable name");
    if (std::find(d->vars.begin(), d->vars.end(), v) != d->vars.end()) {
      throw ValidationError("duplicate variable '" + v + "'");
    }
    d->vars.push_back(v);
    d->inverted.push_back(false);
    d->relations.emplace_back();
  }
  for (const auto& v : inverted) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw ValidationError("inverted variable '" + v + "' is not among the new variables");
    const auto idx = base.num_vars() + static_cast<std::size_t>(it - vars.begin());
    d->inverted[idx] = true;
  }
  return Ring(std::move(d));
}

Ring Ring::quotient(const Ring& poly, const std::vector<Element>& relations) {
  auto d = std::make_shared<detail::RingData>(*poly.data_);
  for (const auto& rel : relations) {
    if (!(rel.ring() == poly)) throw RingMismatch("relation is not an element of the polynomial ring");
    if (rel.is_zero()) throw ValidationError("quotient relations must be nonzero");
    std::optional<std::size_t> var;
    for (const auto& [e, c] : rel.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (var && *var != i) throw Unsupported("only univariate relations are supported: " + rel.to_string());
        var = i;
      }
    }
    if (!var) throw ValidationError("relation is a nonzero constant; the quotient would be the zero ring");
    if (d->inverted[*var]) throw Unsupported("relations in an inverted variable are not supported");
    if (d->relations[*var]) throw Unsupported("at most one relation per variable is supported");
    const auto& [lead_exp, lead_coef] = *rel.terms().rbegin();
    if (lead_coef != 1) throw Unsupported("relations must be monic: " + rel.to_string());
    Relation r;
    r.var = *var;
    r.degree = lead_exp[*var];
    r.lower.assign(static_cast<std::size_t>(r.degree), Rational(0));
    for (const auto& [e, c] : rel.terms()) {
      if (e[*var] < r.degree) r.lower[static_cast<std::size_t>(e[*var])] = c;
    }
    d->relations[*var] = std::move(r);
  }
  return Ring(std::move(d));
}

Ring make_ring(std::string_view descriptor) { return Ring::parse(descriptor); }

bool Ring::has_relations() const {
  return std::any_of(data_->relations.begin(), data_->relations.end(),
                     [](const auto& r) { return r.has_value(); });
}

bool Ring::has_inverted() const {
  return std::any_of(data_->inverted.begin(), data_->inverted.end(), [](bool b) { return b; });
}

std::optional<std::size_t> Ring::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < data_->vars.size(); ++i) {
    if (data_->vars[i] == name) return i;
  }
  return std::nullopt;
}

bool Ring::operator==(const Ring& other) const {
  if (data_ == other.data_) return true;
  const auto& a = *data_;
  const auto& b = *other.data_;
  return a.base == b.base && a.modulus == b.modulus && a.vars == b.vars &&
         a.inverted == b.inverted && a.relations == b.relations;
}

std::string Ring::descriptor() const {
  std::string base;
  switch (data_->base) {
    case BaseKind::integers: base = "integers"; break;
    case BaseKind::rationals: base = "rationals"; break;
    case BaseKind::zmod: base = "zmod:" + data_->modulus.get_str(); break;
  }
  if (data_->vars.empty()) return base;
  std::string out = "poly(" + base + "; ";
  for (std::size_t i = 0; i < data_->vars.size(); ++i) {
    if (i) out += ",";
    out += data_->vars[i];
  }
  if (has_inverted()) {
    out += "; inv ";
    bool first = true;
    for (std::size_t i = 0; i < data_->vars.size(); ++i) {
      if (!data_->inverted[i]) continue;
      if (!first) out += ",";
      out += data_->vars[i];
      first = false;
    }
  }
  out += ")";
  if (!has_relations()) return out;
  // Render each relation as an element of the unreduced polynomial ring.
  auto plain = std::make_shared<detail::RingData>(*data_);
  for (auto& r : plain->relations) r.reset();
  const Ring poly(plain);
  std::string rels;
  for (const auto& r : data_->relations) {
    if (!r) continue;
    Element::Terms t;
    Exponents e(num_vars(), 0);
    e[r->var] = r->degree;
    t[e] = 1;
    for (int j = 0; j < r->degree; ++j) {
      if (r->lower[static_cast<std::size_t>(j)] == 0) continue;
      e[r->var] = j;
      t[e] = r->lower[static_cast<std::size_t>(j)];
    }
    if (!rels.empty()) rels += ", ";
    rels += poly.make(t).to_string();
  }
  return "quot(" + out + "; " + rels + ")";
}

bool Ring::is_finite() const {
  if (data_->base != BaseKind::zmod) return false;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    if (!data_->relations[i]) return false;
  }
  return true;
}

std::optional<Integer> Ring::order() const {
  if (!is_finite()) return std::nullopt;
  Integer n = 1;
  for (std::size_t i = 0; i < bound_rank(); ++i) n *= data_->modulus;
  return n;
}

bool Ring::is_torsion_free() const { return data_->base != BaseKind::zmod; }

Ring Ring::scalar_ring() const {
  switch (data_->base) {
    case BaseKind::integers: return integers();
    case BaseKind::rationals: return rationals();
    case BaseKind::zmod: return zmod(data_->modulus);
  }
  return integers();
}

std::size_t Ring::bound_rank() const {
  std::size_t d = 1;
  for (const auto& r : data_->relations) {
    if (r) d *= static_cast<std::size_t>(r->degree);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Element construction

Element Ring::make(const std::map<Exponents, Rational, MonomialOrder>& raw) const {
  const auto& d = *data_;
  Element::Terms out;
  std::vector<std::pair<Exponents, Rational>> work(raw.begin(), raw.end());
  while (!work.empty()) {
    auto [e, c] = std::move(work.back());
    work.pop_back();
    if (c == 0) continue;
    if (e.size() != d.vars.size()) throw ValidationError("monomial arity does not match ring");
    bool reduced = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 && !d.inverted[i]) {
        throw ValidationError("negative exponent on non-inverted variable '" + d.vars[i] + "'");
      }
      const auto& rel = d.relations[i];
      if (rel && e[i] >= rel->degree) {
        Exponents base = e;
        base[i] -= rel->degree;
        for (int j = 0; j < rel->degree; ++j) {
          const auto& lc = rel->lower[static_cast<std::size_t>(j)];
          if (lc == 0) continue;
          Exponents t = base;
          t[i] += j;
          work.emplace_back(std::move(t), -c * lc);
        }
        reduced = true;
        break;
      }
    }
    if (reduced) continue;
    out[e] += c;
  }
  for (auto it = out.begin(); it != out.end();) {
    Rational& c = it->second;
    c.canonicalize();
    switch (d.base) {
      case BaseKind::integers:
        if (c.get_den() != 1) {
          throw ValidationError("non-integral coefficient " + c.get_str() + " in an integer ring");
        }
        break;
      case BaseKind::rationals: break;
      case BaseKind::zmod: {
        Integer v = c.get_num();
        if (c.get_den() != 1) {
          auto inv = mod_inverse(c.get_den(), d.modulus);
          if (!inv) throw InexactDivision("denominator " + c.get_den().get_str() + " is not a unit mod " + d.modulus.get_str());
          v *= *inv;
        }
        c = Rational(mod_floor(v, d.modulus));
        break;
      }
    }
    if (c == 0) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return Element(*this, std::move(out));
}

Element Ring::zero() const { return Element(*this, {}); }

Element Ring::one() const { return from_integer(1); }

Element Ring::from_integer(const Integer& n) const { return from_rational(Rational(n)); }

Element Ring::from_rational(const Rational& q) const {
  Element::Terms t;
  t[Exponents(num_vars(), 0)] = q;
  return make(t);
}

Element Ring::variable(std::size_t var) const {
  if (var >= num_vars()) throw ValidationError("variable index out of range");
  Element::Terms t;
  Exponents e(num_vars(), 0);
  e[var] = 1;
  t[e] = 1;
  return make(t);
}

Element Ring::variable(std::string_view name) const {
  auto idx = var_index(name);
  if (!idx) throw ValidationError("unknown variable '" + std::string(name) + "'");
  return variable(*idx);
}

Element Ring::coerce(const Element& a) const {
  const Ring& src = a.ring();
  if (src == *this) return a;
  std::vector<std::size_t> map(src.num_vars());
  for (std::size_t i = 0; i < src.num_vars(); ++i) {
    auto idx = var_index(src.vars()[i]);
    if (!idx) throw RingMismatch("cannot coerce: variable '" + src.vars()[i] + "' missing in " + descriptor());
    map[i] = *idx;
  }
  const auto sb = src.base_kind();
  const auto tb = base_kind();
  if (sb == BaseKind::zmod && tb == BaseKind::zmod && src.modulus() % modulus() != 0) {
    throw RingMismatch("no ring map Z/" + src.modulus().get_str() + " -> Z/" + modulus().get_str());
  }
  if (sb == BaseKind::rationals && tb == BaseKind::integers) {
    // Allowed only for integral inputs; make() enforces this.
  }
  Element::Terms t;
  for (const auto& [e, c] : a.terms()) {
    Exponents ne(num_vars(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[map[i]] = e[i];
    t[ne] += c;
  }
  return make(t);
}

std::vector<Element> Ring::enumerate(std::size_t limit) const {
  if (!is_finite()) throw Unsupported("cannot enumerate infinite ring " + descriptor());
  const auto ord = *order();
  if (ord > Integer(static_cast<unsigned long>(limit))) {
    throw BudgetExceeded("ring " + descriptor() + " has " + ord.get_str() + " elements, over the budget of " +
                         std::to_string(limit));
  }
  // Basis monomials: exponents below each relation degree.
  std::vector<Exponents> basis{Exponents(num_vars(), 0)};
  for (std::size_t i = 0; i < num_vars(); ++i) {
    std::vector<Exponents> next;
    for (const auto& e : basis) {
      for (int k = 0; k < data_->relations[i]->degree; ++k) {
        Exponents f = e;
        f[i] = k;
        next.push_back(std::move(f));
      }
    }
    basis = std::move(next);
  }
  const std::size_t n = static_cast<std::size_t>(modulus().get_ui());
  std::vector<std::size_t> digits(basis.size(), 0);
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(ord.get_ui()));
  while (true) {
    Element::Terms t;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (digits[i]) t[basis[i]] = Rational(static_cast<unsigned long>(digits[i]));
    }
    out.push_back(Element(*this, std::move(t)));
    std::size_t pos = basis.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < n) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
    if (basis.empty()) return out;
  }
}

Element Ring::random(std::mt19937_64& rng, int bound) const {
  auto scalar = [&]() -> Rational {
    switch (data_->base) {
      case BaseKind::integers: {
        std::uniform_int_distribution<int> dist(-bound, bound);
        return Rational(dist(rng));
      }
      case BaseKind::rationals: {
        std::uniform_int_distribution<int> num(-bound, bound);
        std::uniform_int_distribution<int> den(1, bound);
        Rational q(num(rng), den(rng));
        q.canonicalize();
        return q;
      }
      case BaseKind::zmod: {
        Integer r;
        // Deterministic given rng: draw 64 bits and reduce.
        const std::uint64_t raw = rng();
        mpz_import(r.get_mpz_t(), 1, 1, sizeof raw, 0, 0, &raw);
        return Rational(mod_floor(r, data_->modulus));
      }
    }
    return Rational(0);
  };
  if (num_vars() == 0) return from_rational(scalar());
  Element::Terms t;
  std::uniform_int_distribution<int> nterms(0, 3);
  const int k = nterms(rng);
  for (int j = 0; j < k; ++j) {
    Exponents e(num_vars(), 0);
    for (std::size_t i = 0; i < num_vars(); ++i) {
      if (data_->relations[i]) {
        std::uniform_int_distribution<int> d(0, data_->relations[i]->degree - 1);
        e[i] = d(rng);
      } else if (data_->inverted[i]) {
        std::uniform_int_distribution<int> d(-2, 2);
        e[i] = d(rng);
      } else {
        std::uniform_int_distribution<int> d(0, 2);
        e[i] = d(rng);
      }
    }
    t[e] += scalar();
  }
  return make(t);
}

// ---------------------------------------------------------------------------
// Element

bool Element::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return c == 1 && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

std::optional<Rational> Element::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  if (!std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) return std::nullopt;
  return c;
}

bool Element::operator==(const Element& other) const {
  return ring_ == other.ring_ && terms_ == other.terms_;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& vars = ring_.vars();
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    std::string term;
    if (mono.empty()) {
      term = c.get_str();
    } else if (c == 1) {
      term = mono;
    } else if (c == -1) {
      term = "-" + mono;
    } else {
      term = c.get_str() + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

Element operator+(const Element& a, const Element& b) {
  require_same_ring(a, b);
  Element::Terms t = a.terms_;
  for (const auto& [e, c] : b.terms_) t[e] += c;
  return a.ring_.make(t);
}

Element operator-(const Element& a) {
  Element::Terms t = a.terms_;
  for (auto& [e, c] : t) c = -c;
  return a.ring_.make(t);
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  require_same_ring(a, b);
  Element::Terms t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      t[e] += ca * cb;
    }
  }
  return a.ring_.make(t);
}

Element pow(const Element& a, unsigned long exponent) {
  Element result = a.ring().one();
  Element base = a;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Element scale(const Element& a, const Integer& n) { return a * a.ring().from_integer(n); }

Element exact_div(const Element& a, const Integer& n) {
  if (n == 0) throw InexactDivision("division by zero");
  const Ring& r = a.ring();
  switch (r.base_kind()) {
    case BaseKind::rationals: return a * r.from_rational(Rational(1) / Rational(n));
    case BaseKind::integers: {
      Element::Terms t;
      for (const auto& [e, c] : a.terms()) {
        const Integer& num = c.get_num();
        if (num % n != 0) {
          throw InexactDivision("coefficient " + num.get_str() + " is not divisible by " + n.get_str());
        }
        t[e] = Rational(num / n);
      }
      return r.make(t);
    }
    case BaseKind::zmod: {
      auto inv = mod_inverse(n, r.modulus());
      if (!inv) throw InexactDivision(n.get_str() + " is not a unit mod " + r.modulus().get_str());
      return scale(a, *inv);
    }
  }
  return a;
}

Element elem_arith(ArithOp op, const Element& a, const Element& b) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::neg: return -a;
  }
  return a;
}

}  // namespace wittforge
