#include "wittforge/int_poly.hpp"

#include <algorithm>

#include "wittforge/errors.hpp"

namespace wittforge {

namespace {

constexpr int kMaxExponent = 255;

int exponent_sum(const IntPoly::Monomial& m) {
  int s = 0;
  for (unsigned char c : m) s += c;
  return s;
}

void require_arity(const IntPoly& a, const IntPoly& b) {
  if (a.num_vars() != b.num_vars()) throw ValidationError("polynomial arity mismatch");
}

}  // namespace

IntPoly IntPoly::constant(std::size_t nvars, const Integer& c) {
  IntPoly p(nvars);
  if (c != 0) p.terms_.emplace(Monomial(nvars, '\0'), c);
  return p;
}

IntPoly IntPoly::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw ValidationError("variable index out of range");
  IntPoly p(nvars);
  Monomial m(nvars, '\0');
  m[var] = 1;
  p.terms_.emplace(std::move(m), 1);
  return p;
}

IntPoly IntPoly::from_terms(std::size_t nvars, const std::vector<std::pair<std::vector<int>, Integer>>& terms) {
  IntPoly p(nvars);
  for (const auto& [e, c] : terms) {
    if (e.size() != nvars) throw ValidationError("monomial arity mismatch");
    Monomial m(nvars, '\0');
    for (std::size_t i = 0; i < nvars; ++i) {
      if (e[i] < 0 || e[i] > kMaxExponent) throw ValidationError("exponent out of range");
      m[i] = static_cast<char>(e[i]);
    }
    p.add_term(m, c);
  }
  return p;
}

void IntPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::pair<std::vector<int>, Integer>> IntPoly::sorted_terms() const {
  std::vector<std::pair<Monomial, Integer>> raw(terms_.begin(), terms_.end());
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
    const int da = exponent_sum(a.first);
    const int db = exponent_sum(b.first);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.first.begin(), a.first.end(), b.first.begin(), b.first.end(),
                                        [](char x, char y) {
                                          return static_cast<unsigned char>(x) > static_cast<unsigned char>(y);
                                        });
  });
  std::vector<std::pair<std::vector<int>, Integer>> out;
  out.reserve(raw.size());
  for (const auto& [m, c] : raw) {
    std::vector<int> e(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) e[i] = static_cast<unsigned char>(m[i]);
    out.emplace_back(std::move(e), c);
  }
  return out;
}

std::vector<std::size_t> IntPoly::support() const {
  std::vector<bool> used(nvars_, false);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (m[i]) used[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (used[i]) out.push_back(i);
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  require_arity(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  require_arity(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  require_arity(a, b);
  IntPoly out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  out.terms_.reserve(a.size() * b.size() / 2 + 1);
  IntPoly::Monomial m(a.nvars_, '\0');
  Integer prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.nvars_; ++i) {
        const int e = static_cast<unsigned char>(ma[i]) + static_cast<unsigned char>(mb[i]);
        if (e > kMaxExponent) throw Unsupported("exponent overflow in integer polynomial");
        m[i] = static_cast<char>(e);
      }
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      out.add_term(m, prod);
    }
  }
  return out;
}

IntPoly IntPoly::pow(unsigned long e) const {
  IntPoly result = constant(nvars_, 1);
  IntPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

IntPoly IntPoly::scaled(const Integer& c) const {
  if (c == 0) return IntPoly(nvars_);
  IntPoly out = *this;
  for (auto& [m, v] : out.terms_) v *= c;
  return out;
}

IntPoly IntPoly::exact_div(const Integer& n) const {
  if (n == 0) throw InexactDivision("division by zero");
  IntPoly out = *this;
  for (auto& [m, v] : out.terms_) {
    if (!mpz_divisible_p(v.get_mpz_t(), n.get_mpz_t())) {
      throw InexactDivision("coefficient " + v.get_str() + " is not divisible by " + n.get_str());
    }
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  }
  return out;
}

IntPoly IntPoly::substitute(const std::vector<IntPoly>& values) const {
  if (values.size() != nvars_) throw ValidationError("substitution arity mismatch");
  if (values.empty()) return *this;
  const std::size_t target = values.front().num_vars();
  IntPoly out(target);
  std::vector<std::vector<IntPoly>> powers(nvars_);
  for (const auto& [m, c] : terms_) {
    IntPoly term = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      const auto e = static_cast<std::size_t>(static_cast<unsigned char>(m[i]));
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * values[i]);
      term = term * pw[e];
    }
    out += term;
  }
  return out;
}

Integer IntPoly::eval_integer(const std::vector<Integer>& values) const {
  if (values.size() != nvars_) throw ValidationError("evaluation arity mismatch");
  Integer acc = 0;
  Integer t;
  Integer pw;
  for (const auto& [m, c] : terms_) {
    t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const auto e = static_cast<unsigned char>(m[i]);
      if (!e) continue;
      mpz_pow_ui(pw.get_mpz_t(), values[i].get_mpz_t(), e);
      t *= pw;
    }
    acc += t;
  }
  return acc;
}

Integer IntPoly::eval_mod(const std::vector<Integer>& values, const Integer& modulus) const {
  if (values.size() != nvars_) throw ValidationError("evaluation arity mismatch");
  std::vector<std::vector<Integer>> powers(nvars_);
  Integer acc = 0;
  Integer t;
  for (const auto& [m, c] : terms_) {
    t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const auto e = static_cast<std::size_t>(static_cast<unsigned char>(m[i]));
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(1);
      while (pw.size() <= e) pw.push_back(mod_floor(pw.back() * values[i], modulus));
      t *= pw[e];
      t = mod_floor(t, modulus);
    }
    acc += t;
  }
  return mod_floor(acc, modulus);
}

Element IntPoly::eval(const std::vector<Element>& values, const Ring& ring) const {
  if (values.size() != nvars_) throw ValidationError("evaluation arity mismatch");
  std::vector<std::vector<Element>> powers(nvars_);
  Element acc = ring.zero();
  for (const auto& [m, c] : terms_) {
    Element t = ring.from_integer(c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      const auto e = static_cast<std::size_t>(static_cast<unsigned char>(m[i]));
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(ring.one());
      while (pw.size() <= e) pw.push_back(pw.back() * values[i]);
      t = t * pw[e];
    }
    acc = acc + t;
  }
  return acc;
}

std::string IntPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : sorted_terms()) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coef;
    if (mono.empty()) {
      coef = c.get_str();
    } else if (c == 1) {
      coef = "";
    } else if (c == -1) {
      coef = "-";
    } else {
      coef = c.get_str() + "*";
    }
    std::string term = coef + mono;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace wittforge
