#pragma once

// Exact commutative rings: Z, Q, Z/N, polynomial and Laurent rings over
// these, and quotients by monic univariate relations.
//
// A Ring is a cheap, shareable handle to an immutable descriptor. An Element
// stores its ring together with a canonical sparse polynomial form, so two
// elements compare equal exactly when their canonical forms are identical.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace wittforge {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponents = std::vector<std::int32_t>;

/// Total degree ascending, then lexicographically descending exponents, so
/// that `x` precedes `y` and constants come first.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

enum class BaseKind { integers, rationals, zmod };

/// A monic relation x_var^degree + lower[degree-1] x^(degree-1) + ... + lower[0].
struct Relation {
  std::size_t var = 0;
  int degree = 0;
  std::vector<Rational> lower;
  bool operator==(const Relation&) const = default;
};

class Element;

namespace detail {
struct RingData {
  BaseKind base = BaseKind::integers;
  Integer modulus;  // zmod only
  std::vector<std::string> vars;
  std::vector<bool> inverted;
  std::vector<std::optional<Relation>> relations;  // indexed by variable
};
}  // namespace detail

class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  static Ring zmod(const Integer& modulus);
  /// Adjoins `vars` to `base`, flattening nested polynomial rings.
  static Ring polynomial(const Ring& base, const std::vector<std::string>& vars,
                         const std::vector<std::string>& inverted = {});
  /// Quotient of a polynomial ring by monic relations, each univariate in a
  /// distinct non-inverted variable.
  static Ring quotient(const Ring& poly, const std::vector<Element>& relations);
  /// Parses `integers | rationals | zmod:N | poly(<base>; v1,...; inv vi,...)
  /// | quot(<poly>; rel1, ...)`.
  static Ring parse(std::string_view text);

  BaseKind base_kind() const { return data_->base; }
  const Integer& modulus() const { return data_->modulus; }
  std::size_t num_vars() const { return data_->vars.size(); }
  const std::vector<std::string>& vars() const { return data_->vars; }
  bool is_inverted(std::size_t var) const { return data_->inverted[var]; }
  const std::optional<Relation>& relation(std::size_t var) const { return data_->relations[var]; }
  bool has_relations() const;
  bool has_inverted() const;
  std::optional<std::size_t> var_index(std::string_view name) const;

  /// Canonical descriptor text; parse(descriptor()) == *this.
  std::string descriptor() const;

  /// Finite exactly when the base is Z/N and every variable is bound by a relation.
  bool is_finite() const;
  std::optional<Integer> order() const;
  /// Z-torsion-free: the base is Z or Q (quotients by monic relations stay free).
  bool is_torsion_free() const;
  /// The scalar ring underneath all variables.
  Ring scalar_ring() const;
  /// Product of relation degrees; the rank over the scalars of the bound part.
  std::size_t bound_rank() const;

  Element zero() const;
  Element one() const;
  Element from_integer(const Integer& n) const;
  Element from_rational(const Rational& q) const;
  Element variable(std::size_t var) const;
  Element variable(std::string_view name) const;
  Element parse_element(std::string_view text) const;

  /// Normalizes raw terms into canonical form.
  Element make(const std::map<Exponents, Rational, MonomialOrder>& raw) const;
  /// Coefficientwise change of base. Z/M -> Z/N needs N | M; Z/N -> Z and
  /// Z/N -> Q pick representatives in [0, N) (a set-theoretic lift).
  Element coerce(const Element& a) const;

  /// All elements of a finite ring, in a fixed deterministic order.
  std::vector<Element> enumerate(std::size_t limit = 1'000'000) const;
  Element random(std::mt19937_64& rng, int bound = 5) const;

  bool operator==(const Ring& other) const;

 private:
  explicit Ring(std::shared_ptr<const detail::RingData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::RingData> data_;
  friend class Element;
};

/// Canonical-form ring element. Immutable after construction.
class Element {
 public:
  using Terms = std::map<Exponents, Rational, MonomialOrder>;

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Value of a constant element (no variables present).
  std::optional<Rational> constant_value() const;
  std::string to_string() const;

  bool operator==(const Element& other) const;
  bool operator!=(const Element& other) const { return !(*this == other); }

 private:
  Element(Ring ring, Terms terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
  Ring ring_;
  Terms terms_;
  friend class Ring;
  friend Element operator+(const Element&, const Element&);
  friend Element operator-(const Element&);
  friend Element operator*(const Element&, const Element&);
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator-(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);
Element pow(const Element& a, unsigned long exponent);
/// Multiplication by an integer constant.
Element scale(const Element& a, const Integer& n);
/// Exact division by a nonzero integer. Over Z-based rings every coefficient
/// must be divisible; over Z/N the divisor must be a unit. Never rounds.
Element exact_div(const Element& a, const Integer& n);

enum class ArithOp { add, sub, mul, neg };
/// Dispatches one of the four ring operations (b is ignored for neg).
Element elem_arith(ArithOp op, const Element& a, const Element& b);

/// Two-sided inverse when `a` is a unit.
std::optional<Element> elem_is_unit(const Element& a);
/// Least k >= 1 with a^k = 0, when `a` is nilpotent.
std::optional<unsigned> elem_is_nilpotent(const Element& a);

Ring make_ring(std::string_view descriptor);

/// Non-negative representative of n mod m.
Integer mod_floor(const Integer& n, const Integer& m);
/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<Integer> mod_inverse(const Integer& a, const Integer& m);
/// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

}  // namespace wittforge
