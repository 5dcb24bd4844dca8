#pragma once

// Sparse multivariate polynomials over Z. Monomials are byte strings of
// exponents (one byte per variable), which keeps hashing and comparison cheap
// for the universal Witt polynomials.

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wittforge/ring.hpp"

namespace wittforge {

class IntPoly {
 public:
  using Monomial = std::string;

  explicit IntPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static IntPoly constant(std::size_t nvars, const Integer& c);
  static IntPoly variable(std::size_t nvars, std::size_t var);
  static IntPoly from_terms(std::size_t nvars, const std::vector<std::pair<std::vector<int>, Integer>>& terms);

  std::size_t num_vars() const { return nvars_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const std::unordered_map<Monomial, Integer>& terms() const { return terms_; }
  /// Terms in a fixed order (total degree, then lexicographic exponent bytes).
  std::vector<std::pair<std::vector<int>, Integer>> sorted_terms() const;
  /// Variables that occur with positive exponent.
  std::vector<std::size_t> support() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly operator-() const;
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly pow(unsigned long e) const;
  IntPoly scaled(const Integer& c) const;
  /// Division by n that throws InexactDivision unless n divides every coefficient.
  IntPoly exact_div(const Integer& n) const;
  /// Substitutes polynomials (all in a common variable set) for the variables.
  IntPoly substitute(const std::vector<IntPoly>& values) const;

  Integer eval_integer(const std::vector<Integer>& values) const;
  Integer eval_mod(const std::vector<Integer>& values, const Integer& modulus) const;
  Element eval(const std::vector<Element>& values, const Ring& ring) const;

  std::string to_string(const std::vector<std::string>& names) const;
  bool operator==(const IntPoly& other) const { return nvars_ == other.nvars_ && terms_ == other.terms_; }

 private:
  void add_term(const Monomial& m, const Integer& c);
  std::size_t nvars_;
  std::unordered_map<Monomial, Integer> terms_;
};

}  // namespace wittforge
