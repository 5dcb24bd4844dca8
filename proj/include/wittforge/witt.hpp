#pragma once

// E-typical Witt vectors W_E(R).

#include <random>
#include <vector>

#include "wittforge/index_set.hpp"
#include "wittforge/ring.hpp"
#include "wittforge/universal.hpp"

namespace wittforge {

class WittVector {
 public:
  WittVector(IndexSet e, Ring ring, std::vector<Element> coords);

  const IndexSet& index_set() const { return e_; }
  const Ring& ring() const { return ring_; }
  const std::vector<Element>& coords() const { return coords_; }
  const Element& at(IndexSet::Index n) const;
  bool is_zero() const;
  std::string to_string() const;

  bool operator==(const WittVector& other) const;
  bool operator!=(const WittVector& other) const { return !(*this == other); }

 private:
  IndexSet e_;
  Ring ring_;
  std::vector<Element> coords_;
};

enum class WittStrategy {
  automatic,   // ghost transform over torsion-free rings, polynomials otherwise
  polynomial,  // always evaluate universal polynomials
  ghost,       // ghost, operate, unghost; needs exact division by members of E
};

WittVector witt_zero(const IndexSet& e, const Ring& r);
WittVector witt_one(const IndexSet& e, const Ring& r);
/// Image of the integer k under Z -> W_E(R).
WittVector witt_from_integer(const IndexSet& e, const Ring& r, const Integer& k);
/// Coordinates given as ring-element strings, one per member of E.
WittVector witt_parse(const IndexSet& e, const Ring& r, const std::vector<std::string>& coords);
WittVector witt_random(const IndexSet& e, const Ring& r, std::mt19937_64& rng, int bound = 5);
/// Every element of W_E(R) for finite R.
std::vector<WittVector> witt_enumerate(const IndexSet& e, const Ring& r, std::size_t limit = 1'000'000);

WittVector witt_add(const WittVector& a, const WittVector& b, WittStrategy s = WittStrategy::automatic);
WittVector witt_mul(const WittVector& a, const WittVector& b, WittStrategy s = WittStrategy::automatic);
WittVector witt_neg(const WittVector& a, WittStrategy s = WittStrategy::automatic);
WittVector witt_sub(const WittVector& a, const WittVector& b, WittStrategy s = WittStrategy::automatic);
WittVector witt_arith(ArithOp op, const WittVector& a, const WittVector& b, WittStrategy s = WittStrategy::automatic);

/// g_n(a) = sum_{d | n} d a_d^(n/d), for n in E.
std::vector<Element> ghost(const WittVector& a);
/// Inverse of the ghost map; every step divides exactly by n.
WittVector unghost(const std::vector<Element>& w, const IndexSet& e, const Ring& r);

/// F_n : W_E -> W_{E|n}.
WittVector frobenius(IndexSet::Index n, const WittVector& a, WittStrategy s = WittStrategy::automatic);
/// V_n : W_{E|n} -> W_E, the index shift.
WittVector verschiebung(IndexSet::Index n, const WittVector& a, const IndexSet& e);
WittVector teichmuller(const Element& r, const IndexSet& e);

/// w_{mp} = w_m mod p^(1 + v_p(m)) for all primes p and mp in E.
bool dwork_check(const std::vector<Integer>& w, const IndexSet& e);

/// Restriction to a sub-index-set E' of E (drops coordinates).
WittVector witt_restrict(const WittVector& a, const IndexSet& sub);
/// Coordinatewise pushforward along the ring map R -> R'.
WittVector witt_change_ring(const WittVector& a, const Ring& target);
/// Multiplication by an integer constant.
WittVector witt_scale(const WittVector& a, const Integer& k);

}  // namespace wittforge
