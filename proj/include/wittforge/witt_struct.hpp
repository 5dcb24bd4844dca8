#pragma once

// Frobenius kernels, units, the p-local product decomposition, the V(1) map
// and the Hodge-Tate / distinguished predicates.

#include <map>
#include <optional>

#include "wittforge/witt.hpp"

namespace wittforge {

/// Either p-local (every prime of E other than p is a unit, with inverses) or
/// rational (every prime of E is a unit).
struct PredicateContext {
  enum class Kind { local, rational };
  Kind kind = Kind::local;
  IndexSet::Index p = 0;  // local only
  Ring ring = Ring::integers();
  IndexSet index_set;
  std::map<IndexSet::Index, Element> inverses;  // prime -> inverse

  static PredicateContext local(IndexSet::Index p, const Ring& r, const IndexSet& e);
  static PredicateContext rational(const Ring& r, const IndexSet& e);
  /// Local at the unique non-invertible prime of E, otherwise rational.
  static PredicateContext automatic(const Ring& r, const IndexSet& e);

  /// Inverse of n, a product of certified primes.
  Element inverse_of(IndexSet::Index n) const;
  bool verify() const;
};

struct DecomposedWitt {
  IndexSet::Index p = 0;
  IndexSet index_set;                  // the original E
  std::vector<IndexSet::Index> labels;  // E_(p)
  std::vector<WittVector> factors;      // each over E^(p)

  const WittVector& factor(IndexSet::Index n) const;
  bool operator==(const DecomposedWitt&) const = default;
};

bool is_in_wf(const WittVector& a);

enum class AnnihilatorDirection { kills_vw, killed_by_wf };
/// Enumerates V_p(b) (kills_vw) or W[F] (killed_by_wf) over the finite base ring.
bool wf_annihilator_check(const WittVector& a, AnnihilatorDirection dir, std::size_t limit = 1'000'000);

/// Inverse when a is a unit; a is a unit iff every ghost component is.
std::optional<WittVector> witt_is_unit(const WittVector& a);

DecomposedWitt local_decompose(const WittVector& a, const PredicateContext& ctx);
WittVector local_recompose(const DecomposedWitt& d, const PredicateContext& ctx);
DecomposedWitt decomposed_zero(const PredicateContext& ctx);
DecomposedWitt decomposed_one(const PredicateContext& ctx);

/// factor_1 -> V_p(F_p(factor_1)), other factors unchanged, then recompose.
WittVector v_one_apply(const DecomposedWitt& w, const PredicateContext& ctx);

bool is_hodge_tate(const WittVector& v, const PredicateContext& ctx);

struct DistinguishedWitness {
  Element x;
  WittVector v;
};
std::optional<DistinguishedWitness> is_distinguished(const WittVector& xi, const PredicateContext& ctx);

struct NonfreeCertificate {
  bool satisfiable = false;
  std::size_t profiles_checked = 0;
  // unsat: a congruence w_n = w_m mod p^(1+v_p(m)) failing for every profile
  std::optional<IndexSet::Index> n, m, p;
  // sat: one integral ghost profile and its Witt coordinates
  std::vector<Integer> ghost_values;
  std::vector<Integer> coords;
};
/// Searches ghost profiles g_1 = 0, g_{p^r} = +-p, g_n = +-1 otherwise.
NonfreeCertificate v_nonfree_obstruction(const IndexSet& e, std::size_t bound = 1u << 20);

}  // namespace wittforge
