#pragma once

// Prismatic points over finite rings: the cone W-bar = Cone(W e -> W, e -> xi)
// for a distinguished xi, Witt points of affine schemes and the groupoid of
// W-bar points of X = Spec Z[x_j]/(f_k).

#include <optional>
#include <string>
#include <vector>

#include "wittforge/cone.hpp"
#include "wittforge/json_io.hpp"
#include "wittforge/witt_struct.hpp"

namespace wittforge {

struct PrismaticContext {
  Ring ring;
  IndexSet index_set;
  WittVector xi;
  PredicateContext predicates;
  DistinguishedWitness witness;

  /// Throws PreconditionError unless xi is distinguished.
  static PrismaticContext make(const WittVector& xi);
  QuasiIdeal<WittOps> quasi_ideal() const;
  /// Same context with xi replaced by u * xi.
  PrismaticContext scaled(const WittVector& unit) const;
};

struct WbarReport {
  std::size_t level = 2;
  Pi0<WittOps> pi0;                  // W / (xi)
  Pi0<ElementOps> rbar;              // R / (xi_1)
  bool map_well_defined = false;     // (xi) -> (xi_1) under the first coordinate
  bool wbar_surjective = false;      // pi_0 W-bar -> R-bar
  std::size_t wbar_kernel_size = 0;
  std::optional<unsigned> wbar_kernel_nilpotency;  // least k with ker^k = 0 elementwise
  bool r_surjective = true;          // R -> R-bar
  std::size_t r_kernel_size = 0;
  std::optional<unsigned> r_kernel_nilpotency;
  bool ok() const;
};

WbarReport wbar_ring(const PrismaticContext& ctx, std::size_t level = 2, std::size_t limit = 1'000'000);

/// B = Z[generators] / (relations), relations over the integers.
struct AffinePresentation {
  std::vector<std::string> generators;
  std::vector<Element> relations;
  bool regular = true;  // user-asserted Koszul regularity

  static AffinePresentation parse(const std::vector<std::string>& generators, const std::vector<std::string>& relations,
                                  bool regular = true);
  Ring polynomial_ring() const;
};

/// f(values) in W_E(R), integer coefficients via witt_from_integer.
WittVector witt_eval(const Element& f, const std::vector<WittVector>& values, const IndexSet& e, const Ring& r);

/// Every ring map B -> W_E(R).
std::vector<std::vector<WittVector>> witt_points(const AffinePresentation& b, const IndexSet& e, const Ring& r,
                                                 std::size_t budget = 1'000'000);

struct PrismaticObject {
  std::vector<WittVector> w;  // generator images
  std::vector<WittVector> g;  // xi * g_k = f_k(w)
};

struct PointGroupoid {
  std::vector<PrismaticObject> objects;
  // morphisms[s][t]: tuples a with xi a_j = w'_j - w_j compatible with the relations
  std::vector<std::vector<std::vector<std::vector<WittVector>>>> morphisms;
  std::vector<std::size_t> component;  // pi_0 class of each object
  std::size_t num_components = 0;
  std::size_t syzygy_violations = 0;

  std::size_t morphism_count() const;
  std::vector<std::vector<std::size_t>> count_matrix() const;
};

PointGroupoid prismatic_points_affine(const AffinePresentation& b, const PrismaticContext& ctx,
                                      std::size_t budget = 1'000'000);

struct GroupoidAxiomReport {
  std::size_t identities_checked = 0;
  std::size_t inverses_checked = 0;
  std::size_t compositions_checked = 0;
  std::size_t associativity_checked = 0;
  std::vector<std::string> failures;
};
GroupoidAxiomReport check_groupoid_axioms(const PointGroupoid& g, const AffinePresentation& b,
                                          const PrismaticContext& ctx, std::size_t budget = 200'000);

Json groupoid_to_json(const PointGroupoid& g);
Json wbar_to_json(const WbarReport& r);

}  // namespace wittforge
