#pragma once

// Hodge-filtered de Rham cohomology of Q[x_1^+-,...,x_a^+-, y_1,...,y_b].
//
// The complex splits by character chi in Z^a x N^b. In the slice of chi the
// forms are x^chi * dlog(S) for S a set of directions; an affine direction j
// is only available when chi_j >= 1 (y^c dlog y = y^(c-1) dy). The
// differential is the Koszul map w -> sum_k chi_k dlog_k ^ w.

#include <string>
#include <vector>

#include "wittforge/cone.hpp"
#include "wittforge/filtration.hpp"
#include "wittforge/json_io.hpp"
#include "wittforge/linalg.hpp"

namespace wittforge {

struct MonomialAlgebra {
  int a = 0;  // torus rank
  int b = 0;  // affine rank
  int rank() const { return a + b; }
  std::string descriptor() const;
};

struct ComplexSlice {
  std::vector<int> character;
  std::vector<std::size_t> directions;          // available dlog directions
  std::vector<std::vector<std::vector<std::size_t>>> bases;  // bases[i]: subsets of size i
  std::vector<linalg::Matrix> differentials;    // d_i: dims[i+1] x dims[i]
  std::size_t dim(int i) const;
};

/// Characters with torus entries in [-bound, bound] and affine entries in [0, bound].
std::vector<ComplexSlice> build_complex(const MonomialAlgebra& alg, int character_bound);
ComplexSlice build_slice(const MonomialAlgebra& alg, const std::vector<int>& character);
bool slice_is_exact(const ComplexSlice& s);

struct HodgeFilteredCohomology {
  MonomialAlgebra algebra;
  int character_bound = 0;
  std::vector<std::size_t> h;                // h[j] = dim H^j, j = 0..rank
  std::vector<FilteredModule> filtered;      // Fil^i H^j inside Q^h[j], pieces i = 0..rank+1
  std::size_t fil_dim(int i, int j) const;
};

HodgeFilteredCohomology hodge_cohomology(const MonomialAlgebra& alg, int character_bound = 1);
/// Per degree j, the graded module of {Fil^i H^j}.
std::vector<ReesModule> rees_package(const HodgeFilteredCohomology& h);

/// The rank one quasi-ideal R e with d(e) = eta.
QuasiIdeal<ElementOps> gadr_points(const Ring& r, const Element& eta);

Json derham_report(const HodgeFilteredCohomology& h);

}  // namespace wittforge
