#pragma once

// Filtered Q-vector spaces and their Rees modules.
//
// Conventions: Fil^i sits in Rees degree -i and t raises degree by one
// (t : Fil^i -> Fil^(i-1)). The twist is M{n}(i) = M(i - n), so that
// Q{1} has Fil^i = Q exactly for i <= 1.

#include <string>
#include <vector>

#include "wittforge/linalg.hpp"
#include "wittforge/ring.hpp"

namespace wittforge {

/// Subspaces of an ambient Q^m, decreasing in i. Fil^i = Q^m for i <= lo.
/// Above hi the filtration is 0 (zero_above) or stays at Fil^hi.
class FilteredModule {
 public:
  FilteredModule(std::size_t ambient_dim, int lo, std::vector<linalg::Matrix> pieces, bool zero_above = true);

  /// Fil^i = Q^dim for i <= 0, 0 above.
  static FilteredModule trivial(std::size_t dim = 1);
  /// Q{n}: Fil^i = Q for i <= n.
  static FilteredModule twist(int n);
  /// Fil^i = Q^dim for every i.
  static FilteredModule constant(std::size_t dim = 1);
  /// Fil^i = span of the first dims[i - lo] standard basis vectors.
  static FilteredModule flag(int lo, const std::vector<std::size_t>& dims, bool zero_above = true);

  std::size_t ambient_dim() const { return dim_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(pieces_.size()) - 1; }
  bool zero_above() const { return zero_above_; }
  linalg::Matrix fil(int i) const;
  std::size_t dim(int i) const { return fil(i).rows(); }
  /// The piece all high Fil^i settle at (zero when zero_above).
  linalg::Matrix stable_piece() const;

  /// Same Fil^i for every i.
  bool operator==(const FilteredModule& other) const;
  std::string to_string() const;

 private:
  std::size_t dim_;
  int lo_;
  std::vector<linalg::Matrix> pieces_;
  bool zero_above_;
};

/// Graded Q[t]-module, t of degree +1. Degrees above hi_degree repeat the top
/// piece with t = identity; below lo_degree the module is zero (zero_below)
/// or repeats the bottom piece with t = identity.
struct ReesModule {
  int lo_degree = 0;
  std::vector<std::size_t> dims;       // degree lo_degree + k
  std::vector<linalg::Matrix> t_maps;  // k -> k+1, shape dims[k+1] x dims[k]
  bool zero_below = true;

  int hi_degree() const { return lo_degree + static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int degree) const;
  bool is_t_torsion_free() const;
  /// Degrees in which a generator is needed: dim of the cokernel of t into each degree.
  std::vector<std::pair<int, std::size_t>> generator_degrees() const;
  bool operator==(const ReesModule&) const = default;
};

ReesModule rees_of_filtered(const FilteredModule& m);
/// Throws PreconditionError on t-torsion.
FilteredModule filtered_of_rees(const ReesModule& g);
/// M{n}(i) = M(i - n).
FilteredModule shift_filtration(const FilteredModule& m, int n);
/// Degree shift of a Rees module.
ReesModule shift_rees(const ReesModule& g, int by);
/// Fil^i(M (x) N) = sum_{j+k=i} Fil^j M (x) Fil^k N inside Q^(m n).
FilteredModule day_tensor(const FilteredModule& m, const FilteredModule& n);

struct Completion {
  bool complete = false;
  FilteredModule completed;               // M / (intersection of all Fil^i)
  std::vector<std::size_t> tower_dims;    // dim M / Fil^i for i = lo .. lo + depth
};
Completion complete_filtration(const FilteredModule& m, int depth);

/// The (u)-adic filtration of Q[u_1..u_n] / (u)^(k+1), Fil^i = (u)^i.
FilteredModule iadic_truncated(std::size_t nvars, int k);

struct GradedPiece {
  int degree = 0;
  std::vector<std::string> generators;  // products of I-generators
  std::size_t rank = 0;                 // free rank over A
  linalg::Matrix relations;             // rows: linear relations among generators
};

/// gr^i = I^i / I^(i+1) for I in A (x) A generated by constant-coefficient
/// linear forms in u_j = x_j' - x_j. Variables of A (x) A: A's, then `<v>_2`.
std::vector<GradedPiece> iadic_gr(const Ring& a, const std::vector<std::string>& generators, int top_degree);
/// A (x)_Q A with second-copy variables named `<v>_2`.
Ring tensor_square(const Ring& a);

}  // namespace wittforge
