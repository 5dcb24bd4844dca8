#include "wittforge/derham.hpp"

#include <algorithm>

#include "wittforge/errors.hpp"

namespace wittforge {

using linalg::Matrix;

std::string MonomialAlgebra::descriptor() const {
  std::vector<std::string> vars, inv;
  for (int i = 1; i <= a; ++i) {
    vars.push_back("x" + std::to_string(i));
    inv.push_back("x" + std::to_string(i));
  }
  for (int j = 1; j <= b; ++j) vars.push_back("y" + std::to_string(j));
  if (vars.empty()) return "rationals";
  return Ring::polynomial(Ring::rationals(), vars, inv).descriptor();
}

std::size_t ComplexSlice::dim(int i) const {
  if (i < 0 || i >= static_cast<int>(bases.size())) return 0;
  return bases[static_cast<std::size_t>(i)].size();
}

namespace {

void subsets(const std::vector<std::size_t>& dirs, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < dirs.size(); ++i) {
    cur.push_back(dirs[i]);
    subsets(dirs, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// H^j of one slice: a basis complement C of B_j inside Z_j, plus Fil^i images.
struct SliceCohomology {
  std::size_t dim = 0;
  std::vector<Matrix> fil;  // fil[i] for i = 0..top, rows in Q^dim
};

SliceCohomology slice_cohomology(const ComplexSlice& s, int j, int top) {
  const std::size_t n = s.dim(j);
  SliceCohomology out;
  if (n == 0) {
    for (int i = 0; i <= top; ++i) out.fil.emplace_back(0, 0);
    return out;
  }
  const Matrix z = j < static_cast<int>(s.differentials.size()) ? linalg::nullspace(s.differentials[static_cast<std::size_t>(j)])
                                                               : Matrix::identity(n);
  Matrix b(0, n);
  if (j >= 1) b = linalg::span(linalg::transpose(s.differentials[static_cast<std::size_t>(j - 1)]));
  Matrix basis = b;
  std::size_t r = b.rows();
  Matrix c(0, n);
  for (std::size_t k = 0; k < z.rows(); ++k) {
    Matrix trial = basis;
    trial.append_row(z.row(k));
    if (linalg::rank(trial) > r) {
      basis = trial;
      c.append_row(z.row(k));
      ++r;
    }
  }
  out.dim = c.rows();
  for (int i = 0; i <= top; ++i) {
    // Image of H^j(Omega^{>= i}): cocycles of the truncation, i.e. Z when i <= j.
    Matrix piece(0, out.dim);
    if (i <= j && out.dim > 0 && z.rows() > 0) {
      const Matrix coords = linalg::coordinates_in(basis, z);
      Matrix tail(coords.rows(), out.dim);
      for (std::size_t row = 0; row < coords.rows(); ++row)
        for (std::size_t col = 0; col < out.dim; ++col) tail(row, col) = coords(row, b.rows() + col);
      piece = linalg::span(tail);
    }
    out.fil.push_back(piece);
  }
  return out;
}

}  // namespace

ComplexSlice build_slice(const MonomialAlgebra& alg, const std::vector<int>& character) {
  if (character.size() != static_cast<std::size_t>(alg.rank())) throw ValidationError("character has the wrong length");
  ComplexSlice s;
  s.character = character;
  for (int k = 0; k < alg.rank(); ++k) {
    if (k >= alg.a) {
      if (character[static_cast<std::size_t>(k)] < 0) throw ValidationError("affine characters must be non-negative");
      if (character[static_cast<std::size_t>(k)] == 0) continue;
    }
    s.directions.push_back(static_cast<std::size_t>(k));
  }
  for (std::size_t i = 0; i <= s.directions.size(); ++i) {
    std::vector<std::vector<std::size_t>> level;
    std::vector<std::size_t> cur;
    subsets(s.directions, i, 0, cur, level);
    s.bases.push_back(std::move(level));
  }
  for (std::size_t i = 0; i + 1 < s.bases.size(); ++i) {
    const auto& src = s.bases[i];
    const auto& dst = s.bases[i + 1];
    Matrix d(dst.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
      const auto& set = src[col];
      for (auto k : s.directions) {
        if (std::find(set.begin(), set.end(), k) != set.end()) continue;
        const int chi = character[k];
        if (chi == 0) continue;
        std::size_t before = 0;
        for (auto e : set)
          if (e < k) ++before;
        auto target = set;
        target.insert(std::upper_bound(target.begin(), target.end(), k), k);
        const auto row = static_cast<std::size_t>(std::find(dst.begin(), dst.end(), target) - dst.begin());
        d(row, col) += (before % 2 ? -chi : chi);
      }
    }
    s.differentials.push_back(std::move(d));
  }
  return s;
}

std::vector<ComplexSlice> build_complex(const MonomialAlgebra& alg, int character_bound) {
  if (alg.a < 0 || alg.b < 0) throw ValidationError("ranks must be non-negative");
  if (character_bound < 0) throw ValidationError("character bound must be non-negative");
  std::vector<ComplexSlice> out;
  std::vector<int> chi(static_cast<std::size_t>(alg.rank()));
  for (int k = 0; k < alg.rank(); ++k) chi[static_cast<std::size_t>(k)] = k < alg.a ? -character_bound : 0;
  while (true) {
    out.push_back(build_slice(alg, chi));
    int k = alg.rank() - 1;
    for (; k >= 0; --k) {
      auto& c = chi[static_cast<std::size_t>(k)];
      if (c < character_bound) {
        ++c;
        break;
      }
      c = k < alg.a ? -character_bound : 0;
    }
    if (k < 0) break;
  }
  return out;
}

bool slice_is_exact(const ComplexSlice& s) {
  for (int j = 0; j < static_cast<int>(s.bases.size()); ++j) {
    const std::size_t kernel = j < static_cast<int>(s.differentials.size())
                                   ? s.dim(j) - linalg::rank(s.differentials[static_cast<std::size_t>(j)])
                                   : s.dim(j);
    const std::size_t image = j >= 1 ? linalg::rank(s.differentials[static_cast<std::size_t>(j - 1)]) : 0;
    if (kernel != image) return false;
  }
  return true;
}

std::size_t HodgeFilteredCohomology::fil_dim(int i, int j) const {
  if (j < 0 || j >= static_cast<int>(filtered.size())) return 0;
  return filtered[static_cast<std::size_t>(j)].dim(i);
}

HodgeFilteredCohomology hodge_cohomology(const MonomialAlgebra& alg, int character_bound) {
  HodgeFilteredCohomology out;
  out.algebra = alg;
  out.character_bound = character_bound;
  const int n = alg.rank();
  const int top = n + 1;
  const auto slices = build_complex(alg, character_bound);
  for (int j = 0; j <= n; ++j) {
    std::vector<SliceCohomology> parts;
    std::size_t total = 0;
    for (const auto& s : slices) {
      auto sc = slice_cohomology(s, j, top);
      if (sc.dim == 0) continue;
      total += sc.dim;
      parts.push_back(std::move(sc));
    }
    std::vector<Matrix> pieces;
    for (int i = 0; i <= top; ++i) {
      Matrix piece(0, total);
      std::size_t offset = 0;
      for (const auto& p : parts) {
        const Matrix& f = p.fil[static_cast<std::size_t>(i)];
        for (std::size_t r = 0; r < f.rows(); ++r) {
          std::vector<Rational> row(total);
          for (std::size_t c = 0; c < p.dim; ++c) row[offset + c] = f(r, c);
          piece.append_row(row);
        }
        offset += p.dim;
      }
      pieces.push_back(std::move(piece));
    }
    out.h.push_back(total);
    out.filtered.emplace_back(total, 0, std::move(pieces), true);
  }
  return out;
}

std::vector<ReesModule> rees_package(const HodgeFilteredCohomology& h) {
  std::vector<ReesModule> out;
  for (const auto& f : h.filtered) out.push_back(rees_of_filtered(f));
  return out;
}

QuasiIdeal<ElementOps> gadr_points(const Ring& r, const Element& eta) {
  if (!(eta.ring() == r)) throw RingMismatch("eta lives in " + eta.ring().descriptor() + ", not " + r.descriptor());
  return QuasiIdeal<ElementOps>{ElementOps{r}, {eta}, {}};
}

Json derham_report(const HodgeFilteredCohomology& h) {
  Json out;
  out["a"] = h.algebra.a;
  out["b"] = h.algebra.b;
  Json hj = Json::object();
  for (std::size_t j = 0; j < h.h.size(); ++j) hj[std::to_string(j)] = h.h[j];
  out["H"] = hj;
  Json fil = Json::object();
  for (int j = 1; j < static_cast<int>(h.h.size()); ++j) {
    Json row = Json::object();
    for (int i = 1; i <= j + 1; ++i) row[std::to_string(i)] = h.fil_dim(i, j);
    fil[std::to_string(j)] = row;
  }
  out["Fil"] = fil;
  Json rees = Json::object();
  const auto packaged = rees_package(h);
  for (std::size_t j = 0; j < packaged.size(); ++j) rees[std::to_string(j)] = rees_to_json(packaged[j]);
  out["rees"] = rees;
  return out;
}

}  // namespace wittforge
