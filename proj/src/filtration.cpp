#include "wittforge/filtration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "wittforge/errors.hpp"

namespace wittforge {

using linalg::Matrix;

namespace {

Matrix full(std::size_t dim) { return Matrix::identity(dim); }
Matrix empty(std::size_t dim) { return Matrix(0, dim); }

}  // namespace

// ---------------------------------------------------------------------------
// FilteredModule

FilteredModule::FilteredModule(std::size_t ambient_dim, int lo, std::vector<Matrix> pieces, bool zero_above)
    : dim_(ambient_dim), lo_(lo), zero_above_(zero_above) {
  if (pieces.empty()) throw ValidationError("a filtration needs at least one stored piece");
  for (auto& p : pieces) {
    if (p.cols() != dim_) throw ValidationError("filtration piece lives in the wrong ambient space");
    pieces_.push_back(linalg::span(p));
  }
  if (pieces_.front().rows() != dim_) throw ValidationError("Fil^lo must be the whole module");
  for (std::size_t k = 1; k < pieces_.size(); ++k) {
    if (!linalg::subspace_contains(pieces_[k - 1], pieces_[k])) {
      throw ValidationError("filtration is not decreasing at i = " + std::to_string(lo_ + static_cast<int>(k)));
    }
  }
}

FilteredModule FilteredModule::trivial(std::size_t dim) { return FilteredModule(dim, 0, {full(dim)}, true); }

FilteredModule FilteredModule::twist(int n) { return FilteredModule(1, n, {full(1)}, true); }

FilteredModule FilteredModule::constant(std::size_t dim) { return FilteredModule(dim, 0, {full(dim)}, false); }

FilteredModule FilteredModule::flag(int lo, const std::vector<std::size_t>& dims, bool zero_above) {
  if (dims.empty()) throw ValidationError("flag needs dimensions");
  const std::size_t m = dims.front();
  std::vector<Matrix> pieces;
  for (auto d : dims) {
    if (d > m) throw ValidationError("flag dimensions must not exceed the ambient dimension");
    Matrix p(0, m);
    for (std::size_t r = 0; r < d; ++r) {
      std::vector<Rational> row(m);
      row[r] = 1;
      p.append_row(row);
    }
    pieces.push_back(std::move(p));
  }
  return FilteredModule(m, lo, std::move(pieces), zero_above);
}

Matrix FilteredModule::fil(int i) const {
  if (i <= lo_) return pieces_.front();
  if (i > hi()) return zero_above_ ? empty(dim_) : pieces_.back();
  return pieces_[static_cast<std::size_t>(i - lo_)];
}

Matrix FilteredModule::stable_piece() const { return zero_above_ ? empty(dim_) : pieces_.back(); }

bool FilteredModule::operator==(const FilteredModule& other) const {
  if (dim_ != other.dim_) return false;
  if (!(stable_piece() == other.stable_piece())) return false;
  const int a = std::min(lo_, other.lo_) - 1;
  const int b = std::max(hi(), other.hi()) + 1;
  for (int i = a; i <= b; ++i)
    if (!(fil(i) == other.fil(i))) return false;
  return true;
}

std::string FilteredModule::to_string() const {
  std::ostringstream os;
  os << "dim " << dim_ << ", Fil^i dims";
  for (int i = lo_; i <= hi(); ++i) os << " [" << i << "]=" << dim(i);
  os << (zero_above_ ? ", zero above" : ", constant above");
  return os.str();
}

// ---------------------------------------------------------------------------
// Rees modules

std::size_t ReesModule::dim(int degree) const {
  if (dims.empty()) return 0;
  if (degree > hi_degree()) return dims.back();
  if (degree < lo_degree) return zero_below ? 0 : dims.front();
  return dims[static_cast<std::size_t>(degree - lo_degree)];
}

bool ReesModule::is_t_torsion_free() const {
  for (const auto& t : t_maps)
    if (linalg::rank(t) != t.cols()) return false;
  return true;
}

std::vector<std::pair<int, std::size_t>> ReesModule::generator_degrees() const {
  std::vector<std::pair<int, std::size_t>> out;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    std::size_t image = 0;
    if (k > 0) {
      image = linalg::rank(t_maps[k - 1]);
    } else if (!zero_below) {
      image = dims[0];
    }
    if (dims[k] > image) out.emplace_back(lo_degree + static_cast<int>(k), dims[k] - image);
  }
  return out;
}

ReesModule rees_of_filtered(const FilteredModule& m) {
  ReesModule g;
  g.lo_degree = -m.hi();
  g.zero_below = m.zero_above();
  for (int i = m.hi(); i >= m.lo(); --i) g.dims.push_back(m.dim(i));
  for (int i = m.hi(); i > m.lo(); --i) {
    const Matrix src = m.fil(i);
    const Matrix dst = m.fil(i - 1);
    if (src.rows() == 0) {
      g.t_maps.emplace_back(dst.rows(), 0);
      continue;
    }
    g.t_maps.push_back(linalg::transpose(linalg::coordinates_in(dst, src)));
  }
  return g;
}

FilteredModule filtered_of_rees(const ReesModule& g) {
  if (g.dims.empty()) throw ValidationError("empty Rees module");
  if (!g.is_t_torsion_free()) throw PreconditionError("Rees module has t-torsion");
  const std::size_t top = g.dims.size() - 1;
  const std::size_t m = g.dims[top];
  // composite[k]: degree k piece -> top piece.
  std::vector<Matrix> composite(g.dims.size());
  composite[top] = Matrix::identity(m);
  for (std::size_t k = top; k-- > 0;) composite[k] = composite[k + 1] * g.t_maps[k];
  std::vector<Matrix> pieces;
  for (std::size_t k = g.dims.size(); k-- > 0;) {
    pieces.push_back(composite[k].cols() ? linalg::transpose(composite[k]) : Matrix(0, m));
  }
  return FilteredModule(m, -g.hi_degree(), std::move(pieces), g.zero_below);
}

FilteredModule shift_filtration(const FilteredModule& m, int n) {
  std::vector<Matrix> pieces;
  for (int i = m.lo(); i <= m.hi(); ++i) pieces.push_back(m.fil(i));
  return FilteredModule(m.ambient_dim(), m.lo() + n, std::move(pieces), m.zero_above());
}

ReesModule shift_rees(const ReesModule& g, int by) {
  ReesModule out = g;
  out.lo_degree += by;
  return out;
}

FilteredModule day_tensor(const FilteredModule& m, const FilteredModule& n) {
  const std::size_t dim = m.ambient_dim() * n.ambient_dim();
  const int lo = m.lo() + n.lo();
  const bool za = m.zero_above() && n.zero_above();
  const int hi = m.hi() + n.hi() + (za ? 0 : 1);
  std::vector<Matrix> pieces;
  for (int i = lo; i <= hi; ++i) {
    Matrix acc(0, dim);
    for (int j = m.lo(); j <= i - n.lo(); ++j) {
      const Matrix a = m.fil(j);
      const Matrix b = n.fil(i - j);
      if (a.rows() == 0 || b.rows() == 0) continue;
      acc = linalg::vstack(acc, linalg::kronecker(a, b));
    }
    pieces.push_back(linalg::span(acc));
  }
  return FilteredModule(dim, lo, std::move(pieces), za);
}

Completion complete_filtration(const FilteredModule& m, int depth) {
  const Matrix s = m.stable_piece();
  Completion out{s.rows() == 0, m, {}};
  for (int i = m.lo(); i <= m.lo() + depth; ++i) out.tower_dims.push_back(m.ambient_dim() - m.dim(i));
  if (out.complete) return out;
  // Quotient by S: reduce against the RREF basis of S, keep non-pivot coordinates.
  std::vector<std::size_t> piv;
  const Matrix sr = linalg::rref(s, &piv);
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < m.ambient_dim(); ++c)
    if (std::find(piv.begin(), piv.end(), c) == piv.end()) keep.push_back(c);
  auto project = [&](const Matrix& sub) {
    Matrix out_m(0, keep.size());
    for (std::size_t r = 0; r < sub.rows(); ++r) {
      auto v = sub.row(r);
      for (std::size_t k = 0; k < piv.size(); ++k) {
        const Rational f = v[piv[k]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * sr(k, c);
      }
      std::vector<Rational> w;
      for (auto c : keep) w.push_back(v[c]);
      out_m.append_row(w);
    }
    return linalg::span(out_m);
  };
  std::vector<Matrix> pieces;
  for (int i = m.lo(); i <= m.hi(); ++i) pieces.push_back(project(m.fil(i)));
  out.completed = FilteredModule(keep.size(), m.lo(), std::move(pieces), true);
  return out;
}

FilteredModule iadic_truncated(std::size_t nvars, int k) {
  if (k < 0) throw ValidationError("truncation degree must be non-negative");
  // Monomial counts per degree; basis sorted by degree.
  std::vector<std::size_t> per_degree;
  for (int j = 0; j <= k; ++j) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), nvars + static_cast<unsigned long>(j) - 1, static_cast<unsigned long>(j));
    per_degree.push_back(nvars == 0 ? (j == 0 ? 1 : 0) : c.get_ui());
  }
  std::size_t total = 0;
  for (auto c : per_degree) total += c;
  std::vector<Matrix> pieces;
  std::size_t start = 0;
  for (int i = 0; i <= k; ++i) {
    Matrix p(0, total);
    for (std::size_t r = start; r < total; ++r) {
      std::vector<Rational> row(total);
      row[r] = 1;
      p.append_row(row);
    }
    pieces.push_back(std::move(p));
    start += per_degree[static_cast<std::size_t>(i)];
  }
  return FilteredModule(total, 0, std::move(pieces), true);
}

// ---------------------------------------------------------------------------
// I-adic associated graded

Ring tensor_square(const Ring& a) {
  if (a.has_relations() || a.base_kind() != BaseKind::rationals) {
    throw Unsupported("tensor squares need a polynomial or Laurent ring over Q, got " + a.descriptor());
  }
  std::vector<std::string> vars = a.vars();
  std::vector<std::string> inv;
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    vars.push_back(a.vars()[i] + "_2");
    if (a.is_inverted(i)) inv.push_back(a.vars()[i]);
  }
  for (std::size_t i = 0; i < a.num_vars(); ++i)
    if (a.is_inverted(i)) inv.push_back(a.vars()[i] + "_2");
  if (vars.empty()) return Ring::rationals();
  return Ring::polynomial(Ring::rationals(), vars, inv);
}

namespace {

using UPoly = std::map<std::vector<int>, Rational>;

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  UPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

std::vector<GradedPiece> iadic_gr(const Ring& a, const std::vector<std::string>& generators, int top_degree) {
  if (top_degree < 0) throw ValidationError("top degree must be non-negative");
  const Ring aa = tensor_square(a);
  const std::size_t n = a.num_vars();
  // Linear forms: x_2 = x + u.
  std::vector<UPoly> forms;
  for (const auto& text : generators) {
    const Element g = aa.parse_element(text);
    // Expand each term by the binomial theorem in u.
    UPoly expanded;
    for (const auto& [e, c] : g.terms()) {
      std::vector<int> base_shift(2 * n, 0);
      for (std::size_t i = 0; i < n; ++i) base_shift[i] = e[i];
      UPoly acc;
      acc[base_shift] = c;
      for (std::size_t i = 0; i < n; ++i) {
        const int k = e[n + i];
        if (k < 0) throw Unsupported("generator " + text + " has a negative power of " + aa.vars()[n + i]);
        // (x + u)^k
        UPoly bin;
        Integer binom = 1;
        for (int j = 0; j <= k; ++j) {
          std::vector<int> ex(2 * n, 0);
          ex[i] = k - j;
          ex[n + i] = j;
          bin[ex] = Rational(binom);
          binom = binom * (k - j) / (j + 1);
        }
        acc = upoly_mul(acc, bin);
      }
      for (const auto& [ex, cc] : acc) expanded[ex] += cc;
    }
    std::vector<Rational> coeffs(n);
    for (const auto& [ex, cc] : expanded) {
      if (cc == 0) continue;
      int udeg = 0;
      bool x_free = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (ex[i] != 0) x_free = false;
        udeg += ex[n + i];
      }
      if (!x_free || udeg != 1) {
        throw Unsupported("generator " + text + " is not a constant-coefficient linear form in x_2 - x");
      }
      for (std::size_t i = 0; i < n; ++i)
        if (ex[n + i] == 1) coeffs[i] += cc;
    }
    UPoly form;
    for (std::size_t i = 0; i < n; ++i) {
      if (coeffs[i] == 0) continue;
      std::vector<int> ex(n, 0);
      ex[i] = 1;
      form[ex] = coeffs[i];
    }
    forms.push_back(std::move(form));
  }

  std::vector<GradedPiece> out;
  for (int deg = 0; deg <= top_degree; ++deg) {
    GradedPiece piece;
    piece.degree = deg;
    if (deg == 0) {
      piece.generators = {"1"};
      piece.rank = 1;
      piece.relations = Matrix(0, 1);
      out.push_back(std::move(piece));
      continue;
    }
    // Multisets of generator indices of size deg.
    std::vector<std::vector<std::size_t>> combos;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (cur.size() == static_cast<std::size_t>(deg)) {
        combos.push_back(cur);
        return;
      }
      for (std::size_t g = start; g < forms.size(); ++g) {
        cur.push_back(g);
        rec(g);
        cur.pop_back();
      }
    };
    rec(0);
    std::vector<UPoly> products;
    std::map<std::vector<int>, std::size_t> monomial_index;
    for (const auto& c : combos) {
      UPoly p;
      p[std::vector<int>(n, 0)] = 1;
      std::string name;
      for (auto g : c) {
        p = upoly_mul(p, forms[g]);
        name += (name.empty() ? "" : "*") + ("(" + generators[g] + ")");
      }
      for (const auto& [ex, cc] : p) monomial_index.emplace(ex, 0);
      products.push_back(std::move(p));
      piece.generators.push_back(std::move(name));
    }
    std::size_t col = 0;
    for (auto& [ex, idx] : monomial_index) idx = col++;
    Matrix m(products.size(), monomial_index.size());
    for (std::size_t r = 0; r < products.size(); ++r)
      for (const auto& [ex, cc] : products[r]) m(r, monomial_index[ex]) = cc;
    piece.rank = linalg::rank(m);
    piece.relations = linalg::nullspace(linalg::transpose(m));
    out.push_back(std::move(piece));
  }
  return out;
}

}  // namespace wittforge
