#include "wittforge/prismatic.hpp"

#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "wittforge/errors.hpp"

namespace wittforge {

namespace {

std::string key_of(const std::vector<WittVector>& ws) {
  std::string k;
  for (const auto& w : ws) k += w.to_string() + ";";
  return k;
}

// Least k with every k-fold product of `elems` inside `zero_set`.
template <class V, class Mul, class Key>
std::optional<unsigned> nilpotency_index(const std::vector<V>& elems, Mul mul, Key key,
                                         const std::unordered_set<std::string>& zero_set, unsigned cap = 16) {
  if (elems.empty()) return 1u;
  std::vector<V> products = elems;
  for (unsigned k = 1; k <= cap; ++k) {
    bool all_zero = true;
    for (const auto& p : products)
      if (!zero_set.count(key(p))) {
        all_zero = false;
        break;
      }
    if (all_zero) return k;
    std::vector<V> next;
    std::unordered_set<std::string> seen;
    for (const auto& p : products)
      for (const auto& e : elems) {
        auto m = mul(p, e);
        if (seen.insert(key(m)).second) next.push_back(std::move(m));
      }
    products = std::move(next);
  }
  return std::nullopt;
}

void check_budget(std::size_t used, std::size_t budget, const std::string& what) {
  if (used > budget) throw BudgetExceeded(what + " exceeds the search budget of " + std::to_string(budget));
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t budget, const std::string& what) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > budget / base) check_budget(budget + 1, budget, what);
    out *= base;
  }
  check_budget(out, budget, what);
  return out;
}

Integer integral_coefficient(const Rational& c) {
  if (c.get_den() != 1) throw ValidationError("relation coefficients must be integers");
  return c.get_num();
}

ConeElement<WittOps> cone_eval(const Element& f, const QuasiIdeal<WittOps>& q, const std::vector<WittVector>& w,
                               const std::vector<WittVector>& a) {
  const auto& e = q.ops.index_set;
  const auto& r = q.ops.ring;
  const auto zero = witt_zero(e, r);
  ConeElement<WittOps> acc{zero, {{zero}}};
  for (const auto& [ex, c] : f.terms()) {
    ConeElement<WittOps> term{witt_from_integer(e, r, integral_coefficient(c)), {{zero}}};
    for (std::size_t j = 0; j < ex.size(); ++j) {
      if (ex[j] < 0) throw ValidationError("relations must be polynomials");
      const ConeElement<WittOps> x{w[j], {{a[j]}}};
      for (int k = 0; k < ex[j]; ++k) term = cone_mul(q, term, x);
    }
    acc = cone_add(q, acc, term);
  }
  return acc;
}

template <class F>
void for_each_tuple(const std::vector<std::size_t>& sizes, F f) {
  std::vector<std::size_t> idx(sizes.size(), 0);
  for (auto s : sizes)
    if (s == 0) return;
  while (true) {
    f(idx);
    std::size_t k = sizes.size();
    while (k > 0) {
      --k;
      if (++idx[k] < sizes[k]) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (sizes.empty()) return;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

PrismaticContext PrismaticContext::make(const WittVector& xi) {
  const auto pctx = PredicateContext::automatic(xi.ring(), xi.index_set());
  auto wit = is_distinguished(xi, pctx);
  if (!wit) throw PreconditionError("xi = " + xi.to_string() + " is not distinguished");
  return PrismaticContext{xi.ring(), xi.index_set(), xi, pctx, *wit};
}

QuasiIdeal<WittOps> PrismaticContext::quasi_ideal() const {
  return QuasiIdeal<WittOps>{WittOps{index_set, ring}, {xi}, {}};
}

PrismaticContext PrismaticContext::scaled(const WittVector& unit) const {
  if (!witt_is_unit(unit)) throw PreconditionError(unit.to_string() + " is not a unit");
  return make(witt_mul(unit, xi));
}

bool WbarReport::ok() const {
  return map_well_defined && wbar_surjective && r_surjective && wbar_kernel_nilpotency && r_kernel_nilpotency;
}

WbarReport wbar_ring(const PrismaticContext& ctx, std::size_t level, std::size_t limit) {
  if (level < 1) throw ValidationError("cone level must be at least 1");
  if (!ctx.ring.is_finite()) throw Unsupported("W-bar pi_0 checks need a finite ring");
  WbarReport out;
  out.level = level;
  const auto q = ctx.quasi_ideal();
  out.pi0 = pi0_enumerate(q, limit);
  const Element x1 = ctx.xi.at(1);
  const QuasiIdeal<ElementOps> rq{ElementOps{ctx.ring}, {x1}, {}};
  out.rbar = pi0_enumerate(rq, limit);

  std::unordered_set<std::string> wideal, rideal;
  for (const auto& a : out.pi0.ideal) wideal.insert(a.to_string());
  for (const auto& a : out.rbar.ideal) rideal.insert(a.to_string());
  auto in_rideal = [&](const Element& a) { return rideal.count(a.to_string()) > 0; };

  out.map_well_defined = true;
  for (const auto& a : out.pi0.ideal)
    if (!in_rideal(a.at(1))) out.map_well_defined = false;

  out.wbar_surjective = true;
  for (const auto& c : out.rbar.classes) {
    bool hit = false;
    for (const auto& w : out.pi0.classes)
      if (in_rideal(w.at(1) - c)) {
        hit = true;
        break;
      }
    if (!hit) out.wbar_surjective = false;
  }

  std::vector<WittVector> kernel;
  for (const auto& w : out.pi0.classes)
    if (in_rideal(w.at(1))) kernel.push_back(w);
  out.wbar_kernel_size = kernel.size();
  out.wbar_kernel_nilpotency = nilpotency_index(
      kernel, [](const WittVector& a, const WittVector& b) { return witt_mul(a, b); },
      [](const WittVector& a) { return a.to_string(); }, wideal);

  // R -> R / (xi_1) is onto by construction; its kernel is the ideal itself.
  out.r_kernel_size = out.rbar.ideal.size();
  std::unordered_set<std::string> rzero{ctx.ring.zero().to_string()};
  out.r_kernel_nilpotency = nilpotency_index(
      out.rbar.ideal, [](const Element& a, const Element& b) { return a * b; },
      [](const Element& a) { return a.to_string(); }, rzero);
  return out;
}

// ---------------------------------------------------------------------------

AffinePresentation AffinePresentation::parse(const std::vector<std::string>& generators,
                                             const std::vector<std::string>& relations, bool regular) {
  AffinePresentation b;
  b.generators = generators;
  b.regular = regular;
  const Ring r = b.polynomial_ring();
  for (const auto& text : relations) {
    Element f = r.parse_element(text);
    if (f.is_zero()) throw ValidationError("relations must be nonzero");
    b.relations.push_back(std::move(f));
  }
  return b;
}

Ring AffinePresentation::polynomial_ring() const {
  if (generators.empty()) return Ring::integers();
  return Ring::polynomial(Ring::integers(), generators);
}

WittVector witt_eval(const Element& f, const std::vector<WittVector>& values, const IndexSet& e, const Ring& r) {
  if (values.size() != f.ring().num_vars()) throw ValidationError("wrong number of generator values");
  WittVector acc = witt_zero(e, r);
  for (const auto& [ex, c] : f.terms()) {
    WittVector term = witt_from_integer(e, r, integral_coefficient(c));
    for (std::size_t j = 0; j < ex.size(); ++j) {
      if (ex[j] < 0) throw ValidationError("relations must be polynomials");
      for (int k = 0; k < ex[j]; ++k) term = witt_mul(term, values[j]);
    }
    acc = witt_add(acc, term);
  }
  return acc;
}

std::vector<std::vector<WittVector>> witt_points(const AffinePresentation& b, const IndexSet& e, const Ring& r,
                                                 std::size_t budget) {
  if (!r.is_finite()) throw Unsupported("Witt points need a finite ring");
  const auto elems = witt_enumerate(e, r, budget);
  const std::size_t n = b.generators.size();
  checked_power(elems.size(), n, budget, "candidate generator images");
  std::vector<std::vector<WittVector>> out;
  for_each_tuple(std::vector<std::size_t>(n, elems.size()), [&](const std::vector<std::size_t>& idx) {
    std::vector<WittVector> w;
    for (auto i : idx) w.push_back(elems[i]);
    for (const auto& f : b.relations)
      if (!witt_eval(f, w, e, r).is_zero()) return;
    out.push_back(std::move(w));
  });
  return out;
}

// ---------------------------------------------------------------------------

std::size_t PointGroupoid::morphism_count() const {
  std::size_t n = 0;
  for (const auto& row : morphisms)
    for (const auto& hom : row) n += hom.size();
  return n;
}

std::vector<std::vector<std::size_t>> PointGroupoid::count_matrix() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& row : morphisms) {
    std::vector<std::size_t> r;
    for (const auto& hom : row) r.push_back(hom.size());
    out.push_back(std::move(r));
  }
  return out;
}

PointGroupoid prismatic_points_affine(const AffinePresentation& b, const PrismaticContext& ctx, std::size_t budget) {
  if (!ctx.ring.is_finite()) throw Unsupported("prismatic points need a finite ring");
  if (!b.regular) throw PreconditionError("the relations must be asserted Koszul-regular");
  if (b.relations.size() == 1 && b.relations.front().is_zero()) {
    throw PreconditionError("regularity assertion rejected: the relation is a zerodivisor");
  }
  const auto q = ctx.quasi_ideal();
  const auto& e = ctx.index_set;
  const auto& r = ctx.ring;
  const auto elems = witt_enumerate(e, r, budget);
  const std::size_t n = b.generators.size();
  const std::size_t m = b.relations.size();

  // xi a -> all a
  std::unordered_map<std::string, std::vector<std::size_t>> preimage;
  for (std::size_t i = 0; i < elems.size(); ++i) preimage[witt_mul(ctx.xi, elems[i]).to_string()].push_back(i);
  auto pre = [&](const WittVector& v) -> const std::vector<std::size_t>& {
    static const std::vector<std::size_t> none;
    auto it = preimage.find(v.to_string());
    return it == preimage.end() ? none : it->second;
  };

  PointGroupoid out;
  std::size_t work = checked_power(elems.size(), n, budget, "candidate generator images");
  for_each_tuple(std::vector<std::size_t>(n, elems.size()), [&](const std::vector<std::size_t>& idx) {
    std::vector<WittVector> w;
    for (auto i : idx) w.push_back(elems[i]);
    std::vector<const std::vector<std::size_t>*> choices;
    std::vector<std::size_t> sizes;
    for (const auto& f : b.relations) {
      choices.push_back(&pre(witt_eval(f, w, e, r)));
      sizes.push_back(choices.back()->size());
    }
    for_each_tuple(sizes, [&](const std::vector<std::size_t>& gi) {
      std::vector<WittVector> g;
      for (std::size_t k = 0; k < m; ++k) g.push_back(elems[(*choices[k])[gi[k]]]);
      out.objects.push_back({w, std::move(g)});
      check_budget(++work, budget, "object enumeration");
    });
  });

  // Koszul syzygies f_l g_k = f_k g_l
  for (const auto& o : out.objects) {
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = k + 1; l < m; ++l) {
        const auto lhs = witt_mul(witt_eval(b.relations[l], o.w, e, r), o.g[k]);
        const auto rhs = witt_mul(witt_eval(b.relations[k], o.w, e, r), o.g[l]);
        if (lhs != rhs) ++out.syzygy_violations;
      }
  }

  const std::size_t count = out.objects.size();
  out.morphisms.assign(count, std::vector<std::vector<std::vector<WittVector>>>(count));
  for (std::size_t s = 0; s < count; ++s)
    for (std::size_t t = 0; t < count; ++t) {
      const auto& src = out.objects[s];
      const auto& dst = out.objects[t];
      std::vector<const std::vector<std::size_t>*> choices;
      std::vector<std::size_t> sizes;
      for (std::size_t j = 0; j < n; ++j) {
        choices.push_back(&pre(witt_sub(dst.w[j], src.w[j])));
        sizes.push_back(choices.back()->size());
      }
      auto consider = [&](const std::vector<std::size_t>& ai) {
        std::vector<WittVector> a;
        for (std::size_t j = 0; j < n; ++j) a.push_back(elems[(*choices[j])[ai[j]]]);
        check_budget(++work, budget, "morphism enumeration");
        for (std::size_t k = 0; k < m; ++k) {
          const auto image = cone_eval(b.relations[k], q, src.w, a);
          if (witt_add(src.g[k], image.xs[0][0]) != dst.g[k]) return;
        }
        out.morphisms[s][t].push_back(std::move(a));
      };
      for_each_tuple(sizes, consider);
    }

  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (std::size_t s = 0; s < count; ++s)
    for (std::size_t t = 0; t < count; ++t)
      if (!out.morphisms[s][t].empty()) parent[find(s)] = find(t);
  std::map<std::size_t, std::size_t> label;
  for (std::size_t s = 0; s < count; ++s) {
    const auto root = find(s);
    auto it = label.emplace(root, label.size()).first;
    out.component.push_back(it->second);
  }
  out.num_components = label.size();
  return out;
}

GroupoidAxiomReport check_groupoid_axioms(const PointGroupoid& g, const AffinePresentation& b,
                                          const PrismaticContext& ctx, std::size_t budget) {
  GroupoidAxiomReport rep;
  const std::size_t count = g.objects.size();
  const std::size_t n = b.generators.size();
  std::vector<std::vector<std::set<std::string>>> homs(count, std::vector<std::set<std::string>>(count));
  for (std::size_t s = 0; s < count; ++s)
    for (std::size_t t = 0; t < count; ++t)
      for (const auto& a : g.morphisms[s][t]) homs[s][t].insert(key_of(a));
  auto add = [](const std::vector<WittVector>& x, const std::vector<WittVector>& y) {
    std::vector<WittVector> z;
    for (std::size_t j = 0; j < x.size(); ++j) z.push_back(witt_add(x[j], y[j]));
    return z;
  };
  const std::vector<WittVector> zero(n, witt_zero(ctx.index_set, ctx.ring));
  std::size_t work = 0;
  for (std::size_t s = 0; s < count; ++s) {
    ++rep.identities_checked;
    if (!homs[s][s].count(key_of(zero))) rep.failures.push_back("no identity at object " + std::to_string(s));
  }
  for (std::size_t s = 0; s < count; ++s)
    for (std::size_t t = 0; t < count; ++t)
      for (const auto& a : g.morphisms[s][t]) {
        std::vector<WittVector> inv;
        for (const auto& x : a) inv.push_back(witt_neg(x));
        ++rep.inverses_checked;
        if (!homs[t][s].count(key_of(inv)))
          rep.failures.push_back("no inverse for a morphism " + std::to_string(s) + " -> " + std::to_string(t));
      }
  for (std::size_t s = 0; s < count; ++s)
    for (std::size_t t = 0; t < count; ++t)
      for (std::size_t u = 0; u < count; ++u)
        for (const auto& a : g.morphisms[s][t])
          for (const auto& bb : g.morphisms[t][u]) {
            if (++work > budget) return rep;
            ++rep.compositions_checked;
            const auto c = add(a, bb);
            if (!homs[s][u].count(key_of(c)))
              rep.failures.push_back("composite " + std::to_string(s) + " -> " + std::to_string(t) + " -> " +
                                     std::to_string(u) + " is not a morphism");
            for (std::size_t v = 0; v < count && rep.associativity_checked < 2000; ++v)
              for (const auto& cc : g.morphisms[u][v]) {
                ++rep.associativity_checked;
                if (key_of(add(c, cc)) != key_of(add(a, add(bb, cc)))) rep.failures.push_back("associativity");
              }
          }
  return rep;
}

Json groupoid_to_json(const PointGroupoid& g) {
  Json out;
  Json objs = Json::array();
  for (const auto& o : g.objects) {
    Json w = Json::array(), gg = Json::array();
    for (const auto& x : o.w) w.push_back(coords_json(x.index_set(), x.coords()));
    for (const auto& x : o.g) gg.push_back(coords_json(x.index_set(), x.coords()));
    objs.push_back(Json{{"w", w}, {"g", gg}});
  }
  out["objects"] = objs;
  out["object_count"] = g.objects.size();
  out["morphism_count"] = g.morphism_count();
  out["morphism_counts"] = g.count_matrix();
  out["pi0"] = Json{{"classes", g.num_components}, {"component", g.component}};
  out["syzygy_violations"] = g.syzygy_violations;
  return out;
}

Json wbar_to_json(const WbarReport& r) {
  Json out;
  out["level"] = r.level;
  Json classes = Json::array();
  for (const auto& c : r.pi0.classes) classes.push_back(coords_json(c.index_set(), c.coords()));
  out["pi0"] = Json{{"order", r.pi0.order ? r.pi0.order->get_str() : "infinite"},
                    {"descriptor", r.pi0.descriptor},
                    {"classes", classes}};
  out["rbar"] = Json{{"order", r.rbar.order ? r.rbar.order->get_str() : "infinite"}, {"descriptor", r.rbar.descriptor}};
  out["map_well_defined"] = r.map_well_defined;
  out["surjective"] = r.wbar_surjective;
  out["kernel_size"] = r.wbar_kernel_size;
  out["kernel_nilpotency"] = r.wbar_kernel_nilpotency ? Json(*r.wbar_kernel_nilpotency) : Json(nullptr);
  out["r_kernel_size"] = r.r_kernel_size;
  out["r_kernel_nilpotency"] = r.r_kernel_nilpotency ? Json(*r.r_kernel_nilpotency) : Json(nullptr);
  out["ok"] = r.ok();
  return out;
}

}  // namespace wittforge
