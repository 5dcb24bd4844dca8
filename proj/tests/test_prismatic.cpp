#include <doctest.h>

#include <map>
#include <set>

#include "wittforge/errors.hpp"
#include "wittforge/prismatic.hpp"

using namespace wittforge;

namespace {

// Plain-integer model of Z[x]/(x^2) over W_1(Z/4) = Z/4 with xi = 2:
// objects (w, g) with 2g = w^2, morphisms a with 2a = w' - w and
// g' = g + 2wa + 2a^2 (the level two square of (w, a)).
struct Model {
  std::vector<std::pair<int, int>> objects;
  std::map<std::pair<std::size_t, std::size_t>, int> homs;
};

Model model() {
  Model m;
  for (int w = 0; w < 4; ++w)
    for (int g = 0; g < 4; ++g)
      if ((2 * g - w * w) % 4 == 0) m.objects.emplace_back(w, g);
  for (std::size_t s = 0; s < m.objects.size(); ++s)
    for (std::size_t t = 0; t < m.objects.size(); ++t) {
      const auto [w, g] = m.objects[s];
      const auto [w2, g2] = m.objects[t];
      int n = 0;
      for (int a = 0; a < 4; ++a)
        if (((2 * a - (w2 - w)) % 4 + 4) % 4 == 0 && ((g + 2 * w * a + 2 * a * a - g2) % 4 + 4) % 4 == 0) ++n;
      m.homs[{s, t}] = n;
    }
  return m;
}

}  // namespace

TEST_CASE("context validation") {
  const Ring z4 = Ring::zmod(4);
  const IndexSet e = IndexSet::p_typical(2, 2);
  CHECK_THROWS_AS(PrismaticContext::make(witt_one(e, z4)), PreconditionError);
  CHECK_THROWS_AS(PrismaticContext::make(witt_parse(e, z4, {"1", "1"})), PreconditionError);
  const auto ctx = PrismaticContext::make(witt_parse(e, z4, {"2", "3"}));
  CHECK(ctx.witness.x == z4.from_integer(2));
}

TEST_CASE("W-bar over W_2(Z/4)") {
  const Ring z4 = Ring::zmod(4);
  const IndexSet e = IndexSet::p_typical(2, 2);
  const auto rep = wbar_ring(PrismaticContext::make(witt_parse(e, z4, {"2", "3"})));
  CHECK(rep.ok());
  CHECK(*rep.pi0.order == 4);
  CHECK(rep.rbar.classes.size() == 2);
  CHECK(rep.wbar_kernel_size == 2);
  CHECK(*rep.wbar_kernel_nilpotency == 2);
}

TEST_CASE("groupoid matches the integer model") {
  const Ring z4 = Ring::zmod(4);
  const auto ctx = PrismaticContext::make(witt_from_integer(IndexSet::p_typical(2, 1), z4, 2));
  const auto g = prismatic_points_affine(AffinePresentation::parse({"x"}, {"x^2"}), ctx);
  const Model m = model();
  REQUIRE(g.objects.size() == m.objects.size());
  std::map<std::pair<int, int>, std::size_t> where;
  for (std::size_t i = 0; i < g.objects.size(); ++i) {
    const int w = static_cast<int>(g.objects[i].w[0].at(1).constant_value()->get_num().get_si());
    const int gg = static_cast<int>(g.objects[i].g[0].at(1).constant_value()->get_num().get_si());
    where[{w, gg}] = i;
  }
  for (std::size_t s = 0; s < m.objects.size(); ++s)
    for (std::size_t t = 0; t < m.objects.size(); ++t)
      CHECK(g.morphisms[where.at(m.objects[s])][where.at(m.objects[t])].size() ==
            static_cast<std::size_t>(m.homs.at({s, t})));
  CHECK(g.morphism_count() == 16);
  CHECK(g.num_components == 2);
  CHECK(g.syzygy_violations == 0);
  CHECK(check_groupoid_axioms(g, AffinePresentation::parse({"x"}, {"x^2"}), ctx).failures.empty());
}

TEST_CASE("witt points") {
  const Ring f2 = Ring::zmod(2);
  const IndexSet d2 = IndexSet::divisors_of(2);
  CHECK(witt_points(AffinePresentation::parse({"x"}, {}), d2, f2).size() == 4);
  CHECK(witt_points(AffinePresentation::parse({"x"}, {"x^2 - x"}), d2, f2).size() == 2);
  CHECK(witt_points(AffinePresentation::parse({"x", "y"}, {"x*y - 1"}), d2, f2).size() == 2);
  CHECK(witt_points(AffinePresentation::parse({"x"}, {"2"}), d2, f2).empty());
  CHECK_THROWS(AffinePresentation::parse({"x"}, {"0"}));
  CHECK_THROWS(AffinePresentation::parse({"x"}, {"y"}));
}

TEST_CASE("budget") {
  const Ring z4 = Ring::zmod(4);
  const auto ctx = PrismaticContext::make(witt_parse(IndexSet::p_typical(2, 2), z4, {"2", "3"}));
  CHECK_THROWS_AS(prismatic_points_affine(AffinePresentation::parse({"x", "y"}, {}), ctx, 10), BudgetExceeded);
}
