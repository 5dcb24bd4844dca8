#include <doctest.h>

#include "wittforge/derham.hpp"

using namespace wittforge;

namespace {
std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}
}  // namespace

TEST_CASE("G_m") {
  const auto h = hodge_cohomology({1, 0});
  CHECK(h.h == std::vector<std::size_t>{1, 1});
  CHECK(h.fil_dim(0, 1) == 1);
  CHECK(h.fil_dim(1, 1) == 1);
  CHECK(h.fil_dim(2, 1) == 0);
  const Json r = derham_report(h);
  CHECK(r["H"].dump() == R"({"0":1,"1":1})");
  CHECK(r["Fil"].dump() == R"({"1":{"1":1,"2":0}})");
}

TEST_CASE("betti numbers") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b) {
      const auto h = hodge_cohomology({a, b});
      REQUIRE(h.h.size() == static_cast<std::size_t>(a + b + 1));
      for (int j = 0; j <= a + b; ++j) {
        CHECK(h.h[static_cast<std::size_t>(j)] == binom(a, j));
        CHECK(h.fil_dim(j, j) == binom(a, j));
        CHECK(h.fil_dim(j + 1, j) == 0);
      }
    }
}

TEST_CASE("slices") {
  const MonomialAlgebra alg{1, 1};
  // character (0, 0): only the torus direction
  const auto s0 = build_slice(alg, {0, 0});
  CHECK(s0.dim(0) == 1);
  CHECK(s0.dim(1) == 1);
  CHECK(s0.dim(2) == 0);
  CHECK_FALSE(slice_is_exact(s0));
  const auto s1 = build_slice(alg, {2, 1});
  CHECK(s1.dim(1) == 2);
  CHECK(s1.dim(2) == 1);
  CHECK(slice_is_exact(s1));
  CHECK(build_complex(alg, 1).size() == 6);
}

TEST_CASE("rees package of G_m^2") {
  const auto r = rees_package(hodge_cohomology({2, 0}));
  CHECK(r[1].generator_degrees() == std::vector<std::pair<int, std::size_t>>{{-1, 2}});
  CHECK(r[2].generator_degrees() == std::vector<std::pair<int, std::size_t>>{{-2, 1}});
}

TEST_CASE("points of G_a in the de Rham stack") {
  const Ring r = Ring::parse("quot(poly(rationals; t); t^3)");
  CHECK(cone_pi0(gadr_points(r, r.variable("t"))).descriptor == "quot(poly(rationals; t); t)");
  CHECK(cone_pi0(gadr_points(r, r.one())).descriptor == "zero");
}
