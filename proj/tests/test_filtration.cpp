#include <doctest.h>

#include "wittforge/errors.hpp"
#include "wittforge/filtration.hpp"
#include "wittforge/ring.hpp"

using namespace wittforge;

TEST_CASE("twists") {
  const auto q1 = FilteredModule::twist(1);
  CHECK(q1.dim(0) == 1);
  CHECK(q1.dim(1) == 1);
  CHECK(q1.dim(2) == 0);
  CHECK(shift_filtration(FilteredModule::trivial(), 3) == FilteredModule::twist(3));
  CHECK(day_tensor(FilteredModule::twist(2), FilteredModule::twist(-1)) == FilteredModule::twist(1));
}

TEST_CASE("rees of the twist") {
  const auto g = rees_of_filtered(FilteredModule::twist(1));
  CHECK(g.generator_degrees() == std::vector<std::pair<int, std::size_t>>{{-1, 1}});
  CHECK(g.dim(-1) == 1);
  CHECK(g.dim(-2) == 0);
  CHECK(g.dim(5) == 1);
  CHECK(g.is_t_torsion_free());
}

TEST_CASE("flags") {
  const auto f = FilteredModule::flag(-1, {3, 2, 0});
  CHECK(f.dim(-5) == 3);
  CHECK(f.dim(0) == 2);
  CHECK(f.dim(1) == 0);
  const auto g = rees_of_filtered(f);
  // generators: 2 in degree 0 (Fil^0), 1 in degree 1 (Fil^-1)
  CHECK(g.generator_degrees() == std::vector<std::pair<int, std::size_t>>{{0, 2}, {1, 1}});
  CHECK(filtered_of_rees(g) == f);
  CHECK_THROWS_AS(FilteredModule::flag(0, {1, 2}), ValidationError);
}

TEST_CASE("day tensor dims") {
  const auto f = FilteredModule::flag(0, {2, 1, 0});
  const auto t = day_tensor(f, f);
  CHECK(t.ambient_dim() == 4);
  CHECK(t.dim(0) == 4);
  CHECK(t.dim(1) == 3);
  CHECK(t.dim(2) == 1);
  CHECK(t.dim(3) == 0);
}

TEST_CASE("torsion rejected") {
  ReesModule g{0, {1, 1}, {linalg::Matrix(1, 1)}, true};
  CHECK_FALSE(g.is_t_torsion_free());
  CHECK_THROWS_AS(filtered_of_rees(g), PreconditionError);
}

TEST_CASE("completion") {
  CHECK(complete_filtration(FilteredModule::trivial(2), 2).complete);
  const auto c = complete_filtration(FilteredModule::constant(2), 1);
  CHECK_FALSE(c.complete);
  CHECK(c.completed.ambient_dim() == 0);
  const auto t = complete_filtration(iadic_truncated(1, 2), 3);
  CHECK(t.tower_dims == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("I-adic graded pieces") {
  const auto pieces = iadic_gr(Ring::parse("poly(rationals; x, z)"), {"x_2 - x", "z_2 - z"}, 3);
  REQUIRE(pieces.size() == 4);
  CHECK(pieces[0].rank == 1);
  CHECK(pieces[1].rank == 2);
  CHECK(pieces[2].rank == 3);
  CHECK(pieces[3].rank == 4);
  const auto one = iadic_gr(Ring::parse("poly(rationals; x)"), {"x_2 - x", "2*x_2 - 2*x"}, 2);
  CHECK(one[1].rank == 1);
  CHECK(one[1].relations.rows() == 1);
  CHECK(tensor_square(Ring::parse("poly(rationals; x)")).vars() == std::vector<std::string>{"x", "x_2"});
  CHECK_THROWS_AS(iadic_gr(Ring::parse("poly(rationals; x)"), {"x*x_2 - x"}, 2), Unsupported);
}
