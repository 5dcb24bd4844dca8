#include <doctest.h>

#include "wittforge/cone.hpp"
#include "wittforge/errors.hpp"

using namespace wittforge;

namespace {
const Ring kZ = Ring::integers();
QuasiIdeal<ElementOps> rank_one(const Ring& r, const Element& d) { return {ElementOps{r}, {d}, {}}; }
}  // namespace

TEST_CASE("level two product") {
  const auto q = rank_one(kZ, kZ.from_integer(2));
  const ConeElement<ElementOps> u{kZ.from_integer(1), {{kZ.from_integer(3)}}};
  const ConeElement<ElementOps> v{kZ.from_integer(2), {{kZ.from_integer(5)}}};
  const auto p = cone_mul(q, u, v);
  CHECK(p.r == kZ.from_integer(2));
  CHECK(p.xs[0][0] == kZ.from_integer(41));
  CHECK(cone_str(q, p) == "(2, [41])");
}

TEST_CASE("level two against the explicit formula") {
  // (r, x)(s, y) = (rs, r y + s x + d x y) for d = 3
  const auto q = rank_one(kZ, kZ.from_integer(3));
  for (int r = -2; r <= 2; ++r)
    for (int x = -2; x <= 2; ++x)
      for (int s = -2; s <= 2; ++s)
        for (int y = -2; y <= 2; ++y) {
          const auto p = cone_mul(q, {kZ.from_integer(r), {{kZ.from_integer(x)}}},
                                  {kZ.from_integer(s), {{kZ.from_integer(y)}}});
          CHECK(p.r == kZ.from_integer(r * s));
          CHECK(p.xs[0][0] == kZ.from_integer(r * y + s * x + 3 * x * y));
        }
}

TEST_CASE("hom sets") {
  const auto q = rank_one(kZ, kZ.from_integer(2));
  const auto h = cone_hom_set(q, kZ.zero(), kZ.from_integer(4));
  REQUIRE(h.elements.size() == 1);
  CHECK(h.elements[0][0] == kZ.from_integer(2));
  CHECK(cone_hom_set(q, kZ.zero(), kZ.from_integer(3)).elements.empty());
  CHECK(cone_hom_set(rank_one(kZ, kZ.zero()), kZ.one(), kZ.one()).infinite);
  const Ring z4 = Ring::zmod(4);
  CHECK(cone_hom_set(rank_one(z4, z4.from_integer(2)), z4.zero(), z4.from_integer(2)).elements.size() == 2);
}

TEST_CASE("pi_0 descriptors") {
  CHECK(cone_pi0(rank_one(kZ, kZ.from_integer(6))).descriptor == "zmod:6");
  CHECK(cone_pi0(rank_one(kZ, kZ.zero())).descriptor == "integers");
  CHECK(cone_pi0(rank_one(kZ, kZ.one())).descriptor == "zero");
  const Ring z12 = Ring::zmod(12);
  const auto q = ideal_as_quasi_ideal(z12, {z12.from_integer(4), z12.from_integer(6)});
  const auto p = cone_pi0(q);
  CHECK(*p.order == 2);
  CHECK(p.ideal.size() == 6);
  // |I| = 144 / |syzygies|; d is onto (2) which has 6 elements
  CHECK(module_enumerate(q).size() * 2 == 12 * cone_kernel(q).size());
}

TEST_CASE("quasi-ideal law") {
  const Ring r = Ring::parse("poly(integers; a, b)");
  CHECK(quasi_ideal_check(rank_one(r, r.parse_element("a*b + 1"))).holds);
  const QuasiIdeal<ElementOps> bad{ElementOps{r}, {r.variable("a"), r.variable("b")}, {}};
  CHECK_FALSE(quasi_ideal_check(bad).holds);
}

TEST_CASE("level mismatch") {
  const auto q = rank_one(kZ, kZ.from_integer(2));
  CHECK_THROWS_AS(cone_mul(q, cone_one(q, 2), cone_one(q, 3)), ValidationError);
}
