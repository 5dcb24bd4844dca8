#include <doctest.h>

#include <random>

#include "wittforge/errors.hpp"
#include "wittforge/ring.hpp"

using namespace wittforge;

TEST_CASE("integers and zmod basics") {
  const Ring z = Ring::integers();
  CHECK((z.from_integer(3) * z.from_integer(-4)).to_string() == "-12");
  const Ring z6 = Ring::parse("zmod:6");
  CHECK(z6.from_integer(7) == z6.one());
  CHECK(z6.from_integer(-1) == z6.from_integer(5));
  CHECK(z6.is_finite());
  CHECK(*z6.order() == 6);
  CHECK(z6.enumerate().size() == 6);
  CHECK_FALSE(z6.is_torsion_free());
  CHECK(z.is_torsion_free());
}

TEST_CASE("quotient rings reduce") {
  const Ring r = Ring::parse("quot(poly(zmod:4; x); x^2)");
  const Element x = r.variable("x");
  CHECK((x * x).is_zero());
  CHECK(r.enumerate().size() == 16);
  CHECK(*elem_is_nilpotent(x) == 2);
  CHECK(elem_is_unit(r.one() + x));
  CHECK_FALSE(elem_is_unit(r.from_integer(2)));
  // (1 + x)^{-1} = 1 - x
  CHECK(*elem_is_unit(r.one() + x) == r.one() - x);
}

TEST_CASE("laurent variables invert") {
  const Ring r = Ring::parse("poly(rationals; t; inv t)");
  const Element t = r.variable("t");
  CHECK((t * r.parse_element("t^-1")).is_one());
  CHECK(elem_is_unit(t));
  CHECK_FALSE(elem_is_unit(t + r.one()));
}

TEST_CASE("descriptor round trip") {
  for (const char* d : {"integers", "rationals", "zmod:12", "poly(integers; a, b)", "quot(poly(zmod:9; t); t^2 - 3)",
                        "poly(rationals; t; inv t)"}) {
    const Ring r = Ring::parse(d);
    CHECK(Ring::parse(r.descriptor()) == r);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(Ring::parse("zmodd:3"), ParseError);
  CHECK_THROWS_AS(Ring::parse("poly(integers; x"), ParseError);
  CHECK_THROWS_AS(Ring::integers().parse_element("y"), ValidationError);
  CHECK_THROWS_AS(Ring::integers().parse_element("1 +"), ParseError);
}

TEST_CASE("exact division") {
  const Ring z = Ring::integers();
  CHECK(exact_div(z.from_integer(12), 4) == z.from_integer(3));
  CHECK_THROWS_AS(exact_div(z.from_integer(10), 4), InexactDivision);
}

TEST_CASE("number theory helpers") {
  CHECK(mod_floor(-7, 5) == 3);
  CHECK(*mod_inverse(3, 7) == 5);
  CHECK_FALSE(mod_inverse(2, 4));
  const auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<Integer, unsigned>{2, 3});
  CHECK(f[1] == std::pair<Integer, unsigned>{3, 2});
  CHECK(f[2] == std::pair<Integer, unsigned>{5, 1});
}

TEST_CASE("zmod arithmetic agrees with machine integers") {
  std::mt19937_64 rng(7);
  for (long m : {2L, 6L, 9L, 97L}) {
    const Ring r = Ring::zmod(m);
    for (int k = 0; k < 200; ++k) {
      const long a = static_cast<long>(rng() % 1000) - 500, b = static_cast<long>(rng() % 1000) - 500;
      const long sum = ((a + b) % m + m) % m, prod = ((a * b) % m + m) % m;
      CHECK(r.from_integer(a) + r.from_integer(b) == r.from_integer(sum));
      CHECK(r.from_integer(a) * r.from_integer(b) == r.from_integer(prod));
    }
  }
}
