#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "spmodels/exactpoly.hpp"

using namespace spm;

namespace {

Poly var(const Universe& u, VarId v) { return Poly::variable(u, v); }

}  // namespace

TEST_CASE("rationals are canonical") {
  REQUIRE(to_string(parse_rational("6/4")) == "3/2");
  REQUIRE(to_string(parse_rational(" -0/7 ")) == "0");
  REQUIRE_THROWS_AS(parse_rational("4/-2"), InvalidInput);
  REQUIRE_THROWS_AS(parse_rational("1/0"), InvalidInput);
  REQUIRE_THROWS_AS(parse_rational("abc"), InvalidInput);
}

TEST_CASE("variable slots follow the fixed order") {
  const Universe u{3, 2};
  REQUIRE(u.num_vars() == 15);
  REQUIRE(slot_of(u, VarId::x(1, 1)) == 0);
  REQUIRE(slot_of(u, VarId::y(1, 1)) == 3);
  REQUIRE(slot_of(u, VarId::x(2, 1)) == 6);
  REQUIRE(slot_of(u, VarId::z(1)) == 12);
  for (int s = 0; s < u.num_vars(); ++s) REQUIRE(slot_of(u, var_at(u, s)) == s);
  REQUIRE(parse_var("y2.3", u) == VarId::y(2, 3));
  REQUIRE(parse_var("z2", u) == VarId::z(2));
  REQUIRE_THROWS_AS(parse_var("x3.1", u), InvalidInput);
  REQUIRE_THROWS_AS(parse_var("x1", u), InvalidInput);  // alias only for one copy
  REQUIRE(parse_var("x2", Universe{3, 1}) == VarId::x(1, 2));
}

TEST_CASE("poly_add examples") {
  const Universe u{2, 2};
  const Poly x = var(u, VarId::x(1, 1));
  REQUIRE((x + (-x)).is_zero());
  const Poly sq = x * x;
  const Poly two = sq + sq;
  REQUIRE(two.size() == 1);
  REQUIRE(two.coefficient(two.terms().begin()->first) == 2);
  const Poly mixed = x * var(u, VarId::x(2, 1)) + var(u, VarId::z(1));
  REQUIRE(mixed.size() == 2);
  REQUIRE_THROWS_AS(x + Poly::variable(Universe{2, 1}, VarId::x(1, 1)), InvalidInput);
}

TEST_CASE("poly_mul examples") {
  const Universe u{2, 2};
  const Poly a = var(u, VarId::x(1, 1)), b = var(u, VarId::x(1, 2));
  REQUIRE((a * b).size() == 1);
  // (x1.1*x2.2 - x1.2*x2.1)^2: hand expansion gives coefficients 1, -2, 1
  const Poly w = a * var(u, VarId::x(2, 2)) - b * var(u, VarId::x(2, 1));
  const Poly sq = w * w;
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : sq.terms()) coeffs.push_back(c);
  REQUIRE(coeffs == std::vector<Rational>{1, -2, 1});
  REQUIRE((a * Poly(u)).is_zero());
  REQUIRE(pow(a + b, 3).size() == 4);
}

TEST_CASE("partial examples") {
  const Universe u{2, 2};
  const Poly x = var(u, VarId::x(1, 1));
  REQUIRE(partial(x * x * x, VarId::x(1, 1)) == 3 * (x * x));
  REQUIRE(partial(x * var(u, VarId::z(2)), VarId::z(1)).is_zero());
  const Poly w = x * var(u, VarId::x(2, 2)) - var(u, VarId::x(1, 2)) * var(u, VarId::x(2, 1));
  REQUIRE(partial(w, VarId::x(1, 1)) == var(u, VarId::x(2, 2)));
}

TEST_CASE("homogeneous_component examples") {
  const Universe u{1, 1};
  const Poly x = var(u, VarId::x(1, 1));
  const Poly p = x + x * x;
  REQUIRE(homogeneous_component(p, MultiDegree{{1}, 0}) == x);
  REQUIRE(homogeneous_component(x * x, MultiDegree{{2}, 0}) == x * x);
  std::mt19937 rng(7);
  const Universe u2{2, 2};
  for (int t = 0; t < 20; ++t) {
    const Poly q = oracle::random_poly(u2, rng, 4, 8);
    Poly sum(u2);
    for (const auto& d : q.degrees()) {
      const Poly c = homogeneous_component(q, d);
      REQUIRE(homogeneous_component(c, d) == c);
      sum += c;
    }
    REQUIRE(sum == q);
  }
}

TEST_CASE("monomial_basis counts") {
  REQUIRE(monomial_basis(Universe{4, 1}, MultiDegree{{2}, 0}).size() == 36);
  REQUIRE(monomial_basis(Universe{4, 2}, MultiDegree{{2, 1}, 0}).size() == 288);
  const auto one = monomial_basis(Universe{3, 2}, MultiDegree{{0, 0}, 0});
  REQUIRE(one.size() == 1);
  REQUIRE(one[0].is_one());
  for (int n = 1; n <= 3; ++n)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int z = 0; z <= 2; ++z) {
          const auto basis = monomial_basis(Universe{n, 2}, MultiDegree{{a, b}, z});
          const long expected = oracle::pascal(a + 2 * n - 1, 2 * n - 1) * oracle::pascal(b + 2 * n - 1, 2 * n - 1) *
                                oracle::pascal(z + n - 1, n - 1);
          REQUIRE(static_cast<long>(basis.size()) == expected);
          REQUIRE(std::is_sorted(basis.begin(), basis.end(), TermOrder{}));
        }
  REQUIRE(orthogonal_monomial_basis(Universe{3, 1}, 1, 2).size() == 6);
}

TEST_CASE("term order puts higher exponents first") {
  const Universe u{2, 1};
  const Poly a = var(u, VarId::x(1, 1)), b = var(u, VarId::x(1, 2));
  const Poly p = b * b + a * b + a * a;
  REQUIRE(to_string(p) == "x1.1^2 + x1.1*x1.2 + x1.2^2");
}

TEST_CASE("ring axioms and the derivation rule on random polynomials") {
  std::mt19937 rng(12345);
  const Universe u{2, 2};
  for (int t = 0; t < 40; ++t) {
    const Poly p = oracle::random_poly(u, rng, 3, 5);
    const Poly q = oracle::random_poly(u, rng, 3, 5);
    const Poly r = oracle::random_poly(u, rng, 2, 4);
    REQUIRE((p * q) * r == p * (q * r));
    REQUIRE(p * q == q * p);
    REQUIRE(p * (q + r) == p * q + p * r);
    REQUIRE(p + q == q + p);
    const VarId v = var_at(u, t % u.num_vars());
    REQUIRE(partial(p * q, v) == partial(p, v) * q + p * partial(q, v));
  }
}

TEST_CASE("multidegree is additive") {
  const Universe u{2, 2};
  const Poly a = var(u, VarId::x(1, 1)) * var(u, VarId::z(2));
  const Poly b = var(u, VarId::y(2, 2)) * var(u, VarId::y(1, 1));
  const MultiDegree da = *a.degrees().begin(), db = *b.degrees().begin(), dab = *(a * b).degrees().begin();
  REQUIRE(dab.perCopy == std::vector<int>{da.perCopy[0] + db.perCopy[0], da.perCopy[1] + db.perCopy[1]});
  REQUIRE(dab.zDegree == da.zDegree + db.zDegree);
}
