#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "spmodels/rootdata.hpp"

using namespace spm;

TEST_CASE("weyl_dim examples") {
  REQUIRE(weyl_dim(Weight::zero(4)) == 1);
  REQUIRE(weyl_dim(Weight::from_ints({2, 1, 0, 0}, 4)) == 160);
  REQUIRE(weyl_dim(Weight::from_ints({3, 0, 0, 0}, 4)) == 120);
  REQUIRE_THROWS_AS(weyl_dim(Weight::from_ints({1, 2}, 2)), InvalidInput);
  REQUIRE_THROWS_AS(weyl_dim(parse_weight("1/2,0", 2)), InvalidInput);
}

TEST_CASE("weyl_dim agrees with the binomial formula on (k,0,...,0)") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= 8; ++k) {
      std::vector<long> w(static_cast<std::size_t>(n), 0);
      w[0] = k;
      REQUIRE(weyl_dim(Weight::from_ints(w, n)) == oracle::pascal(k + 2 * n - 1, 2 * n - 1));
    }
  for (int n = 1; n <= 5; ++n) REQUIRE(weyl_dim(Weight::from_ints({1}, n)) == 2 * n);
}

TEST_CASE("weyl_dim small values") {
  // sp(4): (1,1) is the 5-dimensional representation, (2,0) the adjoint
  REQUIRE(weyl_dim(Weight::from_ints({1, 1}, 2)) == 5);
  REQUIRE(weyl_dim(Weight::from_ints({2, 0}, 2)) == 10);
  REQUIRE(weyl_dim(Weight::from_ints({2, 0, 0}, 3)) == 21);
  REQUIRE(weyl_dim(Weight::from_ints({1, 1, 1}, 3)) == 14);
}

TEST_CASE("root counts") {
  for (int n = 1; n <= 5; ++n) {
    const auto rs = root_system_sp(n);
    REQUIRE(static_cast<int>(rs.longRoots.size()) == 2 * n);
    REQUIRE(static_cast<int>(rs.shortRoots.size()) == 2 * (n * n - n));
    REQUIRE(static_cast<int>(rs.size()) == 2 * n * n);
    REQUIRE(static_cast<int>(rs.positiveRoots.size()) == n * n);
    REQUIRE(static_cast<int>(rs.simpleRoots.size()) == n);
  }
}

TEST_CASE("omega/epsilon conversions") {
  const int n = 4;
  std::vector<Rational> c(n, 0);
  c[n - 1] = Rational(-1, 2);
  REQUIRE(omega_to_epsilon(c) == spinor_tail(n, SpinorTail::Even));
  c[n - 2] = 1;
  c[n - 1] = Rational(-3, 2);
  REQUIRE(omega_to_epsilon(c) == spinor_tail(n, SpinorTail::Odd));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 50; ++t) {
    Weight w = Weight::zero(n);
    for (auto& x : w.coords) {
      x = Rational(d(rng), 2);
      x.canonicalize();
    }
    REQUIRE(omega_to_epsilon(epsilon_to_omega(w)) == w);
  }
}

TEST_CASE("dominance") {
  REQUIRE(is_dominant(Weight::from_ints({2, 1, 0, 0}, 4)));
  REQUIRE_FALSE(is_dominant(Weight::from_ints({1, 2, 0, 0}, 4)));
  REQUIRE_FALSE(is_dominant(Weight::from_ints({1, -1}, 2)));
  for (int k = 0; k < 4; ++k) {
    const Weight w = parse_weight(std::to_string(2 * k - 1) + "/2,-1/2,-1/2", 3);
    REQUIRE_FALSE(is_dominant(w));
    REQUIRE(is_spinor_dominant(w));
    REQUIRE(is_spinor_dominant(parse_weight(std::to_string(2 * k - 1) + "/2,-1/2,-3/2", 3)));
  }
  REQUIRE_FALSE(is_spinor_dominant(parse_weight("-3/2,-1/2", 2)));
  REQUIRE(parse_weight("2,1", 4) == Weight::from_ints({2, 1, 0, 0}, 4));
  REQUIRE_THROWS_AS(parse_weight("1,2,3", 2), InvalidInput);
}
