#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "spmodels/linalg.hpp"

using namespace spm;

namespace {

std::vector<std::vector<Rational>> dense(const SparseMatrix& m) {
  std::vector<std::vector<Rational>> d(m.rows.size(), std::vector<Rational>(static_cast<std::size_t>(m.cols), 0));
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (const auto& [c, v] : m.rows[r]) d[r][static_cast<std::size_t>(c)] = v;
  return d;
}

SparseMatrix random_matrix(std::mt19937& rng, int rows, int cols, double fill) {
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> val(-6, 6), den(1, 4);
  SparseMatrix m;
  m.cols = cols;
  for (int r = 0; r < rows; ++r) {
    SparseRow row;
    for (int c = 0; c < cols; ++c)
      if (coin(rng) < fill) {
        const Rational v(val(rng), den(rng));
        if (v != 0) row.emplace_back(c, v);
      }
    m.rows.push_back(row);
  }
  return m;
}

}  // namespace

TEST_CASE("nullspace vectors are exact, primitive and complete") {
  std::mt19937 rng(314);
  for (int t = 0; t < 60; ++t) {
    const int rows = 1 + t % 7, cols = 2 + (t * 5) % 11;
    const SparseMatrix m = random_matrix(rng, rows, cols, 0.4);
    const auto ns = nullspace(m);
    const int r = oracle::dense_rank(dense(m));
    REQUIRE(static_cast<int>(ns.size()) == cols - r);
    REQUIRE(rank(m) == r);
    for (const auto& v : ns) {
      Integer g = 0;
      for (const auto& [c, x] : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      REQUIRE(g == 1);
      for (const auto& row : m.rows) {
        Rational dot = 0;
        for (const auto& [c, a] : row)
          for (const auto& [c2, x] : v)
            if (c == c2) dot += a * Rational(x);
        REQUIRE(dot == 0);
      }
    }
    // independence: stacking the vectors gives full rank
    if (!ns.empty()) {
      std::vector<std::vector<Rational>> d(ns.size(), std::vector<Rational>(static_cast<std::size_t>(cols), 0));
      for (std::size_t i = 0; i < ns.size(); ++i)
        for (const auto& [c, x] : ns[i]) d[i][static_cast<std::size_t>(c)] = Rational(x);
      REQUIRE(oracle::dense_rank(d) == static_cast<int>(ns.size()));
    }
  }
}

TEST_CASE("zero and empty matrices") {
  SparseMatrix m;
  m.cols = 3;
  REQUIRE(nullspace(m).size() == 3);
  m.rows.push_back({});
  REQUIRE(nullspace(m).size() == 3);
  // Laplacian on P_2(R^3): row (2,0,0,2,0,2) over x1^2,x1x2,x1x3,x2^2,x2x3,x3^2
  SparseMatrix lap;
  lap.cols = 6;
  lap.rows.push_back({{0, 2}, {3, 2}, {5, 2}});
  REQUIRE(nullspace(lap).size() == 5);
}

TEST_CASE("incremental span coordinates") {
  IncrementalSpan s;
  REQUIRE(s.insert({{0, 1}, {2, 2}}));
  REQUIRE(s.insert({{1, 3}}));
  REQUIRE_FALSE(s.insert({{0, 2}, {1, 3}, {2, 4}}));
  const auto c = s.coordinates({{0, 2}, {1, 6}, {2, 4}});
  REQUIRE(c);
  REQUIRE((*c)[0] == 2);
  REQUIRE((*c)[1] == 2);
  REQUIRE_FALSE(s.contains({{3, 1}}));
  REQUIRE(s.dimension() == 2);
}
