#include <catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "spmodels/transvector.hpp"

using namespace spm;

namespace {

// All monomials of x-degree a, u-degree b and no z on the universe (n, 2).
std::vector<Poly> basis(int n, int a, int b) {
  const Universe u{n, 2};
  std::vector<Poly> out;
  for (const auto& m : monomial_basis(u, MultiDegree{{a, b}, 0})) out.push_back(Poly::from_monomial(u, m));
  return out;
}

}  // namespace

TEST_CASE("sl2 triples satisfy the bracket identities") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& name : triple_names()) REQUIRE(check_triple(build_triple(name, n)).ok());
  REQUIRE_THROWS_AS(build_triple("nope", 2), InvalidInput);
}

TEST_CASE("projector examples") {
  const Sl2Triple t = sl2_u_triple(2);
  const Universe u{2, 2};
  const Poly hw = Poly::variable(u, VarId::x(2, 1)) * Poly::variable(u, VarId::x(2, 2));
  REQUIRE(apply(t.X, hw).is_zero());
  const auto r = extremal_project(t, hw);
  REQUIRE(r.output == hw);
  REQUIRE(r.termsUsed == 0);

  const Poly q = Poly::variable(u, VarId::x(2, 1));
  REQUIRE(apply(t.X, q).is_zero());
  const Poly yq = apply(t.Y, q);
  REQUIRE_FALSE(yq.is_zero());
  REQUIRE(extremal_project(t, yq).output.is_zero());

  REQUIRE_THROWS_AS(extremal_project(t, q + Poly::constant(u, 1)), InvalidInput);
}

TEST_CASE("singular weights raise an error") {
  const Sl2Triple t = finite_xy_triple();
  const Universe u{1, 1};
  const Poly y2 = pow(Poly::variable(u, VarId::y(1, 1)), 2);
  REQUIRE_THROWS_AS(extremal_project(t, y2), ComputationError);
  const auto r = try_extremal_project(t, y2);
  REQUIRE(r.singularFailure.has_value());
  REQUIRE(r.output.is_zero());
  const Poly xy = Poly::variable(u, VarId::x(1, 1)) * Poly::variable(u, VarId::y(1, 1));
  REQUIRE(extremal_project(t, xy).output.is_zero());
}

TEST_CASE("projector identities on full monomial bases") {
  const Sl2Triple t = sl2_u_triple(2);
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 4; ++b)
      for (const auto& p : basis(2, a, b)) {
        const Poly pi = extremal_project(t, p).output;
        REQUIRE(apply(t.X, pi).is_zero());
        if (!pi.is_zero()) REQUIRE(extremal_project(t, pi).output == pi);
        if (apply(t.X, p).is_zero()) REQUIRE(pi == p);
      }
}

TEST_CASE("harmonic projector gives harmonic polynomials") {
  const Sl2Triple t = harmonic_triple(2);
  const Universe u{2, 1};
  for (int k = 0; k <= 4; ++k)
    for (const auto& m : monomial_basis(u, MultiDegree{{k}, 0})) {
      const Poly pi = extremal_project(t, Poly::from_monomial(u, m)).output;
      REQUIRE(apply(laplacian(u, 1), pi).is_zero());
    }
}

TEST_CASE("transvector two-term formula agrees with the full series") {
  const Sl2Triple t = sl2_u_triple(2);
  
  for (int b = 0; b <= 4; ++b) {
    GradedSpec s;
    s.n = 2;
    s.copies = 2;
    s.degrees = {1, b};
    s.zMax = 2;
    s.allowNonDominant = true;
    const KernelBasis kb = joint_kernel({{"D_s(u2)", symplectic_dirac(s.universe(), 2)}}, s);
    for (const auto& f : kb.vectors) {
      const Poly dx = apply(symplectic_dirac(s.universe(), 1), f);
      REQUIRE(transvector_project_Dsx(f, 2) == extremal_project(t, dx).output);
    }
  }
  const Universe u{2, 2};
  const Poly f = Poly::variable(u, VarId::x(1, 1)) * Poly::variable(u, VarId::z(1));
  REQUIRE(transvector_project_Dsx(f, 2) == apply(symplectic_dirac(u, 1), f));
}

TEST_CASE("the truncation justification commutator vanishes") {
  for (int n = 1; n <= 3; ++n) {
    const Universe u{n, 2};
    REQUIRE(commutator(symplectic_pairing_derivs(u, 1, 2), symplectic_dirac(u, 1)).is_zero());
  }
}

TEST_CASE("rs_apply examples") {
  const Universe u{2, 2};
  const Poly f = Poly::variable(u, VarId::x(1, 1)) * Poly::variable(u, VarId::z(2));
  REQUIRE(rs_apply(f, 0, 2, default_rs_denominator(0, 2)) == apply(symplectic_dirac(u, 1), f));
  REQUIRE(rs_apply(Poly(u), 1, 2, 5).is_zero());
  REQUIRE_THROWS_AS(rs_apply(f, 0, 2, 0), InvalidInput);
}

TEST_CASE("rs_calibrate finds a working denominator") {
  for (auto [k, n, zMax] : std::vector<std::tuple<int, int, int>>{{1, 2, 3}, {2, 2, 3}, {1, 3, 2}}) {
    const auto rep = rs_calibrate(k, n, zMax, default_rs_candidates(k, n));
    REQUIRE_FALSE(rep.workingDenominators.empty());
    REQUIRE(rep.kernelDim > 0);
    REQUIRE(rep.defaultDenominator == k + n + 2);
    GradedSpec s;
    s.n = n;
    s.copies = 2;
    s.degrees = {1, k};
    s.zMax = zMax;
    s.allowNonDominant = true;
    const WeylOp du = symplectic_dirac(s.universe(), 2);
    const KernelBasis kb = joint_kernel({{"D_s(u2)", du}}, s);
    for (const auto& c : rep.workingDenominators)
      for (const auto& f : kb.vectors) REQUIRE(apply(du, rs_apply(f, k, n, c)).is_zero());
  }
}

TEST_CASE("rs_calibrate edge cases") {
  const auto all = rs_calibrate(0, 2, 2, {1, 3, 7});
  REQUIRE(all.everyDenominatorWorks);
  REQUIRE(all.workingDenominators.size() == 3);
  REQUIRE_THROWS_AS(rs_calibrate(1, 2, 2, {0}), InvalidInput);
  REQUIRE_THROWS_AS(rs_calibrate(1, 2, 2, {}), InvalidInput);
}
