#include <catch_amalgamated.hpp>

#include <algorithm>

#include "oracle.hpp"
#include "spmodels/kernelspaces.hpp"
#include "spmodels/tensorcalc.hpp"

using namespace spm;

namespace {

GradedSpec scalar_spec(int n, std::vector<int> degrees) {
  GradedSpec s;
  s.n = n;
  s.copies = static_cast<int>(degrees.size());
  s.degrees = std::move(degrees);
  return s;
}

GradedSpec orthogonal_spec(int m, int k) {
  GradedSpec s;
  s.n = m;
  s.degrees = {k};
  s.variables = VariableSet::Orthogonal;
  return s;
}

Weight padded(const std::vector<int>& degrees, int n) {
  return Weight::from_ints(std::vector<long>(degrees.begin(), degrees.end()), n);
}

}  // namespace

TEST_CASE("operator_matrix examples") {
  GradedSpec s = scalar_spec(1, {1});
  const Universe u = s.universe();
  const OperatorMatrix m = operator_matrix(WeylOp::derivative(u, VarId::x(1, 1)), s, MultiDegree{{0}, 0});
  REQUIRE(m.rows.size() == 1);
  REQUIRE(m.cols.size() == 2);
  REQUIRE(m.matrix.rows[0] == SparseRow{{0, 1}});

  const GradedSpec o = orthogonal_spec(3, 2);
  const OperatorMatrix lap = operator_matrix(orthogonal_laplacian(o.universe(), 1), o, MultiDegree{{0}, 0});
  REQUIRE(lap.rows.size() == 1);
  REQUIRE(lap.cols.size() == 6);
  REQUIRE(lap.matrix.rows[0] == SparseRow{{0, 2}, {3, 2}, {5, 2}});

  const OperatorMatrix zero = operator_matrix(WeylOp(u), s, MultiDegree{{1}, 0});
  for (const auto& r : zero.matrix.rows) REQUIRE(r.empty());

  REQUIRE_THROWS_AS(operator_matrix(WeylOp::variable(u, VarId::x(1, 1)), s, MultiDegree{{0}, 0}), InvalidInput);
}

TEST_CASE("joint_kernel examples") {
  const KernelBasis big = joint_kernel(symplectic_harmonic_ops(4, 2), scalar_spec(4, {2, 1}));
  REQUIRE(big.ambientDim == 288);
  REQUIRE(big.dimension() == 160);

  const KernelBasis h2 = joint_kernel(orthogonal_harmonic_ops(3), orthogonal_spec(3, 2));
  REQUIRE(h2.dimension() == 5);

  GradedSpec mono = scalar_spec(1, {0});
  mono.zMax = 3;
  const KernelBasis m = joint_kernel(symplectic_monogenic_ops(1, 1), mono);
  REQUIRE(m.dimension() == 4);
  REQUIRE(m.perZDegreeDims == std::map<int, int>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  REQUIRE(m.truncationStable);
}

TEST_CASE("kernel vectors are exactly annihilated") {
  for (const auto& degrees : std::vector<std::vector<int>>{{2, 1}, {2, 2}, {3, 1}}) {
    const auto ops = symplectic_harmonic_ops(2, 2);
    const KernelBasis kb = joint_kernel(ops, scalar_spec(2, degrees));
    for (const auto& v : kb.vectors)
      for (const auto& op : ops) REQUIRE(apply(op.op, v).is_zero());
  }
  GradedSpec mono = scalar_spec(2, {2});
  mono.zMax = 2;
  const auto ops = symplectic_monogenic_ops(2, 1);
  for (const auto& v : joint_kernel(ops, mono).vectors) REQUIRE(apply(ops[0].op, v).is_zero());
}

TEST_CASE("scalar model dimension equals the Weyl dimension") {
  for (int n = 1; n <= 4; ++n)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= a && a + b <= 4; ++b) {
        const std::vector<int> degrees = n >= 2 ? std::vector<int>{a, b} : std::vector<int>{a + b};
        if (n == 1 && b > 0) continue;
        const KernelBasis kb = joint_kernel(symplectic_harmonic_ops(n, static_cast<int>(degrees.size())),
                                            scalar_spec(n, degrees));
        REQUIRE(Integer(kb.dimension()) == weyl_dim(padded(degrees, n)));
      }
}

TEST_CASE("kernel dimension is invariant under operator permutation and monomial order") {
  const GradedSpec s = scalar_spec(3, {2, 2});
  auto ops = symplectic_harmonic_ops(3, 2);
  const int d = joint_kernel(ops, s).dimension();
  std::reverse(ops.begin(), ops.end());
  REQUIRE(joint_kernel(ops, s).dimension() == d);
  KernelOptions rev;
  rev.reverseMonomialOrder = true;
  REQUIRE(joint_kernel(ops, s, rev).dimension() == d);
  KernelOptions serial;
  serial.threads = 1;
  const KernelBasis a = joint_kernel(ops, s, serial);
  const KernelBasis b = joint_kernel(ops, s);
  REQUIRE(a.vectors == b.vectors);
}

TEST_CASE("Fischer decomposition on R^m") {
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= 6; ++k) {
      long sum = 0;
      for (int j = 0; 2 * j <= k; ++j)
        sum += joint_kernel(orthogonal_harmonic_ops(m), orthogonal_spec(m, k - 2 * j)).dimension();
      REQUIRE(sum == oracle::pascal(k + m - 1, m - 1));
    }
}

TEST_CASE("spec validation") {
  REQUIRE_THROWS_AS(joint_kernel({}, scalar_spec(2, {1, 2})), InvalidInput);
  GradedSpec nd = scalar_spec(2, {1, 2});
  nd.allowNonDominant = true;
  REQUIRE(joint_kernel({}, nd).dimension() == 4 * 10);
  REQUIRE_THROWS_AS(joint_kernel(symplectic_harmonic_ops(1, 2), scalar_spec(1, {1, 1})), InvalidInput);
  GradedSpec oor = scalar_spec(1, {1, 1});
  oor.allowOutOfRange = true;
  const KernelBasis kb = joint_kernel(symplectic_harmonic_ops(1, 2), oor);
  REQUIRE(kb.warnings.size() == 1);
  REQUIRE_THROWS_AS(joint_kernel(symplectic_harmonic_ops(2, 2), scalar_spec(3, {1, 1})), InvalidInput);
}

TEST_CASE("monogenic kernels are stable under z truncation") {
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k <= 2; ++k) {
      GradedSpec s = scalar_spec(n, {k});
      s.zMax = 3;
      const KernelBasis kb = joint_kernel(symplectic_monogenic_ops(n, 1), s);
      REQUIRE(kb.truncationStable);
      REQUIRE(kb.dimension() > 0);
    }
}

TEST_CASE("determinantal_hwv examples") {
  const Universe one{3, 1};
  REQUIRE(determinantal_hwv(3, 1, {4}) == pow(Poly::variable(one, VarId::x(1, 1)), 4));
  const Universe u{3, 2};
  const Poly x1 = Poly::variable(u, VarId::x(1, 1)), x2 = Poly::variable(u, VarId::x(1, 2));
  const Poly u1 = Poly::variable(u, VarId::x(2, 1)), u2 = Poly::variable(u, VarId::x(2, 2));
  REQUIRE(determinantal_hwv(3, 2, {1, 1}) == x1 * u2 - x2 * u1);
  for (int l1 = 0; l1 <= 3; ++l1)
    for (int l2 = 0; l2 <= l1; ++l2)
      REQUIRE(determinantal_hwv(3, 2, {l1, l2}) ==
              pow(x1, static_cast<unsigned>(l1 - l2)) * pow(x1 * u2 - x2 * u1, static_cast<unsigned>(l2)));
  REQUIRE_THROWS_AS(determinantal_hwv(3, 2, {1, 2}), InvalidInput);
}

TEST_CASE("hwv_verify on determinantal vectors") {
  for (int n = 2; n <= 4; ++n)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= a && a + b <= 4; ++b) {
        const Poly w = determinantal_hwv(n, 2, {a, b});
        const auto rep = hwv_verify(w, build_sp2n_realization(RealizationKind::Scalar, n, 2), symplectic_harmonic_ops(n, 2));
        REQUIRE(rep.allAnnihilated);
        REQUIRE(rep.cartanEigenvalues == padded({a, b}, n));
        GradedSpec s = scalar_spec(n, {a, b});
        for (const auto& op : symplectic_harmonic_ops(n, 2)) REQUIRE(apply(op.op, w).is_zero());
      }
}

TEST_CASE("hwv_verify on spinor vectors") {
  for (int n = 2; n <= 3; ++n)
    for (unsigned k = 0; k <= 3; ++k) {
      const Universe u{n, 1};
      const auto gens = build_sp2n_realization(RealizationKind::Spinor, n, 1);
      const Poly xk = pow(Poly::variable(u, VarId::x(1, 1)), k);
      const Weight lambda = Weight::from_ints({static_cast<long>(k)}, n);
      auto even = hwv_verify(xk, gens);
      auto odd = hwv_verify(xk * Poly::variable(u, VarId::z(n)), gens);
      REQUIRE(even.allAnnihilated);
      REQUIRE(odd.allAnnihilated);
      REQUIRE(even.cartanEigenvalues == spinor_tail(n, SpinorTail::Even) + lambda);
      REQUIRE(odd.cartanEigenvalues == spinor_tail(n, SpinorTail::Odd) + lambda);
    }
}

TEST_CASE("hwv_verify reports non-eigenvectors") {
  const Universe u{2, 1};
  const Poly p = Poly::variable(u, VarId::x(1, 1)) + Poly::variable(u, VarId::x(1, 2));
  REQUIRE_THROWS_AS(hwv_verify(p, build_sp2n_realization(RealizationKind::Scalar, 2, 1)), ComputationError);
  REQUIRE_THROWS_AS(hwv_verify(Poly(u), build_sp2n_realization(RealizationKind::Scalar, 2, 1)), InvalidInput);
  const auto rep = hwv_verify(Poly::variable(u, VarId::x(1, 2)), build_sp2n_realization(RealizationKind::Scalar, 2, 1));
  REQUIRE_FALSE(rep.allAnnihilated);
}
