#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spmodels/linalg.hpp"
#include "spmodels/named_ops.hpp"
#include "spmodels/rootdata.hpp"

namespace spm {

enum class VariableSet {
  Symplectic,  // all x,y coordinates of every copy (plus z up to zMax)
  Orthogonal,  // x-coordinates of copy 1 only: P(R^n) for the orthogonal checks
};

/// A finite multi-graded piece P_{degrees} ⊗ P_{<=zMax}(z).
struct GradedSpec {
  int n = 1;
  int copies = 1;
  std::vector<int> degrees;
  std::optional<int> zMax;  // absent: scalar space (z-degree 0)
  VariableSet variables = VariableSet::Symplectic;
  bool allowNonDominant = false;
  /// Outside N <= n the kernel need not match the Weyl dimension; with this
  /// flag the computation proceeds and records a warning instead of failing.
  bool allowOutOfRange = false;

  Universe universe() const { return {n, copies}; }
  /// Throws InvalidInput; appends range warnings when allowed.
  void validate(std::vector<std::string>* warnings = nullptr) const;
};

struct LabeledOp {
  std::string label;
  WeylOp op;
};

/// z-degree plus twice the total y-degree. Every operator used for the kernel
/// spaces (D_s-type, contractions, sp(2n) generators) is homogeneous for it,
/// and a vector of grade g only involves z-degrees <= g, so the pieces of
/// grade <= zMax are computed without truncation loss. Coincides with the
/// z-degree on y-free vectors.
int spinor_grade(const Universe& u, const Monomial& m);

struct KernelBasis {
  GradedSpec spec;
  std::vector<std::string> operators;
  std::vector<Poly> vectors;
  int ambientDim = 0;
  /// Dimension per spinor grade (see spinor_grade); a single entry at 0 for
  /// scalar spaces.
  std::map<int, int> perZDegreeDims;
  /// Recomputing at zMax+1 leaves every grade <= zMax-1 unchanged.
  bool truncationStable = true;
  std::vector<std::string> warnings;

  int dimension() const { return static_cast<int>(vectors.size()); }
};

struct KernelOptions {
  bool reverseMonomialOrder = false;
  bool checkStability = true;
  int threads = 0;  // 0: SPMODELS_THREADS or hardware concurrency
};

/// Domain monomials of a spec in TermOrder (all z-degrees 0..zMax).
std::vector<Monomial> domain_basis(const GradedSpec& spec);

struct OperatorMatrix {
  SparseMatrix matrix;
  std::vector<Monomial> rows;  // codomain basis
  std::vector<Monomial> cols;  // domain basis
};

/// Matrix of A from the domain piece to the codomain piece with per-copy
/// degrees codomain.perCopy. For scalar specs the codomain z-degree is exactly
/// codomain.zDegree; with zMax set it is every z-degree <= codomain.zDegree.
/// Throws InvalidInput if A maps outside the codomain (degree-shift mismatch).
OperatorMatrix operator_matrix(const WeylOp& a, const GradedSpec& domain, const MultiDegree& codomain);

/// Exact joint kernel of the operators on the graded piece. The stacked
/// operator matrix is assembled against the full image (nothing is clipped at
/// zMax), split into connected blocks, and each block is solved by
/// fraction-free elimination. Basis vectors are integral and primitive.
KernelBasis joint_kernel(const std::vector<LabeledOp>& ops, const GradedSpec& spec,
                         const KernelOptions& options = {});

/// <u_r, d_{u_s}> (r<s) and <d_{u_p}, d_{u_q}>_s (p<q).
std::vector<LabeledOp> symplectic_harmonic_ops(int n, int copies);
/// D_{s,u_a} for every copy together with the symplectic_harmonic_ops.
std::vector<LabeledOp> symplectic_monogenic_ops(int n, int copies);
/// The Laplacian on x1.1..x1.n.
std::vector<LabeledOp> orthogonal_harmonic_ops(int n);

struct HwvReport {
  std::vector<std::pair<std::string, bool>> annihilated;  // per positive root / extra op
  bool allAnnihilated = true;
  Weight cartanEigenvalues;
};

/// Applies every positive-root generator and every extra operator (exact zero
/// test) and reads off the Cartan eigenvalues. Throws ComputationError with the
/// residual if the candidate is not an eigenvector of some Cartan element.
HwvReport hwv_verify(const Poly& candidate, const std::vector<Generator>& realization,
                     const std::vector<LabeledOp>& extraOps = {});

/// prod_j det(Xi_j)^(lambda_j - lambda_{j+1}) where Xi_j is the leading j×j
/// minor of the N×n matrix (x_{a,i}).
Poly determinantal_hwv(int n, int copies, const std::vector<int>& degrees);

}  // namespace spm
