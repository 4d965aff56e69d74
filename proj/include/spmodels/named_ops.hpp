#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spmodels/weylalg.hpp"

namespace spm {

// Constructors for the invariant operators on P(R^{2n x N}) ⊗ P(z). The
// symplectic pairing is <v,w>_s = sum_i (v_{x,i} w_{y,i} - v_{y,i} w_{x,i}),
// i.e. v^T Omega_0 w with Omega_0 = [[0, I], [-I, 0]].

/// sum_i x_{a,i} d_{x_{a,i}} + y_{a,i} d_{y_{a,i}}
WeylOp euler(const Universe& u, int a);
/// sum_i d_{x_{a,i}}^2 + d_{y_{a,i}}^2  (Laplacian on R^{2n})
WeylOp laplacian(const Universe& u, int a);
/// sum_i x_{a,i}^2 + y_{a,i}^2
WeylOp norm_squared(const Universe& u, int a);

// x-only versions: the orthogonal R^n picture on copy a's x-coordinates.
WeylOp orthogonal_euler(const Universe& u, int a);
WeylOp orthogonal_laplacian(const Universe& u, int a);
WeylOp orthogonal_norm_squared(const Universe& u, int a);

/// Symplectic Dirac operator D_{s,u_a} = <z, d_y> - <d_x, d_z>.
WeylOp symplectic_dirac(const Universe& u, int a);
/// Its Fischer adjoint X_{s,u_a} = <x, z> + <y, d_z>.
WeylOp symplectic_dirac_adjoint(const Universe& u, int a);

/// <u_a, u_b>_s as a multiplication operator.
WeylOp symplectic_pairing_vars(const Universe& u, int a, int b);
/// <d_{u_a}, d_{u_b}>_s
WeylOp symplectic_pairing_derivs(const Universe& u, int a, int b);
/// <u_a, d_{u_b}> (Euclidean contraction over all 2n coordinates).
WeylOp euclidean_var_deriv(const Universe& u, int a, int b);
/// sum_i z_i d_{z_i}
WeylOp spinor_euler(const Universe& u);

struct NamedOpRequest {
  std::string name;
  int n = 1;
  int copies = 1;
  std::vector<int> indices;  // copy indices the operator refers to
};

/// Builds an operator by name: euler, laplacian, norm_squared,
/// orthogonal_euler, orthogonal_laplacian, orthogonal_norm_squared, dirac,
/// dirac_adjoint (one copy index); symplectic_pairing_vars,
/// symplectic_pairing_derivs, euclidean_var_deriv (two copy indices);
/// spinor_euler, identity (none). Throws InvalidInput on unknown names, wrong
/// arity, or copy indices out of range.
WeylOp build_named(const NamedOpRequest& request);

std::vector<std::string> named_operator_names();

enum class RootRole { Cartan, Positive, Negative };
enum class RealizationKind { Scalar, Spinor };

std::string_view to_string(RootRole role);

struct Generator {
  std::string label;  // "X12", "Y11", "Z23", ...
  RootRole role;
  WeylOp op;
};

/// sp(2n) acting diagonally on N vector variables; the spinor kind adds the
/// metaplectic part on z (Cartan X_jj picks up -(z_j d_{z_j} + 1/2)).
/// 2n^2+n generators: X_jk (all j,k), Y_jk and Z_jk (j<=k). Positive roots are
/// X_jk (j<k) and Y_jk (j<=k); the Cartan subalgebra is X_jj.
std::vector<Generator> build_sp2n_realization(RealizationKind kind, int n, int copies);

}  // namespace spm
