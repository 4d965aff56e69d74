#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spmodels/kernelspaces.hpp"

namespace spm {

/// An sl(2)-triple of operators with [X,Y] = H, [H,X] = 2X, [H,Y] = -2Y.
struct Sl2Triple {
  std::string name;
  WeylOp X;
  WeylOp Y;
  WeylOp H;
  std::string gradingRole;
};

/// X = D_{s,u}, Y = 2 X_{s,u}, H = [X,Y] = -2(E_u + n) on the universe (n, 2)
/// with x = copy 1, u = copy 2. H is scalar on (u,v)-homogeneous polynomials.
Sl2Triple sl2_u_triple(int n);
/// X = -1/2 Δ, Y = 1/2 |x|^2, H = -(E + n) on R^{2n} (universe (n, 1)).
Sl2Triple harmonic_triple(int n);
/// X = x d_y, Y = y d_x, H = x d_x - y d_y on R^2 (universe (1, 1)). Finite
/// dimensional, so it has singular weights.
Sl2Triple finite_xy_triple();

/// sl2-u, harmonic, finite-xy.
Sl2Triple build_triple(const std::string& name, int n);
std::vector<std::string> triple_names();

struct TripleCheck {
  bool xyIsH = false;
  bool hx = false;
  bool hy = false;
  bool ok() const { return xyIsH && hx && hy; }
};
TripleCheck check_triple(const Sl2Triple& t);

struct ProjectorReport {
  Poly input;
  Poly output;
  Rational hEigenvalue;
  int termsUsed = 0;
  std::vector<int> singularTermsSkipped;  // j with h+1+j = 0 but X^j p = 0
  std::optional<int> singularFailure;     // j with h+1+j = 0 and X^j p != 0
};

/// pi p = sum_{j>=0} (-1)^j/j! * prod_{s=1..j} (h+1+s)^{-1} * Y^j X^j p, with h
/// the H-eigenvalue of p. The series stops at the first j with X^j p = 0. A
/// vanishing factor only matters when its term is nonzero; then
/// singularFailure is set and output is left zero. Throws InvalidInput if p is
/// not an H-eigenvector or lives in another universe.
ProjectorReport try_extremal_project(const Sl2Triple& t, const Poly& p);

/// As try_extremal_project, but throws ComputationError on a singular weight.
ProjectorReport extremal_project(const Sl2Triple& t, const Poly& p);

/// Degree of f in the u = copy 2 variables; throws unless f is homogeneous there.
int u_degree(const Poly& f);

/// (1 - Y X/(H+2)) D_{s,x} f for the sl2-u triple. Requires f in ker D_{s,u}
/// and (u,v)-homogeneous: then X^2 D_{s,x} f = 0 and the two-term formula is
/// the whole series. Throws ComputationError if H+2 vanishes on a nonzero term.
Poly transvector_project_Dsx(const Poly& f, int n);

/// (1 + 2 X_{s,u} D_{s,u} / c) D_{s,x} f. f must be (u,v)-homogeneous of degree k.
Poly rs_apply(const Poly& f, int k, int n, const Rational& denominator);

inline Rational default_rs_denominator(int k, int n) { return k + n + 2; }

struct RsCalibrationOptions {
  int xDegree = 1;
  /// Also impose <x, d_u> and <d_x, d_u>_s on the input space.
  bool strict = false;
  KernelOptions kernel;
};

struct RsCalibrationReport {
  int k = 0;
  int n = 0;
  int zMax = 0;
  int xDegree = 1;
  bool strict = false;
  int kernelDim = 0;
  std::vector<Rational> candidates;
  std::vector<Rational> workingDenominators;
  Rational defaultDenominator;  // k+n+2
  bool defaultDenominatorWorks = false;
  /// Every nonzero denominator works (the correction term vanishes).
  bool everyDenominatorWorks = false;
  /// The unique value solving D_u((1 + 2 X_u D_u / c) D_x f) = 0 on the whole
  /// kernel, if there is one.
  std::optional<Rational> solvedDenominator;
  std::vector<std::string> warnings;
};

/// Candidates used when none are given: k+n+2, k+n-2, 2(k+n-1) and 1..2(k+n+2),
/// without zero or repeats.
std::vector<Rational> default_rs_candidates(int k, int n);

/// Tests every candidate on a basis of ker D_{s,u} in degrees (xDegree, k)
/// with z-degree <= zMax. Throws InvalidInput on a zero candidate and
/// ComputationError if the kernel is empty.
RsCalibrationReport rs_calibrate(int k, int n, int zMax, const std::vector<Rational>& candidates,
                                 const RsCalibrationOptions& options = {});

}  // namespace spm
