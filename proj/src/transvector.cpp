#include "spmodels/transvector.hpp"

#include <algorithm>

namespace spm {

Sl2Triple sl2_u_triple(int n) {
  const Universe u{n, 2};
  u.validate();
  Sl2Triple t{"sl2-u", symplectic_dirac(u, 2), 2 * symplectic_dirac_adjoint(u, 2), WeylOp(u),
              "H = -2(E_u + n); scalar -2(k+n) on (u,v)-degree k"};
  t.H = commutator(t.X, t.Y);
  return t;
}

Sl2Triple harmonic_triple(int n) {
  const Universe u{n, 1};
  u.validate();
  Sl2Triple t{"harmonic", Rational(-1, 2) * laplacian(u, 1), Rational(1, 2) * norm_squared(u, 1), WeylOp(u),
              "H = -(E + n); scalar -(k+n) on degree k"};
  t.H = commutator(t.X, t.Y);
  return t;
}

Sl2Triple finite_xy_triple() {
  const Universe u{1, 1};
  const WeylOp x = WeylOp::variable(u, VarId::x(1, 1)), y = WeylOp::variable(u, VarId::y(1, 1));
  const WeylOp dx = WeylOp::derivative(u, VarId::x(1, 1)), dy = WeylOp::derivative(u, VarId::y(1, 1));
  Sl2Triple t{"finite-xy", x * dy, y * dx, WeylOp(u), "H = x dx - y dy; scalar on monomials"};
  t.H = commutator(t.X, t.Y);
  return t;
}

std::vector<std::string> triple_names() { return {"sl2-u", "harmonic", "finite-xy"}; }

Sl2Triple build_triple(const std::string& name, int n) {
  if (name == "sl2-u") return sl2_u_triple(n);
  if (name == "harmonic") return harmonic_triple(n);
  if (name == "finite-xy") return finite_xy_triple();
  throw InvalidInput("unknown triple '" + name + "'");
}

TripleCheck check_triple(const Sl2Triple& t) {
  TripleCheck c;
  c.xyIsH = commutator(t.X, t.Y) == t.H;
  c.hx = commutator(t.H, t.X) == 2 * t.X;
  c.hy = commutator(t.H, t.Y) == -2 * t.Y;
  return c;
}

ProjectorReport try_extremal_project(const Sl2Triple& t, const Poly& p) {
  if (!(p.universe() == t.X.universe()))
    throw InvalidInput("polynomial and triple '" + t.name + "' live in different universes");
  ProjectorReport r{p, Poly(p.universe()), 0, 0, {}, std::nullopt};
  if (p.is_zero()) return r;

  const Poly hp = apply(t.H, p);
  const auto& [lead, lc] = *p.terms().begin();
  r.hEigenvalue = hp.coefficient(lead) / lc;
  if (!(hp - r.hEigenvalue * p).is_zero())
    throw InvalidInput("input is not an eigenvector of H for triple '" + t.name + "'");

  Poly acc = p;
  Poly xj = p;
  Rational coef = 1;  // (-1)^j / j! / prod (h+1+s)
  for (int j = 1;; ++j) {
    xj = apply(t.X, xj);
    const Rational factor = r.hEigenvalue + 1 + j;
    if (xj.is_zero()) {
      // later factors never multiply a nonzero term; only -h-1 can vanish
      const Rational jSing = -r.hEigenvalue - 1;
      if (is_integer(jSing) && jSing >= j) r.singularTermsSkipped.push_back(static_cast<int>(jSing.get_num().get_si()));
      break;
    }
    if (factor == 0) {
      r.singularFailure = j;
      return r;
    }
    coef *= Rational(-1, j) / factor;
    Poly term = xj;
    for (int s = 0; s < j; ++s) term = apply(t.Y, term);
    acc += coef * term;
    ++r.termsUsed;
  }
  r.output = std::move(acc);
  return r;
}

ProjectorReport extremal_project(const Sl2Triple& t, const Poly& p) {
  ProjectorReport r = try_extremal_project(t, p);
  if (r.singularFailure)
    throw ComputationError("singular weight: factor h+1+j vanishes at j=" + std::to_string(*r.singularFailure) +
                           " (h=" + to_string(r.hEigenvalue) + ") on a nonzero term");
  return r;
}

int u_degree(const Poly& f) {
  if (f.universe().copies != 2) throw InvalidInput("expected a polynomial in two vector variables (x, u)");
  int deg = -1;
  for (const auto& d : f.degrees()) {
    if (deg >= 0 && d.perCopy[1] != deg) throw InvalidInput("polynomial is not (u,v)-homogeneous");
    deg = d.perCopy[1];
  }
  return deg < 0 ? 0 : deg;
}

Poly transvector_project_Dsx(const Poly& f, int n) {
  const Universe u{n, 2};
  if (!(f.universe() == u)) throw InvalidInput("polynomial must live in the universe n=" + std::to_string(n) + ", N=2");
  const int k = u_degree(f);
  const WeylOp Du = symplectic_dirac(u, 2);
  if (!apply(Du, f).is_zero()) throw InvalidInput("input is not in the kernel of D_s(u)");
  const Poly g = apply(symplectic_dirac(u, 1), f);
  const Poly xg = apply(Du, g);
  if (xg.is_zero()) return g;
  const Rational h = -2 * (k + n);
  if (h + 2 == 0) throw ComputationError("singular weight: H+2 vanishes on a nonzero term");
  return g - (Rational(2) / (h + 2)) * apply(symplectic_dirac_adjoint(u, 2), xg);
}

Poly rs_apply(const Poly& f, int k, int n, const Rational& denominator) {
  if (denominator == 0) throw InvalidInput("denominator must be nonzero");
  const Universe u{n, 2};
  if (!(f.universe() == u)) throw InvalidInput("polynomial must live in the universe n=" + std::to_string(n) + ", N=2");
  if (f.is_zero()) return f;
  if (u_degree(f) != k)
    throw InvalidInput("polynomial has (u,v)-degree " + std::to_string(u_degree(f)) + ", expected " + std::to_string(k));
  const Poly g = apply(symplectic_dirac(u, 1), f);
  const Poly corr = apply(symplectic_dirac_adjoint(u, 2), apply(symplectic_dirac(u, 2), g));
  return g + (Rational(2) / denominator) * corr;
}

std::vector<Rational> default_rs_candidates(int k, int n) {
  std::vector<Rational> out;
  auto add = [&](const Rational& c) {
    if (c != 0 && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  };
  add(k + n + 2);
  add(k + n - 2);
  add(2 * (k + n - 1));
  for (int c = 1; c <= 2 * (k + n + 2); ++c) add(c);
  return out;
}

RsCalibrationReport rs_calibrate(int k, int n, int zMax, const std::vector<Rational>& candidates,
                                 const RsCalibrationOptions& options) {
  if (candidates.empty()) throw InvalidInput("no candidate denominators");
  for (const auto& c : candidates)
    if (c == 0) throw InvalidInput("candidate denominator 0 is not allowed");
  if (k < 0 || n < 1 || zMax < 0 || options.xDegree < 0) throw InvalidInput("k, zMax, x-degree must be >= 0 and n >= 1");

  RsCalibrationReport rep;
  rep.k = k;
  rep.n = n;
  rep.zMax = zMax;
  rep.xDegree = options.xDegree;
  rep.strict = options.strict;
  rep.candidates = candidates;
  rep.defaultDenominator = default_rs_denominator(k, n);

  const Universe u{n, 2};
  GradedSpec spec;
  spec.n = n;
  spec.copies = 2;
  spec.degrees = {options.xDegree, k};
  spec.zMax = zMax;
  spec.allowNonDominant = true;
  spec.allowOutOfRange = true;
  std::vector<LabeledOp> ops{{"D_s(u2)", symplectic_dirac(u, 2)}};
  if (options.strict) {
    ops.push_back({"<u1,du2>", euclidean_var_deriv(u, 1, 2)});
    ops.push_back({"<du1,du2>_s", symplectic_pairing_derivs(u, 1, 2)});
  }
  KernelOptions kopt = options.kernel;
  kopt.checkStability = false;
  const KernelBasis kernel = joint_kernel(ops, spec, kopt);
  rep.warnings = kernel.warnings;
  rep.kernelDim = kernel.dimension();
  if (kernel.vectors.empty())
    throw ComputationError("ker D_s(u) is empty in degrees (" + std::to_string(options.xDegree) + "," +
                           std::to_string(k) + ") with zMax=" + std::to_string(zMax));

  const WeylOp Dx = symplectic_dirac(u, 1), Du = symplectic_dirac(u, 2), Xu = symplectic_dirac_adjoint(u, 2);
  // D_u (1 + 2/c X_u D_u) D_x f = A + B/c
  std::vector<std::pair<Poly, Poly>> ab;
  for (const auto& f : kernel.vectors) {
    const Poly g = apply(Dx, f);
    const Poly a = apply(Du, g);
    ab.emplace_back(a, 2 * apply(Du, apply(Xu, a)));
  }
  auto works = [&](const Rational& c) {
    return std::all_of(ab.begin(), ab.end(), [&](const auto& p) { return (p.first + p.second * (1 / c)).is_zero(); });
  };
  for (const auto& c : candidates)
    if (works(c)) rep.workingDenominators.push_back(c);
  rep.defaultDenominatorWorks = works(rep.defaultDenominator);

  rep.everyDenominatorWorks = std::all_of(ab.begin(), ab.end(), [](const auto& p) { return p.first.is_zero() && p.second.is_zero(); });
  if (!rep.everyDenominatorWorks) {
    std::optional<Rational> sol;
    bool consistent = true;
    for (const auto& [a, b] : ab) {
      if (a.is_zero()) {
        if (!b.is_zero()) consistent = false;
        continue;
      }
      const auto& [m, ac] = *a.terms().begin();
      const Rational bc = b.coefficient(m);
      if (bc == 0) {
        consistent = false;
        continue;
      }
      const Rational c = -bc / ac;
      if (sol && *sol != c) consistent = false;
      sol = c;
    }
    if (consistent && sol && works(*sol)) rep.solvedDenominator = sol;
  }
  return rep;
}

}  // namespace spm
