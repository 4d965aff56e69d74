#include "spmodels/suites.hpp"

#include <algorithm>
#include <functional>

#include "spmodels/kernelspaces.hpp"
#include "spmodels/lie_closure.hpp"
#include "spmodels/tensorcalc.hpp"
#include "spmodels/transvector.hpp"

namespace spm {

bool SuiteReport::pass() const { return failures() == 0; }

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return !c.informational && !c.pass; }));
}

std::vector<std::string> suite_names() {
  return {"so5", "sp-invariance", "parafermion", "sl2-harmonic", "so4-dual", "so2N-dual", "realization", "hwv"};
}

namespace {

CheckResult identity_check(const std::string& name, const WeylOp& lhs, const WeylOp& rhs) {
  const WeylOp diff = lhs - rhs;
  CheckResult r{name, diff.is_zero(), false, "", ""};
  if (!r.pass) r.residual = to_string(diff);
  return r;
}

CheckResult closure_check(const std::string& name, const std::vector<WeylOp>& gens, int expected,
                          std::optional<int>* dimension) {
  CheckResult r{name, false, false, "", ""};
  try {
    const LieClosure lc = lie_closure(gens);
    if (dimension) *dimension = lc.dimension;
    r.pass = lc.dimension == expected;
    r.detail = "dimension " + std::to_string(lc.dimension) + " (expected " + std::to_string(expected) + "), " +
               std::to_string(lc.rounds) + " rounds";
  } catch (const ComputationError& e) {
    r.detail = e.what();
  }
  return r;
}

// Collects one verdict over an index grid; keeps the first failing residual.
struct GridCheck {
  CheckResult result;
  int total = 0;
  int failed = 0;

  explicit GridCheck(std::string name, bool informational = false) {
    result.name = std::move(name);
    result.informational = informational;
  }
  void add(const std::string& where, const WeylOp& lhs, const WeylOp& rhs) {
    ++total;
    const WeylOp diff = lhs - rhs;
    if (diff.is_zero()) return;
    if (failed++ == 0) result.residual = where + ": " + to_string(diff);
  }
  CheckResult finish() {
    result.pass = failed == 0;
    result.detail = std::to_string(total - failed) + "/" + std::to_string(total) + " index combinations hold";
    return result;
  }
};

SuiteReport so5(const SuiteParams& p) {
  SuiteReport rep{"so5", p, std::nullopt, {}};
  const Universe u{p.n, 2};
  u.validate();
  const WeylOp Dx = symplectic_dirac(u, 1), Du = symplectic_dirac(u, 2);
  const WeylOp Xx = symplectic_dirac_adjoint(u, 1), Xu = symplectic_dirac_adjoint(u, 2);
  rep.checks.push_back(identity_check("[X_s(x), D_s(x)] = E_x + E_y + n", commutator(Xx, Dx),
                                      euler(u, 1) + WeylOp::identity(u, p.n)));
  rep.checks.push_back(identity_check("[D_s(u), D_s(x)] = <dx,du>_s", commutator(Du, Dx),
                                      symplectic_pairing_derivs(u, 1, 2)));
  rep.checks.push_back(identity_check("[X_s(u), D_s(x)] = <u,dx>", commutator(Xu, Dx), euclidean_var_deriv(u, 2, 1)));
  rep.checks.push_back(identity_check("[<dx,du>_s, D_s(x)] = 0", commutator(symplectic_pairing_derivs(u, 1, 2), Dx),
                                      WeylOp(u)));
  rep.checks.push_back(closure_check("closure of {D_s(x), D_s(u), X_s(x), X_s(u)} has dimension 10",
                                     {Dx, Du, Xx, Xu}, 10, &rep.dimension));
  return rep;
}

SuiteReport sp_invariance(const SuiteParams& p) {
  SuiteReport rep{"sp-invariance", p, std::nullopt, {}};
  const auto gens = build_sp2n_realization(RealizationKind::Spinor, p.n, 1);
  const Universe u{p.n, 1};
  const WeylOp Ds = symplectic_dirac(u, 1);
  GridCheck g("[g, D_s] = 0 for every spinor-realization generator");
  for (const auto& gen : gens) g.add(gen.label, commutator(gen.op, Ds), WeylOp(u));
  rep.checks.push_back(g.finish());
  std::vector<WeylOp> ops;
  for (const auto& gen : gens) ops.push_back(gen.op);
  rep.checks.push_back(closure_check("spinor realization closes to dimension 2n^2+n", ops, 2 * p.n * p.n + p.n,
                                     &rep.dimension));
  return rep;
}

SuiteReport parafermion(const SuiteParams& p) {
  SuiteReport rep{"parafermion", p, std::nullopt, {}};
  const int N = p.copies;
  const Universe u{p.n, N};
  u.validate();
  std::vector<WeylOp> D, X;
  for (int a = 1; a <= N; ++a) {
    D.push_back(symplectic_dirac(u, a));
    X.push_back(symplectic_dirac_adjoint(u, a));
  }
  auto d = [&](int a) { return D[static_cast<std::size_t>(a - 1)]; };
  auto x = [&](int a) { return X[static_cast<std::size_t>(a - 1)]; };
  auto delta = [](int i, int j) { return Rational(i == j ? 1 : 0); };
  const WeylOp zero(u);

  // Green's trilinear relations with f^- = D_a, f^+ = 2 X_a:
  // [[f^xi_j, f^eta_k], f^eps_l] = |eps-eta| d_kl f^xi_j - |eps-xi| d_jl f^eta_k
  GridCheck green("Green trilinear relations, all sign patterns");
  auto f = [&](int sign, int a) { return sign < 0 ? d(a) : 2 * x(a); };
  for (int xi : {-1, 1})
    for (int eta : {-1, 1})
      for (int eps : {-1, 1})
        for (int j = 1; j <= N; ++j)
          for (int k = 1; k <= N; ++k)
            for (int l = 1; l <= N; ++l) {
              const WeylOp lhs = commutator(commutator(f(xi, j), f(eta, k)), f(eps, l));
              const WeylOp rhs = Rational(std::abs(eps - eta)) * delta(k, l) * f(xi, j) -
                                 Rational(std::abs(eps - xi)) * delta(j, l) * f(eta, k);
              green.add("(" + std::to_string(xi) + "," + std::to_string(eta) + "," + std::to_string(eps) + ") j=" +
                            std::to_string(j) + " k=" + std::to_string(k) + " l=" + std::to_string(l),
                        lhs, rhs);
            }
  rep.checks.push_back(green.finish());

  struct Relation {
    std::string name;
    std::function<WeylOp(int, int, int)> lhs;
    std::function<WeylOp(int, int, int)> derived;
    std::function<WeylOp(int, int, int)> printed;  // printed table, operators scaled by sqrt 2
    std::string printedText;
  };
  const Rational half(1, 2);
  std::vector<Relation> rels{
      {"[[D_a,X_b],X_c] = -d_ac X_b", [&](int a, int b, int c) { return commutator(commutator(d(a), x(b)), x(c)); },
       [&](int a, int b, int c) { return -delta(a, c) * x(b); },
       [&](int a, int b, int c) { return half * (-2 * delta(a, c) * x(b)); }, "-2 d_ac X_b"},
      {"[[D_a,X_b],D_c] = d_bc D_a", [&](int a, int b, int c) { return commutator(commutator(d(a), x(b)), d(c)); },
       [&](int a, int b, int c) { return delta(b, c) * d(a); },
       [&](int a, int b, int c) { return half * (2 * delta(b, c) * x(a)); }, "2 d_bc X_a"},
      {"[[D_a,D_b],X_c] = d_bc D_a - d_ac D_b",
       [&](int a, int b, int c) { return commutator(commutator(d(a), d(b)), x(c)); },
       [&](int a, int b, int c) { return delta(b, c) * d(a) - delta(a, c) * d(b); },
       [&](int a, int b, int c) { return half * (2 * delta(b, c) * d(a) - 2 * delta(a, c) * d(b)); },
       "2 d_bc D_a - 2 d_ac D_b"},
      {"[[X_a,X_b],X_c] = 0", [&](int a, int b, int c) { return commutator(commutator(x(a), x(b)), x(c)); },
       [&](int, int, int) { return zero; },
       [&](int a, int b, int c) { return half * (2 * delta(b, c) * x(a) - 2 * delta(a, c) * x(b)); },
       "2 d_bc X_a - 2 d_ac X_b"},
      {"[[D_a,D_b],D_c] = 0", [&](int a, int b, int c) { return commutator(commutator(d(a), d(b)), d(c)); },
       [&](int, int, int) { return zero; }, [&](int, int, int) { return zero; }, "0"},
  };
  for (const auto& rel : rels) {
    GridCheck hard(rel.name);
    GridCheck printed("printed table (operators scaled by sqrt 2): RHS " + rel.printedText, true);
    for (int a = 1; a <= N; ++a)
      for (int b = 1; b <= N; ++b)
        for (int c = 1; c <= N; ++c) {
          const std::string where = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c);
          const WeylOp lhs = rel.lhs(a, b, c);
          hard.add(where, lhs, rel.derived(a, b, c));
          printed.add(where, lhs, rel.printed(a, b, c));
        }
    rep.checks.push_back(hard.finish());
    rep.checks.push_back(printed.finish());
  }

  std::vector<WeylOp> gens = D;
  gens.insert(gens.end(), X.begin(), X.end());
  rep.checks.push_back(closure_check("closure of {D_a, X_a} has dimension N(2N+1)", gens, N * (2 * N + 1), &rep.dimension));
  return rep;
}

SuiteReport sl2_harmonic(const SuiteParams& p) {
  SuiteReport rep{"sl2-harmonic", p, std::nullopt, {}};
  const Sl2Triple t = harmonic_triple(p.n);
  const Universe u{p.n, 1};
  rep.checks.push_back(identity_check("[X,Y] = -(E + n)", t.H, -(euler(u, 1) + WeylOp::identity(u, p.n))));
  const TripleCheck tc = check_triple(t);
  rep.checks.push_back({"[H,X] = 2X", tc.hx, false, "", ""});
  rep.checks.push_back({"[H,Y] = -2Y", tc.hy, false, "", ""});
  rep.checks.push_back(closure_check("closure of {-1/2 Laplacian, 1/2 |x|^2} has dimension 3", {t.X, t.Y}, 3,
                                     &rep.dimension));
  return rep;
}

std::vector<std::pair<std::string, WeylOp>> dual_ops(const Universe& u) {
  std::vector<std::pair<std::string, WeylOp>> ops;
  const int N = u.copies;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      ops.emplace_back("<u" + std::to_string(i) + ",u" + std::to_string(j) + ">_s", symplectic_pairing_vars(u, i, j));
      ops.emplace_back("<du" + std::to_string(i) + ",du" + std::to_string(j) + ">_s",
                       symplectic_pairing_derivs(u, i, j));
    }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      WeylOp op = euclidean_var_deriv(u, i, j);
      if (i == j) op += WeylOp::identity(u, u.n);
      ops.emplace_back("<u" + std::to_string(i) + ",du" + std::to_string(j) + ">" + (i == j ? "+n" : ""), op);
    }
  return ops;
}

SuiteReport so2n_dual(const std::string& name, const SuiteParams& p) {
  SuiteReport rep{name, p, std::nullopt, {}};
  const Universe u{p.n, p.copies};
  u.validate();
  const auto ops = dual_ops(u);
  const auto gens = build_sp2n_realization(RealizationKind::Scalar, p.n, p.copies);
  GridCheck commute("dual operators commute with the scalar sp(2n) realization");
  for (const auto& [label, op] : ops)
    for (const auto& g : gens) commute.add(label + " vs " + g.label, commutator(op, g.op), WeylOp(u));
  rep.checks.push_back(commute.finish());
  std::vector<WeylOp> plain;
  for (const auto& [label, op] : ops) plain.push_back(op);
  const int N = p.copies;
  rep.checks.push_back(closure_check("dual operators close to dimension N(2N-1)", plain, N * (2 * N - 1), &rep.dimension));
  return rep;
}

SuiteReport realization(const SuiteParams& p) {
  SuiteReport rep{"realization", p, std::nullopt, {}};
  for (auto kind : {RealizationKind::Scalar, RealizationKind::Spinor}) {
    const int copies = kind == RealizationKind::Scalar ? p.copies : 1;
    const auto gens = build_sp2n_realization(kind, p.n, copies);
    std::vector<WeylOp> ops;
    for (const auto& g : gens) ops.push_back(g.op);
    const std::string k = kind == RealizationKind::Scalar ? "scalar" : "spinor";
    std::optional<int> dim;
    rep.checks.push_back(closure_check(k + " realization closes to dimension 2n^2+n", ops, 2 * p.n * p.n + p.n, &dim));
    if (kind == RealizationKind::Scalar) rep.dimension = dim;
    rep.checks.push_back({k + " realization has 2n^2+n generators",
                          static_cast<int>(gens.size()) == 2 * p.n * p.n + p.n, false,
                          std::to_string(gens.size()) + " generators", ""});
  }
  return rep;
}

CheckResult hwv_check(const std::string& name, const Poly& cand, const std::vector<Generator>& gens,
                      const std::vector<LabeledOp>& extra, const Weight& expected) {
  CheckResult r{name, false, false, "", ""};
  try {
    const HwvReport h = hwv_verify(cand, gens, extra);
    r.pass = h.allAnnihilated && h.cartanEigenvalues == expected;
    r.detail = "eigenvalues " + h.cartanEigenvalues.to_string() + " (expected " + expected.to_string() + ")";
    for (const auto& [label, ok] : h.annihilated)
      if (!ok) r.residual += (r.residual.empty() ? "not annihilated by " : ", ") + label;
  } catch (const ComputationError& e) {
    r.detail = e.what();
  }
  return r;
}

SuiteReport hwv(const SuiteParams& p) {
  SuiteReport rep{"hwv", p, std::nullopt, {}};
  std::vector<int> degrees = p.degrees;
  if (degrees.empty()) degrees.assign(static_cast<std::size_t>(p.copies), 0);
  const Poly w = determinantal_hwv(p.n, p.copies, degrees);
  std::vector<long> lam(degrees.begin(), degrees.end());
  const Weight lambda = Weight::from_ints(lam, p.n);
  const auto extra = symplectic_harmonic_ops(p.n, p.copies);

  rep.checks.push_back(hwv_check("determinantal vector, scalar realization", w,
                                 build_sp2n_realization(RealizationKind::Scalar, p.n, p.copies), extra, lambda));

  const auto spin = build_sp2n_realization(RealizationKind::Spinor, p.n, p.copies);
  const auto [even, odd] = cartan_product(lambda);
  rep.checks.push_back(hwv_check("determinantal vector tensor 1, spinor realization", w, spin, extra, even));
  const Universe u{p.n, p.copies};
  rep.checks.push_back(hwv_check("determinantal vector tensor z_n, spinor realization",
                                 w * Poly::variable(u, VarId::z(p.n)), spin, extra, odd));

  GradedSpec spec{p.n, p.copies, degrees, std::nullopt, VariableSet::Symplectic, false, true};
  const KernelBasis kb = joint_kernel(extra, spec);
  const Integer wd = weyl_dim(lambda);
  rep.dimension = kb.dimension();
  rep.checks.push_back({"harmonic kernel dimension equals the Weyl dimension", Integer(kb.dimension()) == wd,
                        p.copies > p.n, "kernel " + std::to_string(kb.dimension()) + ", Weyl " + wd.get_str(), ""});
  return rep;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  if (params.n < 1 || params.copies < 1) throw InvalidInput("n and N must be >= 1");
  if (name == "so5") return so5(params);
  if (name == "sp-invariance") return sp_invariance(params);
  if (name == "parafermion") return parafermion(params);
  if (name == "sl2-harmonic") return sl2_harmonic(params);
  if (name == "so4-dual") {
    SuiteParams q = params;
    q.copies = 2;
    return so2n_dual(name, q);
  }
  if (name == "so2N-dual") return so2n_dual(name, params);
  if (name == "realization") return realization(params);
  if (name == "hwv") return hwv(params);
  throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace spm
