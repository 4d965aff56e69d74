#include "spmodels/kernelspaces.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "spmodels/parallel.hpp"

namespace spm {

int default_threads() {
  if (const char* env = std::getenv("SPMODELS_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void GradedSpec::validate(std::vector<std::string>* warnings) const {
  if (n < 1) throw InvalidInput("n must be >= 1");
  if (copies < 1) throw InvalidInput("N must be >= 1");
  if (static_cast<int>(degrees.size()) != copies)
    throw InvalidInput("expected " + std::to_string(copies) + " degrees, got " +
                       std::to_string(degrees.size()));
  for (int d : degrees)
    if (d < 0) throw InvalidInput("degrees must be nonnegative");
  if (zMax && *zMax < 0) throw InvalidInput("zMax must be nonnegative");
  if (!allowNonDominant)
    for (std::size_t i = 0; i + 1 < degrees.size(); ++i)
      if (degrees[i] < degrees[i + 1])
        throw InvalidInput("degrees are not dominant (weakly decreasing)");
  if (variables == VariableSet::Orthogonal) {
    if (copies != 1) throw InvalidInput("the orthogonal variable set has a single copy");
    if (zMax) throw InvalidInput("the orthogonal variable set has no spinor variables");
  }
  if (copies > n) {
    const std::string msg = "N=" + std::to_string(copies) + " exceeds n=" + std::to_string(n) +
                            "; kernel dimensions need not match the Weyl dimension";
    if (!allowOutOfRange) throw InvalidInput(msg + " (pass the out-of-range override to continue)");
    if (warnings) warnings->push_back(msg);
  }
}

int spinor_grade(const Universe& u, const Monomial& m) {
  return z_degree(u, m) + 2 * y_degree(u, m);
}

std::vector<Monomial> domain_basis(const GradedSpec& spec) {
  const Universe u = spec.universe();
  if (spec.variables == VariableSet::Orthogonal) return orthogonal_monomial_basis(u, 1, spec.degrees[0]);
  std::vector<Monomial> out;
  const int zTop = spec.zMax.value_or(0);
  for (int z = 0; z <= zTop; ++z) {
    auto part = monomial_basis(u, MultiDegree{spec.degrees, z});
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(), TermOrder{});
  return out;
}

OperatorMatrix operator_matrix(const WeylOp& a, const GradedSpec& domain, const MultiDegree& codomain) {
  domain.validate();
  if (!(a.universe() == domain.universe())) throw InvalidInput("operator universe does not match the domain");
  if (static_cast<int>(codomain.perCopy.size()) != domain.copies)
    throw InvalidInput("codomain degree has the wrong number of copies");

  OperatorMatrix out;
  out.cols = domain_basis(domain);
  const Universe u = domain.universe();
  if (domain.variables == VariableSet::Orthogonal) {
    out.rows = orthogonal_monomial_basis(u, 1, codomain.perCopy[0]);
  } else if (domain.zMax) {
    for (int z = 0; z <= codomain.zDegree; ++z) {
      auto part = monomial_basis(u, MultiDegree{codomain.perCopy, z});
      out.rows.insert(out.rows.end(), part.begin(), part.end());
    }
    std::sort(out.rows.begin(), out.rows.end(), TermOrder{});
  } else {
    out.rows = monomial_basis(u, codomain);
  }

  std::map<Monomial, int, TermOrder> rowIndex;
  for (std::size_t i = 0; i < out.rows.size(); ++i) rowIndex.emplace(out.rows[i], static_cast<int>(i));

  out.matrix.cols = static_cast<int>(out.cols.size());
  out.matrix.rows.assign(out.rows.size(), {});
  for (std::size_t j = 0; j < out.cols.size(); ++j) {
    const Poly image = apply(a, out.cols[j]);
    for (const auto& [m, c] : image.terms()) {
      auto it = rowIndex.find(m);
      if (it == rowIndex.end())
        throw InvalidInput("degree-shift mismatch: image term " + to_string(u, m) +
                           " lies outside the codomain " + codomain.to_string());
      out.matrix.rows[static_cast<std::size_t>(it->second)].emplace_back(static_cast<int>(j), c);
    }
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

struct Block {
  std::vector<int> cols;     // global column indices, ascending
  std::vector<int> rowIds;   // global row indices
  std::vector<IntRow> null;  // result, local column indices
};

}  // namespace

KernelBasis joint_kernel(const std::vector<LabeledOp>& ops, const GradedSpec& spec,
                         const KernelOptions& options) {
  KernelBasis out;
  out.spec = spec;
  spec.validate(&out.warnings);
  const Universe u = spec.universe();
  for (const auto& op : ops) {
    if (!(op.op.universe() == u))
      throw InvalidInput("operator '" + op.label + "' lives in a different variable universe");
    out.operators.push_back(op.label);
  }

  std::vector<Monomial> domain = domain_basis(spec);
  if (domain.empty()) throw InvalidInput("empty monomial basis");
  if (options.reverseMonomialOrder) std::reverse(domain.begin(), domain.end());
  out.ambientDim = static_cast<int>(domain.size());
  const int ncols = out.ambientDim;

  // Stacked matrix, one row per (operator, image monomial). Columns are visited
  // in increasing order, so every row comes out sorted.
  std::vector<SparseRow> rows;
  std::vector<std::map<Monomial, int, TermOrder>> rowIndex(ops.size());
  for (int j = 0; j < ncols; ++j) {
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const Poly image = apply(ops[k].op, domain[static_cast<std::size_t>(j)]);
      for (const auto& [m, c] : image.terms()) {
        auto [it, inserted] = rowIndex[k].try_emplace(m, static_cast<int>(rows.size()));
        if (inserted) rows.emplace_back();
        rows[static_cast<std::size_t>(it->second)].emplace_back(j, c);
      }
    }
  }

  UnionFind uf(ncols);
  for (const auto& r : rows)
    for (std::size_t t = 1; t < r.size(); ++t) uf.unite(r[0].first, r[t].first);

  std::map<int, std::size_t> blockOf;  // root -> block
  std::vector<Block> blocks;
  for (int j = 0; j < ncols; ++j) {
    auto [it, inserted] = blockOf.try_emplace(uf.find(j), blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].cols.push_back(j);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) continue;
    blocks[blockOf.at(uf.find(rows[r][0].first))].rowIds.push_back(static_cast<int>(r));
  }

  parallel_for(blocks.size(), options.threads, [&](std::size_t b) {
    Block& blk = blocks[b];
    std::map<int, int> local;
    for (std::size_t t = 0; t < blk.cols.size(); ++t) local.emplace(blk.cols[t], static_cast<int>(t));
    SparseMatrix m;
    m.cols = static_cast<int>(blk.cols.size());
    for (int r : blk.rowIds) {
      SparseRow lr;
      for (const auto& [c, v] : rows[static_cast<std::size_t>(r)]) lr.emplace_back(local.at(c), v);
      m.rows.push_back(std::move(lr));
    }
    blk.null = nullspace(m);
  });

  for (const auto& blk : blocks) {
    for (const auto& vec : blk.null) {
      Poly p(u);
      for (const auto& [c, v] : vec)
        p.add_term(domain[static_cast<std::size_t>(blk.cols[static_cast<std::size_t>(c)])], Rational(v));
      out.vectors.push_back(std::move(p));
    }
  }

  for (const auto& v : out.vectors) {
    const int key = spec.zMax ? spinor_grade(u, v.terms().begin()->first) : 0;
    ++out.perZDegreeDims[key];
  }

  if (spec.zMax && options.checkStability) {
    GradedSpec bigger = spec;
    bigger.zMax = *spec.zMax + 1;
    KernelOptions inner = options;
    inner.checkStability = false;
    const KernelBasis next = joint_kernel(ops, bigger, inner);
    auto dimAt = [](const std::map<int, int>& m, int g) {
      auto it = m.find(g);
      return it == m.end() ? 0 : it->second;
    };
    for (int g = 0; g <= *spec.zMax - 1; ++g)
      if (dimAt(out.perZDegreeDims, g) != dimAt(next.perZDegreeDims, g)) out.truncationStable = false;
  }
  return out;
}

std::vector<LabeledOp> symplectic_harmonic_ops(int n, int copies) {
  const Universe u{n, copies};
  u.validate();
  std::vector<LabeledOp> out;
  for (int r = 1; r <= copies; ++r)
    for (int s = r + 1; s <= copies; ++s)
      out.push_back({"<u" + std::to_string(r) + ",du" + std::to_string(s) + ">", euclidean_var_deriv(u, r, s)});
  for (int p = 1; p <= copies; ++p)
    for (int q = p + 1; q <= copies; ++q)
      out.push_back({"<du" + std::to_string(p) + ",du" + std::to_string(q) + ">_s",
                     symplectic_pairing_derivs(u, p, q)});
  return out;
}

std::vector<LabeledOp> symplectic_monogenic_ops(int n, int copies) {
  const Universe u{n, copies};
  u.validate();
  std::vector<LabeledOp> out;
  for (int a = 1; a <= copies; ++a) out.push_back({"D_s(u" + std::to_string(a) + ")", symplectic_dirac(u, a)});
  for (auto& op : symplectic_harmonic_ops(n, copies)) out.push_back(std::move(op));
  return out;
}

std::vector<LabeledOp> orthogonal_harmonic_ops(int n) {
  const Universe u{n, 1};
  u.validate();
  return {{"laplacian", orthogonal_laplacian(u, 1)}};
}

HwvReport hwv_verify(const Poly& candidate, const std::vector<Generator>& realization,
                     const std::vector<LabeledOp>& extraOps) {
  if (candidate.is_zero()) throw InvalidInput("highest-weight candidate is zero");
  const Universe& u = candidate.universe();
  HwvReport report;
  auto check = [&](const std::string& label, const WeylOp& op) {
    if (!(op.universe() == u)) throw InvalidInput("operator '" + label + "' lives in a different universe");
    const bool zero = apply(op, candidate).is_zero();
    report.annihilated.emplace_back(label, zero);
    report.allAnnihilated = report.allAnnihilated && zero;
  };
  for (const auto& g : realization)
    if (g.role == RootRole::Positive) check(g.label, g.op);
  for (const auto& op : extraOps) check(op.label, op.op);

  const auto& [leadMono, leadCoef] = *candidate.terms().begin();
  std::vector<Rational> eig;
  for (const auto& g : realization) {
    if (g.role != RootRole::Cartan) continue;
    if (!(g.op.universe() == u)) throw InvalidInput("operator '" + g.label + "' lives in a different universe");
    const Poly image = apply(g.op, candidate);
    const Rational lambda = image.coefficient(leadMono) / leadCoef;
    const Poly residual = image - lambda * candidate;
    if (!residual.is_zero())
      throw ComputationError("candidate is not an eigenvector of " + g.label + "; residual " +
                             to_string(residual));
    eig.push_back(lambda);
  }
  report.cartanEigenvalues = Weight(std::move(eig));
  return report;
}

namespace {

// Leibniz expansion of the leading j×j minor of (x_{a,i}).
Poly leading_minor(const Universe& u, int j) {
  std::vector<int> perm(static_cast<std::size_t>(j));
  std::iota(perm.begin(), perm.end(), 1);
  Poly det(u);
  do {
    int inversions = 0;
    for (int a = 0; a < j; ++a)
      for (int b = a + 1; b < j; ++b)
        if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
    Monomial m = Monomial::one(u);
    for (int a = 1; a <= j; ++a) {
      const int s = slot_of(u, VarId::x(a, perm[static_cast<std::size_t>(a - 1)]));
      m.set(s, static_cast<Monomial::Exponent>(m[s] + 1));
    }
    det.add_term(m, inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

Poly determinantal_hwv(int n, int copies, const std::vector<int>& degrees) {
  GradedSpec spec;
  spec.n = n;
  spec.copies = copies;
  spec.degrees = degrees;
  spec.validate();
  const Universe u = spec.universe();
  Poly w = Poly::constant(u, 1);
  for (int j = 1; j <= copies; ++j) {
    const int next = j < copies ? degrees[static_cast<std::size_t>(j)] : 0;
    const int e = degrees[static_cast<std::size_t>(j - 1)] - next;
    if (e > 0) w = w * pow(leading_minor(u, j), static_cast<unsigned>(e));
  }
  return w;
}

}  // namespace spm
