// spmodels command-line driver. Every command prints one JSON document
// (or a flat table with --pretty) that starts with the full run config.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "spmodels/io.hpp"

using namespace spm;

namespace {

struct Common {
  bool pretty = false;
  std::string output;
  long seed = 0;
};

struct Shape {
  int n = 1;
  int copies = 0;  // 0: derive from context
  std::string degrees;
  std::optional<int> zMax;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("'" + item + "' is not an integer");
    }
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

void print_flat(std::ostream& os, const Json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_flat(os, v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_flat(os, j[i], prefix + "[" + std::to_string(i) + "]");
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Common& c, const Json& j) {
  std::ostringstream os;
  if (c.pretty)
    print_flat(os, j, "");
  else
    os << j.dump() << "\n";
  if (c.output.empty()) {
    std::cout << os.str();
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw InvalidInput("cannot write '" + c.output + "'");
  out << os.str();
}

Json base_config(const std::string& command, const Common& c) {
  return {{"command", command}, {"seed", c.seed}};
}

Poly load_poly(const std::string& file, const std::string& text, const Universe& u) {
  if (!file.empty() && !text.empty()) throw InvalidInput("give either --input or --poly, not both");
  if (!file.empty()) return read_poly_file(file, u);
  if (!text.empty()) return parse_poly(text, u);
  throw InvalidInput("a polynomial is required (--input <file> or --poly <text>)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polynomial models of sp(2n)-representations"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--pretty", common.pretty, "Flat human-readable output instead of JSON");
  app.add_option("--output", common.output, "Write the report to this path");
  app.add_option("--seed", common.seed, "Seed recorded in the run config");

  Shape shape;
  std::string weight, kind = "symplectic-harmonic", suite, with = "spinor", nu = "epsilon", triple = "sl2-u";
  std::string inputFile, polyText, denominator = "auto", candidates, opA, opB;
  bool basis = false, nonDominant = false, outOfRange = false, reverseOrder = false, cartanOnly = false,
       strict = false;
  int threads = 0, k = 0, xDegree = 1;

  auto add_shape = [&](CLI::App* sub, bool degrees, bool zmax) {
    sub->add_option("--n", shape.n, "Rank n (R^{2n})")->required();
    sub->add_option("--N", shape.copies, "Number of vector variables");
    if (degrees) sub->add_option("--degrees", shape.degrees, "Comma-separated degrees per copy");
    if (zmax) sub->add_option("--zmax", shape.zMax, "Spinor-degree truncation");
  };

  auto* dim = app.add_subcommand("dim", "Weyl dimension of a dominant weight");
  dim->add_option("--n", shape.n)->required();
  dim->add_option("--weight", weight, "Comma-separated epsilon coordinates")->required();

  auto* kernel = app.add_subcommand("kernel", "Joint kernel of a named operator family");
  add_shape(kernel, true, true);
  kernel->add_option("--kind", kind)->check(
      CLI::IsMember({"symplectic-harmonic", "symplectic-monogenic", "orthogonal-harmonic"}));
  kernel->add_flag("--basis", basis, "Include the basis vectors");
  kernel->add_flag("--allow-non-dominant", nonDominant);
  kernel->add_flag("--allow-out-of-range", outOfRange, "Continue with a warning when N > n");
  kernel->add_flag("--reverse-order", reverseOrder, "Reverse the monomial order (diagnostic)");
  kernel->add_option("--threads", threads, "Worker threads (default: SPMODELS_THREADS or all cores)");

  auto* verify = app.add_subcommand("verify", "Run an exact identity suite");
  add_shape(verify, true, false);
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));

  auto* tensor = app.add_subcommand("tensor", "Tensor product with the spinor modules");
  tensor->add_option("--n", shape.n)->required();
  tensor->add_option("--weight", weight)->required();
  tensor->add_option("--with", with)->check(CLI::IsMember({"spinor"}));
  tensor->add_flag("--cartan-only", cartanOnly);
  tensor->add_option("--nu", nu, "Reading of the drop bounds")->check(CLI::IsMember({"epsilon", "omega"}));

  auto* project = app.add_subcommand("project", "Extremal sl(2) projector");
  project->add_option("--n", shape.n)->required();
  project->add_option("--triple", triple)->check(CLI::IsMember(triple_names()));
  project->add_option("--input", inputFile);
  project->add_option("--poly", polyText);

  auto* transvec = app.add_subcommand("transvector", "Two-term projection of D_s(x) f for f in ker D_s(u)");
  transvec->add_option("--n", shape.n)->required();
  transvec->add_option("--input", inputFile);
  transvec->add_option("--poly", polyText);

  auto* rsApply = app.add_subcommand("rs-apply", "Symplectic Rarita-Schwinger operator");
  rsApply->add_option("--k", k)->required();
  rsApply->add_option("--n", shape.n)->required();
  rsApply->add_option("--denominator", denominator, "auto (k+n+2), transvector (2(k+n-1)) or p/q");
  rsApply->add_option("--input", inputFile);
  rsApply->add_option("--poly", polyText);

  auto* rsCal = app.add_subcommand("rs-calibrate", "Test denominators for kernel preservation");
  rsCal->add_option("--k", k)->required();
  rsCal->add_option("--n", shape.n)->required();
  rsCal->add_option("--zmax", shape.zMax)->required();
  rsCal->add_option("--candidates", candidates, "Comma-separated rationals (default: built-in sweep)");
  rsCal->add_option("--x-degree", xDegree);
  rsCal->add_flag("--strict", strict, "Also impose <x,du> and <dx,du>_s");
  rsCal->add_option("--threads", threads);

  auto* applyCmd = app.add_subcommand("apply", "Apply an operator to a polynomial");
  add_shape(applyCmd, false, false);
  applyCmd->add_option("--op", opA, "Operator text, e.g. 'z1*dy1.1 - dz1*dx1.1'")->required();
  applyCmd->add_option("--input", inputFile);
  applyCmd->add_option("--poly", polyText);

  auto* commCmd = app.add_subcommand("commutator", "Normal-ordered commutator [A,B]");
  add_shape(commCmd, false, false);
  commCmd->add_option("--a", opA)->required();
  commCmd->add_option("--b", opB)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*dim) {
      const Weight w = parse_weight(weight, shape.n);
      Json cfg = base_config("dim", common);
      cfg["n"] = shape.n;
      const Integer d = weyl_dim(w);
      // a JSON number while it fits, decimal text beyond 64 bits
      const Json dim = d.fits_slong_p() ? Json(d.get_si()) : Json(d.get_str());
      emit(common, {{"config", cfg}, {"weight", to_json(w)}, {"dimension", dim}});
      return 0;
    }

    if (*kernel) {
      GradedSpec spec;
      spec.n = shape.n;
      spec.degrees = parse_int_list(shape.degrees);
      if (spec.degrees.empty()) throw InvalidInput("--degrees is required");
      spec.copies = shape.copies ? shape.copies : static_cast<int>(spec.degrees.size());
      spec.zMax = shape.zMax;
      spec.allowNonDominant = nonDominant;
      spec.allowOutOfRange = outOfRange;
      std::vector<LabeledOp> ops;
      if (kind == "symplectic-harmonic") {
        ops = symplectic_harmonic_ops(spec.n, spec.copies);
      } else if (kind == "symplectic-monogenic") {
        if (!spec.zMax) throw InvalidInput("symplectic-monogenic needs --zmax");
        ops = symplectic_monogenic_ops(spec.n, spec.copies);
      } else {
        spec.variables = VariableSet::Orthogonal;
        if (spec.copies != 1) throw InvalidInput("orthogonal-harmonic takes a single degree");
        ops = orthogonal_harmonic_ops(spec.n);
      }
      KernelOptions opt;
      opt.reverseMonomialOrder = reverseOrder;
      opt.threads = threads;
      const KernelBasis kb = joint_kernel(ops, spec, opt);
      Json cfg = base_config("kernel", common);
      cfg["kind"] = kind;
      Json out = {{"config", cfg}};
      out.update(to_json(kb, basis));
      emit(common, out);
      return 0;
    }

    if (*verify) {
      SuiteParams p;
      p.n = shape.n;
      p.degrees = parse_int_list(shape.degrees);
      p.copies = shape.copies ? shape.copies : (p.degrees.empty() ? 1 : static_cast<int>(p.degrees.size()));
      const SuiteReport rep = run_suite(suite, p);
      Json cfg = base_config("verify", common);
      Json out = {{"config", cfg}};
      out.update(to_json(rep));
      emit(common, out);
      return rep.pass() ? 0 : 1;
    }

    if (*tensor) {
      const Weight lambda = parse_weight(weight, shape.n);
      const NuConvention conv = nu == "omega" ? NuConvention::Omega : NuConvention::Epsilon;
      Json cfg = base_config("tensor", common);
      cfg["n"] = shape.n;
      cfg["with"] = with;
      cfg["nu"] = nu;
      Json summands = Json::array();
      if (cartanOnly) {
        const auto [even, odd] = cartan_product(lambda);
        summands.push_back(to_json(DecompSummand{even, 1, SpinorParity::Even, lambda, std::vector<int>(static_cast<std::size_t>(shape.n), 0)}));
        summands.push_back(to_json(DecompSummand{odd, 1, SpinorParity::Odd, lambda, std::vector<int>(static_cast<std::size_t>(shape.n), 0)}));
      } else {
        for (const auto& s : tensor_with_spinor(lambda, conv)) summands.push_back(to_json(s));
      }
      emit(common, {{"config", cfg}, {"lambda", to_json(lambda)}, {"summands", summands}});
      return 0;
    }

    if (*project) {
      const Sl2Triple t = build_triple(triple, shape.n);
      const Poly p = load_poly(inputFile, polyText, t.X.universe());
      const ProjectorReport r = extremal_project(t, p);
      Json cfg = base_config("project", common);
      cfg["n"] = shape.n;
      cfg["triple"] = triple;
      Json out = {{"config", cfg}};
      out.update(to_json(r));
      out["annihilatedByX"] = apply(t.X, r.output).is_zero();
      emit(common, out);
      return 0;
    }

    if (*transvec) {
      const Universe u{shape.n, 2};
      const Poly f = load_poly(inputFile, polyText, u);
      const Poly two = transvector_project_Dsx(f, shape.n);
      const Poly series = extremal_project(sl2_u_triple(shape.n), apply(symplectic_dirac(u, 1), f)).output;
      Json cfg = base_config("transvector", common);
      cfg["n"] = shape.n;
      emit(common, {{"config", cfg}, {"input", to_json(f)}, {"output", to_json(two)}, {"agreesWithSeries", two == series}});
      return two == series ? 0 : 1;
    }

    if (*rsApply) {
      const Universe u{shape.n, 2};
      const Poly f = load_poly(inputFile, polyText, u);
      Rational c;
      if (denominator == "auto")
        c = default_rs_denominator(k, shape.n);
      else if (denominator == "transvector")
        c = 2 * (k + shape.n - 1);
      else
        c = parse_rational(denominator);
      const Poly r = rs_apply(f, k, shape.n, c);
      Json cfg = base_config("rs-apply", common);
      cfg["k"] = k;
      cfg["n"] = shape.n;
      cfg["denominator"] = to_string(c);
      emit(common, {{"config", cfg},
                    {"input", to_json(f)},
                    {"output", to_json(r)},
                    {"outputInKernelOfDsU", apply(symplectic_dirac(u, 2), r).is_zero()}});
      return 0;
    }

    if (*rsCal) {
      const std::vector<Rational> cands =
          candidates.empty() ? default_rs_candidates(k, shape.n) : parse_rational_list(candidates);
      RsCalibrationOptions opt;
      opt.xDegree = xDegree;
      opt.strict = strict;
      opt.kernel.threads = threads;
      const RsCalibrationReport rep = rs_calibrate(k, shape.n, *shape.zMax, cands, opt);
      Json cfg = base_config("rs-calibrate", common);
      Json out = {{"config", cfg}};
      out.update(to_json(rep));
      emit(common, out);
      return rep.workingDenominators.empty() ? 1 : 0;
    }

    if (*applyCmd || *commCmd) {
      const Universe u{shape.n, shape.copies ? shape.copies : 1};
      u.validate();
      Json cfg = base_config(*applyCmd ? "apply" : "commutator", common);
      cfg["n"] = u.n;
      cfg["N"] = u.copies;
      const WeylOp a = parse_op(opA, u);
      if (*applyCmd) {
        const Poly p = load_poly(inputFile, polyText, u);
        const Poly r = apply(a, p);
        emit(common, {{"config", cfg}, {"operator", to_string(a)}, {"input", to_json(p)}, {"output", to_json(r)},
                      {"outputText", to_string(r)}});
      } else {
        const WeylOp c = commutator(a, parse_op(opB, u));
        emit(common, {{"config", cfg}, {"a", to_string(a)}, {"b", to_string(parse_op(opB, u))},
                      {"commutator", to_string(c)}});
      }
      return 0;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ComputationError& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
