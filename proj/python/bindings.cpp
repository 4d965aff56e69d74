#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spmodels/io.hpp"

namespace py = pybind11;
using namespace spm;

namespace {

Universe make_universe(int n, int copies) {
  Universe u{n, copies};
  u.validate();
  return u;
}

Weight make_weight(const std::vector<std::string>& coords, int n) {
  std::string joined;
  for (std::size_t i = 0; i < coords.size(); ++i) joined += (i ? "," : "") + coords[i];
  return parse_weight(joined, n);
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_spmodels, m) {
  m.doc() = "Exact polynomial models of sp(2n)-representations (C++ core)";
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<ComputationError>(m, "ComputationError", PyExc_ArithmeticError);

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const std::string& text, int n, int copies) { return parse_poly(text, make_universe(n, copies)); }),
           py::arg("text"), py::arg("n") = 1, py::arg("N") = 1)
      .def_property_readonly("n", [](const Poly& p) { return p.universe().n; })
      .def_property_readonly("N", [](const Poly& p) { return p.universe().copies; })
      .def("is_zero", &Poly::is_zero)
      .def("__len__", &Poly::size)
      .def("to_json", [](const Poly& p) { return dump(to_json(p)); })
      .def("__str__", [](const Poly& p) { return to_string(p); })
      .def("__repr__", [](const Poly& p) { return "Poly('" + to_string(p) + "')"; })
      .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
      .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
      .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
      .def("__neg__", [](const Poly& a) { return -a; })
      .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
      .def("partial", [](const Poly& p, const std::string& var) { return partial(p, parse_var(var, p.universe())); });

  py::class_<WeylOp>(m, "WeylOp")
      .def(py::init([](const std::string& text, int n, int copies) { return parse_op(text, make_universe(n, copies)); }),
           py::arg("text"), py::arg("n") = 1, py::arg("N") = 1)
      .def("__str__", [](const WeylOp& a) { return to_string(a); })
      .def("__repr__", [](const WeylOp& a) { return "WeylOp('" + to_string(a) + "')"; })
      .def("is_zero", &WeylOp::is_zero)
      .def("__add__", [](const WeylOp& a, const WeylOp& b) { return a + b; })
      .def("__sub__", [](const WeylOp& a, const WeylOp& b) { return a - b; })
      .def("__mul__", [](const WeylOp& a, const WeylOp& b) { return compose(a, b); })
      .def("__eq__", [](const WeylOp& a, const WeylOp& b) { return a == b; })
      .def("__call__", [](const WeylOp& a, const Poly& p) { return apply(a, p); });

  m.def("commutator", &commutator, py::arg("a"), py::arg("b"));
  m.def("named_operator",
        [](const std::string& name, int n, int copies, std::vector<int> indices) {
          return build_named({name, n, copies, std::move(indices)});
        },
        py::arg("name"), py::arg("n"), py::arg("N") = 1, py::arg("copies") = std::vector<int>{});

  m.def("weyl_dim", [](const std::vector<std::string>& weight, int n) { return weyl_dim(make_weight(weight, n)).get_str(); },
        py::arg("weight"), py::arg("n"));

  m.def("kernel_json",
        [](const std::string& kind, int n, std::vector<int> degrees, std::optional<int> zmax, bool basis,
           bool allowOutOfRange) {
          GradedSpec spec;
          spec.n = n;
          spec.copies = static_cast<int>(degrees.size());
          spec.degrees = std::move(degrees);
          spec.zMax = zmax;
          spec.allowOutOfRange = allowOutOfRange;
          std::vector<LabeledOp> ops;
          if (kind == "symplectic-harmonic") {
            ops = symplectic_harmonic_ops(n, spec.copies);
          } else if (kind == "symplectic-monogenic") {
            ops = symplectic_monogenic_ops(n, spec.copies);
          } else if (kind == "orthogonal-harmonic") {
            spec.variables = VariableSet::Orthogonal;
            ops = orthogonal_harmonic_ops(n);
          } else {
            throw InvalidInput("unknown kernel kind '" + kind + "'");
          }
          py::gil_scoped_release release;
          return dump(to_json(joint_kernel(ops, spec), basis));
        },
        py::arg("kind"), py::arg("n"), py::arg("degrees"), py::arg("zmax") = py::none(), py::arg("basis") = false,
        py::arg("allow_out_of_range") = false);

  m.def("verify_json",
        [](const std::string& suite, int n, int copies, std::vector<int> degrees) {
          SuiteParams p{n, copies, std::move(degrees)};
          py::gil_scoped_release release;
          return dump(to_json(run_suite(suite, p)));
        },
        py::arg("suite"), py::arg("n"), py::arg("N") = 1, py::arg("degrees") = std::vector<int>{});

  m.def("tensor_json",
        [](const std::vector<std::string>& weight, int n) {
          Json out = Json::array();
          for (const auto& s : tensor_with_spinor(make_weight(weight, n))) out.push_back(to_json(s));
          return dump(out);
        },
        py::arg("weight"), py::arg("n"));

  m.def("cartan_product_json",
        [](const std::vector<std::string>& weight, int n) {
          const auto [even, odd] = cartan_product(make_weight(weight, n));
          return dump(Json{{"even", to_json(even)}, {"odd", to_json(odd)}});
        },
        py::arg("weight"), py::arg("n"));

  m.def("extremal_project_json",
        [](const std::string& triple, int n, const Poly& p) { return dump(to_json(extremal_project(build_triple(triple, n), p))); },
        py::arg("triple"), py::arg("n"), py::arg("poly"));

  m.def("rs_apply",
        [](const Poly& f, int k, int n, const std::string& denominator) { return rs_apply(f, k, n, parse_rational(denominator)); },
        py::arg("poly"), py::arg("k"), py::arg("n"), py::arg("denominator"));

  m.def("rs_calibrate_json",
        [](int k, int n, int zmax, std::vector<std::string> candidates, int xDegree, bool strict) {
          std::vector<Rational> cands;
          for (const auto& c : candidates) cands.push_back(parse_rational(c));
          if (cands.empty()) cands = default_rs_candidates(k, n);
          RsCalibrationOptions opt;
          opt.xDegree = xDegree;
          opt.strict = strict;
          py::gil_scoped_release release;
          return dump(to_json(rs_calibrate(k, n, zmax, cands, opt)));
        },
        py::arg("k"), py::arg("n"), py::arg("zmax"), py::arg("candidates") = std::vector<std::string>{},
        py::arg("x_degree") = 1, py::arg("strict") = false);
}
