#include "spmodels/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace spm {

namespace {

// Recursive-descent reader for sums of products. Each factor is turned into a
// WeylOp; products compose left to right.
class TermParser {
 public:
  TermParser(std::string_view text, const Universe& u, bool allowDerivs)
      : s_(text), u_(u), derivs_(allowDerivs) {}

  WeylOp parse() {
    WeylOp sum(u_);
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    bool first = true;
    while (pos_ < s_.size()) {
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      sum += sign * term();
      first = false;
      skip();
    }
    return sum;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidInput("parse error at position " + std::to_string(pos_) + ": " + msg + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  WeylOp term() {
    WeylOp prod = factor();
    skip();
    while (peek() == '*') {
      ++pos_;
      skip();
      prod = compose(prod, factor());
      skip();
    }
    return prod;
  }

  unsigned exponent() {
    skip();
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }

  WeylOp factor() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      Rational q = parse_rational(s_.substr(start, pos_ - start));
      const unsigned e = exponent();
      Rational r = 1;
      for (unsigned i = 0; i < e; ++i) r *= q;
      return WeylOp::identity(u_, r);
    }
    bool deriv = false;
    if (c == 'd') {
      if (!derivs_) fail("derivative factor in a polynomial");
      deriv = true;
      ++pos_;
    }
    const char fam = peek();
    if (fam != 'x' && fam != 'y' && fam != 'z') fail("expected a number or a variable");
    const std::size_t start = pos_++;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') ++pos_;
    const VarId v = parse_var(s_.substr(start, pos_ - start), u_);
    const WeylOp base = deriv ? WeylOp::derivative(u_, v) : WeylOp::variable(u_, v);
    return power(base, exponent());
  }

  std::string_view s_;
  const Universe& u_;
  bool derivs_;
  std::size_t pos_ = 0;
};

std::string coord_string(const Rational& q) { return to_string(q); }

Rational json_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidInput("expected a rational as \"p/q\" or an integer");
}

}  // namespace

Poly parse_poly(std::string_view text, const Universe& u) {
  const WeylOp op = TermParser(text, u, false).parse();
  Poly p(u);
  for (const auto& [key, c] : op.terms()) p.add_term(key.mult, c);
  return p;
}

WeylOp parse_op(std::string_view text, const Universe& u) { return TermParser(text, u, true).parse(); }

Json to_json(const Poly& p) {
  Json terms = Json::array();
  const Universe& u = p.universe();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::object();
    for (int s = 0; s < m.size(); ++s)
      if (m[s]) exps[var_at(u, s).name()] = m[s];
    terms.push_back({{"coef", to_string(c)}, {"exps", exps}});
  }
  return terms;
}

Poly poly_from_json(const Json& j, const Universe& u) {
  const Json& terms = j.is_object() ? j.at("terms") : j;
  if (!terms.is_array()) throw InvalidInput("polynomial JSON must be a list of terms");
  Poly p(u);
  for (const auto& t : terms) {
    Monomial m = Monomial::one(u);
    for (const auto& [name, e] : t.at("exps").items()) {
      const int s = slot_of(u, parse_var(name, u));
      if (!e.is_number_unsigned()) throw InvalidInput("exponent of " + name + " must be a nonnegative integer");
      m.set(s, static_cast<Monomial::Exponent>(m[s] + e.get<unsigned>()));
    }
    p.add_term(m, json_rational(t.at("coef")));
  }
  return p;
}

Poly read_poly_file(const std::string& path, const Universe& u) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InvalidInput("'" + path + "' is empty");
  if (text[first] == '[' || text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw InvalidInput("'" + path + "': " + e.what());
    }
    try {
      return poly_from_json(j, u);
    } catch (const Json::exception& e) {
      throw InvalidInput("'" + path + "': " + e.what());
    }
  }
  return parse_poly(text, u);
}

Json to_json(const Weight& w) {
  Json coords = Json::array();
  for (const auto& c : w.coords) coords.push_back(coord_string(c));
  return {{"n", w.rank()}, {"coords", coords}};
}

Weight weight_from_json(const Json& j) {
  std::vector<Rational> coords;
  for (const auto& c : j.at("coords")) coords.push_back(json_rational(c));
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(coords.size()))
    throw InvalidInput("weight JSON: n does not match the number of coordinates");
  return Weight(std::move(coords));
}

Json to_json(const GradedSpec& s) {
  Json j = {{"n", s.n}, {"N", s.copies}, {"degrees", s.degrees}};
  j["zMax"] = s.zMax ? Json(*s.zMax) : Json(nullptr);
  j["variables"] = s.variables == VariableSet::Orthogonal ? "orthogonal" : "symplectic";
  return j;
}

Json to_json(const KernelBasis& k, bool includeBasis) {
  Json j = {{"spec", to_json(k.spec)}, {"operators", k.operators}, {"ambientDim", k.ambientDim},
            {"kernelDim", k.dimension()}};
  Json per = Json::object();
  for (const auto& [g, d] : k.perZDegreeDims) per[std::to_string(g)] = d;
  j["perZDegreeDims"] = per;
  j["truncationStable"] = k.truncationStable;
  j["warnings"] = k.warnings;
  if (includeBasis) {
    Json vs = Json::array();
    for (const auto& v : k.vectors) vs.push_back(to_json(v));
    j["vectors"] = vs;
  }
  return j;
}

Json to_json(const DecompSummand& s) {
  return {{"weight", to_json(s.weight)}, {"multiplicity", s.multiplicity}, {"parity", std::string(to_string(s.parity))},
          {"kappa", to_json(s.kappa)}, {"drop", s.drop}};
}

Json to_json(const ProjectorReport& r) {
  Json j = {{"input", to_json(r.input)}, {"output", to_json(r.output)}, {"hEigenvalue", to_string(r.hEigenvalue)},
            {"termsUsed", r.termsUsed}, {"singularTermsSkipped", r.singularTermsSkipped}};
  j["singularFailure"] = r.singularFailure ? Json(*r.singularFailure) : Json(nullptr);
  return j;
}

Json to_json(const RsCalibrationReport& r) {
  auto list = [](const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
  };
  Json j = {{"k", r.k},
            {"n", r.n},
            {"zMax", r.zMax},
            {"xDegree", r.xDegree},
            {"strict", r.strict},
            {"kernelDim", r.kernelDim},
            {"candidates", list(r.candidates)},
            {"workingDenominators", list(r.workingDenominators)},
            {"paperDenominator", to_string(r.defaultDenominator)},
            {"paperDenominatorWorks", r.defaultDenominatorWorks},
            {"everyDenominatorWorks", r.everyDenominatorWorks}};
  j["solvedDenominator"] = r.solvedDenominator ? Json(to_string(*r.solvedDenominator)) : Json(nullptr);
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj = {{"name", c.name}, {"pass", c.pass}};
    if (c.informational) cj["informational"] = true;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    if (!c.residual.empty()) cj["residual"] = c.residual;
    checks.push_back(cj);
  }
  Json j = {{"suite", r.suite}, {"n", r.params.n}, {"N", r.params.copies}};
  if (!r.params.degrees.empty()) j["degrees"] = r.params.degrees;
  j["pass"] = r.pass();
  j["failures"] = r.failures();
  j["dimension"] = r.dimension ? Json(*r.dimension) : Json(nullptr);
  j["checks"] = checks;
  return j;
}

NamedOpRequest named_op_from_json(const Json& j) {
  try {
    NamedOpRequest r;
    r.name = j.at("name").get<std::string>();
    r.n = j.value("n", 1);
    r.copies = j.value("N", 1);
    if (j.contains("copies")) r.indices = j.at("copies").get<std::vector<int>>();
    return r;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("named-operator JSON: ") + e.what());
  }
}

}  // namespace spm
