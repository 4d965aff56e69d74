#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "spmodels/kernelspaces.hpp"
#include "spmodels/tensorcalc.hpp"
#include "spmodels/transvector.hpp"
#include "spmodels/suites.hpp"

namespace spm {

using Json = nlohmann::ordered_json;

/// "2*x1.1^2 - 1/2*z1 + y1.2*z2". Throws InvalidInput with the offending position.
Poly parse_poly(std::string_view text, const Universe& u);

/// Polynomial grammar plus derivative factors d<var>; the factors of a term are
/// composed in the order written ("dx1.1*x1.1" is x1.1 dx1.1 + 1).
WeylOp parse_op(std::string_view text, const Universe& u);

/// [{"coef": "p/q", "exps": {"x1.2": 3}}, ...]
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j, const Universe& u);

/// Reads a polynomial file: JSON (a term list, or {"terms": [...]}) if it starts
/// with '[' or '{', otherwise the text grammar.
Poly read_poly_file(const std::string& path, const Universe& u);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const GradedSpec& s);
Json to_json(const KernelBasis& k, bool includeBasis);
Json to_json(const DecompSummand& s);
Json to_json(const ProjectorReport& r);
Json to_json(const RsCalibrationReport& r);
Json to_json(const SuiteReport& r);

/// {"name": ..., "n": ..., "N": ..., "copies": [...]}
NamedOpRequest named_op_from_json(const Json& j);

}  // namespace spm
