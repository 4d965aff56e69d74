#pragma once

#include <map>
#include <string>
#include <vector>

#include "spmodels/weylalg.hpp"

namespace spm {

struct LieClosureOptions {
  int maxRounds = 6;
  /// Largest Weyl degree (multiplication + derivative degree) allowed in the
  /// span. Quadratic operators plus constants are closed under brackets.
  int maxWeylDegree = 2;
};

struct StructureConstant {
  int i = 0;
  int j = 0;
  std::vector<Rational> coords;  // [b_i, b_j] = sum_k coords[k] b_k
};

struct LieClosure {
  std::vector<WeylOp> basis;
  int dimension = 0;
  int rounds = 0;
  std::vector<StructureConstant> structureConstants;  // i < j
};

/// Span of the generators closed under commutators. Each round brackets every
/// new basis element with every basis element and keeps the brackets that are
/// independent of the current span. Throws ComputationError if the span is
/// still growing after maxRounds or leaves the Weyl-degree filter.
LieClosure lie_closure(const std::vector<WeylOp>& generators,
                       const LieClosureOptions& options = {});

/// Reusable coordinate map from operators to sparse vectors.
class OperatorCoordinates {
 public:
  std::vector<std::pair<int, Rational>> encode(const WeylOp& op);

 private:
  std::map<WeylKey, int, WeylKeyOrder> index_;
};

}  // namespace spm
