#include "spmodels/lie_closure.hpp"

#include <algorithm>

#include "spmodels/linalg.hpp"

namespace spm {

SparseRow OperatorCoordinates::encode(const WeylOp& op) {
  SparseRow row;
  row.reserve(op.size());
  for (const auto& [key, c] : op.terms()) {
    auto [it, inserted] = index_.try_emplace(key, static_cast<int>(index_.size()));
    row.emplace_back(it->second, c);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

LieClosure lie_closure(const std::vector<WeylOp>& generators, const LieClosureOptions& options) {
  if (generators.empty()) throw InvalidInput("lie_closure needs at least one generator");
  const Universe u = generators.front().universe();

  OperatorCoordinates coords;
  IncrementalSpan span;
  LieClosure out;

  auto admit = [&](const WeylOp& op) {
    if (!(op.universe() == u)) throw InvalidInput("generators live in different universes");
    if (op.weyl_degree() > options.maxWeylDegree)
      throw ComputationError("bracket of Weyl degree " + std::to_string(op.weyl_degree()) +
                             " leaves the filtered subspace (limit " +
                             std::to_string(options.maxWeylDegree) + ")");
    if (span.insert(coords.encode(op))) {
      out.basis.push_back(op);
      return true;
    }
    return false;
  };

  for (const auto& g : generators) admit(g);

  std::size_t frontier = 0;  // basis elements before this index have been fully bracketed
  int round = 0;
  while (frontier < out.basis.size()) {
    if (round == options.maxRounds)
      throw ComputationError("lie_closure not closed within " + std::to_string(options.maxRounds) +
                             " rounds (span dimension " + std::to_string(out.basis.size()) + ")");
    ++round;
    const std::size_t end = out.basis.size();
    for (std::size_t j = frontier; j < end; ++j)
      for (std::size_t i = 0; i < j; ++i) admit(commutator(out.basis[i], out.basis[j]));
    frontier = end;
  }

  out.dimension = static_cast<int>(out.basis.size());
  out.rounds = round;
  for (std::size_t i = 0; i < out.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < out.basis.size(); ++j) {
      auto c = span.coordinates(coords.encode(commutator(out.basis[i], out.basis[j])));
      if (!c) throw ComputationError("internal: bracket escaped the closed span");
      c->resize(out.basis.size(), 0);
      out.structureConstants.push_back({static_cast<int>(i), static_cast<int>(j), std::move(*c)});
    }
  }
  return out;
}

}  // namespace spm
