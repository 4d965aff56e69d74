#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "spmodels/rootdata.hpp"

namespace spm {

enum class SpinorParity { Even, Odd };

std::string_view to_string(SpinorParity p);

/// Tail of the spinor module a summand comes from: (-1/2,...,-1/2) for Even,
/// (-1/2,...,-1/2,-3/2) for Odd.
Weight parity_tail(int n, SpinorParity p);

struct DecompSummand {
  Weight weight;  // tail + kappa
  int multiplicity = 1;
  SpinorParity parity = SpinorParity::Even;
  Weight kappa;
  std::vector<int> drop;  // d with kappa = lambda - sum d_i e_i
};

/// How the bounds nu_i of the drop vector are read off lambda.
enum class NuConvention {
  Epsilon,  // nu_i = lambda_i
  Omega,    // nu_i = lambda_i - lambda_{i+1}, nu_n = lambda_n
};

std::vector<long> nu_bounds(const Weight& lambda, NuConvention nu = NuConvention::Epsilon);

/// d in N^n with even sum, d_i <= nu_i (i<n) and d_n <= 2 nu_n + 1.
bool satisfies_drop_conditions(const Weight& lambda, const std::vector<int>& d,
                               NuConvention nu = NuConvention::Epsilon);

/// All kappa = lambda - d, d lexicographically ascending (kappa = lambda first).
/// Throws InvalidInput unless lambda is dominant integral.
std::vector<std::pair<Weight, std::vector<int>>> enumerate_T_lambda(
    const Weight& lambda, NuConvention nu = NuConvention::Epsilon);

/// Summands of V(tail) ⊗ V(lambda) for both spinor tails (Even first), each
/// with multiplicity 1.
std::vector<DecompSummand> tensor_with_spinor(const Weight& lambda,
                                              NuConvention nu = NuConvention::Epsilon);

/// The two top summands (drop vector zero): even, odd.
std::pair<Weight, Weight> cartan_product(const Weight& lambda);

/// Recovers d = lambda + tail - weight and checks it against the drop
/// conditions. Returns d if the summand is consistent.
std::optional<std::vector<int>> recover_drop(const Weight& lambda, const DecompSummand& s,
                                             NuConvention nu = NuConvention::Epsilon);

}  // namespace spm
