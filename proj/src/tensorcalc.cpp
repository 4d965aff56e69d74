#include "spmodels/tensorcalc.hpp"

namespace spm {

std::string_view to_string(SpinorParity p) { return p == SpinorParity::Even ? "even" : "odd"; }

Weight parity_tail(int n, SpinorParity p) {
  return spinor_tail(n, p == SpinorParity::Even ? SpinorTail::Even : SpinorTail::Odd);
}

namespace {

void require_dominant(const Weight& lambda) {
  if (lambda.rank() < 1) throw InvalidInput("weight has rank 0");
  if (!is_integral(lambda)) throw InvalidInput("weight " + lambda.to_string() + " is not integral");
  if (!is_dominant(lambda)) throw InvalidInput("weight " + lambda.to_string() + " is not dominant");
}

long as_long(const Rational& q) { return q.get_num().get_si(); }

}  // namespace

std::vector<long> nu_bounds(const Weight& lambda, NuConvention nu) {
  const auto n = static_cast<std::size_t>(lambda.rank());
  std::vector<long> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (nu == NuConvention::Epsilon || i + 1 == n)
      out[i] = as_long(lambda.coords[i]);
    else
      out[i] = as_long(lambda.coords[i] - lambda.coords[i + 1]);
  }
  return out;
}

bool satisfies_drop_conditions(const Weight& lambda, const std::vector<int>& d, NuConvention nu) {
  const auto n = static_cast<std::size_t>(lambda.rank());
  if (d.size() != n) return false;
  const auto bound = nu_bounds(lambda, nu);
  long sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i] < 0) return false;
    const long cap = i + 1 < n ? bound[i] : 2 * bound[i] + 1;
    if (d[i] > cap) return false;
    sum += d[i];
  }
  return sum % 2 == 0;
}

std::vector<std::pair<Weight, std::vector<int>>> enumerate_T_lambda(const Weight& lambda, NuConvention nu) {
  require_dominant(lambda);
  const auto n = static_cast<std::size_t>(lambda.rank());
  const auto bound = nu_bounds(lambda, nu);
  std::vector<std::pair<Weight, std::vector<int>>> out;
  std::vector<int> d(n, 0);
  // odometer over the box, last coordinate fastest, keeping even sums
  for (;;) {
    long sum = 0;
    for (int v : d) sum += v;
    if (sum % 2 == 0) {
      Weight kappa = lambda;
      for (std::size_t i = 0; i < n; ++i) kappa.coords[i] -= d[i];
      out.emplace_back(std::move(kappa), d);
    }
    std::size_t i = n;
    while (i-- > 0) {
      const long cap = i + 1 < n ? bound[i] : 2 * bound[i] + 1;
      if (d[i] < cap) {
        ++d[i];
        break;
      }
      d[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<DecompSummand> tensor_with_spinor(const Weight& lambda, NuConvention nu) {
  const auto t = enumerate_T_lambda(lambda, nu);
  std::vector<DecompSummand> out;
  for (SpinorParity p : {SpinorParity::Even, SpinorParity::Odd}) {
    const Weight tail = parity_tail(lambda.rank(), p);
    for (const auto& [kappa, d] : t) out.push_back({tail + kappa, 1, p, kappa, d});
  }
  return out;
}

std::pair<Weight, Weight> cartan_product(const Weight& lambda) {
  require_dominant(lambda);
  return {parity_tail(lambda.rank(), SpinorParity::Even) + lambda,
          parity_tail(lambda.rank(), SpinorParity::Odd) + lambda};
}

std::optional<std::vector<int>> recover_drop(const Weight& lambda, const DecompSummand& s, NuConvention nu) {
  if (s.weight.rank() != lambda.rank()) return std::nullopt;
  const Weight diff = lambda + parity_tail(lambda.rank(), s.parity) - s.weight;
  std::vector<int> d;
  for (const auto& c : diff.coords) {
    if (!is_integer(c)) return std::nullopt;
    d.push_back(static_cast<int>(c.get_num().get_si()));
  }
  if (!satisfies_drop_conditions(lambda, d, nu)) return std::nullopt;
  return d;
}

}  // namespace spm
