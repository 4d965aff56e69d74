#pragma once

#include <string>
#include <vector>

#include "spmodels/rational.hpp"

namespace spm {

/// A weight of sp(2n) in epsilon coordinates. Half-integers are allowed
/// (spinor weights).
struct Weight {
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
  static Weight zero(int n) { return Weight(std::vector<Rational>(static_cast<std::size_t>(n), 0)); }
  static Weight from_ints(const std::vector<long>& v, int n);

  int rank() const { return static_cast<int>(coords.size()); }
  std::string to_string() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;

  friend bool operator==(const Weight&, const Weight&) = default;
};

/// The root system of type C_n in epsilon coordinates.
struct RootSystemSp {
  int n = 1;
  std::vector<Weight> longRoots;   // ±2e_i
  std::vector<Weight> shortRoots;  // ±e_i±e_j, i<j
  std::vector<Weight> simpleRoots; // e_i - e_{i+1}, 2e_n
  std::vector<Weight> positiveRoots;

  std::size_t size() const { return longRoots.size() + shortRoots.size(); }
};

RootSystemSp root_system_sp(int n);

bool is_integral(const Weight& w);

/// Finite-dimensional dominance: integral, weakly decreasing, last entry >= 0.
bool is_dominant(const Weight& w);

enum class SpinorTail { Even, Odd };

/// (-1/2,...,-1/2) for Even, (-1/2,...,-1/2,-3/2) for Odd.
Weight spinor_tail(int n, SpinorTail tail);

/// True if w - tail is dominant integral for one of the two spinor tails (the
/// highest weights of the infinite-dimensional modules built on S^inf).
bool is_spinor_dominant(const Weight& w);

/// Weyl dimension formula with g_i = n-i+1, m_i = lambda_i + g_i:
///   prod m_i/g_i * prod_{i<j} (m_i-m_j)/(g_i-g_j) * prod_{i<j} (m_i+m_j)/(g_i+g_j).
/// Evaluated as one exact rational product; throws InvalidInput for
/// non-dominant or non-integral weights and ComputationError if the product
/// is not an integer.
Integer weyl_dim(const Weight& lambda);

/// sum_j c_j omega_j with omega_j = e_1 + ... + e_j.
Weight omega_to_epsilon(const std::vector<Rational>& coeffs);
std::vector<Rational> epsilon_to_omega(const Weight& w);

/// Parses "2,1" or "3/2,-1/2" and pads with zeros to rank n.
Weight parse_weight(const std::string& text, int n);

}  // namespace spm
