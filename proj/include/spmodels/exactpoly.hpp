#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "spmodels/rational.hpp"

namespace spm {

enum class Family : std::uint8_t { X, Y, Z };

/// The variable universe of N vector variables in R^{2n} plus n spinor
/// variables z_1..z_n. Copy a has coordinates (x a.1..x a.n, y a.1..y a.n).
struct Universe {
  int n = 1;
  int copies = 1;

  int num_vars() const { return 2 * n * copies + n; }
  void validate() const;

  friend bool operator==(const Universe&, const Universe&) = default;
};

/// A single coordinate. Z-family variables carry copy == 0.
struct VarId {
  Family family = Family::X;
  int copy = 1;
  int index = 1;

  static VarId x(int copy, int index) { return {Family::X, copy, index}; }
  static VarId y(int copy, int index) { return {Family::Y, copy, index}; }
  static VarId z(int index) { return {Family::Z, 0, index}; }

  std::string name() const;

  friend bool operator==(const VarId&, const VarId&) = default;
};

/// Dense slot of a variable. Slots realise the fixed total order: copies in
/// order (x block then y block), Z-family last.
int slot_of(const Universe& u, const VarId& v);
VarId var_at(const Universe& u, int slot);

/// Parses "x<a>.<i>", "y<a>.<i>", "z<i>"; for a single copy "x<i>"/"y<i>"
/// are accepted as aliases of copy 1.
VarId parse_var(std::string_view text, const Universe& u);

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(int num_vars) : exps_(static_cast<std::size_t>(num_vars), 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial one(const Universe& u) { return Monomial(u.num_vars()); }

  int size() const { return static_cast<int>(exps_.size()); }
  Exponent operator[](int slot) const { return exps_[static_cast<std::size_t>(slot)]; }
  void set(int slot, Exponent e) { exps_[static_cast<std::size_t>(slot)] = e; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  bool is_one() const;
  unsigned total_degree() const;
  bool divisible_by(const Monomial& d) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divisible_by(d).
  Monomial operator/(const Monomial& d) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Lexicographic on the slot order, higher exponents first (x1.1^2 precedes
/// x1.1*x1.2 precedes x1.2^2).
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.exponents() > b.exponents();
  }
};

struct MultiDegree {
  std::vector<int> perCopy;
  int zDegree = 0;

  std::string to_string() const;

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;
};

MultiDegree multidegree(const Universe& u, const Monomial& m);
int z_degree(const Universe& u, const Monomial& m);
int y_degree(const Universe& u, const Monomial& m);

/// Sparse polynomial over Q in the variables of a Universe. Terms never hold a
/// zero coefficient, so structural equality is polynomial equality.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, TermOrder>;

  explicit Poly(Universe u);

  static Poly constant(const Universe& u, const Rational& c);
  static Poly variable(const Universe& u, const VarId& v);
  static Poly from_monomial(const Universe& u, Monomial m, const Rational& c = 1);

  const Universe& universe() const { return universe_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c*m, merging like terms and dropping cancellations.
  void add_term(const Monomial& m, const Rational& c);

  /// Coefficient of m (zero if absent).
  Rational coefficient(const Monomial& m) const;

  /// The multidegrees that occur, ascending.
  std::set<MultiDegree> degrees() const;
  bool is_homogeneous() const { return degrees().size() <= 1; }

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void require_same_universe(const Poly& other) const;

  Universe universe_;
  Terms terms_;
};

Poly pow(const Poly& p, unsigned e);

/// Formal partial derivative.
Poly partial(const Poly& p, const VarId& v);

/// Sum of the terms of exactly multidegree d.
Poly homogeneous_component(const Poly& p, const MultiDegree& d);

/// All monomials of exactly multidegree d, in TermOrder.
std::vector<Monomial> monomial_basis(const Universe& u, const MultiDegree& d);

/// Monomials in x<copy>.1..x<copy>.n only (the orthogonal R^n validation path).
std::vector<Monomial> orthogonal_monomial_basis(const Universe& u, int copy, int degree);

Integer binomial(long top, long bottom);

/// Human-readable text in the input grammar, e.g. "2*x1.1^2 - 1/2*z1".
std::string to_string(const Poly& p);
std::string to_string(const Universe& u, const Monomial& m);

}  // namespace spm
