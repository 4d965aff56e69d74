#pragma once

#include <map>
#include <string>
#include <utility>

#include "spmodels/exactpoly.hpp"

namespace spm {

/// Key of a normal-ordered Weyl-algebra term: multiplication monomial acting
/// after the derivative monomial.
struct WeylKey {
  Monomial mult;
  Monomial deriv;

  friend bool operator==(const WeylKey&, const WeylKey&) = default;
};

struct WeylKeyOrder {
  bool operator()(const WeylKey& a, const WeylKey& b) const {
    if (a.deriv.exponents() != b.deriv.exponents())
      return a.deriv.exponents() > b.deriv.exponents();
    return a.mult.exponents() > b.mult.exponents();
  }
};

/// Polynomial-coefficient differential operator in normal-ordered form
/// sum c * x^mult * d^deriv. Canonical, so operator equality is structural.
class WeylOp {
 public:
  using Terms = std::map<WeylKey, Rational, WeylKeyOrder>;

  explicit WeylOp(Universe u);

  static WeylOp identity(const Universe& u, const Rational& c = 1);
  static WeylOp multiplication(const Poly& p);
  static WeylOp derivative(const Universe& u, const VarId& v);
  static WeylOp variable(const Universe& u, const VarId& v);

  const Universe& universe() const { return universe_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& mult, const Monomial& deriv, const Rational& c);

  /// Highest derivative order over all terms.
  int order() const;
  /// Highest total degree (multiplication + derivative) over all terms.
  int weyl_degree() const;

  WeylOp& operator+=(const WeylOp& other);
  WeylOp& operator-=(const WeylOp& other);
  WeylOp& operator*=(const Rational& c);
  WeylOp operator-() const;

  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  friend WeylOp operator*(WeylOp a, const Rational& c) { return a *= c; }
  friend WeylOp operator*(const Rational& c, WeylOp a) { return a *= c; }

  friend bool operator==(const WeylOp&, const WeylOp&) = default;

 private:
  void require_same_universe(const WeylOp& other) const;

  Universe universe_;
  Terms terms_;
};

/// Normal-ordered product A∘B (apply B first).
WeylOp compose(const WeylOp& a, const WeylOp& b);
WeylOp operator*(const WeylOp& a, const WeylOp& b);

/// [A,B] = AB - BA.
WeylOp commutator(const WeylOp& a, const WeylOp& b);

/// A^k by repeated composition.
WeylOp power(const WeylOp& a, unsigned k);

Poly apply(const WeylOp& a, const Poly& p);

/// Action of A on a single monomial (coefficient 1).
Poly apply(const WeylOp& a, const Monomial& m);

std::string to_string(const WeylOp& a);

}  // namespace spm
