#include "spmodels/weylalg.hpp"

#include <sstream>
#include <vector>

namespace spm {

WeylOp::WeylOp(Universe u) : universe_(u) {}

WeylOp WeylOp::identity(const Universe& u, const Rational& c) {
  WeylOp op(u);
  op.add_term(Monomial::one(u), Monomial::one(u), c);
  return op;
}

WeylOp WeylOp::multiplication(const Poly& p) {
  WeylOp op(p.universe());
  for (const auto& [m, c] : p.terms()) op.add_term(m, Monomial::one(p.universe()), c);
  return op;
}

WeylOp WeylOp::derivative(const Universe& u, const VarId& v) {
  Monomial d = Monomial::one(u);
  d.set(slot_of(u, v), 1);
  WeylOp op(u);
  op.add_term(Monomial::one(u), d, 1);
  return op;
}

WeylOp WeylOp::variable(const Universe& u, const VarId& v) {
  return multiplication(Poly::variable(u, v));
}

void WeylOp::add_term(const Monomial& mult, const Monomial& deriv, const Rational& c) {
  if (c == 0) return;
  if (mult.size() != universe_.num_vars() || deriv.size() != universe_.num_vars())
    throw InvalidInput("operator term does not match universe");
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(WeylKey{mult, deriv}, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

int WeylOp::order() const {
  int best = 0;
  for (const auto& [k, c] : terms_) best = std::max(best, static_cast<int>(k.deriv.total_degree()));
  return best;
}

int WeylOp::weyl_degree() const {
  int best = 0;
  for (const auto& [k, c] : terms_)
    best = std::max(best, static_cast<int>(k.deriv.total_degree() + k.mult.total_degree()));
  return best;
}

void WeylOp::require_same_universe(const WeylOp& other) const {
  if (!(universe_ == other.universe_))
    throw InvalidInput("operators live in different variable universes");
}

WeylOp& WeylOp::operator+=(const WeylOp& other) {
  require_same_universe(other);
  for (const auto& [k, c] : other.terms_) add_term(k.mult, k.deriv, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& other) {
  require_same_universe(other);
  for (const auto& [k, c] : other.terms_) add_term(k.mult, k.deriv, -c);
  return *this;
}

WeylOp& WeylOp::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, coef] : terms_) coef *= c;
  return *this;
}

WeylOp WeylOp::operator-() const {
  WeylOp r(*this);
  return r *= Rational(-1);
}

namespace {

// n!/(n-k)!
Integer falling(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n - i;
  return r;
}

// d^alpha ∘ x^beta = sum_gamma prod_v C(alpha_v, gamma_v) beta_v!/(beta_v-gamma_v)!
//                    x^(beta-gamma) d^(alpha-gamma)
void reorder_into(WeylOp& out, const Rational& coef, const Monomial& left_mult,
                  const Monomial& alpha, const Monomial& beta, const Monomial& right_deriv) {
  std::vector<int> active;
  for (int s = 0; s < alpha.size(); ++s)
    if (alpha[s] > 0 && beta[s] > 0) active.push_back(s);

  Monomial gamma(alpha.size());
  auto emit = [&](const Integer& factor) {
    out.add_term(left_mult * (beta / gamma), (alpha / gamma) * right_deriv, coef * Rational(factor));
  };
  std::vector<Integer> partial(active.size() + 1, 1);
  // Depth-first over the gamma box.
  auto rec = [&](auto&& self, std::size_t pos, const Integer& acc) -> void {
    if (pos == active.size()) {
      emit(acc);
      return;
    }
    const int s = active[pos];
    const unsigned top = std::min<unsigned>(alpha[s], beta[s]);
    for (unsigned g = 0; g <= top; ++g) {
      gamma.set(s, static_cast<Monomial::Exponent>(g));
      self(self, pos + 1, acc * binomial(alpha[s], g) * falling(beta[s], g));
    }
    gamma.set(s, 0);
  };
  rec(rec, 0, Integer(1));
}

}  // namespace

WeylOp compose(const WeylOp& a, const WeylOp& b) {
  if (!(a.universe() == b.universe()))
    throw InvalidInput("operators live in different variable universes");
  WeylOp out(a.universe());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      reorder_into(out, ca * cb, ka.mult, ka.deriv, kb.mult, kb.deriv);
  return out;
}

WeylOp operator*(const WeylOp& a, const WeylOp& b) { return compose(a, b); }

WeylOp commutator(const WeylOp& a, const WeylOp& b) { return compose(a, b) - compose(b, a); }

WeylOp power(const WeylOp& a, unsigned k) {
  WeylOp r = WeylOp::identity(a.universe());
  for (unsigned i = 0; i < k; ++i) r = compose(a, r);
  return r;
}

Poly apply(const WeylOp& a, const Monomial& m) {
  Poly out(a.universe());
  for (const auto& [k, c] : a.terms()) {
    if (!m.divisible_by(k.deriv)) continue;
    Integer factor = 1;
    for (int s = 0; s < m.size(); ++s)
      if (k.deriv[s]) factor *= falling(m[s], k.deriv[s]);
    out.add_term((m / k.deriv) * k.mult, c * Rational(factor));
  }
  return out;
}

Poly apply(const WeylOp& a, const Poly& p) {
  if (!(a.universe() == p.universe()))
    throw InvalidInput("operator and polynomial live in different variable universes");
  Poly out(p.universe());
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [k, oc] : a.terms()) {
      if (!m.divisible_by(k.deriv)) continue;
      Integer factor = 1;
      for (int s = 0; s < m.size(); ++s)
        if (k.deriv[s]) factor *= falling(m[s], k.deriv[s]);
      out.add_term((m / k.deriv) * k.mult, c * oc * Rational(factor));
    }
  }
  return out;
}

std::string to_string(const WeylOp& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const Universe& u = a.universe();
  for (const auto& [k, c] : a.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string factors;
    if (!k.mult.is_one()) factors = to_string(u, k.mult);
    for (int s = 0; s < k.deriv.size(); ++s) {
      if (k.deriv[s] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "d" + var_at(u, s).name();
      if (k.deriv[s] > 1) factors += "^" + std::to_string(k.deriv[s]);
    }
    if (factors.empty()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << factors;
    }
  }
  return out.str();
}

}  // namespace spm
