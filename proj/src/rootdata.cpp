#include "spmodels/rootdata.hpp"

#include <sstream>

namespace spm {

Weight Weight::from_ints(const std::vector<long>& v, int n) {
  if (static_cast<int>(v.size()) > n) throw InvalidInput("weight has more than n entries");
  Weight w = zero(n);
  for (std::size_t i = 0; i < v.size(); ++i) w.coords[i] = Rational(v[i]);
  return w;
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += spm::to_string(coords[i]);
  }
  return s + ")";
}

Weight Weight::operator+(const Weight& o) const {
  if (o.rank() != rank()) throw InvalidInput("weights of different rank");
  Weight r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  if (o.rank() != rank()) throw InvalidInput("weights of different rank");
  Weight r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

RootSystemSp root_system_sp(int n) {
  if (n < 1) throw InvalidInput("rank n must be >= 1");
  RootSystemSp rs;
  rs.n = n;
  auto unit = [n](int i, long c) {
    Weight w = Weight::zero(n);
    w.coords[static_cast<std::size_t>(i)] = c;
    return w;
  };
  for (int i = 0; i < n; ++i) {
    rs.longRoots.push_back(unit(i, 2));
    rs.longRoots.push_back(unit(i, -2));
    rs.positiveRoots.push_back(unit(i, 2));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          Weight w = unit(i, si) + unit(j, sj);
          rs.shortRoots.push_back(w);
          if (si == 1) rs.positiveRoots.push_back(w);
        }
      }
    }
  }
  for (int i = 0; i + 1 < n; ++i) rs.simpleRoots.push_back(unit(i, 1) - unit(i + 1, 1));
  rs.simpleRoots.push_back(unit(n - 1, 2));
  return rs;
}

bool is_integral(const Weight& w) {
  for (const auto& c : w.coords)
    if (!is_integer(c)) return false;
  return true;
}

bool is_dominant(const Weight& w) {
  if (w.coords.empty() || !is_integral(w)) return false;
  for (std::size_t i = 0; i + 1 < w.coords.size(); ++i)
    if (w.coords[i] < w.coords[i + 1]) return false;
  return w.coords.back() >= 0;
}

Weight spinor_tail(int n, SpinorTail tail) {
  Weight w(std::vector<Rational>(static_cast<std::size_t>(n), Rational(-1, 2)));
  if (tail == SpinorTail::Odd) w.coords.back() = Rational(-3, 2);
  return w;
}

bool is_spinor_dominant(const Weight& w) {
  if (w.coords.empty()) return false;
  const int n = w.rank();
  return is_dominant(w - spinor_tail(n, SpinorTail::Even)) ||
         is_dominant(w - spinor_tail(n, SpinorTail::Odd));
}

Integer weyl_dim(const Weight& lambda) {
  if (!is_integral(lambda)) throw InvalidInput("weight " + lambda.to_string() + " is not integral");
  if (!is_dominant(lambda)) throw InvalidInput("weight " + lambda.to_string() + " is not dominant");
  const int n = lambda.rank();
  std::vector<Rational> g(static_cast<std::size_t>(n)), m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    g[static_cast<std::size_t>(i)] = n - i;
    m[static_cast<std::size_t>(i)] = lambda.coords[static_cast<std::size_t>(i)] + g[static_cast<std::size_t>(i)];
  }
  Rational dim = 1;
  for (int i = 0; i < n; ++i) dim *= m[static_cast<std::size_t>(i)] / g[static_cast<std::size_t>(i)];
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
      dim *= (m[si] - m[sj]) / (g[si] - g[sj]);
      dim *= (m[si] + m[sj]) / (g[si] + g[sj]);
    }
  }
  if (!is_integer(dim))
    throw ComputationError("Weyl dimension of " + lambda.to_string() + " is not integral: " +
                           to_string(dim));
  return dim.get_num();
}

Weight omega_to_epsilon(const std::vector<Rational>& coeffs) {
  const std::size_t n = coeffs.size();
  Weight w = Weight::zero(static_cast<int>(n));
  // coordinate i collects c_j for all j >= i
  Rational acc = 0;
  for (std::size_t k = n; k-- > 0;) {
    acc += coeffs[k];
    w.coords[k] = acc;
  }
  return w;
}

std::vector<Rational> epsilon_to_omega(const Weight& w) {
  const std::size_t n = w.coords.size();
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i)
    c[i] = i + 1 < n ? w.coords[i] - w.coords[i + 1] : w.coords[i];
  return c;
}

Weight parse_weight(const std::string& text, int n) {
  if (n < 1) throw InvalidInput("rank n must be >= 1");
  std::vector<Rational> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
  if (static_cast<int>(coords.size()) > n)
    throw InvalidInput("weight '" + text + "' has more than n=" + std::to_string(n) + " entries");
  coords.resize(static_cast<std::size_t>(n), 0);
  return Weight(std::move(coords));
}

}  // namespace spm
