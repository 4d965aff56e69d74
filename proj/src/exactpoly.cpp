#include "spmodels/exactpoly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace spm {

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw InvalidInput("empty rational");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto check_digits = [&](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && part.front() == '-') part.remove_prefix(1);
    if (part.empty() ||
        !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InvalidInput("malformed rational '" + std::string(text) + "'");
  };
  if (slash == std::string::npos) {
    check_digits(s, true);
    return Rational(Integer(s));
  }
  check_digits(std::string_view(s).substr(0, slash), true);
  check_digits(std::string_view(s).substr(slash + 1), false);
  Integer den(s.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(s.substr(0, slash)), den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

void Universe::validate() const {
  if (n < 1) throw InvalidInput("rank n must be >= 1");
  if (copies < 1) throw InvalidInput("number of vector variables N must be >= 1");
}

std::string VarId::name() const {
  switch (family) {
    case Family::X: return "x" + std::to_string(copy) + "." + std::to_string(index);
    case Family::Y: return "y" + std::to_string(copy) + "." + std::to_string(index);
    case Family::Z: return "z" + std::to_string(index);
  }
  return {};
}

int slot_of(const Universe& u, const VarId& v) {
  if (v.index < 1 || v.index > u.n)
    throw InvalidInput("variable index out of range in " + v.name());
  if (v.family == Family::Z) return 2 * u.n * u.copies + (v.index - 1);
  if (v.copy < 1 || v.copy > u.copies)
    throw InvalidInput("copy index out of range in " + v.name());
  const int base = 2 * u.n * (v.copy - 1);
  return base + (v.family == Family::Y ? u.n : 0) + (v.index - 1);
}

VarId var_at(const Universe& u, int slot) {
  const int zbase = 2 * u.n * u.copies;
  if (slot >= zbase) return VarId::z(slot - zbase + 1);
  const int copy = slot / (2 * u.n) + 1;
  const int within = slot % (2 * u.n);
  return within < u.n ? VarId::x(copy, within + 1) : VarId::y(copy, within - u.n + 1);
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw InvalidInput("malformed variable '" + std::string(whole) + "'");
  return value;
}

}  // namespace

VarId parse_var(std::string_view text, const Universe& u) {
  if (text.size() < 2) throw InvalidInput("malformed variable '" + std::string(text) + "'");
  const char f = text.front();
  const auto rest = text.substr(1);
  VarId v;
  if (f == 'z') {
    v = VarId::z(parse_int(rest, text));
  } else if (f == 'x' || f == 'y') {
    const auto dot = rest.find('.');
    int copy = 1;
    int index = 0;
    if (dot == std::string_view::npos) {
      if (u.copies != 1)
        throw InvalidInput("variable '" + std::string(text) + "' needs a copy index (x<a>.<i>)");
      index = parse_int(rest, text);
    } else {
      copy = parse_int(rest.substr(0, dot), text);
      index = parse_int(rest.substr(dot + 1), text);
    }
    v = f == 'x' ? VarId::x(copy, index) : VarId::y(copy, index);
  } else {
    throw InvalidInput("unknown variable family in '" + std::string(text) + "'");
  }
  slot_of(u, v);
  return v;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divisible_by(const Monomial& d) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] < d.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = static_cast<Exponent>(r.exps_[i] + other.exps_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& d) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = static_cast<Exponent>(r.exps_[i] - d.exps_[i]);
  return r;
}

std::string MultiDegree::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < perCopy.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(perCopy[i]);
  }
  return s + "; z=" + std::to_string(zDegree) + ")";
}

MultiDegree multidegree(const Universe& u, const Monomial& m) {
  MultiDegree d;
  d.perCopy.assign(static_cast<std::size_t>(u.copies), 0);
  for (int a = 0; a < u.copies; ++a)
    for (int s = 0; s < 2 * u.n; ++s) d.perCopy[static_cast<std::size_t>(a)] += m[2 * u.n * a + s];
  d.zDegree = z_degree(u, m);
  return d;
}

int z_degree(const Universe& u, const Monomial& m) {
  int d = 0;
  for (int i = 0; i < u.n; ++i) d += m[2 * u.n * u.copies + i];
  return d;
}

int y_degree(const Universe& u, const Monomial& m) {
  int d = 0;
  for (int a = 0; a < u.copies; ++a)
    for (int i = 0; i < u.n; ++i) d += m[2 * u.n * a + u.n + i];
  return d;
}

Poly::Poly(Universe u) : universe_(u) {}

Poly Poly::constant(const Universe& u, const Rational& c) {
  Poly p(u);
  p.add_term(Monomial::one(u), c);
  return p;
}

Poly Poly::variable(const Universe& u, const VarId& v) {
  Monomial m = Monomial::one(u);
  m.set(slot_of(u, v), 1);
  return from_monomial(u, std::move(m));
}

Poly Poly::from_monomial(const Universe& u, Monomial m, const Rational& c) {
  if (m.size() != u.num_vars()) throw InvalidInput("monomial does not match universe");
  Poly p(u);
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  // mpq arithmetic assumes canonical operands; callers may hand in raw p/q
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<MultiDegree> Poly::degrees() const {
  std::set<MultiDegree> out;
  for (const auto& [m, c] : terms_) out.insert(multidegree(universe_, m));
  return out;
}

void Poly::require_same_universe(const Poly& other) const {
  if (!(universe_ == other.universe_))
    throw InvalidInput("polynomials live in different variable universes");
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_universe(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_universe(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r(*this);
  return r *= Rational(-1);
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_universe(b);
  Poly r(a.universe_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly pow(const Poly& p, unsigned e) {
  Poly result = Poly::constant(p.universe(), 1);
  Poly base = p;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly partial(const Poly& p, const VarId& v) {
  const int s = slot_of(p.universe(), v);
  Poly r(p.universe());
  for (const auto& [m, c] : p.terms()) {
    const auto e = m[s];
    if (e == 0) continue;
    Monomial dm = m;
    dm.set(s, static_cast<Monomial::Exponent>(e - 1));
    r.add_term(dm, c * e);
  }
  return r;
}

Poly homogeneous_component(const Poly& p, const MultiDegree& d) {
  Poly r(p.universe());
  for (const auto& [m, c] : p.terms())
    if (multidegree(p.universe(), m) == d) r.add_term(m, c);
  return r;
}

namespace {

// Appends every exponent distribution of `degree` over slots [first, first+count).
void distribute(std::vector<Monomial>& acc, int first, int count, int degree) {
  std::vector<Monomial> out;
  for (const auto& base : acc) {
    std::vector<int> e(static_cast<std::size_t>(count), 0);
    // Enumerate compositions of `degree` into `count` parts.
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == count - 1) {
        e[static_cast<std::size_t>(pos)] = left;
        Monomial m = base;
        for (int i = 0; i < count; ++i)
          m.set(first + i, static_cast<Monomial::Exponent>(e[static_cast<std::size_t>(i)]));
        out.push_back(std::move(m));
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[static_cast<std::size_t>(pos)] = k;
        rec(pos + 1, left - k);
      }
    };
    rec(0, degree);
  }
  acc = std::move(out);
}

}  // namespace

std::vector<Monomial> monomial_basis(const Universe& u, const MultiDegree& d) {
  u.validate();
  if (static_cast<int>(d.perCopy.size()) != u.copies)
    throw InvalidInput("multidegree has " + std::to_string(d.perCopy.size()) +
                       " entries, universe has N=" + std::to_string(u.copies));
  for (int k : d.perCopy)
    if (k < 0) throw InvalidInput("negative degree in multidegree");
  if (d.zDegree < 0) throw InvalidInput("negative z-degree in multidegree");
  std::vector<Monomial> acc{Monomial::one(u)};
  for (int a = 0; a < u.copies; ++a)
    distribute(acc, 2 * u.n * a, 2 * u.n, d.perCopy[static_cast<std::size_t>(a)]);
  distribute(acc, 2 * u.n * u.copies, u.n, d.zDegree);
  std::sort(acc.begin(), acc.end(), TermOrder{});
  return acc;
}

std::vector<Monomial> orthogonal_monomial_basis(const Universe& u, int copy, int degree) {
  u.validate();
  if (copy < 1 || copy > u.copies) throw InvalidInput("copy index out of range");
  if (degree < 0) throw InvalidInput("negative degree");
  std::vector<Monomial> acc{Monomial::one(u)};
  distribute(acc, 2 * u.n * (copy - 1), u.n, degree);
  std::sort(acc.begin(), acc.end(), TermOrder{});
  return acc;
}

Integer binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return r;
}

std::string to_string(const Universe& u, const Monomial& m) {
  std::string s;
  for (int i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += var_at(u, i).name();
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << to_string(p.universe(), m);
    }
  }
  return out.str();
}

}  // namespace spm
