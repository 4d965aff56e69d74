#include "spmodels/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace spm {

namespace {

void make_primitive(IntRow& r) {
  if (r.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (r.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_int_row(const SparseRow& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    if (v == 0) continue;
    Integer e = v.get_num() * (l / v.get_den());
    out.emplace_back(c, std::move(e));
  }
  make_primitive(out);
  return out;
}

// alpha*r - beta*p over the union of supports, dropping cancellations.
IntRow combine(const IntRow& r, const Integer& alpha, const IntRow& p, const Integer& beta) {
  IntRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, alpha * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -beta * p[j].second);
      ++j;
    } else {
      Integer v = alpha * r[i].second - beta * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Removes the entry of r at pivot column c using pivot row p (p's entry at c
// is its leading entry).
void eliminate(IntRow& r, std::size_t pos, const IntRow& p) {
  const Integer& a = r[pos].second;
  const Integer& lead = p.front().second;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), lead.get_mpz_t());
  Integer alpha = lead / g;
  Integer beta = a / g;
  r = combine(r, alpha, p, beta);
  make_primitive(r);
}

struct Echelon {
  std::vector<int> pivot_cols;           // ascending
  std::vector<const IntRow*> by_col;     // cols entries, null if free
  std::vector<IntRow> storage;
};

Echelon echelon(const SparseMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows.size());
  for (const auto& r : m.rows) {
    IntRow ir = to_int_row(r);
    if (!ir.empty()) rows.push_back(std::move(ir));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });

  std::vector<std::optional<IntRow>> pivot(static_cast<std::size_t>(m.cols));
  for (auto& r : rows) {
    while (!r.empty()) {
      const int c = r.front().first;
      auto& slot = pivot[static_cast<std::size_t>(c)];
      if (!slot) {
        slot = std::move(r);
        break;
      }
      eliminate(r, 0, *slot);
    }
  }

  // Back-substitution to reduced form, highest pivot first.
  for (int c = m.cols - 1; c >= 0; --c) {
    auto& slot = pivot[static_cast<std::size_t>(c)];
    if (!slot) continue;
    IntRow& r = *slot;
    for (;;) {
      std::size_t pos = 1;
      while (pos < r.size() && !pivot[static_cast<std::size_t>(r[pos].first)]) ++pos;
      if (pos >= r.size()) break;
      eliminate(r, pos, *pivot[static_cast<std::size_t>(r[pos].first)]);
    }
  }

  Echelon e;
  e.by_col.assign(static_cast<std::size_t>(m.cols), nullptr);
  e.storage.reserve(static_cast<std::size_t>(m.cols));
  for (int c = 0; c < m.cols; ++c) {
    auto& slot = pivot[static_cast<std::size_t>(c)];
    if (!slot) continue;
    e.pivot_cols.push_back(c);
    e.storage.push_back(std::move(*slot));
  }
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    e.by_col[static_cast<std::size_t>(e.pivot_cols[i])] = &e.storage[i];
  return e;
}

}  // namespace

std::vector<IntRow> nullspace(const SparseMatrix& m) {
  const Echelon e = echelon(m);
  // For each free column, the pivot rows that mention it.
  std::vector<std::vector<std::pair<int, const IntRow*>>> mentions(static_cast<std::size_t>(m.cols));
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
    const IntRow& r = e.storage[i];
    for (std::size_t k = 1; k < r.size(); ++k)
      mentions[static_cast<std::size_t>(r[k].first)].emplace_back(e.pivot_cols[i], &r);
  }

  std::vector<IntRow> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (e.by_col[static_cast<std::size_t>(f)]) continue;
    const auto& refs = mentions[static_cast<std::size_t>(f)];
    Integer l = 1;
    for (const auto& [c, row] : refs)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row->front().second.get_mpz_t());
    IntRow v;
    v.reserve(refs.size() + 1);
    for (const auto& [c, row] : refs) {
      const auto it = std::lower_bound(row->begin(), row->end(), f,
                                       [](const auto& entry, int col) { return entry.first < col; });
      Integer val = -(it->second * (l / row->front().second));
      v.emplace_back(c, std::move(val));
    }
    v.emplace_back(f, l);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // Primitive, with a positive entry at the free column.
    Integer g = 0;
    for (const auto& [c, val] : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), val.get_mpz_t());
    for (auto& [c, val] : v) mpz_divexact(val.get_mpz_t(), val.get_mpz_t(), g.get_mpz_t());
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(const SparseMatrix& m) { return static_cast<int>(echelon(m).pivot_cols.size()); }

namespace {

// a - s*b
SparseRow axpy(const SparseRow& a, const Rational& s, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -s * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second - s * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

Rational entry(const SparseRow& v, int col) {
  const auto it = std::lower_bound(v.begin(), v.end(), col,
                                   [](const auto& e, int c) { return e.first < c; });
  return (it != v.end() && it->first == col) ? it->second : Rational(0);
}

}  // namespace

void IncrementalSpan::reduce(SparseRow& v, std::vector<Rational>& comb) const {
  for (const auto& [col, idx] : pivots_) {
    const Rational a = entry(v, col);
    if (a == 0) continue;
    const EchelonRow& r = rows_[idx];
    v = axpy(v, a, r.vec);
    for (std::size_t i = 0; i < r.comb.size(); ++i) comb[i] -= a * r.comb[i];
  }
}

bool IncrementalSpan::insert(const SparseRow& v_in) {
  const std::size_t k = rows_.size();
  SparseRow v;
  for (const auto& e : v_in)
    if (e.second != 0) v.push_back(e);
  std::vector<Rational> comb(k + 1, 0);
  comb[k] = 1;
  reduce(v, comb);
  if (v.empty()) return false;
  const int col = v.front().first;
  const Rational inv = 1 / v.front().second;
  for (auto& e : v) e.second *= inv;
  for (auto& c : comb) c *= inv;
  for (auto& r : rows_) {
    r.comb.resize(k + 1, 0);
    const Rational a = entry(r.vec, col);
    if (a == 0) continue;
    r.vec = axpy(r.vec, a, v);
    for (std::size_t i = 0; i <= k; ++i) r.comb[i] -= a * comb[i];
  }
  pivots_.emplace(col, rows_.size());
  rows_.push_back({std::move(v), std::move(comb)});
  return true;
}

std::optional<std::vector<Rational>> IncrementalSpan::coordinates(const SparseRow& v_in) const {
  const std::size_t k = rows_.size();
  SparseRow v;
  for (const auto& e : v_in)
    if (e.second != 0) v.push_back(e);
  // Track -coordinates: reduce() subtracts.
  std::vector<Rational> comb(k, 0);
  SparseRow rest = v;
  reduce(rest, comb);
  if (!rest.empty()) return std::nullopt;
  for (auto& c : comb) c = -c;
  return comb;
}

}  // namespace spm
