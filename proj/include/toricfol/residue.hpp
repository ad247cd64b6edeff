#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toricfol/chow.hpp"
#include "toricfol/multipoly.hpp"

namespace toricfol {

/// A polynomial map germ at the origin of a chart, with the order of the
/// local isotropy group.
struct IndexQuery {
  std::vector<MultiPoly> components;
  BigInt group_order = 1;
  unsigned degree_cap = 64;
};

struct LocalIndexReport {
  BigInt multiplicity;
  BigInt group_order;
  Rational orbifold_index;
  unsigned stabilized_at = 0;
};

inline Rational orbifold_index(const BigInt& multiplicity, const BigInt& group_order) {
  if (group_order <= 0) throw DomainError("group order must be positive");
  if (multiplicity < 0) throw DomainError("multiplicity must be nonnegative");
  return Rational(multiplicity, group_order);
}

inline Rational index_sum(std::span<const LocalIndexReport> reports) {
  Rational s(0);
  for (const auto& r : reports) s = s + r.orbifold_index;
  return s;
}

namespace detail {

using SparseRow = std::vector<std::pair<std::size_t, BigInt>>;

// Row echelon form over Z built one row at a time. Reduction is fraction
// free: r ← p_c·r − r_c·p, then r is divided by its content.
class IntegerEchelon {
 public:
  void insert(SparseRow r) {
    while (!r.empty()) {
      auto it = pivots_.find(r.front().first);
      if (it == pivots_.end()) break;
      r = combine(r, it->second);
    }
    if (r.empty()) return;
    normalize(r);
    pivots_.emplace(r.front().first, std::move(r));
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  static SparseRow combine(const SparseRow& r, const SparseRow& p) {
    const BigInt a = p.front().second, b = r.front().second;
    SparseRow out;
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
      BigInt v;
      std::size_t col;
      if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
        col = r[i].first;
        v = a * r[i++].second;
      } else if (i == r.size() || p[j].first < r[i].first) {
        col = p[j].first;
        v = -b * p[j++].second;
      } else {
        col = r[i].first;
        v = a * r[i++].second - b * p[j++].second;
      }
      if (v != 0) out.emplace_back(col, std::move(v));
    }
    return out;
  }
  static void normalize(SparseRow& r) {
    BigInt g = 0;
    for (const auto& [c, v] : r) g = gcd(g, v);
    if (g > 1)
      for (auto& [c, v] : r) v /= g;
  }

  std::map<std::size_t, SparseRow> pivots_;
};

// dim of (monomials of degree < D) modulo the truncated products u·f_i.
inline std::size_t quotient_dimension(const std::vector<MultiPoly>& fs, std::uint32_t D) {
  const std::size_t n = fs.front().nvars();
  std::map<Exponents, std::size_t> column;
  std::vector<std::vector<Exponents>> by_degree;
  for (std::uint32_t k = 0; k < D; ++k) {
    by_degree.push_back(monomials_of_degree(n, k));
    for (const auto& e : by_degree.back()) column.emplace(e, column.size());
  }
  IntegerEchelon ech;
  for (const auto& f : fs) {
    const auto ord = f.order();
    if (ord >= D) continue;
    for (std::uint32_t k = 0; k + ord < D; ++k) {
      for (const auto& u : by_degree[k]) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [e, c] : f.terms()) {
          if (total_degree(e) + k >= D) continue;
          Exponents prod = e;
          for (std::size_t v = 0; v < n; ++v) prod[v] += u[v];
          acc[column.at(prod)] = c;
        }
        BigInt den = 1;
        for (const auto& [col, c] : acc) den = lcm(den, c.den());
        SparseRow row;
        for (const auto& [col, c] : acc) row.emplace_back(col, c.num() * (den / c.den()));
        ech.insert(std::move(row));
      }
    }
  }
  return column.size() - ech.rank();
}

}  // namespace detail

/// Local multiplicity dim O_0/(f_1..f_n) via truncated Macaulay matrices:
/// c(D) = dim of polynomials of degree < D modulo the ideal, for
/// D = 1, 2, …; the first D with c(D) = c(D+1) gives the answer.
inline LocalIndexReport local_multiplicity(const IndexQuery& q) {
  const auto& fs = q.components;
  if (fs.empty()) throw DomainError("no components");
  const std::size_t n = fs.front().nvars();
  if (fs.size() != n)
    throw DomainError(std::to_string(fs.size()) + " components in " + std::to_string(n) + " variables");
  for (const auto& f : fs) {
    if (!f.same_table(fs.front())) throw AlignmentError("components use different variable tables");
    if (!f.constant_term().is_zero()) throw DomainError("component does not vanish at the origin");
  }
  if (q.group_order <= 0) throw DomainError("group order must be positive");

  std::size_t prev = detail::quotient_dimension(fs, 1);
  for (unsigned D = 1; D < q.degree_cap; ++D) {
    std::size_t next = detail::quotient_dimension(fs, D + 1);
    if (next < prev) throw std::logic_error("Macaulay quotient dimension decreased");
    if (next == prev) {
      LocalIndexReport r;
      r.multiplicity = BigInt(static_cast<unsigned long>(prev));
      r.group_order = q.group_order;
      r.orbifold_index = orbifold_index(r.multiplicity, q.group_order);
      r.stabilized_at = D;
      return r;
    }
    prev = next;
  }
  throw NonIsolatedZero("no stabilization below degree " + std::to_string(q.degree_cap) +
                        "; the zero at the origin is not isolated or the cap is too small");
}

}  // namespace toricfol
