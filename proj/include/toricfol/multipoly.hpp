#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toricfol/error.hpp"
#include "toricfol/rational.hpp"

namespace toricfol {

using Exponents = std::vector<std::uint32_t>;
using VarTable = std::vector<std::string>;

inline std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

// Graded-lex, descending: higher total degree first, ties broken by the
// lexicographically larger exponent vector (earlier variables dominate).
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// A polynomial owns an ordered variable table; every exponent vector has
/// the table's length and no stored coefficient is zero. Binary arithmetic
/// requires identical tables (see `align` and `embed`). Terms are kept in
/// graded-lex descending order, which is also the printing order.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexDescending>;

  MultiPoly() : vars_(empty_table()) {}
  explicit MultiPoly(VarTable vars) : vars_(std::make_shared<const VarTable>(std::move(vars))) {}

  static MultiPoly constant(VarTable vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
  }
  static MultiPoly constant(const Rational& c) { return constant({}, c); }

  static MultiPoly variable(VarTable vars, std::size_t index) {
    if (index >= vars.size()) throw DomainError("variable index out of range");
    MultiPoly p(std::move(vars));
    Exponents e(p.nvars(), 0);
    e[index] = 1;
    p.add_term(std::move(e), Rational(1));
    return p;
  }
  static MultiPoly variable(VarTable vars, const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw DomainError("unknown variable '" + name + "'");
    auto idx = static_cast<std::size_t>(it - vars.begin());
    return variable(std::move(vars), idx);
  }

  const VarTable& vars() const { return *vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && toricfol::total_degree(terms_.begin()->first) == 0);
  }
  Rational constant_term() const {
    auto it = terms_.find(Exponents(nvars(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }
  std::optional<Rational> as_constant() const {
    if (!is_constant()) return std::nullopt;
    return constant_term();
  }
  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds `c * x^e`, merging with an existing term and dropping zeros.
  void add_term(Exponents e, const Rational& c) {
    if (e.size() != nvars()) throw AlignmentError("exponent vector length does not match variable table");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, toricfol::total_degree(e));
    return d;
  }
  std::uint32_t degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  /// Lowest total degree of a term; 0 for the zero polynomial.
  std::uint32_t order() const {
    if (terms_.empty()) return 0;
    std::uint32_t d = UINT32_MAX;
    for (const auto& [e, c] : terms_) d = std::min(d, toricfol::total_degree(e));
    return d;
  }

  bool same_table(const MultiPoly& o) const { return vars_ == o.vars_ || *vars_ == *o.vars_; }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    require_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same(b);
    MultiPoly r(a.vars_);
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  MultiPoly scaled(const Rational& s) const {
    MultiPoly r(vars_);
    if (s.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly result = constant_like(Rational(1));
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1u) result = result * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return result;
  }

  MultiPoly constant_like(const Rational& c) const {
    MultiPoly r(vars_);
    r.add_term(Exponents(nvars(), 0), c);
    return r;
  }
  MultiPoly zero_like() const { return MultiPoly(vars_); }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents f = e;
      f[var] -= 1;
      r.add_term(std::move(f), c * Rational(static_cast<long>(e[var])));
    }
    return r;
  }

  /// Replaces variable `var` by `value` (which must share the table).
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const {
    require_same(value);
    MultiPoly r(vars_);
    std::vector<MultiPoly> powers{constant_like(Rational(1))};
    for (const auto& [e, c] : terms_) {
      while (powers.size() <= e[var]) powers.push_back(powers.back() * value);
      MultiPoly t(vars_);
      Exponents f = e;
      f[var] = 0;
      t.add_term(std::move(f), c);
      r += t * powers[e[var]];
    }
    return r;
  }

  /// Evaluates every variable; `values` is indexed like the table.
  Rational evaluate(std::span<const Rational> values) const {
    if (values.size() != nvars()) throw AlignmentError("evaluation point has wrong length");
    Rational s(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) t *= values[i].pow(e[i]);
      s += t;
    }
    return s;
  }

  /// Re-expresses the polynomial over `table`, which must contain every
  /// variable that occurs with a nonzero exponent.
  MultiPoly embed(const VarTable& table) const {
    if (*vars_ == table) return *this;
    std::vector<std::size_t> where(nvars(), SIZE_MAX);
    for (std::size_t i = 0; i < nvars(); ++i) {
      auto it = std::find(table.begin(), table.end(), (*vars_)[i]);
      if (it != table.end()) where[i] = static_cast<std::size_t>(it - table.begin());
    }
    MultiPoly r(table);
    for (const auto& [e, c] : terms_) {
      Exponents f(table.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (where[i] == SIZE_MAX)
          throw AlignmentError("variable '" + (*vars_)[i] + "' missing from target table");
        f[where[i]] = e[i];
      }
      r.add_term(std::move(f), c);
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
  }

 private:
  explicit MultiPoly(std::shared_ptr<const VarTable> vars) : vars_(std::move(vars)) {}

  static std::shared_ptr<const VarTable> empty_table() {
    static const auto table = std::make_shared<const VarTable>();
    return table;
  }
  void require_same(const MultiPoly& o) const {
    if (!same_table(o)) throw AlignmentError("operands have different variable tables");
  }

  std::shared_ptr<const VarTable> vars_;
  TermMap terms_;
};

/// Scalar-valued results: a rational constant or a polynomial in formal
/// degree symbols.
using ScalarExpr = MultiPoly;

/// `a`'s table followed by the variables of `b` not already present.
inline VarTable merge_tables(const VarTable& a, const VarTable& b) {
  VarTable out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

inline std::pair<MultiPoly, MultiPoly> align(const MultiPoly& a, const MultiPoly& b) {
  if (a.same_table(b)) return {a, b};
  auto table = merge_tables(a.vars(), b.vars());
  return {a.embed(table), b.embed(table)};
}

/// Drops variables that do not occur in any term.
inline MultiPoly prune(const MultiPoly& p) {
  VarTable used;
  for (std::size_t i = 0; i < p.nvars(); ++i)
    if (p.degree_in(i) > 0) used.push_back(p.vars()[i]);
  return p.embed(used);
}

/// Canonical rendering: graded-lex descending over the declared variable
/// order, integer coefficients without denominator, unit coefficients
/// suppressed before a variable, ` + ` / ` - ` separators, `*` between
/// factors and `^` for powers. The zero polynomial renders as "0".
inline std::string canonical_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool negative = c.sign() < 0;
    Rational mag = c.abs();
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.vars()[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

struct DivisionResult {
  MultiPoly quotient;
  MultiPoly remainder;
};

/// Division with remainder by a single divisor in graded-lex order:
/// `p = quotient * f + remainder` with no term of the remainder divisible
/// by the leading term of `f`.
inline DivisionResult divide(const MultiPoly& p, const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("division by the zero polynomial");
  if (!p.same_table(f)) throw AlignmentError("operands have different variable tables");
  const auto& [lead_e, lead_c] = *f.terms().begin();
  MultiPoly q = p.zero_like(), r = p.zero_like(), rest = p;
  while (!rest.is_zero()) {
    auto [e, c] = *rest.terms().begin();
    bool divisible = true;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < lead_e[i]) { divisible = false; break; }
    MultiPoly t = p.zero_like();
    if (divisible) {
      Exponents diff(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) diff[i] = e[i] - lead_e[i];
      t.add_term(std::move(diff), c / lead_c);
      q += t;
      rest -= t * f;
    } else {
      t.add_term(e, c);
      r += t;
      rest -= t;
    }
  }
  return {std::move(q), std::move(r)};
}

}  // namespace toricfol
