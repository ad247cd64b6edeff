#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "toricfol/multipoly.hpp"

namespace toricfol {

using PicardVector = std::vector<std::int64_t>;
using IntersectionTensor = std::map<Exponents, Rational, GrlexDescending>;

/// A compact toric orbifold described by its Picard-graded divisor data and
/// its top-degree intersection tensor.
///
/// `tensor` maps a degree-`dim` monomial in the generators (as an exponent
/// vector of length `rank`) to its orbifold integral; omitted keys integrate
/// to zero. Chern classes come either from `divisor_classes` through the
/// generalized Euler sequence, or from `chern_override` (polynomials over
/// `gens`) for models whose toric divisor list is not recorded.
struct ToricModel {
  std::string name;
  unsigned dim = 0;
  unsigned rank = 0;
  VarTable gens;
  std::optional<std::vector<PicardVector>> divisor_classes;
  IntersectionTensor tensor;
  std::map<unsigned, MultiPoly> chern_override;
  bool smooth = false;
  // Weights of the radial vector fields, one row of length dim+rank per field.
  std::vector<PicardVector> radial;
  // Homogeneous coordinate names, length dim+rank when present.
  VarTable coords;
  // Non-fatal findings from construction (not part of equality).
  std::vector<std::string> warnings;

  std::size_t num_rays() const { return dim + rank; }

  friend bool operator==(const ToricModel& a, const ToricModel& b) {
    return a.name == b.name && a.dim == b.dim && a.rank == b.rank && a.gens == b.gens &&
           a.divisor_classes == b.divisor_classes && a.tensor == b.tensor &&
           a.chern_override == b.chern_override && a.smooth == b.smooth && a.radial == b.radial &&
           a.coords == b.coords;
  }
};

/// Tensor and divisor-class equality, ignoring names and auxiliary data.
inline bool same_geometry(const ToricModel& a, const ToricModel& b) {
  return a.dim == b.dim && a.rank == b.rank && a.divisor_classes == b.divisor_classes &&
         a.tensor == b.tensor;
}

/// An element of Pic ⊗ Q whose coordinates may be symbolic.
struct ClassExpr {
  std::vector<ScalarExpr> coeffs;

  std::size_t rank() const { return coeffs.size(); }

  static ClassExpr zero(std::size_t r) { return ClassExpr{std::vector<ScalarExpr>(r)}; }
  static ClassExpr numeric(const std::vector<Rational>& v) {
    ClassExpr c;
    for (const auto& x : v) c.coeffs.push_back(MultiPoly::constant(x));
    return c;
  }
  static ClassExpr integers(const std::vector<std::int64_t>& v) {
    ClassExpr c;
    for (auto x : v) c.coeffs.push_back(MultiPoly::constant(Rational(static_cast<long>(x))));
    return c;
  }
  /// Coordinate i is the formal symbol names[i].
  static ClassExpr symbolic(const VarTable& names) {
    ClassExpr c;
    for (std::size_t i = 0; i < names.size(); ++i) c.coeffs.push_back(MultiPoly::variable(names, i));
    return c;
  }

  bool is_numeric() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& p) { return p.is_constant(); });
  }
  std::vector<Rational> numeric_values() const {
    std::vector<Rational> out;
    for (const auto& p : coeffs) {
      auto c = p.as_constant();
      if (!c) throw DomainError("class has symbolic coordinates");
      out.push_back(*c);
    }
    return out;
  }
};

/// Default formal degree symbols d1..dr.
inline VarTable default_degree_symbols(std::size_t r) {
  VarTable names;
  for (std::size_t i = 1; i <= r; ++i) names.push_back("d" + std::to_string(i));
  return names;
}

/// Polynomial in the Picard generators (the first `rank` variables of the
/// table) with coefficients in the trailing formal degree symbols. The
/// grading is the total degree in the generators only.
///
/// Binary operations merge the symbol tails of their operands, so elements
/// built from different symbolic inputs combine freely.
class ChowElement {
 public:
  ChowElement() = default;
  ChowElement(std::size_t rank, MultiPoly poly) : rank_(rank), poly_(std::move(poly)) {
    if (poly_.nvars() < rank_) throw AlignmentError("Chow element table shorter than Picard rank");
  }

  static ChowElement one(const ToricModel& m) { return ChowElement(m.rank, MultiPoly::constant(m.gens, 1)); }
  static ChowElement zero(const ToricModel& m) { return ChowElement(m.rank, MultiPoly(m.gens)); }
  static ChowElement generator(const ToricModel& m, std::size_t i) {
    return ChowElement(m.rank, MultiPoly::variable(m.gens, i));
  }
  /// Promotes a polynomial over the generators (optionally followed by
  /// degree symbols) to a Chow element of `m`.
  static ChowElement from_poly(const ToricModel& m, const MultiPoly& p) {
    if (p.nvars() < m.rank || !std::equal(m.gens.begin(), m.gens.end(), p.vars().begin()))
      throw AlignmentError("polynomial table does not start with the model generators");
    return ChowElement(m.rank, p);
  }
  /// Degree-1 element Σ coeffs_i · G_i.
  static ChowElement from_class(const ToricModel& m, const ClassExpr& c) {
    if (c.rank() != m.rank)
      throw DomainError("class has " + std::to_string(c.rank()) + " coordinates, model rank is " +
                        std::to_string(m.rank));
    ChowElement acc = zero(m);
    for (std::size_t i = 0; i < m.rank; ++i) acc += generator(m, i).times(c.coeffs[i]);
    return acc;
  }

  std::size_t rank() const { return rank_; }
  const MultiPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  VarTable symbols() const { return VarTable(poly_.vars().begin() + static_cast<long>(rank_), poly_.vars().end()); }

  /// Picard degree of a term.
  std::uint32_t picard_degree(const Exponents& e) const {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < rank_; ++i) d += e[i];
    return d;
  }
  /// Common Picard degree of all terms; nullopt when mixed or zero.
  std::optional<std::uint32_t> pure_degree() const {
    std::optional<std::uint32_t> d;
    for (const auto& [e, c] : poly_.terms()) {
      auto k = picard_degree(e);
      if (d && *d != k) return std::nullopt;
      d = k;
    }
    return d;
  }
  ChowElement homogeneous_part(std::uint32_t degree) const {
    MultiPoly r = poly_.zero_like();
    for (const auto& [e, c] : poly_.terms())
      if (picard_degree(e) == degree) r.add_term(e, c);
    return ChowElement(rank_, std::move(r));
  }

  /// Multiplies by a scalar expression (constant or polynomial in symbols).
  ChowElement times(const ScalarExpr& s) const {
    auto table = merge_tables(poly_.vars(), s.vars());
    return ChowElement(rank_, poly_.embed(table) * s.embed(table));
  }
  ChowElement scaled(const Rational& s) const { return ChowElement(rank_, poly_.scaled(s)); }

  ChowElement pow(unsigned k) const { return ChowElement(rank_, poly_.pow(k)); }

  ChowElement operator-() const { return ChowElement(rank_, -poly_); }
  ChowElement& operator+=(const ChowElement& o) {
    auto [a, b] = unify(o);
    poly_ = a + b;
    return *this;
  }
  ChowElement& operator-=(const ChowElement& o) {
    auto [a, b] = unify(o);
    poly_ = a - b;
    return *this;
  }
  friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
  friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
  friend ChowElement operator*(const ChowElement& a, const ChowElement& b) {
    auto [x, y] = a.unify(b);
    return ChowElement(a.rank_, x * y);
  }

  friend bool operator==(const ChowElement& a, const ChowElement& b) {
    if (a.rank_ != b.rank_) return false;
    auto [x, y] = a.unify(b);
    return x == y;
  }

 private:
  std::pair<MultiPoly, MultiPoly> unify(const ChowElement& o) const {
    if (o.rank_ != rank_) throw AlignmentError("Chow elements of different Picard rank");
    if (!std::equal(poly_.vars().begin(), poly_.vars().begin() + static_cast<long>(rank_),
                    o.poly_.vars().begin()))
      throw AlignmentError("Chow elements over different generators");
    return align(poly_, o.poly_);
  }

  std::size_t rank_ = 0;
  MultiPoly poly_;
};

/// e_j(xs): the j-th elementary symmetric polynomial, e_0 = 1.
template <class T>
T elementary_symmetric(std::span<const T> xs, unsigned j, const T& one) {
  T zero = one - one;
  std::vector<T> e(j + 1, zero);
  e[0] = one;
  for (const auto& x : xs)
    for (unsigned k = j; k >= 1; --k) e[k] = e[k] + x * e[k - 1];
  return e[j];
}

/// Complete homogeneous symmetric polynomial (the "Wronski" function):
/// W_j(xs) = Σ_{i1+…+im=j} x1^i1⋯xm^im, W_0 = 1.
template <class T>
T complete_homogeneous(std::span<const T> xs, unsigned j, const T& one) {
  T zero = one - one;
  std::vector<T> h(j + 1, zero);
  h[0] = one;
  for (const auto& x : xs)
    for (unsigned k = 1; k <= j; ++k) h[k] = h[k] + x * h[k - 1];
  return h[j];
}

/// Σ_i coeffs_i · h_i in the Picard basis.
inline ClassExpr class_of_divisor_coeffs(const ToricModel& m, std::span<const ScalarExpr> coeffs) {
  if (!m.divisor_classes) throw UnsupportedModel("model '" + m.name + "' has no divisor classes");
  if (coeffs.size() != m.num_rays())
    throw DomainError("expected " + std::to_string(m.num_rays()) + " divisor coefficients, got " +
                      std::to_string(coeffs.size()));
  ClassExpr out = ClassExpr::zero(m.rank);
  for (std::size_t g = 0; g < m.rank; ++g) {
    ScalarExpr acc;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      auto w = (*m.divisor_classes)[i][g];
      if (w == 0) continue;
      auto [a, b] = align(acc, coeffs[i]);
      acc = a + b.scaled(Rational(static_cast<long>(w)));
    }
    out.coeffs[g] = acc;
  }
  return out;
}

/// The classes h_i = [D_i] as degree-1 Chow elements.
inline std::vector<ChowElement> divisor_elements(const ToricModel& m) {
  if (!m.divisor_classes) throw UnsupportedModel("model '" + m.name + "' has no divisor classes");
  std::vector<ChowElement> out;
  for (const auto& h : *m.divisor_classes) out.push_back(ChowElement::from_class(m, ClassExpr::integers(h)));
  return out;
}

/// C_j(h): the j-th elementary symmetric polynomial in h_1..h_{n+r}.
inline ChowElement elementary_symmetric_classes(const ToricModel& m, unsigned j) {
  if (j > m.dim) throw DomainError("Chern degree " + std::to_string(j) + " exceeds dimension");
  auto hs = divisor_elements(m);
  return elementary_symmetric<ChowElement>(hs, j, ChowElement::one(m));
}

/// c_j of the tangent sheaf: the override when present, else C_j(h).
inline ChowElement chern_class(const ToricModel& m, unsigned j) {
  if (j > m.dim) throw DomainError("Chern degree " + std::to_string(j) + " exceeds dimension");
  if (j == 0) return ChowElement::one(m);
  if (auto it = m.chern_override.find(j); it != m.chern_override.end())
    return ChowElement::from_poly(m, it->second);
  if (!m.divisor_classes)
    throw UnsupportedModel("model '" + m.name + "' has no Chern class of degree " + std::to_string(j));
  return elementary_symmetric_classes(m, j);
}

/// W_j of a list of degree-1 classes.
inline ChowElement wronski_classes(const ToricModel& m, std::span<const ChowElement> classes, unsigned j) {
  for (const auto& c : classes) {
    auto d = c.pure_degree();
    if (!c.is_zero() && (!d || *d != 1)) throw DomainError("Wronski inputs must be degree-1 classes");
  }
  return complete_homogeneous<ChowElement>(classes, j, ChowElement::one(m));
}

/// Orbifold integral: pairs the Picard-degree-`dim` part of `elem` with the
/// intersection tensor. Other degrees contribute zero. The result lives over
/// the element's degree-symbol table.
inline ScalarExpr integrate(const ToricModel& m, const ChowElement& elem) {
  if (elem.rank() != m.rank) throw AlignmentError("element rank does not match model");
  MultiPoly out(elem.symbols());
  const std::size_t r = m.rank;
  Exponents key(r), rest(out.nvars());
  for (const auto& [e, c] : elem.poly().terms()) {
    if (elem.picard_degree(e) != m.dim) continue;
    std::copy(e.begin(), e.begin() + static_cast<long>(r), key.begin());
    auto it = m.tensor.find(key);
    if (it == m.tensor.end()) continue;
    std::copy(e.begin() + static_cast<long>(r), e.end(), rest.begin());
    out.add_term(rest, c * it->second);
  }
  return out;
}

/// All exponent vectors of length `r` with entries summing to `degree`.
inline std::vector<Exponents> monomials_of_degree(std::size_t r, std::uint32_t degree) {
  std::vector<Exponents> out;
  Exponents e(r, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i + 1 == r) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (std::uint32_t k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (r == 0) {
    if (degree == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

/// Validates every ToricModel invariant; throws ValidationError naming the
/// violated one.
inline void validate_model(const ToricModel& m) {
  if (m.dim == 0) throw ValidationError("positive dimension", "dim must be >= 1");
  if (m.rank == 0) throw ValidationError("positive rank", "rank must be >= 1");
  if (m.gens.size() != m.rank)
    throw ValidationError("generator count", "expected " + std::to_string(m.rank) + " generator names");
  std::set<std::string> seen(m.gens.begin(), m.gens.end());
  if (seen.size() != m.gens.size()) throw ValidationError("distinct generators", "duplicate generator name");

  if (m.divisor_classes) {
    if (m.divisor_classes->size() != m.num_rays())
      throw ValidationError("divisor class count", "expected dim+rank = " + std::to_string(m.num_rays()) +
                                                       " divisor classes, got " +
                                                       std::to_string(m.divisor_classes->size()));
    for (const auto& h : *m.divisor_classes)
      if (h.size() != m.rank) throw ValidationError("divisor class length", "each class needs rank entries");
  }
  bool full_override = true;
  for (unsigned j = 1; j <= m.dim; ++j) full_override = full_override && m.chern_override.count(j);
  if (!m.divisor_classes && !full_override)
    throw ValidationError("chern route", "need divisor classes or chern overrides for every degree 1..dim");

  if (m.tensor.empty()) throw ValidationError("tensor present", "at least one tensor entry is required");
  for (const auto& [key, val] : m.tensor) {
    if (key.size() != m.rank) throw ValidationError("tensor key length", "tensor keys need rank exponents");
    if (total_degree(key) != m.dim)
      throw ValidationError("tensor key degree", "tensor key of total degree " +
                                                     std::to_string(total_degree(key)) + " in dimension " +
                                                     std::to_string(m.dim));
  }

  for (const auto& [j, p] : m.chern_override) {
    if (j > m.dim) throw ValidationError("chern degree range", "chern degree " + std::to_string(j) + " > dim");
    if (p.vars() != m.gens) throw ValidationError("chern variables", "chern classes must be over the generators");
    for (const auto& [e, c] : p.terms())
      if (total_degree(e) != j)
        throw ValidationError("chern homogeneity", "chern " + std::to_string(j) + " has a term of degree " +
                                                       std::to_string(total_degree(e)));
  }

  if (m.divisor_classes) {
    for (const auto& [j, p] : m.chern_override) {
      ChowElement diff = ChowElement::from_poly(m, p) - elementary_symmetric_classes(m, j);
      for (const auto& mono : monomials_of_degree(m.rank, m.dim - j)) {
        MultiPoly mp(m.gens);
        mp.add_term(mono, Rational(1));
        if (!integrate(m, diff * ChowElement::from_poly(m, mp)).is_zero())
          throw ValidationError("chern routes agree",
                                "chern " + std::to_string(j) + " override disagrees with C_j(h)");
      }
    }
  }

  for (const auto& row : m.radial)
    if (row.size() != m.num_rays()) throw ValidationError("radial length", "radial rows need dim+rank entries");
  if (!m.coords.empty()) {
    if (m.coords.size() != m.num_rays())
      throw ValidationError("coordinate count", "expected dim+rank coordinate names");
    std::set<std::string> cs(m.coords.begin(), m.coords.end());
    if (cs.size() != m.coords.size()) throw ValidationError("distinct coordinates", "duplicate coordinate name");
  }
}

}  // namespace toricfol
