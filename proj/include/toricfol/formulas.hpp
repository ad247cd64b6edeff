#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricfol/catalog.hpp"
#include "toricfol/chow.hpp"

namespace toricfol {

/// Sections of T(d) (foliation) versus Ω¹(d) (distribution).
enum class Kind { foliation, distribution };

inline Kind parse_kind(std::string_view s) {
  if (s == "foliation") return Kind::foliation;
  if (s == "distribution") return Kind::distribution;
  throw ParseError("unknown kind '" + std::string(s) + "' (expected foliation or distribution)");
}

inline std::string to_string(Kind k) { return k == Kind::foliation ? "foliation" : "distribution"; }

/// Non-fatal findings collected while evaluating a formula.
struct Diagnostics {
  std::vector<std::string> warnings;
};

namespace detail {

inline Rational sign_pow(unsigned k) { return Rational(k % 2 == 0 ? 1 : -1); }

inline void warn(Diagnostics* diag, std::string msg) {
  if (diag) diag->warnings.push_back(std::move(msg));
}

inline std::vector<ChowElement> powers(const ChowElement& x, unsigned upto, const ChowElement& one) {
  std::vector<ChowElement> out{one};
  for (unsigned k = 1; k <= upto; ++k) out.push_back(out.back() * x);
  return out;
}

inline std::vector<ChowElement> chern_classes(const ToricModel& m) {
  std::vector<ChowElement> out;
  for (unsigned j = 0; j <= m.dim; ++j) out.push_back(chern_class(m, j));
  return out;
}

inline ChowElement product_of(const ToricModel& m, const std::vector<ChowElement>& xs) {
  ChowElement acc = ChowElement::one(m);
  for (const auto& x : xs) acc = acc * x;
  return acc;
}

inline std::vector<ChowElement> elements_of(const ToricModel& m, const std::vector<ClassExpr>& classes) {
  std::vector<ChowElement> out;
  for (const auto& c : classes) out.push_back(ChowElement::from_class(m, c));
  return out;
}

inline Rational weight_chern(const std::vector<Rational>& w, unsigned j) {
  return elementary_symmetric<Rational>(w, j, Rational(1));
}

inline Rational wronski(const std::vector<Rational>& a, unsigned j) {
  return complete_homogeneous<Rational>(a, j, Rational(1));
}

inline std::vector<Rational> to_rationals(const std::vector<std::int64_t>& v) {
  std::vector<Rational> out;
  for (auto x : v) out.push_back(Rational(static_cast<long>(x)));
  return out;
}

inline void check_weights(const std::vector<std::int64_t>& w, const std::vector<std::int64_t>& a) {
  if (w.size() < 2) throw DomainError("need at least two weights");
  for (auto x : w)
    if (x <= 0) throw DomainError("weights must be positive");
  for (auto x : a)
    if (x <= 0) throw DomainError("complete-intersection degrees must be positive");
}

inline Rational orbifold_degree(const std::vector<std::int64_t>& w, const std::vector<std::int64_t>& a) {
  Rational num(1), den(1);
  for (auto x : a) num = num * Rational(static_cast<long>(x));
  for (auto x : w) den = den * Rational(static_cast<long>(x));
  return num / den;
}

inline ScalarExpr sum_scalars(const std::vector<ScalarExpr>& xs) {
  ScalarExpr acc;
  for (const auto& x : xs) {
    auto [p, q] = align(acc, x);
    acc = p + q;
  }
  return acc;
}

}  // namespace detail

/// Number of singular points, with multiplicity, of a foliation of degree d:
/// Σ_{j=0}^{n} ∫ C_j(h)·d^{n-j}.
inline ScalarExpr foliation_sing_count(const ToricModel& m, const ClassExpr& degree) {
  auto one = ChowElement::one(m);
  auto d = ChowElement::from_class(m, degree);
  auto dp = detail::powers(d, m.dim, one);
  ChowElement total = ChowElement::zero(m);
  for (unsigned j = 0; j <= m.dim; ++j) total += chern_class(m, j) * dp[m.dim - j];
  return integrate(m, total);
}

/// Σ_i coeffs_i·h_i as a degree class (divisor-coefficient parameterization).
inline ClassExpr degree_from_divisor_coeffs(const ToricModel& m, const std::vector<std::int64_t>& coeffs) {
  std::vector<ScalarExpr> cs;
  for (auto c : coeffs) cs.push_back(MultiPoly::constant(Rational(static_cast<long>(c))));
  return class_of_divisor_coeffs(m, cs);
}

struct GcdVerdict {
  ScalarExpr chi;
  BigInt gcd;
  bool forces_singular = false;
};

/// A foliation of degree Σ k_i h_i on a smooth model must be singular when
/// gcd(k_i) does not divide χ = ∫C_n(h).
inline GcdVerdict gcd_obstruction(const ToricModel& m, const std::vector<std::int64_t>& coeffs) {
  if (!m.smooth) throw DomainError("gcd obstruction needs a smooth model; '" + m.name + "' is an orbifold");
  if (coeffs.size() != m.num_rays())
    throw DomainError("expected " + std::to_string(m.num_rays()) + " divisor coefficients");
  GcdVerdict v;
  v.chi = integrate(m, chern_class(m, m.dim));
  auto chi = v.chi.as_constant();
  if (!chi || !chi->is_integer()) throw DomainError("Euler number " + canonical_string(v.chi) + " is not an integer");
  v.gcd = 0;
  for (auto c : coeffs) v.gcd = gcd(v.gcd, big(c));
  v.forces_singular = !divides(v.gcd, chi->num());
  return v;
}

/// Singular points of the restriction of a degree-d foliation to an
/// invariant smooth hypersurface of class a.
inline ScalarExpr restricted_sing_count(const ToricModel& m, const ClassExpr& degree, const ClassExpr& hyp) {
  auto one = ChowElement::one(m);
  auto dp = detail::powers(ChowElement::from_class(m, degree), m.dim, one);
  auto ap = detail::powers(ChowElement::from_class(m, hyp), m.dim + 1, one);
  auto cs = detail::chern_classes(m);
  ChowElement total = ChowElement::zero(m);
  for (unsigned j = 0; j < m.dim; ++j)
    for (unsigned k = 0; k <= j; ++k)
      total += (cs[j - k] * ap[k + 1] * dp[m.dim - 1 - j]).scaled(detail::sign_pow(k));
  return integrate(m, total);
}

/// Orbifold Euler number of a smooth hypersurface of class a.
inline ScalarExpr hypersurface_euler(const ToricModel& m, const ClassExpr& hyp) {
  auto one = ChowElement::one(m);
  auto ap = detail::powers(ChowElement::from_class(m, hyp), m.dim, one);
  auto cs = detail::chern_classes(m);
  ChowElement total = ChowElement::zero(m);
  for (unsigned k = 0; k < m.dim; ++k) total += (cs[m.dim - 1 - k] * ap[k + 1]).scaled(detail::sign_pow(k));
  return integrate(m, total);
}

/// Singular points of a degree-d foliation on the complement of an
/// invariant smooth hypersurface of class a.
inline ScalarExpr complement_sing_count(const ToricModel& m, const ClassExpr& degree, const ClassExpr& hyp) {
  auto one = ChowElement::one(m);
  auto dp = detail::powers(ChowElement::from_class(m, degree), m.dim, one);
  auto ap = detail::powers(ChowElement::from_class(m, hyp), m.dim, one);
  auto cs = detail::chern_classes(m);
  ChowElement total = ChowElement::zero(m);
  for (unsigned j = 0; j <= m.dim; ++j)
    for (unsigned i = 0; i + j <= m.dim; ++i)
      total += (cs[m.dim - j - i] * ap[i] * dp[j]).scaled(detail::sign_pow(i));
  return integrate(m, total);
}

inline ScalarExpr complement_euler(const ToricModel& m, const ClassExpr& hyp) {
  auto one = ChowElement::one(m);
  auto ap = detail::powers(ChowElement::from_class(m, hyp), m.dim, one);
  auto cs = detail::chern_classes(m);
  ChowElement total = ChowElement::zero(m);
  for (unsigned i = 0; i <= m.dim; ++i) total += (cs[m.dim - i] * ap[i]).scaled(detail::sign_pow(i));
  return integrate(m, total);
}

/// The weighted complete-intersection count split into its pieces:
/// total = prefactor · Σ terms, prefactor = Πa/Πω, and terms[i] is the
/// i-th summand (sign for the kind included).
struct WciBreakdown {
  Rational prefactor;
  std::vector<ScalarExpr> terms;
  ScalarExpr total;
  std::vector<std::string> warnings;
};

inline WciBreakdown wci_breakdown(const std::vector<std::int64_t>& weights, const std::vector<std::int64_t>& classes,
                                  const ScalarExpr& degree, Kind kind) {
  detail::check_weights(weights, classes);
  const auto n = static_cast<unsigned>(weights.size() - 1);
  const auto m = static_cast<unsigned>(classes.size());
  if (m >= n) throw DomainError("complete intersection of codimension " + std::to_string(m) + " in dimension " +
                                std::to_string(n));
  WciBreakdown out;
  if (!is_well_formed(weights)) out.warnings.push_back("weights are not pairwise coprime (not well formed)");
  out.prefactor = detail::orbifold_degree(weights, classes);
  auto w = detail::to_rationals(weights);
  auto a = detail::to_rationals(classes);
  for (unsigned i = 0; i <= n - m; ++i) {
    Rational coeff(0);
    for (unsigned j = 0; j <= i; ++j)
      coeff = coeff + detail::sign_pow(j) * detail::weight_chern(w, i - j) * detail::wronski(a, j);
    if (kind == Kind::distribution) coeff = coeff * detail::sign_pow(i);
    out.terms.push_back(degree.pow(n - m - i).scaled(coeff));
  }
  out.total = detail::sum_scalars(out.terms).scaled(out.prefactor);
  return out;
}

/// Singular points of a foliation or distribution of degree d on a
/// quasi-smooth complete intersection V(a_1..a_m) ⊂ P(ω).
inline ScalarExpr wci_sing_count(const std::vector<std::int64_t>& weights, const std::vector<std::int64_t>& classes,
                                 const ScalarExpr& degree, Kind kind) {
  return wci_breakdown(weights, classes, degree, kind).total;
}

/// Sum of Baum-Bott indices on a weighted complete-intersection surface:
/// (Πa/Πω)·(d + C_1(ω) − W_1(a))².
inline ScalarExpr baum_bott_sum(const std::vector<std::int64_t>& weights, const std::vector<std::int64_t>& classes,
                                const ScalarExpr& degree) {
  detail::check_weights(weights, classes);
  const auto n = weights.size() - 1;
  if (classes.size() + 2 != n)
    throw DomainError("Baum-Bott sum needs a surface: " + std::to_string(n - 2) + " classes, got " +
                      std::to_string(classes.size()));
  auto w = detail::to_rationals(weights);
  auto a = detail::to_rationals(classes);
  auto shift = detail::weight_chern(w, 1) - detail::wronski(a, 1);
  auto base = degree + degree.constant_like(shift);
  return base.pow(2).scaled(detail::orbifold_degree(weights, classes));
}

/// i_S = Σa − Σω; the complete intersection is of general type when positive.
inline ScalarExpr general_type_index(const std::vector<std::int64_t>& weights,
                                     const std::vector<std::int64_t>& classes) {
  std::int64_t s = 0;
  for (auto x : classes) s += x;
  for (auto x : weights) s -= x;
  return MultiPoly::constant(Rational(static_cast<long>(s)));
}

struct AlphaInvariant {
  ScalarExpr alpha;
  ScalarExpr chi;

  /// d | alpha (0 divides only 0).
  bool divides(std::int64_t d) const {
    auto a = alpha.as_constant();
    return a && a->is_integer() && toricfol::divides(big(d), a->num());
  }
};

/// alpha(ω, a) = Σ_{j=0}^{n-m} (−1)^j C_{n-m-j}(ω)·W_j(a), with
/// χ(V) = (Πa/Πω)·alpha.
inline AlphaInvariant alpha_invariant(const std::vector<std::int64_t>& weights,
                                      const std::vector<std::int64_t>& classes) {
  detail::check_weights(weights, classes);
  const auto n = static_cast<unsigned>(weights.size() - 1);
  const auto m = static_cast<unsigned>(classes.size());
  if (m == 0) throw DomainError("alpha invariant needs at least one hypersurface class");
  if (m >= n) throw DomainError("alpha invariant needs m < n");
  auto w = detail::to_rationals(weights);
  auto a = detail::to_rationals(classes);
  Rational alpha(0);
  for (unsigned j = 0; j <= n - m; ++j)
    alpha = alpha + detail::sign_pow(j) * detail::weight_chern(w, n - m - j) * detail::wronski(a, j);
  return {MultiPoly::constant(alpha), MultiPoly::constant(alpha * detail::orbifold_degree(weights, classes))};
}

namespace detail {

inline void check_ci(const ToricModel& m, const std::vector<ClassExpr>& classes, Diagnostics* diag) {
  if (classes.size() >= m.dim)
    throw DomainError("complete intersection of codimension " + std::to_string(classes.size()) +
                      " in dimension " + std::to_string(m.dim));
  if (!m.smooth) warn(diag, "model '" + m.name + "' is not smooth; complete-intersection count assumes smoothness");
}

}  // namespace detail

/// Singular points of a foliation or distribution of degree d on a smooth
/// complete intersection V(a_1..a_m), integrated against the Poincaré dual
/// Πa_i in the ambient model.
inline ScalarExpr ci_sing_count(const ToricModel& m, const std::vector<ClassExpr>& classes,
                                const ClassExpr& degree, Kind kind, Diagnostics* diag = nullptr) {
  detail::check_ci(m, classes, diag);
  const auto k = static_cast<unsigned>(m.dim - classes.size());
  auto one = ChowElement::one(m);
  auto as = detail::elements_of(m, classes);
  auto dual = detail::product_of(m, as);
  auto dp = detail::powers(ChowElement::from_class(m, degree), k, one);
  auto cs = detail::chern_classes(m);
  std::vector<ChowElement> ws;
  for (unsigned j = 0; j <= k; ++j) ws.push_back(wronski_classes(m, as, j));
  ChowElement total = ChowElement::zero(m);
  for (unsigned i = 0; i <= k; ++i) {
    ChowElement inner = ChowElement::zero(m);
    for (unsigned j = 0; j <= i; ++j) inner += (ws[j] * cs[i - j]).scaled(detail::sign_pow(j));
    auto term = inner * dp[k - i];
    if (kind == Kind::distribution) term = term.scaled(detail::sign_pow(i));
    total += term;
  }
  return integrate(m, total * dual);
}

/// χ(V) = Σ_{j+k=n-m} (−1)^j ∫ W_j(a)·C_k(h)·Πa.
inline ScalarExpr ci_euler(const ToricModel& m, const std::vector<ClassExpr>& classes, Diagnostics* diag = nullptr) {
  detail::check_ci(m, classes, diag);
  const auto k = static_cast<unsigned>(m.dim - classes.size());
  auto as = detail::elements_of(m, classes);
  ChowElement total = ChowElement::zero(m);
  for (unsigned j = 0; j <= k; ++j)
    total += (wronski_classes(m, as, j) * chern_class(m, k - j)).scaled(detail::sign_pow(j));
  return integrate(m, total * detail::product_of(m, as));
}

/// ∫ h^{n-m}·Πa for a degree-1 class h.
inline ScalarExpr multidegree(const ToricModel& m, const std::vector<ClassExpr>& classes, const ClassExpr& h) {
  if (classes.size() > m.dim) throw DomainError("more classes than the dimension");
  auto as = detail::elements_of(m, classes);
  auto hk = ChowElement::from_class(m, h).pow(static_cast<unsigned>(m.dim - classes.size()));
  return integrate(m, hk * detail::product_of(m, as));
}

/// k-degree of V(a) with respect to the divisor class h_k (0-based k).
inline ScalarExpr multidegree_divisor(const ToricModel& m, const std::vector<ClassExpr>& classes, std::size_t k) {
  if (!m.divisor_classes) throw UnsupportedModel("model '" + m.name + "' has no divisor classes");
  if (k >= m.num_rays()) throw DomainError("divisor index " + std::to_string(k) + " out of range");
  return multidegree(m, classes, ClassExpr::integers((*m.divisor_classes)[k]));
}

/// k-degree of V(a) with respect to the k-th Picard generator (0-based k).
inline ScalarExpr multidegree_generator(const ToricModel& m, const std::vector<ClassExpr>& classes, std::size_t k) {
  if (k >= m.rank) throw DomainError("generator index " + std::to_string(k) + " out of range");
  std::vector<std::int64_t> e(m.rank, 0);
  e[k] = 1;
  return multidegree(m, classes, ClassExpr::integers(e));
}

struct InequalityVerdict {
  ScalarExpr lhs;
  ScalarExpr rhs;
  ScalarExpr slack;
  // Present only when both sides are numeric.
  std::optional<bool> holds;
  std::vector<std::string> warnings;
};

namespace detail {

inline InequalityVerdict verdict(ScalarExpr lhs, ScalarExpr rhs) {
  InequalityVerdict v;
  auto [l, r] = align(lhs, rhs);
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  v.slack = r - l;
  if (auto s = v.slack.as_constant(); s && v.slack.is_constant()) v.holds = s->sign() >= 0;
  return v;
}

inline bool all_ones(const std::vector<std::int64_t>& w) {
  return std::all_of(w.begin(), w.end(), [](auto x) { return x == 1; });
}

}  // namespace detail

/// Curve case of the Poincaré-type bound: Σa ≤ d + Σω. The strict form,
/// Σa ≤ d + n, is only offered on P^n (all weights 1).
inline InequalityVerdict poincare_wci_curve(const std::vector<std::int64_t>& weights,
                                            const std::vector<std::int64_t>& classes, const ScalarExpr& degree,
                                            bool strict = false) {
  detail::check_weights(weights, classes);
  if (classes.empty()) throw DomainError("wci-curve needs at least one class");
  if (strict && !detail::all_ones(weights)) throw DomainError("strict mode applies to P^n only");
  std::int64_t sa = 0, sw = 0;
  for (auto x : classes) sa += x;
  for (auto x : weights) sw += x;
  auto rhs = degree + degree.constant_like(Rational(static_cast<long>(sw - (strict ? 1 : 0))));
  auto v = detail::verdict(MultiPoly::constant(Rational(static_cast<long>(sa))), rhs);
  if (classes.size() + 2 != weights.size())
    v.warnings.push_back("a curve needs n-1 = " + std::to_string(weights.size() - 2) + " classes, got " +
                         std::to_string(classes.size()));
  return v;
}

/// General bound Σa + dim(V) − 1 ≤ d + Σω for V = V(a_1..a_m) ⊂ P(ω).
inline InequalityVerdict poincare_wci_general(const std::vector<std::int64_t>& weights,
                                              const std::vector<std::int64_t>& classes, const ScalarExpr& degree) {
  detail::check_weights(weights, classes);
  const auto n = static_cast<std::int64_t>(weights.size() - 1);
  const auto m = static_cast<std::int64_t>(classes.size());
  if (m >= n) throw DomainError("wci-general needs m < n");
  std::int64_t sa = 0, sw = 0;
  for (auto x : classes) sa += x;
  for (auto x : weights) sw += x;
  auto rhs = degree + degree.constant_like(Rational(static_cast<long>(sw)));
  return detail::verdict(MultiPoly::constant(Rational(static_cast<long>(sa + (n - m) - 1))), rhs);
}

/// Summed multidegree bound for an invariant complete-intersection curve:
/// ∫(Σa_i)·Πa ≤ ∫(d + C_1(h))·Πa. Strict mode (rank-1 models) subtracts
/// ∫H·Πa from the right side, i.e. Σa ≤ d + n on P^n.
inline InequalityVerdict poincare_toric_curve(const ToricModel& m, const std::vector<ClassExpr>& classes,
                                              const ClassExpr& degree, bool strict = false) {
  if (classes.size() + 1 != m.dim)
    throw DomainError("toric-curve needs n-1 = " + std::to_string(m.dim - 1) + " classes");
  if (strict && m.rank != 1) throw DomainError("strict mode applies to rank-1 models only");
  auto as = detail::elements_of(m, classes);
  auto dual = detail::product_of(m, as);
  ChowElement sum = ChowElement::zero(m);
  for (const auto& a : as) sum += a;
  ChowElement right = ChowElement::from_class(m, degree) + chern_class(m, 1);
  if (strict) right -= ChowElement::generator(m, 0);
  return detail::verdict(integrate(m, sum * dual), integrate(m, right * dual));
}

/// (−1)^n (n·d1 + |a|·d2)(d2+1)^{n−1} − 2P(−d2) + 2(−1)^n with
/// P(t) = t·Σ_{i=0}^{n−2} (−1)^i C(n,i) t^{n−2−i} + (−1)^n (1−n).
/// Equals (−1)^n times the singularity count of a degree d1·L + d2·M
/// foliation on the scroll F(a).
inline ScalarExpr scroll_closed_form(const std::vector<std::int64_t>& a, const ScalarExpr& d1, const ScalarExpr& d2) {
  const auto n = static_cast<unsigned>(a.size());
  if (n <= 2) throw DomainError("scroll closed form needs n > 2");
  auto [x, y] = align(d1, d2);
  std::int64_t s = 0;
  for (auto v : a) s += v;
  const Rational sn = detail::sign_pow(n);
  auto one = x.constant_like(1);

  auto lead = (x.scaled(Rational(static_cast<long>(n))) + y.scaled(Rational(static_cast<long>(s)))) * (y + one).pow(n - 1);
  auto t = -y;
  MultiPoly inner = x.zero_like();
  BigInt binom = 1;  // C(n, i)
  for (unsigned i = 0; i + 2 <= n; ++i) {
    inner += t.pow(n - 2 - i).scaled(detail::sign_pow(i) * Rational(binom));
    binom = binom * (n - i) / (i + 1);
  }
  auto p = t * inner + one.scaled(sn * Rational(1 - static_cast<long>(n)));
  return lead.scaled(sn) - p.scaled(Rational(2)) + one.scaled(sn * Rational(2));
}

enum class SearchFamily { p111k, p1111k, scroll };

inline SearchFamily parse_search_family(std::string_view s) {
  if (s == "p111k") return SearchFamily::p111k;
  if (s == "p1111k") return SearchFamily::p1111k;
  if (s == "scroll") return SearchFamily::scroll;
  throw ParseError("unknown search family '" + std::string(s) + "'");
}

inline std::string to_string(SearchFamily f) {
  switch (f) {
    case SearchFamily::p111k: return "p111k";
    case SearchFamily::p1111k: return "p1111k";
    case SearchFamily::scroll: return "scroll";
  }
  return "?";
}

enum class Annotation { accepted, excluded_by_cohomology };

inline std::string to_string(Annotation a) {
  return a == Annotation::accepted ? "accepted" : "excluded-by-cohomology";
}

/// One zero of a family's count. `params` is (a, d, k) for the weighted
/// families and (d1, d2) for scrolls.
struct SearchSolution {
  SearchFamily family;
  std::vector<std::int64_t> params;
  Annotation annotation = Annotation::accepted;

  friend bool operator==(const SearchSolution&, const SearchSolution&) = default;
};

namespace detail {

// Distribution count on a degree-a hypersurface in P(1,..,1,k), up to the
// positive factor a/k.
inline bool weighted_hypersurface_count_vanishes(unsigned ones, std::int64_t a, std::int64_t d, std::int64_t k) {
  std::vector<std::int64_t> w(ones, 1);
  w.push_back(k);
  auto br = wci_breakdown(w, {a}, MultiPoly::constant(Rational(static_cast<long>(d))), Kind::distribution);
  return br.total.is_zero();
}

}  // namespace detail

/// Bounded enumeration of parameters for which a regular (singularity-free)
/// object is not excluded by the count. For p111k / p1111k the hypersurface
/// degree a and distribution degree d run over [1, B], the last weight k
/// over [2, B] (resp. [1, B]) with k | a. For scrolls, (d1, d2) runs over
/// [−B, B]² with `scroll_a` fixing the scroll. Results are sorted.
inline std::vector<SearchSolution> regular_search(SearchFamily family, std::int64_t bound,
                                                  const std::vector<std::int64_t>& scroll_a = {}) {
  if (bound <= 0) throw DomainError("search bound must be positive");
  std::vector<SearchSolution> out;
  switch (family) {
    case SearchFamily::p111k:
    case SearchFamily::p1111k: {
      const bool four = family == SearchFamily::p1111k;
      const std::int64_t kmin = four ? 1 : 2;
      for (std::int64_t k = kmin; k <= bound; ++k)
        for (std::int64_t a = k; a <= bound; a += k)
          for (std::int64_t d = 1; d <= bound; ++d) {
            if (!detail::weighted_hypersurface_count_vanishes(four ? 4 : 3, a, d, k)) continue;
            SearchSolution s{family, {a, d, k}, Annotation::accepted};
            if (four && a == 2 && d == 1 && k == 1) s.annotation = Annotation::excluded_by_cohomology;
            out.push_back(s);
          }
      break;
    }
    case SearchFamily::scroll: {
      auto model = scroll(scroll_a);
      auto count = foliation_sing_count(model, ClassExpr::symbolic({"d1", "d2"}));
      for (std::int64_t d1 = -bound; d1 <= bound; ++d1)
        for (std::int64_t d2 = -bound; d2 <= bound; ++d2) {
          std::vector<Rational> at{Rational(static_cast<long>(d1)), Rational(static_cast<long>(d2))};
          if (count.evaluate(at).is_zero()) out.push_back({family, {d1, d2}, Annotation::accepted});
        }
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.params < y.params; });
  return out;
}

}  // namespace toricfol
