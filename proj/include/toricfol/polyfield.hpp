#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricfol/chow.hpp"
#include "toricfol/poly_parser.hpp"

namespace toricfol {

using ModelPtr = std::shared_ptr<const ToricModel>;

/// Homogeneous coordinate names: the model's aliases, or z0..z{n+r-1}.
inline VarTable coordinate_table(const ToricModel& m) {
  if (!m.coords.empty()) return m.coords;
  VarTable t;
  for (std::size_t i = 0; i < m.num_rays(); ++i) t.push_back("z" + std::to_string(i));
  return t;
}

/// Accepts `z<i>` (0-based) as well as the model's coordinate aliases.
inline VarResolver coordinate_resolver(const ToricModel& m) {
  VarTable table = coordinate_table(m);
  const std::size_t count = m.num_rays();
  return [table, count](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table[i] == name) return i;
    if (name.size() >= 2 && name[0] == 'z' && name.find_first_not_of("0123456789", 1) == std::string_view::npos) {
      auto idx = std::stoul(std::string(name.substr(1)));
      if (idx < count) return idx;
    }
    return std::nullopt;
  };
}

/// Class-group degree of a polynomial: any (zero polynomial), homogeneous
/// with a common degree, or mixed.
struct QuasiDegree {
  enum class Status { any, homogeneous, mixed };
  Status status = Status::any;
  PicardVector degree;

  bool is_any() const { return status == Status::any; }
  bool is_homogeneous() const { return status == Status::homogeneous; }
  bool is_mixed() const { return status == Status::mixed; }
};

inline PicardVector monomial_degree(const ToricModel& m, const Exponents& e) {
  if (!m.divisor_classes) throw UnsupportedModel("model '" + m.name + "' has no coordinate grading");
  PicardVector deg(m.rank, 0);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t g = 0; g < m.rank; ++g) deg[g] += static_cast<std::int64_t>(e[i]) * (*m.divisor_classes)[i][g];
  return deg;
}

inline QuasiDegree check_quasi_homogeneous(const ToricModel& m, const MultiPoly& p) {
  QuasiDegree q;
  for (const auto& [e, c] : p.terms()) {
    auto d = monomial_degree(m, e);
    if (q.is_any()) {
      q.status = QuasiDegree::Status::homogeneous;
      q.degree = d;
    } else if (d != q.degree) {
      return {QuasiDegree::Status::mixed, {}};
    }
  }
  return q;
}

/// A polynomial in the homogeneous coordinates of its model.
struct GradedPoly {
  ModelPtr model;
  MultiPoly poly;

  QuasiDegree degree() const { return check_quasi_homogeneous(*model, poly); }
};

inline GradedPoly parse_graded(const ModelPtr& m, std::string_view text) {
  return {m, parse_polynomial(text, coordinate_table(*m), coordinate_resolver(*m))};
}

namespace detail {

inline void check_components(const ToricModel& m, const std::vector<MultiPoly>& cs) {
  if (cs.size() != m.num_rays())
    throw DomainError("expected " + std::to_string(m.num_rays()) + " components, got " + std::to_string(cs.size()));
  auto table = coordinate_table(m);
  for (const auto& c : cs)
    if (c.vars() != table) throw AlignmentError("component is not over the model coordinates");
}

// Shared degree bookkeeping: deg(P_i) = d + shift·h_i for every nonzero P_i.
inline QuasiDegree component_degree(const ToricModel& m, const std::vector<MultiPoly>& cs, int shift) {
  QuasiDegree q;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto qi = check_quasi_homogeneous(m, cs[i]);
    if (qi.is_any()) continue;
    if (qi.is_mixed()) return {QuasiDegree::Status::mixed, {}};
    for (std::size_t g = 0; g < m.rank; ++g) qi.degree[g] -= shift * (*m.divisor_classes)[i][g];
    if (q.is_any()) q = qi;
    else if (q.degree != qi.degree) return {QuasiDegree::Status::mixed, {}};
  }
  return q;
}

}  // namespace detail

/// X = Σ P_i ∂/∂z_i.
struct VectorFieldExpr {
  ModelPtr model;
  std::vector<MultiPoly> components;

  /// X(f) = Σ P_i ∂f/∂z_i.
  MultiPoly apply(const MultiPoly& f) const {
    detail::check_components(*model, components);
    MultiPoly out = f.zero_like();
    for (std::size_t i = 0; i < components.size(); ++i) out += components[i] * f.derivative(i);
    return out;
  }
  /// Induced degree d with deg(P_i) = d + h_i.
  QuasiDegree degree() const { return detail::component_degree(*model, components, 1); }
};

/// ω = Σ P_i dz_i.
struct OneFormExpr {
  ModelPtr model;
  std::vector<MultiPoly> components;

  /// i_X ω = Σ X_i·P_i.
  MultiPoly contract(const VectorFieldExpr& x) const {
    detail::check_components(*model, components);
    detail::check_components(*model, x.components);
    MultiPoly out(coordinate_table(*model));
    for (std::size_t i = 0; i < components.size(); ++i) out += x.components[i] * components[i];
    return out;
  }
  /// Degree d with deg(P_i) = d − h_i.
  QuasiDegree degree() const { return detail::component_degree(*model, components, -1); }
};

inline VectorFieldExpr parse_vector_field(const ModelPtr& m, std::string_view text) {
  VectorFieldExpr x{m, {}};
  for (const auto& part : split_top_level(text)) x.components.push_back(parse_graded(m, part).poly);
  detail::check_components(*m, x.components);
  return x;
}

inline OneFormExpr parse_one_form(const ModelPtr& m, std::string_view text) {
  OneFormExpr w{m, {}};
  for (const auto& part : split_top_level(text)) w.components.push_back(parse_graded(m, part).poly);
  detail::check_components(*m, w.components);
  return w;
}

/// The radial fields Σ_i w_i z_i ∂/∂z_i, one per row of `model.radial`.
inline std::vector<VectorFieldExpr> radial_fields(const ModelPtr& m) {
  if (m->radial.empty()) throw UnsupportedModel("model '" + m->name + "' has no radial data");
  auto table = coordinate_table(*m);
  std::vector<VectorFieldExpr> out;
  for (const auto& row : m->radial) {
    VectorFieldExpr x{m, {}};
    for (std::size_t i = 0; i < row.size(); ++i)
      x.components.push_back(MultiPoly::variable(table, i).scaled(Rational(static_cast<long>(row[i]))));
    out.push_back(std::move(x));
  }
  return out;
}

/// ω descends to the quotient iff i_R ω = 0 for every radial field R.
inline bool check_descends(const OneFormExpr& w) {
  for (const auto& r : radial_fields(w.model))
    if (!w.contract(r).is_zero()) return false;
  return true;
}

struct InvarianceResult {
  bool invariant = false;
  std::optional<MultiPoly> cofactor;
};

/// {f = 0} is X-invariant iff X(f) = g·f; returns g when it exists.
inline InvarianceResult check_invariant_hypersurface(const VectorFieldExpr& x, const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("hypersurface equation is zero");
  auto [q, r] = divide(x.apply(f), f);
  if (!r.is_zero()) return {};
  return {true, q};
}

/// Frobenius condition ω ∧ dω = 0, expanded coefficient by coefficient.
inline bool check_integrable(const OneFormExpr& w) {
  const auto& p = w.components;
  detail::check_components(*w.model, p);
  if (p.size() > 6) throw DomainError("integrability check supports at most 6 coordinates");
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        auto c = p[i] * (p[k].derivative(j) - p[j].derivative(k)) + p[j] * (p[i].derivative(k) - p[k].derivative(i)) +
                 p[k] * (p[j].derivative(i) - p[i].derivative(j));
        if (!c.is_zero()) return false;
      }
  return true;
}

}  // namespace toricfol
