#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "toricfol/chow.hpp"
#include "toricfol/poly_parser.hpp"

namespace toricfol {

enum class Family {
  projective,
  weighted,
  multiprojective,
  scroll,
  blowup_point,
  blowup_two_points_p3,
  blowup_line_p3,
};

/// A builtin family plus its integer parameters, written `family:p1,p2,...`
/// on the command line (e.g. `weighted:1,1,2`, `blowup_point:2`).
struct ModelSpec {
  Family family = Family::projective;
  std::vector<std::int64_t> params;

  static ModelSpec parse(std::string_view text);
  std::string str() const;
};

namespace detail {

inline const std::vector<std::pair<std::string, Family>>& family_names() {
  static const std::vector<std::pair<std::string, Family>> names = {
      {"projective", Family::projective},
      {"weighted", Family::weighted},
      {"multiprojective", Family::multiprojective},
      {"scroll", Family::scroll},
      {"blowup_point", Family::blowup_point},
      {"blowup_two_points_p3", Family::blowup_two_points_p3},
      {"blowup_line_p3", Family::blowup_line_p3},
  };
  return names;
}

inline std::string join_params(const std::vector<std::int64_t>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

inline std::string ident_params(const std::vector<std::int64_t>& v) {
  std::string out;
  for (auto x : v) out += "_" + (x < 0 ? "n" + std::to_string(-x) : std::to_string(x));
  return out;
}

inline VarTable indexed_coords(std::size_t count) {
  VarTable out;
  for (std::size_t i = 0; i < count; ++i) out.push_back("z" + std::to_string(i));
  return out;
}

// Rows of the divisor-class matrix: the weights of the radial fields.
inline std::vector<PicardVector> radial_from_classes(const std::vector<PicardVector>& classes, unsigned rank) {
  std::vector<PicardVector> rows(rank, PicardVector(classes.size()));
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (unsigned g = 0; g < rank; ++g) rows[g][i] = classes[i][g];
  return rows;
}

inline void require(bool ok, const std::string& invariant, const std::string& detail) {
  if (!ok) throw ValidationError(invariant, detail);
}

}  // namespace detail

inline std::vector<std::string> builtin_family_names() {
  std::vector<std::string> out;
  for (const auto& [n, f] : detail::family_names()) out.push_back(n);
  return out;
}

inline ModelSpec ModelSpec::parse(std::string_view text) {
  std::string s(text);
  auto colon = s.find(':');
  std::string fam = s.substr(0, colon);
  ModelSpec spec;
  bool found = false;
  for (const auto& [n, f] : detail::family_names()) {
    if (n == fam) {
      spec.family = f;
      found = true;
    }
  }
  if (!found) throw ParseError("unknown model family '" + fam + "'");
  if (colon != std::string::npos) {
    for (const auto& part : split_top_level(s.substr(colon + 1))) {
      try {
        std::size_t used = 0;
        spec.params.push_back(std::stoll(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw ParseError("bad model parameter '" + part + "' in '" + s + "'");
      }
    }
  }
  return spec;
}

inline std::string ModelSpec::str() const {
  for (const auto& [n, f] : detail::family_names())
    if (f == family) return params.empty() ? n : n + ":" + detail::join_params(params, ",");
  return "?";
}

/// P^n: one generator H, n+1 hyperplane classes, ∫H^n = 1.
inline ToricModel projective(unsigned n) {
  detail::require(n >= 1, "positive dimension", "projective space needs n >= 1");
  ToricModel m;
  m.name = "projective_" + std::to_string(n);
  m.dim = n;
  m.rank = 1;
  m.gens = {"H"};
  m.divisor_classes = std::vector<PicardVector>(n + 1, PicardVector{1});
  m.tensor[{n}] = Rational(1);
  m.smooth = true;
  m.radial = detail::radial_from_classes(*m.divisor_classes, 1);
  m.coords = detail::indexed_coords(n + 1);
  return m;
}

/// Pairwise coprimality of the weights (well-formedness).
inline bool is_well_formed(const std::vector<std::int64_t>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (std::gcd(w[i], w[j]) != 1) return false;
  return true;
}

/// P(ω_0..ω_n): classes ω_i·H and ∫H^n = 1/(ω_0⋯ω_n).
inline ToricModel weighted(const std::vector<std::int64_t>& w) {
  detail::require(w.size() >= 2, "positive dimension", "weighted projective space needs at least two weights");
  std::int64_t g = 0;
  for (auto x : w) {
    detail::require(x > 0, "positive weights", "weight " + std::to_string(x) + " is not positive");
    g = std::gcd(g, x);
  }
  detail::require(g == 1, "weights gcd 1", "gcd of weights is " + std::to_string(g));
  ToricModel m;
  auto n = static_cast<unsigned>(w.size() - 1);
  m.name = "weighted" + detail::ident_params(w);
  m.dim = n;
  m.rank = 1;
  m.gens = {"H"};
  m.divisor_classes = std::vector<PicardVector>();
  BigInt prod = 1;
  for (auto x : w) {
    m.divisor_classes->push_back({x});
    prod *= big(x);
  }
  m.tensor[{n}] = Rational(BigInt(1), prod);
  m.smooth = std::all_of(w.begin(), w.end(), [](auto x) { return x == 1; });
  m.radial = detail::radial_from_classes(*m.divisor_classes, 1);
  m.coords = detail::indexed_coords(w.size());
  if (!is_well_formed(w)) m.warnings.push_back("weights are not pairwise coprime (not well formed)");
  return m;
}

/// P^{n_1} × ⋯ × P^{n_k}: generators H1..Hk, ∫H1^{n_1}⋯Hk^{n_k} = 1.
inline ToricModel multiprojective(const std::vector<std::int64_t>& ns) {
  detail::require(!ns.empty(), "positive rank", "multiprojective space needs at least one factor");
  ToricModel m;
  m.name = "multiprojective" + detail::ident_params(ns);
  m.rank = static_cast<unsigned>(ns.size());
  m.divisor_classes = std::vector<PicardVector>();
  Exponents key;
  for (std::size_t f = 0; f < ns.size(); ++f) {
    detail::require(ns[f] >= 1, "positive dimension", "factor dimensions must be >= 1");
    m.gens.push_back("H" + std::to_string(f + 1));
    m.dim += static_cast<unsigned>(ns[f]);
    key.push_back(static_cast<std::uint32_t>(ns[f]));
    for (std::int64_t j = 0; j <= ns[f]; ++j) {
      PicardVector h(ns.size(), 0);
      h[f] = 1;
      m.divisor_classes->push_back(h);
      m.coords.push_back("z" + std::to_string(f + 1) + "_" + std::to_string(j));
    }
  }
  m.tensor[key] = Rational(1);
  m.smooth = true;
  m.radial = detail::radial_from_classes(*m.divisor_classes, m.rank);
  return m;
}

/// Rational normal scroll F(a_1..a_n) with Picard basis (L, M):
/// classes L, L, M - a_i L; L^2 = 0, L·M^{n-1} = 1, M^n = Σ a_i.
inline ToricModel scroll(const std::vector<std::int64_t>& a) {
  detail::require(!a.empty(), "positive dimension", "scroll needs at least one a_i");
  ToricModel m;
  auto n = static_cast<unsigned>(a.size());
  m.name = "scroll" + detail::ident_params(a);
  m.dim = n;
  m.rank = 2;
  m.gens = {"L", "M"};
  m.divisor_classes = std::vector<PicardVector>{{1, 0}, {1, 0}};
  m.coords = {"z1_1", "z1_2"};
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m.divisor_classes->push_back({-a[i], 1});
    m.coords.push_back("z2_" + std::to_string(i + 1));
    sum += a[i];
  }
  if (sum != 0) m.tensor[{0, n}] = Rational(static_cast<long>(sum));
  m.tensor[{1, n - 1}] = Rational(1);
  m.smooth = true;
  m.radial = detail::radial_from_classes(*m.divisor_classes, 2);
  return m;
}

/// Bl_p(P^n) with Picard basis (H, E): classes H-E (n times), H, E;
/// H^n = 1, E^n = (-1)^{n+1}, mixed monomials integrate to 0.
inline ToricModel blowup_point(unsigned n) {
  detail::require(n >= 2, "positive dimension", "blow-up of a point needs n >= 2");
  ToricModel m;
  m.name = "blowup_point_" + std::to_string(n);
  m.dim = n;
  m.rank = 2;
  m.gens = {"H", "E"};
  m.divisor_classes = std::vector<PicardVector>(n, PicardVector{1, -1});
  m.divisor_classes->push_back({1, 0});
  m.divisor_classes->push_back({0, 1});
  m.tensor[{n, 0}] = Rational(1);
  m.tensor[{0, n}] = Rational(n % 2 == 1 ? 1 : -1);
  m.smooth = true;
  m.radial = detail::radial_from_classes(*m.divisor_classes, 2);
  m.coords = detail::indexed_coords(n + 2);
  return m;
}

/// Bl_{p,q}(P^3): generators H, E1, E2 with H^3 = E_i^3 = 1 and all mixed
/// monomials zero. Chern classes are given directly.
inline ToricModel blowup_two_points_p3() {
  ToricModel m;
  m.name = "blowup_two_points_p3";
  m.dim = 3;
  m.rank = 3;
  m.gens = {"H", "E1", "E2"};
  m.tensor[{3, 0, 0}] = Rational(1);
  m.tensor[{0, 3, 0}] = Rational(1);
  m.tensor[{0, 0, 3}] = Rational(1);
  m.chern_override[1] = parse_polynomial("4*H - 2*E1 - 2*E2", m.gens);
  m.chern_override[2] = parse_polynomial("6*H^2", m.gens);
  m.chern_override[3] = parse_polynomial("8*H^3", m.gens);
  m.smooth = true;
  return m;
}

/// Bl_L(P^3): generators H, E with H^3 = 1, H^2·E = 0, H·E^2 = -1,
/// E^3 = -2. Chern classes are given directly.
inline ToricModel blowup_line_p3() {
  ToricModel m;
  m.name = "blowup_line_p3";
  m.dim = 3;
  m.rank = 2;
  m.gens = {"H", "E"};
  m.tensor[{3, 0}] = Rational(1);
  m.tensor[{1, 2}] = Rational(-1);
  m.tensor[{0, 3}] = Rational(-2);
  m.chern_override[1] = parse_polynomial("4*H - E", m.gens);
  m.chern_override[2] = parse_polynomial("7*H^2 - 4*H*E", m.gens);
  m.chern_override[3] = parse_polynomial("6*H^3", m.gens);
  m.smooth = true;
  return m;
}

inline ToricModel builtin(const ModelSpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t k) {
    if (p.size() != k)
      throw ValidationError("parameter count", spec.str() + " expects " + std::to_string(k) + " parameter(s)");
  };
  auto positive_single = [&]() {
    arity(1);
    detail::require(p[0] >= 1, "positive dimension", "dimension parameter must be positive");
    return static_cast<unsigned>(p[0]);
  };
  ToricModel m;
  switch (spec.family) {
    case Family::projective: m = projective(positive_single()); break;
    case Family::weighted: m = weighted(p); break;
    case Family::multiprojective: m = multiprojective(p); break;
    case Family::scroll: m = scroll(p); break;
    case Family::blowup_point: m = blowup_point(positive_single()); break;
    case Family::blowup_two_points_p3: arity(0); m = blowup_two_points_p3(); break;
    case Family::blowup_line_p3: arity(0); m = blowup_line_p3(); break;
  }
  validate_model(m);
  return m;
}

/// Deterministic text form of a model; `parse_model` inverts it.
inline std::string serialize_model(const ToricModel& m) {
  std::ostringstream os;
  os << "name " << m.name << "\n";
  os << "dim " << m.dim << "\n";
  os << "rank " << m.rank << "\n";
  os << "gens";
  for (const auto& g : m.gens) os << " " << g;
  os << "\n";
  os << "smooth " << (m.smooth ? "true" : "false") << "\n";
  if (m.divisor_classes) {
    for (const auto& h : *m.divisor_classes) {
      os << "divisor";
      for (auto x : h) os << " " << x;
      os << "\n";
    }
  }
  for (const auto& [key, val] : m.tensor) {
    os << "tensor";
    for (auto e : key) os << " " << e;
    os << " = " << val << "\n";
  }
  for (const auto& [j, p] : m.chern_override) os << "chern " << j << " : " << canonical_string(p) << "\n";
  for (const auto& row : m.radial) {
    os << "radial";
    for (auto x : row) os << " " << x;
    os << "\n";
  }
  if (!m.coords.empty()) {
    os << "coords";
    for (const auto& c : m.coords) os << " " << c;
    os << "\n";
  }
  return os.str();
}

/// Parses the line-oriented model format (see `serialize_model`). Syntax
/// problems raise ParseError with the line number; invariant violations
/// raise ValidationError.
inline ToricModel parse_model(std::string_view text) {
  ToricModel m;
  bool have_name = false, have_dim = false, have_rank = false, have_gens = false, have_smooth = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;

  auto parse_int = [&](const std::string& tok) -> std::int64_t {
    try {
      std::size_t used = 0;
      auto v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + tok + "'", lineno);
    }
  };
  auto need_rank = [&](const std::string& kw) {
    if (!have_rank) throw ParseError("'" + kw + "' before 'rank'", lineno);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);

    if (kw == "name") {
      if (toks.size() != 1) throw ParseError("'name' takes one identifier", lineno);
      if (have_name) throw ParseError("duplicate 'name'", lineno);
      m.name = toks[0];
      have_name = true;
    } else if (kw == "dim" || kw == "rank") {
      if (toks.size() != 1) throw ParseError("'" + kw + "' takes one integer", lineno);
      auto v = parse_int(toks[0]);
      if (v < 1) throw ParseError("'" + kw + "' must be positive", lineno);
      bool& have = kw == "dim" ? have_dim : have_rank;
      if (have) throw ParseError("duplicate '" + kw + "'", lineno);
      (kw == "dim" ? m.dim : m.rank) = static_cast<unsigned>(v);
      have = true;
    } else if (kw == "gens") {
      need_rank(kw);
      if (toks.size() != m.rank) throw ParseError("'gens' needs exactly rank names", lineno);
      m.gens = toks;
      have_gens = true;
    } else if (kw == "smooth") {
      if (toks.size() != 1 || (toks[0] != "true" && toks[0] != "false"))
        throw ParseError("'smooth' takes true or false", lineno);
      m.smooth = toks[0] == "true";
      have_smooth = true;
    } else if (kw == "divisor") {
      need_rank(kw);
      if (toks.size() != m.rank) throw ParseError("'divisor' needs rank integers", lineno);
      PicardVector h;
      for (const auto& t : toks) h.push_back(parse_int(t));
      if (!m.divisor_classes) m.divisor_classes.emplace();
      m.divisor_classes->push_back(h);
    } else if (kw == "tensor") {
      need_rank(kw);
      if (toks.size() != m.rank + 2 || toks[m.rank] != "=")
        throw ParseError("'tensor' needs rank exponents, '=', and a rational", lineno);
      Exponents key;
      for (std::size_t i = 0; i < m.rank; ++i) {
        auto e = parse_int(toks[i]);
        if (e < 0) throw ParseError("negative tensor exponent", lineno);
        key.push_back(static_cast<std::uint32_t>(e));
      }
      Rational val;
      try {
        val = Rational::parse(toks[m.rank + 1]);
      } catch (const Error& e) {
        throw ParseError(e.what(), lineno);
      }
      if (total_degree(key) != m.dim && have_dim)
        throw ValidationError("tensor key degree", "line " + std::to_string(lineno) + ": key of total degree " +
                                                       std::to_string(total_degree(key)) + " in dimension " +
                                                       std::to_string(m.dim));
      if (m.tensor.count(key)) throw ParseError("duplicate tensor key", lineno);
      m.tensor[key] = val;
    } else if (kw == "chern") {
      if (!have_gens) throw ParseError("'chern' before 'gens'", lineno);
      auto colon = line.find(':');
      if (toks.empty() || colon == std::string::npos) throw ParseError("'chern' needs '<j> : <polynomial>'", lineno);
      std::string jtok = toks[0];
      if (auto c = jtok.find(':'); c != std::string::npos) jtok = jtok.substr(0, c);
      auto j = parse_int(jtok);
      if (j < 0) throw ParseError("negative chern degree", lineno);
      if (m.chern_override.count(static_cast<unsigned>(j))) throw ParseError("duplicate chern degree", lineno);
      try {
        m.chern_override[static_cast<unsigned>(j)] = parse_polynomial(line.substr(colon + 1), m.gens);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
    } else if (kw == "radial") {
      PicardVector row;
      for (const auto& t : toks) row.push_back(parse_int(t));
      m.radial.push_back(row);
    } else if (kw == "coords") {
      if (!m.coords.empty()) throw ParseError("duplicate 'coords'", lineno);
      m.coords = toks;
    } else {
      throw ParseError("unknown keyword '" + kw + "'", lineno);
    }
  }
  if (!have_name) throw ParseError("missing 'name'");
  if (!have_dim) throw ParseError("missing 'dim'");
  if (!have_rank) throw ParseError("missing 'rank'");
  if (!have_gens) throw ParseError("missing 'gens'");
  if (!have_smooth) throw ParseError("missing 'smooth'");
  // Zero entries are equivalent to omitted keys.
  std::erase_if(m.tensor, [](const auto& kv) { return kv.second.is_zero(); });
  validate_model(m);
  return m;
}

}  // namespace toricfol
