// Brute-force reference implementations used to cross-check the library.
// Nothing here goes through MultiPoly or ChowElement: integrals are taken
// by expanding products of numeric linear forms factor by factor.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "toricfol/toricfol.hpp"

namespace oracle {

using toricfol::Rational;
using LinearForm = std::vector<Rational>;  // coordinates in the Picard basis

/// e_j by summing over all j-subsets.
inline Rational elementary(const std::vector<Rational>& xs, unsigned j) {
  Rational total(0);
  const std::size_t n = xs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountll(mask)) != j) continue;
    Rational p(1);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) p = p * xs[i];
    total = total + p;
  }
  return total;
}

/// W_j by summing over all exponent vectors with |i| = j.
inline Rational complete(const std::vector<Rational>& xs, unsigned j) {
  Rational total(0);
  std::vector<unsigned> e(xs.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos == xs.size()) {
      if (left != 0) return;
      Rational p(1);
      for (std::size_t i = 0; i < xs.size(); ++i) p = p * xs[i].pow(e[i]);
      total = total + p;
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  rec(rec, 0, j);
  return total;
}

/// ∫ ℓ_1⋯ℓ_n: picks one generator from every factor in all r^n ways and
/// looks the resulting monomial up in the tensor.
inline Rational integrate_product(const toricfol::ToricModel& m, const std::vector<LinearForm>& factors) {
  if (factors.size() != m.dim) return Rational(0);
  Rational total(0);
  toricfol::Exponents key(m.rank, 0);
  auto rec = [&](auto&& self, std::size_t t, const Rational& coeff) -> void {
    if (coeff.is_zero()) return;
    if (t == factors.size()) {
      auto it = m.tensor.find(key);
      if (it != m.tensor.end()) total = total + coeff * it->second;
      return;
    }
    for (std::size_t g = 0; g < m.rank; ++g) {
      ++key[g];
      self(self, t + 1, coeff * factors[t][g]);
      --key[g];
    }
  };
  rec(rec, 0, Rational(1));
  return total;
}

inline std::vector<LinearForm> divisor_forms(const toricfol::ToricModel& m) {
  std::vector<LinearForm> out;
  for (const auto& h : *m.divisor_classes) {
    LinearForm f;
    for (auto x : h) f.push_back(Rational(static_cast<long>(x)));
    out.push_back(f);
  }
  return out;
}

/// ∫ C_j(h) · extra, with C_j expanded as a sum over j-subsets of divisors.
inline Rational integrate_chern_times(const toricfol::ToricModel& m, unsigned j, const std::vector<LinearForm>& extra) {
  auto hs = divisor_forms(m);
  Rational total(0);
  const std::size_t n = hs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountll(mask)) != j) continue;
    std::vector<LinearForm> fs = extra;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) fs.push_back(hs[i]);
    total = total + integrate_product(m, fs);
  }
  return total;
}

inline std::vector<LinearForm> repeat(const LinearForm& f, unsigned k) { return std::vector<LinearForm>(k, f); }

inline std::vector<LinearForm> concat(std::vector<LinearForm> a, const std::vector<LinearForm>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Rational sign(unsigned k) { return Rational(k % 2 ? -1 : 1); }

/// Σ_j ∫ C_j d^{n-j}.
inline Rational foliation_count(const toricfol::ToricModel& m, const LinearForm& d) {
  Rational total(0);
  for (unsigned j = 0; j <= m.dim; ++j) total = total + integrate_chern_times(m, j, repeat(d, m.dim - j));
  return total;
}

/// Σ_j Σ_k (−1)^k ∫ C_{j−k} a^{k+1} d^{n−1−j}.
inline Rational restricted_count(const toricfol::ToricModel& m, const LinearForm& d, const LinearForm& a) {
  Rational total(0);
  for (unsigned j = 0; j < m.dim; ++j)
    for (unsigned k = 0; k <= j; ++k)
      total = total + sign(k) * integrate_chern_times(m, j - k, concat(repeat(a, k + 1), repeat(d, m.dim - 1 - j)));
  return total;
}

inline Rational ambient_euler(const toricfol::ToricModel& m) { return integrate_chern_times(m, m.dim, {}); }

/// Weighted hypersurface count straight from the closed form, with
/// C_j(ω) and W_j(a) from the subset/composition oracles.
inline Rational wci_count(const std::vector<std::int64_t>& w, const std::vector<std::int64_t>& a, const Rational& d,
                          bool distribution) {
  std::vector<Rational> wr, ar;
  Rational pre(1);
  for (auto x : w) {
    wr.push_back(Rational(static_cast<long>(x)));
    pre = pre / Rational(static_cast<long>(x));
  }
  for (auto x : a) {
    ar.push_back(Rational(static_cast<long>(x)));
    pre = pre * Rational(static_cast<long>(x));
  }
  const unsigned n = static_cast<unsigned>(w.size() - 1), m = static_cast<unsigned>(a.size());
  Rational total(0);
  for (unsigned i = 0; i <= n - m; ++i) {
    Rational c(0);
    for (unsigned j = 0; j <= i; ++j) c = c + sign(j) * elementary(wr, i - j) * complete(ar, j);
    if (distribution) c = c * sign(i);
    total = total + c * d.pow(n - m - i);
  }
  return pre * total;
}

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational small_rational(std::mt19937_64& rng, std::int64_t range = 5) {
  return Rational(toricfol::big(uniform(rng, -range, range)), toricfol::big(uniform(rng, 1, 4)));
}

}  // namespace oracle
