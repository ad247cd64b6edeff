#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toricfol/toricfol.hpp"

using namespace toricfol;

namespace {

VarTable chart(std::size_t n) {
  VarTable t;
  for (std::size_t i = 1; i <= n; ++i) t.push_back("z" + std::to_string(i));
  return t;
}

std::vector<MultiPoly> parse_all(const std::vector<std::string>& texts) {
  auto table = chart(texts.size());
  std::vector<MultiPoly> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, table));
  return out;
}

LocalIndexReport run(const std::vector<MultiPoly>& cs, long group = 1) {
  return local_multiplicity({cs, BigInt(group)});
}

// f(A·z): every variable is replaced by the matching row of A at once.
MultiPoly compose_linear(const MultiPoly& f, const std::vector<std::vector<long>>& A) {
  const auto& table = f.vars();
  std::vector<MultiPoly> rows;
  for (const auto& row : A) {
    MultiPoly r(table);
    for (std::size_t j = 0; j < row.size(); ++j) r += MultiPoly::variable(table, j).scaled(Rational(row[j]));
    rows.push_back(r);
  }
  MultiPoly out(table);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly t = f.constant_like(c);
    for (std::size_t i = 0; i < e.size(); ++i) t = t * rows[i].pow(e[i]);
    out += t;
  }
  return out;
}

long det(const std::vector<std::vector<long>>& A) {
  if (A.size() == 2) return A[0][0] * A[1][1] - A[0][1] * A[1][0];
  return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
         A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
}

// Local components of X = Σ a_k z_k ∂_k on P(ω) in the chart z_i = 1.
std::vector<MultiPoly> diagonal_chart(const std::vector<std::int64_t>& w, const std::vector<Rational>& a, std::size_t i) {
  auto table = chart(w.size() - 1);
  std::vector<MultiPoly> out;
  std::size_t slot = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k == i) continue;
    auto coeff = a[k] - a[i] * Rational(static_cast<long>(w[k])) / Rational(static_cast<long>(w[i]));
    out.push_back(MultiPoly::variable(table, slot++).scaled(coeff));
  }
  return out;
}

}  // namespace

TEST(LocalMultiplicity, Examples) {
  auto r = run(parse_all({"z1", "z2"}));
  EXPECT_EQ(r.multiplicity, 1);
  EXPECT_EQ(r.orbifold_index, Rational(1));

  r = run(parse_all({"3*z1^2", "3*z2^2"}), 3);
  EXPECT_EQ(r.multiplicity, 4);
  EXPECT_EQ(r.group_order, 3);
  EXPECT_EQ(r.orbifold_index, Rational(BigInt(4), BigInt(3)));

  EXPECT_EQ(run(parse_all({"z1^2", "z2^3"})).multiplicity, 6);
}

TEST(LocalMultiplicity, ExampleFamilyOverK) {
  for (long k = 2; k <= 7; ++k) {
    auto kk = std::to_string(k), e = std::to_string(k - 1);
    auto r = run(parse_all({kk + "*z1^" + e, kk + "*z2^" + e}), k);
    EXPECT_EQ(r.multiplicity, (k - 1) * (k - 1));
    EXPECT_EQ(r.orbifold_index, Rational(BigInt((k - 1) * (k - 1)), BigInt(k)));
  }
}

TEST(LocalMultiplicity, NonMonomialGerms) {
  // A_k singularity of z1^{k+1} + z2^2: Milnor number k.
  for (int k = 1; k <= 6; ++k)
    EXPECT_EQ(run(parse_all({std::to_string(k + 1) + "*z1^" + std::to_string(k), "2*z2"})).multiplicity, k);
  // Other zeros of the map away from the origin do not count.
  EXPECT_EQ(run(parse_all({"z1 - z1^2", "z2 + z2^3"})).multiplicity, 1);
  EXPECT_EQ(run(parse_all({"z1*z2", "z1^2 + z2^2"})).multiplicity, 4);
  EXPECT_EQ(run(parse_all({"z1^2 - z2^3", "z1*z2"})).multiplicity, 5);
}

TEST(LocalMultiplicity, StaircaseLaw) {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      EXPECT_EQ(run(parse_all({"z1^" + std::to_string(a), "z2^" + std::to_string(b)})).multiplicity, a * b);
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        EXPECT_EQ(run(parse_all({"z1^" + std::to_string(a), "z2^" + std::to_string(b), "z3^" + std::to_string(c)}))
                      .multiplicity,
                  a * b * c);
}

TEST(LocalMultiplicity, LinearChangeInvariance) {
  std::mt19937_64 rng(41);
  const std::vector<std::vector<std::string>> germs{
      {"z1^2", "z2^3"}, {"z1*z2", "z1^2 + z2^2"}, {"z1^3 + z2^2", "z1*z2"}, {"z1^2", "z2^2", "z3^2"}};
  for (int trial = 0; trial < 20; ++trial) {
    const auto& g = germs[static_cast<std::size_t>(trial) % germs.size()];
    auto fs = parse_all(g);
    const std::size_t n = fs.size();
    std::vector<std::vector<long>> A;
    do {
      A.assign(n, std::vector<long>(n));
      for (auto& row : A)
        for (auto& x : row) x = static_cast<long>(oracle::uniform(rng, -3, 3));
    } while (det(A) == 0);
    std::vector<MultiPoly> changed;
    for (const auto& f : fs) changed.push_back(compose_linear(f, A));
    EXPECT_EQ(run(changed).multiplicity, run(fs).multiplicity);
  }
}

TEST(LocalMultiplicity, StabilizationIsReported) {
  auto r = run(parse_all({"z1^3", "z2^3"}));
  EXPECT_EQ(r.multiplicity, 9);
  EXPECT_GE(r.stabilized_at, 5u);
  EXPECT_EQ(detail::quotient_dimension(parse_all({"z1^3", "z2^3"}), r.stabilized_at), 9u);
  for (std::uint32_t D = 1; D < 12; ++D)
    EXPECT_LE(detail::quotient_dimension(parse_all({"z1^3", "z2^3"}), D),
              detail::quotient_dimension(parse_all({"z1^3", "z2^3"}), D + 1));
}

TEST(LocalMultiplicity, Errors) {
  EXPECT_THROW(run(parse_all({"z1^2", "z1*z2"})), NonIsolatedZero);
  EXPECT_THROW(local_multiplicity({parse_all({"z1", "z2^40"}), BigInt(1), 8}), NonIsolatedZero);
  EXPECT_THROW(run(parse_all({"z1 + 1", "z2"})), DomainError);
  EXPECT_THROW(run({parse_polynomial("z1", chart(2))}), DomainError);
  EXPECT_THROW(run(parse_all({"z1", "z2"}), 0), DomainError);
}

TEST(OrbifoldIndex, Examples) {
  for (long w = 1; w <= 7; ++w) EXPECT_EQ(orbifold_index(BigInt(1), BigInt(w)), Rational(BigInt(1), BigInt(w)));
  EXPECT_EQ(orbifold_index(BigInt(4), BigInt(1)), Rational(4));
  EXPECT_EQ(orbifold_index(BigInt(16), BigInt(5)), Rational(BigInt(16), BigInt(5)));
  EXPECT_THROW(orbifold_index(BigInt(1), BigInt(0)), DomainError);
  EXPECT_EQ(index_sum({}), Rational(0));
}

TEST(IndexSum, DiagonalFieldMatchesGlobalCount) {
  std::mt19937_64 rng(43);
  int done = 0;
  while (done < 10) {
    std::vector<std::int64_t> w{oracle::uniform(rng, 1, 9), oracle::uniform(rng, 1, 9), oracle::uniform(rng, 1, 9)};
    if (std::gcd(w[0], w[1]) != 1 || std::gcd(w[0], w[2]) != 1 || std::gcd(w[1], w[2]) != 1) continue;
    std::vector<Rational> a{Rational(2), Rational(-3), Rational(7)};
    std::vector<LocalIndexReport> reports;
    for (std::size_t i = 0; i < 3; ++i) reports.push_back(run(diagonal_chart(w, a, i), static_cast<long>(w[i])));
    for (const auto& r : reports) EXPECT_EQ(r.multiplicity, 1);
    EXPECT_EQ(MultiPoly::constant(index_sum(reports)),
              foliation_sing_count(weighted(w), ClassExpr::integers({0})));
    ++done;
  }
}

TEST(IndexSum, WeightedExampleDecomposition) {
  for (long k = 2; k <= 6; ++k) {
    std::vector<LocalIndexReport> reports;
    // The k simple zeros along z3 = 0, each moved to the origin of its chart.
    auto table = VarTable{"u", "v"};
    auto u = MultiPoly::variable(table, 0), v = MultiPoly::variable(table, 1);
    auto one = u.constant_like(Rational(1));
    for (long j = 0; j < k; ++j)
      reports.push_back(local_multiplicity({{(v * (one + u).pow(static_cast<unsigned>(k - 1))).scaled(Rational(k)),
                                             (one + u).pow(static_cast<unsigned>(k)) - one},
                                            BigInt(1)}));
    auto kk = std::to_string(k), e = std::to_string(k - 1);
    reports.push_back(run(parse_all({kk + "*z1^" + e, kk + "*z2^" + e}), k));
    EXPECT_EQ(index_sum(reports), Rational(BigInt(2 * k * k - 2 * k + 1), BigInt(k)));
    EXPECT_EQ(MultiPoly::constant(index_sum(reports)),
              wci_sing_count({1, 1, 1, k}, {1}, MultiPoly::constant(Rational(2 * k)), Kind::distribution));
  }
}
