#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toricfol/toricfol.hpp"

using namespace toricfol;

namespace {

// Zeros of the distribution count on V(a) ⊂ P(1,...,1,k) with the k | a
// constraint, found by evaluating the closed form directly.
std::vector<SearchSolution> brute_weighted(SearchFamily family, std::int64_t bound) {
  const bool four = family == SearchFamily::p1111k;
  std::vector<SearchSolution> out;
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t d = 1; d <= bound; ++d)
      for (std::int64_t k = four ? 1 : 2; k <= bound; ++k) {
        if (a % k) continue;
        std::vector<std::int64_t> w(four ? 4 : 3, 1);
        w.push_back(k);
        if (!oracle::wci_count(w, {a}, Rational(static_cast<long>(d)), true).is_zero()) continue;
        SearchSolution s{family, {a, d, k}, Annotation::accepted};
        if (four && a == 2 && d == 1 && k == 1) s.annotation = Annotation::excluded_by_cohomology;
        out.push_back(s);
      }
  return out;
}

std::vector<SearchSolution> brute_scroll(const std::vector<std::int64_t>& a, std::int64_t bound) {
  auto m = scroll(a);
  std::vector<SearchSolution> out;
  for (std::int64_t d1 = -bound; d1 <= bound; ++d1)
    for (std::int64_t d2 = -bound; d2 <= bound; ++d2) {
      oracle::LinearForm d{Rational(static_cast<long>(d1)), Rational(static_cast<long>(d2))};
      if (oracle::foliation_count(m, d).is_zero()) out.push_back({SearchFamily::scroll, {d1, d2}});
    }
  return out;
}

}  // namespace

TEST(Search, P111kIsEmpty) { EXPECT_TRUE(regular_search(SearchFamily::p111k, 60).empty()); }

TEST(Search, P1111kSolutions) {
  auto sols = regular_search(SearchFamily::p1111k, 60);
  std::vector<SearchSolution> expected;
  for (std::int64_t k = 1; k <= 60; ++k) {
    if (k == 2) expected.push_back({SearchFamily::p1111k, {2, 1, 1}, Annotation::excluded_by_cohomology});
    expected.push_back({SearchFamily::p1111k, {k, 2, k}, Annotation::accepted});
  }
  std::sort(expected.begin(), expected.end(), [](const auto& x, const auto& y) { return x.params < y.params; });
  EXPECT_EQ(sols, expected);
}

TEST(Search, ScrollExample) {
  auto sols = regular_search(SearchFamily::scroll, 10, {1, 1, 1});
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].params, (std::vector<std::int64_t>{-2, 0}));
}

TEST(Search, WeightedFamiliesMatchDirectEvaluation) {
  EXPECT_EQ(regular_search(SearchFamily::p111k, 25), brute_weighted(SearchFamily::p111k, 25));
  EXPECT_EQ(regular_search(SearchFamily::p1111k, 25), brute_weighted(SearchFamily::p1111k, 25));
}

TEST(Search, WeightedPolynomialsMatchExplicitForms) {
  for (long k = 1; k <= 12; ++k)
    for (long a = 1; a <= 12; ++a)
      for (long d = 1; d <= 12; ++d) {
        const long quad = d * d - (3 + k - a) * d + (3 + 3 * k) - (3 + k) * a + a * a;
        EXPECT_EQ(oracle::wci_count({1, 1, 1, k}, {a}, Rational(d), true).is_zero(), quad == 0);
        const long c1 = 4 + k, c2 = 6 + 4 * k, c3 = 4 + 6 * k;
        const long cubic = d * d * d - (c1 - a) * d * d + (c2 - c1 * a + a * a) * d - (c3 - c2 * a + c1 * a * a - a * a * a);
        EXPECT_EQ(oracle::wci_count({1, 1, 1, 1, k}, {a}, Rational(d), true).is_zero(), cubic == 0);
      }
}

TEST(Search, ScrollMatchesDirectEvaluation) {
  for (auto a : std::vector<std::vector<std::int64_t>>{{1, 1, 1}, {0, 0, 3}, {1, 2, 3}, {2, 2, 2, 2}, {-1, 1, 0}})
    EXPECT_EQ(regular_search(SearchFamily::scroll, 8, a), brute_scroll(a, 8));
}

TEST(Search, OutputIsSortedAndDeterministic) {
  auto a = regular_search(SearchFamily::p1111k, 30);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end(), [](const auto& x, const auto& y) { return x.params < y.params; }));
  EXPECT_EQ(a, regular_search(SearchFamily::p1111k, 30));
}

TEST(Search, Errors) {
  EXPECT_THROW(regular_search(SearchFamily::p111k, 0), DomainError);
  EXPECT_THROW(parse_search_family("p11k"), ParseError);
  EXPECT_EQ(to_string(Annotation::excluded_by_cohomology), "excluded-by-cohomology");
}
