#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toricfol/toricfol.hpp"

using namespace toricfol;

namespace {

std::vector<ToricModel> catalog_models() {
  return {projective(1),        projective(2),         projective(3),        projective(5),
          weighted({1, 2, 3}),  weighted({1, 1, 1, 4}), weighted({2, 3, 5, 7}), multiprojective({1, 1}),
          multiprojective({2, 1}), multiprojective({1, 1, 1}), scroll({1, 1}), scroll({1, 1, 1}),
          scroll({-1, 2, 0}),   blowup_point(2),       blowup_point(3),      blowup_point(4),
          blowup_two_points_p3(), blowup_line_p3()};
}

ScalarExpr lit(long v) { return MultiPoly::constant(Rational(v)); }

ChowElement monomial(const ToricModel& m, const Exponents& e) {
  MultiPoly p(m.gens);
  p.add_term(e, Rational(1));
  return ChowElement::from_poly(m, p);
}

ChowElement random_element(std::mt19937_64& rng, const ToricModel& m, const VarTable& syms) {
  VarTable table = m.gens;
  table.insert(table.end(), syms.begin(), syms.end());
  MultiPoly p(table);
  for (int t = 0; t < 6; ++t) {
    Exponents e(table.size(), 0);
    auto deg = static_cast<std::uint32_t>(oracle::uniform(rng, 0, m.dim + 1));
    for (std::uint32_t k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(oracle::uniform(rng, 0, m.rank - 1))];
    for (std::size_t s = m.rank; s < table.size(); ++s) e[s] = static_cast<std::uint32_t>(oracle::uniform(rng, 0, 2));
    p.add_term(e, oracle::small_rational(rng));
  }
  return ChowElement::from_poly(m, p);
}

}  // namespace

TEST(ClassOfDivisorCoeffs, Examples) {
  auto bl = blowup_point(2);
  auto names = VarTable{"d1", "d2"};
  std::vector<ScalarExpr> coeffs{lit(0), lit(0), MultiPoly::variable(names, 0), MultiPoly::variable(names, 1)};
  auto c = class_of_divisor_coeffs(bl, coeffs);
  EXPECT_EQ(canonical_string(c.coeffs[0]), "d1");
  EXPECT_EQ(canonical_string(c.coeffs[1]), "d2");

  auto p123 = weighted({1, 2, 3});
  std::vector<ScalarExpr> ones{lit(1), lit(1), lit(1)};
  EXPECT_EQ(class_of_divisor_coeffs(p123, ones).numeric_values(), std::vector<Rational>{Rational(6)});

  std::vector<ScalarExpr> zeros(4, lit(0));
  for (const auto& x : class_of_divisor_coeffs(bl, zeros).coeffs) EXPECT_TRUE(x.is_zero());

  std::vector<ScalarExpr> three(3, lit(0));
  EXPECT_THROW(class_of_divisor_coeffs(blowup_line_p3(), three), UnsupportedModel);
  EXPECT_THROW(class_of_divisor_coeffs(bl, three), DomainError);
}

TEST(ChernClasses, Examples) {
  auto bl = blowup_point(2);
  EXPECT_EQ(canonical_string(elementary_symmetric_classes(bl, 1).poly()), "3*H - E");
  EXPECT_EQ(canonical_string(elementary_symmetric_classes(projective(2), 2).poly()), "3*H^2");
  EXPECT_EQ(integrate(scroll({1, 1}), elementary_symmetric_classes(scroll({1, 1}), 2)), lit(4));
  EXPECT_EQ(integrate(scroll({2, 5}), elementary_symmetric_classes(scroll({2, 5}), 2)), lit(4));

  EXPECT_EQ(canonical_string(chern_class(blowup_line_p3(), 2).poly()), "7*H^2 - 4*H*E");
  EXPECT_EQ(canonical_string(chern_class(blowup_two_points_p3(), 1).poly()), "4*H - 2*E1 - 2*E2");
  for (const auto& m : catalog_models()) EXPECT_EQ(chern_class(m, 0), ChowElement::one(m));

  EXPECT_THROW(chern_class(projective(2), 3), DomainError);
  EXPECT_THROW(elementary_symmetric_classes(blowup_line_p3(), 1), UnsupportedModel);
}

TEST(ChernClasses, GeneratingIdentity) {
  VarTable t{"t"};
  auto tt = MultiPoly::variable(t, 0);
  for (const auto& m : catalog_models()) {
    if (!m.divisor_classes) continue;
    auto hs = divisor_elements(m);
    ChowElement lhs = ChowElement::one(m);
    for (const auto& h : hs) lhs = lhs * (ChowElement::one(m) + h.times(tt));
    ChowElement rhs = ChowElement::zero(m);
    for (unsigned j = 0; j <= hs.size(); ++j) {
      auto cj = elementary_symmetric<ChowElement>(hs, j, ChowElement::one(m));
      if (j <= m.dim) {
        EXPECT_EQ(cj, elementary_symmetric_classes(m, j)) << m.name;
      }
      rhs += cj.times(tt.pow(j));
    }
    EXPECT_EQ(lhs, rhs) << m.name;
  }
}

TEST(ChernClasses, RoutesAgreeOnCatalogModels) {
  // Bl_p(P^2) with an explicit override that matches C_j(h) after pairing.
  auto m = blowup_point(2);
  m.chern_override[1] = parse_polynomial("3*H - E", m.gens);
  m.chern_override[2] = parse_polynomial("3*H^2 - E^2", m.gens);
  EXPECT_NO_THROW(validate_model(m));
  m.chern_override[2] = parse_polynomial("3*H^2 + E^2", m.gens);
  try {
    validate_model(m);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.invariant(), "chern routes agree");
  }
}

TEST(Wronski, Examples) {
  auto m = projective(2);
  auto h = ChowElement::generator(m, 0);
  std::vector<ChowElement> one_class{h.scaled(Rational(3))};
  for (unsigned j = 0; j <= 4; ++j)
    EXPECT_EQ(wronski_classes(m, one_class, j), h.scaled(Rational(3)).pow(j));
  auto pl = multiprojective({1, 1});
  std::vector<ChowElement> two{ChowElement::generator(pl, 0), ChowElement::generator(pl, 1)};
  EXPECT_EQ(canonical_string(wronski_classes(pl, two, 2).poly()), "H1^2 + H1*H2 + H2^2");
  std::vector<ChowElement> bad{h * h};
  EXPECT_THROW(wronski_classes(m, bad, 1), DomainError);
}

TEST(Integrate, Examples) {
  auto p123 = weighted({1, 2, 3});
  EXPECT_EQ(integrate(p123, monomial(p123, {2})), MultiPoly::constant(Rational(BigInt(1), BigInt(6))));
  EXPECT_EQ(integrate(blowup_line_p3(), monomial(blowup_line_p3(), {1, 2})), lit(-1));
  auto pl = multiprojective({1, 1});
  EXPECT_EQ(integrate(pl, monomial(pl, {1, 1})), lit(1));
  EXPECT_EQ(integrate(pl, monomial(pl, {2, 0})), lit(0));
  // Lower and higher degrees integrate to zero.
  EXPECT_EQ(integrate(pl, monomial(pl, {1, 0})), lit(0));
  EXPECT_EQ(integrate(pl, monomial(pl, {2, 1})), lit(0));
}

TEST(Integrate, Linearity) {
  std::mt19937_64 rng(31337);
  auto models = catalog_models();
  VarTable syms{"d1", "d2"};
  for (int i = 0; i < 200; ++i) {
    const auto& m = models[static_cast<std::size_t>(oracle::uniform(rng, 0, static_cast<std::int64_t>(models.size()) - 1))];
    auto x = random_element(rng, m, syms), y = random_element(rng, m, syms);
    auto a = oracle::small_rational(rng), b = oracle::small_rational(rng);
    auto lhs = integrate(m, x.scaled(a) + y.scaled(b));
    auto [ix, iy] = align(integrate(m, x), integrate(m, y));
    auto rhs = ix.scaled(a) + iy.scaled(b);
    auto [l, r] = align(lhs, rhs);
    EXPECT_EQ(l, r);
  }
}

TEST(Integrate, MatchesLinearFormExpansion) {
  std::mt19937_64 rng(4242);
  auto models = catalog_models();
  for (int i = 0; i < 200; ++i) {
    const auto& m = models[static_cast<std::size_t>(oracle::uniform(rng, 0, static_cast<std::int64_t>(models.size()) - 1))];
    std::vector<oracle::LinearForm> forms;
    ChowElement prod = ChowElement::one(m);
    for (unsigned t = 0; t < m.dim; ++t) {
      oracle::LinearForm f;
      for (unsigned g = 0; g < m.rank; ++g) f.push_back(oracle::small_rational(rng));
      forms.push_back(f);
      prod = prod * ChowElement::from_class(m, ClassExpr::numeric(f));
    }
    EXPECT_EQ(integrate(m, prod), MultiPoly::constant(oracle::integrate_product(m, forms))) << m.name;
  }
}

TEST(ElementaryWronskiDuality, TruncatedGeneratingSeries) {
  std::mt19937_64 rng(777);
  auto m = multiprojective({2, 2, 2});
  VarTable t{"t"};
  auto tt = MultiPoly::variable(t, 0);
  for (int i = 0; i < 200; ++i) {
    std::vector<ChowElement> xs;
    auto len = oracle::uniform(rng, 1, 4);
    for (int k = 0; k < len; ++k) {
      std::vector<Rational> c;
      for (unsigned g = 0; g < m.rank; ++g) c.push_back(Rational(static_cast<long>(oracle::uniform(rng, -3, 3))));
      xs.push_back(ChowElement::from_class(m, ClassExpr::numeric(c)));
    }
    ChowElement e_series = ChowElement::zero(m), w_series = ChowElement::zero(m);
    for (unsigned j = 0; j <= 8; ++j) {
      auto sign = Rational(j % 2 ? -1 : 1);
      e_series += elementary_symmetric<ChowElement>(xs, j, ChowElement::one(m)).scaled(sign).times(tt.pow(j));
      w_series += wronski_classes(m, xs, j).times(tt.pow(j));
    }
    auto prod = (e_series * w_series).poly();
    // Keep t-degree ≤ 8 only.
    const std::size_t tpos = prod.nvars() - 1;
    MultiPoly low = prod.zero_like();
    for (const auto& [e, c] : prod.terms())
      if (e[tpos] <= 8) low.add_term(e, c);
    EXPECT_EQ(ChowElement(m.rank, low), ChowElement::one(m));
  }
}

TEST(ChowElement, GradingAndSymbolMerge) {
  auto m = blowup_point(2);
  auto h = ChowElement::generator(m, 0), e = ChowElement::generator(m, 1);
  auto x = (h + e).times(MultiPoly::variable({"a"}, 0));
  auto y = (h - e).times(MultiPoly::variable({"b"}, 0));
  auto z = x * y;
  ASSERT_TRUE(z.pure_degree());
  EXPECT_EQ(*z.pure_degree(), 2u);
  EXPECT_EQ(z.symbols(), (VarTable{"a", "b"}));
  EXPECT_EQ(canonical_string(integrate(m, z)), "2*a*b");
  EXPECT_FALSE((h + h * e).pure_degree());
  EXPECT_THROW(h * ChowElement::generator(projective(2), 0), AlignmentError);
}
