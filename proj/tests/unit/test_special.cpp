#include <gtest/gtest.h>

#include "overconv/carlitz.hpp"
#include "overconv/errors.hpp"
#include "overconv/special.hpp"

namespace overconv {
namespace {

using series::GenSeries;

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

TEST(Special, DworkPathsAgree) {
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    auto f = ff::Field::create(p, m);
    const Rational prec = 120;
    auto a = special::dwork_carlitz(f, 5, prec);
    auto b = special::dwork_carlitz_explicit(f, 5, prec);
    EXPECT_TRUE(carlitz::equal_to_precision(a, b)) << "q=" << f->q();
  }
}

TEST(Special, PerturbedCoefficientBreaksAgreement) {
  auto f = ff::Field::create(3, 1);
  const Rational prec = 120;
  auto a = special::dwork_carlitz(f, 4, prec);
  auto coeffs = special::dwork_carlitz_explicit(f, 4, prec).coeffs();
  coeffs[3] = series::add(coeffs[3], GenSeries::from_x_power(f, r(100)));
  EXPECT_FALSE(carlitz::equal_to_precision(a, carlitz::QLinearSeries(f, coeffs)));
}

TEST(Special, DworkLeadingCoefficientsOverF3) {
  auto f = ff::Field::create(3, 1);
  auto e = special::dwork_carlitz_explicit(f, 2, r(60));
  EXPECT_EQ(e.coeff(0).valuation(), r(1, 2));
  EXPECT_EQ(e.coeff(1).valuation(), r(5, 2));
  EXPECT_EQ(e.coeff(2).valuation(), r(5, 2));
}

TEST(Special, SpecialValueTelescopes) {
  auto f = ff::Field::create(2, 1);
  auto trace = special::dwork_special_value(f, 4, r(200));
  ASSERT_EQ(trace.entries.size(), 4u);
  for (const auto& e : trace.entries) {
    EXPECT_TRUE(e.forms_agree) << e.n;
    EXPECT_EQ(e.valuation.to_string(), "1") << e.n;
  }
}

TEST(Special, PolylogDifferenceMatchesClosedForm) {
  auto f = ff::Field::create(3, 1);
  const Rational prec = 200;
  auto l = special::polylog(f, 2, 4, prec);
  auto big = special::overconvergent_polylog(f, 2, 4, prec);
  auto diff = carlitz::sub(l, carlitz::substitute_q_power(l));
  EXPECT_TRUE(carlitz::equal_to_precision(diff, big));
}

TEST(Special, PochhammerRecurrenceMatchesProduct) {
  auto f = ff::Field::create(3, 1);
  auto a = GenSeries::from_terms(f, {{r(0), f->one()}, {r(1), f->from_int(2)}}, r(30));
  auto seq = special::pochhammer_sequence(a, 4);
  ASSERT_EQ(seq.size(), 5u);
  EXPECT_EQ(seq[0], GenSeries::one(f));
  for (int n = 1; n <= 4; ++n) EXPECT_TRUE(series::equal_to_precision(seq[n], special::pochhammer(a, n))) << n;
}

TEST(Special, PochhammerOfBracketVanishes) {
  auto f = ff::Field::create(2, 1);
  const auto one = carlitz::bracket(f, 1);
  // <[1]>_n contains the factor [1] - [1] = 0 for n >= 2.
  EXPECT_TRUE(special::pochhammer(one, 2).empty());
  EXPECT_FALSE(special::pochhammer(one, 1).empty());
}

TEST(Special, T1ShiftRaisesRamification) {
  auto f = ff::Field::create(3, 1);
  auto a = GenSeries::one(f, r(9));
  auto t = special::t1_shift(a);
  EXPECT_EQ(t.ram(), 1);
  EXPECT_EQ(t.precision(), r(3));
  EXPECT_EQ(series::q_power(t), series::sub(a, carlitz::bracket(f, 1)));
}

TEST(Special, HypergeomRejectsInadmissibleLowerParameter) {
  auto f = ff::Field::create(3, 1);
  special::HypergeomParams params{GenSeries::one(f, r(20)), GenSeries::one(f, r(20)),
                                  carlitz::bracket(f, 1)};
  EXPECT_FALSE(special::admissible(params, 3));
  EXPECT_THROW(special::hypergeom(params, 3, r(20)), InadmissibleParameter);
}

TEST(Special, SampledUnitsAreReproducible) {
  auto f = ff::Field::create(2, 2);
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 20; ++i) {
    auto u = special::sample_unit(f, a, 3);
    EXPECT_EQ(u, special::sample_unit(f, b, 3));
    EXPECT_EQ(u.valuation(), r(0));
    EXPECT_EQ(u.precision(), r(4));
    for (const auto& t : u.terms()) EXPECT_TRUE(f->in_base_field(t.coeff));
  }
}

TEST(Special, PrecisionBudget) {
  auto f = ff::Field::create(3, 1);
  EXPECT_EQ(special::precision_budget(*f, r(10), 2), r(90));
}

}  // namespace
}  // namespace overconv
