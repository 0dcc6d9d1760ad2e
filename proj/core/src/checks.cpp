#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "overconv/analysis.hpp"
#include "overconv/errors.hpp"
#include "overconv/special.hpp"

namespace overconv::analysis {

using carlitz::bracket;
using carlitz::BracketCache;

namespace {

constexpr int kMaxDoublings = 8;

std::string str(const Rational& r) { return overconv::to_string(r); }
std::string str(int n) { return std::to_string(n); }
std::string str(std::uint64_t n) { return std::to_string(n); }

Rational q_pow(std::uint32_t q, int k) { return Rational(ipow(q, static_cast<unsigned>(k))); }

// (q^n - 1)/(q - 1) = v(D_n).
Rational factorial_valuation(std::uint32_t q, int n) { return (q_pow(q, n) - 1) / Rational(q - 1); }

CheckReport new_report(const std::string& name, const ff::FieldPtr& field, Params params) {
  CheckReport r;
  r.name = name;
  r.p = field->p();
  r.m = field->m();
  r.q = field->q();
  r.params = std::move(params);
  return r;
}

CheckCase rational_case(Params inputs, const Rational& measured, const std::string& relation,
                        const Rational& bound) {
  CheckCase c;
  c.inputs = std::move(inputs);
  c.measured = str(measured);
  c.relation = relation;
  c.bound = str(bound);
  if (relation == ">=") {
    c.pass = measured >= bound;
  } else if (relation == ">") {
    c.pass = measured > bound;
  } else {
    c.pass = measured == bound;
  }
  return c;
}

// A valuation known only as ">= cap" still proves ">=" and ">" claims when the
// cap is large enough, never "==".
CheckCase valuation_case(Params inputs, const ValuationInfo& v, const std::string& relation,
                         const Rational& bound) {
  CheckCase c;
  c.inputs = std::move(inputs);
  c.relation = relation;
  c.bound = str(bound);
  switch (v.kind) {
    case ValuationInfo::Kind::kInfinite:
      c.measured = "inf";
      c.pass = relation != "==";
      break;
    case ValuationInfo::Kind::kAtLeast:
      c.measured = str(v.value);
      c.measured_exact = false;
      c.pass = relation == ">=" ? v.value >= bound : relation == ">" ? v.value > bound : false;
      break;
    case ValuationInfo::Kind::kExact:
      c.measured = str(v.value);
      c.pass = relation == ">=" ? v.value >= bound : relation == ">" ? v.value > bound : v.value == bound;
      break;
  }
  return c;
}

// lhs = rhs to precision: measured is v(lhs - rhs) ("inf" when both sides are
// exact and equal, the shared cap when the difference has no terms below it).
// Passes when the difference has no terms and is known at least below
// x^required.
CheckCase identity_case(Params inputs, const GenSeries& lhs, const GenSeries& rhs, const Rational& required) {
  const GenSeries diff = series::sub(lhs, rhs);
  CheckCase c;
  c.inputs = std::move(inputs);
  c.relation = ">=";
  c.bound = str(required);
  if (diff.is_exact_zero()) {
    c.measured = "inf";
    c.pass = true;
  } else if (!diff.empty()) {
    c.measured = str(diff.valuation());
    c.pass = false;
  } else {
    const Rational cap = *diff.precision();
    c.measured = str(cap);
    c.measured_exact = false;
    c.pass = cap >= required;
  }
  return c;
}

// Raises the precision from `start` until the valuation of compute(prec) is
// exact (or the series is exact zero).
GenSeries resolve(const std::function<GenSeries(const Exponent&)>& compute, Exponent start) {
  for (int i = 0;; ++i) {
    GenSeries s = compute(start);
    if (s.valuation_info().kind != ValuationInfo::Kind::kAtLeast || i == kMaxDoublings) return s;
    start *= 2;
  }
}

// Eq-(14)/(15) lower bound for v(c_n(E)).
Rational dwork_bound(std::uint32_t q, int n) {
  const Rational qm1(q - 1);
  if (n == 1) return 1 / qm1 + qm1;
  return (q_pow(q, n - 2) * qm1 * qm1 + 1) / qm1;
}

// Slope bound the coefficient bounds converge to.
Rational dwork_slope_limit(std::uint32_t q) { return Rational(q - 1) / q_pow(q, 2); }

GenSeries x_series(const ff::FieldPtr& field) { return GenSeries::from_x_power(field, Exponent(1)); }

QLinearSeries negate(const QLinearSeries& u) {
  std::vector<GenSeries> out;
  for (const auto& c : u.coeffs()) out.push_back(series::neg(c));
  return QLinearSeries(u.field_ptr(), std::move(out));
}

// 1/[j]^n - 1/[j-1]^n, j >= 2.
GenSeries polylog_difference(const ff::FieldPtr& field, int n, int j, const Exponent& prec) {
  const GenSeries hi = series::inv(series::pow(bracket(field, j), n), prec);
  const GenSeries lo = series::inv(series::pow(bracket(field, j - 1), n), prec);
  return series::sub(hi, lo);
}

}  // namespace

// ---------------------------------------------------------------------------

CheckReport check_l_sequence(const ff::FieldPtr& field, int n_max) {
  const std::uint32_t q = field->q();
  CheckReport r = new_report("l_sequence", field, {{"n_max", str(n_max)}});
  const LSequence ls = l_sequence(q, n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    r.cases.push_back(rational_case({{"n", str(n)}, {"statement", "recurrence l_n equals closed form"}},
                                    Rational(ls.recurrence[i]), "==", Rational(ls.closed_form[i])));
  }
  for (int n = 1; n <= n_max; ++n) {
    const Rational lhs = (q_pow(q, n + 2) - q) / Rational(q - 1) - Rational(ls.recurrence[static_cast<std::size_t>(n)]);
    r.cases.push_back(rational_case({{"n", str(n)}, {"statement", "(q^(n+2) - q)/(q - 1) - l_(n+1) = q^n - 1"}},
                                    lhs, "==", q_pow(q, n) - 1));
  }
  for (int n = 1; n <= n_max; ++n) {
    r.cases.push_back(rational_case({{"n", str(n)}, {"statement", "q^n - 1 > 0"}}, q_pow(q, n) - 1, ">", 0));
  }
  return r;
}

CheckReport check_prop1(const ff::FieldPtr& field, int n_max) {
  if (n_max < 1) throw std::invalid_argument("prop1 needs n_max >= 1");
  const std::uint32_t q = field->q();
  CheckReport r = new_report("prop1", field, {{"n_max", str(n_max)}});
  const BracketCache cache(field, n_max);
  const LSequence ls = l_sequence(q, n_max);
  for (int n = 1; n <= n_max; ++n) {
    const ff::FieldElement sign = n % 2 == 0 ? field->one() : field->minus_one();
    const GenSeries lead = GenSeries::monomial(field, sign, factorial_valuation(q, n));
    const GenSeries diff = series::sub(cache.factorial(n), lead);
    const Rational l_n(ls.recurrence[static_cast<std::size_t>(n - 1)]);
    const ValuationInfo v = diff.valuation_info();
    const bool equal = v.exact() && v.value == l_n;
    r.cases.push_back(valuation_case(
        {{"n", str(n)}, {"statement", "v(D_n - (-1)^n x^((q^n-1)/(q-1))) >= l_n"}, {"equality", equal ? "true" : "false"}},
        v, ">=", l_n));
  }
  const CheckReport ls_report = check_l_sequence(field, n_max);
  r.cases.insert(r.cases.end(), ls_report.cases.begin(), ls_report.cases.end());
  return r;
}

QLinearSeries resolved_dwork_carlitz(const ff::FieldPtr& field, int order, const Exponent& precision) {
  const std::uint32_t q = field->q();
  std::vector<GenSeries> coeffs;
  for (int n = 0; n <= order; ++n) {
    const Exponent start = n == 0 ? precision : std::max<Exponent>(precision, dwork_bound(q, n) + 1);
    coeffs.push_back(resolve([&](const Exponent& p) { return special::dwork_coefficient(field, n, p); }, start));
  }
  return QLinearSeries(field, std::move(coeffs));
}

CheckReport check_prop2(const ff::FieldPtr& field, int n_max, int sum_max, const Exponent& precision) {
  if (n_max < 2) throw std::invalid_argument("prop2 needs n_max >= 2");
  const std::uint32_t q = field->q();
  CheckReport r = new_report("prop2", field,
                             {{"n_max", str(n_max)}, {"sum_max", str(sum_max)}, {"precision", str(precision)}});

  // (i) coefficient bounds, closed form against the composed series.
  const QLinearSeries e = resolved_dwork_carlitz(field, n_max, precision);
  Exponent widest = precision;
  for (const auto& c : e.coeffs()) widest = std::max(widest, *c.precision());
  const QLinearSeries composed = special::dwork_carlitz(field, n_max, widest);
  for (int n = 1; n <= n_max; ++n) {
    const GenSeries& c = e.coeff(n);
    r.cases.push_back(valuation_case({{"n", str(n)}, {"statement", "v(c_n(E)) >= bound"}}, c.valuation_info(), ">=",
                                     dwork_bound(q, n)));
  }
  for (int n = 0; n <= n_max; ++n) {
    const GenSeries& c = e.coeff(n);
    const Exponent cap = *c.precision();
    r.cases.push_back(identity_case({{"n", str(n)}, {"statement", "e_C(sigma(t - t^q)) coefficient equals closed form"}},
                                    series::truncate(composed.coeff(n), cap), c, cap));
  }

  // (ii) partial sums of E(1).
  std::optional<Rational> previous_residual;
  for (int big_n = 1; big_n <= sum_max; ++big_n) {
    const Rational tail_bound = dwork_bound(q, big_n + 1);
    Exponent prec = std::max<Exponent>(precision, tail_bound + 1);
    special::SpecialValueEntry s = special::special_value_entry(field, big_n, prec);
    for (int i = 0; i < kMaxDoublings && (!s.distance_to_sigma.exact() || !s.equation_residual.exact()); ++i) {
      prec *= 2;
      s = special::special_value_entry(field, big_n, prec);
    }
    const Params in{{"N", str(big_n)}};
    auto with = [&](const std::string& statement) {
      Params p = in;
      p.emplace_back("statement", statement);
      return p;
    };
    r.cases.push_back(identity_case(with("S_N summed equals sigma^(q^N)/D_N"), s.partial_sum, s.telescoped, prec));
    r.cases.push_back(valuation_case(with("v(S_N) = 1/(q-1)"), s.valuation, "==", Rational(1, q - 1)));
    r.cases.push_back(valuation_case(with("v(S_N - sigma) >= min of bounds for n > N"), s.distance_to_sigma, ">=",
                                     tail_bound));
    if (previous_residual) {
      r.cases.push_back(valuation_case(with("v(S_N^(q-1) + x) > v(S_(N-1)^(q-1) + x)"), s.equation_residual, ">",
                                       *previous_residual));
    }
    if (s.equation_residual.exact()) {
      previous_residual = s.equation_residual.value;
    } else {
      previous_residual.reset();
    }
  }

  // (iii) overconvergence slopes.
  const ValuationProfile profile = valuation_profile(e);
  for (const auto& entry : profile.entries) {
    if (entry.index < 2) continue;
    r.cases.push_back(valuation_case({{"n", str(entry.index)}, {"statement", "v(c_n(E))/q^n >= (q-1)/q^2"}},
                                     ValuationInfo{entry.valuation.kind, *entry.slope}, ">=", dwork_slope_limit(q)));
  }
  const RadiusEstimate radius = radius_estimate(profile, 2);
  r.cases.push_back(rational_case({{"tail_start", "2"}, {"statement", "radius exponent of E >= (q-1)/q^2"},
                                   {"direction", to_string(radius.direction)}},
                                  radius.exponent, ">=", dwork_slope_limit(q)));
  return r;
}

CheckReport check_prop3(const ff::FieldPtr& field, int n_max, int order, const Exponent& precision) {
  if (order < 2) throw std::invalid_argument("prop3 needs order >= 2");
  const std::uint32_t q = field->q();
  CheckReport r = new_report("prop3", field,
                             {{"n_max", str(n_max)}, {"order", str(order)}, {"precision", str(precision)}});
  for (int n = 1; n <= n_max; ++n) {
    std::vector<GenSeries> coeffs{GenSeries(field),
                                  series::inv(series::pow(bracket(field, 1), n), precision)};
    for (int j = 2; j <= order; ++j) {
      const Rational bound = q_pow(q, j - 1) - n - 1;
      const Rational printed = q_pow(q, j - 1) - n + 1;
      const GenSeries c = resolve([&](const Exponent& p) { return polylog_difference(field, n, j, p); },
                                  std::max<Exponent>(precision, bound + 1));
      const ValuationInfo v = c.valuation_info();
      CheckCase cc = valuation_case({{"n", str(n)}, {"j", str(j)}, {"statement", "v(c_j(L_n)) >= q^(j-1) - n - 1"},
                                     {"printed_bound_holds", v.at_least(printed) ? "true" : "false"}},
                                    v, ">=", bound);
      cc.paper_bound = str(printed);
      r.cases.push_back(std::move(cc));
      coeffs.push_back(c);
    }

    const ValuationProfile profile = valuation_profile(QLinearSeries(field, std::move(coeffs)));
    const RadiusEstimate radius = radius_estimate(profile, 2);
    const Rational one_over_q = Rational(1) / Rational(q);
    r.cases.push_back(rational_case({{"n", str(n)}, {"statement", "last slope >= 1/q - (n+1)/q^N"},
                                     {"direction", to_string(radius.direction)}},
                                    radius.last_slope, ">=", one_over_q - Rational(n + 1) / q_pow(q, order)));
    std::optional<Rational> prev;
    for (const auto& entry : profile.entries) {
      if (entry.index < 2) continue;
      if (prev && entry.valuation.exact()) {
        r.cases.push_back(rational_case({{"n", str(n)}, {"j", str(entry.index)}, {"statement", "slope_j >= slope_(j-1)"}},
                                        *entry.slope, ">=", *prev));
      }
      prev = entry.valuation.exact() ? entry.slope : std::nullopt;
    }
  }
  return r;
}

CheckReport check_identity_18(const ff::FieldPtr& field, int order, const Exponent& precision) {
  if (order < 1) throw std::invalid_argument("identity_18 needs order >= 1");
  const std::uint32_t q = field->q();
  CheckReport r = new_report("identity_18", field, {{"order", str(order)}, {"precision", str(precision)}});
  // Coefficient k is kept below x^(q precision + q^k): x^(q^k)/D_k stays
  // resolved past its valuation q^k - (q^k - 1)/(q - 1), and d e_C (which takes
  // a q-th root) still reaches x^precision.
  std::vector<GenSeries> ec_coeffs;
  const BracketCache cache(field, order);
  for (int k = 0; k <= order; ++k) ec_coeffs.push_back(series::inv(cache.factorial(k), precision * Rational(q) + q_pow(q, k)));
  const QLinearSeries ec(field, std::move(ec_coeffs));
  const GenSeries x = x_series(field);

  const QLinearSeries lhs = carlitz::add(carlitz::tau(ec), carlitz::scale(ec, x));
  const QLinearSeries rhs = carlitz::scale_argument(ec, x);
  for (int k = 0; k <= order; ++k) {
    r.cases.push_back(identity_case({{"k", str(k)}, {"statement", "tau e_C + x e_C = e_C(x t)"}}, lhs.coeff(k),
                                    rhs.coeff(k), precision));
  }
  const QLinearSeries d = carlitz::carlitz_d(ec);
  for (int k = 0; k < order; ++k) {
    r.cases.push_back(
        identity_case({{"k", str(k)}, {"statement", "d e_C = e_C"}}, d.coeff(k), ec.coeff(k), precision));
  }

  const RadiusEstimate ec_radius = radius_estimate(valuation_profile(ec), 1);
  r.cases.push_back(rational_case({{"series", "e_C"}, {"N", str(order)}, {"statement", "last slope = -(q^N-1)/((q-1)q^N)"},
                                   {"direction", to_string(ec_radius.direction)}},
                                  ec_radius.last_slope, "==",
                                  -(q_pow(q, order) - 1) / (Rational(q - 1) * q_pow(q, order))));
  r.cases.push_back(rational_case({{"series", "e_C"}, {"N", str(order)}, {"statement", "last slope > -1/(q-1)"}},
                                  ec_radius.last_slope, ">", Rational(-1) / Rational(q - 1)));
  const RadiusEstimate x_radius = radius_estimate(valuation_profile(rhs), 1);
  r.cases.push_back(rational_case({{"series", "e_C(x t)"}, {"N", str(order)}, {"statement", "last slope = 1 - (1 - q^-N)/(q-1)"},
                                   {"direction", to_string(x_radius.direction)}},
                                  x_radius.last_slope, "==",
                                  1 - (1 - 1 / q_pow(q, order)) / Rational(q - 1)));
  return r;
}

CheckReport check_polylog_odes(const ff::FieldPtr& field, int n_max, int order, const Exponent& precision) {
  if (n_max < 2) throw std::invalid_argument("polylog_odes needs n_max >= 2");
  if (order < 1) throw std::invalid_argument("polylog_odes needs order >= 1");
  CheckReport r = new_report("polylog_odes", field,
                             {{"n_max", str(n_max)}, {"order", str(order)}, {"precision", str(precision)}});
  std::vector<QLinearSeries> l;  // l[n] for n = 1..n_max
  l.emplace_back(field);
  for (int n = 1; n <= n_max; ++n) l.push_back(special::polylog(field, n, order, precision));

  // d takes a q-th root, so l_1 is computed q times deeper.
  const QLinearSeries dl = carlitz::carlitz_d(special::polylog(field, 1, order, precision * Rational(field->q())));
  const QLinearSeries ode = carlitz::sub(dl, carlitz::tau(dl));
  std::vector<GenSeries> t_coeffs(static_cast<std::size_t>(ode.order() + 1), GenSeries(field));
  t_coeffs[0] = GenSeries::one(field);
  for (int k = 0; k <= ode.order(); ++k) {
    r.cases.push_back(identity_case({{"k", str(k)}, {"statement", "(1 - tau) d l_1 = t"}}, ode.coeff(k),
                                    t_coeffs[static_cast<std::size_t>(k)], precision));
  }
  for (int n = 2; n <= n_max; ++n) {
    const QLinearSeries dn = carlitz::delta(l[static_cast<std::size_t>(n)]);
    for (int j = 0; j <= order; ++j) {
      r.cases.push_back(identity_case({{"n", str(n)}, {"j", str(j)}, {"statement", "Delta l_n = l_(n-1)"}}, dn.coeff(j),
                                      l[static_cast<std::size_t>(n - 1)].coeff(j), precision));
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    const QLinearSeries& ln = l[static_cast<std::size_t>(n)];
    const QLinearSeries diff = carlitz::sub(ln, carlitz::substitute_q_power(ln));
    const QLinearSeries closed = special::overconvergent_polylog(field, n, order, precision);
    for (int j = 0; j <= order; ++j) {
      r.cases.push_back(identity_case({{"n", str(n)}, {"j", str(j)}, {"statement", "L_n = l_n(t) - l_n(t^q)"}},
                                      diff.coeff(j), closed.coeff(j), precision));
    }
  }
  return r;
}

CheckReport check_identity_23(const ff::FieldPtr& field, int n_max, int samples, std::uint64_t seed,
                              const Exponent& precision) {
  if (n_max < 1) throw std::invalid_argument("identity_23 needs n_max >= 1");
  CheckReport r = new_report("identity_23", field,
                             {{"n_max", str(n_max)}, {"samples", str(samples)}, {"seed", str(seed)},
                              {"precision", str(precision)}});
  std::vector<std::pair<std::string, GenSeries>> params{
      {"0", GenSeries(field)}, {"[1]", bracket(field, 1)}, {"[2]", bracket(field, 2)}};
  std::mt19937_64 rng(seed);
  const int degree = std::max(0, static_cast<int>(floor(precision)) - 1);
  for (int s = 0; s < samples; ++s) {
    params.emplace_back("unit#" + str(s), special::sample_unit(field, rng, degree));
  }
  for (const auto& [label, a] : params) {
    const GenSeries shifted = special::t1_shift(a);
    for (int n = 1; n <= n_max; ++n) {
      const GenSeries lhs = special::pochhammer(a, n);
      const GenSeries rhs = series::neg(
          series::mul(series::q_power_n(a, n), series::q_power(special::pochhammer(shifted, n - 1))));
      r.cases.push_back(identity_case({{"a", label}, {"n", str(n)}, {"statement", "<a>_n = -a^(q^n) <T1 a>_(n-1)^q"}},
                                      lhs, rhs, precision));
    }
  }
  return r;
}

std::vector<UnitTriple> sample_unit_triples(const ff::FieldPtr& field, int count, std::uint64_t seed,
                                            const Exponent& precision, int order) {
  std::mt19937_64 rng(seed);
  const int degree = std::max(0, static_cast<int>(ceil(precision)) - 1);
  std::vector<UnitTriple> out;
  while (static_cast<int>(out.size()) < count) {
    UnitTriple t{special::sample_unit(field, rng, degree), special::sample_unit(field, rng, degree),
                 special::sample_unit(field, rng, degree)};
    if (special::admissible({t.a, t.b, t.c}, order)) out.push_back(std::move(t));
  }
  return out;
}

CheckReport check_identity_24(const ff::FieldPtr& field, int n_max, int samples, std::uint64_t seed,
                              const Exponent& precision, int radius_order) {
  if (n_max < 0) throw std::invalid_argument("identity_24 needs n_max >= 0");
  const std::uint32_t q = field->q();
  CheckReport r = new_report("identity_24", field,
                             {{"n_max", str(n_max)}, {"samples", str(samples)}, {"seed", str(seed)},
                              {"precision", str(precision)}, {"radius_order", str(radius_order)}});
  // Both sides come out known below about q unit_prec - (q^n - 1)/(q - 1);
  // this keeps them resolved past the cancellation at q^n - (q^n - 1)/(q - 1).
  const Exponent unit_prec = std::max<Exponent>(precision, (precision + q_pow(q, n_max)) / Rational(q));
  const Exponent target = unit_prec * Rational(q);
  const int order = std::max(n_max, radius_order);
  const auto triples = sample_unit_triples(field, samples, seed, unit_prec, order);
  const GenSeries x = x_series(field);

  for (std::size_t s = 0; s < triples.size(); ++s) {
    const UnitTriple& t = triples[s];
    const QLinearSeries f = special::hypergeom({t.a, t.b, t.c}, n_max, target);
    const QLinearSeries f1 = special::hypergeom(
        {special::t1_shift(t.a), special::t1_shift(t.b), special::t1_shift(t.c)}, n_max, target);
    const GenSeries lambda = series::mul(series::mul(t.a, t.b), series::inv(t.c));
    const QLinearSeries lhs =
        carlitz::sub(carlitz::tau(carlitz::scale_argument(f1, lambda)), carlitz::scale(f, x));
    const QLinearSeries rhs = negate(carlitz::scale_argument(f, x));
    const std::string label = "triple#" + str(static_cast<int>(s));
    for (int k = 0; k <= n_max; ++k) {
      r.cases.push_back(identity_case(
          {{"params", label}, {"k", str(k)}, {"statement", "tau F(T1 a,T1 b;T1 c;(ab/c) t) - x F = -F(x t)"}},
          lhs.coeff(k), rhs.coeff(k), precision));
    }

    // For unit parameters v(c_n(F)) only depends on the constant terms.
    const Exponent low(1);
    const QLinearSeries f_low = special::hypergeom(
        {series::truncate(t.a, low), series::truncate(t.b, low), series::truncate(t.c, low)}, order, low);
    const ValuationProfile profile = valuation_profile(carlitz::scale_argument(f_low, x));
    const RadiusEstimate radius = radius_estimate(profile, 1);
    const Rational limit = 1 - Rational(1) / Rational(q - 1);
    r.cases.push_back(rational_case({{"params", label}, {"N", str(order)},
                                     {"statement", "last slope of F(x t) = 1 - (1 - q^-N)/(q-1)"},
                                     {"direction", to_string(radius.direction)}},
                                    radius.last_slope, "==", 1 - (1 - 1 / q_pow(q, order)) / Rational(q - 1)));
    r.cases.push_back(rational_case({{"params", label}, {"N", str(order)},
                                     {"statement", "radius exponent of F(x t) >= 1 - 1/(q-1)"}},
                                    radius.exponent, ">=", limit));
    std::optional<Rational> prev;
    for (const auto& entry : profile.entries) {
      if (entry.index < 1) continue;
      if (prev && entry.valuation.exact()) {
        r.cases.push_back(rational_case(
            {{"params", label}, {"k", str(entry.index)}, {"statement", "slope_(k-1) >= slope_k"}}, *prev, ">=",
            *entry.slope));
      }
      prev = entry.valuation.exact() ? entry.slope : std::nullopt;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"identity_18", "identity_23", "identity_24", "l_sequence",
                                              "polylog_odes", "prop1",       "prop2",       "prop3"};
  return names;
}

CheckReport run_check(const std::string& name, const ff::FieldPtr& field, const CheckSettings& settings) {
  const int n = settings.order;
  const Exponent& p = settings.precision;
  if (name == "identity_18") return check_identity_18(field, n, p);
  if (name == "identity_23") return check_identity_23(field, std::min(n, 6), 20, settings.seed, p);
  if (name == "identity_24") return check_identity_24(field, std::min(n, 5), 10, settings.seed, p, n);
  if (name == "l_sequence") return check_l_sequence(field, std::max(n, 12));
  if (name == "polylog_odes") return check_polylog_odes(field, 4, n, p);
  if (name == "prop1") return check_prop1(field, n);
  if (name == "prop2") return check_prop2(field, n, std::min(n, 8), p);
  if (name == "prop3") return check_prop3(field, 4, n, p);
  throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const ff::FieldPtr& field,
                                    const CheckSettings& settings, unsigned jobs) {
  std::vector<std::string> sorted = names;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::optional<CheckReport>> results(sorted.size());
  std::vector<std::exception_ptr> errors(sorted.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < sorted.size(); i = next++) {
      try {
        results[i] = run_check(sorted[i], field, settings);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(sorted.size(), 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<CheckReport> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*results[i]));
  }
  return out;
}

}  // namespace overconv::analysis
