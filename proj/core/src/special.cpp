#include "overconv/special.hpp"

#include <stdexcept>

#include "overconv/errors.hpp"

namespace overconv::special {

using carlitz::bracket;
using carlitz::carlitz_factorial;

namespace {

// σ^{q^n} as an exact monomial.
GenSeries sigma_power(const ff::FieldPtr& field, int n) { return series::q_power_n(series::sigma(field), n); }

}  // namespace

QLinearSeries dwork_carlitz(const ff::FieldPtr& field, int order, const Exponent& prec) {
  const GenSeries s = series::sigma(field);
  // c_n σ^{q^n} has cap v(σ^{q^n}) + cap(c_n) >= cap(c_n), so e_C at prec suffices.
  const QLinearSeries ec = carlitz::carlitz_exp(field, order, prec);
  QLinearSeries e = carlitz::compose_linear(ec, s, series::neg(s));
  std::vector<GenSeries> out;
  for (const auto& c : e.coeffs()) out.push_back(series::truncate(c, prec));
  return QLinearSeries(field, std::move(out));
}

GenSeries dwork_coefficient(const ff::FieldPtr& field, int n, const Exponent& prec) {
  if (n < 0) throw std::invalid_argument("coefficient index must be nonnegative");
  if (n == 0) return series::truncate(series::sigma(field), prec);
  const GenSeries hi = series::div(sigma_power(field, n), carlitz_factorial(field, n), prec);
  const GenSeries lo = series::div(sigma_power(field, n - 1), carlitz_factorial(field, n - 1), prec);
  return series::sub(hi, lo);
}

QLinearSeries dwork_carlitz_explicit(const ff::FieldPtr& field, int order, const Exponent& prec) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  std::vector<GenSeries> out;
  std::vector<GenSeries> quotients;  // σ^{q^n}/D_n
  GenSeries d = GenSeries::one(field);
  GenSeries s_pow = series::sigma(field);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      d = series::mul(bracket(field, n), series::q_power(d));
      s_pow = series::q_power(s_pow);
    }
    quotients.push_back(series::div(s_pow, d, prec));
    out.push_back(n == 0 ? quotients[0] : series::sub(quotients[static_cast<std::size_t>(n)],
                                                        quotients[static_cast<std::size_t>(n - 1)]));
  }
  return QLinearSeries(field, std::move(out));
}

SpecialValueEntry special_value_entry(const ff::FieldPtr& field, int n, const Exponent& prec) {
  if (n < 0) throw std::invalid_argument("partial sum index must be nonnegative");
  const GenSeries s = series::sigma(field);
  SpecialValueEntry e{n, GenSeries(field), GenSeries(field), false, {}, {}, {}};

  GenSeries sum = series::truncate(s, prec);
  for (int k = 1; k <= n; ++k) sum = series::add(sum, dwork_coefficient(field, k, prec));
  e.partial_sum = sum;
  e.telescoped = series::div(sigma_power(field, n), carlitz_factorial(field, n), prec);
  e.forms_agree = series::equal_to_precision(e.partial_sum, e.telescoped);

  e.valuation = e.telescoped.valuation_info();
  e.distance_to_sigma = series::sub(e.telescoped, s).valuation_info();
  const GenSeries x = GenSeries::from_x_power(field, Exponent(1));
  e.equation_residual =
      series::add(series::pow(e.telescoped, static_cast<std::int64_t>(field->q()) - 1), x).valuation_info();
  return e;
}

SpecialValueTrace dwork_special_value(const ff::FieldPtr& field, int n_max, const Exponent& prec) {
  SpecialValueTrace trace;
  for (int n = 1; n <= n_max; ++n) trace.entries.push_back(special_value_entry(field, n, prec));
  return trace;
}

QLinearSeries polylog(const ff::FieldPtr& field, int n, int order, const Exponent& prec) {
  if (n < 1) throw std::invalid_argument("polylogarithm index must be >= 1");
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  std::vector<GenSeries> out{GenSeries(field)};
  for (int j = 1; j <= order; ++j) out.push_back(series::inv(series::pow(bracket(field, j), n), prec));
  return QLinearSeries(field, std::move(out));
}

QLinearSeries overconvergent_polylog(const ff::FieldPtr& field, int n, int order, const Exponent& prec) {
  if (n < 1) throw std::invalid_argument("polylogarithm index must be >= 1");
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  std::vector<GenSeries> out{GenSeries(field)};
  GenSeries previous(field);
  for (int j = 1; j <= order; ++j) {
    GenSeries current = series::inv(series::pow(bracket(field, j), n), prec);
    out.push_back(j == 1 ? current : series::sub(current, previous));
    previous = std::move(current);
  }
  return QLinearSeries(field, std::move(out));
}

GenSeries pochhammer(const GenSeries& a, int n) {
  if (n < 0) throw std::invalid_argument("Pochhammer index must be nonnegative");
  const ff::FieldPtr& field = a.field_ptr();
  GenSeries result = GenSeries::one(field);
  for (int k = 0; k < n; ++k) {
    const GenSeries factor = series::q_power_n(series::sub(bracket(field, k), a), n - k);
    result = series::mul(result, factor);
  }
  return result;
}

std::vector<GenSeries> pochhammer_sequence(const GenSeries& a, int n_max) {
  if (n_max < 0) throw std::invalid_argument("Pochhammer index must be nonnegative");
  const ff::FieldPtr& field = a.field_ptr();
  std::vector<GenSeries> out{GenSeries::one(field)};
  for (int n = 1; n <= n_max; ++n) {
    const GenSeries factor = series::q_power(series::sub(bracket(field, n - 1), a));
    out.push_back(series::mul(series::q_power(out.back()), factor));
  }
  return out;
}

GenSeries t1_shift(const GenSeries& a) { return series::q_root(series::sub(a, bracket(a.field_ptr(), 1))); }

bool admissible(const HypergeomParams& params, int order) {
  const ff::FieldPtr& field = params.c.field_ptr();
  for (int k = 0; k <= order; ++k) {
    if (series::sub(params.c, bracket(field, k)).empty()) return false;
  }
  const GenSeries x = GenSeries::from_x_power(field, Exponent(1));
  return !series::add(params.c, x).empty();
}

QLinearSeries hypergeom(const HypergeomParams& params, int order, const Exponent& prec) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  const ff::FieldPtr& field = params.a.field_ptr();
  series::require_same_field(params.a, params.b);
  series::require_same_field(params.a, params.c);
  const auto pa = pochhammer_sequence(params.a, order);
  const auto pb = pochhammer_sequence(params.b, order);
  const auto pc = pochhammer_sequence(params.c, order);

  std::vector<GenSeries> out;
  GenSeries d = GenSeries::one(field);
  for (int n = 0; n <= order; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (n > 0) d = series::mul(bracket(field, n), series::q_power(d));
    if (pc[i].empty()) {
      throw InadmissibleParameter("<c>_" + std::to_string(n) + " vanishes: c hits a bracket value");
    }
    const GenSeries num = series::mul(pa[i], pb[i]);
    out.push_back(series::div(num, series::mul(pc[i], d), prec));
  }
  return QLinearSeries(field, std::move(out));
}

ff::FieldElement sample_base_field(const ff::Field& field, std::mt19937_64& rng, bool nonzero) {
  const std::uint64_t q = field.q();
  const std::uint64_t r = nonzero ? 1 + rng() % (q - 1) : rng() % q;
  if (r == 0) return field.zero();
  // F_q^* is generated by g^{q+1}.
  return field.pow(field.generator(), static_cast<std::int64_t>((field.q() + 1) * (r - 1)));
}

GenSeries sample_unit(const ff::FieldPtr& field, std::mt19937_64& rng, int degree) {
  if (degree < 0) throw std::invalid_argument("unit degree must be nonnegative");
  std::vector<series::Term> terms;
  for (int i = 0; i <= degree; ++i) {
    terms.push_back({Exponent(i), sample_base_field(*field, rng, i == 0)});
  }
  return GenSeries::from_terms(field, std::move(terms), Exponent(degree + 1));
}

Exponent precision_budget(const ff::Field& field, const Exponent& target, int nested_roots) {
  if (nested_roots < 0) throw std::invalid_argument("nested root count must be nonnegative");
  return target * Rational(ipow(field.q(), static_cast<unsigned>(nested_roots)));
}

}  // namespace overconv::special
