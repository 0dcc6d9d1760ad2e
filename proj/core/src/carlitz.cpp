#include "overconv/carlitz.hpp"

#include <algorithm>
#include <stdexcept>

#include "overconv/errors.hpp"

namespace overconv::carlitz {

using series::ValuationInfo;

QLinearSeries::QLinearSeries(ff::FieldPtr field, std::vector<GenSeries> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == *field_)) throw ConfigMismatch("coefficient over a different field");
  }
}

QLinearSeries QLinearSeries::identity(const ff::FieldPtr& field) {
  return QLinearSeries(field, {GenSeries::one(field)});
}

QLinearSeries QLinearSeries::zero(const ff::FieldPtr& field, int order) {
  return QLinearSeries(field, std::vector<GenSeries>(static_cast<std::size_t>(order + 1), GenSeries(field)));
}

QLinearSeries QLinearSeries::truncated(int order) const {
  const auto n = static_cast<std::size_t>(std::clamp(order + 1, 0, static_cast<int>(coeffs_.size())));
  return QLinearSeries(field_, std::vector<GenSeries>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

QLinearSeries add(const QLinearSeries& u, const QLinearSeries& v) {
  const int n = std::min(u.order(), v.order());
  std::vector<GenSeries> out;
  for (int k = 0; k <= n; ++k) out.push_back(series::add(u.coeff(k), v.coeff(k)));
  return QLinearSeries(u.field_ptr(), std::move(out));
}

QLinearSeries sub(const QLinearSeries& u, const QLinearSeries& v) {
  const int n = std::min(u.order(), v.order());
  std::vector<GenSeries> out;
  for (int k = 0; k <= n; ++k) out.push_back(series::sub(u.coeff(k), v.coeff(k)));
  return QLinearSeries(u.field_ptr(), std::move(out));
}

QLinearSeries scale(const QLinearSeries& u, const GenSeries& s) {
  std::vector<GenSeries> out;
  for (const auto& c : u.coeffs()) out.push_back(series::mul(c, s));
  return QLinearSeries(u.field_ptr(), std::move(out));
}

GenSeries bracket(const ff::FieldPtr& field, int n) {
  if (n < 0) throw std::invalid_argument("bracket index must be nonnegative");
  if (n == 0) return GenSeries(field);
  const Exponent top = Exponent(ipow(field->q(), static_cast<unsigned>(n)));
  return GenSeries::from_terms(field, {{top, field->one()}, {Exponent(1), field->minus_one()}});
}

GenSeries carlitz_factorial(const ff::FieldPtr& field, int n) {
  if (n < 0) throw std::invalid_argument("factorial index must be nonnegative");
  GenSeries d = GenSeries::one(field);
  for (int k = 1; k <= n; ++k) d = series::mul(bracket(field, k), series::q_power(d));
  return d;
}

BracketCache::BracketCache(ff::FieldPtr field, int max_n) {
  if (max_n < 0) throw std::invalid_argument("cache size must be nonnegative");
  GenSeries d = GenSeries::one(field);
  for (int k = 0; k <= max_n; ++k) {
    brackets_.push_back(carlitz::bracket(field, k));
    if (k > 0) d = series::mul(brackets_.back(), series::q_power(d));
    factorials_.push_back(d);
  }
}

QLinearSeries carlitz_exp(const ff::FieldPtr& field, int order, const Exponent& prec) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  std::vector<GenSeries> coeffs;
  GenSeries d = GenSeries::one(field);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) d = series::mul(bracket(field, k), series::q_power(d));
    coeffs.push_back(series::inv(d, prec));
  }
  return QLinearSeries(field, std::move(coeffs));
}

QLinearSeries delta(const QLinearSeries& u) {
  std::vector<GenSeries> out;
  for (int k = 0; k <= u.order(); ++k) out.push_back(series::mul(u.coeff(k), bracket(u.field_ptr(), k)));
  return QLinearSeries(u.field_ptr(), std::move(out));
}

QLinearSeries tau(const QLinearSeries& u) {
  if (u.order() < 0) return u;
  std::vector<GenSeries> out{GenSeries(u.field_ptr())};
  for (const auto& c : u.coeffs()) out.push_back(series::q_power(c));
  return QLinearSeries(u.field_ptr(), std::move(out));
}

QLinearSeries carlitz_d(const QLinearSeries& u) {
  std::vector<GenSeries> out;
  for (int k = 0; k + 1 <= u.order(); ++k) {
    out.push_back(series::q_root(series::mul(u.coeff(k + 1), bracket(u.field_ptr(), k + 1))));
  }
  return QLinearSeries(u.field_ptr(), std::move(out));
}

QLinearSeries compose_linear(const QLinearSeries& u, const GenSeries& a, const GenSeries& b) {
  std::vector<GenSeries> out;
  GenSeries a_pow = a;  // a^{q^n}
  GenSeries b_pow = b;  // b^{q^{n-1}}
  for (int n = 0; n <= u.order(); ++n) {
    GenSeries r = series::mul(u.coeff(n), a_pow);
    if (n > 0) {
      r = series::add(r, series::mul(u.coeff(n - 1), b_pow));
      b_pow = series::q_power(b_pow);
    }
    out.push_back(std::move(r));
    a_pow = series::q_power(a_pow);
  }
  return QLinearSeries(u.field_ptr(), std::move(out));
}

QLinearSeries scale_argument(const QLinearSeries& u, const GenSeries& lambda) {
  std::vector<GenSeries> out;
  GenSeries l_pow = lambda;
  for (int n = 0; n <= u.order(); ++n) {
    out.push_back(series::mul(u.coeff(n), l_pow));
    if (n < u.order()) l_pow = series::q_power(l_pow);
  }
  return QLinearSeries(u.field_ptr(), std::move(out));
}

QLinearSeries substitute_q_power(const QLinearSeries& u) {
  if (u.order() < 0) return u;
  std::vector<GenSeries> out{GenSeries(u.field_ptr())};
  for (const auto& c : u.coeffs()) out.push_back(c);
  return QLinearSeries(u.field_ptr(), std::move(out));
}

GenSeries evaluate(const QLinearSeries& u, const GenSeries& t0, int tail_window) {
  if (u.order() < 0 || t0.is_exact_zero()) return GenSeries(u.field_ptr());
  std::vector<GenSeries> terms;
  GenSeries t_pow = t0;
  for (int k = 0; k <= u.order(); ++k) {
    terms.push_back(series::mul(u.coeff(k), t_pow));
    if (k < u.order()) t_pow = series::q_power(t_pow);
  }

  const int n = static_cast<int>(terms.size());
  const int start = std::max(0, n - std::max(tail_window, 1));
  for (int k = start + 1; k < n; ++k) {
    const ValuationInfo prev = terms[static_cast<std::size_t>(k - 1)].valuation_info();
    const ValuationInfo cur = terms[static_cast<std::size_t>(k)].valuation_info();
    if (cur.kind == ValuationInfo::Kind::kInfinite) continue;
    if (prev.kind == ValuationInfo::Kind::kInfinite || !(cur.value > prev.value)) {
      throw DivergenceSuspected("term valuations do not increase at index " + std::to_string(k) + ": " +
                                prev.to_string() + " then " + cur.to_string());
    }
  }

  GenSeries sum(u.field_ptr());
  for (const auto& t : terms) sum = series::add(sum, t);
  return sum;
}

bool equal_to_precision(const QLinearSeries& u, const QLinearSeries& v) {
  const int n = std::min(u.order(), v.order());
  for (int k = 0; k <= n; ++k) {
    if (!series::equal_to_precision(u.coeff(k), v.coeff(k))) return false;
  }
  return true;
}

}  // namespace overconv::carlitz
