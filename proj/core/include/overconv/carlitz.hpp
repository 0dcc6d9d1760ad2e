#pragma once

#include <vector>

#include "overconv/series.hpp"

namespace overconv::carlitz {

using series::Exponent;
using series::GenSeries;

/// F_q-linear series sum_{k=0}^{N} c_k t^{q^k} with GenSeries coefficients.
/// Only indices 0..order() are known; operators work coefficientwise.
class QLinearSeries {
 public:
  explicit QLinearSeries(ff::FieldPtr field, std::vector<GenSeries> coeffs = {});

  /// u(t) = t.
  static QLinearSeries identity(const ff::FieldPtr& field);
  /// Exact zero coefficients at indices 0..order.
  static QLinearSeries zero(const ff::FieldPtr& field, int order);

  const ff::FieldPtr& field_ptr() const { return field_; }
  const ff::Field& field() const { return *field_; }
  /// N, or -1 when there are no coefficients.
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const GenSeries& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<GenSeries>& coeffs() const { return coeffs_; }

  /// Keeps indices 0..order.
  QLinearSeries truncated(int order) const;

 private:
  ff::FieldPtr field_;
  std::vector<GenSeries> coeffs_;
};

/// Coefficientwise sum and difference over the common index range.
QLinearSeries add(const QLinearSeries& u, const QLinearSeries& v);
QLinearSeries sub(const QLinearSeries& u, const QLinearSeries& v);
/// Multiplies every coefficient by the series s (e.g. x · u).
QLinearSeries scale(const QLinearSeries& u, const GenSeries& s);

/// [n] = x^{q^n} - x for n >= 1, [0] = 0.
GenSeries bracket(const ff::FieldPtr& field, int n);

/// D_0 = 1, D_n = [n] D_{n-1}^q. Exact and sparse (at most 2^n terms).
/// Throws ExponentOverflow when q^n leaves the exponent budget.
GenSeries carlitz_factorial(const ff::FieldPtr& field, int n);

/// Memoized [n] and D_n for n = 0..max_n, built eagerly; read-only afterwards.
class BracketCache {
 public:
  BracketCache(ff::FieldPtr field, int max_n);

  int max_n() const { return static_cast<int>(factorials_.size()) - 1; }
  const GenSeries& bracket(int n) const { return brackets_.at(static_cast<std::size_t>(n)); }
  const GenSeries& factorial(int n) const { return factorials_.at(static_cast<std::size_t>(n)); }

 private:
  std::vector<GenSeries> brackets_;
  std::vector<GenSeries> factorials_;
};

/// Carlitz exponential sum t^{q^k} / D_k to order N; coefficients are known
/// below x^prec.
QLinearSeries carlitz_exp(const ff::FieldPtr& field, int order, const Exponent& prec);

/// Δu(t) = u(xt) - x u(t): (Δu)_k = c_k [k].
QLinearSeries delta(const QLinearSeries& u);

/// τu = u^q: (τu)_0 = 0, (τu)_{k+1} = c_k^q. The order grows by one.
QLinearSeries tau(const QLinearSeries& u);

/// Carlitz derivative d = q-th root ∘ Δ: (du)_k = (c_{k+1} [k+1])^{1/q}.
/// The order drops by one.
QLinearSeries carlitz_d(const QLinearSeries& u);

/// u(a t + b t^q): r_0 = c_0 a, r_n = c_n a^{q^n} + c_{n-1} b^{q^{n-1}}.
QLinearSeries compose_linear(const QLinearSeries& u, const GenSeries& a, const GenSeries& b);

/// u(λ t): r_n = c_n λ^{q^n}.
QLinearSeries scale_argument(const QLinearSeries& u, const GenSeries& lambda);

/// u(t^q): r_0 = 0, r_n = c_{n-1}. Unlike τ, coefficients are not raised to
/// the q-th power.
QLinearSeries substitute_q_power(const QLinearSeries& u);

/// sum_k c_k t0^{q^k}. The result precision is the smallest cap among the
/// summands. Throws DivergenceSuspected unless term valuations strictly
/// increase over the last `tail_window` indices.
GenSeries evaluate(const QLinearSeries& u, const GenSeries& t0, int tail_window = 3);

/// Compares coefficients 0..min(order) with equal_to_precision.
bool equal_to_precision(const QLinearSeries& u, const QLinearSeries& v);

}  // namespace overconv::carlitz
