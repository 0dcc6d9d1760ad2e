#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "overconv/ff.hpp"
#include "overconv/rational.hpp"

namespace overconv::series {

/// Exact rational exponent of x.
using Exponent = Rational;

struct Term {
  Exponent exponent;
  ff::FieldElement coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// What is known about the valuation of a series.
struct ValuationInfo {
  enum class Kind {
    kExact,    // least stored exponent
    kAtLeast,  // no terms below the precision cap; value is the cap
    kInfinite  // exact zero
  };

  Kind kind = Kind::kInfinite;
  Exponent value = 0;

  bool exact() const { return kind == Kind::kExact; }
  /// True when the valuation is certainly >= bound.
  bool at_least(const Exponent& bound) const { return kind == Kind::kInfinite || value >= bound; }
  /// "5/2", ">=200" or "inf".
  std::string to_string() const;
};

/// Truncated generalized Laurent series over F_{q^2}:
///   sum of c_e x^e for rational e with denominators dividing (q-1) q^ram,
/// known modulo terms of exponent >= prec. A missing prec means the series is
/// exact (a finite sum, as for brackets and Carlitz factorials).
///
/// Internally every exponent and the cap are stored as int64 numerators over
/// the lattice denominator (q-1) q^ram, with ram kept minimal. Terms are sorted,
/// unique and nonzero, and every stored exponent lies below the cap. Values
/// are immutable; operations return new series.
class GenSeries {
 public:
  using LatticeTerm = std::pair<std::int64_t, ff::FieldElement>;

  /// Exact zero.
  explicit GenSeries(ff::FieldPtr field);

  static GenSeries zero(ff::FieldPtr field, std::optional<Exponent> prec = std::nullopt);
  static GenSeries one(ff::FieldPtr field, std::optional<Exponent> prec = std::nullopt);
  static GenSeries constant(ff::FieldPtr field, ff::FieldElement c,
                            std::optional<Exponent> prec = std::nullopt);
  static GenSeries monomial(ff::FieldPtr field, ff::FieldElement c, const Exponent& r,
                            std::optional<Exponent> prec = std::nullopt);
  static GenSeries from_x_power(ff::FieldPtr field, const Exponent& r,
                                std::optional<Exponent> prec = std::nullopt);
  /// Sums duplicate exponents, drops zero coefficients and terms at or above prec.
  static GenSeries from_terms(ff::FieldPtr field, std::vector<Term> terms,
                              std::optional<Exponent> prec = std::nullopt);
  /// Builds directly from lattice numerators over (q-1) q^ram. Terms may come in
  /// any order; duplicates are summed.
  static GenSeries from_lattice(ff::FieldPtr field, int ram, std::vector<LatticeTerm> terms,
                                std::optional<std::int64_t> prec);

  const ff::FieldPtr& field_ptr() const { return field_; }
  const ff::Field& field() const { return *field_; }

  bool is_exact() const { return !prec_.has_value(); }
  std::optional<Exponent> precision() const;
  int ram() const { return ram_; }
  std::int64_t lattice_denominator() const;
  std::span<const LatticeTerm> lattice_terms() const { return terms_; }
  std::optional<std::int64_t> lattice_precision() const { return prec_; }

  std::vector<Term> terms() const;
  std::size_t size() const { return terms_.size(); }
  /// No stored terms: exact zero or zero to precision.
  bool empty() const { return terms_.empty(); }
  bool is_exact_zero() const { return terms_.empty() && !prec_; }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Coefficient at x^r (zero when absent). Throws std::out_of_range when r is at
  /// or above the cap, where the coefficient is unknown.
  ff::FieldElement coefficient(const Exponent& r) const;
  ff::FieldElement leading_coefficient() const;
  /// Least stored exponent. Throws ZeroToPrecision when there are no terms.
  Exponent valuation() const;
  ValuationInfo valuation_info() const;

  /// e.g. "x^18 - x^12 - x^10 + x^4" or "x^(-4) + O(x^200)".
  std::string to_string() const;

  /// Structural equality: same field, precision and terms.
  friend bool operator==(const GenSeries& a, const GenSeries& b);

  friend GenSeries operator+(const GenSeries& a, const GenSeries& b);
  friend GenSeries operator-(const GenSeries& a, const GenSeries& b);
  friend GenSeries operator-(const GenSeries& a);
  friend GenSeries operator*(const GenSeries& a, const GenSeries& b);

 private:
  GenSeries(ff::FieldPtr field, int ram, std::vector<LatticeTerm> terms,
            std::optional<std::int64_t> prec);

  void normalize();

  ff::FieldPtr field_;
  int ram_ = 0;
  std::vector<LatticeTerm> terms_;
  std::optional<std::int64_t> prec_;

  friend struct SeriesAccess;
};

GenSeries add(const GenSeries& a, const GenSeries& b);
GenSeries neg(const GenSeries& a);
GenSeries sub(const GenSeries& a, const GenSeries& b);
/// Coefficientwise multiplication by a constant.
GenSeries scale(const GenSeries& a, ff::FieldElement c);

/// Truncated product. The cap is min(v(a) + prec_b, v(b) + prec_a), where a
/// series with no terms contributes its cap as valuation.
GenSeries mul(const GenSeries& a, const GenSeries& b);

/// Inverse by leading-term peel-off and a sparse recurrence for 1/(1 + h).
/// The result cap is prec_a - 2 v(a), further limited by `cap` when given.
/// Exact monomials invert exactly; other exact series need a cap.
/// Throws DivisionByZero on exact zero, ZeroToPrecision on a series without
/// terms, PrecisionRequired on an exact multi-term series without a cap.
GenSeries inv(const GenSeries& a, std::optional<Exponent> cap = std::nullopt);

/// num / den with the inverse computed just precisely enough that the quotient
/// is known below `target` (when the inputs allow), then truncated to target.
GenSeries div(const GenSeries& num, const GenSeries& den, std::optional<Exponent> target);

/// a^e; negative e goes through inv with the given cap.
GenSeries pow(const GenSeries& a, std::int64_t e, std::optional<Exponent> cap = std::nullopt);

/// a^q: exponents and cap times q, coefficients through the field Frobenius.
GenSeries q_power(const GenSeries& a);
/// k-fold q_power.
GenSeries q_power_n(const GenSeries& a, int k);
/// Unique b with b^q = a: exponents and cap divided by q.
GenSeries q_root(const GenSeries& a);
GenSeries q_root_n(const GenSeries& a, int k);

/// sigma = c x^{1/(q-1)} with c = Field::sigma_unit(), so sigma^{q-1} = -x.
GenSeries sigma(const ff::FieldPtr& field, std::optional<Exponent> prec = std::nullopt);

Exponent valuation(const GenSeries& a);
/// Terms agree below the smaller of the two caps.
bool equal_to_precision(const GenSeries& a, const GenSeries& b);
/// Drops terms at or above new_prec; cap becomes min(prec, new_prec).
GenSeries truncate(const GenSeries& a, const Exponent& new_prec);
/// min of the two caps (nullopt when both are exact).
std::optional<Exponent> common_precision(const GenSeries& a, const GenSeries& b);

/// Throws ConfigMismatch unless both series live over the same (p, m).
void require_same_field(const GenSeries& a, const GenSeries& b);

}  // namespace overconv::series
