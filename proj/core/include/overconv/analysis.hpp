#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "overconv/carlitz.hpp"
#include "overconv/rational.hpp"
#include "overconv/series.hpp"

namespace overconv::analysis {

using carlitz::QLinearSeries;
using series::Exponent;
using series::GenSeries;
using series::ValuationInfo;

// ---------------------------------------------------------------------------
// Valuation profiles and radius estimates.

struct ProfileEntry {
  int index = 0;
  ValuationInfo valuation;
  /// v(c_k) / q^k; a lower bound when the valuation is only known as >= cap.
  std::optional<Rational> slope;
};

/// Per-coefficient valuations of sum c_k t^{q^k}. Exact-zero coefficients are
/// skipped; coefficients without terms below their cap are kept as ">= cap".
struct ValuationProfile {
  std::uint32_t q = 0;
  std::vector<ProfileEntry> entries;
};

ValuationProfile valuation_profile(const QLinearSeries& u);

enum class TailDirection { kConstant, kNondecreasing, kNonincreasing, kMixed };

std::string to_string(TailDirection d);

/// Convergence-radius estimate from the Newton slopes v(c_k)/q^k.
///
/// sum c_k t^{q^k} converges at t0 iff v(c_k) + q^k v(t0) -> +inf, so with
/// r = liminf v(c_k)/q^k the series converges for v(t0) > -r, i.e. |t0| < q^r.
/// `exponent` is the finite-order estimate of r: the last computed slope when
/// the tail is monotone, otherwise the tail minimum. A nondecreasing tail
/// certifies tail_min <= r.
struct RadiusEstimate {
  Rational exponent;
  Rational tail_min;
  Rational last_slope;
  int tail_start = 0;
  int last_index = 0;
  bool monotone_tail = false;
  TailDirection direction = TailDirection::kMixed;
  bool certified_lower_bound = false;
};

/// Uses only entries with exact valuations at index >= tail_start. Throws
/// InsufficientTail when there are none.
RadiusEstimate radius_estimate(const ValuationProfile& profile, int tail_start);

// ---------------------------------------------------------------------------
// l_n = q l_{n-1} + 1, l_1 = q.

struct LSequence {
  std::uint32_t q = 0;
  std::vector<BigInt> recurrence;   // l_1..l_N
  std::vector<BigInt> closed_form;  // (q^n - 1)/(q - 1) + (q - 1) q^{n-1}
  bool agree = false;
};

LSequence l_sequence(std::uint32_t q, int n_max);

// ---------------------------------------------------------------------------
// Check reports.

using Params = std::vector<std::pair<std::string, std::string>>;

/// One verified statement. `measured` and `bound` are exact rational strings
/// (or "inf" for an exact zero difference). `relation` says how they are
/// compared: ">=", ">" or "==". For identities, measured is the valuation of
/// LHS - RHS (">=cap" style agreement is reported with measured_exact = false)
/// and bound is the precision both sides are known to.
struct CheckCase {
  Params inputs;
  std::string measured;
  bool measured_exact = true;
  std::string relation = ">=";
  std::string bound;
  std::optional<std::string> paper_bound;
  bool pass = false;
};

struct CheckReport {
  std::string name;
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  Params params;
  std::vector<CheckCase> cases;

  bool pass() const;
};

/// v(D_n - (-1)^n x^{(q^n-1)/(q-1)}) >= l_n for 1 <= n <= n_max, plus the
/// l-sequence recurrence/closed-form agreement and
/// (q^{n+2} - q)/(q - 1) - l_{n+1} = q^n - 1.
CheckReport check_prop1(const ff::FieldPtr& field, int n_max);

/// Recurrence vs closed form for l_1..l_{n_max} and the identity above.
CheckReport check_l_sequence(const ff::FieldPtr& field, int n_max);

/// Dwork–Carlitz coefficient bounds and slopes for n <= n_max, the partial
/// sums S_N of E(1) = σ for N <= sum_max, and the overconvergence slope
/// (q-1)/q^2. Precision adapts upward from `precision` until every reported
/// valuation is exact.
CheckReport check_prop2(const ff::FieldPtr& field, int n_max, int sum_max, const Exponent& precision);

/// v(c_j(L_n)) >= q^{j-1} - n - 1 for n <= n_max, 2 <= j <= order, with the
/// printed bound q^{j-1} - n + 1 carried alongside; radius tail towards 1/q.
CheckReport check_prop3(const ff::FieldPtr& field, int n_max, int order, const Exponent& precision);

/// τ e_C + x e_C = e_C(xt) and d e_C = e_C coefficientwise, plus the e_C and
/// e_C(xt) radius slopes.
CheckReport check_identity_18(const ff::FieldPtr& field, int order, const Exponent& precision);

/// (1 - τ) d l_1 = t, Δ l_n = l_{n-1} for 2 <= n <= n_max, and
/// L_n = l_n(t) - l_n(t^q) for n <= n_max.
CheckReport check_polylog_odes(const ff::FieldPtr& field, int n_max, int order, const Exponent& precision);

/// <a>_n = -a^{q^n} (<T1 a>_{n-1})^q for a in {0, [1], [2]} and `samples`
/// seeded random units, 1 <= n <= n_max.
CheckReport check_identity_23(const ff::FieldPtr& field, int n_max, int samples, std::uint64_t seed,
                              const Exponent& precision);

/// τ F(T1a,T1b;T1c; (ab/c) t) - x F(a,b;c;t) = -F(a,b;c;xt) at indices
/// 0..n_max for `samples` seeded unit triples, plus the slope of F(a,b;c;xt)
/// at order radius_order.
CheckReport check_identity_24(const ff::FieldPtr& field, int n_max, int samples, std::uint64_t seed,
                              const Exponent& precision, int radius_order);

// ---------------------------------------------------------------------------
// Running checks.

struct CheckSettings {
  int order = 8;
  Exponent precision = 200;
  std::uint64_t seed = 0;
};

/// Canonical check names in report order.
const std::vector<std::string>& check_names();

/// Runs one named check with the grid derived from settings. Throws
/// std::invalid_argument for unknown names.
CheckReport run_check(const std::string& name, const ff::FieldPtr& field, const CheckSettings& settings);

/// Runs the named checks on up to `jobs` threads. The result is sorted by
/// check name and does not depend on `jobs`.
std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const ff::FieldPtr& field,
                                    const CheckSettings& settings, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Series used by radius reports.

/// Dwork–Carlitz coefficients to `order`, each computed at a precision raised
/// from `precision` until its valuation is exact.
QLinearSeries resolved_dwork_carlitz(const ff::FieldPtr& field, int order, const Exponent& precision);

/// Seeded admissible unit triple for hypergeometric checks, each unit known
/// below x^precision.
struct UnitTriple {
  GenSeries a;
  GenSeries b;
  GenSeries c;
};
std::vector<UnitTriple> sample_unit_triples(const ff::FieldPtr& field, int count, std::uint64_t seed,
                                            const Exponent& precision, int order);

}  // namespace overconv::analysis
