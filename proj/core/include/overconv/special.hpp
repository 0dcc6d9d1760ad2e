#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "overconv/carlitz.hpp"
#include "overconv/series.hpp"

namespace overconv::special {

using carlitz::QLinearSeries;
using series::Exponent;
using series::GenSeries;
using series::ValuationInfo;

// ---------------------------------------------------------------------------
// Dwork–Carlitz exponential E(t) = e_C(σ(t - t^q)).

/// E to order N by substituting t <- σt - σt^q into e_C. Coefficients are
/// known at least below x^prec.
QLinearSeries dwork_carlitz(const ff::FieldPtr& field, int order, const Exponent& prec);

/// Same coefficients from the closed form
///   c_0 = σ,  c_n = σ^{q^n}/D_n - σ^{q^{n-1}}/D_{n-1}.
QLinearSeries dwork_carlitz_explicit(const ff::FieldPtr& field, int order, const Exponent& prec);

/// Single closed-form coefficient c_n, known below x^prec.
GenSeries dwork_coefficient(const ff::FieldPtr& field, int n, const Exponent& prec);

/// One partial sum S_N of E(1).
struct SpecialValueEntry {
  int n = 0;
  GenSeries partial_sum;  // σ + sum_{k=1}^{N} c_k
  GenSeries telescoped;   // σ^{q^N} / D_N
  bool forms_agree = false;
  ValuationInfo valuation;          // v(S_N)
  ValuationInfo distance_to_sigma;  // v(S_N - σ)
  ValuationInfo equation_residual;  // v(S_N^{q-1} + x)
};

struct SpecialValueTrace {
  std::vector<SpecialValueEntry> entries;
};

/// S_N computed both by direct summation and by telescoping, every term known
/// below x^prec.
SpecialValueEntry special_value_entry(const ff::FieldPtr& field, int n, const Exponent& prec);

/// Entries for N = 1..n_max.
SpecialValueTrace dwork_special_value(const ff::FieldPtr& field, int n_max, const Exponent& prec);

// ---------------------------------------------------------------------------
// Polylogarithms.

/// l_n(t) = sum_{j>=1} t^{q^j} / [j]^n to order N.
QLinearSeries polylog(const ff::FieldPtr& field, int n, int order, const Exponent& prec);

/// L_n(t) = l_n(t) - l_n(t^q) from the closed form
///   c_1 = 1/[1]^n,  c_j = 1/[j]^n - 1/[j-1]^n  (j >= 2).
QLinearSeries overconvergent_polylog(const ff::FieldPtr& field, int n, int order, const Exponent& prec);

// ---------------------------------------------------------------------------
// Pochhammer symbols, the T1 shift and the hypergeometric series.

/// <a>_0 = 1, <a>_n = prod_{k=0}^{n-1} ([k] - a)^{q^{n-k}}, by direct product.
GenSeries pochhammer(const GenSeries& a, int n);

/// <a>_0..<a>_{n_max} through <a>_n = (<a>_{n-1})^q ([n-1] - a)^q.
std::vector<GenSeries> pochhammer_sequence(const GenSeries& a, int n_max);

/// T1(a) = (a - [1])^{1/q}. Raises the ramification by one.
GenSeries t1_shift(const GenSeries& a);

struct HypergeomParams {
  GenSeries a;
  GenSeries b;
  GenSeries c;
};

/// c - [k] has terms for every k < order and c != -x = [∞].
bool admissible(const HypergeomParams& params, int order);

/// F(a,b;c;t) = sum <a>_n <b>_n / (<c>_n D_n) t^{q^n} to order N, coefficients
/// known below x^prec where the inputs allow. Throws InadmissibleParameter when
/// some <c>_n has no terms.
QLinearSeries hypergeom(const HypergeomParams& params, int order, const Exponent& prec);

// ---------------------------------------------------------------------------
// Parameter sampling and precision budgeting.

/// Random unit ζ_0 + ζ_1 x + ... + ζ_d x^d with ζ_i in F_q and ζ_0 != 0,
/// known below x^{d+1}. Draws come straight from the engine (no std
/// distributions) so a seed gives the same unit on every platform.
GenSeries sample_unit(const ff::FieldPtr& field, std::mt19937_64& rng, int degree);

/// Uniform element of F_q ⊂ F_{q^2}.
ff::FieldElement sample_base_field(const ff::Field& field, std::mt19937_64& rng, bool nonzero);

/// Base precision needed so that a result reached through `nested_roots`
/// q-th roots is still known below `target`: target · q^nested_roots.
Exponent precision_budget(const ff::Field& field, const Exponent& target, int nested_roots);

}  // namespace overconv::special
