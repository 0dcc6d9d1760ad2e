#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace overconv::ff {

/// Element of F_{q^2} stored as a discrete-log index: 0 is zero, k + 1 is g^k
/// for the canonical generator g. The representation is canonical, so
/// equality is representation equality.
class FieldElement {
 public:
  constexpr FieldElement() = default;

  static constexpr FieldElement from_raw(std::uint32_t raw) { return FieldElement(raw); }

  constexpr std::uint32_t raw() const { return raw_; }
  constexpr bool is_zero() const { return raw_ == 0; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  constexpr explicit FieldElement(std::uint32_t raw) : raw_(raw) {}
  std::uint32_t raw_ = 0;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The coefficient tower F_p ⊂ F_q ⊂ F_{q^2}, q = p^m.
///
/// F_{q^2} is built as F_p[y]/(f) where f is the smallest monic irreducible of
/// degree 2m, comparing coefficient sequences from the top degree down (that
/// is, by the base-p integer code of the lower coefficients). The canonical
/// generator g is the primitive element with the smallest polynomial code.
/// Both choices are deterministic, so element indices are stable across runs.
///
/// Arithmetic goes through log/antilog and Zech tables; a Field is immutable
/// after construction and safe to share between threads.
class Field {
 public:
  /// Largest supported q^2.
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Throws std::invalid_argument unless p is prime, m >= 1 and q^2 <= 2^16.
  static FieldPtr create(std::uint32_t p, std::uint32_t m);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  /// Number of elements of F_{q^2}.
  std::uint32_t order() const { return order_; }
  /// Degree 2m of F_{q^2} over F_p.
  std::uint32_t degree() const { return 2 * m_; }
  /// Coefficients f_0..f_{2m} of the defining modulus, f_{2m} = 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement{}; }
  FieldElement one() const { return FieldElement::from_raw(1); }
  FieldElement minus_one() const { return minus_one_; }
  FieldElement generator() const;
  /// n · 1, reduced mod p.
  FieldElement from_int(std::int64_t n) const;

  /// Polynomial code sum a_i p^i of the coefficient sequence over F_p.
  std::uint32_t code(FieldElement a) const;
  /// Throws std::out_of_range for codes >= q^2.
  FieldElement from_code(std::uint32_t code) const;
  /// Coefficient sequence a_0..a_{2m-1} over F_p.
  std::vector<std::uint32_t> coefficients(FieldElement a) const;
  /// Discrete log base g; a must be nonzero.
  std::uint32_t log(FieldElement a) const;
  bool contains(FieldElement a) const { return a.raw() < order_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws DivisionByZero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  /// Negative exponents go through inv; 0^0 = 1.
  FieldElement pow(FieldElement a, std::int64_t e) const;

  /// a^q, the generator of Gal(F_{q^2}/F_q).
  FieldElement q_power(FieldElement a) const;
  /// Unique b with b^q = a. Equals q_power(a) because the q-power map has
  /// order two on F_{q^2}.
  FieldElement q_root(FieldElement a) const { return q_power(a); }
  /// True iff a lies in the subfield F_q.
  bool in_base_field(FieldElement a) const { return q_power(a) == a; }
  /// True iff a lies in the prime field F_p.
  bool in_prime_field(FieldElement a) const;

  /// c with c^{q-1} = -1: 1 in characteristic two, g^{(q+1)/2} otherwise.
  FieldElement sigma_unit() const;

  /// Short human-readable form: the integer value for prime-field elements,
  /// "g^k" otherwise.
  std::string to_string(FieldElement a) const;

  bool operator==(const Field& other) const { return p_ == other.p_ && m_ == other.m_; }

 private:
  Field(std::uint32_t p, std::uint32_t m);

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::uint32_t order_;
  std::uint32_t group_order_;  // q^2 - 1
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;   // log -> code
  std::vector<std::uint32_t> log_;   // code -> log (code 0 unused)
  std::vector<std::uint32_t> zech_;  // d -> raw(1 + g^d)
  FieldElement minus_one_;
};

bool is_prime(std::uint32_t n);

}  // namespace overconv::ff
