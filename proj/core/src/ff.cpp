#include "overconv/ff.hpp"

#include <stdexcept>

#include "overconv/errors.hpp"

namespace overconv::ff {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_from_code(std::uint32_t code, std::uint32_t p, std::uint32_t len) {
  Poly a(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    a[i] = code % p;
    code /= p;
  }
  return a;
}

std::uint32_t to_code(const Poly& a, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t b = 1; b < p; ++b) {
    if ((a * b) % p == 1) return b;
  }
  throw DivisionByZero("no inverse mod p");
}

// Remainder of a by b; b must be nonzero.
Poly poly_rem(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint32_t factor = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p * p - (factor * b[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  Poly prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
  }
  return poly_rem(std::move(prod), f, p);
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t d = static_cast<std::uint32_t>(f.size() - 1);
  // Trial division by every monic polynomial of degree 1..d/2.
  for (std::uint32_t k = 1; k <= d / 2; ++k) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint32_t c = 0; c < count; ++c) {
      Poly g = poly_from_code(c, p, k);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  while (e) {
    if (e & 1u) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1u;
  }
  return result;
}

}  // namespace

FieldPtr Field::create(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw std::invalid_argument("extension degree m must be positive");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < 2 * m; ++i) {
    order *= p;
    if (order > kMaxOrder) throw std::invalid_argument("q^2 exceeds 2^16");
  }
  return FieldPtr(new Field(p, m));
}

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  q_ = 1;
  for (std::uint32_t i = 0; i < m; ++i) q_ *= p;
  order_ = q_ * q_;
  group_order_ = order_ - 1;
  const std::uint32_t d = 2 * m;

  for (std::uint32_t c = 0;; ++c) {
    Poly f = poly_from_code(c, p, d);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  const auto factors = prime_factors(group_order_);
  std::uint32_t gen_code = 0;
  for (std::uint32_t c = 1; c < order_; ++c) {
    Poly a = poly_from_code(c, p, d);
    trim(a);
    bool primitive = true;
    for (std::uint32_t r : factors) {
      const Poly t = poly_powmod(a, group_order_ / r, modulus_, p);
      if (t.size() == 1 && t[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen_code = c;
      break;
    }
  }

  exp_.assign(group_order_, 0);
  log_.assign(order_, 0);
  Poly g = poly_from_code(gen_code, p, d);
  trim(g);
  Poly cur{1};
  for (std::uint32_t k = 0; k < group_order_; ++k) {
    const std::uint32_t code = to_code(cur, p);
    exp_[k] = code;
    log_[code] = k;
    cur = poly_mulmod(cur, g, modulus_, p);
  }

  zech_.assign(group_order_, 0);
  for (std::uint32_t k = 0; k < group_order_; ++k) {
    Poly a = poly_from_code(exp_[k], p, d);
    a[0] = (a[0] + 1) % p;
    const std::uint32_t code = to_code(a, p);
    zech_[k] = code == 0 ? 0 : log_[code] + 1;
  }

  minus_one_ = p == 2 ? one() : FieldElement::from_raw(group_order_ / 2 + 1);
}

FieldElement Field::generator() const { return FieldElement::from_raw(order_ > 2 ? 2 : 1); }

FieldElement Field::from_int(std::int64_t n) const {
  const auto r = static_cast<std::uint32_t>(((n % static_cast<std::int64_t>(p_)) + p_) % p_);
  return from_code(r);
}

std::uint32_t Field::code(FieldElement a) const {
  if (a.is_zero()) return 0;
  return exp_[a.raw() - 1];
}

FieldElement Field::from_code(std::uint32_t code) const {
  if (code >= order_) throw std::out_of_range("element code out of range");
  if (code == 0) return zero();
  return FieldElement::from_raw(log_[code] + 1);
}

std::vector<std::uint32_t> Field::coefficients(FieldElement a) const {
  return poly_from_code(code(a), p_, degree());
}

std::uint32_t Field::log(FieldElement a) const {
  if (a.is_zero()) throw DivisionByZero("log of zero");
  return a.raw() - 1;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::uint32_t i = a.raw() - 1;
  const std::uint32_t j = b.raw() - 1;
  const std::uint32_t diff = j >= i ? j - i : j + group_order_ - i;
  const std::uint32_t z = zech_[diff];
  if (z == 0) return zero();
  std::uint32_t k = i + (z - 1);
  if (k >= group_order_) k -= group_order_;
  return FieldElement::from_raw(k + 1);
}

FieldElement Field::neg(FieldElement a) const { return p_ == 2 ? a : mul(a, minus_one_); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  std::uint32_t k = (a.raw() - 1) + (b.raw() - 1);
  if (k >= group_order_) k -= group_order_;
  return FieldElement::from_raw(k + 1);
}

FieldElement Field::inv(FieldElement a) const {
  if (a.is_zero()) throw DivisionByZero("inverse of zero in F_q^2");
  const std::uint32_t i = a.raw() - 1;
  return FieldElement::from_raw((i == 0 ? 0 : group_order_ - i) + 1);
}

FieldElement Field::pow(FieldElement a, std::int64_t e) const {
  if (e == 0) return one();
  if (a.is_zero()) {
    if (e < 0) throw DivisionByZero("negative power of zero");
    return zero();
  }
  const auto n = static_cast<std::int64_t>(group_order_);
  const std::int64_t r = ((e % n) + n) % n;
  const auto k = static_cast<std::uint64_t>(a.raw() - 1) * static_cast<std::uint64_t>(r) % group_order_;
  return FieldElement::from_raw(static_cast<std::uint32_t>(k) + 1);
}

FieldElement Field::q_power(FieldElement a) const {
  if (a.is_zero()) return a;
  const auto k = static_cast<std::uint64_t>(a.raw() - 1) * q_ % group_order_;
  return FieldElement::from_raw(static_cast<std::uint32_t>(k) + 1);
}

bool Field::in_prime_field(FieldElement a) const { return code(a) < p_; }

FieldElement Field::sigma_unit() const {
  if (p_ == 2) return one();
  return FieldElement::from_raw((q_ + 1) / 2 + 1);
}

std::string Field::to_string(FieldElement a) const {
  if (in_prime_field(a)) return std::to_string(code(a));
  return "g^" + std::to_string(a.raw() - 1);
}

}  // namespace overconv::ff
