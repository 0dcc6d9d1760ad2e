#include "overconv/series.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "overconv/errors.hpp"

namespace overconv::series {

namespace {

using LatticeTerm = GenSeries::LatticeTerm;
using ff::FieldElement;

constexpr std::int64_t kDenseLimit = std::int64_t{1} << 23;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ExponentOverflow("exponent lattice overflow in multiplication");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ExponentOverflow("exponent lattice overflow in addition");
  return r;
}

std::int64_t q_pow(std::int64_t q, int s) {
  std::int64_t r = 1;
  for (int i = 0; i < s; ++i) r = checked_mul(r, q);
  return r;
}

std::int64_t lattice_den(const ff::Field& f, int ram) {
  return checked_mul(static_cast<std::int64_t>(f.q()) - 1, q_pow(f.q(), ram));
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ExponentOverflow("exponent does not fit the 64-bit lattice");
  }
  return static_cast<std::int64_t>(v);
}

// Smallest s with denominator(r) | (q-1) q^s, if any fits in 64 bits.
std::optional<int> find_ram(const Rational& r, const ff::Field& f) {
  const BigInt& den = boost::multiprecision::denominator(r);
  for (int s = 0; s < 63; ++s) {
    BigInt d = BigInt(f.q() - 1) * ipow(f.q(), static_cast<unsigned>(s));
    if (d > std::numeric_limits<std::int64_t>::max()) break;
    if (d % den == 0) return s;
  }
  return std::nullopt;
}

int required_ram(const Rational& r, const ff::Field& f) {
  if (auto s = find_ram(r, f)) return *s;
  throw std::invalid_argument("exponent " + to_string(r) + " is not on the lattice 1/((q-1) q^s)");
}

// Ramification at which a cap is represented exactly; caps off every lattice
// are rounded up at the terms' own level.
int cap_ram(int ram, const std::optional<Rational>& prec, const ff::Field& f) {
  if (!prec) return ram;
  const auto s = find_ram(*prec, f);
  return s ? std::max(ram, *s) : ram;
}

std::int64_t exact_lattice(const Rational& r, std::int64_t den) {
  const Rational scaled = r * den;
  if (boost::multiprecision::denominator(scaled) != 1) {
    throw std::invalid_argument("exponent " + to_string(r) + " is off the series lattice");
  }
  return to_int64(boost::multiprecision::numerator(scaled));
}

std::int64_t ceil_lattice(const Rational& r, std::int64_t den) { return to_int64(ceil(r * den)); }

Rational from_lattice_value(std::int64_t n, std::int64_t den) { return Rational(BigInt(n), BigInt(den)); }

std::vector<LatticeTerm> scaled_terms(std::span<const LatticeTerm> terms, std::int64_t factor) {
  std::vector<LatticeTerm> out(terms.begin(), terms.end());
  if (factor != 1) {
    for (auto& t : out) t.first = checked_mul(t.first, factor);
  }
  return out;
}

std::optional<std::int64_t> scaled_prec(std::optional<std::int64_t> prec, std::int64_t factor) {
  if (!prec) return std::nullopt;
  return checked_mul(*prec, factor);
}

std::optional<std::int64_t> min_prec(std::optional<std::int64_t> a, std::optional<std::int64_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

// Grants the free functions access to the lattice constructor.
struct SeriesAccess {
  static GenSeries make(ff::FieldPtr field, int ram, std::vector<LatticeTerm> terms,
                        std::optional<std::int64_t> prec) {
    return GenSeries(std::move(field), ram, std::move(terms), prec);
  }
  static std::vector<LatticeTerm> terms_at(const GenSeries& a, int ram) {
    return scaled_terms(a.terms_, q_pow(a.field().q(), ram - a.ram_));
  }
  static std::optional<std::int64_t> prec_at(const GenSeries& a, int ram) {
    return scaled_prec(a.prec_, q_pow(a.field().q(), ram - a.ram_));
  }
};

std::string ValuationInfo::to_string() const {
  switch (kind) {
    case Kind::kExact:
      return overconv::to_string(value);
    case Kind::kAtLeast:
      return ">=" + overconv::to_string(value);
    case Kind::kInfinite:
      break;
  }
  return "inf";
}

GenSeries::GenSeries(ff::FieldPtr field) : field_(std::move(field)) {}

GenSeries::GenSeries(ff::FieldPtr field, int ram, std::vector<LatticeTerm> terms,
                     std::optional<std::int64_t> prec)
    : field_(std::move(field)), ram_(ram), terms_(std::move(terms)), prec_(prec) {
  normalize();
}

void GenSeries::normalize() {
  const std::int64_t q = field_->q();
  while (ram_ > 0) {
    if (prec_ && *prec_ % q != 0) return;
    for (const auto& t : terms_) {
      if (t.first % q != 0) return;
    }
    if (prec_) *prec_ /= q;
    for (auto& t : terms_) t.first /= q;
    --ram_;
  }
}

GenSeries GenSeries::from_lattice(ff::FieldPtr field, int ram, std::vector<LatticeTerm> terms,
                                  std::optional<std::int64_t> prec) {
  if (ram < 0) throw std::invalid_argument("negative ramification");
  const ff::Field& f = *field;
  std::sort(terms.begin(), terms.end(),
            [](const LatticeTerm& a, const LatticeTerm& b) { return a.first < b.first; });
  std::vector<LatticeTerm> merged;
  merged.reserve(terms.size());
  for (const auto& t : terms) {
    if (prec && t.first >= *prec) break;
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second = f.add(merged.back().second, t.second);
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const LatticeTerm& t) { return t.second.is_zero(); });
  return GenSeries(std::move(field), ram, std::move(merged), prec);
}

GenSeries GenSeries::from_terms(ff::FieldPtr field, std::vector<Term> terms, std::optional<Exponent> prec) {
  int ram = 0;
  for (const auto& t : terms) ram = std::max(ram, required_ram(t.exponent, *field));
  ram = cap_ram(ram, prec, *field);
  const std::int64_t den = lattice_den(*field, ram);
  std::vector<LatticeTerm> lattice;
  lattice.reserve(terms.size());
  for (const auto& t : terms) {
    if (!field->contains(t.coeff)) throw std::invalid_argument("coefficient outside the field");
    lattice.emplace_back(exact_lattice(t.exponent, den), t.coeff);
  }
  std::optional<std::int64_t> p;
  if (prec) p = ceil_lattice(*prec, den);
  return from_lattice(std::move(field), ram, std::move(lattice), p);
}

GenSeries GenSeries::zero(ff::FieldPtr field, std::optional<Exponent> prec) {
  return from_terms(std::move(field), {}, std::move(prec));
}

GenSeries GenSeries::one(ff::FieldPtr field, std::optional<Exponent> prec) {
  const auto c = field->one();
  return constant(std::move(field), c, std::move(prec));
}

GenSeries GenSeries::constant(ff::FieldPtr field, FieldElement c, std::optional<Exponent> prec) {
  return monomial(std::move(field), c, Exponent(0), std::move(prec));
}

GenSeries GenSeries::monomial(ff::FieldPtr field, FieldElement c, const Exponent& r,
                              std::optional<Exponent> prec) {
  return from_terms(std::move(field), {Term{r, c}}, std::move(prec));
}

GenSeries GenSeries::from_x_power(ff::FieldPtr field, const Exponent& r, std::optional<Exponent> prec) {
  const auto one = field->one();
  return monomial(std::move(field), one, r, std::move(prec));
}

std::optional<Exponent> GenSeries::precision() const {
  if (!prec_) return std::nullopt;
  return from_lattice_value(*prec_, lattice_denominator());
}

std::int64_t GenSeries::lattice_denominator() const { return lattice_den(*field_, ram_); }

std::vector<Term> GenSeries::terms() const {
  const std::int64_t den = lattice_denominator();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(Term{from_lattice_value(e, den), c});
  return out;
}

FieldElement GenSeries::coefficient(const Exponent& r) const {
  if (prec_ && r >= *precision()) throw std::out_of_range("coefficient at or above the precision cap");
  const Rational scaled = r * lattice_denominator();
  if (boost::multiprecision::denominator(scaled) != 1) return field_->zero();
  const BigInt n = boost::multiprecision::numerator(scaled);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
    return field_->zero();
  }
  const auto key = static_cast<std::int64_t>(n);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const LatticeTerm& t, std::int64_t k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) return it->second;
  return field_->zero();
}

FieldElement GenSeries::leading_coefficient() const {
  if (terms_.empty()) throw ZeroToPrecision("leading coefficient of a series without terms");
  return terms_.front().second;
}

Exponent GenSeries::valuation() const {
  if (terms_.empty()) throw ZeroToPrecision("valuation of a series without terms below its cap");
  return from_lattice_value(terms_.front().first, lattice_denominator());
}

ValuationInfo GenSeries::valuation_info() const {
  if (!terms_.empty()) return {ValuationInfo::Kind::kExact, valuation()};
  if (prec_) return {ValuationInfo::Kind::kAtLeast, *precision()};
  return {ValuationInfo::Kind::kInfinite, Exponent(0)};
}

std::string GenSeries::to_string() const {
  std::string out;
  const std::int64_t den = lattice_denominator();
  for (const auto& [e, c] : terms_) {
    const Rational r = from_lattice_value(e, den);
    const bool negative = field_->p() != 2 && c == field_->minus_one();
    const bool unit = c == field_->one() || negative;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (r == 0) {
      mono = unit ? "1" : field_->to_string(c);
    } else {
      std::string power = "x";
      if (r != 1) {
        const std::string rs = overconv::to_string(r);
        power += (boost::multiprecision::denominator(r) == 1 && r > 0) ? "^" + rs : "^(" + rs + ")";
      }
      mono = unit ? power : field_->to_string(c) + "*" + power;
    }
    out += mono;
  }
  if (prec_) {
    const std::string ps = overconv::to_string(*precision());
    out += (out.empty() ? "O(x^" : " + O(x^") + (ps.find_first_of("/-") == std::string::npos ? ps : "(" + ps + ")") + ")";
  }
  if (out.empty()) out = "0";
  return out;
}

bool operator==(const GenSeries& a, const GenSeries& b) {
  return *a.field_ == *b.field_ && a.ram_ == b.ram_ && a.prec_ == b.prec_ && a.terms_ == b.terms_;
}

void require_same_field(const GenSeries& a, const GenSeries& b) {
  if (!(a.field() == b.field())) {
    throw ConfigMismatch("series over different fields: q=" + std::to_string(a.field().q()) +
                         " vs q=" + std::to_string(b.field().q()));
  }
}

GenSeries add(const GenSeries& a, const GenSeries& b) {
  require_same_field(a, b);
  const ff::Field& f = a.field();
  const int s = std::max(a.ram(), b.ram());
  const auto ta = SeriesAccess::terms_at(a, s);
  const auto tb = SeriesAccess::terms_at(b, s);
  const auto prec = min_prec(SeriesAccess::prec_at(a, s), SeriesAccess::prec_at(b, s));

  std::vector<LatticeTerm> out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    LatticeTerm next;
    if (j == tb.size() || (i < ta.size() && ta[i].first < tb[j].first)) {
      next = ta[i++];
    } else if (i == ta.size() || tb[j].first < ta[i].first) {
      next = tb[j++];
    } else {
      next = {ta[i].first, f.add(ta[i].second, tb[j].second)};
      ++i;
      ++j;
    }
    if (prec && next.first >= *prec) break;
    if (!next.second.is_zero()) out.push_back(next);
  }
  return SeriesAccess::make(a.field_ptr(), s, std::move(out), prec);
}

GenSeries neg(const GenSeries& a) { return scale(a, a.field().minus_one()); }

GenSeries sub(const GenSeries& a, const GenSeries& b) { return add(a, neg(b)); }

GenSeries scale(const GenSeries& a, FieldElement c) {
  if (c.is_zero()) return GenSeries(a.field_ptr());
  std::vector<LatticeTerm> terms(a.lattice_terms().begin(), a.lattice_terms().end());
  for (auto& t : terms) t.second = a.field().mul(t.second, c);
  return SeriesAccess::make(a.field_ptr(), a.ram(), std::move(terms), a.lattice_precision());
}

GenSeries mul(const GenSeries& a, const GenSeries& b) {
  require_same_field(a, b);
  if (a.is_exact_zero() || b.is_exact_zero()) return GenSeries(a.field_ptr());
  const ff::Field& f = a.field();
  const int s = std::max(a.ram(), b.ram());
  const auto ta = SeriesAccess::terms_at(a, s);
  const auto tb = SeriesAccess::terms_at(b, s);
  const auto pa = SeriesAccess::prec_at(a, s);
  const auto pb = SeriesAccess::prec_at(b, s);
  const std::int64_t va = ta.empty() ? *pa : ta.front().first;
  const std::int64_t vb = tb.empty() ? *pb : tb.front().first;

  std::optional<std::int64_t> prec;
  if (pb) prec = checked_add(va, *pb);
  if (pa) prec = min_prec(prec, checked_add(vb, *pa));
  if (ta.empty() || tb.empty()) return SeriesAccess::make(a.field_ptr(), s, {}, prec);

  if (ta.size() == 1 || tb.size() == 1) {
    const bool a_mono = ta.size() == 1;
    const auto [me, mc] = a_mono ? ta.front() : tb.front();
    std::vector<LatticeTerm> out;
    for (const auto& [e, c] : a_mono ? tb : ta) {
      const std::int64_t t = checked_add(e, me);
      if (prec && t >= *prec) break;
      out.emplace_back(t, f.mul(c, mc));
    }
    return SeriesAccess::make(a.field_ptr(), s, std::move(out), prec);
  }

  const std::int64_t lo = checked_add(ta.front().first, tb.front().first);
  std::int64_t hi = checked_add(checked_add(ta.back().first, tb.back().first), 1);
  if (prec) hi = std::min(hi, *prec);
  if (hi <= lo) return SeriesAccess::make(a.field_ptr(), s, {}, prec);

  const std::int64_t span = hi - lo;
  const auto pairs = static_cast<std::int64_t>(std::min<std::size_t>(ta.size() * tb.size(), kDenseLimit));
  std::vector<LatticeTerm> out;
  if (span <= kDenseLimit && span <= std::max<std::int64_t>(4096, 16 * pairs)) {
    std::vector<FieldElement> acc(static_cast<std::size_t>(span));
    for (const auto& [ea, ca] : ta) {
      for (const auto& [eb, cb] : tb) {
        const std::int64_t e = ea + eb;
        if (e >= hi) break;
        auto& slot = acc[static_cast<std::size_t>(e - lo)];
        slot = f.add(slot, f.mul(ca, cb));
      }
    }
    for (std::int64_t k = 0; k < span; ++k) {
      if (!acc[static_cast<std::size_t>(k)].is_zero()) out.emplace_back(lo + k, acc[static_cast<std::size_t>(k)]);
    }
    return SeriesAccess::make(a.field_ptr(), s, std::move(out), prec);
  }

  // Sparse path: collect products, then sort and merge.
  std::vector<LatticeTerm> raw;
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      const std::int64_t e = ea + eb;
      if (e >= hi) break;
      raw.emplace_back(e, f.mul(ca, cb));
    }
  }
  return GenSeries::from_lattice(a.field_ptr(), s, std::move(raw), prec);
}

GenSeries inv(const GenSeries& a, std::optional<Exponent> cap) {
  if (a.is_exact_zero()) throw DivisionByZero("inverse of exact zero series");
  if (a.empty()) throw ZeroToPrecision("inverse of a series that is zero to precision " + to_string(*a.precision()));
  const ff::Field& f = a.field();
  const int s = a.ram();
  const auto terms = a.lattice_terms();
  const std::int64_t v = terms.front().first;
  const FieldElement lead_inv = f.inv(terms.front().second);

  std::optional<std::int64_t> prec;
  if (a.lattice_precision()) prec = checked_add(*a.lattice_precision(), checked_mul(-2, v));
  if (cap) prec = min_prec(prec, ceil_lattice(*cap, a.lattice_denominator()));

  if (a.is_monomial()) {
    std::vector<LatticeTerm> out;
    if (!prec || -v < *prec) out.emplace_back(-v, lead_inv);
    return SeriesAccess::make(a.field_ptr(), s, std::move(out), prec);
  }
  if (!prec) throw PrecisionRequired("inverse of an exact multi-term series needs a precision cap");

  // 1/a = lead^{-1} x^{-v} (1 + h)^{-1}; w = (1 + h)^{-1} is needed mod x^R.
  std::int64_t rel = checked_add(*prec, v);
  if (rel <= 0) return SeriesAccess::make(a.field_ptr(), s, {}, prec);
  std::vector<LatticeTerm> h;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const std::int64_t e = terms[i].first - v;
    if (e >= rel) break;
    h.emplace_back(e, f.mul(terms[i].second, lead_inv));
  }

  // w lives on multiples of g = gcd of the exponents of h; run the recurrence
  // on the compressed lattice e / g.
  std::int64_t g = 0;
  for (const auto& t : h) g = std::gcd(g, t.first);
  if (g == 0) g = 1;
  for (auto& t : h) t.first /= g;
  const std::int64_t full_rel = rel;
  rel = (rel + g - 1) / g;

  // w_0 = 1, w_e = -sum_i h_i w_{e - e_i}; each finished w_e pushes its
  // contributions forward.
  std::vector<LatticeTerm> w;
  auto push = [&](std::int64_t e, FieldElement we, auto&& slot_at) {
    w.emplace_back(e, we);
    const FieldElement minus_we = f.neg(we);
    for (const auto& [he, hc] : h) {
      const std::int64_t target = e + he;
      if (target >= rel) break;
      FieldElement& slot = slot_at(target);
      slot = f.add(slot, f.mul(hc, minus_we));
    }
  };
  if (!h.empty() && rel <= kDenseLimit) {
    std::vector<FieldElement> acc(static_cast<std::size_t>(rel));
    auto slot_at = [&](std::int64_t e) -> FieldElement& { return acc[static_cast<std::size_t>(e)]; };
    acc[0] = f.one();
    for (std::int64_t e = 0; e < rel; ++e) {
      const FieldElement we = acc[static_cast<std::size_t>(e)];
      if (!we.is_zero()) push(e, we, slot_at);
    }
  } else {
    std::map<std::int64_t, FieldElement> pending;
    auto slot_at = [&](std::int64_t e) -> FieldElement& { return pending[e]; };
    pending[0] = f.one();
    while (!pending.empty()) {
      const auto [e, we] = *pending.begin();
      pending.erase(pending.begin());
      if (!we.is_zero()) push(e, we, slot_at);
    }
  }

  std::vector<LatticeTerm> out;
  out.reserve(w.size());
  for (const auto& [e, c] : w) {
    if (e * g < full_rel) out.emplace_back(e * g - v, f.mul(c, lead_inv));
  }
  return SeriesAccess::make(a.field_ptr(), s, std::move(out), prec);
}

GenSeries div(const GenSeries& num, const GenSeries& den, std::optional<Exponent> target) {
  require_same_field(num, den);
  if (num.is_exact_zero()) {
    if (den.empty()) (void)inv(den);  // throws
    return GenSeries(num.field_ptr());
  }
  std::optional<Exponent> cap;
  if (target) cap = *target - (num.empty() ? *num.precision() : num.valuation());
  GenSeries quotient = mul(num, inv(den, cap));
  if (target) quotient = truncate(quotient, *target);
  return quotient;
}

GenSeries pow(const GenSeries& a, std::int64_t e, std::optional<Exponent> cap) {
  if (e == 0) return GenSeries::one(a.field_ptr());
  if (e < 0) return inv(pow(a, -e), std::move(cap));
  if (a.is_exact_zero()) return a;
  if (a.is_monomial()) {
    const auto [v, c] = a.lattice_terms().front();
    std::optional<std::int64_t> prec;
    if (a.lattice_precision()) prec = checked_add(checked_mul(e - 1, v), *a.lattice_precision());
    std::vector<LatticeTerm> out{{checked_mul(v, e), a.field().pow(c, e)}};
    return GenSeries::from_lattice(a.field_ptr(), a.ram(), std::move(out), prec);
  }
  GenSeries result = GenSeries::one(a.field_ptr());
  GenSeries base = a;
  bool first = true;
  while (e) {
    if (e & 1) {
      result = first ? base : mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

GenSeries q_power(const GenSeries& a) {
  const ff::Field& f = a.field();
  const std::int64_t q = f.q();
  std::vector<LatticeTerm> terms(a.lattice_terms().begin(), a.lattice_terms().end());
  for (auto& t : terms) {
    t.first = checked_mul(t.first, q);
    t.second = f.q_power(t.second);
  }
  return SeriesAccess::make(a.field_ptr(), a.ram(), std::move(terms), scaled_prec(a.lattice_precision(), q));
}

GenSeries q_power_n(const GenSeries& a, int k) {
  if (k < 0) throw std::invalid_argument("negative Frobenius iterate");
  GenSeries r = a;
  for (int i = 0; i < k; ++i) r = q_power(r);
  return r;
}

GenSeries q_root(const GenSeries& a) {
  const ff::Field& f = a.field();
  std::vector<LatticeTerm> terms(a.lattice_terms().begin(), a.lattice_terms().end());
  for (auto& t : terms) t.second = f.q_root(t.second);
  return SeriesAccess::make(a.field_ptr(), a.ram() + 1, std::move(terms), a.lattice_precision());
}

GenSeries q_root_n(const GenSeries& a, int k) {
  if (k < 0) throw std::invalid_argument("negative root iterate");
  GenSeries r = a;
  for (int i = 0; i < k; ++i) r = q_root(r);
  return r;
}

GenSeries sigma(const ff::FieldPtr& field, std::optional<Exponent> prec) {
  const Exponent r = Rational(BigInt(1), BigInt(field->q() - 1));
  GenSeries s = GenSeries::monomial(field, field->sigma_unit(), r, std::move(prec));
  const GenSeries minus_x = GenSeries::monomial(field, field->minus_one(), Exponent(1));
  if (!equal_to_precision(pow(s, field->q() - 1), minus_x)) {
    throw std::logic_error("sigma^(q-1) != -x");
  }
  return s;
}

Exponent valuation(const GenSeries& a) { return a.valuation(); }

bool equal_to_precision(const GenSeries& a, const GenSeries& b) {
  require_same_field(a, b);
  const int s = std::max(a.ram(), b.ram());
  const auto ta = SeriesAccess::terms_at(a, s);
  const auto tb = SeriesAccess::terms_at(b, s);
  const auto prec = min_prec(SeriesAccess::prec_at(a, s), SeriesAccess::prec_at(b, s));
  auto below = [&](const std::vector<LatticeTerm>& t) {
    if (!prec) return t.size();
    return static_cast<std::size_t>(
        std::lower_bound(t.begin(), t.end(), *prec,
                         [](const LatticeTerm& x, std::int64_t k) { return x.first < k; }) -
        t.begin());
  };
  const std::size_t na = below(ta);
  const std::size_t nb = below(tb);
  if (na != nb) return false;
  return std::equal(ta.begin(), ta.begin() + static_cast<std::ptrdiff_t>(na), tb.begin());
}

GenSeries truncate(const GenSeries& a, const Exponent& new_prec) {
  if (const auto cur = a.precision(); cur && *cur <= new_prec) return a;
  const int ram = cap_ram(a.ram(), new_prec, a.field());
  const std::int64_t p = ceil_lattice(new_prec, lattice_den(a.field(), ram));
  std::vector<LatticeTerm> terms;
  for (const auto& t : SeriesAccess::terms_at(a, ram)) {
    if (t.first >= p) break;
    terms.push_back(t);
  }
  return SeriesAccess::make(a.field_ptr(), ram, std::move(terms), min_prec(SeriesAccess::prec_at(a, ram), p));
}

std::optional<Exponent> common_precision(const GenSeries& a, const GenSeries& b) {
  const auto pa = a.precision();
  const auto pb = b.precision();
  if (!pa) return pb;
  if (!pb) return pa;
  return std::min(*pa, *pb);
}

GenSeries operator+(const GenSeries& a, const GenSeries& b) { return add(a, b); }
GenSeries operator-(const GenSeries& a, const GenSeries& b) { return sub(a, b); }
GenSeries operator-(const GenSeries& a) { return neg(a); }
GenSeries operator*(const GenSeries& a, const GenSeries& b) { return mul(a, b); }

}  // namespace overconv::series
