#include "overconv/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "overconv/errors.hpp"

namespace overconv::analysis {

ValuationProfile valuation_profile(const QLinearSeries& u) {
  ValuationProfile profile;
  profile.q = u.field().q();
  for (int k = 0; k <= u.order(); ++k) {
    const GenSeries& c = u.coeff(k);
    if (c.is_exact_zero()) continue;
    ProfileEntry e;
    e.index = k;
    e.valuation = c.valuation_info();
    e.slope = e.valuation.value / Rational(ipow(profile.q, static_cast<unsigned>(k)));
    profile.entries.push_back(std::move(e));
  }
  return profile;
}

std::string to_string(TailDirection d) {
  switch (d) {
    case TailDirection::kConstant:
      return "constant";
    case TailDirection::kNondecreasing:
      return "nondecreasing";
    case TailDirection::kNonincreasing:
      return "nonincreasing";
    case TailDirection::kMixed:
      break;
  }
  return "mixed";
}

RadiusEstimate radius_estimate(const ValuationProfile& profile, int tail_start) {
  std::vector<std::pair<int, Rational>> tail;
  for (const auto& e : profile.entries) {
    if (e.index >= tail_start && e.valuation.exact() && e.slope) tail.emplace_back(e.index, *e.slope);
  }
  if (tail.empty()) {
    throw InsufficientTail("no exact profile entries at index >= " + std::to_string(tail_start));
  }

  bool up = true;
  bool down = true;
  for (std::size_t i = 1; i < tail.size(); ++i) {
    if (tail[i].second < tail[i - 1].second) up = false;
    if (tail[i].second > tail[i - 1].second) down = false;
  }

  RadiusEstimate r;
  r.tail_start = tail.front().first;
  r.last_index = tail.back().first;
  r.last_slope = tail.back().second;
  r.tail_min = std::min_element(tail.begin(), tail.end(), [](const auto& a, const auto& b) {
                 return a.second < b.second;
               })->second;
  if (up && down) {
    r.direction = TailDirection::kConstant;
  } else if (up) {
    r.direction = TailDirection::kNondecreasing;
  } else if (down) {
    r.direction = TailDirection::kNonincreasing;
  } else {
    r.direction = TailDirection::kMixed;
  }
  r.monotone_tail = up || down;
  r.exponent = r.monotone_tail ? r.last_slope : r.tail_min;
  r.certified_lower_bound = up;
  return r;
}

LSequence l_sequence(std::uint32_t q, int n_max) {
  if (n_max < 1) throw std::invalid_argument("l-sequence needs n_max >= 1");
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  LSequence s;
  s.q = q;
  BigInt l = q;
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) l = l * q + 1;
    s.recurrence.push_back(l);
    const BigInt qn = ipow(q, static_cast<unsigned>(n));
    const BigInt qn1 = ipow(q, static_cast<unsigned>(n - 1));
    s.closed_form.push_back((qn - 1) / (q - 1) + (q - 1) * qn1);
  }
  s.agree = s.recurrence == s.closed_form;
  return s;
}

bool CheckReport::pass() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const CheckCase& c) { return c.pass; });
}

}  // namespace overconv::analysis
