// One line per acceptance criterion: PASS/FAIL, wall time, detail. Exit status
// is zero iff every criterion passes within its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracle.hpp"
#include "overconv/analysis.hpp"
#include "overconv/carlitz.hpp"
#include "overconv/special.hpp"
#include "properties.hpp"

namespace {

using namespace overconv;
using analysis::CheckReport;
using series::GenSeries;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kAllQ{{2, 1}, {3, 1}, {2, 2}, {5, 1}};
const Rational kPrecision = 200;
constexpr std::uint64_t kSeed = 0;

std::string qname(const ff::Field& f) { return "q=" + std::to_string(f.q()); }

Rational qpow(std::uint32_t q, int k) { return Rational(ipow(q, static_cast<unsigned>(k))); }

std::string str(const Rational& r) { return overconv::to_string(r); }

std::string input(const analysis::CheckCase& c, const std::string& key) {
  for (const auto& [k, v] : c.inputs) {
    if (k == key) return v;
  }
  return "";
}

bool has_prefix(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

void require_report(Outcome& o, const CheckReport& r, const ff::Field& f) {
  if (r.pass()) return;
  for (const auto& c : r.cases) {
    if (c.pass) continue;
    std::string in;
    for (const auto& [k, v] : c.inputs) in += k + "=" + v + " ";
    o.require(false, r.name + " " + qname(f) + ": " + in + "measured " + c.measured + " vs " + c.bound);
    return;
  }
  o.require(false, r.name + " " + qname(f) + ": no cases");
}

// v(D_n - (-1)^n x^((q^n-1)/(q-1))) from the repeated-product oracle.
std::int64_t oracle_prop1(std::uint32_t p, const std::vector<std::uint32_t>& modulus, std::uint32_t q, int n) {
  testing::PolyField o(p, modulus);
  testing::CodePoly d = testing::factorial_by_products(o, q, n);
  std::int64_t lead = 1;
  for (int i = 1; i < n; ++i) lead = lead * q + 1;
  const auto sign = n % 2 ? o.neg(o.one()) : o.one();
  auto& c = d[lead];
  c = o.code(o.add(o.from_code(c), o.neg(sign)));
  if (c == 0) d.erase(lead);
  return d.begin()->first;
}

Outcome prop1() {
  Outcome o;
  for (auto [p, m] : kAllQ) {
    auto f = ff::Field::create(p, m);
    const CheckReport r = analysis::check_prop1(f, 8);
    require_report(o, r, *f);
    const int oracle_n = f->q() <= 3 ? 4 : 3;
    for (const auto& c : r.cases) {
      if (!has_prefix(input(c, "statement"), "v(D_n")) continue;
      const int n = std::stoi(input(c, "n"));
      if (n > oracle_n) continue;
      const std::string expected = std::to_string(oracle_prop1(p, f->modulus(), f->q(), n));
      o.require(c.measured == expected, qname(*f) + " n=" + std::to_string(n) + ": measured " + c.measured +
                                            ", product oracle " + expected);
    }
    if (f->q() == 3) {
      o.require(r.cases.at(0).measured == "3" && r.cases.at(1).measured == "10",
                "q=3 spot values " + r.cases.at(0).measured + ", " + r.cases.at(1).measured);
    }
  }
  if (o.pass) o.detail = "q in {2,3,4,5}, n <= 8; q=3 measured 3, 10; product oracle agrees";
  return o;
}

Outcome l_sequence() {
  Outcome o;
  for (auto [p, m] : kAllQ) {
    auto f = ff::Field::create(p, m);
    const std::uint32_t q = f->q();
    require_report(o, analysis::check_l_sequence(f, 12), *f);
    const auto seq = analysis::l_sequence(q, 12);
    BigInt l = q;
    for (int n = 1; n <= 12; ++n) {
      const BigInt qn = ipow(q, n);
      const BigInt closed = (qn - 1) / (q - 1) + (q - 1) * ipow(q, n - 1);
      o.require(seq.recurrence.at(n - 1) == l && seq.closed_form.at(n - 1) == closed && l == closed,
                qname(*f) + " l_" + std::to_string(n));
      const BigInt next = q * l + 1;
      o.require((ipow(q, n + 2) - q) / (q - 1) - next == qn - 1 && qn - 1 > 0, qname(*f) + " (13) at n=" +
                                                                                   std::to_string(n));
      l = next;
    }
  }
  if (o.pass) o.detail = "n <= 12, q in {2,3,4,5}";
  return o;
}

Rational dwork_bound_oracle(std::uint32_t q, int n) {
  if (n == 1) return Rational(1) / (q - 1) + (q - 1);
  return (qpow(q, n - 2) * (q - 1) * (q - 1) + 1) / Rational(q - 1);
}

Outcome prop2_bounds() {
  Outcome o;
  for (auto [p, m] : kAllQ) {
    auto f = ff::Field::create(p, m);
    const CheckReport r = analysis::check_prop2(f, 8, 0, kPrecision);
    require_report(o, r, *f);
    int seen = 0;
    for (const auto& c : r.cases) {
      if (input(c, "statement") != "v(c_n(E)) >= bound") continue;
      ++seen;
      const int n = std::stoi(input(c, "n"));
      o.require(c.bound == str(dwork_bound_oracle(f->q(), n)), qname(*f) + " bound at n=" + std::to_string(n));
      if (f->q() == 3 && n <= 2) o.require(c.measured == "5/2", "q=3 spot value at n=" + std::to_string(n));
    }
    o.require(seen == 8, qname(*f) + " expected 8 coefficient cases");
  }
  if (o.pass) o.detail = "q in {2,3,4,5}, n <= 8; q=3 measured 5/2, 5/2";
  return o;
}

Outcome prop2_special_value() {
  Outcome o;
  for (auto [p, m] : kAllQ) {
    auto f = ff::Field::create(p, m);
    const CheckReport r = analysis::check_prop2(f, 2, 8, kPrecision);
    require_report(o, r, *f);
    int agree = 0, val = 0, dist = 0, resid = 0;
    for (const auto& c : r.cases) {
      const std::string s = input(c, "statement");
      if (s == "S_N summed equals sigma^(q^N)/D_N") ++agree;
      if (s == "v(S_N) = 1/(q-1)") {
        ++val;
        o.require(c.measured == str(Rational(1, f->q() - 1)), qname(*f) + " v(S_N) " + c.measured);
      }
      if (s == "v(S_N - sigma) >= min of bounds for n > N") {
        ++dist;
        const int n = std::stoi(input(c, "N"));
        o.require(c.bound == str(dwork_bound_oracle(f->q(), n + 1)), qname(*f) + " tail bound");
      }
      if (has_prefix(s, "v(S_N^(q-1) + x) >")) ++resid;
    }
    o.require(agree == 8 && val == 8 && dist == 8 && resid == 7, qname(*f) + " missing special value cases");
  }
  if (o.pass) o.detail = "N <= 8: dual paths agree, v(S_N) = 1/(q-1), residual strictly increasing";
  return o;
}

analysis::RadiusEstimate estimate(const carlitz::QLinearSeries& u, int tail_start) {
  return analysis::radius_estimate(analysis::valuation_profile(u), tail_start);
}

// p^a exactly dividing n.
std::uint32_t p_part(std::uint32_t p, int n) {
  std::uint32_t pa = 1;
  while (n % p == 0) {
    n /= static_cast<int>(p);
    pa *= p;
  }
  return pa;
}

Outcome radius() {
  Outcome o;
  constexpr int kN = 10;
  for (auto [p, m] : kAllQ) {
    auto f = ff::Field::create(p, m);
    const std::uint32_t q = f->q();
    const Rational qn = qpow(q, kN);

    const auto ec = estimate(carlitz::carlitz_exp(f, kN, 1), 1);
    o.require(ec.last_slope == -(qn - 1) / ((q - 1) * qn), qname(*f) + " e_C slope " + str(ec.last_slope));
    o.require(ec.last_slope > Rational(-1) / (q - 1), qname(*f) + " e_C slope above -1/(q-1)");

    const auto profile = analysis::valuation_profile(analysis::resolved_dwork_carlitz(f, kN, kPrecision));
    const Rational limit = Rational(q - 1) / (q * q);
    for (const auto& e : profile.entries) {
      if (e.index < 2) continue;
      o.require(e.valuation.exact() && *e.slope >= limit,
                qname(*f) + " E slope at n=" + std::to_string(e.index) + " is " + str(*e.slope));
    }

    for (int n = 1; n <= 4; ++n) {
      const Rational prec = qpow(q, kN - 1) * n + 1;
      const auto est = estimate(special::overconvergent_polylog(f, n, kN, prec), 2);
      const std::uint32_t pa = p_part(p, n);
      const Rational expected = (qpow(q, kN - 1) * pa - n - pa) / qn;
      o.require(est.last_slope == expected,
                qname(*f) + " L_" + std::to_string(n) + " slope " + str(est.last_slope) + ", expected " + str(expected));
      o.require(est.direction == analysis::TailDirection::kNondecreasing, qname(*f) + " L_n tail not monotone");
      const Rational gap = est.last_slope - Rational(pa) / q;
      o.require(gap < 0 && -gap <= Rational(n + pa) / qn, qname(*f) + " L_n slope not within (n+p^a)/q^N of p^a/q");
    }

    const Rational x_slope = 1 - (1 - 1 / qn) / (q - 1);
    const auto x = GenSeries::from_x_power(f, Rational(1));
    for (const auto& t : analysis::sample_unit_triples(f, 5, kSeed, 1, kN)) {
      const auto fx = carlitz::scale_argument(special::hypergeom({t.a, t.b, t.c}, kN, 1), x);
      const auto est = estimate(fx, 1);
      o.require(est.last_slope == x_slope, qname(*f) + " F(xt) slope " + str(est.last_slope));
      o.require(est.exponent >= 1 - Rational(1) / (q - 1), qname(*f) + " F(xt) exponent");
    }
  }
  if (o.pass) {
    o.detail = "N = 10, q in {2,3,4,5}: e_C, E >= (q-1)/q^2, L_n (n <= 4) -> p^a/q with p^a || n, F(xt)";
  }
  return o;
}

Outcome identity_18() {
  Outcome o;
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    auto f = ff::Field::create(p, m);
    const CheckReport r = analysis::check_identity_18(f, 10, kPrecision);
    require_report(o, r, *f);
    int tau = 0, d = 0;
    for (const auto& c : r.cases) {
      if (input(c, "statement") == "tau e_C + x e_C = e_C(x t)") ++tau;
      if (input(c, "statement") == "d e_C = e_C") ++d;
    }
    o.require(tau == 11 && d >= 10, qname(*f) + " missing indices");
  }
  if (o.pass) o.detail = "indices 0..10, q in {2,3,4}";
  return o;
}

Outcome polylog_odes() {
  Outcome o;
  for (auto [p, m] : kAllQ) {
    auto f = ff::Field::create(p, m);
    require_report(o, analysis::check_polylog_odes(f, 4, 10, kPrecision), *f);
  }
  if (o.pass) o.detail = "order 10, n <= 4, q in {2,3,4,5}";
  return o;
}

Outcome prop3() {
  Outcome o;
  bool counter_case = false;
  for (auto [p, m] : kAllQ) {
    auto f = ff::Field::create(p, m);
    const CheckReport r = analysis::check_prop3(f, 4, 10, kPrecision);
    require_report(o, r, *f);
    for (const auto& c : r.cases) {
      if (input(c, "statement") != "v(c_j(L_n)) >= q^(j-1) - n - 1") continue;
      const int n = std::stoi(input(c, "n"));
      const int j = std::stoi(input(c, "j"));
      o.require(c.paper_bound == str(qpow(f->q(), j - 1) - n + 1), qname(*f) + " printed bound missing");
      o.require(c.bound == str(qpow(f->q(), j - 1) - n - 1), qname(*f) + " bound");
      if (f->q() == 3 && n == 1 && j == 2) {
        counter_case = c.measured == "1" && input(c, "printed_bound_holds") == "false";
      }
    }
  }
  o.require(counter_case, "q=3, n=1, j=2 counter-case not recorded");
  if (o.pass) o.detail = "n <= 4, 2 <= j <= 10; printed bound fails at q=3, n=1, j=2 (measured 1)";
  return o;
}

Outcome identity_23() {
  Outcome o;
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}}) {
    auto f = ff::Field::create(p, m);
    const CheckReport r = analysis::check_identity_23(f, 6, 20, kSeed, kPrecision);
    require_report(o, r, *f);
    o.require(r.cases.size() == 23u * 6u, qname(*f) + " expected 23 parameters x 6 indices");
  }
  if (o.pass) o.detail = "a in {0,[1],[2]} + 20 units, n <= 6, q in {2,3}";
  return o;
}

Outcome identity_24() {
  Outcome o;
  auto f = ff::Field::create(3, 1);
  const CheckReport r = analysis::check_identity_24(f, 5, 10, kSeed, kPrecision, 10);
  require_report(o, r, *f);
  int identity_cases = 0;
  for (const auto& c : r.cases) {
    if (has_prefix(input(c, "statement"), "tau F(")) ++identity_cases;
  }
  o.require(identity_cases == 60, "expected 10 triples x 6 indices");
  if (o.pass) o.detail = "10 triples, indices 0..5, q=3";
  return o;
}

Outcome properties() {
  Outcome o;
  std::ostringstream summary;
  for (const auto& r : testing::all_properties(kSeed, 10000)) {
    o.require(r.cases >= 10000, r.name + " ran " + std::to_string(r.cases) + " cases");
    o.require(r.failures == 0, r.name + ": " + r.first_failure);
    summary << r.name << " " << r.cases << " ";
  }
  if (o.pass) o.detail = summary.str() + "(0 failures)";
  return o;
}

Outcome determinism() {
  Outcome o;
  auto report = [](const std::string& jobs) {
    std::ostringstream out, err;
    const int code = cli::run_cli({"overconv", "--p", "3", "--m", "1", "--seed", "5", "--jobs", jobs, "report", "--all"},
                                  out, err);
    return std::pair{code, out.str()};
  };
  const auto a = report("1");
  const auto b = report("1");
  const auto c = report("4");
  o.require(a.first == cli::kExitOk, "report exited with " + std::to_string(a.first));
  o.require(a.second == b.second, "two sequential runs differ");
  o.require(a.second == c.second, "sequential and parallel runs differ");
  if (o.pass) o.detail = "report --all: run/run and jobs 1/4 byte-identical (" + std::to_string(a.second.size()) + " bytes)";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "prop1 factorial valuations", 5, prop1},
      {2, "l-sequence consistency", 1, l_sequence},
      {3, "prop2 coefficient bounds", 10, prop2_bounds},
      {4, "prop2 special value", 10, prop2_special_value},
      {5, "radius estimates", 10, radius},
      {6, "exponential identity", 5, identity_18},
      {7, "polylog ODEs", 5, polylog_odes},
      {8, "prop3 bound", 5, prop3},
      {9, "pochhammer identity", 20, identity_23},
      {10, "hypergeometric identity", 60, identity_24},
      {11, "kernel property suites", 600, properties},
      {12, "determinism", 600, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.limit_seconds) {
      o.pass = false;
      o.detail = "over time limit of " + std::to_string(c.limit_seconds) + " s; " + o.detail;
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << " (" << timing << "): " << o.detail
              << std::endl;
    if (!o.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all 12 criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
