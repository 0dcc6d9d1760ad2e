#include "overconv/series_io.hpp"

#include <limits>
#include <stdexcept>

#include "overconv/errors.hpp"

namespace overconv::series {

nlohmann::ordered_json to_json(const GenSeries& a) {
  nlohmann::ordered_json j;
  j["ram"] = a.ram();
  const auto prec = a.precision();
  j["prec"] = prec ? nlohmann::ordered_json(to_string(*prec)) : nlohmann::ordered_json(nullptr);
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : a.terms()) {
    terms.push_back(nlohmann::ordered_json::array({to_string(t.exponent), a.field().code(t.coeff)}));
  }
  j["terms"] = std::move(terms);
  return j;
}

GenSeries from_json(const ff::FieldPtr& field, const nlohmann::ordered_json& j) {
  try {
    if (!j.is_object() || !j.contains("ram") || !j.contains("prec") || !j.contains("terms")) {
      throw ParseError("series document needs ram, prec and terms");
    }
    const int ram = j.at("ram").get<int>();
    if (ram < 0) throw ParseError("negative ram");
    const Rational den = Rational(BigInt(field->q() - 1) * ipow(field->q(), static_cast<unsigned>(ram)));
    auto lattice = [&](const Rational& r) -> std::int64_t {
      const Rational scaled = r * den;
      if (boost::multiprecision::denominator(scaled) != 1) {
        throw ParseError("exponent " + to_string(r) + " is off the lattice for ram " + std::to_string(ram));
      }
      const BigInt& n = boost::multiprecision::numerator(scaled);
      if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
        throw ParseError("exponent out of range");
      }
      return static_cast<std::int64_t>(n);
    };

    std::optional<std::int64_t> prec;
    if (!j.at("prec").is_null()) prec = lattice(parse_rational(j.at("prec").get<std::string>()));

    std::vector<GenSeries::LatticeTerm> terms;
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 2) throw ParseError("term must be [exponent, code]");
      const auto code = t.at(1).get<std::uint32_t>();
      if (code == 0) throw ParseError("stored coefficients must be nonzero");
      terms.emplace_back(lattice(parse_rational(t.at(0).get<std::string>())), field->from_code(code));
    }
    return GenSeries::from_lattice(field, ram, std::move(terms), prec);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad series document: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(std::string("bad coefficient: ") + e.what());
  }
}

}  // namespace overconv::series
