#pragma once

// Randomized property suites over the field and series kernels. Each suite
// draws `cases` inputs from a seeded engine and counts violations.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "overconv/ff.hpp"
#include "overconv/series.hpp"

namespace overconv::testing {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
};

/// Fields the suites cycle through: q in {2, 3, 4, 5, 7, 8, 9}.
const std::vector<ff::FieldPtr>& property_fields();

ff::FieldElement random_element(const ff::Field& f, std::mt19937_64& rng);

/// Random series over ram 0 or 1 with up to max_terms terms. Capped unless
/// `exact`; never empty.
series::GenSeries random_series(const ff::FieldPtr& f, std::mt19937_64& rng, int max_terms = 6,
                                bool exact = false);

PropertyResult field_axioms(std::uint64_t seed, std::size_t cases);
PropertyResult ultrametric(std::uint64_t seed, std::size_t cases);
PropertyResult frobenius(std::uint64_t seed, std::size_t cases);
PropertyResult root_of_power(std::uint64_t seed, std::size_t cases);
PropertyResult inverse_roundtrip(std::uint64_t seed, std::size_t cases);
PropertyResult precision_contract(std::uint64_t seed, std::size_t cases);

std::vector<PropertyResult> all_properties(std::uint64_t seed, std::size_t cases);

}  // namespace overconv::testing
