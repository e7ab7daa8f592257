#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tilecs/rational.hpp"

namespace tilecs {

// a(n) = sum_{i=1..d} c_i a(n-i) for every n >= threshold.
struct RecurrenceSpec {
  int order = 0;
  std::vector<Rational> coefficients;   // c_1..c_d
  int threshold = 0;                    // n0, always >= order
  std::vector<std::int64_t> seeds;      // a(0..n0+d-1)
};

// numerator / denominator, ascending powers, coprime, denominator(0) = 1.
struct RationalGF {
  std::vector<std::int64_t> numerator;
  std::vector<std::int64_t> denominator;

  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

struct FitBounds {
  int max_order = 20;
  int max_transient = 16;
};

inline constexpr int kFitSlack = 5;

// Terms needed for the given bounds: 2*max_order + max_transient + 5.
int required_terms(const FitBounds& b);
// Largest bounds (transient 16, order at most 20) that the term count supports.
FitBounds default_bounds(std::size_t n_terms);

// Lexicographically smallest (threshold, order) recurrence that reproduces
// every supplied term, verified on at least order + 5 terms beyond the ones
// used to solve for it. Throws InsufficientTerms when terms are too few.
std::optional<RecurrenceSpec> find_recurrence(const std::vector<std::int64_t>& terms, const FitBounds& bounds);
std::optional<RecurrenceSpec> find_recurrence(const std::vector<std::int64_t>& terms);

RationalGF to_rational_gf(const std::vector<std::int64_t>& terms, const RecurrenceSpec& rec);

// n-th term. Throws InvalidArgument if the extension leaves the integers.
std::int64_t predict(const RecurrenceSpec& rec, int n);
std::int64_t predict(const RationalGF& gf, int n);
std::vector<std::int64_t> series(const RationalGF& gf, int n_max);

// Smallest L <= l_max such that the denominator divides (1 - x^L)^2.
std::optional<int> unit_circle_period(const RationalGF& gf, int l_max = 30);

// "(1 + 2x + x^2) / (1 - 2x + x^2)"
std::string to_string(const RationalGF& gf);
std::string poly_to_string(const std::vector<std::int64_t>& p);
std::string to_string(const RecurrenceSpec& rec);
std::string to_json(const RationalGF& gf);
std::string to_json(const RecurrenceSpec& rec);

}  // namespace tilecs
