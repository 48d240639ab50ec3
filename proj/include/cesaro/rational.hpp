#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cesaro {

// Exact rational scalar for all measure computations.  mpq_class keeps values
// canonical (lowest terms, positive denominator) after every operation.
using Rational = mpq_class;

// Parses "p/q" or a bare integer "p".  Whitespace is not accepted.
Rational parse_rational(const std::string& text);

// Canonical serialization, always with an explicit denominator: "3/4", "0/1".
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

// lcm/max folds used for (period, preperiod) aggregation.
unsigned long long lcm_u64(unsigned long long a, unsigned long long b);

}  // namespace cesaro
