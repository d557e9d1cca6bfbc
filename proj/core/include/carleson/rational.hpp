#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace carleson {

// All arithmetic in this library is exact. Measures, weights and flow
// amounts are arbitrary-precision rationals; equality checks are exact.
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p/q", an integer string, or a decimal string ("1.25" becomes
// 5/4 exactly). Throws Error on malformed input or zero denominator.
Rat parse_rat(const std::string& s);

// Lowest-terms "p/q" form, denominator always present ("2" -> "2/1").
std::string rat_str(const Rat& r);

// 2^e as an exact rational, e may be negative.
Rat pow2(long e);

}  // namespace carleson
