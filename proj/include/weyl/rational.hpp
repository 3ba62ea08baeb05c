#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace weyl {

/// Exact rational scalar. mpq_class keeps values in lowest terms with a
/// positive denominator once canonicalized; every constructor path in this
/// library canonicalizes.
using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using Integer = mpz_class;

/// Canonical text form: "n" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Parses "n", "-n", "p/q" (q > 0). Throws Error(InvalidArgument) on
/// anything else.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// r^k for any integer k; r must be nonzero when k < 0.
Rational pow(const Rational& r, std::int64_t k);

/// Componentwise dot product of equal-length vectors.
Rational dot(const RatVec& a, const RatVec& b);

std::string to_string(const RatVec& v);

}  // namespace weyl
