#pragma once

#include <gmpxx.h>

#include <string>

#include "slicekit/error.hpp"

namespace slicekit {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) fail(ErrorCode::argument, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Canonical exact form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Parses "p" or "p/q" (decimal, optional sign). Rejects everything else.
Rational rational_from_string(const std::string& text);

/// Rounds half-up to two decimals, e.g. 20/3 -> "6.67". Requires q >= 0.
std::string round_half_up_2dp(const Rational& q);

} // namespace slicekit
