#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace compcov {

using ExactInteger = mpz_class;
using ExactRational = mpq_class;

/// 50 significant decimal digits; used for every real-valued evaluation
/// (asymptotic predictions, probe sequences, extrapolation).
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<50>,
                                           boost::multiprecision::et_off>;

inline constexpr int kWorkingDigits = 50;

/// "p/q" (or "p" when q == 1), always in lowest terms.
std::string to_fraction_string(const ExactRational& q);
ExactRational parse_fraction(const std::string& text);

Real to_real(const ExactInteger& z);
Real to_real(const ExactRational& q);

/// Fixed-point rendering with `places` digits after the point.
std::string to_fixed(const Real& x, int places);

/// sqrt(r) rounded to `places` decimals, ties to even, computed exactly
/// from the rational. r must be non-negative. The result carries no sign.
std::string sqrt_to_fixed(const ExactRational& r, int places);

}  // namespace compcov
