#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "metakzb/numbers.hpp"

namespace metakzb {

// All floating point work runs at a fixed 50 significant digits; contexts carry a
// target precision (default 30 digits) that steers tolerances and cutoff checks.
using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

inline constexpr int kFloatDigits = 50;
inline constexpr int kDefaultPrecision = 30;

const Real& pi_real();
Complex two_pi_i();

// Riemann zeta at an integer argument n >= 2.
Real zeta_real(int n);

// z^e for any integer e; 0^0 == 1, 0^negative is a domain error.
Complex cpow(const Complex& z, long e);

Real rat_to_real(const Rational& q);
Real int_to_real(const Int& n);

}  // namespace metakzb
