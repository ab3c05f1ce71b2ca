// rational.hpp — exact rational arithmetic and its "p/q" text form.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace sbkit {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p/q" or a bare integer "p"; q must be positive after sign
// normalisation.  Throws std::invalid_argument on anything else.
Rat parse_rational(const std::string& text);

// Canonical form "p/q" with q >= 1 and gcd(p, q) == 1; integers print as "p/1"
// so the representation round-trips through parse_rational unambiguously.
std::string to_fraction_string(const Rat& value);

// Exact power of two, for tolerance schedules of the form eps / 2^i.
Rat pow2(unsigned exponent);

}  // namespace sbkit
