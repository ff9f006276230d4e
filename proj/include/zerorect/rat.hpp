#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "zerorect/error.hpp"

namespace zr {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Ordered-pair counts can reach m^2 for families of size m; 128 bits keeps
// the arithmetic overflow-free without pulling BigInt into hot loops.
using PairCount = unsigned __int128;

std::string to_string(PairCount v);
double to_double(PairCount v);

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline long double to_long_double(const Rat& r) { return r.convert_to<long double>(); }

// Exact conversion; every finite double is a dyadic rational.
Rat rat_from_double(double x);

// Accepts "a/b", plain integers and decimal literals ("0.25", "-3.5").
Rat parse_rat(const std::string& s);

// "a/b", or just "a" for integers.
std::string format_rat(const Rat& r);

Rat rat_pow(const Rat& base, unsigned exp);

BigInt binomial(unsigned n, unsigned k);

} // namespace zr
