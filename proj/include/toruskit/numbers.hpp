#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace toruskit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sgn(const Int& x) { return x.sign(); }
inline int sgn(const Rat& x) { return x.sign(); }

inline Int igcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

Int dot(const IVec& a, const IVec& b);
Rat dot_q(const QVec& a, const QVec& b);
Rat dot_iq(const IVec& a, const QVec& b);

IVec vadd(const IVec& a, const IVec& b);
IVec vsub(const IVec& a, const IVec& b);
IVec vneg(const IVec& a);
IVec vscale(const Int& k, const IVec& a);
bool is_zero(const IVec& a);

// gcd of entries; 0 for the zero vector.
Int content(const IVec& a);

// Divides out the content; sign of the vector is preserved. Zero stays zero.
IVec primitive(const IVec& a);

bool lex_less(const IVec& a, const IVec& b);

std::string to_string(const IVec& a);
double to_double(const Rat& q);

// Floor of num/den for den != 0.
Int floor_div(const Int& num, const Int& den);
Int ceil_div(const Int& num, const Int& den);
Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

}  // namespace toruskit
