#include "toruskit/numbers.hpp"

#include <cassert>
#include <sstream>

namespace toruskit {

Int dot(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot_q(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot_iq(const IVec& a, const QVec& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

IVec vadd(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IVec vsub(const IVec& a, const IVec& b) {
  assert(a.size() == b.size());
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IVec vneg(const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IVec vscale(const Int& k, const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

bool is_zero(const IVec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

Int content(const IVec& a) {
  Int g = 0;
  for (const Int& x : a) g = igcd(g, x);
  return g;
}

IVec primitive(const IVec& a) {
  Int g = content(a);
  if (g == 0 || g == 1) return a;
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

bool lex_less(const IVec& a, const IVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const IVec& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  os << ")";
  return os.str();
}

double to_double(const Rat& q) { return q.convert_to<double>(); }

Int floor_div(const Int& num, const Int& den) {
  assert(den != 0);
  Int q = num / den, r = num % den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

Int ceil_div(const Int& num, const Int& den) { return -floor_div(-num, den); }

Int floor_rat(const Rat& q) { return floor_div(num(q), den(q)); }
Int ceil_rat(const Rat& q) { return ceil_div(num(q), den(q)); }

}  // namespace toruskit
