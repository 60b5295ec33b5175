#include "toruskit/laurent.hpp"

#include <algorithm>
#include <map>

#include "toruskit/errors.hpp"

namespace toruskit {

LaurentPolynomial::LaurentPolynomial(size_t rank, std::vector<Term> terms)
    : rank_(rank) {
  std::map<IVec, Rat> merged;
  for (Term& t : terms) {
    if (t.exp.size() != rank_)
      fail(Errc::RankMismatch, "exponent length differs from rank");
    merged[std::move(t.exp)] += t.coeff;
  }
  for (auto& [e, c] : merged)
    if (c != 0) terms_.push_back(Term{e, c});
  if (terms_.empty()) fail(Errc::ParseError, "zero polynomial");
}

std::vector<IVec> LaurentPolynomial::support() const {
  std::vector<IVec> s;
  s.reserve(terms_.size());
  for (const Term& t : terms_) s.push_back(t.exp);
  return s;
}

Rat rat_pow(const Rat& q, const Int& e) {
  if (q == 0) fail(Errc::ParseError, "zero base in a torus character");
  Rat base = e < 0 ? Rat(1) / q : q;
  Int k = e < 0 ? Int(-e) : e;
  Rat acc = 1;
  while (k > 0) {
    if ((k & 1) != 0) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Rat eval_monomial(const QVec& point, const IVec& e) {
  if (point.size() != e.size())
    fail(Errc::RankMismatch, "point length differs from rank");
  Rat acc = 1;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    acc *= rat_pow(point[i], e[i]);
  }
  return acc;
}

Rat LaurentPolynomial::evaluate(const QVec& point) const {
  if (point.size() != rank_)
    fail(Errc::RankMismatch, "point length differs from rank");
  for (const Rat& c : point)
    if (c == 0) fail(Errc::ParseError, "point has a zero coordinate");
  Rat acc = 0;
  for (const Term& t : terms_) acc += t.coeff * eval_monomial(point, t.exp);
  return acc;
}

LaurentPolynomial LaurentPolynomial::monomial_multiple(const IVec& shift,
                                                       const Rat& scale) const {
  if (shift.size() != rank_)
    fail(Errc::RankMismatch, "shift length differs from rank");
  if (scale == 0) fail(Errc::ParseError, "zero scale");
  std::vector<Term> out;
  for (const Term& t : terms_) out.push_back(Term{vadd(t.exp, shift), t.coeff * scale});
  return LaurentPolynomial(rank_, std::move(out));
}

LatticePolytope newton_polytope(const LaurentPolynomial& f) {
  return LatticePolytope::hull(f.support(), f.rank());
}

std::vector<IVec> ueno_stabilizer(const LaurentPolynomial& f) {
  size_t mu = f.rank();
  const std::vector<Term>& ts = f.terms();
  if (ts.size() <= 1) return IMat::identity(mu).a;
  std::vector<IVec> diffs;
  for (size_t i = 1; i < ts.size(); ++i)
    diffs.push_back(vsub(ts[i].exp, ts[0].exp));
  return integer_kernel(IMat(diffs));
}

}  // namespace toruskit
