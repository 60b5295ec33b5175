#include "toruskit/heights.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "toruskit/errors.hpp"
#include "toruskit/lattice.hpp"
#include "toruskit/linprog.hpp"

namespace toruskit {

namespace {

void factor_into(Int n, std::map<Int, Int>& out, int sign) {
  for (Int d(2); d * d <= n; ++d)
    while (n % d == 0) {
      out[d] += sign;
      n /= d;
    }
  if (n > 1) out[n] += sign;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d(2); d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// max(|numerator|, denominator): multiplicative height of a rational.
Int rat_height(const Rat& q) {
  Int n = int_abs(num(q));
  return std::max(n, Int(den(q)));
}

bool is_s_unit(const Rat& q, const std::vector<Int>& primes) {
  if (q == 0) return false;
  for (const auto& [p, e] : factor_rational(q))
    if (!std::binary_search(primes.begin(), primes.end(), p)) return false;
  return true;
}

}  // namespace

RationalTorusPoint make_point(QVec coords) {
  for (const auto& c : coords)
    if (c == 0) fail(Errc::ParseError, "torus point coordinates must be nonzero");
  return RationalTorusPoint{std::move(coords)};
}

PlaceSet make_place_set(std::vector<Int> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (const auto& p : primes)
    if (!is_prime(p))
      fail(Errc::ParseError, "place set entries must be prime numbers");
  return PlaceSet{std::move(primes)};
}

std::map<Int, Int> factor_rational(const Rat& q) {
  if (q == 0) fail(Errc::ParseError, "cannot factor zero");
  std::map<Int, Int> out;
  factor_into(int_abs(num(q)), out, 1);
  factor_into(Int(den(q)), out, -1);
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Int valuation(const Rat& q, const Int& p) {
  if (q == 0) fail(Errc::ParseError, "cannot take the valuation of zero");
  Int v(0), n = int_abs(num(q)), d = den(q);
  while (n % p == 0) {
    ++v;
    n /= p;
  }
  while (d % p == 0) {
    --v;
    d /= p;
  }
  return v;
}

LogReal LogReal::log_of(const Rat& positive) {
  if (positive <= 0)
    fail(Errc::ParseError, "logarithm requires a positive rational");
  LogReal out;
  for (const auto& [p, e] : factor_rational(positive))
    out.terms_.emplace(p, Rat(e));
  return out;
}

LogReal LogReal::multiple_of_log(const Int& prime, const Rat& coeff) {
  LogReal out;
  if (coeff != 0) out.terms_.emplace(prime, coeff);
  return out;
}

LogReal& LogReal::operator+=(const LogReal& o) {
  for (const auto& [p, r] : o.terms_) {
    Rat& slot = terms_[p];
    slot += r;
    if (slot == 0) terms_.erase(p);
  }
  return *this;
}

LogReal& LogReal::operator-=(const LogReal& o) { return *this += -o; }

LogReal LogReal::operator-() const {
  LogReal out;
  for (const auto& [p, r] : terms_) out.terms_.emplace(p, Rat(-r));
  return out;
}

LogReal LogReal::scaled(const Rat& k) const {
  LogReal out;
  if (k == 0) return out;
  for (const auto& [p, r] : terms_) out.terms_.emplace(p, Rat(k * r));
  return out;
}

LogReal LogReal::abs() const { return sign() < 0 ? -*this : *this; }

int LogReal::sign() const {
  if (terms_.empty()) return 0;
  Int common(1);
  for (const auto& [p, r] : terms_)
    common = common / igcd(common, den(r)) * den(r);
  Int above(1), below(1);
  for (const auto& [p, r] : terms_) {
    Int e = num(r) * (common / den(r));
    Int mag(1);
    for (Int k = int_abs(e); k > 0; --k) mag *= p;
    (e > 0 ? above : below) *= mag;
  }
  if (above == below) return 0;
  return above > below ? 1 : -1;
}

double LogReal::to_double() const {
  double acc = 0;
  for (const auto& [p, r] : terms_)
    acc += toruskit::to_double(r) * std::log(p.convert_to<double>());
  return acc;
}

namespace {

// Valuation table of the coordinates at every prime touching them.
std::map<Int, IVec> coordinate_valuations(const QVec& coords) {
  std::map<Int, IVec> table;
  for (size_t k = 0; k < coords.size(); ++k)
    for (const auto& [p, e] : factor_rational(coords[k])) {
      auto [it, fresh] = table.emplace(p, IVec(coords.size(), Int(0)));
      it->second[k] = e;
    }
  return table;
}

LogReal log_max_monomials(const QVec& coords, const std::vector<IVec>& exps,
                          const std::map<Int, IVec>& vals, const Place& v) {
  if (v.archimedean()) {
    Rat best(0);
    for (const auto& m : exps) {
      Rat a = boost::multiprecision::abs(eval_monomial(coords, m));
      best = std::max(a, best);
    }
    return LogReal::log_of(best);
  }
  auto it = vals.find(v.prime);
  if (it == vals.end()) return LogReal{};
  Int least(0);
  bool first = true;
  for (const auto& m : exps) {
    Int s = dot(m, it->second);
    if (first || s < least) least = s;
    first = false;
  }
  return LogReal::multiple_of_log(v.prime, Rat(Int(-least)));
}

}  // namespace

LogReal height(const RationalTorusPoint& P, const LatticePolytope& p) {
  if (P.rank() != p.rank())
    fail(Errc::RankMismatch, "point rank does not match the polytope rank");
  auto exps = p.lattice_points();
  auto vals = coordinate_valuations(P.coords);
  LogReal h = log_max_monomials(P.coords, exps, vals, Place::infinite_place());
  for (const auto& [prime, unused] : vals)
    h += log_max_monomials(P.coords, exps, vals, Place::at(prime));
  return h;
}

LocalValue weil_function(const LaurentPolynomial& f, const RationalTorusPoint& P,
                         const Place& v) {
  if (P.rank() != f.rank())
    fail(Errc::RankMismatch, "point rank does not match the polynomial rank");
  Rat value = f.evaluate(P.coords);
  if (value == 0) fail(Errc::OnDivisor, "the point lies on the divisor of f");
  auto exps = newton_polytope(f).lattice_points();
  auto vals = coordinate_valuations(P.coords);
  LogReal lam = log_max_monomials(P.coords, exps, vals, v);
  if (v.archimedean())
    lam -= LogReal::log_of(boost::multiprecision::abs(value));
  else
    lam -= LogReal::multiple_of_log(v.prime, Rat(Int(-valuation(value, v.prime))));
  return LocalValue{v, lam};
}

DecompositionReport height_decomposition_check(const LaurentPolynomial& f,
                                               const RationalTorusPoint& P) {
  Rat value = f.evaluate(P.coords);
  if (value == 0) fail(Errc::OnDivisor, "the point lies on the divisor of f");
  std::set<Int> primes;
  for (const auto& c : P.coords)
    for (const auto& [p, e] : factor_rational(c)) primes.insert(p);
  for (const auto& [p, e] : factor_rational(value)) primes.insert(p);

  DecompositionReport rep;
  rep.height_value = height(P, newton_polytope(f));
  rep.locals.push_back(weil_function(f, P, Place::infinite_place()));
  for (const auto& p : primes)
    rep.locals.push_back(weil_function(f, P, Place::at(p)));
  for (const auto& lv : rep.locals) rep.local_sum += lv.value;
  rep.exact_equal = rep.local_sum == rep.height_value;
  return rep;
}

LocalValue boundary_distance(const RationalTorusPoint& P, const Place& v) {
  LogReal total;
  for (const auto& c : P.coords) {
    if (v.archimedean()) {
      Rat a = boost::multiprecision::abs(c);
      total += a >= 1 ? LogReal::log_of(a) : -LogReal::log_of(a);
    } else {
      total += LogReal::multiple_of_log(v.prime,
                                        Rat(int_abs(valuation(c, v.prime))));
    }
  }
  return LocalValue{v, total};
}

FunctorialityBound functoriality_bound(const MonomialMap& theta,
                                       const LatticePolytope& p_src,
                                       const LatticePolytope& p_dst) {
  if (theta.domain_rank() != p_src.rank() ||
      theta.codomain_rank() != p_dst.rank())
    fail(Errc::RankMismatch, "monomial map ranks do not match the polytopes");

  std::vector<IVec> transported;
  for (const auto& q : p_dst.vertices())
    transported.push_back(vec_mat(q, theta.matrix));
  const auto& chart = p_src.chart();
  std::vector<IVec> offsets;
  for (const auto& y : transported) {
    auto c = chart.to_chart(
        vadd(chart.base(), vsub(y, transported.front())));
    if (!c)
      fail(Errc::Unbounded,
           "transported characters leave the span of the source polytope");
    offsets.push_back(*c);
  }

  // Least C >= 0 with every transported vertex in C*p_src + translate:
  // variables are the translate (in chart coordinates) and C.
  size_t s = p_src.dim();
  std::vector<QVec> a;
  QVec b;
  for (const auto& ineq : p_src.chart_facets())
    for (const auto& d : offsets) {
      QVec row(s + 1);
      for (size_t j = 0; j < s; ++j) row[j] = Rat(Int(-ineq.normal[j]));
      row[s] = Rat(ineq.offset);
      a.push_back(std::move(row));
      b.push_back(Rat(Int(dot(ineq.normal, d))));
    }
  QVec cpos(s + 1, Rat(0));
  cpos[s] = Rat(-1);
  a.push_back(cpos);
  b.push_back(Rat(0));
  QVec obj(s + 1, Rat(0));
  obj[s] = Rat(1);
  auto res = lp_minimize(a, b, obj);
  if (res.status != LpResult::Status::Optimal)
    fail(Errc::Unbounded, "no finite scale bounds the transported polytope");
  return FunctorialityBound{res.value, LogReal{}};
}

bool is_s_integral(const LaurentPolynomial& f, const RationalTorusPoint& P,
                   const PlaceSet& S) {
  if (P.rank() != f.rank())
    fail(Errc::RankMismatch, "point rank does not match the polynomial rank");
  for (const auto& c : P.coords)
    if (!is_s_unit(c, S.primes)) return false;
  return is_s_unit(f.evaluate(P.coords), S.primes);
}

namespace {

void unit_values(const std::vector<Int>& primes, const std::vector<int>& emax,
                 size_t idx, const Rat& cur, const Int& num_acc,
                 const Int& den_acc, const Rat& bound, std::vector<Rat>& out) {
  if (idx == primes.size()) {
    out.push_back(cur);
    out.push_back(-cur);
    return;
  }
  const Int& p = primes[idx];
  for (int e = -emax[idx]; e <= emax[idx]; ++e) {
    Int nn = num_acc, dd = den_acc;
    Int mag(1);
    for (int k = e < 0 ? -e : e; k > 0; --k) mag *= p;
    (e >= 0 ? nn : dd) *= mag;
    if (Rat(nn) > bound || Rat(dd) > bound) continue;
    unit_values(primes, emax, idx + 1, cur * rat_pow(Rat(p), Int(e)), nn, dd,
                bound, out);
  }
}

void point_scan(const LaurentPolynomial& f, const PlaceSet& S,
                const std::vector<Rat>& vals, const Rat& bound, QVec& current,
                const Rat& height_so_far, size_t k,
                std::vector<RationalTorusPoint>& out) {
  if (k == current.size()) {
    Rat fv = f.evaluate(current);
    if (fv != 0 && is_s_unit(fv, S.primes))
      out.push_back(RationalTorusPoint{current});
    return;
  }
  for (const auto& v : vals) {
    Rat h = height_so_far * Rat(rat_height(v));
    if (h > bound) continue;
    current[k] = v;
    point_scan(f, S, vals, bound, current, h, k + 1, out);
  }
}

}  // namespace

std::vector<RationalTorusPoint> enumerate_integral_points(
    const LaurentPolynomial& f, const PlaceSet& S, const Rat& bound,
    const Caps& caps) {
  if (f.rank() < 1 || f.rank() > 3)
    fail(Errc::ParseError, "point enumeration supports ranks one to three");
  std::vector<RationalTorusPoint> out;
  if (bound < 1) return out;

  std::vector<int> emax;
  for (const auto& p : S.primes) {
    int e = 0;
    Rat power(p);
    while (power <= bound) {
      ++e;
      power *= Rat(p);
    }
    if (e > caps.cap_exponent)
      fail(Errc::BoundTooLarge, "height bound exceeds the exponent cap");
    emax.push_back(e);
  }

  std::vector<Rat> vals;
  unit_values(S.primes, emax, 0, Rat(1), Int(1), Int(1), bound, vals);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

  QVec current(f.rank());
  point_scan(f, S, vals, bound, current, Rat(1), 0, out);
  std::sort(out.begin(), out.end(),
            [](const RationalTorusPoint& x, const RationalTorusPoint& y) {
              return x.coords < y.coords;
            });
  return out;
}

namespace {

IVec canonical_character(IVec chi) {
  chi = primitive(chi);
  for (const auto& x : chi) {
    if (x > 0) break;
    if (x < 0) {
      chi = vneg(chi);
      break;
    }
  }
  return chi;
}

bool character_kills_signs(const IVec& chi, const Rat& u1, const Rat& u2) {
  Int parity(0);
  if (u1 < 0) parity += chi[0];
  if (u2 < 0) parity += chi[1];
  return parity % 2 == 0;
}

struct CoverCandidate {
  IVec chi;
  Rat value;
  std::vector<size_t> members;
};

void cover_search(const std::vector<CoverCandidate>& cands,
                  const std::vector<std::vector<size_t>>& covering,
                  std::set<size_t> uncovered, std::vector<size_t>& chosen,
                  std::vector<size_t>& best, size_t max_size) {
  if (uncovered.empty()) {
    if (chosen.size() < best.size()) best = chosen;
    return;
  }
  size_t lb = (uncovered.size() + max_size - 1) / max_size;
  if (chosen.size() + lb >= best.size()) return;
  size_t pivot = *uncovered.begin();
  for (size_t ci : covering[pivot]) {
    std::set<size_t> rest = uncovered;
    for (size_t m : cands[ci].members) rest.erase(m);
    chosen.push_back(ci);
    cover_search(cands, covering, std::move(rest), chosen, best, max_size);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<CosetFamily> detect_coset_families(
    const std::vector<RationalTorusPoint>& points) {
  for (const auto& p : points)
    if (p.rank() != 2)
      fail(Errc::RankMismatch, "coset detection handles rank two only");
  if (points.empty()) return {};
  size_t n = points.size();

  std::map<std::pair<IVec, Rat>, std::vector<size_t>> fams;
  auto add_candidate = [&](const IVec& raw, size_t anchor) {
    IVec chi = canonical_character(raw);
    Rat c = eval_monomial(points[anchor].coords, chi);
    auto key = std::make_pair(chi, c);
    if (fams.count(key)) return;
    std::vector<size_t> members;
    for (size_t k = 0; k < n; ++k)
      if (eval_monomial(points[k].coords, chi) == c) members.push_back(k);
    fams.emplace(std::move(key), std::move(members));
  };

  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      Rat u1 = points[i].coords[0] / points[j].coords[0];
      Rat u2 = points[i].coords[1] / points[j].coords[1];
      std::set<Int> ps;
      for (const auto& [p, e] : factor_rational(u1)) ps.insert(p);
      for (const auto& [p, e] : factor_rational(u2)) ps.insert(p);
      IMat m(ps.size(), 2);
      size_t row = 0;
      for (const auto& p : ps) {
        m.a[row][0] = valuation(u1, p);
        m.a[row][1] = valuation(u2, p);
        ++row;
      }
      auto kernel = integer_kernel(m);
      if (kernel.empty()) continue;
      if (kernel.size() == 1) {
        IVec chi = canonical_character(kernel[0]);
        if (character_kills_signs(chi, u1, u2)) add_candidate(chi, i);
      } else {
        for (const auto& chi :
             {IVec{Int(1), Int(0)}, IVec{Int(0), Int(1)}, IVec{Int(1), Int(1)},
              IVec{Int(1), Int(-1)}})
          if (character_kills_signs(chi, u1, u2)) add_candidate(chi, i);
      }
    }
    add_candidate(IVec{Int(1), Int(0)}, i);
  }

  std::vector<CoverCandidate> cands;
  for (const auto& [key, members] : fams)
    cands.push_back({key.first, key.second, members});

  std::vector<std::vector<size_t>> covering(n);
  size_t max_size = 1;
  for (size_t ci = 0; ci < cands.size(); ++ci) {
    max_size = std::max(cands[ci].members.size(), max_size);
    for (size_t m : cands[ci].members) covering[m].push_back(ci);
  }
  for (auto& list : covering)
    std::sort(list.begin(), list.end(), [&](size_t x, size_t y) {
      if (cands[x].members.size() != cands[y].members.size())
        return cands[x].members.size() > cands[y].members.size();
      return x < y;
    });

  // Greedy cover seeds the exact branch-and-bound upper bound.
  std::vector<size_t> best;
  {
    std::set<size_t> uncovered;
    for (size_t k = 0; k < n; ++k) uncovered.insert(k);
    while (!uncovered.empty()) {
      size_t pick = covering[*uncovered.begin()].front();
      size_t gain = 0;
      for (size_t ci = 0; ci < cands.size(); ++ci) {
        size_t g = 0;
        for (size_t m : cands[ci].members) g += uncovered.count(m);
        if (g > gain) {
          gain = g;
          pick = ci;
        }
      }
      best.push_back(pick);
      for (size_t m : cands[pick].members) uncovered.erase(m);
    }
  }
  {
    std::set<size_t> uncovered;
    for (size_t k = 0; k < n; ++k) uncovered.insert(k);
    std::vector<size_t> chosen;
    cover_search(cands, covering, std::move(uncovered), chosen, best, max_size);
  }

  std::sort(best.begin(), best.end(), [&](size_t x, size_t y) {
    if (cands[x].chi != cands[y].chi) return lex_less(cands[x].chi, cands[y].chi);
    return cands[x].value < cands[y].value;
  });
  std::vector<CosetFamily> out;
  std::vector<char> assigned(n, 0);
  for (size_t ci : best) {
    CosetFamily fam{cands[ci].chi, cands[ci].value, {}};
    for (size_t m : cands[ci].members)
      if (!assigned[m]) {
        assigned[m] = 1;
        fam.members.push_back(m);
      }
    out.push_back(std::move(fam));
  }
  return out;
}

}  // namespace toruskit
