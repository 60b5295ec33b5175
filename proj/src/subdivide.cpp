#include "toruskit/subdivide.hpp"

#include <algorithm>

#include "toruskit/errors.hpp"

namespace toruskit {

namespace {

RationalCone join_with(const RationalCone& facet_source,
                       const std::vector<size_t>& idx, const IVec& ray,
                       size_t mu) {
  std::vector<IVec> gens;
  for (size_t i : idx) gens.push_back(facet_source.generators()[i]);
  gens.push_back(ray);
  return RationalCone::from_generators(gens, mu);
}

}  // namespace

Fan stellar_subdivision(const Fan& fan, const IVec& ray_in) {
  if (ray_in.size() != fan.rank)
    fail(Errc::RankMismatch, "ray length does not match the fan rank");
  if (is_zero(ray_in)) fail(Errc::ParseError, "subdivision ray must be nonzero");
  IVec ray = primitive(ray_in);
  bool hit = false;
  std::vector<RationalCone> out;
  for (const auto& sigma : fan.maximal) {
    if (!sigma.contains(ray)) {
      out.push_back(sigma);
      continue;
    }
    hit = true;
    for (const auto& idx : sigma.facet_generator_sets()) {
      std::vector<IVec> sub;
      for (size_t i : idx) sub.push_back(sigma.generators()[i]);
      auto facet = RationalCone::from_generators(sub, fan.rank);
      if (facet.contains(ray)) continue;
      out.push_back(join_with(sigma, idx, ray, fan.rank));
    }
  }
  if (!hit)
    fail(Errc::RayOutsideSupport, "ray lies outside the fan's support");
  return make_fan(fan.rank, std::move(out));
}

namespace {

// Splitting ray for one non-unimodular maximal cone. Simplicial cones get
// the parallelepiped point with the least coefficient sum (ties broken
// lexicographically); non-simplicial cones are split along the first of
// their own rays that separates at least two facets.
IVec choose_insertion(const RationalCone& sigma, size_t mu) {
  const auto& gens = sigma.generators();
  size_t d = sigma.dim();
  if (gens.size() != d) {
    auto facets = sigma.facet_generator_sets();
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      std::vector<const std::vector<size_t>*> missing;
      for (const auto& idx : facets)
        if (std::find(idx.begin(), idx.end(), gi) == idx.end())
          missing.push_back(&idx);
      if (missing.size() < 2) continue;
      bool proper = true;
      for (const auto* idx : missing)
        if (join_with(sigma, *idx, gens[gi], mu) == sigma) proper = false;
      if (proper) return gens[gi];
    }
    fail(Errc::CapExceeded, "no splitting ray for a non-simplicial cone");
  }

  std::vector<IVec> gh;
  for (const auto& g : gens) gh.push_back(*sigma.chart().to_chart(g));
  IVec lo(d, Int(0)), hi(d, Int(0));
  for (size_t k = 0; k < d; ++k)
    for (const auto& g : gh) {
      if (g[k] < 0) lo[k] += g[k];
      if (g[k] > 0) hi[k] += g[k];
    }
  std::vector<QVec> rows(d, QVec(d));
  for (size_t k = 0; k < d; ++k)
    for (size_t i = 0; i < d; ++i) rows[k][i] = Rat(gh[i][k]);

  std::optional<Rat> best_sum;
  IVec best;
  IVec cur = lo;
  while (true) {
    if (!is_zero(cur)) {
      QVec rhs(d);
      for (size_t k = 0; k < d; ++k) rhs[k] = Rat(cur[k]);
      auto t = solve_square_q(rows, rhs);
      if (t) {
        bool inside = true;
        Rat sum(0);
        for (const auto& ti : *t) {
          if (ti < 0 || ti >= 1) {
            inside = false;
            break;
          }
          sum += ti;
        }
        if (inside) {
          IVec ambient = sigma.chart().from_chart(cur);
          if (!best_sum || sum < *best_sum ||
              (sum == *best_sum && lex_less(ambient, best))) {
            best_sum = sum;
            best = ambient;
          }
        }
      }
    }
    size_t k = 0;
    while (k < d && cur[k] == hi[k]) {
      cur[k] = lo[k];
      ++k;
    }
    if (k == d) break;
    ++cur[k];
  }
  if (!best_sum)
    fail(Errc::CapExceeded, "no parallelepiped point in a singular cone");
  return best;
}

}  // namespace

Subdivision resolve_to_smooth(const Fan& fan, const Caps& caps) {
  Subdivision s{fan, fan, {}};
  while (true) {
    const RationalCone* bad = nullptr;
    for (const auto& c : s.target.maximal)
      if (!c.is_unimodular()) {
        bad = &c;
        break;
      }
    if (!bad) break;
    if (s.inserted.size() >= static_cast<size_t>(caps.cap_insertions))
      fail(Errc::CapExceeded, "insertion cap reached before smoothness");
    IVec lambda = choose_insertion(*bad, s.target.rank);
    s.target = stellar_subdivision(s.target, lambda);
    s.inserted.push_back(lambda);
  }
  return s;
}

TorusInvariantDivisor pullback_divisor(const TorusInvariantDivisor& d,
                                       const Subdivision& s) {
  size_t mu = s.source.rank;
  std::vector<IVec> cartier;
  for (const auto& sigma : s.source.maximal) {
    IMat rows(sigma.generators().size(), mu);
    IVec rhs;
    for (size_t i = 0; i < sigma.generators().size(); ++i) {
      rows.a[i] = sigma.generators()[i];
      rhs.push_back(-divisor_coefficient(d, sigma.generators()[i]));
    }
    auto m = solve_integer(rows, rhs);
    if (!m)
      fail(Errc::NotCartier,
           "support function is not integrally linear on a maximal cone");
    cartier.push_back(*m);
  }
  TorusInvariantDivisor out;
  out.fan = s.target;
  for (const auto& r : s.target.rays) {
    auto idx = cone_containing(s.source, r);
    if (!idx)
      fail(Errc::FanMismatch, "target ray outside the source fan's support");
    out.coeffs.emplace_back(r, -dot(cartier[*idx], r));
  }
  return out;
}

LogCanonicalData log_canonical_boundary(const Fan& fan) {
  if (!is_smooth(fan))
    fail(Errc::NotSmooth, "log-canonical check requires a smooth fan");
  if (!is_complete(fan))
    fail(Errc::IncompleteFan, "log-canonical check requires a complete fan");
  LogCanonicalData out;
  out.canonical.fan = fan;
  out.boundary.fan = fan;
  out.sum.fan = fan;
  out.sum_is_zero = true;
  for (const auto& r : fan.rays) {
    out.canonical.coeffs.emplace_back(r, Int(-1));
    out.boundary.coeffs.emplace_back(r, Int(1));
    out.sum.coeffs.emplace_back(r, Int(0));
  }
  return out;
}

}  // namespace toruskit
