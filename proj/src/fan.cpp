#include "toruskit/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toruskit/errors.hpp"

namespace toruskit {

namespace {

bool gens_less(const RationalCone& a, const RationalCone& b) {
  return std::lexicographical_compare(a.generators().begin(),
                                      a.generators().end(),
                                      b.generators().begin(),
                                      b.generators().end(), lex_less);
}

}  // namespace

bool Fan::operator==(const Fan& o) const {
  if (rank != o.rank || rays != o.rays) return false;
  if (maximal.size() != o.maximal.size()) return false;
  for (size_t i = 0; i < maximal.size(); ++i)
    if (!(maximal[i] == o.maximal[i])) return false;
  return true;
}

Fan make_fan(size_t rank, std::vector<RationalCone> maximal) {
  std::sort(maximal.begin(), maximal.end(), gens_less);
  maximal.erase(std::unique(maximal.begin(), maximal.end(),
                            [](const RationalCone& a, const RationalCone& b) {
                              return a == b;
                            }),
                maximal.end());
  Fan fan;
  fan.rank = rank;
  fan.maximal = std::move(maximal);
  std::set<IVec> rays;
  for (const auto& c : fan.maximal)
    for (const auto& g : c.generators()) rays.insert(g);
  fan.rays.assign(rays.begin(), rays.end());
  return fan;
}

bool is_complete(const Fan& fan) {
  if (fan.maximal.empty()) return false;
  std::map<std::vector<IVec>, int> walls;
  for (const auto& c : fan.maximal) {
    if (!c.is_pointed() || c.dim() != fan.rank) return false;
    for (const auto& idx : c.facet_generator_sets()) {
      std::vector<IVec> sub;
      for (size_t i : idx) sub.push_back(c.generators()[i]);
      auto facet = RationalCone::from_generators(sub, fan.rank);
      ++walls[facet.generators()];
    }
  }
  for (const auto& [gens, count] : walls)
    if (count != 2) return false;
  return true;
}

bool is_smooth(const Fan& fan) {
  for (const auto& c : fan.maximal)
    if (!c.is_unimodular()) return false;
  return true;
}

std::optional<size_t> cone_containing(const Fan& fan, const IVec& x) {
  for (size_t i = 0; i < fan.maximal.size(); ++i)
    if (fan.maximal[i].contains(x)) return i;
  return std::nullopt;
}

Fan completion_fan(const LatticePolytope& p) {
  if (p.dim() != p.rank())
    fail(Errc::NotFullDimensional,
         "completion requires a full-dimensional polytope");
  std::vector<RationalCone> maximal;
  for (const auto& v : p.vertices()) {
    auto sigma = vertex_cone(p, v);
    maximal.push_back(
        RationalCone::from_generators(sigma.dual_rays(), p.rank()));
  }
  return make_fan(p.rank(), std::move(maximal));
}

std::vector<OrbitDescriptor> orbit_table(const LatticePolytope& p) {
  std::vector<OrbitDescriptor> out;
  const auto& faces = p.faces();
  for (size_t i = 0; i < faces.size(); ++i) {
    OrbitDescriptor d;
    d.face_index = i;
    d.orbit_dim = faces[i].dim;
    d.character_basis = lineality_subgroup(face_cone(p, faces[i]));
    out.push_back(std::move(d));
  }
  return out;
}

const Int& divisor_coefficient(const TorusInvariantDivisor& d,
                               const IVec& ray) {
  auto it = std::lower_bound(
      d.coeffs.begin(), d.coeffs.end(), ray,
      [](const std::pair<IVec, Int>& e, const IVec& r) {
        return lex_less(e.first, r);
      });
  if (it == d.coeffs.end() || it->first != ray)
    fail(Errc::RankMismatch, "ray is not part of the divisor's fan");
  return it->second;
}

DivisorClosure divisor_closure(const LaurentPolynomial& f, const Fan& fan) {
  if (f.rank() != fan.rank)
    fail(Errc::RankMismatch, "polynomial and fan rank differ");
  auto delta = newton_polytope(f);
  const IVec& anchor = delta.vertices().front();
  std::vector<IVec> verts;
  for (const auto& v : delta.vertices()) verts.push_back(vsub(v, anchor));

  DivisorClosure out;
  out.divisor.fan = fan;
  for (const auto& r : fan.rays) {
    Int mn = dot(r, verts.front());
    for (const auto& w : verts) mn = std::min(mn, Int(dot(r, w)));
    out.divisor.coeffs.emplace_back(r, -mn);
  }

  for (const auto& sigma : fan.maximal) {
    const IVec* found = nullptr;
    for (const auto& w : verts) {
      bool min_everywhere = true;
      for (const auto& g : sigma.generators()) {
        if (dot(g, w) != -divisor_coefficient(out.divisor, g)) {
          min_everywhere = false;
          break;
        }
      }
      if (min_everywhere) {
        found = &w;
        break;
      }
    }
    if (!found)
      fail(Errc::FanMismatch,
           "fan does not refine the normal fan of the Newton polytope");
    out.cartier_points.push_back(*found);
  }
  return out;
}

namespace {

// Rational linear functional agreeing with -a on every generator of the
// cone, if one exists.
std::optional<QVec> support_functional(const TorusInvariantDivisor& d,
                                       const RationalCone& sigma) {
  size_t mu = d.fan.rank;
  std::vector<QVec> rows;
  QVec rhs;
  std::vector<IVec> picked;
  for (const auto& g : sigma.generators()) {
    picked.push_back(g);
    IMat m(picked.size(), mu);
    for (size_t i = 0; i < picked.size(); ++i) m.a[i] = picked[i];
    if (rank_of(m) < picked.size()) {
      picked.pop_back();
      continue;
    }
    QVec row(mu);
    for (size_t k = 0; k < mu; ++k) row[k] = Rat(g[k]);
    rows.push_back(row);
    rhs.push_back(Rat(-divisor_coefficient(d, g)));
    if (picked.size() == mu) break;
  }
  if (picked.size() != mu) return std::nullopt;
  auto m = solve_square_q(rows, rhs);
  if (!m) return std::nullopt;
  for (const auto& g : sigma.generators())
    if (dot_iq(g, *m) != Rat(-divisor_coefficient(d, g))) return std::nullopt;
  return m;
}

}  // namespace

bool is_ample(const TorusInvariantDivisor& d) {
  if (!is_complete(d.fan))
    fail(Errc::IncompleteFan, "ampleness needs a complete fan");
  std::vector<QVec> functionals;
  for (const auto& sigma : d.fan.maximal) {
    auto m = support_functional(d, sigma);
    if (!m) return false;
    functionals.push_back(std::move(*m));
  }
  for (size_t i = 0; i < d.fan.maximal.size(); ++i) {
    const auto& sigma = d.fan.maximal[i];
    for (const auto& r : d.fan.rays) {
      if (sigma.contains(r)) continue;
      if (dot_iq(r, functionals[i]) <= Rat(-divisor_coefficient(d, r)))
        return false;
    }
  }
  return true;
}

bool orbit_avoidance(const LatticePolytope& p,
                     const std::vector<IVec>& support) {
  for (const auto& face : p.faces()) {
    bool hit = false;
    for (const auto& m : support)
      if (dot(face.functional, m) == face.offset) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool orbit_avoidance(const LaurentPolynomial& f) {
  return orbit_avoidance(newton_polytope(f), f.support());
}

QVec apply_monomial_map(const MonomialMap& theta, const QVec& point) {
  if (point.size() != theta.domain_rank())
    fail(Errc::RankMismatch, "point length does not match the map's domain");
  for (const auto& c : point)
    if (c == 0) fail(Errc::ParseError, "torus points have nonzero coordinates");
  QVec out;
  for (size_t j = 0; j < theta.codomain_rank(); ++j) {
    Rat v(1);
    for (size_t k = 0; k < theta.domain_rank(); ++k)
      v *= rat_pow(point[k], theta.matrix.a[j][k]);
    out.push_back(v);
  }
  return out;
}

LaurentPolynomial apply_monomial_map(const MonomialMap& theta,
                                     const LaurentPolynomial& f) {
  if (f.rank() != theta.codomain_rank())
    fail(Errc::RankMismatch,
         "polynomial rank does not match the map's codomain");
  std::vector<Term> terms;
  for (const auto& t : f.terms())
    terms.push_back({vec_mat(t.exp, theta.matrix), t.coeff});
  return LaurentPolynomial(theta.domain_rank(), terms);
}

MonomialMap compose(const MonomialMap& outer, const MonomialMap& inner) {
  if (outer.domain_rank() != inner.codomain_rank())
    fail(Errc::RankMismatch, "map ranks do not compose");
  return MonomialMap{mat_mul(outer.matrix, inner.matrix)};
}

ProjectionData equivariant_projection(const LatticePolytope& p,
                                      const Face& d) {
  ProjectionData out;
  out.basis = lineality_subgroup(face_cone(p, d));
  IMat m(out.basis.size(), p.rank());
  for (size_t i = 0; i < out.basis.size(); ++i) m.a[i] = out.basis[i];
  out.map = MonomialMap{std::move(m)};
  return out;
}

}  // namespace toruskit
