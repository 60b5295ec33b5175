#include "toruskit/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toruskit/errors.hpp"
#include "toruskit/linprog.hpp"

namespace toruskit {

namespace {

// Enumerate k-subsets of {0..n-1} in lexicographic order.
bool next_subset(std::vector<size_t>& idx, size_t n) {
  size_t k = idx.size();
  for (size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool all_pairings_nonneg(const std::vector<IVec>& gens, const IVec& n) {
  for (const auto& g : gens)
    if (dot(g, n) < 0) return false;
  return true;
}

}  // namespace

bool in_cone_hull(const std::vector<IVec>& gens, const IVec& x) {
  if (is_zero(x)) return true;
  if (gens.empty()) return false;
  size_t mu = x.size();
  size_t n = gens.size();
  std::vector<QVec> a;
  QVec b;
  for (size_t k = 0; k < mu; ++k) {
    QVec row(n), neg(n);
    for (size_t j = 0; j < n; ++j) {
      row[j] = Rat(gens[j][k]);
      neg[j] = -row[j];
    }
    a.push_back(row);
    b.push_back(Rat(x[k]));
    a.push_back(neg);
    b.push_back(Rat(-x[k]));
  }
  for (size_t j = 0; j < n; ++j) {
    QVec row(n, Rat(0));
    row[j] = Rat(-1);
    a.push_back(row);
    b.push_back(Rat(0));
  }
  LpResult r = lp_minimize(a, b, QVec(n, Rat(0)));
  return r.status == LpResult::Status::Optimal;
}

RationalCone RationalCone::from_generators(const std::vector<IVec>& gens,
                                           size_t mu) {
  RationalCone c(mu);
  std::set<IVec> seen;
  for (const auto& g : gens) {
    if (g.size() != mu) fail(Errc::RankMismatch, "generator length mismatch");
    if (is_zero(g)) continue;
    seen.insert(primitive(g));
  }
  std::vector<IVec> work(seen.begin(), seen.end());
  // Drop generators expressible from the remaining ones; lexicographic
  // processing order keeps the result deterministic.
  for (size_t i = 0; i < work.size();) {
    std::vector<IVec> others;
    for (size_t j = 0; j < work.size(); ++j)
      if (j != i) others.push_back(work[j]);
    if (in_cone_hull(others, work[i]))
      work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  c.gens_ = work;
  c.chart_ = SpanChart(IVec(mu, Int(0)), c.gens_, mu);
  size_t s = c.chart_.dim();

  std::vector<IVec> gh;
  for (const auto& g : c.gens_) {
    auto gc = c.chart_.to_chart(g);
    gh.push_back(*gc);
  }
  std::set<IVec> duals;
  if (s == 1) {
    IVec n{Int(1)};
    if (all_pairings_nonneg(gh, n)) duals.insert(n);
    IVec m{Int(-1)};
    if (all_pairings_nonneg(gh, m)) duals.insert(m);
  } else if (s >= 2) {
    std::vector<size_t> idx(s - 1);
    for (size_t i = 0; i < s - 1; ++i) idx[i] = i;
    do {
      IMat m(idx.size(), s);
      for (size_t r = 0; r < idx.size(); ++r)
        for (size_t k = 0; k < s; ++k) m.a[r][k] = gh[idx[r]][k];
      auto ker = integer_kernel(m);
      if (ker.size() != 1) continue;
      IVec n = ker[0];
      if (all_pairings_nonneg(gh, n))
        duals.insert(n);
      else {
        IVec nn = vneg(n);
        if (all_pairings_nonneg(gh, nn)) duals.insert(nn);
      }
    } while (next_subset(idx, gh.size()));
  }
  c.dual_chart_.assign(duals.begin(), duals.end());

  std::vector<IVec> reversible;
  for (size_t i = 0; i < c.gens_.size(); ++i) {
    auto nc = c.chart_.to_chart(vneg(c.gens_[i]));
    bool rev = nc.has_value();
    if (rev)
      for (const auto& h : c.dual_chart_)
        if (dot(*nc, h) < 0) {
          rev = false;
          break;
        }
    if (rev) reversible.push_back(c.gens_[i]);
  }
  if (!reversible.empty()) c.lineality_ = saturate_sublattice(reversible, mu);
  return c;
}

std::vector<IVec> RationalCone::dual_rays() const {
  std::vector<IVec> out;
  for (const auto& h : dual_chart_)
    out.push_back(primitive(chart_.functional_from_chart(h)));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

bool RationalCone::contains(const IVec& x) const {
  if (x.size() != mu_) fail(Errc::RankMismatch, "point length mismatch");
  auto xc = chart_.to_chart(x);
  if (!xc) return false;
  for (const auto& h : dual_chart_)
    if (dot(*xc, h) < 0) return false;
  return true;
}

bool RationalCone::is_unimodular() const {
  if (!is_pointed()) return false;
  if (gens_.empty()) return true;
  if (gens_.size() != dim()) return false;
  return is_unimodular_extension(gens_, mu_);
}

std::vector<std::vector<size_t>> RationalCone::facet_generator_sets() const {
  std::set<std::vector<size_t>> sets;
  for (const auto& h : dual_chart_) {
    std::vector<size_t> s;
    for (size_t i = 0; i < gens_.size(); ++i) {
      auto gc = chart_.to_chart(gens_[i]);
      if (dot(*gc, h) == 0) s.push_back(i);
    }
    sets.insert(s);
  }
  return {sets.begin(), sets.end()};
}

// Every lattice point is a convex combination of vertices, so vertex
// differences already generate the difference cones below.
RationalCone vertex_cone(const LatticePolytope& p, const IVec& m) {
  const auto& vs = p.vertices();
  if (std::find(vs.begin(), vs.end(), m) == vs.end())
    fail(Errc::NotAVertex, "point is not a vertex of the polytope");
  std::vector<IVec> gens;
  for (const auto& q : vs)
    if (q != m) gens.push_back(vsub(q, m));
  return RationalCone::from_generators(gens, p.rank());
}

RationalCone face_cone(const LatticePolytope& p, const Face& face) {
  std::vector<IVec> gens;
  for (const auto& q : p.vertices())
    for (size_t i : face.vertex_indices) {
      const IVec& m = p.vertices()[i];
      if (q != m) gens.push_back(vsub(q, m));
    }
  return RationalCone::from_generators(gens, p.rank());
}

std::vector<IVec> lineality_subgroup(const RationalCone& c) {
  return c.lineality_basis();
}

namespace {

// Strictly positive functional on cone minus origin, chart coordinates.
IVec positive_functional(const RationalCone& c) {
  IVec ell(c.dim(), Int(0));
  for (const auto& h : c.dual_rays_chart()) ell = vadd(ell, h);
  return ell;
}

// Lattice points x with dual pairings >= 0 and 0 < ell(x) <= bound,
// chart coordinates, sorted by (ell value, lex).
std::vector<IVec> truncated_cone_points(const RationalCone& c, const IVec& ell,
                                        const Int& bound) {
  size_t s = c.dim();
  std::vector<IVec> gh;
  for (const auto& g : c.generators()) gh.push_back(*c.chart().to_chart(g));
  IVec lo(s), hi(s);
  for (size_t k = 0; k < s; ++k) {
    Rat mn(0), mx(0);
    for (const auto& g : gh) {
      Int lg = dot(g, ell);
      Rat coord = Rat(Int(bound * g[k])) / Rat(lg);
      mn = std::min(mn, coord);
      mx = std::max(mx, coord);
    }
    lo[k] = floor_rat(mn);
    hi[k] = ceil_rat(mx);
  }
  std::vector<IVec> normals = c.dual_rays_chart();
  QVec offsets(normals.size(), Rat(0));
  normals.push_back(vneg(ell));
  offsets.push_back(Rat(-bound));
  auto pts = lattice_points_in_box(normals, offsets, lo, hi);
  std::vector<IVec> out;
  for (auto& x : pts)
    if (!is_zero(x)) out.push_back(std::move(x));
  std::stable_sort(out.begin(), out.end(), [&](const IVec& a, const IVec& b) {
    Int la = dot(a, ell), lb = dot(b, ell);
    if (la != lb) return la < lb;
    return lex_less(a, b);
  });
  return out;
}

bool in_dual_hrep(const std::vector<IVec>& duals, const IVec& x) {
  for (const auto& h : duals)
    if (dot(x, h) < 0) return false;
  return true;
}

std::vector<IVec> hilbert_basis_chart(const RationalCone& c) {
  size_t s = c.dim();
  if (s == 0) return {};
  IVec ell = positive_functional(c);
  Int lstar(0);
  for (const auto& g : c.generators())
    lstar += dot(*c.chart().to_chart(g), ell);
  auto region = truncated_cone_points(c, ell, lstar);
  const auto& duals = c.dual_rays_chart();
  std::vector<IVec> basis;
  for (const auto& t : region) {
    Int lt = dot(t, ell);
    bool reducible = false;
    for (const auto& y : region) {
      Int ly = dot(y, ell);
      if (2 * ly > lt) break;
      IVec z = vsub(t, y);
      if (in_dual_hrep(duals, z)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(t);
  }
  return basis;
}

}  // namespace

std::vector<IVec> hilbert_basis(const RationalCone& c) {
  if (!c.is_pointed())
    fail(Errc::NotPointed, "Hilbert basis requires a pointed cone");
  auto chart_elems = hilbert_basis_chart(c);
  std::vector<IVec> out;
  for (const auto& h : chart_elems) out.push_back(c.chart().from_chart(h));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

namespace {

// Membership of target in the monoid generated by gens, all in cone chart
// coordinates. gens sorted by ascending ell value; memo shared per call site.
bool monoid_member(const IVec& target, const std::vector<IVec>& gens,
                   const std::vector<IVec>& duals, const IVec& ell,
                   std::map<IVec, bool>& memo) {
  if (is_zero(target)) return true;
  auto it = memo.find(target);
  if (it != memo.end()) return it->second;
  Int lt = dot(target, ell);
  bool ok = false;
  for (const auto& g : gens) {
    if (dot(g, ell) > lt) break;
    IVec r = vsub(target, g);
    if (is_zero(r)) {
      ok = true;
      break;
    }
    if (!in_dual_hrep(duals, r)) continue;
    if (monoid_member(r, gens, duals, ell, memo)) {
      ok = true;
      break;
    }
  }
  memo[target] = ok;
  return ok;
}

// Saturation test at a vertex of p against a precomputed vertex cone and its
// Hilbert basis in chart coordinates. Only lattice points of p within the
// ell-ball of the largest Hilbert element can take part in any generation
// chain, so the scan is clipped there.
bool saturated_at(const LatticePolytope& p, const IVec& v,
                  const RationalCone& sigma,
                  const std::vector<IVec>& hilbert_chart) {
  if (hilbert_chart.empty()) return true;
  IVec ell = positive_functional(sigma);
  Int max_l(0);
  for (const auto& h : hilbert_chart) max_l = std::max(max_l, Int(dot(h, ell)));
  IVec ell_amb = sigma.chart().functional_from_chart(ell);

  const auto& pchart = p.chart();
  std::vector<IVec> normals;
  QVec offsets;
  for (const auto& f : p.chart_facets()) {
    normals.push_back(f.normal);
    offsets.push_back(Rat(f.offset));
  }
  IVec w = pchart.functional_to_chart(ell_amb);
  Int upper = max_l + dot(v, ell_amb) - dot(pchart.base(), ell_amb);
  normals.push_back(vneg(w));
  offsets.push_back(Rat(-upper));

  size_t d = pchart.dim();
  IVec lo(d), hi(d);
  bool first = true;
  for (const auto& vert : p.vertices()) {
    IVec vc = *pchart.to_chart(vert);
    for (size_t k = 0; k < d; ++k) {
      if (first || vc[k] < lo[k]) lo[k] = vc[k];
      if (first || vc[k] > hi[k]) hi[k] = vc[k];
    }
    first = false;
  }

  std::set<IVec> gen_set;
  for (const auto& xc : lattice_points_in_box(normals, offsets, lo, hi)) {
    IVec q = pchart.from_chart(xc);
    IVec dvec = vsub(q, v);
    if (is_zero(dvec)) continue;
    auto dc = sigma.chart().to_chart(dvec);
    if (!dc || !in_dual_hrep(sigma.dual_rays_chart(), *dc)) continue;
    gen_set.insert(*dc);
  }
  std::vector<IVec> gens(gen_set.begin(), gen_set.end());
  std::stable_sort(gens.begin(), gens.end(),
                   [&](const IVec& a, const IVec& b) {
                     Int la = dot(a, ell), lb = dot(b, ell);
                     if (la != lb) return la < lb;
                     return lex_less(a, b);
                   });

  std::map<IVec, bool> memo;
  for (const auto& h : hilbert_chart)
    if (!monoid_member(h, gens, sigma.dual_rays_chart(), ell, memo))
      return false;
  return true;
}

}  // namespace

bool is_saturated_at_vertex(const LatticePolytope& p, const IVec& vertex) {
  RationalCone sigma = vertex_cone(p, vertex);
  return saturated_at(p, vertex, sigma, hilbert_basis_chart(sigma));
}

Int smallest_good_multiple(const LatticePolytope& p, const Caps& caps) {
  // Vertex cones are invariant under dilation, so each vertex's cone and
  // Hilbert basis are computed once and reused for every multiple.
  const auto& verts = p.vertices();
  std::vector<RationalCone> cones;
  std::vector<std::vector<IVec>> bases;
  for (const auto& v : verts) {
    cones.push_back(vertex_cone(p, v));
    bases.push_back(hilbert_basis_chart(cones.back()));
  }
  for (int n = 1; n <= caps.cap_multiple; ++n) {
    LatticePolytope pn = p.dilate(Int(n));
    bool ok = true;
    for (size_t i = 0; i < verts.size() && ok; ++i) {
      IVec vn = vscale(Int(n), verts[i]);
      ok = saturated_at(pn, vn, cones[i], bases[i]);
    }
    if (ok) return Int(n);
  }
  fail(Errc::CapExceeded, "no good multiple within cap_multiple");
}

}  // namespace toruskit
