#include "toruskit/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "toruskit/errors.hpp"

namespace toruskit {

namespace {

size_t affine_rank(const std::vector<IVec>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<IVec> diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vsub(pts[i], pts[0]));
  return rank_of(IMat(diffs));
}

void next_combination(std::vector<size_t>& c, size_t n, bool& done) {
  size_t k = c.size();
  size_t i = k;
  while (i > 0 && c[i - 1] == n - k + i - 1) --i;
  if (i == 0) {
    done = true;
    return;
  }
  ++c[i - 1];
  for (size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
}

}  // namespace

LatticePolytope LatticePolytope::hull(const std::vector<IVec>& points, size_t mu) {
  if (points.empty()) fail(Errc::ParseError, "hull of an empty point set");
  std::vector<IVec> pts = points;
  for (const IVec& p : pts)
    if (p.size() != mu) fail(Errc::RankMismatch, "point length differs from rank");
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<IVec> diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vsub(pts[i], pts[0]));
  LatticePolytope p(mu, SpanChart(pts[0], diffs, mu));
  size_t d = p.chart_.dim();
  p.dim_ = d;

  std::vector<IVec> cpts;  // chart images, same order as pts
  cpts.reserve(pts.size());
  for (const IVec& q : pts) {
    auto c = p.chart_.to_chart(q);
    assert(c.has_value());
    cpts.push_back(*c);
  }

  if (d == 0) {
    p.vertices_ = {pts[0]};
    p.faces_.push_back(Face{IVec(mu, Int(0)), Int(0), {0}, 0});
    return p;
  }

  // Supporting hyperplanes from d-subsets of the points.
  std::set<std::pair<IVec, Int>> facet_set;
  std::vector<size_t> sel(d);
  for (size_t i = 0; i < d; ++i) sel[i] = i;
  bool done = false;
  while (!done) {
    std::vector<IVec> sub_diffs;
    for (size_t i = 1; i < d; ++i)
      sub_diffs.push_back(vsub(cpts[sel[i]], cpts[sel[0]]));
    std::vector<IVec> kernel = sub_diffs.empty()
                                   ? IMat::identity(1).a
                                   : integer_kernel(IMat(sub_diffs));
    if (kernel.size() == 1) {
      IVec n = kernel[0];
      Int v = dot(cpts[sel[0]], n);
      Int lo = v, hi = v;
      for (const IVec& q : cpts) {
        Int s = dot(q, n);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      if (v == lo && v != hi) facet_set.insert({n, v});
      if (v == hi && v != lo) facet_set.insert({vneg(n), -v});
    }
    next_combination(sel, cpts.size(), done);
  }
  for (const auto& [n, c] : facet_set) p.chart_facets_.push_back(Ineq{n, c});

  // A point is a vertex exactly when its active facet normals span the chart.
  std::vector<size_t> vertex_of;  // indices into pts
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<IVec> active;
    for (const Ineq& f : p.chart_facets_)
      if (dot(cpts[i], f.normal) == f.offset) active.push_back(f.normal);
    if (!active.empty() && rank_of(IMat(active)) == d) vertex_of.push_back(i);
  }
  for (size_t i : vertex_of) p.vertices_.push_back(pts[i]);  // pts lex sorted

  // Face lattice: vertex sets of facets, closed under intersection, plus the
  // whole polytope. Every proper face is an intersection of facets.
  std::vector<IVec> vcharts;
  for (size_t i : vertex_of) vcharts.push_back(cpts[i]);
  size_t nv = p.vertices_.size();
  std::set<std::vector<size_t>> face_sets;
  std::vector<size_t> all(nv);
  for (size_t i = 0; i < nv; ++i) all[i] = i;
  face_sets.insert(all);
  std::vector<std::vector<size_t>> facet_vsets;
  for (const Ineq& f : p.chart_facets_) {
    std::vector<size_t> s;
    for (size_t i = 0; i < nv; ++i)
      if (dot(vcharts[i], f.normal) == f.offset) s.push_back(i);
    facet_vsets.push_back(s);
    face_sets.insert(s);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<size_t>> current(face_sets.begin(), face_sets.end());
    for (size_t i = 0; i < current.size(); ++i)
      for (size_t j = i + 1; j < current.size(); ++j) {
        std::vector<size_t> inter;
        std::set_intersection(current[i].begin(), current[i].end(),
                              current[j].begin(), current[j].end(),
                              std::back_inserter(inter));
        if (!inter.empty() && face_sets.insert(inter).second) grew = true;
      }
  }

  for (const std::vector<size_t>& s : face_sets) {
    Face face;
    face.vertex_indices = s;
    std::vector<IVec> fpts;
    for (size_t i : s) fpts.push_back(p.vertices_[i]);
    face.dim = affine_rank(fpts);
    IVec chart_fn(d, Int(0));
    for (size_t k = 0; k < p.chart_facets_.size(); ++k) {
      bool active = std::includes(facet_vsets[k].begin(), facet_vsets[k].end(),
                                  s.begin(), s.end());
      if (active) chart_fn = vadd(chart_fn, p.chart_facets_[k].normal);
    }
    face.functional = p.chart_.functional_from_chart(chart_fn);
    Int off = dot(p.vertices_[s[0]], face.functional);
    for (size_t i : s) off = std::min(off, dot(p.vertices_[i], face.functional));
    face.offset = off;
    p.faces_.push_back(std::move(face));
  }
  std::sort(p.faces_.begin(), p.faces_.end(), [](const Face& x, const Face& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.vertex_indices < y.vertex_indices;
  });
  return p;
}

std::vector<IVec> lattice_points_in_box(const std::vector<IVec>& normals,
                                        const QVec& offsets, const IVec& lo,
                                        const IVec& hi) {
  size_t d = lo.size();
  assert(hi.size() == d);
  size_t nf = normals.size();
  assert(offsets.size() == nf);
  for (size_t k = 0; k < d; ++k)
    if (lo[k] > hi[k]) return {};

  // suffix_max[j][k]: largest value of sum_{i >= k} n_i x_i over the box.
  std::vector<std::vector<Rat>> suffix_max(nf, std::vector<Rat>(d + 1, Rat(0)));
  for (size_t j = 0; j < nf; ++j)
    for (size_t k = d; k-- > 0;) {
      Rat step = normals[j][k] >= 0 ? Rat(normals[j][k] * hi[k])
                                    : Rat(normals[j][k] * lo[k]);
      suffix_max[j][k] = suffix_max[j][k + 1] + step;
    }

  std::vector<IVec> out;
  IVec x(d, Int(0));
  QVec partial(nf, Rat(0));  // dot over fixed prefix

  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == d) {
      for (size_t j = 0; j < nf; ++j)
        if (partial[j] < offsets[j]) return;
      out.push_back(x);
      return;
    }
    Int l = lo[k], h = hi[k];
    for (size_t j = 0; j < nf; ++j) {
      const Int& c = normals[j][k];
      // partial + c*x_k + suffix_max[j][k+1] >= offsets[j] must stay possible.
      Rat slack = offsets[j] - partial[j] - suffix_max[j][k + 1];
      if (c == 0) {
        if (slack > 0) return;  // infeasible whatever x_k is
        continue;
      }
      Rat bound = slack / Rat(c);
      if (c > 0)
        l = std::max(l, ceil_rat(bound));
      else
        h = std::min(h, floor_rat(bound));
    }
    for (Int v = l; v <= h; ++v) {
      x[k] = v;
      for (size_t j = 0; j < nf; ++j) partial[j] += Rat(normals[j][k] * v);
      self(self, k + 1);
      for (size_t j = 0; j < nf; ++j) partial[j] -= Rat(normals[j][k] * v);
    }
    x[k] = 0;
  };
  rec(rec, 0);
  return out;
}

std::vector<IVec> LatticePolytope::lattice_points() const {
  size_t d = dim_;
  if (d == 0) return {chart_.base()};
  IVec lo(d), hi(d);
  std::vector<IVec> vcharts;
  for (const IVec& v : vertices_) vcharts.push_back(*chart_.to_chart(v));
  for (size_t k = 0; k < d; ++k) {
    lo[k] = hi[k] = vcharts[0][k];
    for (const IVec& c : vcharts) {
      lo[k] = std::min(lo[k], c[k]);
      hi[k] = std::max(hi[k], c[k]);
    }
  }
  std::vector<IVec> normals;
  QVec offsets;
  for (const Ineq& f : chart_facets_) {
    normals.push_back(f.normal);
    offsets.push_back(Rat(f.offset));
  }
  std::vector<IVec> out;
  for (const IVec& c : lattice_points_in_box(normals, offsets, lo, hi))
    out.push_back(chart_.from_chart(c));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

LatticePolytope LatticePolytope::dilate(const Int& n) const {
  if (n <= 0) fail(Errc::ParseError, "dilation factor must be positive");
  std::vector<IVec> scaled;
  for (const IVec& v : vertices_) scaled.push_back(vscale(n, v));
  return hull(scaled, mu_);
}

bool LatticePolytope::contains(const IVec& point) const {
  auto c = chart_.to_chart(point);
  if (!c.has_value()) return false;
  for (const Ineq& f : chart_facets_)
    if (dot(*c, f.normal) < f.offset) return false;
  return true;
}

std::vector<size_t> LatticePolytope::faces_containing(const Face& face) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < faces_.size(); ++i)
    if (std::includes(faces_[i].vertex_indices.begin(),
                      faces_[i].vertex_indices.end(),
                      face.vertex_indices.begin(), face.vertex_indices.end()))
      out.push_back(i);
  return out;
}

}  // namespace toruskit
