#pragma once

#include <vector>

#include "toruskit/lattice.hpp"
#include "toruskit/numbers.hpp"

namespace toruskit {

// A face of a lattice polytope, witnessed by a supporting functional: the
// functional attains its minimum over the polytope exactly on this face.
// The whole polytope is a face with the zero functional.
struct Face {
  IVec functional;                     // ambient dual vector
  Int offset;                          // min of the functional on the polytope
  std::vector<size_t> vertex_indices;  // into vertices(), sorted
  size_t dim = 0;
};

// Convex hull of finitely many points of Z^mu. Degenerate (lower-dimensional)
// polytopes are first-class; facet data lives in unimodular coordinates on
// the affine span.
class LatticePolytope {
 public:
  struct Ineq {
    IVec normal;  // primitive, in chart coordinates
    Int offset;   // <x, normal> >= offset for charted points x
  };

  static LatticePolytope hull(const std::vector<IVec>& points, size_t mu);

  size_t rank() const { return mu_; }
  size_t dim() const { return dim_; }
  const std::vector<IVec>& vertices() const { return vertices_; }  // lex sorted
  const SpanChart& chart() const { return chart_; }
  const std::vector<Ineq>& chart_facets() const { return chart_facets_; }
  const std::vector<Face>& faces() const { return faces_; }  // by (dim, vertices)

  std::vector<IVec> lattice_points() const;  // lex sorted
  LatticePolytope dilate(const Int& n) const;
  bool contains(const IVec& point) const;

  // Faces whose vertex set contains the given face's vertex set.
  std::vector<size_t> faces_containing(const Face& face) const;

 private:
  LatticePolytope(size_t mu, SpanChart chart) : mu_(mu), chart_(std::move(chart)) {}

  size_t mu_ = 0;
  size_t dim_ = 0;
  SpanChart chart_;
  std::vector<IVec> vertices_;
  std::vector<Ineq> chart_facets_;
  std::vector<Face> faces_;
};

// Integer points x with lo <= x <= hi componentwise and
// dot(normals[j], x) >= offsets[j] for every j, in lexicographic order.
// Interval pruning per axis; exact filtering at the leaves.
std::vector<IVec> lattice_points_in_box(const std::vector<IVec>& normals,
                                        const QVec& offsets, const IVec& lo,
                                        const IVec& hi);

}  // namespace toruskit
