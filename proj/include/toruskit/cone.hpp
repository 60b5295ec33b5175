#pragma once

#include <vector>

#include "toruskit/caps.hpp"
#include "toruskit/lattice.hpp"
#include "toruskit/numbers.hpp"
#include "toruskit/polytope.hpp"

namespace toruskit {

// Rational polyhedral cone in Z^mu given by finitely many generators.
// Generators are stored primitive, irredundant and lexicographically sorted;
// for pointed cones this is the unique list of extreme rays, so structural
// equality of pointed cones is generator-list equality.
class RationalCone {
 public:
  static RationalCone from_generators(const std::vector<IVec>& gens, size_t mu);

  size_t rank() const { return mu_; }
  size_t dim() const { return chart_.dim(); }
  size_t lineality_rank() const { return lineality_.size(); }
  bool is_pointed() const { return lineality_.empty(); }
  const std::vector<IVec>& generators() const { return gens_; }
  const std::vector<IVec>& lineality_basis() const { return lineality_; }
  const SpanChart& chart() const { return chart_; }

  // Extreme rays of the dual cone within the span, chart coordinates.
  // Membership in the cone is: lies in the span, pairs >= 0 with all of them.
  const std::vector<IVec>& dual_rays_chart() const { return dual_chart_; }
  std::vector<IVec> dual_rays() const;

  bool contains(const IVec& x) const;

  // Pointed, linearly independent generators extending to a Z-basis.
  bool is_unimodular() const;

  // Generator index sets of the facets (codimension-one faces).
  std::vector<std::vector<size_t>> facet_generator_sets() const;

  bool operator==(const RationalCone& o) const {
    return mu_ == o.mu_ && gens_ == o.gens_;
  }

 private:
  explicit RationalCone(size_t mu) : mu_(mu), chart_(IVec(mu, Int(0)), {}, mu) {}

  size_t mu_ = 0;
  std::vector<IVec> gens_;
  std::vector<IVec> lineality_;
  SpanChart chart_;
  std::vector<IVec> dual_chart_;
};

// Nonnegative-combination membership, LP-backed. Independent of the dual-ray
// representation; used for canonicalization and as an oracle.
bool in_cone_hull(const std::vector<IVec>& gens, const IVec& x);

// Cone at a lattice point m of p generated by { q - m : q lattice point }.
// NotAVertex unless m is a vertex.
RationalCone vertex_cone(const LatticePolytope& p, const IVec& m);

// Cone generated by { q - m : q a lattice point of p, m a lattice point of
// the face }. Its lineality rank equals the face dimension.
RationalCone face_cone(const LatticePolytope& p, const Face& face);

// Hermite basis of the saturated subgroup cone ∩ -cone ∩ Z^mu.
std::vector<IVec> lineality_subgroup(const RationalCone& c);

// Unique minimal generating set of cone ∩ Z^mu for a pointed cone, sorted
// lexicographically. NotPointed otherwise.
std::vector<IVec> hilbert_basis(const RationalCone& c);

// True when the lattice-point differences at the vertex generate the full
// saturated monoid vertex_cone ∩ Z^mu.
bool is_saturated_at_vertex(const LatticePolytope& p, const IVec& vertex);

// Least n >= 1 with every vertex of n*p saturated; CapExceeded past the cap.
Int smallest_good_multiple(const LatticePolytope& p, const Caps& caps = Caps{});

}  // namespace toruskit
