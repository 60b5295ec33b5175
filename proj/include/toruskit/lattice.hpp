#pragma once

#include <optional>
#include <vector>

#include "toruskit/numbers.hpp"

namespace toruskit {

// Dense row-major integer matrix. Rows may be empty (0 x cols).
struct IMat {
  size_t rows = 0, cols = 0;
  std::vector<IVec> a;

  IMat() = default;
  IMat(size_t r, size_t c) : rows(r), cols(c), a(r, IVec(c, Int(0))) {}
  explicit IMat(std::vector<IVec> rows_in);

  IVec& operator[](size_t i) { return a[i]; }
  const IVec& operator[](size_t i) const { return a[i]; }

  static IMat identity(size_t n);
  IMat transposed() const;
};

IMat mat_mul(const IMat& x, const IMat& y);
IVec mat_vec(const IMat& m, const IVec& x);   // m * x, x a column
IVec vec_mat(const IVec& x, const IMat& m);   // x * m, x a row
bool mat_eq(const IMat& x, const IMat& y);

size_t rank_of(const IMat& m);

// left * input * right = diag(diag), all factors unimodular, entries of diag
// nonnegative with d1 | d2 | ... ; left_inv and right_inv are the inverses.
struct SmithDecomposition {
  IMat left, left_inv;
  IMat right, right_inv;
  std::vector<Int> diag;  // length min(rows, cols)
  size_t rank = 0;
};

SmithDecomposition smith_normal_form(const IMat& m);

// Canonical row Hermite form of the lattice generated by the given rows:
// pivots positive, entries above a pivot reduced into [0, pivot), zero rows
// dropped, rows ordered by pivot column. Unique per lattice.
std::vector<IVec> hermite_rows(std::vector<IVec> gens, size_t cols);

// Basis rows of { x in Z^cols : m * x = 0 }, Hermite-canonical. The kernel of
// an integer matrix is always saturated.
std::vector<IVec> integer_kernel(const IMat& m);

// One integer solution of m * x = b, if any.
std::optional<IVec> solve_integer(const IMat& m, const IVec& b);

// Unique rational solution of a square system, nullopt when singular.
std::optional<QVec> solve_square_q(const std::vector<QVec>& m, const QVec& b);

// Hermite basis of (Q-span of gens) intersected with Z^mu.
std::vector<IVec> saturate_sublattice(const std::vector<IVec>& gens, size_t mu);

// True iff the vectors extend to a Z-basis of Z^mu (all Smith invariants 1).
// DependentInput if they are linearly dependent.
bool is_unimodular_extension(const std::vector<IVec>& vecs, size_t mu);

// Unimodular coordinates on base + L for a saturated sublattice L of Z^mu.
// Charted points carry the full lattice structure of Z^d, d = rank L.
class SpanChart {
 public:
  // Chart on the saturation of the lattice generated by `diffs`.
  SpanChart(IVec base, const std::vector<IVec>& diffs, size_t mu);

  size_t ambient_rank() const { return mu_; }
  size_t dim() const { return d_; }
  const IVec& base() const { return base_; }

  // nullopt when x is not in base + span.
  std::optional<IVec> to_chart(const IVec& x) const;
  IVec from_chart(const IVec& c) const;

  // Functional transport: value agrees up to the constant <base, w>.
  IVec functional_to_chart(const IVec& w) const;
  IVec functional_from_chart(const IVec& u) const;

 private:
  size_t mu_ = 0, d_ = 0;
  IVec base_;
  IMat m_, minv_;  // x in chart: first d of (x - base) * m_
};

}  // namespace toruskit
