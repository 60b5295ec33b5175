#include "toruskit/lattice.hpp"

#include <algorithm>
#include <cassert>

#include "toruskit/errors.hpp"

namespace toruskit {

IMat::IMat(std::vector<IVec> rows_in) {
  rows = rows_in.size();
  cols = rows ? rows_in[0].size() : 0;
  for (const IVec& r : rows_in) assert(r.size() == cols);
  a = std::move(rows_in);
}

IMat IMat::identity(size_t n) {
  IMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.a[i][i] = 1;
  return m;
}

IMat IMat::transposed() const {
  IMat t(cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) t.a[j][i] = a[i][j];
  return t;
}

IMat mat_mul(const IMat& x, const IMat& y) {
  assert(x.cols == y.rows);
  IMat r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      if (x.a[i][k] == 0) continue;
      for (size_t j = 0; j < y.cols; ++j) r.a[i][j] += x.a[i][k] * y.a[k][j];
    }
  return r;
}

IVec mat_vec(const IMat& m, const IVec& x) {
  assert(m.cols == x.size());
  IVec r(m.rows, Int(0));
  for (size_t i = 0; i < m.rows; ++i) r[i] = dot(m.a[i], x);
  return r;
}

IVec vec_mat(const IVec& x, const IMat& m) {
  assert(m.rows == x.size());
  IVec r(m.cols, Int(0));
  for (size_t i = 0; i < m.rows; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < m.cols; ++j) r[j] += x[i] * m.a[i][j];
  }
  return r;
}

bool mat_eq(const IMat& x, const IMat& y) {
  return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

size_t rank_of(const IMat& m) { return smith_normal_form(m).rank; }

namespace {

struct SnfWork {
  IMat a, l, linv, r, rinv;

  void row_swap(size_t i, size_t j) {
    if (i == j) return;
    std::swap(a.a[i], a.a[j]);
    std::swap(l.a[i], l.a[j]);
    for (size_t k = 0; k < linv.rows; ++k) std::swap(linv.a[k][i], linv.a[k][j]);
  }
  void col_swap(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < a.rows; ++k) std::swap(a.a[k][i], a.a[k][j]);
    for (size_t k = 0; k < r.rows; ++k) std::swap(r.a[k][i], r.a[k][j]);
    std::swap(rinv.a[i], rinv.a[j]);
  }
  void row_negate(size_t i) {
    for (Int& x : a.a[i]) x = -x;
    for (Int& x : l.a[i]) x = -x;
    for (size_t k = 0; k < linv.rows; ++k) linv.a[k][i] = -linv.a[k][i];
  }
  // row_j += q * row_i
  void row_add(size_t j, size_t i, const Int& q) {
    if (q == 0) return;
    for (size_t k = 0; k < a.cols; ++k) a.a[j][k] += q * a.a[i][k];
    for (size_t k = 0; k < l.cols; ++k) l.a[j][k] += q * l.a[i][k];
    for (size_t k = 0; k < linv.rows; ++k) linv.a[k][i] -= q * linv.a[k][j];
  }
  // col_j += q * col_i
  void col_add(size_t j, size_t i, const Int& q) {
    if (q == 0) return;
    for (size_t k = 0; k < a.rows; ++k) a.a[k][j] += q * a.a[k][i];
    for (size_t k = 0; k < r.rows; ++k) r.a[k][j] += q * r.a[k][i];
    for (size_t k = 0; k < rinv.cols; ++k) rinv.a[i][k] -= q * rinv.a[j][k];
  }
};

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SmithDecomposition smith_normal_form(const IMat& m) {
  SnfWork w;
  w.a = m;
  w.l = IMat::identity(m.rows);
  w.linv = IMat::identity(m.rows);
  w.r = IMat::identity(m.cols);
  w.rinv = IMat::identity(m.cols);

  size_t n = std::min(m.rows, m.cols);
  size_t t = 0;
  while (t < n) {
    // Locate the submatrix entry of least absolute value.
    size_t bi = t, bj = t;
    bool found = false;
    for (size_t i = t; i < m.rows; ++i)
      for (size_t j = t; j < m.cols; ++j) {
        if (w.a.a[i][j] == 0) continue;
        if (!found || iabs(w.a.a[i][j]) < iabs(w.a.a[bi][bj])) {
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) break;
    w.row_swap(t, bi);
    w.col_swap(t, bj);
    if (w.a.a[t][t] < 0) w.row_negate(t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < m.rows; ++i) {
        if (w.a.a[i][t] == 0) continue;
        Int q = floor_div(w.a.a[i][t], w.a.a[t][t]);
        w.row_add(i, t, -q);
        if (w.a.a[i][t] != 0) {
          w.row_swap(t, i);  // strictly smaller pivot
          if (w.a.a[t][t] < 0) w.row_negate(t);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < m.cols; ++j) {
        if (w.a.a[t][j] == 0) continue;
        Int q = floor_div(w.a.a[t][j], w.a.a[t][t]);
        w.col_add(j, t, -q);
        if (w.a.a[t][j] != 0) {
          w.col_swap(t, j);
          if (w.a.a[t][t] < 0) w.row_negate(t);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide the rest of the submatrix.
      for (size_t i = t + 1; i < m.rows && clean; ++i)
        for (size_t j = t + 1; j < m.cols && clean; ++j)
          if (w.a.a[i][j] % w.a.a[t][t] != 0) {
            w.row_add(t, i, Int(1));
            clean = false;
          }
    }
    ++t;
  }

  SmithDecomposition out;
  out.left = w.l;
  out.left_inv = w.linv;
  out.right = w.r;
  out.right_inv = w.rinv;
  out.diag.resize(n);
  for (size_t i = 0; i < n; ++i) out.diag[i] = w.a.a[i][i];
  out.rank = t;
  return out;
}

std::vector<IVec> hermite_rows(std::vector<IVec> gens, size_t cols) {
  for (const IVec& g : gens) {
    (void)g;
    assert(g.size() == cols);
  }
  std::vector<IVec> rows = std::move(gens);
  std::vector<std::pair<size_t, size_t>> pivots;  // (row index, pivot col)
  size_t next = 0;
  for (size_t col = 0; col < cols; ++col) {
    // Combine rows below `next` until at most one has a nonzero entry here.
    while (true) {
      size_t i1 = rows.size(), i2 = rows.size();
      for (size_t i = next; i < rows.size(); ++i)
        if (rows[i][col] != 0) {
          if (i1 == rows.size())
            i1 = i;
          else {
            i2 = i;
            break;
          }
        }
      if (i2 == rows.size()) break;
      if (iabs(rows[i1][col]) > iabs(rows[i2][col])) std::swap(i1, i2);
      Int q = floor_div(rows[i2][col], rows[i1][col]);
      for (size_t k = 0; k < cols; ++k) rows[i2][k] -= q * rows[i1][k];
    }
    size_t piv = rows.size();
    for (size_t i = next; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[next], rows[piv]);
    if (rows[next][col] < 0)
      for (Int& x : rows[next]) x = -x;
    pivots.push_back({next, col});
    ++next;
  }
  rows.resize(next);
  // Reduce entries above each pivot into [0, pivot).
  for (const auto& [ri, col] : pivots) {
    for (size_t i = 0; i < ri; ++i) {
      Int q = floor_div(rows[i][col], rows[ri][col]);
      if (q == 0) continue;
      for (size_t k = 0; k < cols; ++k) rows[i][k] -= q * rows[ri][k];
    }
  }
  return rows;
}

std::vector<IVec> integer_kernel(const IMat& m) {
  if (m.rows == 0) {
    std::vector<IVec> basis;
    for (size_t j = 0; j < m.cols; ++j) {
      IVec e(m.cols, Int(0));
      e[j] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  SmithDecomposition s = smith_normal_form(m);
  std::vector<IVec> basis;
  for (size_t j = s.rank; j < m.cols; ++j) {
    IVec col(m.cols);
    for (size_t i = 0; i < m.cols; ++i) col[i] = s.right.a[i][j];
    basis.push_back(col);
  }
  return hermite_rows(std::move(basis), m.cols);
}

std::optional<IVec> solve_integer(const IMat& m, const IVec& b) {
  assert(b.size() == m.rows);
  SmithDecomposition s = smith_normal_form(m);
  IVec y = mat_vec(s.left, b);
  IVec z(m.cols, Int(0));
  size_t n = std::min(m.rows, m.cols);
  for (size_t i = 0; i < m.rows; ++i) {
    if (i < n && s.diag[i] != 0) {
      if (y[i] % s.diag[i] != 0) return std::nullopt;
      z[i] = y[i] / s.diag[i];
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return mat_vec(s.right, z);
}

std::optional<QVec> solve_square_q(const std::vector<QVec>& m, const QVec& b) {
  size_t n = m.size();
  assert(b.size() == n);
  std::vector<QVec> a = m;
  QVec rhs = b;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = n;
    for (size_t i = col; i < n; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == n) return std::nullopt;
    std::swap(a[col], a[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col] / a[col][col];
      for (size_t k = col; k < n; ++k) a[i][k] -= f * a[col][k];
      rhs[i] -= f * rhs[col];
    }
  }
  QVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

std::vector<IVec> saturate_sublattice(const std::vector<IVec>& gens, size_t mu) {
  std::vector<IVec> nz;
  for (const IVec& g : gens) {
    assert(g.size() == mu);
    if (!is_zero(g)) nz.push_back(g);
  }
  if (nz.empty()) return {};
  std::vector<IVec> ker = integer_kernel(IMat(nz));
  if (ker.empty()) return IMat::identity(mu).a;
  return integer_kernel(IMat(ker));
}

bool is_unimodular_extension(const std::vector<IVec>& vecs, size_t mu) {
  if (vecs.empty()) return true;
  for (const IVec& v : vecs) {
    (void)v;
    assert(v.size() == mu);
  }
  SmithDecomposition s = smith_normal_form(IMat(vecs));
  if (s.rank < vecs.size())
    fail(Errc::DependentInput, "vectors are linearly dependent");
  for (size_t i = 0; i < s.rank; ++i)
    if (s.diag[i] != 1) return false;
  return true;
}

SpanChart::SpanChart(IVec base, const std::vector<IVec>& diffs, size_t mu)
    : mu_(mu), base_(std::move(base)) {
  assert(base_.size() == mu);
  std::vector<IVec> sat = saturate_sublattice(diffs, mu);
  d_ = sat.size();
  if (d_ == 0) {
    m_ = IMat::identity(mu);
    minv_ = IMat::identity(mu);
    return;
  }
  SmithDecomposition s = smith_normal_form(IMat(sat));
  // First d_ rows of right_inv form a basis of the saturated lattice, and
  // right_inv is unimodular, so (x - base) * right lands in Z^d x {0}.
  m_ = s.right;
  minv_ = s.right_inv;
}

std::optional<IVec> SpanChart::to_chart(const IVec& x) const {
  assert(x.size() == mu_);
  IVec y = vec_mat(vsub(x, base_), m_);
  for (size_t i = d_; i < mu_; ++i)
    if (y[i] != 0) return std::nullopt;
  y.resize(d_);
  return y;
}

IVec SpanChart::from_chart(const IVec& c) const {
  assert(c.size() == d_);
  IVec full(mu_, Int(0));
  for (size_t i = 0; i < d_; ++i) full[i] = c[i];
  return vadd(vec_mat(full, minv_), base_);
}

IVec SpanChart::functional_to_chart(const IVec& w) const {
  assert(w.size() == mu_);
  IVec u = mat_vec(minv_, w);
  u.resize(d_);
  return u;
}

IVec SpanChart::functional_from_chart(const IVec& u) const {
  assert(u.size() == d_);
  IVec full(mu_, Int(0));
  for (size_t i = 0; i < d_; ++i) full[i] = u[i];
  return mat_vec(m_, full);
}

}  // namespace toruskit
