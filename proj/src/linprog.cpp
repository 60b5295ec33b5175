#include "toruskit/linprog.hpp"

#include <cassert>

namespace toruskit {

namespace {

// Tableau simplex in equality form: minimize c.y, M y = rhs, y >= 0.
// Bland's rule, so it terminates without perturbation.
struct Tableau {
  size_t m, n;
  std::vector<QVec> a;  // m x n
  QVec b;               // m, kept nonnegative
  QVec cost;            // n, reduced costs
  Rat shift = 0;
  std::vector<size_t> basis;  // m column indices

  void pivot(size_t row, size_t col) {
    Rat p = a[row][col];
    for (size_t j = 0; j < n; ++j) a[row][j] /= p;
    b[row] /= p;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    Rat f = cost[col];
    if (f != 0) {
      for (size_t j = 0; j < n; ++j) cost[j] -= f * a[row][j];
      shift -= f * b[row];
    }
    basis[row] = col;
  }

  void reduce_cost_over_basis() {
    for (size_t i = 0; i < m; ++i) {
      Rat f = cost[basis[i]];
      if (f == 0) continue;
      for (size_t j = 0; j < n; ++j) cost[j] -= f * a[i][j];
      shift -= f * b[i];
    }
  }

  // Returns false when unbounded.
  bool run() {
    while (true) {
      size_t col = n;
      for (size_t j = 0; j < n; ++j)
        if (cost[j] < 0) {
          col = j;
          break;
        }
      if (col == n) return true;
      size_t row = m;
      for (size_t i = 0; i < m; ++i) {
        if (a[i][col] <= 0) continue;
        if (row == m) {
          row = i;
          continue;
        }
        Rat cur = b[i] / a[i][col], best = b[row] / a[row][col];
        if (cur < best || (cur == best && basis[i] < basis[row])) row = i;
      }
      if (row == m) return false;
      pivot(row, col);
    }
  }
};

}  // namespace

LpResult lp_minimize(const std::vector<QVec>& a, const QVec& b, const QVec& c) {
  size_t rows = a.size(), vars = c.size();
  for (const QVec& r : a) {
    (void)r;
    assert(r.size() == vars);
  }
  assert(b.size() == rows);

  // Split free variables and add slacks: a (y+ - y-) + s = b.
  size_t n0 = 2 * vars + rows;
  Tableau t;
  t.m = rows;
  t.n = n0 + rows;  // plus one artificial per row
  t.a.assign(rows, QVec(t.n, Rat(0)));
  t.b.resize(rows);
  t.basis.resize(rows);
  for (size_t i = 0; i < rows; ++i) {
    int flip = b[i] < 0 ? -1 : 1;
    for (size_t j = 0; j < vars; ++j) {
      t.a[i][j] = Rat(flip) * a[i][j];
      t.a[i][vars + j] = Rat(-flip) * a[i][j];
    }
    t.a[i][2 * vars + i] = flip;
    t.a[i][n0 + i] = 1;
    t.b[i] = Rat(flip) * b[i];
    t.basis[i] = n0 + i;
  }

  // Phase 1: minimize the artificial sum.
  t.cost.assign(t.n, Rat(0));
  for (size_t i = 0; i < rows; ++i) t.cost[n0 + i] = 1;
  t.reduce_cost_over_basis();
  bool phase1_bounded = t.run();
  assert(phase1_bounded);
  (void)phase1_bounded;

  LpResult out;
  Rat art = 0;
  for (size_t i = 0; i < rows; ++i)
    if (t.basis[i] >= n0) art += t.b[i];
  if (art != 0) {
    out.status = LpResult::Status::Infeasible;
    return out;
  }
  // Drive remaining artificials out; rows where none of the real columns can
  // pivot are redundant and get dropped below.
  for (size_t i = 0; i < rows; ++i) {
    if (t.basis[i] < n0) continue;
    for (size_t j = 0; j < n0; ++j)
      if (t.a[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
  }

  Tableau p2;
  p2.n = n0;
  p2.m = 0;
  for (size_t i = 0; i < rows; ++i) {
    if (t.basis[i] >= n0) continue;
    QVec row(t.a[i].begin(), t.a[i].begin() + n0);
    p2.a.push_back(std::move(row));
    p2.b.push_back(t.b[i]);
    p2.basis.push_back(t.basis[i]);
  }
  p2.m = p2.a.size();
  p2.cost.assign(n0, Rat(0));
  for (size_t j = 0; j < vars; ++j) {
    p2.cost[j] = c[j];
    p2.cost[vars + j] = -c[j];
  }
  p2.reduce_cost_over_basis();
  if (!p2.run()) {
    out.status = LpResult::Status::Unbounded;
    return out;
  }

  QVec y(n0, Rat(0));
  for (size_t i = 0; i < p2.m; ++i) y[p2.basis[i]] = p2.b[i];
  out.x.resize(vars);
  Rat val = 0;
  for (size_t j = 0; j < vars; ++j) {
    out.x[j] = y[j] - y[vars + j];
    val += c[j] * out.x[j];
  }
  out.value = val;
  out.status = LpResult::Status::Optimal;
  return out;
}

}  // namespace toruskit
