#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "toruskit/errors.hpp"
#include "toruskit/lattice.hpp"

using namespace toruskit;

namespace {

Int det_rec(const std::vector<IVec>& m) {
  size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int acc = 0;
  for (size_t i = 0; i < n; ++i) {
    if (m[i][0] == 0) continue;
    std::vector<IVec> sub;
    for (size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      IVec row(m[r].begin() + 1, m[r].end());
      sub.push_back(row);
    }
    Int term = m[i][0] * det_rec(sub);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

// Product of the first k Smith invariants equals the gcd of all k x k minors.
// Independent of any elimination path.
Int minor_gcd(const IMat& m, size_t k) {
  std::vector<size_t> ri(k), ci(k);
  Int g = 0;
  std::vector<size_t> rsel, csel;
  auto combos = [](size_t n, size_t k_) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> c(k_);
    for (size_t i = 0; i < k_; ++i) c[i] = i;
    while (true) {
      out.push_back(c);
      size_t i = k_;
      while (i > 0 && c[i - 1] == n - k_ + i - 1) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (size_t j = i; j < k_; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
  };
  for (const auto& rs : combos(m.rows, k))
    for (const auto& cs : combos(m.cols, k)) {
      std::vector<IVec> sub(k, IVec(k));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) sub[i][j] = m.a[rs[i]][cs[j]];
      g = igcd(g, det_rec(sub));
      if (g == 1) return g;
    }
  return g < 0 ? Int(-g) : g;
}

IMat random_mat(std::mt19937_64& rng, size_t r, size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IMat m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m.a[i][j] = d(rng);
  return m;
}

}  // namespace

TEST_CASE("smith normal form on pinned inputs") {
  IMat a({{Int(2), Int(0)}, {Int(0), Int(3)}});
  SmithDecomposition s = smith_normal_form(a);
  CHECK(s.diag == std::vector<Int>{Int(1), Int(6)});
  CHECK(s.rank == 2);

  IMat b({{Int(1), Int(1)}, {Int(1), Int(1)}});
  SmithDecomposition t = smith_normal_form(b);
  CHECK(t.diag == std::vector<Int>{Int(1), Int(0)});
  CHECK(t.rank == 1);
}

TEST_CASE("smith decomposition reconstructs and is unimodular") {
  std::mt19937_64 rng(20240811);
  for (int it = 0; it < 60; ++it) {
    size_t r = 1 + it % 4, c = 1 + (it / 4) % 4;
    IMat m = random_mat(rng, r, c, -6, 6);
    SmithDecomposition s = smith_normal_form(m);
    IMat d = mat_mul(mat_mul(s.left, m), s.right);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j)
        CHECK(d.a[i][j] == (i == j && i < s.diag.size() ? s.diag[i] : Int(0)));
    CHECK(mat_eq(mat_mul(s.left, s.left_inv), IMat::identity(r)));
    CHECK(mat_eq(mat_mul(s.right, s.right_inv), IMat::identity(c)));
    for (size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.diag[i + 1] % s.diag[i] == 0);
  }
}

TEST_CASE("smith invariants match the minor-gcd oracle") {
  std::mt19937_64 rng(77001);
  for (int it = 0; it < 40; ++it) {
    size_t r = 1 + it % 3, c = 1 + (it / 3) % 3;
    IMat m = random_mat(rng, r, c, -5, 5);
    SmithDecomposition s = smith_normal_form(m);
    Int prod = 1;
    for (size_t k = 1; k <= std::min(r, c); ++k) {
      Int g = minor_gcd(m, k);
      if (k <= s.rank) {
        prod *= s.diag[k - 1];
        CHECK(prod == g);
      } else {
        CHECK(g == 0);
      }
    }
  }
}

TEST_CASE("hermite form is invariant under row remixing") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int it = 0; it < 30; ++it) {
    IMat m = random_mat(rng, 3, 4, -4, 4);
    std::vector<IVec> rows = m.a;
    std::vector<IVec> mixed = rows;
    for (int step = 0; step < 12; ++step) {
      size_t i = pick(rng), j = pick(rng);
      if (i == j) continue;
      int k = pick(rng) - 1;
      for (size_t t = 0; t < 4; ++t) mixed[i][t] += Int(k) * mixed[j][t];
      if (step % 3 == 0) std::swap(mixed[i], mixed[j]);
    }
    CHECK(hermite_rows(rows, 4) == hermite_rows(mixed, 4));
  }
}

TEST_CASE("hermite pivots are positive and reduced") {
  std::vector<IVec> basis =
      hermite_rows({{Int(2), Int(4), Int(6)}, {Int(0), Int(3), Int(7)}}, 3);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0][0] > 0);
  CHECK(basis[1][0] == 0);
  CHECK(basis[1][1] > 0);
  CHECK(basis[0][1] >= 0);
  CHECK(basis[0][1] < basis[1][1]);
}

TEST_CASE("integer kernel annihilates and is saturated") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 30; ++it) {
    IMat m = random_mat(rng, 2, 4, -4, 4);
    std::vector<IVec> ker = integer_kernel(m);
    for (const IVec& k : ker) CHECK(is_zero(mat_vec(m, k)));
    if (!ker.empty())
      CHECK(saturate_sublattice(ker, 4) == hermite_rows(ker, 4));
  }
}

TEST_CASE("saturation of simple sublattices") {
  CHECK(saturate_sublattice({{Int(2), Int(0)}}, 2) ==
        std::vector<IVec>{{Int(1), Int(0)}});
  CHECK(saturate_sublattice({{Int(2), Int(4)}}, 2) ==
        std::vector<IVec>{{Int(1), Int(2)}});
  CHECK(saturate_sublattice({}, 3).empty());
  // Full-rank generators saturate to the whole lattice.
  auto full = saturate_sublattice({{Int(2), Int(0)}, {Int(0), Int(3)}}, 2);
  CHECK(full == IMat::identity(2).a);
}

TEST_CASE("saturation is idempotent and contains the generators") {
  std::mt19937_64 rng(1234);
  for (int it = 0; it < 25; ++it) {
    IMat m = random_mat(rng, 2, 3, -5, 5);
    auto sat = saturate_sublattice(m.a, 3);
    CHECK(saturate_sublattice(sat, 3) == sat);
    // Each generator is an integer combination of the saturated basis.
    if (!sat.empty()) {
      IMat basis_t = IMat(sat).transposed();
      for (const IVec& g : m.a) CHECK(solve_integer(basis_t, g).has_value());
    }
  }
}

TEST_CASE("unimodular extension test") {
  CHECK(is_unimodular_extension({{Int(1), Int(1)}}, 2));
  CHECK(is_unimodular_extension({{Int(1), Int(0)}, {Int(0), Int(1)}}, 2));
  CHECK_FALSE(is_unimodular_extension({{Int(1), Int(0)}, {Int(1), Int(2)}}, 2));
  CHECK_FALSE(is_unimodular_extension({{Int(2), Int(0)}}, 2));
  CHECK(is_unimodular_extension({}, 2));
  CHECK_THROWS_AS(is_unimodular_extension({{Int(1), Int(0)}, {Int(2), Int(0)}}, 2),
                  DomainError);
}

TEST_CASE("integer solve") {
  IMat a({{Int(2), Int(1)}, {Int(0), Int(3)}});
  auto x = solve_integer(a, {Int(5), Int(3)});
  REQUIRE(x.has_value());
  CHECK(mat_vec(a, *x) == IVec{Int(5), Int(3)});
  CHECK_FALSE(solve_integer(IMat({{Int(2)}}), {Int(1)}).has_value());
  CHECK_FALSE(solve_integer(IMat({{Int(1), Int(1)}, {Int(1), Int(1)}}),
                            {Int(0), Int(1)})
                  .has_value());
}

TEST_CASE("rational square solve") {
  std::vector<QVec> a = {{Rat(2), Rat(1)}, {Rat(1), Rat(-1)}};
  auto x = solve_square_q(a, {Rat(4), Rat(-1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1));
  CHECK((*x)[1] == Rat(2));
  std::vector<QVec> sing = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK_FALSE(solve_square_q(sing, {Rat(1), Rat(2)}).has_value());
}

TEST_CASE("span chart round trip and functional transport") {
  SpanChart chart({Int(1), Int(1), Int(1)},
                  {{Int(2), Int(0), Int(0)}, {Int(0), Int(3), Int(0)}}, 3);
  CHECK(chart.dim() == 2);
  IVec p = {Int(4), Int(-2), Int(1)};  // base + (3,-3,0), in the span
  auto c = chart.to_chart(p);
  REQUIRE(c.has_value());
  CHECK(chart.from_chart(*c) == p);
  CHECK_FALSE(chart.to_chart({Int(1), Int(1), Int(2)}).has_value());
  CHECK(*chart.to_chart(chart.base()) == IVec{Int(0), Int(0)});

  IVec w = {Int(5), Int(-1), Int(7)};
  IVec u = chart.functional_to_chart(w);
  Int base_val = dot(chart.base(), w);
  CHECK(dot(p, w) - base_val == dot(*c, u));

  IVec u2 = {Int(2), Int(-3)};
  IVec w2 = chart.functional_from_chart(u2);
  CHECK(dot(p, w2) - dot(chart.base(), w2) == dot(*c, u2));
}

TEST_CASE("span chart of a point has dimension zero") {
  SpanChart chart({Int(3), Int(4)}, {}, 2);
  CHECK(chart.dim() == 0);
  CHECK(chart.to_chart({Int(3), Int(4)}).has_value());
  CHECK_FALSE(chart.to_chart({Int(3), Int(5)}).has_value());
}
