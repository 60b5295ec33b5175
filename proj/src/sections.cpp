#include "toruskit/sections.hpp"

#include <algorithm>
#include <set>

#include "toruskit/errors.hpp"
#include "toruskit/lattice.hpp"
#include "toruskit/polytope.hpp"

namespace toruskit {

namespace {

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

// Integer matrix rank of rational rows after clearing denominators.
size_t rank_q(const std::vector<QVec>& rows) {
  if (rows.empty()) return 0;
  IMat m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    Int lcm(1);
    for (const auto& q : rows[i]) lcm = lcm / igcd(lcm, den(q)) * den(q);
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.a[i][j] = num(rows[i][j]) * (lcm / den(rows[i][j]));
  }
  return rank_of(m);
}

}  // namespace

size_t SectionPolytope::dim() const {
  std::vector<QVec> diffs;
  for (size_t i = 1; i < vertices.size(); ++i) {
    QVec d(vertices[i].size());
    for (size_t j = 0; j < d.size(); ++j)
      d[j] = vertices[i][j] - vertices[0][j];
    diffs.push_back(std::move(d));
  }
  return rank_q(diffs);
}

SectionPolytope section_polytope(const TorusInvariantDivisor& d, const Int& m) {
  if (m <= 0) fail(Errc::ParseError, "multiple must be positive");
  if (!is_complete(d.fan))
    fail(Errc::IncompleteFan, "section polytope requires a complete fan");
  size_t mu = d.fan.rank;
  SectionPolytope out;
  for (const auto& [r, a] : d.coeffs) out.bounds.emplace_back(r, Rat(Int(-m * a)));

  size_t n = out.bounds.size();
  if (n < mu) return out;
  std::set<QVec> verts;
  std::vector<size_t> idx(mu);
  for (size_t i = 0; i < mu; ++i) idx[i] = i;
  do {
    std::vector<QVec> rows;
    QVec rhs;
    for (size_t i : idx) {
      QVec row(mu);
      for (size_t j = 0; j < mu; ++j) row[j] = Rat(out.bounds[i].first[j]);
      rows.push_back(std::move(row));
      rhs.push_back(out.bounds[i].second);
    }
    auto x = solve_square_q(rows, rhs);
    if (!x) continue;
    bool feasible = true;
    for (const auto& [r, b] : out.bounds)
      if (dot_iq(r, *x) < b) {
        feasible = false;
        break;
      }
    if (feasible) verts.insert(*x);
  } while (next_subset(idx, n));
  out.vertices.assign(verts.begin(), verts.end());
  return out;
}

Int h0(const TorusInvariantDivisor& d, const Int& m) {
  auto p = section_polytope(d, m);
  if (p.empty()) return Int(0);
  size_t mu = d.fan.rank;
  IVec lo(mu), hi(mu);
  for (size_t j = 0; j < mu; ++j) {
    Rat mn = p.vertices[0][j], mx = p.vertices[0][j];
    for (const auto& v : p.vertices) {
      mn = std::min(v[j], mn);
      mx = std::max(v[j], mx);
    }
    lo[j] = ceil_rat(mn);
    hi[j] = floor_rat(mx);
    if (lo[j] > hi[j]) return Int(0);
  }
  std::vector<IVec> normals;
  QVec offsets;
  for (const auto& [r, b] : p.bounds) {
    normals.push_back(r);
    offsets.push_back(b);
  }
  return Int(lattice_points_in_box(normals, offsets, lo, hi).size());
}

TorusInvariantDivisor scale_divisor(const TorusInvariantDivisor& d,
                                    const Int& k) {
  TorusInvariantDivisor out;
  out.fan = d.fan;
  for (const auto& [r, a] : d.coeffs) out.coeffs.emplace_back(r, Int(k * a));
  return out;
}

KodairaReport d_dimension(const TorusInvariantDivisor& d, const Caps& caps) {
  if (!is_complete(d.fan))
    fail(Errc::IncompleteFan, "growth summary requires a complete fan");
  KodairaReport rep;
  rep.m_max = caps.m_max;
  Int g(0);
  for (int m = 1; m <= caps.m_max; ++m) {
    Int count = h0(d, Int(m));
    rep.samples.emplace_back(Int(m), count);
    if (count > 0) g = igcd(g, Int(m));
  }
  if (g == 0) {
    rep.finite = false;
    rep.m0 = 0;
    rep.big = false;
    rep.methods = {"no-sections-up-to-cap"};
    return rep;
  }
  rep.finite = true;
  rep.m0 = g;
  auto stab = section_polytope(d, Int(g * caps.m_max));
  rep.kappa = static_cast<int>(stab.empty() ? 0 : stab.dim());
  rep.big = rep.kappa == static_cast<int>(d.fan.rank);
  rep.methods = {"section-polytope-dimension"};
  return rep;
}

bool is_big_double(const TorusInvariantDivisor& dbar, const Caps& caps) {
  auto rep = d_dimension(scale_divisor(dbar, Int(2)), caps);
  if (!rep.finite || rep.kappa < static_cast<int>(dbar.fan.rank))
    fail(Errc::StabilizerNotTrivial,
         "double of the class is degenerate; its stabilizer has positive rank");
  return rep.big;
}

LaurentPolynomial quotient_by_stabilizer(const LaurentPolynomial& f) {
  auto np = newton_polytope(f);
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    auto e = np.chart().to_chart(t.exp);
    terms.push_back({*e, t.coeff});
  }
  return LaurentPolynomial(np.dim(), std::move(terms));
}

KodairaReport log_kodaira_dimension(const LaurentPolynomial& f) {
  auto np = newton_polytope(f);
  KodairaReport rep;
  rep.finite = true;
  rep.kappa = static_cast<int>(np.dim());
  rep.m0 = 1;
  rep.big = np.dim() == f.rank();
  rep.m_max = 0;
  rep.methods = {"newton-polytope-dimension"};
  return rep;
}

}  // namespace toruskit
