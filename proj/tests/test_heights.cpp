#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "toruskit/errors.hpp"
#include "toruskit/heights.hpp"
#include "toruskit/laurent.hpp"
#include "toruskit/polytope.hpp"

using namespace toruskit;

namespace {

IVec iv(std::initializer_list<long long> xs) {
  IVec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

std::vector<IVec> ivs(std::initializer_list<std::initializer_list<long long>> xs) {
  std::vector<IVec> v;
  for (auto x : xs) v.push_back(iv(x));
  return v;
}

QVec qv(std::initializer_list<long long> xs) {
  QVec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

RationalTorusPoint pt(std::initializer_list<Rat> xs) {
  return make_point(QVec(xs));
}

LatticePolytope segment01() { return LatticePolytope::hull(ivs({{0}, {1}}), 1); }

LatticePolytope unit_square() {
  return LatticePolytope::hull(ivs({{0, 0}, {0, 1}, {1, 0}, {1, 1}}), 2);
}

LogReal logr(long long n, long long d = 1) {
  return LogReal::log_of(Rat(Int(n)) / Rat(Int(d)));
}

Rat classical_height(const Rat& q) {
  Int n = num(q);
  if (n < 0) n = -n;
  return Rat(std::max(n, Int(den(q))));
}

LaurentPolynomial x_minus_one() {
  return LaurentPolynomial(1, {{iv({1}), Rat(1)}, {iv({0}), Rat(-1)}});
}

LaurentPolynomial difference_of_coordinates() {
  return LaurentPolynomial(2, {{iv({1, 0}), Rat(1)}, {iv({0, 1}), Rat(-1)}});
}

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numd(-9, 9), dend(1, 9);
  int n = 0;
  while (n == 0) n = numd(rng);
  return Rat(n) / Rat(dend(rng));
}

LaurentPolynomial random_poly(std::mt19937_64& rng, size_t rank) {
  std::uniform_int_distribution<int> nterms(2, 4), expd(-3, 3), coeffd(-5, 5);
  while (true) {
    std::vector<Term> terms;
    std::set<IVec> seen;
    int want = nterms(rng);
    for (int t = 0; t < want; ++t) {
      IVec e(rank);
      for (auto& x : e) x = expd(rng);
      int c = coeffd(rng);
      if (c == 0 || !seen.insert(e).second) continue;
      terms.push_back({e, Rat(c)});
    }
    if (terms.size() >= 2) return LaurentPolynomial(rank, std::move(terms));
  }
}

}  // namespace

TEST_CASE("factorization, valuations, and place sets") {
  auto f = factor_rational(Rat(12) / Rat(5));
  REQUIRE(f.size() == 3);
  CHECK(f[Int(2)] == 2);
  CHECK(f[Int(3)] == 1);
  CHECK(f[Int(5)] == -1);
  CHECK(factor_rational(Rat(1)).empty());
  CHECK(factor_rational(Rat(-1)).empty());
  CHECK_THROWS_AS(factor_rational(Rat(0)), DomainError);

  CHECK(valuation(Rat(12), Int(2)) == 2);
  CHECK(valuation(Rat(12), Int(3)) == 1);
  CHECK(valuation(Rat(5) / Rat(8), Int(2)) == -3);
  CHECK(valuation(Rat(-7), Int(7)) == 1);
  CHECK(valuation(Rat(7), Int(5)) == 0);
  CHECK_THROWS_AS(valuation(Rat(0), Int(2)), DomainError);

  auto S = make_place_set({Int(5), Int(2), Int(2), Int(3)});
  CHECK(S.primes == std::vector<Int>({Int(2), Int(3), Int(5)}));
  CHECK_THROWS_WITH_AS(make_place_set({Int(4)}), doctest::Contains("prime"),
                       DomainError);
  CHECK_THROWS_WITH_AS(make_place_set({Int(1)}), doctest::Contains("prime"),
                       DomainError);

  CHECK_THROWS_WITH_AS(make_point(qv({1, 0})), doctest::Contains("nonzero"),
                       DomainError);
  CHECK(Place::at(Int(2)) < Place::at(Int(3)));
  CHECK(Place::infinite_place().archimedean());
}

TEST_CASE("exact arithmetic on rational combinations of prime logs") {
  CHECK(logr(8) == LogReal::multiple_of_log(Int(2), Rat(3)));
  CHECK(logr(6) - logr(3) == logr(2));
  CHECK(logr(1).is_zero());
  CHECK((logr(2) - logr(2)).is_zero());
  CHECK_THROWS_WITH_AS(LogReal::log_of(Rat(0)), doctest::Contains("positive"),
                       DomainError);
  CHECK_THROWS_AS(LogReal::log_of(Rat(-3)), DomainError);

  CHECK(logr(9, 8).sign() == 1);
  CHECK(logr(8, 9).sign() == -1);
  CHECK(logr(35, 36).sign() == -1);
  CHECK(logr(1).sign() == 0);
  CHECK(logr(8, 9).abs() == logr(9, 8));
  CHECK(logr(4).scaled(Rat(1) / Rat(2)) == logr(2));
  CHECK(logr(2).scaled(Rat(0)).is_zero());

  // (1/2) log 2 vs (1/3) log 3 compares as 2^3 vs 3^2 after clearing.
  LogReal half_log2 = LogReal::multiple_of_log(Int(2), Rat(1) / Rat(2));
  LogReal third_log3 = LogReal::multiple_of_log(Int(3), Rat(1) / Rat(3));
  CHECK((half_log2 - third_log3).sign() == -1);
  CHECK((third_log3 - half_log2).sign() == 1);

  double approx = logr(6).to_double();
  CHECK(approx == doctest::Approx(1.791759).epsilon(1e-5));
}

TEST_CASE("segment embedding recovers the classical height") {
  auto seg = segment01();
  for (const Rat& q : {Rat(1), Rat(-1), Rat(2), Rat(1) / Rat(2), Rat(5) / Rat(3),
                       Rat(-7) / Rat(4), Rat(100) / Rat(9)}) {
    auto h = height(make_point({q}), seg);
    CHECK(h == LogReal::log_of(classical_height(q)));
    CHECK(h.sign() >= 0);
  }
  CHECK(height(pt({Rat(1)}), seg).is_zero());
  CHECK(height(pt({Rat(-1)}), seg).is_zero());
  CHECK(!height(pt({Rat(2)}), seg).is_zero());
  CHECK_THROWS_WITH_AS(height(pt({Rat(2), Rat(3)}), seg),
                       doctest::Contains("rank"), DomainError);
}

TEST_CASE("height fixtures, translation invariance, and dilation scaling") {
  auto sq = unit_square();
  CHECK(height(pt({Rat(2), Rat(3)}), sq) == logr(6));
  CHECK(height(pt({Rat(1), Rat(1)}), sq).is_zero());
  CHECK(height(pt({Rat(-1), Rat(1)}), sq).is_zero());

  auto shifted = LatticePolytope::hull(
      ivs({{5, -2}, {5, -1}, {6, -2}, {6, -1}}), 2);
  auto seg = segment01();
  auto seg_shift = LatticePolytope::hull(ivs({{1}, {2}}), 1);
  std::mt19937_64 rng(660601);
  for (int t = 0; t < 20; ++t) {
    RationalTorusPoint P{{random_rat(rng), random_rat(rng)}};
    CHECK(height(P, sq) == height(P, shifted));
    RationalTorusPoint Q{{random_rat(rng)}};
    CHECK(height(Q, seg) == height(Q, seg_shift));
    CHECK(height(Q, seg.dilate(2)) == height(Q, seg).scaled(Rat(2)));
  }

  // A single lattice point embeds to a constant map: height zero everywhere.
  auto point_polytope = LatticePolytope::hull(ivs({{3, -1}}), 2);
  CHECK(height(pt({Rat(7), Rat(22, 9)}), point_polytope).is_zero());
}

TEST_CASE("weil function of x - 1 at small places") {
  auto f = x_minus_one();
  auto P = pt({Rat(3)});
  auto at_inf = weil_function(f, P, Place::infinite_place());
  CHECK(at_inf.place.archimedean());
  CHECK(at_inf.value == logr(3, 2));
  CHECK(weil_function(f, P, Place::at(Int(2))).value == logr(2));
  CHECK(weil_function(f, P, Place::at(Int(3))).value.is_zero());
  CHECK(weil_function(f, P, Place::at(Int(7))).value.is_zero());

  CHECK_THROWS_WITH_AS(weil_function(f, pt({Rat(1)}), Place::infinite_place()),
                       doctest::Contains("divisor"), DomainError);
  CHECK_THROWS_WITH_AS(
      weil_function(f, pt({Rat(2), Rat(2)}), Place::infinite_place()),
      doctest::Contains("rank"), DomainError);

  // Approaching the divisor 2-adically drives the local value up.
  auto close = weil_function(f, pt({Rat(129)}), Place::at(Int(2)));
  auto closer = weil_function(f, pt({Rat(1025)}), Place::at(Int(2)));
  CHECK(close.value == LogReal::multiple_of_log(Int(2), Rat(7)));
  CHECK(closer.value == LogReal::multiple_of_log(Int(2), Rat(10)));
}

TEST_CASE("local values sum exactly to the height") {
  auto f = x_minus_one();
  auto rep3 = height_decomposition_check(f, pt({Rat(3)}));
  CHECK(rep3.exact_equal);
  CHECK(rep3.height_value == logr(3));
  CHECK(rep3.local_sum == logr(3));
  REQUIRE(rep3.locals.size() == 3);
  CHECK(rep3.locals[0].place.archimedean());
  CHECK(rep3.locals[1].place == Place::at(Int(2)));
  CHECK(rep3.locals[2].place == Place::at(Int(3)));

  auto rep53 = height_decomposition_check(f, pt({Rat(5) / Rat(3)}));
  CHECK(rep53.exact_equal);
  CHECK(rep53.height_value == logr(5));
  REQUIRE(rep53.locals.size() == 4);
  CHECK(rep53.locals[3].place == Place::at(Int(5)));

  // Point Newton polytope: every local value and the height vanish.
  auto monomial = LaurentPolynomial(2, {{iv({2, -1}), Rat(5)}});
  auto repm = height_decomposition_check(monomial, pt({Rat(6), Rat(35, 4)}));
  CHECK(repm.exact_equal);
  CHECK(repm.height_value.is_zero());

  std::mt19937_64 rng(880011);
  int done = 0;
  while (done < 40) {
    auto g = random_poly(rng, 2);
    RationalTorusPoint P{{random_rat(rng), random_rat(rng)}};
    if (g.evaluate(P.coords) == 0) continue;
    auto rep = height_decomposition_check(g, P);
    CHECK(rep.exact_equal);
    CHECK(rep.height_value.sign() >= 0);
    ++done;
  }
}

TEST_CASE("weil functions are bounded below by coefficient constants") {
  std::mt19937_64 rng(314159);
  std::vector<Place> places = {Place::infinite_place(), Place::at(Int(2)),
                               Place::at(Int(3)), Place::at(Int(5)),
                               Place::at(Int(7))};
  int done = 0;
  while (done < 60) {
    auto g = random_poly(rng, 2);
    RationalTorusPoint P{{random_rat(rng), random_rat(rng)}};
    if (g.evaluate(P.coords) == 0) continue;
    Rat coeff_sum(0);
    for (const auto& t : g.terms())
      coeff_sum += boost::multiprecision::abs(t.coeff);
    for (const auto& v : places) {
      auto lam = weil_function(g, P, v).value;
      if (v.archimedean()) {
        CHECK((lam + LogReal::log_of(coeff_sum)).sign() >= 0);
      } else {
        Int least = valuation(g.terms().front().coeff, v.prime);
        for (const auto& t : g.terms())
          least = std::min(Int(valuation(t.coeff, v.prime)), least);
        auto floor_term = LogReal::multiple_of_log(v.prime, Rat(least));
        CHECK((lam - floor_term).sign() >= 0);
      }
    }
    ++done;
  }
}

TEST_CASE("distance to the coordinate boundary") {
  for (const auto& v :
       {Place::infinite_place(), Place::at(Int(2)), Place::at(Int(5))}) {
    CHECK(boundary_distance(pt({Rat(1), Rat(-1)}), v).value.is_zero());
  }
  CHECK(boundary_distance(pt({Rat(4)}), Place::infinite_place()).value ==
        logr(4));
  CHECK(boundary_distance(pt({Rat(4)}), Place::at(Int(2))).value == logr(4));
  CHECK(boundary_distance(pt({Rat(4)}), Place::at(Int(3))).value.is_zero());
  CHECK(boundary_distance(pt({Rat(1, 4)}), Place::at(Int(2))).value == logr(4));
  CHECK(boundary_distance(pt({Rat(-4)}), Place::at(Int(2))).value == logr(4));
  CHECK(boundary_distance(pt({Rat(2), Rat(3)}), Place::infinite_place()).value ==
        logr(6));
  CHECK(boundary_distance(pt({Rat(2), Rat(3)}), Place::at(Int(2))).value ==
        logr(2));
  CHECK(boundary_distance(pt({Rat(2), Rat(3)}), Place::at(Int(3))).value ==
        logr(3));

  // Multiplying by units of the place leaves the distance unchanged.
  auto base = pt({Rat(4), Rat(9)});
  auto unit_scaled = pt({Rat(4) * Rat(3, 5), Rat(9) * Rat(-7)});
  CHECK(boundary_distance(base, Place::at(Int(2))).value ==
        boundary_distance(unit_scaled, Place::at(Int(2))).value);
}

TEST_CASE("functoriality constants for monomial maps") {
  auto seg = segment01();
  auto sq = unit_square();

  auto ident = functoriality_bound(MonomialMap{IMat(ivs({{1}}))}, seg, seg);
  CHECK(ident.scale == Rat(1));
  CHECK(ident.offset.is_zero());

  auto squaring = functoriality_bound(MonomialMap{IMat(ivs({{2}}))}, seg, seg);
  CHECK(squaring.scale == Rat(2));
  CHECK(squaring.offset.is_zero());
  for (const Rat& q :
       {Rat(2), Rat(3), Rat(5), Rat(1) / Rat(2), Rat(-7), Rat(9, 4)}) {
    auto lhs = height(pt({q * q}), seg);
    auto rhs = height(pt({q}), seg).scaled(squaring.scale);
    CHECK((rhs - lhs).sign() >= 0);
  }

  auto proj = functoriality_bound(MonomialMap{IMat(ivs({{1, 0}}))}, sq, seg);
  CHECK(proj.scale == Rat(1));

  auto collapse = functoriality_bound(
      MonomialMap{IMat(ivs({{0, 0}}))}, sq,
      LatticePolytope::hull(ivs({{0}, {1}}), 1));
  CHECK(collapse.scale == Rat(0));

  CHECK_THROWS_WITH_AS(
      functoriality_bound(MonomialMap{IMat(ivs({{1}}))},
                          LatticePolytope::hull(ivs({{0}}), 1), seg),
      doctest::Contains("span"), DomainError);
  CHECK_THROWS_WITH_AS(
      functoriality_bound(MonomialMap{IMat(ivs({{1}}))}, sq, seg),
      doctest::Contains("rank"), DomainError);

  // Exhaustive grid of 2-unit points with exponents up to 4.
  std::vector<Rat> grid_coords;
  for (int e = -4; e <= 4; ++e)
    for (int s : {1, -1}) grid_coords.push_back(Rat(s) * rat_pow(Rat(2), Int(e)));
  std::vector<MonomialMap> maps = {MonomialMap{IMat(ivs({{1, 0}}))},
                                   MonomialMap{IMat(ivs({{2, -1}}))},
                                   MonomialMap{IMat(ivs({{1, 1}, {0, 2}}))}};
  for (const auto& theta : maps) {
    auto dst = theta.codomain_rank() == 1 ? seg : sq;
    auto bound = functoriality_bound(theta, sq, dst);
    for (const auto& x : grid_coords)
      for (const auto& y : grid_coords) {
        RationalTorusPoint P{{x, y}};
        RationalTorusPoint image{apply_monomial_map(theta, P.coords)};
        auto lhs = height(image, dst);
        auto rhs = height(P, sq).scaled(bound.scale);
        CHECK((rhs - lhs).sign() >= 0);
      }
  }
}

TEST_CASE("s-integrality of points against a divisor") {
  auto f = difference_of_coordinates();
  auto S2 = make_place_set({Int(2)});
  CHECK(is_s_integral(f, pt({Rat(2), Rat(1)}), S2));
  CHECK(!is_s_integral(f, pt({Rat(3), Rat(1)}), S2));
  CHECK(is_s_integral(f, pt({Rat(4), Rat(2)}), S2));
  CHECK(!is_s_integral(f, pt({Rat(4), Rat(1)}), S2));

  auto g = x_minus_one();
  CHECK(is_s_integral(g, pt({Rat(1, 2)}), S2));
  CHECK(!is_s_integral(g, pt({Rat(1)}), S2));
  CHECK(is_s_integral(g, pt({Rat(1)}), make_place_set({})) == false);
  CHECK_THROWS_WITH_AS(is_s_integral(g, pt({Rat(2), Rat(2)}), S2),
                       doctest::Contains("rank"), DomainError);
}

TEST_CASE("enumeration of s-unit integral points") {
  auto f = difference_of_coordinates();

  CHECK(enumerate_integral_points(f, make_place_set({}), Rat(100)).empty());
  CHECK(enumerate_integral_points(f, make_place_set({Int(2)}), Rat(1, 2)).empty());

  auto S2 = make_place_set({Int(2)});
  auto small = enumerate_integral_points(f, S2, Rat(8));
  for (const auto& coords : {qv({2, 1}), qv({4, 2}), qv({1, -1}), qv({2, -2}),
                             qv({1, 2}), qv({2, 4})}) {
    CHECK(std::count(small.begin(), small.end(), RationalTorusPoint{coords}) == 1);
  }
  for (const auto& P : small) CHECK(is_s_integral(f, P, S2));
  CHECK(std::is_sorted(small.begin(), small.end(),
                       [](const RationalTorusPoint& a, const RationalTorusPoint& b) {
                         return a.coords < b.coords;
                       }));

  // Independent brute-force scan over the same exponent box.
  std::vector<Rat> values;
  for (int e = -3; e <= 3; ++e)
    for (int s : {1, -1}) values.push_back(Rat(s) * rat_pow(Rat(2), Int(e)));
  std::vector<RationalTorusPoint> brute;
  for (const auto& x : values)
    for (const auto& y : values) {
      if (classical_height(x) * classical_height(y) > 8) continue;
      RationalTorusPoint P{{x, y}};
      if (f.evaluate(P.coords) == 0) continue;
      if (!is_s_integral(f, P, S2)) continue;
      brute.push_back(P);
    }
  std::sort(brute.begin(), brute.end(),
            [](const RationalTorusPoint& a, const RationalTorusPoint& b) {
              return a.coords < b.coords;
            });
  CHECK(small == brute);

  // Multi-prime heights measure max(|num|, den), not the exponent product.
  auto S6 = make_place_set({Int(2), Int(3)});
  auto h1 = LaurentPolynomial(1, {{iv({1}), Rat(1)}});
  auto third_scan = enumerate_integral_points(h1, S6, Rat(3));
  CHECK(std::count(third_scan.begin(), third_scan.end(),
                   RationalTorusPoint{{Rat(2, 3)}}) == 1);
  CHECK(std::count(third_scan.begin(), third_scan.end(),
                   RationalTorusPoint{{Rat(3, 2)}}) == 1);

  auto constant = LaurentPolynomial(1, {{iv({0}), Rat(1)}});
  auto units = enumerate_integral_points(constant, S2, Rat(4));
  REQUIRE(units.size() == 10);
  CHECK(units.front().coords == QVec{Rat(-4)});
  CHECK(units.back().coords == QVec{Rat(4)});

  Caps tight;
  tight.cap_exponent = 2;
  CHECK_THROWS_WITH_AS(enumerate_integral_points(f, S2, Rat(1024), tight),
                       doctest::Contains("cap"), DomainError);
  auto four = LaurentPolynomial(4, {{iv({1, 1, 1, 1}), Rat(1)}});
  CHECK_THROWS_WITH_AS(enumerate_integral_points(four, S2, Rat(2)),
                       doctest::Contains("rank"), DomainError);
}

TEST_CASE("coset families recover the s-unit equation structure") {
  CHECK(detect_coset_families({}).empty());

  auto ratio = detect_coset_families(
      {pt({Rat(2), Rat(1)}), pt({Rat(4), Rat(2)}), pt({Rat(8), Rat(4)})});
  REQUIRE(ratio.size() == 1);
  CHECK(ratio[0].character == iv({1, -1}));
  CHECK(ratio[0].value == Rat(2));
  CHECK(ratio[0].members == std::vector<size_t>({0, 1, 2}));

  auto lone = detect_coset_families({pt({Rat(3), Rat(7)})});
  REQUIRE(lone.size() == 1);
  CHECK(lone[0].character == iv({1, 0}));
  CHECK(lone[0].value == Rat(3));
  CHECK(lone[0].members == std::vector<size_t>({0}));

  auto torsion = detect_coset_families({pt({Rat(2), Rat(3)}), pt({Rat(-2), Rat(3)})});
  REQUIRE(torsion.size() == 1);
  CHECK(torsion[0].character == iv({0, 1}));
  CHECK(torsion[0].value == Rat(3));
  CHECK(torsion[0].members == std::vector<size_t>({0, 1}));

  CHECK_THROWS_WITH_AS(detect_coset_families({pt({Rat(2)})}),
                       doctest::Contains("rank"), DomainError);

  // Solutions of u - v = 1 in 2-units: ratios r with r, r-1 both 2-units.
  auto g = x_minus_one();
  auto S2 = make_place_set({Int(2)});
  auto roots = enumerate_integral_points(g, S2, Rat(1024));
  std::vector<QVec> root_coords;
  for (const auto& P : roots) root_coords.push_back(P.coords);
  CHECK(root_coords ==
        std::vector<QVec>({{Rat(-1)}, {Rat(1, 2)}, {Rat(2)}}));

  auto f = difference_of_coordinates();
  auto flagship = enumerate_integral_points(f, S2, Rat(1024));
  REQUIRE(flagship.size() == 62);
  auto families = detect_coset_families(flagship);
  REQUIRE(families.size() == 3);
  std::vector<Rat> constants;
  size_t covered = 0;
  std::set<size_t> seen;
  for (const auto& fam : families) {
    CHECK(fam.character == iv({1, -1}));
    constants.push_back(fam.value);
    covered += fam.members.size();
    for (size_t m : fam.members) {
      CHECK(seen.insert(m).second);
      CHECK(eval_monomial(flagship[m].coords, fam.character) == fam.value);
    }
  }
  CHECK(constants == std::vector<Rat>({Rat(-1), Rat(1, 2), Rat(2)}));
  CHECK(covered == 62);
  REQUIRE(families[0].members.size() == 22);
  REQUIRE(families[1].members.size() == 20);
  REQUIRE(families[2].members.size() == 20);
}
