#include <cmath>

#include "doctest.h"
#include "limitcheeger/graphing.hpp"
#include "limitcheeger/spectral.hpp"
#include "oracles.hpp"

using namespace limitcheeger;

namespace {
constexpr double kGolden = 0.61803398874989484820;  // (sqrt(5)-1)/2
}

TEST_SUITE_BEGIN("graphing");

TEST_CASE("graphing of K2 and C4") {
  const Graphing k2 = graphing_from_graph(oracles::k2_graph());
  REQUIRE(k2.atoms.size() == 2);
  CHECK(k2.atoms[0].first == 0.25);
  CHECK(k2.atoms[1].first == 0.75);
  CHECK(k2.atoms[0].second == 0.5);
  CHECK(k2.atom_edges.size() == 1);

  const Graphing c4 = graphing_from_graph(oracles::cycle_graph(4));
  CHECK(c4.atoms.size() == 4);
  CHECK(c4.atom_edges.size() == 4);
  CHECK(c4.degree_bound == 2);
}

TEST_CASE("graphing_from_graph rejects weights and loops") {
  WeightedGraph g = oracles::k2_graph();
  g.at(0, 1) = g.at(1, 0) = 0.5;
  CHECK_THROWS_AS(graphing_from_graph(g), input_error);
  WeightedGraph loop;
  loop.n = 2;
  loop.w = {1.0, 1.0, 1.0, 0.0};
  CHECK_THROWS_AS(graphing_from_graph(loop), input_error);
}

TEST_CASE("atomic graphing validation") {
  CHECK_THROWS_AS(make_atomic_graphing<double>({{0.25, 0.5}, {0.75, 0.25}}, {{0, 1}}),
                  input_error);  // masses do not sum to 1
  CHECK_THROWS_AS(
      make_atomic_graphing<double>({{0.25, 0.75}, {0.75, 0.25}}, {{0, 1}}),
      input_error);  // edge joins atoms of different mass
  CHECK_THROWS_AS(
      make_atomic_graphing<double>({{0.25, 0.5}, {0.75, 0.5}}, {{0, 0}}),
      input_error);  // self loop
}

TEST_CASE("atomic edge mass on C4") {
  const Graphing c4 = graphing_from_graph(oracles::cycle_graph(4));
  IntervalSet v1, v2;
  v1.parts = {{0.0, 0.25}};   // contains atom 1/8
  v2.parts = {{0.25, 0.5}};   // contains atom 3/8
  CHECK(e_graphing(c4, v1, v2) == 0.25);
  CHECK(e_graphing(c4, v2, v1) == 0.25);
  // total eta mass equals the integrated degree
  const IntervalSet full = full_set<double>();
  CHECK(e_graphing(c4, full, full) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("rotation graphing degree and edge masses") {
  const double a = std::sqrt(2.0) - 1.0;
  const Graphing g = rotation_graphing(a);
  CHECK(g.degree_bound == 2);
  CHECK_FALSE(g.rational_offset_warning);
  const IntervalSet set = normalize<double>({{0.0, 0.1}});
  CHECK(e_graphing(g, set, complement(set)) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(vol_graphing(g, set) == doctest::Approx(0.2).epsilon(1e-14));
  const IntervalSet full = full_set<double>();
  CHECK(e_graphing(g, full, full) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(rotation_graphing(0.25).rational_offset_warning);
  CHECK_THROWS_AS(rotation_graphing(1.5), input_error);
}

TEST_CASE("volume is additive across a cut") {
  const Graphing g = rotation_graphing(kGolden);
  Rng rng(131);
  for (int t = 0; t < 50; ++t) {
    double lo = rng.next_double(), hi = rng.next_double();
    if (lo > hi) std::swap(lo, hi);
    const IntervalSet a = normalize<double>({{lo, hi}});
    if (a.empty()) continue;
    CHECK(vol_graphing(g, a) + vol_graphing(g, complement(a)) ==
          doctest::Approx(vol_graphing(g, full_set<double>())).epsilon(1e-13));
  }
}

TEST_CASE("graphing ratio on atomic K2 matches the graph value") {
  const Graphing k2 = graphing_from_graph(oracles::k2_graph());
  IntervalSet v1;
  v1.parts = {{0.0, 0.5}};
  CHECK(ratio_h_graphing(k2, v1) == 1.0);
}

TEST_CASE("rotation ratio of a half interval is 2a") {
  const double a = 0.3178372132992;
  const Graphing g = rotation_graphing(a);
  const IntervalSet half = normalize<double>({{0.0, 0.5}});
  CHECK(ratio_h_graphing(g, half) == doctest::Approx(2.0 * a).epsilon(1e-13));
}

TEST_CASE("atomic Cheeger and lambda equal the graph-side values exactly") {
  Rng rng(137);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng.next_below(9);
    WeightedGraph f;
    for (;;) {
      f.n = n;
      f.w.assign(n * n, 0.0);
      f.loopless = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (rng.next_double() < 0.4) {
            f.at(i, j) = 1.0;
            f.at(j, i) = 1.0;
          }
      if (oracles::bfs_connected(f)) break;
    }
    const Graphing g = graphing_from_graph(f);
    const CheegerReport via_graphing = cheeger_atomic(g);
    const CheegerReport via_graph = integral_cheeger(f);
    CHECK(via_graphing.value == via_graph.value);
    CHECK(via_graphing.rho == via_graph.rho);
    CHECK(lambda_atomic(g) == lambda_graph(f));
  }
}

TEST_CASE("graphing sandwich holds on atomic instances") {
  const Graphing c4 = graphing_from_graph(oracles::cycle_graph(4));
  CHECK(cheeger_atomic(c4).value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(lambda_atomic(c4) == doctest::Approx(1.0).epsilon(1e-10));
  const Graphing k2 = graphing_from_graph(oracles::k2_graph());
  CHECK(cheeger_atomic(k2).value == 1.0);
  CHECK(lambda_atomic(k2) == doctest::Approx(2.0).epsilon(1e-10));

  Rng rng(139);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 3 + rng.next_below(6);
    WeightedGraph f;
    for (;;) {
      f.n = n;
      f.w.assign(n * n, 0.0);
      f.loopless = true;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (rng.next_double() < 0.5) {
            f.at(i, j) = 1.0;
            f.at(j, i) = 1.0;
          }
      if (oracles::bfs_connected(f)) break;
    }
    const Graphing g = graphing_from_graph(f);
    const double h = cheeger_atomic(g).value;
    const double lam = lambda_atomic(g);
    CHECK(h * h / 8.0 <= lam + 1e-9);
    CHECK(lam <= 2.0 * h + 1e-9);
  }
}

TEST_CASE("rotation cuts realize ratio 1/(N+1)") {
  for (int n : {1, 9, 49}) {
    const RotationCut cut = rotation_cut(kGolden, n);
    CHECK(cut.valid);
    CHECK(std::abs(cut.ratio * (n + 1) - 1.0) <= 1e-12);
    CHECK(cut.ratio <= 2.0 / (n + 1));
  }
  for (int n = 1; n <= 200; ++n) CHECK(rotation_cut(kGolden, n).valid);
}

TEST_CASE("rotation cuts degrade gracefully at rational angles") {
  // alpha = 1/4 has a 4-point orbit; once N + 2 exceeds the orbit size the
  // minimal gap collapses and the construction reports an invalid cut.
  const RotationCut c = rotation_cut(0.25, 5);
  CHECK_FALSE(c.valid);
  // small N still works: the orbit points stay distinct
  const RotationCut ok = rotation_cut(0.25, 1);
  CHECK(ok.valid);
  CHECK(ok.ratio == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("rotation lambda upper bound") {
  CHECK(rotation_lambda_upper(kGolden, 10000) <= 1e-6);
  double prev = 10.0;
  for (int k : {1, 5, 25, 125, 625}) {
    const double v = rotation_lambda_upper(kGolden, k);
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
  // k a close to an integer makes the bound nearly zero
  CHECK(rotation_lambda_upper(0.5 + 1e-9, 2) <= 1e-12);
}

TEST_CASE("cosine Rayleigh quotient on a grid matches 1 - cos(2 pi k a)") {
  const int grid = 1 << 16;
  for (int k : {1, 3, 13, 144}) {
    double num = 0.0, den = 0.0;
    for (int i = 0; i < grid; ++i) {
      const double x = static_cast<double>(i) / grid;
      const double fx = std::cos(2.0 * std::acos(-1.0) * k * x);
      const double fy = std::cos(2.0 * std::acos(-1.0) * k * (x + kGolden));
      num += (fy - fx) * (fy - fx);
      den += 2.0 * fx * fx;
    }
    const double want = 1.0 - std::cos(2.0 * std::acos(-1.0) * k * kGolden);
    CHECK(num / den == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("ergodicity proxy: rotation cuts always have positive boundary") {
  const Graphing g = rotation_graphing(kGolden);
  Rng rng(149);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::pair<double, double>> raw;
    const int parts = 1 + static_cast<int>(rng.next_below(64));
    for (int k = 0; k < parts; ++k) {
      const double lo = rng.next_double();
      const double hi = std::min(1.0, lo + rng.next_double() / parts);
      raw.emplace_back(lo, hi);
    }
    const IntervalSet a = normalize(std::move(raw));
    const double mu = measure(a);
    if (mu < 0.05 || mu > 0.95) continue;
    CHECK(e_graphing(g, a, complement(a)) > 0.0);
  }
}

TEST_CASE("constant functions have vanishing graphing co-area quantities") {
  const Graphing rot = rotation_graphing(kGolden);
  StepFunction f;
  f.cuts = {0.0, 1.0};
  f.values = {1.5};
  const CoareaReport r = coarea_graphing(rot, f);
  CHECK(r.lhs_plus == 0.0);
  CHECK(r.rhs_plus == 0.0);
  CHECK(r.lhs_simple == 0.0);
  const Graphing c4 = graphing_from_graph(oracles::cycle_graph(4));
  const CoareaReport ra = coarea_graphing_atomic(c4, {2.0, 2.0, 2.0, 2.0});
  CHECK(ra.lhs_plus == 0.0);
  CHECK(ra.rhs_plus == 0.0);
}

TEST_CASE("atomic co-area: hand-checked C4 instance") {
  const Graphing c4 = graphing_from_graph(oracles::cycle_graph(4));
  const CoareaReport r = coarea_graphing_atomic(c4, {1.0, 0.0, 0.0, 0.0});
  CHECK(r.lhs_simple == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.rhs_simple == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.lhs_plus == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.lhs_minus == 0.0);
  CHECK(r.max_abs_gap <= 1e-15);
}

TEST_CASE("co-area identities on random rotation instances") {
  const Graphing g = rotation_graphing(kGolden);
  Rng rng(151);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> cuts = {0.0, 1.0};
    for (int k = 0; k < 7; ++k) cuts.push_back(rng.next_double());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    StepFunction f;
    f.cuts = cuts;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
      f.values.push_back(rng.uniform(-2.0, 2.0));
    const CoareaReport r = coarea_graphing(g, f);
    CHECK(r.max_abs_gap <= 1e-12);
  }
}

TEST_CASE("co-area identities on random atomic instances") {
  Rng rng(157);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng.next_below(7);
    WeightedGraph f;
    f.n = n;
    f.w.assign(n * n, 0.0);
    f.loopless = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.next_double() < 0.5) {
          f.at(i, j) = 1.0;
          f.at(j, i) = 1.0;
        }
    const Graphing g = graphing_from_graph(f);
    std::vector<double> values(n);
    for (double& v : values) v = rng.uniform(-2.0, 2.0);
    const CoareaReport r = coarea_graphing_atomic(g, values);
    CHECK(r.max_abs_gap <= 1e-12);
  }
}

TEST_CASE("rational co-area on graphings is exactly zero") {
  Rng rng(163);
  // atomic instances
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(rng.next_below(5));
    std::vector<std::pair<Rational, Rational>> atoms;
    for (int i = 0; i < n; ++i)
      atoms.emplace_back(Rational(2 * i + 1, 2 * n), Rational(1, n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.next_double() < 0.5) edges.emplace_back(i, j);
    const GraphingQ g = make_atomic_graphing(std::move(atoms), std::move(edges));
    std::vector<Rational> values;
    for (int i = 0; i < n; ++i)
      values.push_back(Rational(static_cast<long long>(rng.next_below(129)) - 64, 32));
    const CoareaValuesT<Rational> v = coarea_graphing_atomic_values(g, values);
    CHECK(v.lhs_plus == v.rhs_plus);
    CHECK(v.lhs_minus == v.rhs_minus);
    CHECK(v.lhs_simple == v.rhs_simple);
  }
  // rational-offset translation maps
  for (int t = 0; t < 20; ++t) {
    TranslationMapT<Rational> map;
    const long long num = 1 + static_cast<long long>(rng.next_below(15));
    map.offset = Rational(num, 16);
    map.domain = normalize<Rational>(
        {{Rational(0), Rational(1 + static_cast<long long>(rng.next_below(15)), 16)}});
    const GraphingQ g = make_continuous_graphing<Rational>({map});
    StepFunctionQ f;
    f.cuts = {Rational(0)};
    for (int c = 1; c < 8; ++c) f.cuts.push_back(Rational(c, 8));
    f.cuts.push_back(Rational(1));
    for (int c = 0; c < 8; ++c)
      f.values.push_back(Rational(static_cast<long long>(rng.next_below(129)) - 64, 32));
    const CoareaValuesT<Rational> v = coarea_graphing_values(g, f);
    CHECK(v.lhs_plus == v.rhs_plus);
    CHECK(v.lhs_minus == v.rhs_minus);
    CHECK(v.lhs_simple == v.rhs_simple);
  }
}

TEST_CASE("symmetry audit passes valid graphings and catches corruption") {
  const Graphing rot = rotation_graphing(kGolden);
  CHECK(symmetry_audit(rot, 200, 5) <= 1e-12);
  const Graphing c4 = graphing_from_graph(oracles::cycle_graph(4));
  CHECK(symmetry_audit(c4, 200, 5) == 0.0);

  // break the inverse strand's domain: offset no longer matches the image
  Graphing corrupted = rotation_graphing(kGolden);
  corrupted.strands[1].domain = normalize<double>({{0.0, 0.5}});
  CHECK(symmetry_audit(corrupted, 200, 5) > 1e-6);
}

TEST_CASE("max degree audit on partial maps") {
  TranslationMapT<double> m1{normalize<double>({{0.0, 0.5}}), 0.25};
  TranslationMapT<double> m2{normalize<double>({{0.1, 0.3}}), 0.6};
  const Graphing g = make_continuous_graphing<double>({m1, m2});
  CHECK(max_degree(g) == g.degree_bound);
  CHECK(g.degree_bound >= 2);
  CHECK(g.degree_bound <= 4);
}

TEST_SUITE_END();
