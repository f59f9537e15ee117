#include <cmath>

#include "doctest.h"
#include "limitcheeger/gallery.hpp"
#include "limitcheeger/linalg.hpp"
#include "limitcheeger/spectral.hpp"
#include "oracles.hpp"

using namespace limitcheeger;

TEST_SUITE_BEGIN("spectral");

namespace {

StepFunction on_blocks(const StepGraphon& w, std::vector<double> values) {
  StepFunction f;
  f.cuts = w.cuts;
  f.values = std::move(values);
  return f;
}

}  // namespace

TEST_CASE("adjacency operator on constants and the K2 eigenfunction") {
  const StepGraphon flat = constant_graphon(1.0);
  const StepFunction c = on_blocks(flat, {0.7});
  CHECK(apply_T(flat, c).values[0] == doctest::Approx(0.7).epsilon(1e-15));

  const StepGraphon k2 = k2_graphon();
  const StepFunction f = on_blocks(k2, {1.0, -1.0});
  const StepFunction tf = apply_T(k2, f);
  CHECK(tf.values[0] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(tf.values[1] == doctest::Approx(0.5).epsilon(1e-15));
  // T(1) = degree function
  const StepFunction one = on_blocks(k2, {1.0, 1.0});
  CHECK(apply_T(k2, one).values == degree_function(k2).values);
}

TEST_CASE("Laplacian kills constants and doubles the K2 eigenfunction") {
  const StepGraphon k2 = k2_graphon();
  const StepFunction c = on_blocks(k2, {3.0, 3.0});
  for (double v : apply_laplacian(k2, c).values) CHECK(std::abs(v) <= 1e-15);
  const StepFunction f = on_blocks(k2, {1.0, -1.0});
  const StepFunction lf = apply_laplacian(k2, f);
  CHECK(lf.values[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(lf.values[1] == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("Laplacian of a two-block sign function on the flat graphon") {
  StepGraphon flat;
  flat.cuts = {0.0, 0.5, 1.0};
  flat.n = 2;
  flat.m = {1.0, 1.0, 1.0, 1.0};
  const StepFunction f = on_blocks(flat, {-1.0, 1.0});
  const StepFunction lf = apply_laplacian(flat, f);
  CHECK(lf.values[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(lf.values[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("Laplacian rejects zero-degree blocks") {
  StepGraphon w;
  w.cuts = {0.0, 0.5, 1.0};
  w.n = 2;
  w.m = {1.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(apply_laplacian(w, on_blocks(w, {1.0, 2.0})), degenerate_error);
}

TEST_CASE("d of a step function") {
  const StepGraphon k2 = k2_graphon();
  const EdgeStepFunction df = apply_d(k2, on_blocks(k2, {1.0, -1.0}));
  CHECK(df.at(0, 1) == -2.0);
  const EdgeStepFunction zero = apply_d(k2, on_blocks(k2, {5.0, 5.0}));
  CHECK(zero.at(0, 1) == 0.0);
}

TEST_CASE("d* inverts the K2 example and d*(df) equals the Laplacian") {
  const StepGraphon k2 = k2_graphon();
  EdgeStepFunction phi;
  phi.cuts = k2.cuts;
  phi.n = 2;
  phi.phi = {-2.0};
  const StepFunction ds = apply_dstar(k2, phi);
  CHECK(ds.values[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(ds.values[1] == doctest::Approx(-2.0).epsilon(1e-15));

  Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    const StepGraphon w = oracles::random_graphon(rng, 6);
    const StepFunction d = degree_function(w);
    bool positive = true;
    for (double v : d.values) positive = positive && v > 0;
    if (!positive) continue;
    const StepFunction f = oracles::random_step_function(rng, w.cuts);
    const StepFunction lhs = apply_dstar(w, apply_d(w, f));
    const StepFunction rhs = apply_laplacian(w, f);
    for (std::size_t i = 0; i < w.n; ++i)
      CHECK(std::abs(lhs.values[i] - rhs.values[i]) <= 1e-13);
  }
}

TEST_CASE("inner products: totals, adjointness, operator bound") {
  const StepGraphon k2 = k2_graphon();
  const StepFunction one = on_blocks(k2, {1.0, 1.0});
  CHECK(vertex_inner(k2, one, one) == doctest::Approx(vol_total(k2)).epsilon(1e-15));

  const StepFunction f = on_blocks(k2, {1.0, -1.0});
  const EdgeStepFunction df = apply_d(k2, f);
  CHECK(edge_inner(k2, df, df) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(vertex_inner(k2, f, apply_laplacian(k2, f)) ==
        doctest::Approx(1.0).epsilon(1e-15));

  Rng rng(67);
  for (int t = 0; t < 500; ++t) {
    const StepGraphon w = oracles::random_graphon(rng, 6);
    const StepFunction g = oracles::random_step_function(rng, w.cuts);
    EdgeStepFunction phi;
    phi.cuts = w.cuts;
    phi.n = w.n;
    phi.phi.resize(w.n * (w.n - 1) / 2);
    for (double& v : phi.phi) v = rng.uniform(-2.0, 2.0);
    const EdgeStepFunction dg = apply_d(w, g);
    const double lhs = edge_inner(w, dg, phi);
    const double rhs = vertex_inner(w, g, apply_dstar(w, phi));
    const double nf = std::sqrt(std::max(0.0, vertex_inner(w, g, g)));
    const double nphi = std::sqrt(std::max(0.0, edge_inner(w, phi, phi)));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + nf * nphi));
    const double ndg = std::sqrt(std::max(0.0, edge_inner(w, dg, dg)));
    CHECK(ndg <= 2.0 * nf + 1e-12);
  }
}

TEST_CASE("mean-zero projection") {
  const StepGraphon k2 = k2_graphon();
  const StepFunction c = on_blocks(k2, {4.0, 4.0});
  for (double v : project_mean_zero(k2, c).values) CHECK(std::abs(v) <= 1e-14);

  Rng rng(71);
  for (int t = 0; t < 500; ++t) {
    const StepGraphon w = oracles::random_connected_graphon(rng, 6);
    const StepFunction f = oracles::random_step_function(rng, w.cuts);
    const StepFunction pf = project_mean_zero(w, f);
    const StepFunction one = on_blocks(w, std::vector<double>(w.n, 1.0));
    CHECK(std::abs(vertex_inner(w, pf, one)) <= 1e-14);
    const StepFunction ppf = project_mean_zero(w, pf);
    for (std::size_t i = 0; i < w.n; ++i)
      CHECK(std::abs(ppf.values[i] - pf.values[i]) <= 1e-13);
  }
}

TEST_CASE("Rayleigh quotients of the standard examples") {
  const StepGraphon k2 = k2_graphon();
  CHECK(rayleigh(k2, on_blocks(k2, {1.0, -1.0})) == doctest::Approx(2.0).epsilon(1e-14));
  StepGraphon flat;
  flat.cuts = {0.0, 0.5, 1.0};
  flat.n = 2;
  flat.m = {1.0, 1.0, 1.0, 1.0};
  CHECK(rayleigh(flat, on_blocks(flat, {2.0, 0.5})) ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(rayleigh(k2, on_blocks(k2, {3.0, 3.0})), input_error);
}

TEST_CASE("Rayleigh quotient dominates lambda") {
  Rng rng(73);
  for (int t = 0; t < 500; ++t) {
    const StepGraphon w = oracles::random_connected_graphon(rng, 6);
    const double lam = lambda_graphon(w);
    const StepFunction f = oracles::random_step_function(rng, w.cuts);
    const StepFunction pf = project_mean_zero(w, f);
    double norm = 0;
    for (double v : pf.values) norm = std::max(norm, std::abs(v));
    if (norm < 1e-9) continue;
    CHECK(rayleigh(w, f) >= lam - 1e-9);
  }
}

TEST_CASE("only block-constant functions lie in the Laplacian kernel") {
  Rng rng(59);
  for (int t = 0; t < 40; ++t) {
    const StepGraphon w = oracles::random_connected_graphon(rng, 6);
    if (w.n < 2) continue;
    StepFunction f;
    f.cuts = w.cuts;
    for (std::size_t k = 0; k < w.n; ++k) f.values.push_back(static_cast<double>(k));
    const StepFunction lf = apply_laplacian(w, f);
    double norm = 0, range = 0;
    for (double v : lf.values) norm = std::max(norm, std::abs(v));
    for (double v : f.values) range = std::max(range, v - f.values[0]);
    // connected graphon, nonconstant f: Delta f cannot vanish
    if (norm <= 1e-12) CHECK(range <= 1e-10);
    CHECK(norm > 1e-12);
  }
}

TEST_CASE("lambda of K2, C4 and K5") {
  CHECK(lambda_graph(oracles::k2_graph()) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(lambda_graph(oracles::cycle_graph(4)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(lambda_graph(oracles::complete_graph(5)) ==
        doctest::Approx(1.25).epsilon(1e-10));
}

TEST_CASE("lambda_graph rejects disconnected graphs") {
  WeightedGraph g;
  g.n = 4;
  g.w.assign(16, 0.0);
  g.at(0, 1) = g.at(1, 0) = 1.0;
  g.at(2, 3) = g.at(3, 2) = 1.0;
  CHECK_THROWS_AS(lambda_graph(g), input_error);
}

TEST_CASE("eigensolver residuals vanish on random Laplacians") {
  Rng rng(79);
  for (int t = 0; t < 20; ++t) {
    const WeightedGraph g = oracles::random_connected_graph(rng, 8);
    const std::size_t n = g.n;
    std::vector<double> vols(n);
    for (std::size_t u = 0; u < n; ++u) vols[u] = g.vol(u);
    std::vector<double> lap(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        lap[i * n + j] = (i == j ? 1.0 : 0.0) - g.at(i, j) / std::sqrt(vols[i] * vols[j]);
    const SymmetricEigen eig = eigen_symmetric(lap, n, true);
    CHECK(std::abs(eig.values[0]) <= 1e-9);
    for (std::size_t k = 0; k < n; ++k) {
      // residual ||A v - lambda v||, computed straight from the matrix
      double res = 0;
      for (std::size_t i = 0; i < n; ++i) {
        double av = 0;
        for (std::size_t j = 0; j < n; ++j) av += lap[i * n + j] * eig.vec(j, k);
        res = std::max(res, std::abs(av - eig.values[k] * eig.vec(i, k)));
      }
      CHECK(res <= 1e-9);
    }
  }
}

TEST_CASE("lambda of graphons: examples and the cap at one") {
  CHECK(lambda_graphon(k2_graphon()) == 1.0);
  CHECK(lambda_graphon(from_graph(oracles::cycle_graph(4))) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(lambda_graphon(constant_graphon(1.0)) == 1.0);
  // K10: lambda_G = 10/9 > 1, so the graphon value caps at 1
  CHECK(lambda_graph(oracles::complete_graph(10)) ==
        doctest::Approx(10.0 / 9.0).epsilon(1e-10));
  CHECK(lambda_graphon(from_graph(oracles::complete_graph(10))) == 1.0);
}

TEST_CASE("lambda consistency between graphs and their graphons") {
  Rng rng(83);
  for (int t = 0; t < 25; ++t) {
    const WeightedGraph g = oracles::random_connected_graph(rng, 8);
    const double lg = lambda_graph(g);
    const double lw = lambda_graphon(from_graph(g));
    CHECK(std::abs(lw - std::min(lg, 1.0)) <= 1e-9);
  }
}

TEST_CASE("lambda is stable under block refinement") {
  Rng rng(89);
  for (int t = 0; t < 15; ++t) {
    const StepGraphon w = oracles::random_connected_graphon(rng, 5);
    const StepGraphon fine = oracles::split_blocks(w);
    CHECK(std::abs(lambda_graphon(w) - lambda_graphon(fine)) <= 1e-9);
  }
}

TEST_CASE("descent over refined block functions confirms min(lambda, 1)") {
  // Independent check of the spectral convention: minimize the Rayleigh
  // quotient over block values of a twice-refined partition by projected
  // finite-difference descent and compare against lambda_graphon.
  auto descent_min = [](const StepGraphon& w0) {
    const StepGraphon w = oracles::split_blocks(oracles::split_blocks(w0));
    Rng rng(7);
    double best = 1e9;
    for (int restart = 0; restart < 12; ++restart) {
      StepFunction f;
      f.cuts = w.cuts;
      for (std::size_t k = 0; k < w.n; ++k) f.values.push_back(rng.uniform(-1.0, 1.0));
      double cur;
      try {
        cur = rayleigh(w, f);
      } catch (const input_error&) {
        continue;
      }
      double step = 0.25;
      for (int it = 0; it < 400 && step > 1e-10; ++it) {
        StepFunction grad = f;
        const double h = 1e-6;
        for (std::size_t k = 0; k < w.n; ++k) {
          StepFunction probe = f;
          probe.values[k] += h;
          grad.values[k] = (rayleigh(w, probe) - cur) / h;
        }
        StepFunction next = f;
        for (std::size_t k = 0; k < w.n; ++k) next.values[k] -= step * grad.values[k];
        double val;
        try {
          val = rayleigh(w, next);
        } catch (const input_error&) {
          step *= 0.5;
          continue;
        }
        if (val < cur - 1e-14) {
          f = next;
          cur = val;
          step *= 1.2;
        } else {
          step *= 0.5;
        }
      }
      best = std::min(best, cur);
    }
    return best;
  };
  for (const StepGraphon& w :
       {k2_graphon(), from_graph(oracles::cycle_graph(4)), constant_graphon(1.0)}) {
    const double lam = lambda_graphon(w);
    const double desc = descent_min(w);
    CHECK(desc >= lam - 1e-9);
    CHECK(std::abs(desc - lam) <= 1e-3);
  }
}

TEST_CASE("sandwich verification on the standard examples") {
  const SpectralReport k2 = verify_sandwich(k2_graphon(), {3, 16});
  CHECK(k2.lambda == 1.0);
  CHECK(k2.h == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(k2.g == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(k2.buser_ok);
  CHECK(k2.buser_sym_ok);
  CHECK(k2.cheeger_ok);
  // Buser is tight here: lambda = 2h
  CHECK(std::abs(k2.lambda - 2.0 * k2.h) <= 1e-8);
  CHECK(k2.convention_note == kLambdaConventionNote);

  const SpectralReport flat = verify_sandwich(constant_graphon(1.0), {3, 16});
  CHECK(flat.lambda == 1.0);
  CHECK(flat.h == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(flat.g == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(flat.buser_ok);
  CHECK(flat.buser_sym_ok);
  CHECK(flat.cheeger_ok);
}

TEST_CASE("sandwich holds on a random batch") {
  Rng rng(97);
  for (int t = 0; t < 30; ++t) {
    const StepGraphon w = oracles::random_connected_graphon(rng, 6);
    const SpectralReport rep = verify_sandwich(w, {11, 16});
    CHECK(rep.buser_ok);
    CHECK(rep.buser_sym_ok);
    CHECK(rep.cheeger_ok);
  }
}

TEST_SUITE_END();
