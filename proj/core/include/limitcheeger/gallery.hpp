#pragma once

#include "limitcheeger/graphon.hpp"

namespace limitcheeger {

// Closed-form graphons used by the example computations. Each kind answers
// exact rectangle-mass queries, which is all the step-approximation and
// Cheeger machinery needs from them.
struct AnalyticGraphon {
  enum class Kind { Constant, K2, SqrtNeighborhood, VanishingCheeger };
  Kind kind = Kind::Constant;
  double p = 1.0;  // Constant only
  int depth = 0;   // VanishingCheeger only
};

AnalyticGraphon constant_analytic(double p);
AnalyticGraphon k2_analytic();

// Indicator of {(x,y): x <= y <= sqrt(x)} together with its reflection;
// the degree at x is sqrt(x) - x^2.
AnalyticGraphon sqrt_neighborhood();

// Depth-D truncation of the connected graphon with vanishing Cheeger
// constant: black squares [2^-k, 2^-k+1]^2 for k = 1..D-1, a black corner
// square [0, 2^-(D-1)]^2, and gray connector right triangles with legs
// 2^-(2k+1) (horizontal) and 2^-k (vertical) at each inner corner,
// mirrored across the diagonal. The filled corner keeps the strip volume
// bound vol([0,2^-n]) >= V_D/4^n + e valid at every truncated level.
AnalyticGraphon vanishing_cheeger(int depth);

double rectangle_mass(const AnalyticGraphon& w, double x0, double x1, double y0,
                      double y1);

struct AnalyticOracle final : RectangleMassOracle {
  explicit AnalyticOracle(AnalyticGraphon w) : graphon(w) {}
  double rectangle_mass(double x0, double x1, double y0, double y1) const override {
    return limitcheeger::rectangle_mass(graphon, x0, x1, y0, y1);
  }
  AnalyticGraphon graphon;
};

// Two-block complete-bipartite graphon (the K_2 graphon).
StepGraphon k2_graphon();

StepGraphon constant_graphon(double p);

// The 5-block sequence member W_n that converges to the K_2 graphon in L^1
// while its Cheeger constant goes to 0. Cut points are
// 1/2 -/+ (1/n + e^-n) and 1/2 -/+ 1/n.
StepGraphon counterexample_wn(int n);

// The bottleneck cut (1/2 - 1/n, 1/2 + 1/n) of W_n. Its boundary mass over
// its own volume has the closed form 2e^-n / (2/n + 2e^-n); for n >= 5 the
// strip is also the lighter side, so this equals the Cheeger ratio.
IntervalSet wn_bottleneck_cut(int n);
double wn_bottleneck_ratio(int n);

// Total black mass of the depth-D construction and the geometric-series
// value sum_{k=1..D} 4^-k it dominates.
double vanishing_black_mass(int depth);
double vanishing_square_series(int depth);

}  // namespace limitcheeger
