#include "limitcheeger/gallery.hpp"

#include <algorithm>
#include <cmath>

namespace limitcheeger {

AnalyticGraphon constant_analytic(double p) {
  if (p < 0.0 || p > 1.0) throw input_error("constant graphon: p outside [0,1]");
  return {AnalyticGraphon::Kind::Constant, p, 0};
}

AnalyticGraphon k2_analytic() { return {AnalyticGraphon::Kind::K2, 0.0, 0}; }

AnalyticGraphon sqrt_neighborhood() {
  return {AnalyticGraphon::Kind::SqrtNeighborhood, 0.0, 0};
}

AnalyticGraphon vanishing_cheeger(int depth) {
  if (depth < 2) throw input_error("vanishing_cheeger: depth must be >= 2");
  return {AnalyticGraphon::Kind::VanishingCheeger, 0.0, depth};
}

StepGraphon constant_graphon(double p) {
  if (p < 0.0 || p > 1.0) throw input_error("constant graphon: p outside [0,1]");
  StepGraphon g;
  g.cuts = {0.0, 1.0};
  g.m = {p};
  g.n = 1;
  return g;
}

StepGraphon k2_graphon() {
  StepGraphon g;
  g.cuts = {0.0, 0.5, 1.0};
  g.n = 2;
  g.m = {0.0, 1.0, 1.0, 0.0};
  return g;
}

StepGraphon counterexample_wn(int n) {
  if (n < 3) throw input_error("counterexample_wn: n must be >= 3");
  const double en = std::exp(-static_cast<double>(n));
  const double inv = 1.0 / static_cast<double>(n);
  const double a = 0.5 - inv - en;
  const double b = 0.5 - inv;
  const double c = 0.5 + inv;
  const double d = 0.5 + inv + en;
  StepGraphon g;
  g.cuts = {0.0, a, b, c, d, 1.0};
  g.n = 5;
  g.m.assign(25, 0.0);
  // Bars [0, 1/2-1/n] x [1/2+1/n, 1] with transpose, plus the central
  // square [a, d]^2.
  for (int i : {0, 1})
    for (int j : {3, 4}) {
      g.at(i, j) = 1.0;
      g.at(j, i) = 1.0;
    }
  for (int i : {1, 2, 3})
    for (int j : {1, 2, 3}) g.at(i, j) = 1.0;
  return g;
}

IntervalSet wn_bottleneck_cut(int n) {
  if (n < 3) throw input_error("wn_bottleneck_cut: n must be >= 3");
  const double inv = 1.0 / static_cast<double>(n);
  return normalize<double>({{0.5 - inv, 0.5 + inv}});
}

double wn_bottleneck_ratio(int n) {
  if (n < 3) throw input_error("wn_bottleneck_ratio: n must be >= 3");
  const double en = std::exp(-static_cast<double>(n));
  const double inv2 = 2.0 / static_cast<double>(n);
  return 2.0 * en / (inv2 + 2.0 * en);
}

namespace {

double clamp_len(double lo, double hi) { return hi > lo ? hi - lo : 0.0; }

// Overlap area of [x0,x1] x [y0,y1] with [sx0,sx1] x [sy0,sy1].
double rect_overlap(double x0, double x1, double y0, double y1, double sx0,
                    double sx1, double sy0, double sy1) {
  return clamp_len(std::max(x0, sx0), std::min(x1, sx1)) *
         clamp_len(std::max(y0, sy0), std::min(y1, sy1));
}

// Area of [x0,x1] x [y0,y1] intersected with the right triangle
// {(x,y): xa <= x <= xb, yb <= y <= L(x)}, where L runs linearly from
// (xa, yb) to (xb, yt). All triangle coordinates are dyadic, so the
// trapezoid pieces below stay exact for dyadic query rectangles.
double triangle_mass(double xa, double xb, double yb, double yt, double x0,
                     double x1, double y0, double y1) {
  const double lo = std::max(x0, xa);
  const double hi = std::min(x1, xb);
  if (lo >= hi) return 0.0;
  const double floor_y = std::max(y0, yb);
  const double cap_y = std::min(y1, yt);
  if (cap_y <= floor_y) return 0.0;
  const double slope = (yt - yb) / (xb - xa);
  // L(x) crosses the floor at xf and the cap at xc.
  const double xf = xa + (floor_y - yb) / slope;
  const double xc = xa + (cap_y - yb) / slope;
  double total = 0.0;
  // Piece where floor_y <= L(x) <= cap_y: integrate L(x) - floor_y.
  {
    const double pl = std::max(lo, xf);
    const double ph = std::min(hi, xc);
    if (ph > pl) {
      const double la = yb + slope * (pl - xa) - floor_y;
      const double lb = yb + slope * (ph - xa) - floor_y;
      total += 0.5 * (la + lb) * (ph - pl);
    }
  }
  // Piece where L(x) >= cap_y: full strip height.
  {
    const double pl = std::max(lo, xc);
    if (hi > pl) total += (cap_y - floor_y) * (hi - pl);
  }
  return total;
}

double vanishing_mass(int depth, double x0, double x1, double y0, double y1) {
  double total = 0.0;
  // Black squares [2^-k, 2^-k+1]^2 for k = 1..depth-1 and the filled
  // corner [0, 2^-(depth-1)]^2.
  for (int k = 1; k < depth; ++k) {
    const double s = std::ldexp(1.0, -k);
    total += rect_overlap(x0, x1, y0, y1, s, 2.0 * s, s, 2.0 * s);
  }
  const double corner = std::ldexp(1.0, -(depth - 1));
  total += rect_overlap(x0, x1, y0, y1, 0.0, corner, 0.0, corner);
  // Gray connector triangles and their mirrors.
  for (int k = 1; k < depth; ++k) {
    const double xb = std::ldexp(1.0, -k);
    const double xa = xb - std::ldexp(1.0, -(2 * k + 1));
    const double yb = xb;
    const double yt = 2.0 * xb;
    total += triangle_mass(xa, xb, yb, yt, x0, x1, y0, y1);
    total += triangle_mass(xa, xb, yb, yt, y0, y1, x0, x1);
  }
  return total;
}

// Area of [x0,x1] x [y0,y1] inside {(x,y): x <= y <= sqrt(x)} via the
// antiderivatives of sqrt(x) and x; breakpoints where the bounds cross
// the rectangle edges keep each piece smooth.
double sqrt_leaf_upper_mass(double x0, double x1, double y0, double y1) {
  x0 = std::max(x0, 0.0);
  x1 = std::min(x1, 1.0);
  if (x0 >= x1) return 0.0;
  const double y0c = std::max(y0, 0.0);
  const double y1c = std::min(y1, 1.0);
  if (y0c >= y1c) return 0.0;
  double brk[6] = {x0, x1, y0c, y1c, y0c * y0c, y1c * y1c};
  std::sort(std::begin(brk), std::end(brk));
  double total = 0.0;
  auto upper_antideriv = [](double x) { return (2.0 / 3.0) * x * std::sqrt(x); };
  for (int p = 0; p + 1 < 6; ++p) {
    const double a = std::max(brk[p], x0);
    const double b = std::min(brk[p + 1], x1);
    if (a >= b) continue;
    const double mid = 0.5 * (a + b);
    const double top = std::min(std::sqrt(mid), y1c);
    const double bot = std::max(mid, y0c);
    if (top <= bot) continue;
    // Integrate (min(sqrt(x), y1) - max(x, y0)) over [a, b]; each bound is
    // constant on the piece by choice of breakpoints.
    double piece = 0.0;
    if (std::sqrt(mid) <= y1c)
      piece += upper_antideriv(b) - upper_antideriv(a);
    else
      piece += y1c * (b - a);
    if (mid >= y0c)
      piece -= 0.5 * (b * b - a * a);
    else
      piece -= y0c * (b - a);
    total += piece;
  }
  return total;
}

}  // namespace

double rectangle_mass(const AnalyticGraphon& w, double x0, double x1, double y0,
                      double y1) {
  if (x0 < 0.0 || y0 < 0.0 || x1 > 1.0 || y1 > 1.0 || x0 > x1 || y0 > y1)
    throw input_error("rectangle_mass: rectangle outside [0,1]^2");
  switch (w.kind) {
    case AnalyticGraphon::Kind::Constant:
      return w.p * (x1 - x0) * (y1 - y0);
    case AnalyticGraphon::Kind::K2:
      return rect_overlap(x0, x1, y0, y1, 0.0, 0.5, 0.5, 1.0) +
             rect_overlap(x0, x1, y0, y1, 0.5, 1.0, 0.0, 0.5);
    case AnalyticGraphon::Kind::SqrtNeighborhood:
      return sqrt_leaf_upper_mass(x0, x1, y0, y1) +
             sqrt_leaf_upper_mass(y0, y1, x0, x1);
    case AnalyticGraphon::Kind::VanishingCheeger:
      return vanishing_mass(w.depth, x0, x1, y0, y1);
  }
  throw input_error("rectangle_mass: unknown graphon kind");
}

double vanishing_black_mass(int depth) {
  if (depth < 2) throw input_error("vanishing_black_mass: depth must be >= 2");
  double total = std::ldexp(1.0, -2 * (depth - 1));
  for (int k = 1; k < depth; ++k) total += std::ldexp(1.0, -2 * k);
  return total;
}

double vanishing_square_series(int depth) {
  if (depth < 1) throw input_error("vanishing_square_series: depth must be >= 1");
  double total = 0.0;
  for (int k = 1; k <= depth; ++k) total += std::ldexp(1.0, -2 * k);
  return total;
}

}  // namespace limitcheeger
