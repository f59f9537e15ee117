#pragma once

// Test-side oracles, independent of the library code paths they check:
// plain subset loops instead of gray codes, nested grid scans instead of
// the optimizer, quadrature instead of antiderivatives, residuals instead
// of the eigensolver's own output.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "limitcheeger/graphon.hpp"
#include "limitcheeger/rational.hpp"
#include "limitcheeger/rng.hpp"

namespace oracles {

using limitcheeger::Rational;
using limitcheeger::Rng;
using limitcheeger::StepFunction;
using limitcheeger::StepGraphon;
using limitcheeger::StepGraphonQ;
using limitcheeger::StepFunctionQ;
using limitcheeger::WeightedGraph;

// BFS connectivity on the positive off-diagonal support.
inline bool bfs_connected(const WeightedGraph& g) {
  if (g.n == 0) return false;
  std::vector<char> seen(g.n, 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t v = 0; v < g.n; ++v)
      if (v != u && !seen[v] && g.at(u, v) > 0.0) {
        seen[v] = 1;
        ++count;
        q.push(v);
      }
  }
  return count == g.n;
}

// Plain subset scan for the integral Cheeger constant, n <= 16.
inline double brute_integral_cheeger(const WeightedGraph& g) {
  const std::size_t n = g.n;
  std::vector<double> vols(n);
  double vg = 0;
  for (std::size_t u = 0; u < n; ++u) {
    vols[u] = g.vol(u);
    vg += vols[u];
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    double cut = 0, s = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (!(mask & (1u << u))) continue;
      s += vols[u];
      for (std::size_t v = 0; v < n; ++v)
        if (!(mask & (1u << v))) cut += g.at(u, v);
    }
    const double den = std::min(s, vg - s);
    if (den > 0) best = std::min(best, cut / den);
  }
  return best;
}

// Full grid scan of the fractional ratio, n <= 4.
inline double grid_fractional(const WeightedGraph& g, int res, bool product_denom) {
  const std::size_t n = g.n;
  std::vector<double> vols(n);
  double vg = 0;
  for (std::size_t u = 0; u < n; ++u) {
    vols[u] = g.vol(u);
    vg += vols[u];
  }
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> idx(n, 0);
  while (true) {
    double s = 0, cut = 0;
    for (std::size_t u = 0; u < n; ++u) s += vols[u] * idx[u] / res;
    for (std::size_t u = 0; u < n; ++u) {
      const double xu = static_cast<double>(idx[u]) / res;
      if (xu == 0.0) continue;
      for (std::size_t v = 0; v < n; ++v)
        cut += xu * (1.0 - static_cast<double>(idx[v]) / res) * g.at(u, v);
    }
    const double den = product_denom ? s * (vg - s) : std::min(s, vg - s);
    if (den > 1e-12) best = std::min(best, cut / den);
    std::size_t p = 0;
    while (p < n && ++idx[p] > res) idx[p++] = 0;
    if (p == n) break;
  }
  return best;
}

// Exhaustive cut-norm over all pairs of block subsets, n <= 12.
inline double brute_cut_norm(const limitcheeger::StepKernel& k) {
  const std::size_t n = k.n;
  double best = 0;
  for (std::uint32_t ma = 0; ma < (1u << n); ++ma)
    for (std::uint32_t mb = 0; mb < (1u << n); ++mb) {
      double v = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(ma & (1u << i))) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (mb & (1u << j)) v += k.at(i, j) * k.block_len(i) * k.block_len(j);
      }
      best = std::max(best, std::abs(v));
    }
  return best;
}

// Adaptive Simpson quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double eps = 1e-12, int depth = 36) {
  const double c = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fc = f(c);
  std::function<double(double, double, double, double, double, double, int)> rec =
      [&](double lo, double hi, double flo, double fhi, double fmid, double whole,
          int d) -> double {
    const double mid = 0.5 * (lo + hi);
    const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
    const double flm = f(lm), frm = f(rm);
    const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    if (d <= 0 || std::abs(left + right - whole) < 15.0 * eps)
      return left + right + (left + right - whole) / 15.0;
    return rec(lo, mid, flo, fmid, flm, left, d - 1) +
           rec(mid, hi, fmid, fhi, frm, right, d - 1);
  };
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fc + fb);
  return rec(a, b, fa, fb, fc, whole, depth);
}

// ---------------------------------------------------------------------------
// Seeded generators (dyadic rationals so the double instances are exact).

inline WeightedGraph random_connected_graph(Rng& rng, std::size_t nmax,
                                            bool allow_loops = false) {
  for (;;) {
    const std::size_t n = 2 + rng.next_below(nmax - 1);
    WeightedGraph g;
    g.n = n;
    g.w.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (i == j && !allow_loops) continue;
        if (rng.next_double() < 0.55) {
          const double w = static_cast<double>(1 + rng.next_below(16)) / 16.0;
          g.at(i, j) = w;
          g.at(j, i) = w;
        }
      }
    g.loopless = true;
    for (std::size_t i = 0; i < n; ++i)
      if (g.at(i, i) != 0.0) g.loopless = false;
    if (bfs_connected(g)) return g;
  }
}

inline StepGraphon random_graphon(Rng& rng, std::size_t nmax) {
  const std::size_t n = 1 + rng.next_below(nmax);
  std::vector<double> cuts = {0.0, 1.0};
  std::vector<char> used(64, 0);
  for (std::size_t k = 1; k < n; ++k) {
    std::size_t c;
    do {
      c = 1 + rng.next_below(63);
    } while (used[c]);
    used[c] = 1;
    cuts.push_back(static_cast<double>(c) / 64.0);
  }
  std::sort(cuts.begin(), cuts.end());
  StepGraphon w;
  w.cuts = cuts;
  w.n = n;
  w.m.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = (rng.next_double() < 0.6)
                           ? static_cast<double>(rng.next_below(33)) / 32.0
                           : 0.0;
      w.at(i, j) = v;
      w.at(j, i) = v;
    }
  return w;
}

inline StepGraphon random_connected_graphon(Rng& rng, std::size_t nmax) {
  for (;;) {
    StepGraphon w = random_graphon(rng, nmax);
    if (limitcheeger::is_connected(w)) return w;
  }
}

inline StepFunction random_step_function(Rng& rng, const std::vector<double>& cuts) {
  StepFunction f;
  f.cuts = cuts;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    f.values.push_back(static_cast<double>(static_cast<long long>(rng.next_below(129)) - 64) /
                       32.0);
  return f;
}

// Rational twin of the double generator: integer draws mapped onto exact
// Rational endpoints and values.
inline StepGraphonQ random_graphon_q(Rng& rng, std::size_t nmax) {
  const std::size_t n = 1 + rng.next_below(nmax);
  std::vector<Rational> cuts = {Rational(0), Rational(1)};
  std::vector<char> used(64, 0);
  for (std::size_t k = 1; k < n; ++k) {
    std::size_t c;
    do {
      c = 1 + rng.next_below(63);
    } while (used[c]);
    used[c] = 1;
    cuts.push_back(Rational(static_cast<long long>(c), 64));
  }
  std::sort(cuts.begin(), cuts.end());
  StepGraphonQ w;
  w.cuts = cuts;
  w.n = n;
  w.m.assign(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational v(0);
      if (rng.next_double() < 0.6)
        v = Rational(static_cast<long long>(rng.next_below(33)), 32);
      w.at(i, j) = v;
      w.at(j, i) = v;
    }
  return w;
}

inline StepFunctionQ random_step_function_q(Rng& rng, const std::vector<Rational>& cuts) {
  StepFunctionQ f;
  f.cuts = cuts;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    f.values.push_back(
        Rational(static_cast<long long>(rng.next_below(129)) - 64, 32));
  return f;
}

// Random simple connected d-regular graph via the pairing model.
inline WeightedGraph random_regular_graph(Rng& rng, std::size_t n, std::size_t d) {
  for (int attempt = 0; attempt < 4000; ++attempt) {
    std::vector<std::size_t> stubs;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t k = 0; k < d; ++k) stubs.push_back(v);
    for (std::size_t i = stubs.size(); i > 1; --i)
      std::swap(stubs[i - 1], stubs[rng.next_below(i)]);
    WeightedGraph g;
    g.n = n;
    g.w.assign(n * n, 0.0);
    g.loopless = true;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const std::size_t u = stubs[i], v = stubs[i + 1];
      if (u == v || g.at(u, v) != 0.0) {
        ok = false;
        break;
      }
      g.at(u, v) = 1.0;
      g.at(v, u) = 1.0;
    }
    if (ok && bfs_connected(g)) return g;
  }
  throw std::runtime_error("random_regular_graph: generation failed");
}

inline WeightedGraph path_graph(std::size_t n) {
  WeightedGraph g;
  g.n = n;
  g.w.assign(n * n, 0.0);
  g.loopless = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.at(i, i + 1) = 1.0;
    g.at(i + 1, i) = 1.0;
  }
  return g;
}

inline WeightedGraph cycle_graph(std::size_t n) {
  WeightedGraph g = path_graph(n);
  g.at(0, n - 1) = 1.0;
  g.at(n - 1, 0) = 1.0;
  return g;
}

inline WeightedGraph complete_graph(std::size_t n) {
  WeightedGraph g;
  g.n = n;
  g.w.assign(n * n, 1.0);
  g.loopless = true;
  for (std::size_t i = 0; i < n; ++i) g.at(i, i) = 0.0;
  return g;
}

inline WeightedGraph k2_graph() { return complete_graph(2); }

// Splits every block of a step graphon into two equal halves.
inline StepGraphon split_blocks(const StepGraphon& w) {
  StepGraphon out;
  out.n = 2 * w.n;
  out.cuts.push_back(0.0);
  for (std::size_t i = 0; i < w.n; ++i) {
    out.cuts.push_back(0.5 * (w.cuts[i] + w.cuts[i + 1]));
    out.cuts.push_back(w.cuts[i + 1]);
  }
  out.m.assign(out.n * out.n, 0.0);
  for (std::size_t i = 0; i < out.n; ++i)
    for (std::size_t j = 0; j < out.n; ++j) out.at(i, j) = w.at(i / 2, j / 2);
  return out;
}

}  // namespace oracles
