#include "limitcheeger/graphing.hpp"

#include <cmath>
#include <numbers>

#include "limitcheeger/rng.hpp"
#include "limitcheeger/spectral.hpp"

namespace limitcheeger {

Graphing graphing_from_graph(const WeightedGraph& f) {
  validate(f);
  const std::size_t n = f.n;
  for (std::size_t i = 0; i < n; ++i) {
    if (f.at(i, i) != 0.0)
      throw input_error("graphing_from_graph: graph must be loopless");
    for (std::size_t j = 0; j < n; ++j)
      if (f.at(i, j) != 0.0 && f.at(i, j) != 1.0)
        throw input_error("graphing_from_graph: graph must have 0/1 weights");
  }
  std::vector<std::pair<double, double>> atoms(n);
  for (std::size_t i = 0; i < n; ++i)
    atoms[i] = {(2.0 * static_cast<double>(i) + 1.0) / (2.0 * static_cast<double>(n)),
                1.0 / static_cast<double>(n)};
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (f.at(i, j) == 1.0) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return make_atomic_graphing(std::move(atoms), std::move(edges));
}

namespace {

// Continued-fraction probe: flags alpha that agrees with a fraction of
// denominator <= 10^6 at ulp scale, where rotation connectivity fails.
// Badly approximable irrationals such as the golden ratio stay well above
// this threshold for every small denominator.
bool looks_rational(double alpha) {
  double x = alpha;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 40; ++it) {
    const double a = std::floor(x);
    const long long ai = static_cast<long long>(a);
    const long long p2 = ai * p1 + p0;
    const long long q2 = ai * q1 + q0;
    if (q2 > 1000000) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (std::abs(alpha - static_cast<double>(p1) / static_cast<double>(q1)) < 1e-15)
      return true;
    const double frac = x - a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  return false;
}

}  // namespace

Graphing rotation_graphing(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw input_error("rotation_graphing: alpha must lie in (0,1)");
  TranslationMapT<double> map;
  map.domain = full_set<double>();
  map.offset = alpha;
  Graphing g = make_continuous_graphing<double>({map});
  g.rational_offset_warning = looks_rational(alpha);
  return g;
}

WeightedGraph atomic_underlying_graph(const Graphing& g) {
  if (!g.atomic()) throw input_error("atomic_underlying_graph: graphing is not atomic");
  const std::size_t n = g.atoms.size();
  bool uniform = true;
  for (const auto& [x, m] : g.atoms)
    if (m != g.atoms[0].second) uniform = false;
  WeightedGraph f;
  f.n = n;
  f.w.assign(n * n, 0.0);
  for (const auto& [u, v] : g.atom_edges) {
    const double w = uniform ? 1.0 : g.atoms[u].second;
    f.at(u, v) = w;
    f.at(v, u) = w;
  }
  f.loopless = true;
  return f;
}

CheegerReport cheeger_atomic(const Graphing& g) {
  return integral_cheeger(atomic_underlying_graph(g));
}

double lambda_atomic(const Graphing& g) {
  return lambda_graph(atomic_underlying_graph(g));
}

namespace {

double circle_distance(double x, double y) {
  double d = std::abs(x - y);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

}  // namespace

RotationCut rotation_cut(double alpha, int n_steps) {
  if (n_steps < 1) throw input_error("rotation_cut: N must be >= 1");
  if (!(alpha > 0.0) || !(alpha < 1.0))
    throw input_error("rotation_cut: alpha must lie in (0,1)");
  const int n = n_steps;
  std::vector<double> orbit(n + 2);
  for (int i = 0; i <= n + 1; ++i) {
    const double v = static_cast<double>(i) * alpha;
    orbit[i] = v - std::floor(v);
  }
  double gap = 1.0;
  for (int i = 0; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j)
      gap = std::min(gap, circle_distance(orbit[i], orbit[j]));
  double arc = std::min(gap / 2.0, 1.0 / (2.0 * (n + 1)));

  RotationCut cut;
  cut.arc_length = arc;
  if (!(arc > 0.0)) return cut;  // rational alpha with a short orbit

  IntervalSet x = normalize<double>({{0.0, arc}});
  IntervalSet a = x;
  IntervalSet piece = x;
  for (int i = 1; i <= n; ++i) {
    piece = translate_mod1(piece, alpha);
    a = unite(a, piece);
  }
  const Graphing g = rotation_graphing(alpha);
  const double mu = measure(a);
  const bool disjoint = std::abs(mu - (n + 1) * arc) <= 1e-12;
  const bool small_enough = mu <= 0.5 + 1e-12;
  cut.set = a;
  cut.valid = disjoint && small_enough;
  cut.ratio = ratio_h_graphing(g, a);
  return cut;
}

double rotation_lambda_upper(double alpha, int k_max) {
  if (k_max < 1) throw input_error("rotation_lambda_upper: K must be >= 1");
  double best = 2.0;
  for (int k = 1; k <= k_max; ++k) {
    const double kval = static_cast<double>(k) * alpha;
    const double frac = kval - std::floor(kval);
    const double v = 1.0 - std::cos(2.0 * std::numbers::pi * frac);
    best = std::min(best, v);
  }
  return best;
}

CoareaReport coarea_graphing(const Graphing& g, const StepFunction& f) {
  return to_report(coarea_graphing_values(g, f));
}

CoareaReport coarea_graphing_atomic(const Graphing& g, const std::vector<double>& f) {
  return to_report(coarea_graphing_atomic_values(g, f));
}

double symmetry_audit(const Graphing& g, int trials, std::uint64_t seed) {
  if (trials < 1) throw input_error("symmetry_audit: trials must be >= 1");
  Rng rng(seed);
  auto random_set = [&](Rng& r) {
    const int parts = 1 + static_cast<int>(r.next_below(5));
    std::vector<double> pts;
    for (int k = 0; k < 2 * parts; ++k) pts.push_back(r.next_double());
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<double, double>> raw;
    for (int k = 0; k + 1 < 2 * parts; k += 2) raw.emplace_back(pts[k], pts[k + 1]);
    return normalize(std::move(raw));
  };
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng sub = rng.fork(static_cast<std::uint64_t>(t));
    const IntervalSet a = random_set(sub);
    const IntervalSet b = random_set(sub);
    if (a.empty() || b.empty()) continue;
    const double eab = e_graphing(g, a, b);
    const double eba = e_graphing(g, b, a);
    worst = std::max(worst, std::abs(eab - eba));
  }
  return worst;
}

}  // namespace limitcheeger
