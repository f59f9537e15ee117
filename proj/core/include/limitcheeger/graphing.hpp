#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "limitcheeger/cheeger.hpp"
#include "limitcheeger/coarea.hpp"
#include "limitcheeger/interval.hpp"

namespace limitcheeger {

// Partial measure-preserving translation: y = x + offset (mod 1) for
// x in domain. A graphing map always carries its inverse implicitly.
template <class S>
struct TranslationMapT {
  IntervalSetT<S> domain;
  S offset{};
};

// One direction of a map; e_G integrates over these. Valid graphings have
// strands in inverse pairs, which is what the symmetry audit checks.
template <class S>
struct DirectedStrandT {
  IntervalSetT<S> domain;
  S offset{};
};

// Graphing on [0,1]: either purely atomic (weighted point masses with an
// edge list) or purely continuous (Lebesgue measure with translation
// maps). Mixed measures are rejected. Only translation strands are
// representable; a reflection strand kind (x -> c - x) would slot into
// DirectedStrandT beside the offset if it is ever needed.
template <class S>
struct GraphingT {
  std::vector<std::pair<S, S>> atoms;  // (position, mass)
  std::vector<std::pair<int, int>> atom_edges;
  std::vector<TranslationMapT<S>> maps;
  std::vector<DirectedStrandT<S>> strands;  // derived from maps
  int degree_bound = 0;
  bool rational_offset_warning = false;

  bool atomic() const { return !atoms.empty(); }
};

using Graphing = GraphingT<double>;
using GraphingQ = GraphingT<Rational>;

struct RotationCut {
  IntervalSet set;
  double ratio = 0.0;
  bool valid = false;
  double arc_length = 0.0;
};

namespace detail {
inline bool near_one(double x) { return std::abs(x - 1.0) <= 1e-12; }
inline bool near_one(const Rational& x) { return x == Rational(1); }
inline bool near_equal(double a, double b) { return std::abs(a - b) <= 1e-12; }
inline bool near_equal(const Rational& a, const Rational& b) { return a == b; }
}  // namespace detail

template <class S>
GraphingT<S> make_atomic_graphing(std::vector<std::pair<S, S>> atoms,
                                  std::vector<std::pair<int, int>> edges) {
  GraphingT<S> g;
  if (atoms.empty()) throw input_error("atomic graphing: no atoms");
  S total(0);
  for (const auto& [x, m] : atoms) {
    if (x < S(0) || !(x < S(1)))
      throw input_error("atomic graphing: atom position must lie in [0,1)");
    if (!(S(0) < m)) throw input_error("atomic graphing: non-positive mass");
    total += m;
  }
  if (!detail::near_one(total))
    throw input_error("atomic graphing: atom masses must sum to 1");
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if (atoms[i].first == atoms[j].first)
        throw input_error("atomic graphing: duplicate atom position");
  const int n = static_cast<int>(atoms.size());
  std::vector<int> deg(atoms.size(), 0);
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v)
      throw input_error("atomic graphing: bad edge endpoint");
    if (!detail::near_equal(atoms[u].second, atoms[v].second))
      throw input_error(
          "atomic graphing: edge joins atoms of different mass (measure "
          "transport fails)");
    ++deg[u];
    ++deg[v];
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw input_error("atomic graphing: duplicate edge");
  g.atoms = std::move(atoms);
  g.atom_edges = std::move(edges);
  g.degree_bound = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  return g;
}

// Maximum number of directed strand domains covering a single point.
template <class S>
int max_degree(const GraphingT<S>& g) {
  if (g.atomic()) return g.degree_bound;
  std::vector<std::pair<S, int>> events;
  for (const auto& strand : g.strands)
    for (const auto& [lo, hi] : strand.domain.parts) {
      events.emplace_back(lo, +1);
      events.emplace_back(hi, -1);
    }
  std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;  // close before open
    return a.first < b.first;
  });
  int cur = 0, best = 0;
  for (const auto& [x, d] : events) {
    cur += d;
    best = std::max(best, cur);
  }
  return best;
}

template <class S>
GraphingT<S> make_continuous_graphing(std::vector<TranslationMapT<S>> maps) {
  GraphingT<S> g;
  if (maps.empty()) throw input_error("continuous graphing: no maps");
  for (auto& m : maps) {
    m.domain = normalize(m.domain.parts);
    g.strands.push_back({m.domain, m.offset});
    g.strands.push_back({translate_mod1(m.domain, m.offset), S(0) - m.offset});
  }
  g.maps = std::move(maps);
  g.degree_bound = max_degree(g);
  return g;
}

// The canonical atomic graphing of a simple graph: atoms at (2i-1)/2n of
// mass 1/n, one graphing edge per graph edge.
Graphing graphing_from_graph(const WeightedGraph& f);

// Irrational-rotation graphing: one full-circle translation by alpha.
// A rational-looking alpha is accepted but flagged; connectivity fails
// there.
Graphing rotation_graphing(double alpha);

// mu(A): atom masses in A, or Lebesgue measure for continuous graphings.
template <class S>
S mu_measure(const GraphingT<S>& g, const IntervalSetT<S>& a) {
  if (!g.atomic()) return measure(a);
  S total(0);
  for (const auto& [x, m] : g.atoms)
    if (contains(a, x)) total += m;
  return total;
}

// e_G(A,B) = int_A deg_B dmu; ordered convention, so an edge inside
// A cap B counts from both endpoints.
template <class S>
S e_graphing(const GraphingT<S>& g, const IntervalSetT<S>& a,
             const IntervalSetT<S>& b) {
  S total(0);
  if (g.atomic()) {
    for (const auto& [u, v] : g.atom_edges) {
      const auto& [xu, mu] = g.atoms[u];
      const auto& [xv, mv] = g.atoms[v];
      if (contains(a, xu) && contains(b, xv)) total += mu;
      if (contains(a, xv) && contains(b, xu)) total += mv;
    }
    return total;
  }
  for (const auto& strand : g.strands) {
    // x in A, x in dom, x + offset in B.
    const IntervalSetT<S> pre = translate_mod1(b, S(0) - strand.offset);
    total += measure(intersect(intersect(a, strand.domain), pre));
  }
  return total;
}

template <class S>
S vol_graphing(const GraphingT<S>& g, const IntervalSetT<S>& a) {
  return e_graphing(g, a, full_set<S>());
}

template <class S>
S ratio_h_graphing(const GraphingT<S>& g, const IntervalSetT<S>& a) {
  const S mu = mu_measure(g, a);
  if (!(S(0) < mu) || !(mu < S(1)))
    throw input_error("ratio_h_graphing: cut must have mu-measure in (0,1)");
  const IntervalSetT<S> ac = complement(a);
  const S va = vol_graphing(g, a);
  const S vc = vol_graphing(g, ac);
  if (!(S(0) < va)) throw degenerate_error("degenerate cut: vol(A) = 0");
  if (!(S(0) < vc)) throw degenerate_error("degenerate cut: vol(A^c) = 0");
  return e_graphing(g, a, ac) / std::min(va, vc);
}

// Interval realization of an atomic superlevel set {x_k : f_k > level}:
// a small half-open box per atom, reaching to the midpoint toward the
// next atom so no box captures a neighbor.
template <class S>
IntervalSetT<S> atomic_superlevel(const GraphingT<S>& g, const std::vector<S>& f,
                                  const S& level) {
  std::vector<std::pair<S, S>> raw;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (!(level < f[k])) continue;
    const S x = g.atoms[k].first;
    S hi = S(1);
    for (const auto& [y, m] : g.atoms)
      if (x < y) hi = std::min(hi, (x + y) / S(2));
    raw.emplace_back(x, hi);
  }
  return normalize(std::move(raw));
}

// Underlying weighted graph of an atomic graphing (uniform masses reduce
// to unit weights so graph-side results match bit for bit).
WeightedGraph atomic_underlying_graph(const Graphing& g);

// Cheeger constant of an atomic graphing: measurable cuts reduce to atom
// subsets, so this delegates to the exact integral optimizer.
CheegerReport cheeger_atomic(const Graphing& g);

// Bottom of the spectrum of an atomic graphing.
double lambda_atomic(const Graphing& g);

// Orbit cut X ∪ TX ∪ ... ∪ T^N X with the arc length chosen as half the
// minimal orbit gap (capped so mu(A) <= 1/2); the ratio is then exactly
// 1/(N+1).
RotationCut rotation_cut(double alpha, int n_steps);

// min_{1<=k<=K} 1 - cos(2 pi k alpha); an upper bound on lambda via the
// mean-zero test functions cos(2 pi k x).
double rotation_lambda_upper(double alpha, int k_max);

// Co-area identities for a continuous graphing and a step function.
template <class S>
CoareaValuesT<S> coarea_graphing_values(const GraphingT<S>& g,
                                        const StepFunctionT<S>& f) {
  if (g.atomic())
    throw input_error(
        "coarea_graphing_values: step-function form needs a continuous graphing");
  validate(f);
  CoareaValuesT<S> out;
  const std::size_t m = f.values.size();
  for (const auto& strand : g.strands) {
    for (std::size_t i = 0; i < m; ++i) {
      IntervalSetT<S> pi;
      pi.parts.emplace_back(f.cuts[i], f.cuts[i + 1]);
      const IntervalSetT<S> tail = intersect(strand.domain, pi);
      if (tail.empty()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!(f.values[i] < f.values[j])) continue;  // oriented tail -> head
        IntervalSetT<S> pj;
        pj.parts.emplace_back(f.cuts[j], f.cuts[j + 1]);
        const S w =
            measure(intersect(tail, translate_mod1(pj, S(0) - strand.offset)));
        if (w == S(0)) continue;
        const S flo = f.values[i], fhi = f.values[j];
        out.lhs_simple += (fhi - flo) * w;
        const S plo = detail::positive_part(flo), phi = detail::positive_part(fhi);
        out.lhs_plus += (phi * phi - plo * plo) * w;
        const S mlo = detail::negative_part(flo), mhi = detail::negative_part(fhi);
        out.lhs_minus += (mlo * mlo - mhi * mhi) * w;
      }
    }
  }
  auto e_at = [&](const S& level) {
    const IntervalSetT<S> st = superlevel(f, level);
    return e_graphing(g, complement(st), st);
  };
  detail::rhs_threshold_sums(f.values, e_at, &out.rhs_plus, &out.rhs_minus,
                             &out.rhs_simple);
  return out;
}

// Co-area identities for an atomic graphing and per-atom values.
template <class S>
CoareaValuesT<S> coarea_graphing_atomic_values(const GraphingT<S>& g,
                                               const std::vector<S>& f) {
  if (!g.atomic())
    throw input_error("coarea_graphing_atomic_values: graphing is not atomic");
  if (f.size() != g.atoms.size())
    throw input_error("coarea_graphing_atomic_values: value count mismatch");
  CoareaValuesT<S> out;
  for (const auto& [u, v] : g.atom_edges) {
    if (f[u] == f[v]) continue;
    const bool up = f[u] < f[v];
    const int tail = up ? u : v;
    const int head = up ? v : u;
    const S w = g.atoms[tail].second;
    const S flo = f[tail], fhi = f[head];
    out.lhs_simple += (fhi - flo) * w;
    const S plo = detail::positive_part(flo), phi = detail::positive_part(fhi);
    out.lhs_plus += (phi * phi - plo * plo) * w;
    const S mlo = detail::negative_part(flo), mhi = detail::negative_part(fhi);
    out.lhs_minus += (mlo * mlo - mhi * mhi) * w;
  }
  auto e_at = [&](const S& level) {
    const IntervalSetT<S> st = atomic_superlevel(g, f, level);
    return e_graphing(g, complement(st), st);
  };
  detail::rhs_threshold_sums(f, e_at, &out.rhs_plus, &out.rhs_minus,
                             &out.rhs_simple);
  return out;
}

CoareaReport coarea_graphing(const Graphing& g, const StepFunction& f);
CoareaReport coarea_graphing_atomic(const Graphing& g, const std::vector<double>& f);

// max over random (A,B) of |e(A,B) - e(B,A)|; a valid graphing stays at
// rounding level, a corrupted strand pair is caught immediately.
double symmetry_audit(const Graphing& g, int trials, std::uint64_t seed);

}  // namespace limitcheeger
