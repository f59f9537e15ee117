#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "limitcheeger/interval.hpp"

namespace limitcheeger {

// Step graphon: symmetric block-value matrix over a finite partition of
// [0,1]. Block k spans [cuts[k], cuts[k+1]). Values live in [0,1].
template <class S>
struct StepGraphonT {
  std::vector<S> cuts;
  std::vector<S> m;  // row-major n x n
  std::size_t n = 0;

  S& at(std::size_t i, std::size_t j) { return m[i * n + j]; }
  const S& at(std::size_t i, std::size_t j) const { return m[i * n + j]; }
  S block_len(std::size_t i) const { return cuts[i + 1] - cuts[i]; }
};

using StepGraphon = StepGraphonT<double>;
using StepGraphonQ = StepGraphonT<Rational>;

// Symmetric kernel with values in [-1,1]; arises as a difference of two
// graphons on a common refinement.
struct StepKernel {
  std::vector<double> cuts;
  std::vector<double> m;
  std::size_t n = 0;

  double& at(std::size_t i, std::size_t j) { return m[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return m[i * n + j]; }
  double block_len(std::size_t i) const { return cuts[i + 1] - cuts[i]; }
};

// Finite weighted graph: symmetric w with entries in [0,1]; w_{ii} = 0
// everywhere when `loopless` is set.
struct WeightedGraph {
  std::size_t n = 0;
  std::vector<double> w;  // row-major n x n
  bool loopless = false;

  double& at(std::size_t i, std::size_t j) { return w[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return w[i * n + j]; }

  double vol(std::size_t u) const {
    double s = 0;
    for (std::size_t v = 0; v < n; ++v) s += at(u, v);
    return s;
  }
  double vol_total() const {
    double s = 0;
    for (std::size_t u = 0; u < n; ++u) s += vol(u);
    return s;
  }
};

template <class S>
void validate(const StepGraphonT<S>& g) {
  if (g.cuts.size() < 2 || g.n + 1 != g.cuts.size() || g.m.size() != g.n * g.n)
    throw input_error("step graphon: inconsistent sizes");
  if (!(g.cuts.front() == S(0)) || !(g.cuts.back() == S(1)))
    throw input_error("step graphon: cuts must span [0,1]");
  for (std::size_t k = 0; k + 1 < g.cuts.size(); ++k)
    if (!(g.cuts[k] < g.cuts[k + 1]))
      throw input_error("step graphon: cuts must be strictly increasing");
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j) {
      if (!(g.at(i, j) == g.at(j, i)))
        throw input_error("step graphon: matrix not symmetric");
      if (g.at(i, j) < S(0) || S(1) < g.at(i, j))
        throw input_error("step graphon: value outside [0,1]");
    }
}

void validate(const WeightedGraph& g);

template <class S>
StepGraphonT<S> constant_graphon_t(const S& p) {
  StepGraphonT<S> g;
  g.cuts = {S(0), S(1)};
  g.m = {p};
  g.n = 1;
  return g;
}

// d_W(x) = \int_0^1 W(x,y) dy, blockwise constant.
template <class S>
StepFunctionT<S> degree_function(const StepGraphonT<S>& w) {
  StepFunctionT<S> d;
  d.cuts = w.cuts;
  d.values.assign(w.n, S(0));
  for (std::size_t i = 0; i < w.n; ++i) {
    S s(0);
    for (std::size_t j = 0; j < w.n; ++j) s += w.at(i, j) * w.block_len(j);
    d.values[i] = s;
  }
  return d;
}

// e_W(A,B) = \int_{A x B} W. Depends on A,B only through per-block masses.
template <class S>
S ew(const StepGraphonT<S>& w, const IntervalSetT<S>& a, const IntervalSetT<S>& b) {
  std::vector<S> alpha(w.n, S(0)), beta(w.n, S(0));
  for (std::size_t i = 0; i < w.n; ++i) {
    IntervalSetT<S> block;
    block.parts.emplace_back(w.cuts[i], w.cuts[i + 1]);
    alpha[i] = measure(intersect(a, block));
    beta[i] = measure(intersect(b, block));
  }
  S total(0);
  for (std::size_t i = 0; i < w.n; ++i) {
    if (alpha[i] == S(0)) continue;
    S row(0);
    for (std::size_t j = 0; j < w.n; ++j) row += w.at(i, j) * beta[j];
    total += alpha[i] * row;
  }
  return total;
}

// vol_W(A) = e_W(A, I).
template <class S>
S vol(const StepGraphonT<S>& w, const IntervalSetT<S>& a) {
  return ew(w, a, full_set<S>());
}

template <class S>
S vol_total(const StepGraphonT<S>& w) {
  return vol(w, full_set<S>());
}

// Connectivity of the block graph on positive off-diagonal entries; the
// single-block case is decided by the loop value.
bool is_connected(const StepGraphon& w);

struct CutNormResult {
  double value = 0;
  std::vector<int> row_blocks;  // witness A as block indices
  std::vector<int> col_blocks;  // witness B
  bool exact = false;           // true when found by exhaustive enumeration
  std::string method;           // "enumeration" or "alternating-heuristic"
};

inline constexpr std::size_t kCutNormExactMaxBlocks = 24;

// Cut norm sup_{A,B} |\int_{A x B} U| of a step kernel. The optimum is
// attained on block unions, so enumeration over row subsets with a sign
// rule for columns is exact up to kCutNormExactMaxBlocks blocks; beyond
// that an alternating heuristic reports a certified lower bound.
CutNormResult cut_norm(const StepKernel& k);

// \int\int |W1 - W2| on the common refinement.
double l1_distance(const StepGraphon& w1, const StepGraphon& w2);

StepKernel difference_kernel(const StepGraphon& w1, const StepGraphon& w2);

// Graphon of a weighted graph: n equal blocks, M = w.
StepGraphon from_graph(const WeightedGraph& g);

// Weighted graph induced by a step graphon: w_ij = M_ij * l_i * l_j
// (diagonal loops kept). The Cheeger and spectral problems of W reduce
// to this graph on block-constant data.
WeightedGraph induced_graph(const StepGraphon& w);

WeightedGraph make_loopless(const WeightedGraph& g);

// Exact rectangle mass of an (analytic or step) graphon; the abstraction
// boundary that lets gallery graphons feed dyadic step approximation.
struct RectangleMassOracle {
  virtual ~RectangleMassOracle() = default;
  virtual double rectangle_mass(double x0, double x1, double y0, double y1) const = 0;
};

struct StepGraphonOracle final : RectangleMassOracle {
  explicit StepGraphonOracle(StepGraphon w) : graphon(std::move(w)) {}
  double rectangle_mass(double x0, double x1, double y0, double y1) const override;
  StepGraphon graphon;
};

inline constexpr int kConditionalStepMaxLevel = 12;

// Dyadic conditional-expectation step approximation: 2^level equal blocks,
// block value = rectangle mass / cell area.
StepGraphon conditional_step(const RectangleMassOracle& source, int level);

// Sum of masses of the parts of A x B; exact when the oracle is.
double ew_oracle(const RectangleMassOracle& source, const IntervalSet& a,
                 const IntervalSet& b);

}  // namespace limitcheeger
