#include "limitcheeger/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace limitcheeger {

void validate(const WeightedGraph& g) {
  if (g.n == 0 || g.w.size() != g.n * g.n)
    throw input_error("weighted graph: inconsistent sizes");
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j) {
      if (g.at(i, j) != g.at(j, i))
        throw input_error("weighted graph: matrix not symmetric");
      if (g.at(i, j) < 0.0 || g.at(i, j) > 1.0)
        throw input_error("weighted graph: weight outside [0,1]");
    }
  if (g.loopless)
    for (std::size_t i = 0; i < g.n; ++i)
      if (g.at(i, i) != 0.0) throw input_error("weighted graph: loop on loopless graph");
}

namespace {

// Union-find over block indices.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_connected(const StepGraphon& w) {
  validate(w);
  if (w.n == 1) return w.at(0, 0) > 0.0;
  Dsu dsu(w.n);
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t j = i + 1; j < w.n; ++j)
      if (w.at(i, j) > 0.0) dsu.join(static_cast<int>(i), static_cast<int>(j));
  for (std::size_t i = 1; i < w.n; ++i)
    if (dsu.find(static_cast<int>(i)) != dsu.find(0)) return false;
  return true;
}

namespace {

// Given row masses c_j = sum_{i in S} U_ij l_i, the best column set takes
// all positive (or all negative) c_j. Returns the larger of the two.
double best_column_value(const std::vector<double>& c, const std::vector<double>& len,
                         std::vector<int>* cols_out) {
  double pos = 0, neg = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double v = c[j] * len[j];
    if (v > 0)
      pos += v;
    else
      neg -= v;
  }
  if (cols_out) {
    cols_out->clear();
    const bool take_pos = pos >= neg;
    for (std::size_t j = 0; j < c.size(); ++j)
      if ((take_pos && c[j] > 0) || (!take_pos && c[j] < 0))
        cols_out->push_back(static_cast<int>(j));
  }
  return std::max(pos, neg);
}

CutNormResult cut_norm_heuristic(const StepKernel& k) {
  const std::size_t n = k.n;
  std::vector<double> len(n);
  for (std::size_t i = 0; i < n; ++i) len[i] = k.block_len(i);

  CutNormResult best;
  best.method = "alternating-heuristic";
  // Deterministic starts: single blocks and the full set.
  std::vector<std::vector<char>> starts;
  starts.emplace_back(n, 1);
  for (std::size_t s = 0; s < std::min<std::size_t>(n, 16); ++s) {
    std::vector<char> one(n, 0);
    one[s] = 1;
    starts.push_back(one);
  }
  for (auto rows : starts) {
    for (int pass = 0; pass < 50; ++pass) {
      // Columns by sign of the row aggregate, then rows by sign of the
      // column aggregate; repeat until stable.
      std::vector<double> c(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        if (rows[i])
          for (std::size_t j = 0; j < n; ++j) c[j] += k.at(i, j) * len[i];
      double pos = 0, neg = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const double v = c[j] * len[j];
        (v > 0 ? pos : neg) += std::abs(v);
      }
      const int sign = pos >= neg ? 1 : -1;
      std::vector<char> cols(n, 0);
      for (std::size_t j = 0; j < n; ++j) cols[j] = (sign * c[j] > 0) ? 1 : 0;
      std::vector<double> r(n, 0.0);
      for (std::size_t j = 0; j < n; ++j)
        if (cols[j])
          for (std::size_t i = 0; i < n; ++i) r[i] += k.at(i, j) * len[j];
      std::vector<char> new_rows(n, 0);
      for (std::size_t i = 0; i < n; ++i) new_rows[i] = (sign * r[i] > 0) ? 1 : 0;
      if (new_rows == rows) break;
      rows = new_rows;
    }
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      if (rows[i])
        for (std::size_t j = 0; j < n; ++j) c[j] += k.at(i, j) * len[i];
    std::vector<int> cols;
    const double v = best_column_value(c, len, &cols);
    if (v > best.value) {
      best.value = v;
      best.row_blocks.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (rows[i]) best.row_blocks.push_back(static_cast<int>(i));
      best.col_blocks = cols;
    }
  }
  return best;
}

}  // namespace

CutNormResult cut_norm(const StepKernel& k) {
  const std::size_t n = k.n;
  if (n == 0 || k.m.size() != n * n || k.cuts.size() != n + 1)
    throw input_error("cut_norm: inconsistent kernel");
  if (n > kCutNormExactMaxBlocks) return cut_norm_heuristic(k);

  std::vector<double> len(n);
  for (std::size_t i = 0; i < n; ++i) len[i] = k.block_len(i);

  CutNormResult best;
  best.exact = true;
  best.method = "enumeration";
  std::vector<double> c(n, 0.0);  // column aggregates of the current subset
  std::uint32_t subset = 0;
  std::uint32_t best_subset = 0;
  const std::uint32_t total = 1u << n;
  // Gray-code walk: exactly one row flips per step.
  for (std::uint32_t g = 1; g < total; ++g) {
    const std::uint32_t gray = g ^ (g >> 1);
    const std::uint32_t flipped = gray ^ subset;
    const int i = std::countr_zero(flipped);
    const double sgn = (gray & flipped) ? 1.0 : -1.0;
    for (std::size_t j = 0; j < n; ++j) c[j] += sgn * k.at(i, j) * len[i];
    subset = gray;
    const double v = best_column_value(c, len, nullptr);
    if (v > best.value) {
      best.value = v;
      best_subset = subset;
    }
  }
  // Recover the witness for the best subset.
  std::fill(c.begin(), c.end(), 0.0);
  for (std::size_t i = 0; i < n; ++i)
    if (best_subset & (1u << i)) {
      best.row_blocks.push_back(static_cast<int>(i));
      for (std::size_t j = 0; j < n; ++j) c[j] += k.at(i, j) * len[i];
    }
  best_column_value(c, len, &best.col_blocks);
  return best;
}

namespace {

// Block index lookup for a refined partition against original cuts.
std::vector<std::size_t> block_map(const std::vector<double>& fine,
                                   const std::vector<double>& coarse) {
  std::vector<std::size_t> map(fine.size() - 1, 0);
  std::size_t k = 0;
  for (std::size_t c = 0; c + 1 < fine.size(); ++c) {
    while (k + 2 < coarse.size() && !(fine[c] < coarse[k + 1])) ++k;
    map[c] = k;
  }
  return map;
}

}  // namespace

StepKernel difference_kernel(const StepGraphon& w1, const StepGraphon& w2) {
  validate(w1);
  validate(w2);
  const std::vector<double> cuts = merge_cuts(w1.cuts, w2.cuts);
  const auto m1 = block_map(cuts, w1.cuts);
  const auto m2 = block_map(cuts, w2.cuts);
  StepKernel k;
  k.cuts = cuts;
  k.n = cuts.size() - 1;
  k.m.assign(k.n * k.n, 0.0);
  for (std::size_t i = 0; i < k.n; ++i)
    for (std::size_t j = 0; j < k.n; ++j)
      k.at(i, j) = w1.at(m1[i], m1[j]) - w2.at(m2[i], m2[j]);
  return k;
}

double l1_distance(const StepGraphon& w1, const StepGraphon& w2) {
  const StepKernel k = difference_kernel(w1, w2);
  double total = 0;
  for (std::size_t i = 0; i < k.n; ++i)
    for (std::size_t j = 0; j < k.n; ++j)
      total += std::abs(k.at(i, j)) * k.block_len(i) * k.block_len(j);
  return total;
}

StepGraphon from_graph(const WeightedGraph& g) {
  validate(g);
  StepGraphon w;
  w.n = g.n;
  w.cuts.resize(g.n + 1);
  for (std::size_t k = 0; k <= g.n; ++k)
    w.cuts[k] = static_cast<double>(k) / static_cast<double>(g.n);
  w.m = g.w;
  return w;
}

WeightedGraph induced_graph(const StepGraphon& w) {
  validate(w);
  WeightedGraph g;
  g.n = w.n;
  g.w.assign(w.n * w.n, 0.0);
  // Mirror the upper triangle: (M*l_i)*l_j and (M*l_j)*l_i can round
  // differently, and the graph must stay exactly symmetric.
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t j = i; j < w.n; ++j) {
      const double v = w.at(i, j) * w.block_len(i) * w.block_len(j);
      g.at(i, j) = v;
      g.at(j, i) = v;
    }
  return g;
}

WeightedGraph make_loopless(const WeightedGraph& g) {
  validate(g);
  WeightedGraph out = g;
  for (std::size_t i = 0; i < g.n; ++i) out.at(i, i) = 0.0;
  out.loopless = true;
  return out;
}

double StepGraphonOracle::rectangle_mass(double x0, double x1, double y0,
                                         double y1) const {
  const StepGraphon& w = graphon;
  double total = 0;
  for (std::size_t i = 0; i < w.n; ++i) {
    const double xl = std::max(x0, w.cuts[i]);
    const double xh = std::min(x1, w.cuts[i + 1]);
    if (xl >= xh) continue;
    for (std::size_t j = 0; j < w.n; ++j) {
      const double yl = std::max(y0, w.cuts[j]);
      const double yh = std::min(y1, w.cuts[j + 1]);
      if (yl >= yh) continue;
      total += w.at(i, j) * (xh - xl) * (yh - yl);
    }
  }
  return total;
}

StepGraphon conditional_step(const RectangleMassOracle& source, int level) {
  if (level < 0) throw input_error("conditional_step: negative level");
  if (level > kConditionalStepMaxLevel)
    throw resource_error("conditional_step: level exceeds matrix size cap");
  const std::size_t n = std::size_t{1} << level;
  const double cell = 1.0 / static_cast<double>(n);
  StepGraphon w;
  w.n = n;
  w.cuts.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) w.cuts[k] = static_cast<double>(k) * cell;
  w.m.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double mass =
          source.rectangle_mass(w.cuts[i], w.cuts[i + 1], w.cuts[j], w.cuts[j + 1]);
      double v = mass / (cell * cell);
      // Exact oracles keep v in [0,1]; clip float dust at the ends.
      if (v < 0.0 && v > -1e-12) v = 0.0;
      if (v > 1.0 && v < 1.0 + 1e-12) v = 1.0;
      if (v < 0.0 || v > 1.0)
        throw input_error("conditional_step: oracle mass outside cell bounds");
      w.at(i, j) = v;
      w.at(j, i) = v;
    }
  return w;
}

double ew_oracle(const RectangleMassOracle& source, const IntervalSet& a,
                 const IntervalSet& b) {
  double total = 0;
  for (const auto& [ax, bx] : a.parts)
    for (const auto& [ay, by] : b.parts) total += source.rectangle_mass(ax, bx, ay, by);
  return total;
}

}  // namespace limitcheeger
