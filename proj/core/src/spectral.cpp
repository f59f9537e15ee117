#include "limitcheeger/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "limitcheeger/linalg.hpp"

namespace limitcheeger {

const char* const kLambdaConventionNote =
    "lambda_W = min(lambda_G, 1): with the edge inner product taken over the "
    "oriented half square, Delta_W acts as the normalized graph Laplacian on "
    "block-constant functions and as the identity on their orthogonal "
    "complement, so the graph value is capped at 1.";

namespace {

// Maps each fine block to its containing coarse block.
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

StepGraphon refine_graphon(const StepGraphon& w, const std::vector<double>& fine) {
  const auto map = block_map(fine, w.cuts);
  StepGraphon out;
  out.cuts = fine;
  out.n = fine.size() - 1;
  out.m.assign(out.n * out.n, 0.0);
  for (std::size_t i = 0; i < out.n; ++i)
    for (std::size_t j = 0; j < out.n; ++j) out.at(i, j) = w.at(map[i], map[j]);
  return out;
}

}  // namespace

std::pair<StepGraphon, StepFunction> align(const StepGraphon& w, const StepFunction& f) {
  validate(w);
  validate(f);
  if (w.cuts == f.cuts) return {w, f};
  const std::vector<double> fine = merge_cuts(w.cuts, f.cuts);
  return {refine_graphon(w, fine), refine_to(f, fine)};
}

StepFunction apply_T(const StepGraphon& w0, const StepFunction& f0) {
  auto [w, f] = align(w0, f0);
  StepFunction out;
  out.cuts = w.cuts;
  out.values.assign(w.n, 0.0);
  for (std::size_t i = 0; i < w.n; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < w.n; ++j) s += w.at(i, j) * w.block_len(j) * f.values[j];
    out.values[i] = s;
  }
  return out;
}

StepFunction apply_laplacian(const StepGraphon& w0, const StepFunction& f0) {
  auto [w, f] = align(w0, f0);
  const StepFunction d = degree_function(w);
  for (std::size_t i = 0; i < w.n; ++i)
    if (!(d.values[i] > 0.0))
      throw degenerate_error("degenerate degree: block " + std::to_string(i) +
                             " has d_W = 0");
  const StepFunction tf = apply_T(w, f);
  StepFunction out;
  out.cuts = w.cuts;
  out.values.resize(w.n);
  for (std::size_t i = 0; i < w.n; ++i)
    out.values[i] = f.values[i] - tf.values[i] / d.values[i];
  return out;
}

EdgeStepFunction apply_d(const StepGraphon& w0, const StepFunction& f0) {
  auto [w, f] = align(w0, f0);
  EdgeStepFunction phi;
  phi.cuts = w.cuts;
  phi.n = w.n;
  phi.phi.assign(w.n * (w.n - 1) / 2, 0.0);
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t j = i + 1; j < w.n; ++j) phi.at(i, j) = f.values[j] - f.values[i];
  return phi;
}

StepFunction apply_dstar(const StepGraphon& w, const EdgeStepFunction& phi) {
  validate(w);
  if (phi.cuts != w.cuts)
    throw input_error("apply_dstar: edge function partition does not match graphon");
  const StepFunction d = degree_function(w);
  StepFunction out;
  out.cuts = w.cuts;
  out.values.assign(w.n, 0.0);
  for (std::size_t i = 0; i < w.n; ++i) {
    if (!(d.values[i] > 0.0)) continue;  // d* is set to 0 where d_W = 0
    double s = 0;
    for (std::size_t j = 0; j < i; ++j)
      s += phi.at(j, i) * w.at(i, j) * w.block_len(j);
    for (std::size_t j = i + 1; j < w.n; ++j)
      s -= phi.at(i, j) * w.at(i, j) * w.block_len(j);
    out.values[i] = s / d.values[i];
  }
  return out;
}

double vertex_inner(const StepGraphon& w, const StepFunction& f, const StepFunction& g) {
  if (f.cuts != w.cuts || g.cuts != w.cuts)
    throw input_error("vertex_inner: partitions do not match");
  const StepFunction d = degree_function(w);
  double s = 0;
  for (std::size_t i = 0; i < w.n; ++i)
    s += f.values[i] * g.values[i] * d.values[i] * w.block_len(i);
  return s;
}

double edge_inner(const StepGraphon& w, const EdgeStepFunction& phi,
                  const EdgeStepFunction& psi) {
  if (phi.cuts != w.cuts || psi.cuts != w.cuts)
    throw input_error("edge_inner: partitions do not match");
  double s = 0;
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t j = i + 1; j < w.n; ++j)
      s += phi.at(i, j) * psi.at(i, j) * w.at(i, j) * w.block_len(i) * w.block_len(j);
  return s;
}

InnerProducts inner_products(const StepGraphon& w, const StepFunction& f,
                             const StepFunction& g, const EdgeStepFunction& phi,
                             const EdgeStepFunction& psi) {
  return {vertex_inner(w, f, g), edge_inner(w, phi, psi)};
}

StepFunction project_mean_zero(const StepGraphon& w0, const StepFunction& f0) {
  auto [w, f] = align(w0, f0);
  const StepFunction one = refine_to(constant_function(1.0), w.cuts);
  const double total = vertex_inner(w, one, one);  // vol(I)
  if (!(total > 0.0)) throw degenerate_error("project_mean_zero: vol(I) = 0");
  const double mean = vertex_inner(w, f, one) / total;
  StepFunction out = f;
  for (double& v : out.values) v -= mean;
  return out;
}

double rayleigh(const StepGraphon& w0, const StepFunction& f0) {
  auto [w, f] = align(w0, f0);
  const StepFunction pf = project_mean_zero(w, f);
  const double nv = vertex_inner(w, pf, pf);
  if (!(nv > 1e-300))
    throw input_error("rayleigh: constant input (Pf = 0)");
  const EdgeStepFunction dpf = apply_d(w, pf);
  return edge_inner(w, dpf, dpf) / nv;
}

double lambda_graph(const WeightedGraph& g) {
  validate(g);
  if (g.n < 2) throw input_error("lambda_graph: need at least two vertices");
  if (!graph_connected(g))
    throw input_error(
        "lambda_graph: graph disconnected (zero eigenvalue has multiplicity > 1)");
  std::vector<double> vols(g.n);
  for (std::size_t u = 0; u < g.n; ++u) {
    vols[u] = g.vol(u);
    if (!(vols[u] > 0.0))
      throw degenerate_error("lambda_graph: vertex " + std::to_string(u) +
                             " has zero volume");
  }
  std::vector<double> lap(g.n * g.n, 0.0);
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j) {
      const double d = (i == j) ? 1.0 : 0.0;
      lap[i * g.n + j] = d - g.at(i, j) / std::sqrt(vols[i] * vols[j]);
    }
  const SymmetricEigen eig = eigen_symmetric(std::move(lap), g.n, false);
  return eig.values[1];
}

double lambda_graphon(const StepGraphon& w) {
  validate(w);
  if (!is_connected(w)) throw input_error("lambda_graphon: graphon disconnected");
  if (w.n == 1) return 1.0;  // only the complement eigenvalue remains
  return std::min(lambda_graph(induced_graph(w)), 1.0);
}

SpectralReport verify_sandwich(const StepGraphon& w, const CheegerOptions& opt) {
  SpectralReport rep;
  rep.lambda = lambda_graphon(w);
  const CheegerReport hrep = graphon_cheeger(w, opt);
  const CheegerReport grep = symmetric_cheeger(w, opt);
  rep.h = hrep.value;
  rep.g = grep.value;
  rep.h_certified = hrep.certified;
  constexpr double tol = 1e-9;
  rep.buser_slack = 2.0 * rep.h - rep.lambda;
  rep.buser_ok = rep.lambda <= 2.0 * rep.h + tol;
  rep.buser_sym_slack = rep.g - rep.lambda;
  rep.buser_sym_ok = rep.lambda <= rep.g + tol;
  rep.cheeger_slack = rep.lambda - rep.h * rep.h / 8.0;
  rep.cheeger_ok = rep.h * rep.h / 8.0 <= rep.lambda + tol;
  rep.convention_note = kLambdaConventionNote;
  return rep;
}

}  // namespace limitcheeger
