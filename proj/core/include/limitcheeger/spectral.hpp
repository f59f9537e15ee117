#pragma once

#include <string>
#include <utility>

#include "limitcheeger/cheeger.hpp"
#include "limitcheeger/graphon.hpp"

namespace limitcheeger {

// Function on the oriented edge set of a step graphon: one value per
// ordered block pair (i,j), i < j, for the region block_i x block_j inside
// {y > x}. Diagonal blocks carry 0; d of a step function lands here, so
// Delta = d*d is unaffected by the restriction.
struct EdgeStepFunction {
  std::vector<double> cuts;
  std::size_t n = 0;
  std::vector<double> phi;  // size n*(n-1)/2, pairs in row order

  static std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }
  double at(std::size_t i, std::size_t j) const { return phi[pair_index(i, j, n)]; }
  double& at(std::size_t i, std::size_t j) { return phi[pair_index(i, j, n)]; }
};

struct SpectralReport {
  double lambda = 0.0;
  double h = 0.0;
  double g = 0.0;
  bool buser_ok = false;      // lambda <= 2h
  bool buser_sym_ok = false;  // lambda <= g
  bool cheeger_ok = false;    // h^2/8 <= lambda
  double buser_slack = 0.0;
  double buser_sym_slack = 0.0;
  double cheeger_slack = 0.0;
  bool h_certified = false;
  std::string convention_note;
};

// Convention note attached to every lambda report for graphons: under the
// half-square edge inner product the spectrum of Delta_W is the induced
// graph spectrum together with 1, so lambda_W = min(lambda_G, 1).
extern const char* const kLambdaConventionNote;

// Refines f onto W's partition (common refinement); returns the refined
// pair. Throws if either partition is invalid.
std::pair<StepGraphon, StepFunction> align(const StepGraphon& w, const StepFunction& f);

// (T_W f)(x) = int W(x,y) f(y) dy.
StepFunction apply_T(const StepGraphon& w, const StepFunction& f);

// Delta f = f - T_W f / d_W; errors on blocks of zero degree.
StepFunction apply_laplacian(const StepGraphon& w, const StepFunction& f);

// (df)(x,y) = f(y) - f(x) on the orientation y > x; requires f already on
// W's partition.
EdgeStepFunction apply_d(const StepGraphon& w, const StepFunction& f);

// Adjoint of d; zero on blocks of zero degree.
StepFunction apply_dstar(const StepGraphon& w, const EdgeStepFunction& phi);

struct InnerProducts {
  double vertex = 0.0;  // <f,g>_v
  double edge = 0.0;    // <phi,psi>_e
};

InnerProducts inner_products(const StepGraphon& w, const StepFunction& f,
                             const StepFunction& g, const EdgeStepFunction& phi,
                             const EdgeStepFunction& psi);

double vertex_inner(const StepGraphon& w, const StepFunction& f, const StepFunction& g);
double edge_inner(const StepGraphon& w, const EdgeStepFunction& phi,
                  const EdgeStepFunction& psi);

// Orthogonal projection onto the mean-zero subspace of L^2(I, nu).
StepFunction project_mean_zero(const StepGraphon& w, const StepFunction& f);

// ||d(Pf)||_e^2 / ||Pf||_v^2; errors when Pf = 0.
double rayleigh(const StepGraphon& w, const StepFunction& f);

// Second-smallest eigenvalue of the normalized Laplacian
// I - D^{-1/2} w D^{-1/2}; errors on disconnected input.
double lambda_graph(const WeightedGraph& g);

// Bottom of the spectrum of Delta_W over mean-zero functions:
// min(lambda_graph(induced graph), 1).
double lambda_graphon(const StepGraphon& w);

// Checks h^2/8 <= lambda <= 2h and lambda <= g at tolerance 1e-9.
SpectralReport verify_sandwich(const StepGraphon& w, const CheegerOptions& opt = {});

}  // namespace limitcheeger
