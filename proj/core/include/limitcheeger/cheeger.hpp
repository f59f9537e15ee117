#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "limitcheeger/graphon.hpp"

namespace limitcheeger {

// Fractional partition: rho in [0,1]^n with eta = 1 - rho implicit.
struct FractionalPartition {
  std::vector<double> rho;
};

struct CheegerReport {
  double value = 0.0;
  std::vector<double> rho;                 // fractional witness
  std::optional<IntervalSet> witness_set;  // graphon-side realization
  std::string method;  // exact-enumeration | dinkelbach | grid-oracle |
                       // spectral-sweep | half-split | disconnected
  bool certified = false;
};

struct CheegerOptions {
  std::uint64_t seed = 0;
  int starts = 64;
};

inline constexpr std::size_t kIntegralExactMaxVertices = 24;

// Connectivity of the positive-weight support, diagonal ignored.
bool graph_connected(const WeightedGraph& g);

// e_W(A,A^c) / min(vol(A), vol(A^c)) for a step graphon cut.
double ratio_h_graphon(const StepGraphon& w, const IntervalSet& a);

// e_W(A,A^c) / (vol(A) * vol(A^c)).
double ratio_g_graphon(const StepGraphon& w, const IntervalSet& a);

// sum_{u,v} rho_u (1-rho_v) w_uv / min(|rho|, |eta|) with the volume-
// weighted norms |rho| = sum rho_u vol(u).
double ratio_fractional(const WeightedGraph& g, const std::vector<double>& rho);

// Product-denominator variant: numerator / (|rho| * |eta|).
double ratio_fractional_symmetric(const WeightedGraph& g,
                                  const std::vector<double>& rho);

// Exact minimum cut ratio over proper vertex subsets (n <= 24), spectral
// sweep heuristic beyond. Disconnected graphs report 0 with a witness.
CheegerReport integral_cheeger(const WeightedGraph& g);

// Fractional Cheeger constant: minimum of ratio_fractional over the box.
// Uses the integral optimum and the half split as incumbents, descends on
// the equipartition slab for loopless graphs, Dinkelbach elsewhere, and
// certifies against a grid oracle for n <= 4.
CheegerReport fractional_cheeger(const WeightedGraph& g, const CheegerOptions& opt = {});

// Same machinery with the product denominator.
CheegerReport symmetric_cheeger_graph(const WeightedGraph& g,
                                      const CheegerOptions& opt = {});

// Cheeger constant of a step graphon = fractional Cheeger of its induced
// weighted graph; the witness is reported both as rho and as a left-packed
// interval realization.
CheegerReport graphon_cheeger(const StepGraphon& w, const CheegerOptions& opt = {});

CheegerReport symmetric_cheeger(const StepGraphon& w, const CheegerOptions& opt = {});

// (1 - 2*gamma/(eps^2 n)) * (1 - eps); may be negative (vacuous).
double ratio_lower_bound(int n, double gamma, double eps);

// (1 - 2 exp(-n eps^2 / 8)) * (1 - eps), for regular loopless graphs.
double azuma_lower_bound(int n, double eps);

struct BestBound {
  double value = 0.0;
  double eps = 0.0;
};

// Best value over the eps grid {0.01, ..., 0.99}.
BestBound best_ratio_lower_bound(int n, double gamma);
BestBound best_azuma_lower_bound(int n);

// Ratios h_W(S^{-k}(A0)) for the doubling map, k = 0..nmax; requires
// dyadic cuts so every preimage aligns exactly with the block partition.
std::vector<std::pair<int, double>> doubling_demo(const StepGraphon& w,
                                                  const IntervalSet& a0, int nmax);

}  // namespace limitcheeger
