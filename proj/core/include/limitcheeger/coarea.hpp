#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "limitcheeger/graphon.hpp"

namespace limitcheeger {

// Both sides of the three co-area identities. In rational mode the gaps
// are exactly zero; in double mode they sit at rounding level.
template <class S>
struct CoareaValuesT {
  S lhs_plus{}, rhs_plus{};
  S lhs_minus{}, rhs_minus{};
  S lhs_simple{}, rhs_simple{};
};

struct CoareaReport {
  double lhs_plus = 0, rhs_plus = 0;
  double lhs_minus = 0, rhs_minus = 0;
  double lhs_simple = 0, rhs_simple = 0;
  double max_abs_gap = 0;
};

// Superlevel set S_t = f^{-1}(t, inf) as a block union.
template <class S>
IntervalSetT<S> superlevel(const StepFunctionT<S>& f, const S& t) {
  std::vector<std::pair<S, S>> raw;
  for (std::size_t k = 0; k < f.values.size(); ++k)
    if (t < f.values[k]) raw.emplace_back(f.cuts[k], f.cuts[k + 1]);
  return normalize(std::move(raw));
}

namespace detail {

// Threshold decomposition over the distinct values of f; e_at(level) must
// return e(S_level^c, S_level). Positive thresholds integrate 2t dt
// against the plus superlevels, negative ones against the minus side.
template <class S, class EFn>
void rhs_threshold_sums(std::vector<S> values, EFn&& e_at, S* rhs_plus,
                        S* rhs_minus, S* rhs_simple) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  *rhs_plus = S(0);
  *rhs_minus = S(0);
  *rhs_simple = S(0);
  for (std::size_t k = 0; k + 1 < values.size(); ++k)
    *rhs_simple += (values[k + 1] - values[k]) * e_at(values[k]);

  std::vector<S> gamma = {S(0)};
  for (const S& v : values)
    if (S(0) < v) gamma.push_back(v);
  for (std::size_t k = 1; k < gamma.size(); ++k)
    *rhs_plus += (gamma[k] * gamma[k] - gamma[k - 1] * gamma[k - 1]) * e_at(gamma[k - 1]);

  std::vector<S> delta = {S(0)};
  for (auto it = values.rbegin(); it != values.rend(); ++it)
    if (*it < S(0)) delta.push_back(S(0) - *it);
  std::sort(delta.begin(), delta.end());
  for (std::size_t k = 1; k < delta.size(); ++k)
    *rhs_minus += (delta[k] * delta[k] - delta[k - 1] * delta[k - 1]) *
                  e_at(S(0) - delta[k]);
}

template <class S>
S positive_part(const S& v) {
  return S(0) < v ? v : S(0);
}
template <class S>
S negative_part(const S& v) {
  return v < S(0) ? S(0) - v : S(0);
}

}  // namespace detail

// Exact evaluation of both sides of the graphon co-area identities for a
// step function on W's partition (a common refinement is built first).
template <class S>
CoareaValuesT<S> coarea_graphon_values(const StepGraphonT<S>& w0,
                                       const StepFunctionT<S>& f0) {
  validate(w0);
  validate(f0);
  StepGraphonT<S> w = w0;
  StepFunctionT<S> f = f0;
  if (w.cuts != f.cuts) {
    const std::vector<S> fine = merge_cuts(w.cuts, f.cuts);
    f = refine_to(f, fine);
    StepGraphonT<S> rw;
    rw.cuts = fine;
    rw.n = fine.size() - 1;
    rw.m.assign(rw.n * rw.n, S(0));
    std::size_t k = 0;
    std::vector<std::size_t> map(rw.n, 0);
    for (std::size_t c = 0; c < rw.n; ++c) {
      while (k + 2 < w.cuts.size() && !(fine[c] < w.cuts[k + 1])) ++k;
      map[c] = k;
    }
    for (std::size_t i = 0; i < rw.n; ++i)
      for (std::size_t j = 0; j < rw.n; ++j) rw.at(i, j) = w.at(map[i], map[j]);
    w = std::move(rw);
  }

  CoareaValuesT<S> out;
  // LHS: each unordered block pair enters through its f-increasing
  // orientation; within-block pairs have df = 0.
  for (std::size_t i = 0; i < w.n; ++i)
    for (std::size_t j = i + 1; j < w.n; ++j) {
      if (f.values[i] == f.values[j]) continue;
      const bool up = f.values[i] < f.values[j];
      const S& flo = up ? f.values[i] : f.values[j];
      const S& fhi = up ? f.values[j] : f.values[i];
      const S wgt = w.at(i, j) * w.block_len(i) * w.block_len(j);
      out.lhs_simple += (fhi - flo) * wgt;
      const S plo = detail::positive_part(flo), phi = detail::positive_part(fhi);
      out.lhs_plus += (phi * phi - plo * plo) * wgt;
      const S mlo = detail::negative_part(flo), mhi = detail::negative_part(fhi);
      out.lhs_minus += (mlo * mlo - mhi * mhi) * wgt;
    }

  auto e_at = [&](const S& level) {
    const IntervalSetT<S> st = superlevel(f, level);
    return ew(w, complement(st), st);
  };
  detail::rhs_threshold_sums(f.values, e_at, &out.rhs_plus, &out.rhs_minus,
                             &out.rhs_simple);
  return out;
}

CoareaReport to_report(const CoareaValuesT<double>& v);

// Double-precision report with the maximum gap over the three identities.
CoareaReport coarea_graphon(const StepGraphon& w, const StepFunction& f);

}  // namespace limitcheeger
