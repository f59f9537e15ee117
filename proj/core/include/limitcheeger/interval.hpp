#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "limitcheeger/errors.hpp"
#include "limitcheeger/rational.hpp"

namespace limitcheeger {

// Finite union of half-open subintervals [lo, hi) of [0,1], kept sorted,
// disjoint and with touching parts merged. This is the representation of a
// measurable vertex set everywhere in the library. Endpoints may be double
// or Rational; with rational endpoints every operation is exact.
template <class S>
struct IntervalSetT {
  std::vector<std::pair<S, S>> parts;

  bool empty() const { return parts.empty(); }
  std::size_t size() const { return parts.size(); }
};

using IntervalSet = IntervalSetT<double>;
using IntervalSetQ = IntervalSetT<Rational>;

namespace detail {
inline double mod1(double t) {
  double r = t - std::floor(t);
  if (r >= 1.0) r -= 1.0;  // guards t like -1e-18 rounding to 1.0
  return r;
}
inline Rational mod1(const Rational& t) { return t - Rational(t.floor()); }
}  // namespace detail

// Sorts, validates against [0,1], drops degenerate parts and merges
// overlapping or touching ones.
template <class S>
IntervalSetT<S> normalize(std::vector<std::pair<S, S>> raw) {
  const S zero(0), one(1);
  for (const auto& [lo, hi] : raw) {
    if (lo < zero || hi > one)
      throw input_error("interval endpoint outside [0,1]");
    if (hi < lo) throw input_error("interval with hi < lo");
  }
  std::erase_if(raw, [](const auto& p) { return !(p.first < p.second); });
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  IntervalSetT<S> out;
  for (const auto& p : raw) {
    if (!out.parts.empty() && !(out.parts.back().second < p.first)) {
      if (out.parts.back().second < p.second) out.parts.back().second = p.second;
    } else {
      out.parts.push_back(p);
    }
  }
  return out;
}

template <class S>
IntervalSetT<S> empty_set() {
  return {};
}

template <class S>
IntervalSetT<S> full_set() {
  IntervalSetT<S> out;
  out.parts.emplace_back(S(0), S(1));
  return out;
}

template <class S>
S measure(const IntervalSetT<S>& a) {
  S total(0);
  for (const auto& [lo, hi] : a.parts) total += hi - lo;
  return total;
}

template <class S>
bool contains(const IntervalSetT<S>& a, const S& x) {
  for (const auto& [lo, hi] : a.parts)
    if (!(x < lo) && x < hi) return true;
  return false;
}

template <class S>
IntervalSetT<S> unite(const IntervalSetT<S>& a, const IntervalSetT<S>& b) {
  std::vector<std::pair<S, S>> raw = a.parts;
  raw.insert(raw.end(), b.parts.begin(), b.parts.end());
  return normalize(std::move(raw));
}

template <class S>
IntervalSetT<S> intersect(const IntervalSetT<S>& a, const IntervalSetT<S>& b) {
  IntervalSetT<S> out;
  std::size_t i = 0, j = 0;
  while (i < a.parts.size() && j < b.parts.size()) {
    const S lo = std::max(a.parts[i].first, b.parts[j].first);
    const S hi = std::min(a.parts[i].second, b.parts[j].second);
    if (lo < hi) out.parts.emplace_back(lo, hi);
    if (a.parts[i].second < b.parts[j].second)
      ++i;
    else
      ++j;
  }
  return out;
}

// Complement within [0,1].
template <class S>
IntervalSetT<S> complement(const IntervalSetT<S>& a) {
  IntervalSetT<S> out;
  S cursor(0);
  for (const auto& [lo, hi] : a.parts) {
    if (cursor < lo) out.parts.emplace_back(cursor, lo);
    cursor = hi;
  }
  if (cursor < S(1)) out.parts.emplace_back(cursor, S(1));
  return out;
}

// A + t (mod 1); wrapping parts split in two. Rotation preserves measure.
template <class S>
IntervalSetT<S> translate_mod1(const IntervalSetT<S>& a, const S& t) {
  const S s = detail::mod1(t);
  const S one(1);
  std::vector<std::pair<S, S>> raw;
  for (const auto& [lo, hi] : a.parts) {
    const S nlo = lo + s, nhi = hi + s;
    if (!(one < nhi))
      raw.emplace_back(nlo, nhi);
    else if (!(nlo < one))
      raw.emplace_back(nlo - one, nhi - one);
    else {
      raw.emplace_back(nlo, one);
      raw.emplace_back(S(0), nhi - one);
    }
  }
  return normalize(std::move(raw));
}

// Preimage S^{-n}(A) of the doubling map S(x) = 2x (mod 1); measure preserving.
template <class S>
IntervalSetT<S> doubling_preimage(const IntervalSetT<S>& a, int n) {
  if (n < 0) throw input_error("doubling_preimage: negative iterate");
  IntervalSetT<S> cur = a;
  const S half = S(1) / S(2);
  for (int step = 0; step < n; ++step) {
    std::vector<std::pair<S, S>> raw;
    raw.reserve(cur.parts.size() * 2);
    for (const auto& [lo, hi] : cur.parts) {
      raw.emplace_back(lo * half, hi * half);
      raw.emplace_back(lo * half + half, hi * half + half);
    }
    cur = normalize(std::move(raw));
  }
  return cur;
}

// Piecewise-constant function on [0,1]: value[k] on [cuts[k], cuts[k+1]).
template <class S>
struct StepFunctionT {
  std::vector<S> cuts;    // 0 = c0 < c1 < ... < cm = 1
  std::vector<S> values;  // size m

  std::size_t blocks() const { return values.size(); }

  S eval(const S& x) const {
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
      if (!(x < cuts[k]) && (x < cuts[k + 1] || k + 2 == cuts.size()))
        return values[k];
    return values.back();
  }
};

using StepFunction = StepFunctionT<double>;
using StepFunctionQ = StepFunctionT<Rational>;

template <class S>
void validate(const StepFunctionT<S>& f) {
  if (f.cuts.size() < 2 || f.values.size() + 1 != f.cuts.size())
    throw input_error("step function: cuts/values size mismatch");
  if (!(f.cuts.front() == S(0)) || !(f.cuts.back() == S(1)))
    throw input_error("step function: cuts must start at 0 and end at 1");
  for (std::size_t k = 0; k + 1 < f.cuts.size(); ++k)
    if (!(f.cuts[k] < f.cuts[k + 1]))
      throw input_error("step function: cuts must be strictly increasing");
}

template <class S>
StepFunctionT<S> constant_function(const S& c) {
  StepFunctionT<S> f;
  f.cuts = {S(0), S(1)};
  f.values = {c};
  return f;
}

// Merged cut list of two partitions.
template <class S>
std::vector<S> merge_cuts(const std::vector<S>& a, const std::vector<S>& b) {
  std::vector<S> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    S next = (i == a.size()) ? b[j] : (j == b.size()) ? a[i]
                             : std::min(a[i], b[j]);
    if (out.empty() || out.back() < next) out.push_back(next);
    while (i < a.size() && a[i] == next) ++i;
    while (j < b.size() && b[j] == next) ++j;
  }
  return out;
}

// Re-expresses f on a finer partition; `fine` must refine f.cuts.
template <class S>
StepFunctionT<S> refine_to(const StepFunctionT<S>& f, const std::vector<S>& fine) {
  StepFunctionT<S> out;
  out.cuts = fine;
  out.values.reserve(fine.size() - 1);
  std::size_t k = 0;
  for (std::size_t c = 0; c + 1 < fine.size(); ++c) {
    while (k + 1 < f.values.size() && !(fine[c] < f.cuts[k + 1])) ++k;
    out.values.push_back(f.values[k]);
  }
  return out;
}

}  // namespace limitcheeger
