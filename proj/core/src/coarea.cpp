#include "limitcheeger/coarea.hpp"

namespace limitcheeger {

CoareaReport to_report(const CoareaValuesT<double>& v) {
  CoareaReport r;
  r.lhs_plus = v.lhs_plus;
  r.rhs_plus = v.rhs_plus;
  r.lhs_minus = v.lhs_minus;
  r.rhs_minus = v.rhs_minus;
  r.lhs_simple = v.lhs_simple;
  r.rhs_simple = v.rhs_simple;
  r.max_abs_gap = std::max({std::abs(v.lhs_plus - v.rhs_plus),
                            std::abs(v.lhs_minus - v.rhs_minus),
                            std::abs(v.lhs_simple - v.rhs_simple)});
  return r;
}

CoareaReport coarea_graphon(const StepGraphon& w, const StepFunction& f) {
  return to_report(coarea_graphon_values(w, f));
}

}  // namespace limitcheeger
