#include "qhj/residual.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qhj/action.hpp"
#include "qhj/formulas.hpp"
#include "qhj/qhje.hpp"

namespace qhj {

std::string_view case_name(CaseTag tag) noexcept {
  switch (tag) {
    case CaseTag::Zero:
      return "zero";
    case CaseTag::NIndependent:
      return "n_independent";
    case CaseTag::NDependent:
      return "n_dependent";
  }
  return "unknown";
}

std::optional<double> residual_closed_form(const PotentialModel& model) {
  switch (model.family()) {
    case Family::Harmonic:
    case Family::Morse:
      return 0.0;
    case Family::CoulombCentrifugal:
      return hydrogen_R_closed(model.as<CoulombParams>().l) * model.hbar();
    default:
      return std::nullopt;
  }
}

ResidualReport residual_report(const PotentialModel& model, int nodes, std::optional<double> E,
                               bool with_fields, const EigenOptions& options) {
  ResidualReport r;
  r.family = model.name();
  r.params = model.describe();
  r.nodes = nodes;
  r.n = nodes;
  if (model.family() == Family::CoulombCentrifugal) r.n = nodes + model.as<CoulombParams>().l + 1;
  r.E = E ? *E : eigenvalue(model, nodes, options);
  r.I_classical = classical_action(model, r.E);
  r.R_B = r.I_classical - maslov_action(model, nodes);
  r.R_closed = residual_closed_form(model);
  if (with_fields) {
    const QhjFields fields = qhj_fields(model, r.E);
    r.quantum_integral = quantum_action_integral(fields);
    r.R_A = residual_route_a(fields, model).R;
  }
  return r;
}

CaseTag classify_residuals(std::span<const double> R) {
  if (R.empty()) throw std::invalid_argument("classify_residuals: no residuals");
  const bool all_zero = std::all_of(R.begin(), R.end(), [](double v) { return std::abs(v) < kCaseTolerance; });
  if (all_zero) return CaseTag::Zero;
  const auto [lo, hi] = std::minmax_element(R.begin(), R.end());
  return *hi - *lo < kCaseTolerance ? CaseTag::NIndependent : CaseTag::NDependent;
}

CaseClassification classify_case(const PotentialModel& model, int first, int last, bool with_fields,
                                 const EigenOptions& options) {
  if (first < 0 || last < first) throw std::invalid_argument("classify_case: empty or negative level range");
  CaseClassification out;
  std::vector<double> R;
  for (int n = first; n <= last; ++n) {
    out.rows.push_back(residual_report(model, n, std::nullopt, with_fields, options));
    R.push_back(out.rows.back().R_B);
  }
  out.tag = classify_residuals(R);
  out.mean = std::accumulate(R.begin(), R.end(), 0.0) / static_cast<double>(R.size());
  const auto [lo, hi] = std::minmax_element(R.begin(), R.end());
  out.spread = *hi - *lo;
  for (auto& row : out.rows) row.case_tag = out.tag;
  return out;
}

}  // namespace qhj
