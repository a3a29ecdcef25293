#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qhj/eigensolver.hpp"
#include "qhj/potentials.hpp"

namespace qhj {

/// How R behaves across levels of one model.
enum class CaseTag { Zero, NIndependent, NDependent };

std::string_view case_name(CaseTag tag) noexcept;

/// Tolerance below which |R| counts as zero and below which the spread of R
/// over levels counts as constant.
inline constexpr double kCaseTolerance = 1e-4;

struct ResidualReport {
  std::string family;
  std::string params;
  /// Level label: principal quantum number for hydrogen, node count otherwise.
  int n = 0;
  int nodes = 0;
  double E = 0.0;
  double I_classical = 0.0;
  std::optional<double> quantum_integral;
  std::optional<double> R_A;
  double R_B = 0.0;
  std::optional<double> R_closed;
  std::optional<CaseTag> case_tag;
};

/// Residual of one level (given as node count). E is the Numerov eigenvalue
/// unless supplied. With `with_fields` the QHJ fields are solved as well and
/// the route-A residual and quantization integral are filled in.
ResidualReport residual_report(const PotentialModel& model, int nodes,
                               std::optional<double> E = std::nullopt, bool with_fields = false,
                               const EigenOptions& options = {});

/// Closed-form R where one is known: 0 for harmonic and Morse, the
/// centrifugal expression for hydrogen.
std::optional<double> residual_closed_form(const PotentialModel& model);

/// Zero if every |R| < kCaseTolerance, NIndependent if max - min < kCaseTolerance,
/// NDependent otherwise.
CaseTag classify_residuals(std::span<const double> R);

struct CaseClassification {
  CaseTag tag = CaseTag::Zero;
  std::vector<ResidualReport> rows;
  double mean = 0.0;
  double spread = 0.0;
};

/// Route-B residuals for node counts first..last, tagged. Every row carries
/// the resulting tag.
CaseClassification classify_case(const PotentialModel& model, int first, int last,
                                 bool with_fields = false, const EigenOptions& options = {});

}  // namespace qhj
