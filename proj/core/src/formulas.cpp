#include "qhj/formulas.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qhj {

namespace {

constexpr double kPi = std::numbers::pi;

// Gamma(1/4) and Gamma(7/4), evaluated once.
const double kGammaQuarter = std::tgamma(0.25);
const double kGammaSevenQuarters = std::tgamma(1.75);

}  // namespace

double cot_squared_lambda(const PotentialModel& model) {
  const auto& p = model.as<CotSquaredParams>();
  const double hb = model.hbar();
  const double q = 8.0 * model.mass() * p.V0 * p.a * p.a / (kPi * kPi * hb * hb);
  return 0.25 * (std::sqrt(q + 1.0) - 1.0);
}

double quartic_wkb_constant(const PotentialModel& model) {
  const double a = model.as<QuarticParams>().a;
  return 4.0 * std::sqrt(kPi) * model.hbar() * kGammaSevenQuarters /
         (std::sqrt(2.0 * model.mass()) * std::pow(a, 0.25) * kGammaQuarter);
}

double hydrogen_R_closed(int l) {
  if (l < 0) throw std::invalid_argument("l must be >= 0");
  const double ll = static_cast<double>(l) * (l + 1);
  return kPi * (l + 0.5 - std::sqrt(ll));
}

FormulaTriple closed_form_energies(const PotentialModel& model, int n, std::optional<double> R) {
  if (n < 0) throw std::invalid_argument("node count must be >= 0");
  const double hb = model.hbar();
  const double m = model.mass();
  FormulaTriple out;
  out.indices.n = n;

  // Every family's rule depends on n only through the effective quantum
  // number q = n + 1/2 (+ R / (pi hbar) for the corrected form).
  auto level = [&](double q) -> double {
    switch (model.family()) {
      case Family::Harmonic:
        return hb * model.as<HarmonicParams>().omega * q;
      case Family::Morse: {
        const auto& p = model.as<MorseParams>();
        const double t = 1.0 - p.a * hb * q / std::sqrt(2.0 * m * p.V0);
        return -p.V0 * t * t;
      }
      case Family::CoulombCentrifugal: {
        const auto& p = model.as<CoulombParams>();
        const double ll = static_cast<double>(p.l) * (p.l + 1);
        const double d = q + std::sqrt(ll);
        return -m * p.e2 * p.e2 / (2.0 * hb * hb) / (d * d);
      }
      case Family::CotSquared: {
        const auto& p = model.as<CotSquaredParams>();
        const double unit = kPi * kPi * hb * hb / (2.0 * m * p.a * p.a);
        const double d = std::sqrt(p.V0 / unit) + q;
        return unit * d * d - p.V0;
      }
      case Family::Quartic:
        return std::pow(quartic_wkb_constant(model) * q, 4.0 / 3.0);
    }
    return 0.0;
  };

  const double q = n + 0.5;
  out.E_wkb = level(q);
  if (R) out.E_corrected = level(q + *R / (kPi * hb));

  switch (model.family()) {
    case Family::Harmonic:
    case Family::Morse:
      out.E_exact = out.E_wkb;
      break;
    case Family::CoulombCentrifugal: {
      const auto& p = model.as<CoulombParams>();
      const int principal = n + p.l + 1;
      out.indices.radial = n;
      out.indices.azimuthal = p.l;
      out.indices.principal = principal;
      out.E_exact = -m * p.e2 * p.e2 / (2.0 * hb * hb * principal * principal);
      break;
    }
    case Family::CotSquared: {
      const auto& p = model.as<CotSquaredParams>();
      const int np = n + 1;
      const double lambda = cot_squared_lambda(model);
      const double unit = kPi * kPi * hb * hb / (2.0 * m * p.a * p.a);
      out.indices.exact_index = np;
      out.E_exact = (np * np + 4.0 * np * lambda - 2.0 * lambda) * unit;
      break;
    }
    case Family::Quartic:
      break;
  }
  return out;
}

double classical_action_closed(const PotentialModel& model, double E) {
  const double m = model.mass();
  const double hb = model.hbar();
  // Validates that E lies in the bound range.
  (void)turning_points(model, E);
  switch (model.family()) {
    case Family::Harmonic:
      return kPi * E / model.as<HarmonicParams>().omega;
    case Family::Morse: {
      const auto& p = model.as<MorseParams>();
      return kPi / p.a * std::sqrt(2.0 * m) * (std::sqrt(p.V0) - std::sqrt(-E));
    }
    case Family::CoulombCentrifugal: {
      const auto& p = model.as<CoulombParams>();
      const double ll = static_cast<double>(p.l) * (p.l + 1);
      return kPi * (p.e2 * std::sqrt(m / (-2.0 * E)) - hb * std::sqrt(ll));
    }
    case Family::CotSquared: {
      const auto& p = model.as<CotSquaredParams>();
      return p.a * (std::sqrt(2.0 * m * (E + p.V0)) - std::sqrt(2.0 * m * p.V0));
    }
    case Family::Quartic:
      // I = kPi E^{3/4} / C, the inverse of E = (C (n + 1/2))^{4/3} at I = (n + 1/2) kPi hbar.
      return kPi * hb * std::pow(E, 0.75) / quartic_wkb_constant(model);
  }
  return 0.0;
}

}  // namespace qhj
