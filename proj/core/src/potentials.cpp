#include "qhj/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qhj {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be finite and > 0");
  }
}

void check_units(const Units& units) {
  require_positive(units.hbar, "hbar");
  require_positive(units.mass, "mass");
}

// Relative slack used when a turning point is evaluated and round-off puts
// E - V(x) marginally below zero.
constexpr double kMomentumSlack = 1e-11;

}  // namespace

PotentialModel::PotentialModel(Family family, PotentialParams params, Units units)
    : family_(family), params_(params), units_(units) {
  check_units(units_);
}

PotentialModel PotentialModel::harmonic(double omega, Units units) {
  require_positive(omega, "omega");
  return PotentialModel(Family::Harmonic, HarmonicParams{omega}, units);
}

PotentialModel PotentialModel::morse(double V0, double a, Units units) {
  require_positive(V0, "V0");
  require_positive(a, "a");
  return PotentialModel(Family::Morse, MorseParams{V0, a}, units);
}

PotentialModel PotentialModel::coulomb(double e2, int l, Units units) {
  require_positive(e2, "e2");
  if (l < 0) throw std::invalid_argument("l must be a non-negative integer");
  return PotentialModel(Family::CoulombCentrifugal, CoulombParams{e2, l}, units);
}

PotentialModel PotentialModel::cot_squared(double V0, double a, Units units) {
  require_positive(V0, "V0");
  require_positive(a, "a");
  return PotentialModel(Family::CotSquared, CotSquaredParams{V0, a}, units);
}

PotentialModel PotentialModel::quartic(double a, Units units) {
  require_positive(a, "a");
  return PotentialModel(Family::Quartic, QuarticParams{a}, units);
}

Domain PotentialModel::domain() const noexcept {
  switch (family_) {
    case Family::CoulombCentrifugal:
      return {0.0, std::numeric_limits<double>::infinity()};
    case Family::CotSquared:
      return {0.0, as<CotSquaredParams>().a};
    default:
      return {};
  }
}

double PotentialModel::operator()(double x) const {
  const double m = mass();
  const double hb = hbar();
  switch (family_) {
    case Family::Harmonic: {
      const double w = as<HarmonicParams>().omega;
      return 0.5 * m * w * w * x * x;
    }
    case Family::Morse: {
      const auto& p = as<MorseParams>();
      const double e = std::exp(-p.a * x);
      return p.V0 * (e * e - 2.0 * e);
    }
    case Family::CoulombCentrifugal: {
      if (!(x > 0.0)) throw DomainError("Coulomb potential evaluated at r <= 0");
      const auto& p = as<CoulombParams>();
      const double ll = static_cast<double>(p.l) * (p.l + 1);
      return -p.e2 / x + ll * hb * hb / (2.0 * m * x * x);
    }
    case Family::CotSquared: {
      const auto& p = as<CotSquaredParams>();
      if (!(x > 0.0 && x < p.a)) throw DomainError("cot^2 potential evaluated outside (0, a)");
      const double c = 1.0 / std::tan(kPi * x / p.a);
      return p.V0 * c * c;
    }
    case Family::Quartic: {
      const double x2 = x * x;
      return x2 * x2 / as<QuarticParams>().a;
    }
  }
  return 0.0;
}

double PotentialModel::derivative(double x) const {
  const double m = mass();
  const double hb = hbar();
  switch (family_) {
    case Family::Harmonic: {
      const double w = as<HarmonicParams>().omega;
      return m * w * w * x;
    }
    case Family::Morse: {
      const auto& p = as<MorseParams>();
      const double e = std::exp(-p.a * x);
      return p.V0 * p.a * (-2.0 * e * e + 2.0 * e);
    }
    case Family::CoulombCentrifugal: {
      if (!(x > 0.0)) throw DomainError("Coulomb potential evaluated at r <= 0");
      const auto& p = as<CoulombParams>();
      const double ll = static_cast<double>(p.l) * (p.l + 1);
      return p.e2 / (x * x) - ll * hb * hb / (m * x * x * x);
    }
    case Family::CotSquared: {
      const auto& p = as<CotSquaredParams>();
      if (!(x > 0.0 && x < p.a)) throw DomainError("cot^2 potential evaluated outside (0, a)");
      const double y = kPi * x / p.a;
      const double c = 1.0 / std::tan(y);
      const double s = std::sin(y);
      return -2.0 * p.V0 * c / (s * s) * kPi / p.a;
    }
    case Family::Quartic:
      return 4.0 * x * x * x / as<QuarticParams>().a;
  }
  return 0.0;
}

double PotentialModel::minimum_location() const noexcept {
  switch (family_) {
    case Family::CoulombCentrifugal: {
      const auto& p = as<CoulombParams>();
      const double ll = static_cast<double>(p.l) * (p.l + 1);
      return ll * hbar() * hbar() / (mass() * p.e2);
    }
    case Family::CotSquared:
      return 0.5 * as<CotSquaredParams>().a;
    default:
      return 0.0;
  }
}

double PotentialModel::minimum_value() const noexcept {
  switch (family_) {
    case Family::Morse:
      return -as<MorseParams>().V0;
    case Family::CoulombCentrifugal: {
      const auto& p = as<CoulombParams>();
      if (p.l == 0) return -std::numeric_limits<double>::infinity();
      const double ll = static_cast<double>(p.l) * (p.l + 1);
      return -mass() * p.e2 * p.e2 / (2.0 * hbar() * hbar() * ll);
    }
    default:
      return 0.0;
  }
}

double PotentialModel::continuum_threshold() const noexcept {
  switch (family_) {
    case Family::Morse:
    case Family::CoulombCentrifugal:
      return 0.0;
    default:
      return std::numeric_limits<double>::infinity();
  }
}

std::string_view family_name(Family family) noexcept {
  switch (family) {
    case Family::Harmonic:
      return "harmonic";
    case Family::Morse:
      return "morse";
    case Family::CoulombCentrifugal:
      return "hydrogen";
    case Family::CotSquared:
      return "cot2";
    case Family::Quartic:
      return "quartic";
  }
  return "unknown";
}

std::string PotentialModel::name() const { return std::string(family_name(family_)); }

std::string PotentialModel::describe() const {
  std::ostringstream os;
  os.precision(12);
  switch (family_) {
    case Family::Harmonic:
      os << "omega=" << as<HarmonicParams>().omega;
      break;
    case Family::Morse:
      os << "V0=" << as<MorseParams>().V0 << ";a=" << as<MorseParams>().a;
      break;
    case Family::CoulombCentrifugal:
      os << "e2=" << as<CoulombParams>().e2 << ";l=" << as<CoulombParams>().l;
      break;
    case Family::CotSquared:
      os << "V0=" << as<CotSquaredParams>().V0 << ";a=" << as<CotSquaredParams>().a;
      break;
    case Family::Quartic:
      os << "a=" << as<QuarticParams>().a;
      break;
  }
  if (hbar() != 1.0) os << ";hbar=" << hbar();
  if (mass() != 1.0) os << ";mass=" << mass();
  return os.str();
}

double PotentialModel::wave_number_squared(double E, double x) const {
  return 2.0 * mass() * (E - (*this)(x)) / (hbar() * hbar());
}

double evaluate(const PotentialModel& model, double x) { return model(x); }

double classical_momentum(const PotentialModel& model, double E, double x) {
  const double V = model(x);
  const double diff = E - V;
  if (diff < 0.0) {
    const double scale = std::max({std::abs(E), std::abs(V), 1.0});
    if (diff < -kMomentumSlack * scale) {
      std::ostringstream os;
      os << "classically forbidden point x=" << x << " (E=" << E << " < V=" << V << ")";
      throw ForbiddenRegionError(os.str());
    }
    return 0.0;
  }
  return std::sqrt(2.0 * model.mass() * diff);
}

TurningPair turning_points(const PotentialModel& model, double E) {
  auto none = [&](const char* why) {
    std::ostringstream os;
    os << model.name() << ": no bound classical region at E=" << E << " (" << why << ")";
    return NoTurningPointsError(os.str());
  };
  const double m = model.mass();
  const double hb = model.hbar();
  switch (model.family()) {
    case Family::Harmonic: {
      if (!(E > 0.0)) throw none("E must be > 0");
      const double w = model.as<HarmonicParams>().omega;
      const double xt = std::sqrt(2.0 * E / (m * w * w));
      return {-xt, xt, false};
    }
    case Family::Quartic: {
      if (!(E > 0.0)) throw none("E must be > 0");
      const double xt = std::pow(model.as<QuarticParams>().a * E, 0.25);
      return {-xt, xt, false};
    }
    case Family::Morse: {
      const auto& p = model.as<MorseParams>();
      if (!(E > -p.V0 && E < 0.0)) throw none("need -V0 < E < 0");
      const double s = std::sqrt(1.0 + E / p.V0);
      return {-std::log1p(s) / p.a, -std::log1p(-s) / p.a, false};
    }
    case Family::CotSquared: {
      const auto& p = model.as<CotSquaredParams>();
      if (!(E > 0.0)) throw none("E must be > 0");
      const double x1 = p.a / kPi * std::atan(std::sqrt(p.V0 / E));
      return {x1, p.a - x1, false};
    }
    case Family::CoulombCentrifugal: {
      const auto& p = model.as<CoulombParams>();
      if (!(E < 0.0)) throw none("E must be < 0");
      if (p.l == 0) return {0.0, -p.e2 / E, true};
      // E r^2 + e2 r - c = 0 with c = l(l+1) hbar^2 / 2m.
      const double c = static_cast<double>(p.l) * (p.l + 1) * hb * hb / (2.0 * m);
      const double disc = p.e2 * p.e2 + 4.0 * E * c;
      if (!(disc > 0.0)) throw none("energy below the centrifugal well minimum");
      const double sq = std::sqrt(disc);
      // Product of the roots is -c/E > 0; use the stable form for the small one.
      const double r2 = (-p.e2 - sq) / (2.0 * E);
      const double r1 = (-c / E) / r2;
      return {r1, r2, false};
    }
  }
  throw none("unknown family");
}

PotentialModel make_model(std::string_view family, const std::map<std::string, double>& params) {
  auto get = [&](const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  auto allow_only = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : params) {
      (void)v;
      bool ok = (k == "hbar" || k == "mass");
      for (const char* allowed : keys) ok = ok || (k == allowed);
      if (!ok) {
        throw std::invalid_argument("parameter '" + k + "' not valid for family " +
                                    std::string(family));
      }
    }
  };
  Units units{get("hbar", 1.0), get("mass", 1.0)};
  if (family == "harmonic") {
    allow_only({"omega"});
    return PotentialModel::harmonic(get("omega", 1.0), units);
  }
  if (family == "morse") {
    allow_only({"V0", "a"});
    return PotentialModel::morse(get("V0", 32.0), get("a", 1.0), units);
  }
  if (family == "hydrogen") {
    allow_only({"e2", "l"});
    const double l = get("l", 0.0);
    if (l < 0.0 || l != std::floor(l)) throw std::invalid_argument("l must be a non-negative integer");
    return PotentialModel::coulomb(get("e2", 1.0), static_cast<int>(l), units);
  }
  if (family == "cot2") {
    allow_only({"V0", "a"});
    return PotentialModel::cot_squared(get("V0", 1.0), get("a", kPi), units);
  }
  if (family == "quartic") {
    allow_only({"a"});
    return PotentialModel::quartic(get("a", 1.0), units);
  }
  throw std::invalid_argument("unknown potential family '" + std::string(family) + "'");
}

}  // namespace qhj
