#pragma once

// Reference values computed outside this code base and frozen here: actions by
// 30-digit adaptive quadrature (mpmath), quartic levels by diagonalizing
// p^2/2 + x^4 in a 200-function harmonic-oscillator basis.

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

// Quartic oscillator, a = 1: exact levels.
inline constexpr double kQuarticLevels[] = {0.667986259155777, 2.3936440164819657, 4.696795386863647,
                                            7.335729995227036, 10.244308455438773, 13.379336552601659};
// Quartic oscillator, a = 1: roots of I(E) = (n + 1/2) pi.
inline constexpr double kQuarticWkb[] = {0.546267325078094410, 2.36356144460057710, 4.67051993169480733,
                                         7.31480260190083817, 10.2265364336110192};
// I(E_exact) - (n + 1/2) pi for the quartic levels above.
inline constexpr double kQuarticResidual[] = {0.2557959023, 0.0449120223858, 0.033115503489,
                                              0.0235850364123, 0.0184220363307};
inline constexpr double kQuarticActionAt0667986 = 1.82659169760346670;

// Morse V0 = 32, a = 1 at E = -20.
inline constexpr double kMorseActionAtMinus20 = 5.2635646971261434388;
// pi (4 - sqrt 2): cot^2 (V0 = 1, a = pi) at E = 7 and Coulomb l = 1 at E = -1/32.
inline constexpr double kPiFourMinusRootTwo = 8.12348767620080670683;
// Coulomb l = 0 at E = -1/2.
inline constexpr double kCoulombS = 3.14159265358979321850;
// Coulomb l = 1, n_r = 0 semiclassical level.
inline constexpr double kHydrogenWkbL1 = -0.136454928592147747134;

// pi (l + 1/2 - sqrt(l (l + 1))) for l = 0..5.
inline constexpr double kCentrifugalResidual[] = {1.570796327, 0.2695060422, 0.158682653,
                                                  0.1127781022, 0.08753747907, 0.07154796611};

}  // namespace oracle
