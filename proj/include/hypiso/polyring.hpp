#pragma once

#include <optional>
#include <vector>

#include "hypiso/polynomial.hpp"

namespace hypiso {

/// Largest e with (x - c)^e | p, c = +1 or -1.
unsigned root_multiplicity_at(const Polynomial& p, int c);

struct ReducedFactorization {
  unsigned l = 0;  // multiplicity of the root 1
  unsigned m = 0;  // multiplicity of the root -1
  Polynomial chi_o;
  unsigned k_prime = 0;  // deg(chi_o) / 2
};

/// p = (x-1)^l (x+1)^m chi_o with chi_o(+-1) != 0. Throws OddReducedDegree.
ReducedFactorization reduce(const Polynomial& p);

/// q of degree d with p(x) = x^d q(x + 1/x). Throws NotSelfReciprocal.
Polynomial halve_self_reciprocal(const Polynomial& p);
/// Inverse of halve_self_reciprocal: x^d q(x + 1/x).
Polynomial unhalve(const Polynomial& q);

/// Closed rational interval; lo == hi marks an exact root.
struct RootInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

struct IsolatedRoot {
  RootInterval interval;
  unsigned multiplicity = 0;
  /// The monic squarefree factor of the input that vanishes at this root.
  Polynomial factor;
  friend bool operator==(const IsolatedRoot&, const IsolatedRoot&) = default;
};

/// Width every non-exact interval is refined below: 2^-40.
Rational isolation_width();

/// Real roots of q, increasing, with exact multiplicities and pairwise
/// disjoint intervals certified by Sturm sequences.
std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& q);

/// Number of distinct real roots of a squarefree p in the open interval
/// (a, b); neither endpoint may be a root.
int sturm_count(const Polynomial& squarefree, const Rational& a, const Rational& b);

/// Bisect a single-root interval of a squarefree factor until its width is
/// below `width` (or the root is hit exactly).
RootInterval refine_root(const Polynomial& squarefree, RootInterval interval, const Rational& width);

/// Split an isolating interval at `point` (not a root) and keep the half
/// holding the root.
RootInterval separate_from(const Polynomial& squarefree, RootInterval interval, const Rational& point);

struct RotationAngle {
  double theta = 0.0;  // radians in (0, pi)
  RootInterval cos_interval;  // isolates a_j = cos(theta)
  unsigned multiplicity = 0;  // r_j
  Polynomial factor;  // exact squarefree factor of the halved polynomial (in y = x + 1/x)
};

struct BoostRoot {
  double r = 0.0;
  RootInterval interval;  // rational bounds on r > 1
  RootInterval y_interval;  // isolates y = r + 1/r > 2
  Polynomial factor;
};

struct ReducedSpectrum {
  std::optional<BoostRoot> boost;
  std::vector<RotationAngle> angles;  // strictly increasing theta
  Polynomial halved;  // q(y) with chi_o(x) = x^{k'} q(x + 1/x)
};

/// Spectra are compared on exact data only (intervals, factors,
/// multiplicities); floats are presentation.
bool operator==(const ReducedSpectrum& a, const ReducedSpectrum& b);

/// Throws MalformedSpectrum when a root y of the halved polynomial is <= -2,
/// equals 2, or exceeds 2 with multiplicity > 1 (or more than once).
ReducedSpectrum spectrum_from_reduced(const Polynomial& chi_o);

}  // namespace hypiso
