#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hypiso/lorentz.hpp"
#include "hypiso/polyring.hpp"

namespace hypiso {

enum class Kind { Elliptic, Parabolic, Hyperbolic };

std::string_view to_string(Kind kind) noexcept;

struct IsometryType {
  Kind kind = Kind::Elliptic;
  bool inversion = false;  // m odd
  friend bool operator==(const IsometryType&, const IsometryType&) = default;
};

struct Classification {
  IsometryType type;
  unsigned k = 0;  // sum r_j + floor(m/2)
  unsigned l = 0;
  unsigned m = 0;
  ReducedSpectrum spectrum;
  int orientation = 1;
  Polynomial char_poly;
  Polynomial min_poly;
};

bool operator==(const Classification& a, const Classification& b);

/// Exact: sign of chi_o(1), then kernel ranks of (T-I) and (T-I)^2.
IsometryType detect_type(const IsometryElement& t);

/// Throws TaxonomyViolation when a structural invariant fails.
Classification classify(const IsometryElement& t);

/// (char_poly, min_poly)
std::pair<Polynomial, Polynomial> conjugacy_invariant(const IsometryElement& t);

/// Throws DimensionMismatch.
bool are_conjugate(const IsometryElement& a, const IsometryElement& b);

/// One block per exact factor of the halved reduced polynomial. Rational
/// roots y get their own block; the irrational roots sharing a squarefree
/// factor are grouped.
struct SpectralBlock {
  Polynomial factor;  // in y = x + 1/x
  unsigned multiplicity = 0;
  bool contains_boost = false;
  QMatrix basis;  // columns
};

struct SpectralDecomposition {
  QMatrix fixed_space;
  QMatrix neg_space;
  std::vector<SpectralBlock> rotation_planes;
  /// Same basis as the rotation_planes entry of a rational boost root.
  std::optional<QMatrix> boost_plane;
};

/// Bases are verified pairwise J-orthogonal and to span the whole space;
/// failure throws TaxonomyViolation.
SpectralDecomposition spectral_decomposition(const IsometryElement& t);

enum class TraceVerdict { Hyperbolic, Inconclusive };

struct TraceTestResult {
  TraceVerdict verdict = TraceVerdict::Inconclusive;
  unsigned power = 0;  // first u with trace T^u > n+1, 0 if none
  unsigned tried = 0;
};

inline constexpr unsigned kDefaultTraceCap = 64;

/// Tries u = 1, 2, ... With a boost lower bound a > 1 the range ends at
/// floor(ln(2n)/ln a) + 1, otherwise at `cap`.
TraceTestResult quick_trace_test(const IsometryElement& t, std::optional<Rational> boost_lower_bound = std::nullopt,
                                 unsigned cap = kDefaultTraceCap);

/// p_1 .. p_{k_max} from the coefficients of a monic characteristic polynomial.
std::vector<Rational> newton_power_sums(const Polynomial& char_poly, unsigned k_max);

/// Trace criteria for n = 2, 3. Throws UnsupportedDimension otherwise.
IsometryType low_dim_criterion(const IsometryElement& t);

}  // namespace hypiso
