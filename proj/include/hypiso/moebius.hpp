#pragma once

#include <string>
#include <string_view>

#include "hypiso/classifier.hpp"
#include "hypiso/lorentz.hpp"
#include "hypiso/rational.hpp"

namespace hypiso {

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long r) : re(r), im(0) {}

  GaussianRational conj() const { return {re, -im}; }
  /// |z|^2
  Rational norm() const { return re * re + im * im; }
  bool is_real() const { return sgn(im) == 0; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws SingularMatrix on division by zero.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }
};

std::string to_string(const GaussianRational& z);

enum class Orientation { Preserving, Reversing };

/// z -> (a z + b)/(c z + d), or with conj(z) in place of z when reversing.
struct Moebius2 {
  GaussianRational a, b, c, d;
  Orientation orientation = Orientation::Preserving;

  /// Throws SingularMatrix when ad - bc = 0.
  Moebius2(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d,
           Orientation orientation = Orientation::Preserving);

  GaussianRational det() const { return a * d - b * c; }
  GaussianRational trace() const { return a + d; }
  bool is_real() const { return a.is_real() && b.is_real() && c.is_real() && d.is_real(); }
  bool is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }
  /// Entrywise conjugate, same orientation flag.
  Moebius2 conj() const;

  friend bool operator==(const Moebius2&, const Moebius2&) = default;
};

/// Matrix product; the orientation of the result is not tracked (Preserving).
Moebius2 matrix_product(const Moebius2& x, const Moebius2& y);

enum class H3Class {
  LoxodromicOneRotatoryHyperbolic,
  Stretch,
  StretchHalfTurn,
  OneRotatoryElliptic,
  HalfTurn,
  Translation,
  Identity,
  OneRotatoryEllipticInversion,
  ZeroRotatoryHyperbolicInversion,
  ZeroRotatoryParabolicInversion,
  InversionInCircle,
  Antipodal,
};

std::string_view to_string(H3Class tag) noexcept;

/// (trace)^2 / det
GaussianRational c_invariant(const Moebius2& m);

/// A * conj(A) as an orientation-preserving matrix.
Moebius2 square_matrix(const Moebius2& m);

H3Class classify_h3(const Moebius2& m);

enum class H2Model { UpperHalfPlane, Disk };

/// Real matrices with det > 0 (preserving) or det < 0 (reversing) are read
/// in the upper half-plane; [[a, conj(c)], [c, conj(a)]] with det > 0 in the
/// disk. Throws NotAnH2Element otherwise.
H2Model h2_model(const Moebius2& m);
H3Class classify_h2(const Moebius2& m);

/// The 4x4 action on Hermitian H = [[x0+x3, x1+i x2], [x1-i x2, x0-x3]] by
/// H -> A H A^* (or A conj(H) A^*) / |det A|. Throws NonRationalNormalization.
IsometryElement spin_lift(const Moebius2& m);

/// Restriction of spin_lift to the invariant Lorentzian 3-space of an H^2
/// element: coordinates (x0, x1, x3) for the half-plane, (x0, x1, x2) for
/// the disk.
IsometryElement spin_lift_h2(const Moebius2& m);

struct LinearSignature {
  Kind kind;
  bool inversion;
  unsigned k;
  unsigned m;
  friend bool operator==(const LinearSignature&, const LinearSignature&) = default;
};

/// Expected (kind, inversion, k, m) of the lift of a map with this tag.
LinearSignature linear_signature(H3Class tag);
bool matches(H3Class tag, const Classification& c);

bool cross_check(const Moebius2& m);
bool cross_check_h2(const Moebius2& m);

}  // namespace hypiso
