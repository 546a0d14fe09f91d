#include "hypiso/moebius.hpp"

#include <array>

#include "hypiso/error.hpp"

namespace hypiso {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (sgn(n) == 0) throw Error(ErrorCode::SingularMatrix, "division by zero");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re);
  if (sgn(z.re) == 0) return to_string(z.im) + "i";
  return to_string(z.re) + (sgn(z.im) > 0 ? "+" : "") + to_string(z.im) + "i";
}

Moebius2::Moebius2(GaussianRational a_, GaussianRational b_, GaussianRational c_, GaussianRational d_,
                   Orientation orientation_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), orientation(orientation_) {
  if (det().is_zero()) throw Error(ErrorCode::SingularMatrix, "ad - bc = 0");
}

Moebius2 Moebius2::conj() const { return {a.conj(), b.conj(), c.conj(), d.conj(), orientation}; }

Moebius2 matrix_product(const Moebius2& x, const Moebius2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::string_view to_string(H3Class tag) noexcept {
  switch (tag) {
    case H3Class::LoxodromicOneRotatoryHyperbolic: return "LoxodromicOneRotatoryHyperbolic";
    case H3Class::Stretch: return "Stretch";
    case H3Class::StretchHalfTurn: return "StretchHalfTurn";
    case H3Class::OneRotatoryElliptic: return "OneRotatoryElliptic";
    case H3Class::HalfTurn: return "HalfTurn";
    case H3Class::Translation: return "Translation";
    case H3Class::Identity: return "Identity";
    case H3Class::OneRotatoryEllipticInversion: return "OneRotatoryEllipticInversion";
    case H3Class::ZeroRotatoryHyperbolicInversion: return "ZeroRotatoryHyperbolicInversion";
    case H3Class::ZeroRotatoryParabolicInversion: return "ZeroRotatoryParabolicInversion";
    case H3Class::InversionInCircle: return "InversionInCircle";
    case H3Class::Antipodal: return "Antipodal";
  }
  return "Unknown";
}

GaussianRational c_invariant(const Moebius2& m) {
  const GaussianRational t = m.trace();
  return t * t / m.det();
}

Moebius2 square_matrix(const Moebius2& m) { return matrix_product(m, m.conj()); }

namespace {

Rational real_c(const GaussianRational& c, const char* what) {
  if (!c.is_real()) throw Error(ErrorCode::TaxonomyViolation, std::string(what) + " is not real");
  return c.re;
}

// Orientation-reversing branch shared by H^3 and H^2, up to the B = lambda I case.
std::optional<H3Class> reversing_by_square(const Moebius2& m) {
  const Moebius2 b = square_matrix(m);
  const Rational cb = real_c(c_invariant(b), "c(A conj(A))");
  if (sgn(cb) < 0) throw Error(ErrorCode::TaxonomyViolation, "c(A conj(A)) is negative");
  // c(B) = 0: f^2 is a half-turn, so f rotates by pi/2 about its axis.
  if (sgn(cb) == 0 || cb < 4) return H3Class::OneRotatoryEllipticInversion;
  if (cb > 4) return H3Class::ZeroRotatoryHyperbolicInversion;
  if (!b.is_scalar()) return H3Class::ZeroRotatoryParabolicInversion;
  return std::nullopt;
}

}  // namespace

H3Class classify_h3(const Moebius2& m) {
  if (m.orientation == Orientation::Preserving) {
    const GaussianRational c = c_invariant(m);
    if (!c.is_real()) return H3Class::LoxodromicOneRotatoryHyperbolic;
    if (sgn(c.re) == 0) return H3Class::HalfTurn;
    if (sgn(c.re) < 0) return H3Class::StretchHalfTurn;
    if (c.re > 4) return H3Class::Stretch;
    if (c.re < 4) return H3Class::OneRotatoryElliptic;
    return m.is_scalar() ? H3Class::Identity : H3Class::Translation;
  }
  if (auto tag = reversing_by_square(m)) return *tag;

  GaussianRational u;
  if (!m.c.is_zero()) u = m.c.conj();
  else if (!m.b.is_zero()) u = m.b.conj();
  else return H3Class::InversionInCircle;
  const GaussianRational ua = u * m.a;
  if (!(u * m.b).is_real() || !(u * m.c).is_real() || !(ua.conj() == -(u * m.d)))
    throw Error(ErrorCode::TaxonomyViolation, "normal form [[a, b], [c, -conj(a)]] with b, c real not reached");
  const Rational det = real_c(u * u * m.det(), "det(uA)");
  return sgn(det) < 0 ? H3Class::InversionInCircle : H3Class::Antipodal;
}

H2Model h2_model(const Moebius2& m) {
  const GaussianRational det = m.det();
  const bool preserving = m.orientation == Orientation::Preserving;
  if (m.is_real() && (preserving ? sgn(det.re) > 0 : sgn(det.re) < 0)) return H2Model::UpperHalfPlane;
  if (m.d == m.a.conj() && m.b == m.c.conj() && sgn(det.re) > 0) return H2Model::Disk;
  throw Error(ErrorCode::NotAnH2Element,
              "expected real entries with det " + std::string(preserving ? "> 0" : "< 0") +
                  " or the shape [[a, conj(c)], [c, conj(a)]] with det > 0");
}

H3Class classify_h2(const Moebius2& m) {
  h2_model(m);
  if (m.orientation == Orientation::Preserving) {
    const Rational c = real_c(c_invariant(m), "c(A)");
    if (sgn(c) < 0) throw Error(ErrorCode::TaxonomyViolation, "c(A) is negative for an H^2 element");
    if (sgn(c) == 0) return H3Class::HalfTurn;
    if (c < 4) return H3Class::OneRotatoryElliptic;
    if (c > 4) return H3Class::Stretch;
    return m.is_scalar() ? H3Class::Identity : H3Class::Translation;
  }
  if (square_matrix(m).is_scalar()) return H3Class::InversionInCircle;
  if (auto tag = reversing_by_square(m)) return *tag;
  return H3Class::InversionInCircle;
}

namespace {

using Cmat = std::array<GaussianRational, 4>;  // row-major 2x2

Cmat mul(const Cmat& x, const Cmat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Cmat hermitian(int axis) {
  const GaussianRational i(0, 1);
  switch (axis) {
    case 0: return {1, 0, 0, 1};
    case 1: return {0, 1, 1, 0};
    case 2: return {0, i, -i, 0};
    default: return {1, 0, 0, -1};
  }
}

QMatrix lift_matrix(const Moebius2& m) {
  auto scale = exact_sqrt(m.det().norm());
  if (!scale) throw Error(ErrorCode::NonRationalNormalization, "|det A| = sqrt(" + to_string(m.det().norm()) + ") is irrational");
  const Cmat a{m.a, m.b, m.c, m.d};
  const Cmat a_star{m.a.conj(), m.c.conj(), m.b.conj(), m.d.conj()};
  QMatrix out(4, 4);
  for (int j = 0; j < 4; ++j) {
    Cmat h = hermitian(j);
    if (m.orientation == Orientation::Reversing)
      for (auto& z : h) z = z.conj();
    const Cmat k = mul(mul(a, h), a_star);
    out(0, j) = (k[0].re + k[3].re) / 2 / *scale;
    out(1, j) = k[1].re / *scale;
    out(2, j) = k[1].im / *scale;
    out(3, j) = (k[0].re - k[3].re) / 2 / *scale;
  }
  return out;
}

}  // namespace

IsometryElement spin_lift(const Moebius2& m) { return validate_isometry(lift_matrix(m), LorentzForm(3)); }

IsometryElement spin_lift_h2(const Moebius2& m) {
  const std::array<std::size_t, 3> idx = h2_model(m) == H2Model::UpperHalfPlane ? std::array<std::size_t, 3>{0, 1, 3}
                                                                                  : std::array<std::size_t, 3>{0, 1, 2};
  const std::size_t other = h2_model(m) == H2Model::UpperHalfPlane ? 2 : 3;
  const QMatrix full = lift_matrix(m);
  QMatrix out(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) out(r, c) = full(idx[r], idx[c]);
  for (std::size_t c = 0; c < 3; ++c)
    if (sgn(full(other, idx[c])) != 0) throw Error(ErrorCode::TaxonomyViolation, "lift does not preserve the H^2 slice");
  return validate_isometry(out, LorentzForm(2));
}

LinearSignature linear_signature(H3Class tag) {
  switch (tag) {
    case H3Class::Identity: return {Kind::Elliptic, false, 0, 0};
    case H3Class::LoxodromicOneRotatoryHyperbolic: return {Kind::Hyperbolic, false, 1, 0};
    case H3Class::Stretch: return {Kind::Hyperbolic, false, 0, 0};
    case H3Class::StretchHalfTurn: return {Kind::Hyperbolic, false, 1, 2};
    case H3Class::OneRotatoryElliptic: return {Kind::Elliptic, false, 1, 0};
    case H3Class::HalfTurn: return {Kind::Elliptic, false, 1, 2};
    case H3Class::Translation: return {Kind::Parabolic, false, 0, 0};
    case H3Class::OneRotatoryEllipticInversion: return {Kind::Elliptic, true, 1, 1};
    case H3Class::ZeroRotatoryHyperbolicInversion: return {Kind::Hyperbolic, true, 0, 1};
    case H3Class::ZeroRotatoryParabolicInversion: return {Kind::Parabolic, true, 0, 1};
    case H3Class::InversionInCircle: return {Kind::Elliptic, true, 0, 1};
    case H3Class::Antipodal: return {Kind::Elliptic, true, 1, 3};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown tag");
}

bool matches(H3Class tag, const Classification& c) {
  return linear_signature(tag) == LinearSignature{c.type.kind, c.type.inversion, c.k, c.m};
}

bool cross_check(const Moebius2& m) { return matches(classify_h3(m), classify(spin_lift(m))); }

bool cross_check_h2(const Moebius2& m) { return matches(classify_h2(m), classify(spin_lift_h2(m))); }

}  // namespace hypiso
