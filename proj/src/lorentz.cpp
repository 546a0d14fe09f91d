#include "hypiso/lorentz.hpp"

#include "hypiso/error.hpp"

namespace hypiso {

LorentzForm::LorentzForm(std::size_t n) : n_(n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "Lorentz form needs n >= 2");
}

QMatrix LorentzForm::gram() const {
  QMatrix j(dim(), dim());
  j(0, 0) = 1;
  for (std::size_t i = 1; i < dim(); ++i) j(i, i) = -1;
  return j;
}

Rational LorentzForm::inner(std::span<const Rational> u, std::span<const Rational> v) const {
  if (u.size() != dim() || v.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "vector length does not match the form");
  Rational acc = u[0] * v[0];
  for (std::size_t i = 1; i < dim(); ++i) acc -= u[i] * v[i];
  return acc;
}

namespace {

// J M^T J, the inverse of any J-orthogonal M.
QMatrix j_transpose(const QMatrix& m) {
  QMatrix t = m.transpose();
  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t c = 0; c < t.cols(); ++c)
      if ((r == 0) != (c == 0)) t(r, c) = -t(r, c);
  return t;
}

}  // namespace

IsometryElement IsometryElement::inverse() const { return {j_transpose(matrix_), form_, orientation_}; }

IsometryElement operator*(const IsometryElement& a, const IsometryElement& b) {
  if (!(a.form_ == b.form_)) throw Error(ErrorCode::DimensionMismatch, "isometries act on different spaces");
  return {a.matrix_ * b.matrix_, a.form_, a.orientation_ * b.orientation_};
}

IsometryElement validate_isometry(const QMatrix& m, const LorentzForm& form) {
  if (!m.is_square() || m.rows() != form.dim())
    throw Error(ErrorCode::DimensionMismatch, "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                                  ", form needs " + std::to_string(form.dim()) + "x" +
                                                  std::to_string(form.dim()));
  if (!(j_transpose(m) * m == QMatrix::identity(form.dim())))
    throw Error(ErrorCode::NotOrthogonal, "M^T J M != J");
  if (sgn(m(0, 0)) <= 0) throw Error(ErrorCode::WrongComponent, "M swaps the two sheets of the hyperboloid");
  const Rational det = m.determinant();
  return IsometryElement(m, form, det > 0 ? 1 : -1);
}

IsometryElement validate_isometry(const QMatrix& m) {
  if (!m.is_square() || m.rows() < 3)
    throw Error(ErrorCode::DimensionMismatch, "isometry matrices are square of size n+1 >= 3");
  return validate_isometry(m, LorentzForm(m.rows() - 1));
}

Polynomial char_poly(const QMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = a * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    Rational t = (a * mk).trace();
    c[n - k] = -t / static_cast<unsigned long>(k);
  }
  return Polynomial(std::move(c));
}

Polynomial char_poly(const IsometryElement& t) { return char_poly(t.matrix()); }

Polynomial min_poly(const QMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "minimal polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  struct Reduced {
    std::vector<Rational> vec;
    std::size_t pivot;
    std::vector<Rational> combo;
  };
  std::vector<Reduced> basis;
  QMatrix power = QMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Rational> v = power.entries();
    std::vector<Rational> combo(k + 1);
    combo[k] = 1;
    for (const auto& b : basis) {
      if (sgn(v[b.pivot]) == 0) continue;
      Rational f = v[b.pivot] / b.vec[b.pivot];
      for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(b.vec[i]) != 0) v[i] -= f * b.vec[i];
      for (std::size_t i = 0; i < b.combo.size(); ++i) combo[i] -= f * b.combo[i];
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && sgn(v[pivot]) == 0) ++pivot;
    if (pivot == v.size()) return Polynomial(std::move(combo));
    basis.push_back({std::move(v), pivot, std::move(combo)});
    power = power * a;
  }
  throw Error(ErrorCode::InvalidArgument, "no dependency among the first n+1 powers");  // unreachable: Cayley-Hamilton
}

Polynomial min_poly(const IsometryElement& t) { return min_poly(t.matrix()); }

std::size_t kernel_rank(const IsometryElement& t, const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "kernel_rank needs a nonzero polynomial");
  return t.dim() - p.evaluate(t.matrix()).rank();
}

JordanChevalley jordan_chevalley(const IsometryElement& t) {
  const std::size_t dim = t.dim();
  const QMatrix id = QMatrix::identity(dim);
  const QMatrix nil_power = (t.matrix() - id).pow(static_cast<unsigned>(dim));
  const QMatrix v1 = nil_power.nullspace();
  const QMatrix u = nil_power.column_space();
  const QMatrix basis = hstack(v1, u);
  QMatrix select(dim, dim);
  for (std::size_t i = 0; i < v1.cols(); ++i) select(i, i) = 1;
  const QMatrix proj = basis * select * basis.inverse();
  const QMatrix complement = id - proj;
  QMatrix ts = proj + t.matrix() * complement;
  QMatrix tu = t.matrix() * proj + complement;
  return {validate_isometry(ts, t.form()), validate_isometry(tu, t.form())};
}

Rational power_trace(const IsometryElement& t, unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "power_trace needs k >= 1");
  return t.matrix().pow(k).trace();
}

QMatrix unit_translation_block() {
  // H -> A H A^T on real symmetric H = [[x0+x3, x1], [x1, x0-x3]], A = [[1,1],[0,1]],
  // in coordinates (x0, x1, x3).
  return QMatrix{{make_rational(3, 2), 1, make_rational(-1, 2)},
                 {1, 1, -1},
                 {make_rational(1, 2), 1, make_rational(1, 2)}};
}

}  // namespace hypiso
