#pragma once

#include <cstdint>
#include <utility>

#include "hypiso/polynomial.hpp"
#include "hypiso/qmatrix.hpp"

namespace hypiso {

/// The form J = diag(1, -1, ..., -1) of signature (1, n) on Q^{n+1}.
class LorentzForm {
 public:
  /// Throws InvalidArgument for n < 2.
  explicit LorentzForm(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return n_ + 1; }
  QMatrix gram() const;
  /// <u, v> = u0 v0 - sum_{i>0} ui vi
  Rational inner(std::span<const Rational> u, std::span<const Rational> v) const;

  friend bool operator==(const LorentzForm&, const LorentzForm&) = default;

 private:
  std::size_t n_;
};

/// A validated element of I(Q): preserves J exactly and maps the upper sheet
/// of {Q = 1} to itself. Only constructible through validate_isometry.
class IsometryElement {
 public:
  const QMatrix& matrix() const noexcept { return matrix_; }
  const LorentzForm& form() const noexcept { return form_; }
  std::size_t n() const noexcept { return form_.n(); }
  std::size_t dim() const noexcept { return form_.dim(); }
  /// det(matrix), always +1 or -1.
  int orientation() const noexcept { return orientation_; }
  bool component_preserving() const noexcept { return true; }

  /// J-inverse: J * M^T * J.
  IsometryElement inverse() const;

  friend IsometryElement operator*(const IsometryElement& a, const IsometryElement& b);
  friend bool operator==(const IsometryElement& a, const IsometryElement& b) { return a.matrix_ == b.matrix_; }

 private:
  IsometryElement(QMatrix m, LorentzForm form, int orientation)
      : matrix_(std::move(m)), form_(form), orientation_(orientation) {}

  friend IsometryElement validate_isometry(const QMatrix& m, const LorentzForm& form);

  QMatrix matrix_;
  LorentzForm form_;
  int orientation_;
};

/// Throws DimensionMismatch, NotOrthogonal or WrongComponent.
IsometryElement validate_isometry(const QMatrix& m, const LorentzForm& form);
IsometryElement validate_isometry(const QMatrix& m);

/// Faddeev-LeVerrier; monic of degree n+1.
Polynomial char_poly(const IsometryElement& t);
Polynomial char_poly(const QMatrix& m);

/// First linear dependency among I, T, T^2, ... (monic).
Polynomial min_poly(const IsometryElement& t);
Polynomial min_poly(const QMatrix& m);

/// dim ker p(T).
std::size_t kernel_rank(const IsometryElement& t, const Polynomial& p);

struct JordanChevalley {
  IsometryElement semisimple;
  IsometryElement unipotent;
};

/// T = T_s T_u with T_s the identity on ker (T-I)^{n+1} and T elsewhere.
JordanChevalley jordan_chevalley(const IsometryElement& t);

/// trace(T^k) by repeated squaring; k >= 1.
Rational power_trace(const IsometryElement& t, unsigned k);

enum class Recipe {
  SemisimpleCayley,
  WithReflection,
  ParabolicBlock,
  /// Rational boost, rotation and +-1 blocks conjugated by a Cayley element.
  BlockSum,
};

/// (I - S)(I + S)^{-1} for a J-skew S. Throws CayleySingular when I + S is
/// singular and WrongComponent when the image swaps the sheets.
IsometryElement cayley_transform(const QMatrix& s, const LorentzForm& form);

/// Deterministic for a given (seed, n, recipe); resamples internally on
/// CayleySingular / wrong-component draws.
IsometryElement random_isometry(std::uint64_t seed, std::size_t n, Recipe recipe);

/// The 3x3 unipotent image of [[1,1],[0,1]] in SO_0(2,1).
QMatrix unit_translation_block();

}  // namespace hypiso
