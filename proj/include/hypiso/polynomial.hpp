#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hypiso/qmatrix.hpp"
#include "hypiso/rational.hpp"

namespace hypiso {

/// Dense univariate polynomial over Q, coefficients lowest degree first.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// x - root
  static Polynomial linear_root(const Rational& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coefficient(std::size_t i) const;
  const Rational& leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  /// Horner evaluation at a square matrix.
  QMatrix evaluate(const QMatrix& m) const;
  Polynomial pow(unsigned e) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest degree first, e.g. "x^2 - 10/3*x + 1".
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& p);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Yun's squarefree decomposition: p = lc * prod f_i^{m_i} with the f_i monic,
/// squarefree, pairwise coprime and of positive degree; multiplicities
/// strictly increasing.
std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& p);
Polynomial squarefree_part(const Polynomial& p);

/// Scale to integer coefficients with content 1 and positive leading
/// coefficient; returns the integer coefficients, lowest degree first.
std::vector<Integer> primitive_integer_coefficients(const Polynomial& p);

}  // namespace hypiso
