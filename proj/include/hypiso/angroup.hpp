#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hypiso/rational.hpp"

namespace hypiso {

/// g_a o f_r : (x, x_n) -> (r x + a, r x_n), identified with the point (a, r).
class ANElement {
 public:
  /// Throws InvalidArgument unless r > 0 and a is non-empty.
  ANElement(std::vector<Rational> a, Rational r);

  static ANElement identity(std::size_t dim);
  static ANElement translation(std::vector<Rational> a);
  static ANElement dilation(Rational r, std::size_t dim);

  const std::vector<Rational>& a() const noexcept { return a_; }
  const Rational& r() const noexcept { return r_; }
  /// Length of the translation part (n - 1).
  std::size_t dim() const noexcept { return a_.size(); }
  bool is_identity() const;

  friend bool operator==(const ANElement&, const ANElement&) = default;

 private:
  std::vector<Rational> a_;
  Rational r_;
};

/// e1 after e2: (a1 + r1 a2, r1 r2). Throws DimensionMismatch.
ANElement compose(const ANElement& e1, const ANElement& e2);
ANElement inverse(const ANElement& e);

struct ConjugacyRepresentative {
  ANElement representative;
  /// x0 = -(r-1)^{-1} a when r != 1; then g_{x0}^{-1} e g_{x0} = f_r.
  std::optional<std::vector<Rational>> witness;
};

ConjugacyRepresentative conjugacy_representative(const ANElement& e);

enum class ANZClass { Identity, DilationClass, TranslationClass };

std::string_view to_string(ANZClass z) noexcept;

ANZClass zclass_of(const ANElement& e);

}  // namespace hypiso
