#include "hypiso/angroup.hpp"

#include <algorithm>

#include "hypiso/error.hpp"

namespace hypiso {

ANElement::ANElement(std::vector<Rational> a, Rational r) : a_(std::move(a)), r_(std::move(r)) {
  if (a_.empty()) throw Error(ErrorCode::InvalidArgument, "AN element needs n - 1 >= 1 translation coordinates");
  if (sgn(r_) <= 0) throw Error(ErrorCode::InvalidArgument, "dilation factor r must be positive");
}

ANElement ANElement::identity(std::size_t dim) { return {std::vector<Rational>(dim), 1}; }

ANElement ANElement::translation(std::vector<Rational> a) { return {std::move(a), 1}; }

ANElement ANElement::dilation(Rational r, std::size_t dim) { return {std::vector<Rational>(dim), std::move(r)}; }

bool ANElement::is_identity() const {
  return r_ == 1 && std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

ANElement compose(const ANElement& e1, const ANElement& e2) {
  if (e1.dim() != e2.dim()) throw Error(ErrorCode::DimensionMismatch, "AN elements of different dimension");
  std::vector<Rational> a(e1.dim());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = e1.a()[i] + e1.r() * e2.a()[i];
  return {std::move(a), e1.r() * e2.r()};
}

ANElement inverse(const ANElement& e) {
  std::vector<Rational> a(e.dim());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = -e.a()[i] / e.r();
  return {std::move(a), 1 / e.r()};
}

ConjugacyRepresentative conjugacy_representative(const ANElement& e) {
  if (e.r() != 1) {
    std::vector<Rational> x0(e.dim());
    const Rational s = -1 / (e.r() - 1);
    for (std::size_t i = 0; i < x0.size(); ++i) x0[i] = s * e.a()[i];
    const ANElement g = ANElement::translation(x0);
    ANElement rep = ANElement::dilation(e.r(), e.dim());
    if (!(compose(inverse(g), compose(e, g)) == rep))
      throw Error(ErrorCode::InvalidArgument, "conjugation witness check failed");
    return {std::move(rep), std::move(x0)};
  }
  if (e.is_identity()) return {e, std::nullopt};
  std::size_t best = 0;
  for (std::size_t i = 1; i < e.dim(); ++i)
    if (abs(e.a()[i]) > abs(e.a()[best])) best = i;
  const Rational scale = 1 / Rational(abs(e.a()[best]));
  std::vector<Rational> a(e.dim());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = e.a()[i] * scale;
  return {ANElement::translation(std::move(a)), std::nullopt};
}

std::string_view to_string(ANZClass z) noexcept {
  switch (z) {
    case ANZClass::Identity: return "Identity";
    case ANZClass::DilationClass: return "DilationClass";
    case ANZClass::TranslationClass: return "TranslationClass";
  }
  return "Unknown";
}

ANZClass zclass_of(const ANElement& e) {
  if (e.r() != 1) return ANZClass::DilationClass;
  return e.is_identity() ? ANZClass::Identity : ANZClass::TranslationClass;
}

}  // namespace hypiso
