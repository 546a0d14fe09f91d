#pragma once

#include <cstdint>
#include <vector>

#include "hypiso/lorentz.hpp"
#include "hypiso/rational.hpp"

namespace samples {

using hypiso::IsometryElement;
using hypiso::QMatrix;
using hypiso::Rational;

inline Rational q(long p, long d = 1) { return hypiso::make_rational(p, d); }

inline IsometryElement identity(std::size_t n) { return hypiso::validate_isometry(QMatrix::identity(n + 1)); }

inline IsometryElement diag(std::initializer_list<long> entries) {
  std::vector<Rational> d;
  for (long e : entries) d.emplace_back(e);
  return hypiso::validate_isometry(QMatrix::diagonal(d));
}

/// [[5/3,4/3],[4/3,5/3]] on (e0, e1), identity on e2: eigenvalues 3, 1/3, 1.
inline IsometryElement boost3() {
  return hypiso::validate_isometry(QMatrix{{q(5, 3), q(4, 3), 0}, {q(4, 3), q(5, 3), 0}, {0, 0, 1}});
}

/// Boost with r = 2: cosh = 5/4, sinh = 3/4.
inline IsometryElement boost2() {
  return hypiso::validate_isometry(QMatrix{{q(5, 4), q(3, 4), 0}, {q(3, 4), q(5, 4), 0}, {0, 0, 1}});
}

/// diag(1, R) with R the rotation by arccos(c) where (c, s) is Pythagorean.
inline IsometryElement rotation(long c, long s, long h) {
  return hypiso::validate_isometry(QMatrix{{1, 0, 0}, {0, q(c, h), q(-s, h)}, {0, q(s, h), q(c, h)}});
}

inline IsometryElement parabolic() { return hypiso::validate_isometry(hypiso::unit_translation_block()); }

/// P T P^{-1}
inline IsometryElement conjugate(const IsometryElement& t, const IsometryElement& p) { return p * t * p.inverse(); }

inline const std::vector<hypiso::Recipe>& recipes() {
  static const std::vector<hypiso::Recipe> all{hypiso::Recipe::SemisimpleCayley, hypiso::Recipe::WithReflection,
                                               hypiso::Recipe::ParabolicBlock, hypiso::Recipe::BlockSum};
  return all;
}

/// Round-robin over recipes so every sample batch covers each family.
inline IsometryElement sample(std::uint64_t seed, std::size_t n) {
  return hypiso::random_isometry(seed, n, recipes()[seed % recipes().size()]);
}

}  // namespace samples
