#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypiso/error.hpp"
#include "hypiso/polyring.hpp"
#include "oracle.hpp"
#include "samples.hpp"

using namespace hypiso;
using samples::q;

namespace {

Polynomial x_minus(const Rational& c) { return Polynomial::linear_root(c); }

/// Deterministic small-integer self-reciprocal products of quadratics.
Polynomial reciprocal_product(std::uint64_t seed, unsigned pairs) {
  Polynomial p = Polynomial::constant(1);
  std::uint64_t s = seed * 2654435761u + 7;
  for (unsigned i = 0; i < pairs; ++i) {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    const long num = static_cast<long>((s >> 33) % 19) - 9;
    const long den = static_cast<long>((s >> 20) % 4) + 1;
    p *= Polynomial{1, -q(num, den), 1};
  }
  return p;
}

}  // namespace

TEST_CASE("root_multiplicity_at examples") {
  CHECK(root_multiplicity_at(x_minus(1).pow(3), 1) == 3);
  CHECK(root_multiplicity_at(x_minus(1) * Polynomial{1, q(-10, 3), 1}, 1) == 1);
  CHECK(root_multiplicity_at(x_minus(-1).pow(2) * x_minus(1), -1) == 2);
}

TEST_CASE("reduce examples") {
  auto r = reduce(x_minus(1).pow(3));
  CHECK(r.l == 3);
  CHECK(r.m == 0);
  CHECK(r.chi_o == Polynomial::constant(1));
  CHECK(r.k_prime == 0);
  const Polynomial boost_quad{1, q(-10, 3), 1};
  r = reduce(x_minus(1) * boost_quad);
  CHECK(r.l == 1);
  CHECK(r.chi_o == boost_quad);
  CHECK(r.k_prime == 1);
  const Polynomial rot{1, q(-6, 5), 1};
  r = reduce(x_minus(1) * x_minus(-1) * rot);
  CHECK(r.l == 1);
  CHECK(r.m == 1);
  CHECK(r.chi_o == rot);
  CHECK(r.k_prime == 1);
}

TEST_CASE("evaluate examples") {
  CHECK(Polynomial{1, q(-10, 3), 1}.evaluate(Rational(1)) == q(-4, 3));
  CHECK(Polynomial{1, q(-6, 5), 1}.evaluate(Rational(1)) == q(4, 5));
  CHECK(Polynomial{q(7, 2), 3, 5}.evaluate(Rational(0)) == q(7, 2));
}

TEST_CASE("halve_self_reciprocal examples") {
  CHECK(halve_self_reciprocal(Polynomial{1, q(-10, 3), 1}) == Polynomial{q(-10, 3), 1});
  CHECK(halve_self_reciprocal(Polynomial{1, 0, 2, 0, 1}) == Polynomial{0, 0, 1});
  CHECK(halve_self_reciprocal(Polynomial{1, 0, 1}) == Polynomial{0, 1});
  try {
    halve_self_reciprocal(Polynomial{2, 1, 1});
    FAIL("expected NotSelfReciprocal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSelfReciprocal);
  }
}

TEST_CASE("isolate_real_roots examples") {
  auto roots = isolate_real_roots(Polynomial{q(-10, 3), 1});
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].interval.exact());
  CHECK(roots[0].interval.lo == q(10, 3));
  CHECK(roots[0].multiplicity == 1);
  roots = isolate_real_roots(Polynomial{0, 0, 1});
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].interval.lo == 0);
  CHECK(roots[0].multiplicity == 2);
  roots = isolate_real_roots(Polynomial{2, -3, 1});
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].interval.lo <= 1);
  CHECK(roots[0].interval.hi >= 1);
  CHECK(roots[1].interval.lo <= 2);
  CHECK(roots[1].interval.hi >= 2);
  CHECK(roots[0].interval.hi < roots[1].interval.lo);
}

TEST_CASE("spectrum_from_reduced examples") {
  auto s = spectrum_from_reduced(Polynomial{1, q(-10, 3), 1});
  REQUIRE(s.boost);
  CHECK(s.angles.empty());
  CHECK(s.boost->r == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(s.boost->interval.lo <= 3);
  CHECK(s.boost->interval.hi >= 3);
  s = spectrum_from_reduced(Polynomial{1, q(-6, 5), 1});
  CHECK_FALSE(s.boost);
  REQUIRE(s.angles.size() == 1);
  CHECK(s.angles[0].theta == doctest::Approx(std::acos(0.6)).epsilon(1e-12));
  CHECK(s.angles[0].cos_interval.exact());
  CHECK(s.angles[0].cos_interval.lo == q(3, 5));
  s = spectrum_from_reduced(Polynomial{1, 0, 1});
  REQUIRE(s.angles.size() == 1);
  CHECK(s.angles[0].theta == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
}

TEST_CASE("spectrum_from_reduced rejects malformed spectra") {
  auto code_of = [](const Polynomial& p) {
    try {
      spectrum_from_reduced(p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  // two boost pairs
  CHECK(code_of(Polynomial{1, q(-10, 3), 1} * Polynomial{1, q(-5, 2), 1}) == ErrorCode::MalformedSpectrum);
  // a negative real pair
  CHECK(code_of(Polynomial{1, q(10, 3), 1}) == ErrorCode::MalformedSpectrum);
  // not self-reciprocal
  CHECK(code_of(Polynomial{2, 1, 1}) == ErrorCode::MalformedSpectrum);
}

TEST_CASE("reduce round-trips on random characteristic polynomials") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
      const Polynomial cp = char_poly(samples::sample(seed, n));
      const auto r = reduce(cp);
      CHECK(x_minus(1).pow(r.l) * x_minus(-1).pow(r.m) * r.chi_o == cp);
      CHECK(r.chi_o.degree() == static_cast<int>(2 * r.k_prime));
      CHECK(r.chi_o.evaluate(Rational(1)) != 0);
      CHECK(r.chi_o.evaluate(Rational(-1)) != 0);
    }
}

TEST_CASE("halving round-trips") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Polynomial p = reciprocal_product(seed, 1 + seed % 4);
    const Polynomial h = halve_self_reciprocal(p);
    CHECK(h.degree() * 2 == p.degree());
    CHECK(unhalve(h) == p);
  }
}

TEST_CASE("isolating intervals are certified and agree with float roots") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Polynomial p = reciprocal_product(seed, 1 + seed % 4);
    const Polynomial h = halve_self_reciprocal(p);
    const auto roots = isolate_real_roots(h);
    unsigned counted = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const auto& iv = roots[i].interval;
      counted += roots[i].multiplicity;
      CHECK(divides(roots[i].factor, h));
      if (iv.exact()) {
        CHECK(roots[i].factor.evaluate(iv.lo) == 0);
      } else {
        CHECK(iv.width() < isolation_width());
        CHECK(sturm_count(roots[i].factor, iv.lo, iv.hi) == 1);
      }
      if (i > 0) CHECK(roots[i - 1].interval.hi < iv.lo);
    }
    // every real root of the float oracle lands in exactly one interval
    unsigned real_oracle = 0;
    for (const auto& z : oracle::companion_eigenvalues(h.monic())) {
      if (std::abs(z.imag()) > 1e-7) continue;
      ++real_oracle;
      int hits = 0;
      for (const auto& r : roots)
        if (z.real() >= r.interval.lo.get_d() - 1e-7 && z.real() <= r.interval.hi.get_d() + 1e-7) ++hits;
      CHECK(hits == 1);
    }
    CHECK(real_oracle == counted);
  }
}

TEST_CASE("spectrum degree bookkeeping") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
      const auto r = reduce(char_poly(samples::sample(seed, n)));
      const auto s = spectrum_from_reduced(r.chi_o);
      unsigned degree = s.boost ? 2 : 0;
      for (const auto& a : s.angles) {
        degree += 2 * a.multiplicity;
        CHECK(a.cos_interval.lo > -1);
        CHECK(a.cos_interval.hi < 1);
        CHECK(a.theta > 0);
        CHECK(a.theta < std::numbers::pi);
      }
      for (std::size_t i = 1; i < s.angles.size(); ++i) CHECK(s.angles[i - 1].theta < s.angles[i].theta);
      if (s.boost) CHECK(s.boost->interval.lo > 1);
      CHECK(degree == static_cast<unsigned>(r.chi_o.degree()));
    }
}
