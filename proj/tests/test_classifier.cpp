#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hypiso/classifier.hpp"
#include "hypiso/error.hpp"
#include "oracle.hpp"
#include "samples.hpp"

using namespace hypiso;
using samples::q;

namespace {

Polynomial x_minus(long c) { return Polynomial::linear_root(Rational(c)); }

IsometryElement embed(const IsometryElement& t, std::size_t extra, long fill = 1) {
  QMatrix m = QMatrix::identity(t.dim() + extra);
  for (std::size_t r = 0; r < t.dim(); ++r)
    for (std::size_t c = 0; c < t.dim(); ++c) m(r, c) = t.matrix()(r, c);
  for (std::size_t i = t.dim(); i < m.rows(); ++i) m(i, i) = fill;
  return validate_isometry(m);
}

IsometryType type(Kind k, bool inversion = false) { return {k, inversion}; }

}  // namespace

TEST_CASE("detect_type examples") {
  CHECK(detect_type(samples::identity(2)) == type(Kind::Elliptic));
  CHECK(detect_type(samples::boost3()) == type(Kind::Hyperbolic));
  CHECK(reduce(char_poly(samples::boost3())).chi_o.evaluate(Rational(1)) == q(-4, 3));
  CHECK(detect_type(samples::parabolic()) == type(Kind::Parabolic));
  CHECK(detect_type(samples::diag({1, -1, 1})) == type(Kind::Elliptic, true));
}

TEST_CASE("classify examples") {
  auto c = classify(samples::rotation(3, 4, 5));
  CHECK(c.type == type(Kind::Elliptic));
  CHECK(c.k == 1);
  CHECK(c.l == 1);
  CHECK(c.m == 0);
  REQUIRE(c.spectrum.angles.size() == 1);
  CHECK(c.spectrum.angles[0].theta == doctest::Approx(std::acos(0.6)).epsilon(1e-12));

  c = classify(samples::boost3());
  CHECK(c.type == type(Kind::Hyperbolic));
  CHECK(c.k == 0);
  CHECK(c.l == 1);
  CHECK(c.m == 0);
  REQUIRE(c.spectrum.boost);
  CHECK(c.spectrum.boost->r == doctest::Approx(3.0).epsilon(1e-12));

  c = classify(samples::diag({1, -1, -1}));
  CHECK(c.type == type(Kind::Elliptic));
  CHECK(c.m == 2);
  CHECK(c.k == 1);
  CHECK(c.spectrum.angles.empty());
}

TEST_CASE("conjugacy_invariant and are_conjugate examples") {
  const auto [cp, mp] = conjugacy_invariant(samples::identity(2));
  CHECK(cp == x_minus(1).pow(3));
  CHECK(mp == x_minus(1));
  const auto [pcp, pmp] = conjugacy_invariant(samples::parabolic());
  CHECK(pcp == cp);
  CHECK(pmp != mp);
  CHECK_FALSE(are_conjugate(samples::identity(2), samples::parabolic()));
  CHECK_FALSE(are_conjugate(samples::boost3(), samples::rotation(3, 4, 5)));
  const auto t = random_isometry(3, 4, Recipe::BlockSum);
  for (std::uint64_t s = 0; s < 4; ++s) {
    const auto p = random_isometry(100 + s, 4, Recipe::SemisimpleCayley);
    CHECK(are_conjugate(t, samples::conjugate(t, p)));
    CHECK(conjugacy_invariant(samples::conjugate(t, p)) == conjugacy_invariant(t));
  }
  try {
    are_conjugate(samples::identity(2), samples::identity(3));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("spectral_decomposition examples") {
  auto d = spectral_decomposition(samples::identity(2));
  CHECK(d.fixed_space.cols() == 3);
  CHECK(d.neg_space.cols() == 0);
  CHECK(d.rotation_planes.empty());
  CHECK_FALSE(d.boost_plane);

  d = spectral_decomposition(samples::boost3());
  REQUIRE(d.boost_plane);
  CHECK(d.boost_plane->cols() == 2);
  CHECK(d.fixed_space.cols() == 1);
  // span(e0, e1) and span(e2)
  CHECK(hstack(*d.boost_plane, QMatrix{{1, 0}, {0, 1}, {0, 0}}).rank() == 2);
  CHECK(hstack(d.fixed_space, QMatrix{{0}, {0}, {1}}).rank() == 1);

  d = spectral_decomposition(samples::diag({1, -1, -1}));
  CHECK(hstack(d.fixed_space, QMatrix{{1}, {0}, {0}}).rank() == 1);
  CHECK(d.neg_space.cols() == 2);
  CHECK(hstack(d.neg_space, QMatrix{{0, 0}, {1, 0}, {0, 1}}).rank() == 2);
}

TEST_CASE("spectral blocks are invariant and J-orthogonal on samples") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const auto t = samples::sample(seed, n);
      const auto d = spectral_decomposition(t);
      std::vector<QMatrix> blocks{d.fixed_space, d.neg_space};
      for (const auto& b : d.rotation_planes) blocks.push_back(b.basis);
      std::size_t total = 0;
      QMatrix all(t.dim(), 0);
      for (const auto& b : blocks) {
        total += b.cols();
        if (b.cols() == 0) continue;
        all = all.cols() == 0 ? b : hstack(all, b);
        // T maps the block into itself
        CHECK(hstack(b, t.matrix() * b).rank() == b.cols());
      }
      CHECK(total == t.dim());
      CHECK(all.rank() == t.dim());
      const QMatrix j = t.form().gram();
      for (std::size_t a = 0; a < blocks.size(); ++a)
        for (std::size_t b = a + 1; b < blocks.size(); ++b)
          if (blocks[a].cols() > 0 && blocks[b].cols() > 0) CHECK((blocks[a].transpose() * j * blocks[b]).is_zero());
      if (d.boost_plane) CHECK(d.boost_plane->cols() == 2);
    }
}

TEST_CASE("quick_trace_test examples") {
  auto r = quick_trace_test(samples::boost3());
  CHECK(r.verdict == TraceVerdict::Hyperbolic);
  CHECK(r.power == 1);
  r = quick_trace_test(samples::rotation(3, 4, 5));
  CHECK(r.verdict == TraceVerdict::Inconclusive);
  CHECK(r.tried == kDefaultTraceCap);
  // with a known lower bound a = 2 on the boost: floor(ln 4 / ln 2) + 1 = 3 tries at most
  r = quick_trace_test(samples::rotation(3, 4, 5), q(2));
  CHECK(r.tried == 3);
}

TEST_CASE("newton_power_sums seeds and examples") {
  const Polynomial cp = char_poly(samples::boost3());
  const auto p = newton_power_sums(cp, 2);
  REQUIRE(p.size() == 2);
  CHECK(p[0] == q(13, 3));
  CHECK(p[1] == q(91, 9));
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const Polynomial c = char_poly(samples::sample(seed, n));
      const std::size_t big_n = c.degree();
      const Rational a1 = -c.coefficient(big_n - 1);
      const Rational a2 = c.coefficient(big_n - 2);
      const auto s = newton_power_sums(c, 2);
      CHECK(s[0] == a1);
      CHECK(s[1] == a1 * a1 - 2 * a2);
    }
}

TEST_CASE("newton_power_sums match exact power traces") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const auto t = samples::sample(seed, n);
      const unsigned kmax = 3 * static_cast<unsigned>(n + 1);
      const auto p = newton_power_sums(char_poly(t), kmax);
      for (unsigned k = 1; k <= kmax; ++k) CHECK(p[k - 1] == power_trace(t, k));
    }
}

TEST_CASE("low_dim_criterion examples") {
  CHECK(low_dim_criterion(samples::boost3()) == type(Kind::Hyperbolic));
  // n = 2, det -1, trace 1: a reflection
  CHECK(low_dim_criterion(samples::diag({1, -1, 1})) == type(Kind::Elliptic, true));
  // n = 3, det +1, eigenvalue 1 present, trace < 4
  const auto rot3 = embed(samples::rotation(3, 4, 5), 1);
  CHECK(power_trace(rot3, 1) < 4);
  CHECK(low_dim_criterion(rot3) == type(Kind::Elliptic));
  CHECK(low_dim_criterion(samples::parabolic()) == type(Kind::Parabolic));
  CHECK(low_dim_criterion(embed(samples::parabolic(), 1)) == type(Kind::Parabolic));
  CHECK(low_dim_criterion(embed(samples::parabolic(), 1, -1)) == type(Kind::Parabolic, true));
  CHECK(low_dim_criterion(samples::identity(3)) == type(Kind::Elliptic));
  try {
    low_dim_criterion(samples::identity(4));
    FAIL("expected UnsupportedDimension");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedDimension);
  }
}

TEST_CASE("all criteria agree with the numeric oracle") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto t = samples::sample(seed, n);
      const auto verdict = detect_type(t);
      const auto numeric = oracle::numeric_type(t.matrix());
      CHECK(verdict == numeric.type);
      const auto c = classify(t);
      CHECK(c.type == verdict);
      const auto quick = quick_trace_test(t);
      if (quick.verdict == TraceVerdict::Hyperbolic) CHECK(verdict.kind == Kind::Hyperbolic);
      if (n <= 3) CHECK(low_dim_criterion(t) == verdict);
    }
}

TEST_CASE("structure theorems on samples") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto t = samples::sample(seed, n);
      const auto c = classify(t);
      CHECK((t.orientation() == 1) == (c.m % 2 == 0));
      CHECK(c.type.inversion == (c.m % 2 == 1));
      unsigned rsum = 0;
      for (const auto& a : c.spectrum.angles) rsum += a.multiplicity;
      CHECK(c.k == rsum + c.m / 2);
      const auto r = reduce(c.char_poly);
      switch (c.type.kind) {
        case Kind::Parabolic: {
          const QMatrix nil = jordan_chevalley(t).unipotent.matrix() - QMatrix::identity(t.dim());
          CHECK_FALSE(nil.pow(2).is_zero());
          CHECK(nil.pow(3).is_zero());
          CHECK(c.l >= 3);
          break;
        }
        case Kind::Hyperbolic:
          REQUIRE(c.spectrum.boost);
          CHECK(r.chi_o.evaluate(Rational(1)) < 0);
          CHECK(kernel_rank(t, unhalve(c.spectrum.boost->factor)) == 2 * static_cast<std::size_t>(c.spectrum.boost->factor.degree()));
          break;
        case Kind::Elliptic:
          CHECK(c.min_poly == squarefree_part(c.min_poly));
          CHECK(c.l >= 1);
          break;
      }
    }
}

TEST_CASE("trace divergence separates hyperbolic elements") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto t = samples::sample(seed, n);
      const auto kind = detect_type(t).kind;
      const auto p = newton_power_sums(char_poly(t), 40);
      const Rational bound(static_cast<long>(n + 1));
      if (kind == Kind::Hyperbolic) {
        bool exceeded = false;
        for (const auto& pk : p) exceeded = exceeded || pk > 10 * bound;
        CHECK(exceeded);
      } else {
        for (const auto& pk : p) CHECK(abs(pk) <= bound);
      }
    }
}

TEST_CASE("classification is conjugation invariant") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const auto t = samples::sample(seed, n);
      const auto p = random_isometry(seed + 500, n, Recipe::WithReflection);
      CHECK(classify(samples::conjugate(t, p)) == classify(t));
    }
}
