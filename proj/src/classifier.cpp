#include "hypiso/classifier.hpp"

#include <cmath>

#include "hypiso/error.hpp"

namespace hypiso {

std::string_view to_string(Kind kind) noexcept {
  switch (kind) {
    case Kind::Elliptic: return "elliptic";
    case Kind::Parabolic: return "parabolic";
    case Kind::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

bool operator==(const Classification& a, const Classification& b) {
  return a.type == b.type && a.k == b.k && a.l == b.l && a.m == b.m && a.orientation == b.orientation &&
         a.char_poly == b.char_poly && a.min_poly == b.min_poly && a.spectrum == b.spectrum;
}

namespace {

const Polynomial& x_minus_one() {
  static const Polynomial p = Polynomial::linear_root(1);
  return p;
}

IsometryType detect_from(const IsometryElement& t, const ReducedFactorization& red) {
  IsometryType type;
  type.inversion = red.m % 2 == 1;
  if (sgn(red.chi_o.evaluate(Rational(1))) < 0) {
    type.kind = Kind::Hyperbolic;
  } else if (kernel_rank(t, x_minus_one().pow(2)) > kernel_rank(t, x_minus_one())) {
    type.kind = Kind::Parabolic;
  } else {
    type.kind = Kind::Elliptic;
  }
  return type;
}

void require(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorCode::TaxonomyViolation, what);
}

bool is_squarefree(const Polynomial& p) { return gcd(p, p.derivative()).degree() == 0; }

}  // namespace

IsometryType detect_type(const IsometryElement& t) { return detect_from(t, reduce(char_poly(t))); }

Classification classify(const IsometryElement& t) {
  Classification c;
  c.char_poly = char_poly(t);
  c.min_poly = min_poly(t);
  c.orientation = t.orientation();
  const ReducedFactorization red = reduce(c.char_poly);
  c.l = red.l;
  c.m = red.m;
  c.spectrum = spectrum_from_reduced(red.chi_o);
  c.type = detect_from(t, red);
  c.k = c.m / 2;
  for (const auto& angle : c.spectrum.angles) c.k += angle.multiplicity;

  require(c.orientation == (c.m % 2 == 0 ? 1 : -1), "orientation disagrees with the parity of m");
  require((c.type.kind == Kind::Hyperbolic) == c.spectrum.boost.has_value(),
          "hyperbolic verdict disagrees with the presence of a boost eigenvalue");
  const bool defective = divides(x_minus_one().pow(2), c.min_poly);
  require((c.type.kind == Kind::Parabolic) == defective, "parabolic verdict disagrees with (x-1)^2 | min_poly");
  switch (c.type.kind) {
    case Kind::Elliptic:
      require(c.l >= 1, "elliptic element without a fixed time-like vector (l = 0)");
      require(is_squarefree(c.min_poly), "elliptic element is not semisimple");
      break;
    case Kind::Parabolic:
      require(c.l >= 3, "parabolic element with l < 3");
      require(root_multiplicity_at(c.min_poly, 1) == 3, "parabolic unipotent part is not a single 3-block");
      break;
    case Kind::Hyperbolic:
      require(kernel_rank(t, unhalve(c.spectrum.boost->factor)) == 2 * static_cast<std::size_t>(c.spectrum.boost->factor.degree()),
              "boost eigenvalue is not simple");
      break;
  }
  return c;
}

std::pair<Polynomial, Polynomial> conjugacy_invariant(const IsometryElement& t) { return {char_poly(t), min_poly(t)}; }

bool are_conjugate(const IsometryElement& a, const IsometryElement& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "isometries act on spaces of different dimension");
  return conjugacy_invariant(a) == conjugacy_invariant(b);
}

namespace {

// Rational root of a squarefree factor inside an isolating interval, if any.
std::optional<Rational> rational_root(const Polynomial& f, RootInterval iv) {
  if (iv.exact()) return iv.lo;
  const auto ints = primitive_integer_coefficients(f);
  const Rational lc = Rational(ints.back());
  const Rational width = 1 / (2 * lc * lc);
  iv = refine_root(f, iv, width);
  if (iv.exact()) return iv.lo;
  Rational candidate = simplest_between(iv.lo, iv.hi);
  if (sgn(f.evaluate(candidate)) == 0) return candidate;
  return std::nullopt;
}

QMatrix kernel_of(const IsometryElement& t, const Polynomial& p) { return p.evaluate(t.matrix()).nullspace(); }

}  // namespace

SpectralDecomposition spectral_decomposition(const IsometryElement& t) {
  const ReducedFactorization red = reduce(char_poly(t));
  const ReducedSpectrum spectrum = spectrum_from_reduced(red.chi_o);
  SpectralDecomposition out;
  out.fixed_space = kernel_of(t, x_minus_one().pow(red.l));
  out.neg_space = kernel_of(t, Polynomial::linear_root(-1).pow(red.m));

  const Rational two = 2;
  if (red.chi_o.degree() > 0) {
    for (const auto& [factor, mult] : squarefree_decomposition(spectrum.halved)) {
      Polynomial rest = factor;
      bool rest_has_boost = false;
      for (const auto& root : isolate_real_roots(factor)) {
        if (auto c = rational_root(factor, root.interval)) {
          const Polynomial linear = Polynomial::linear_root(*c);
          rest = divmod(rest, linear).first;
          SpectralBlock block{linear, mult, *c > two, kernel_of(t, unhalve(linear).pow(mult))};
          if (block.contains_boost) out.boost_plane = block.basis;
          out.rotation_planes.push_back(std::move(block));
        } else if (root.interval.lo >= two || separate_from(factor, root.interval, two).lo >= two) {
          rest_has_boost = true;
        }
      }
      if (rest.degree() > 0)
        out.rotation_planes.push_back({rest, mult, rest_has_boost, kernel_of(t, unhalve(rest).pow(mult))});
    }
  }

  std::vector<const QMatrix*> parts{&out.fixed_space, &out.neg_space};
  for (const auto& block : out.rotation_planes) {
    require(block.basis.cols() == 2 * block.multiplicity * static_cast<std::size_t>(block.factor.degree()),
            "spectral block dimension disagrees with its factor");
    parts.push_back(&block.basis);
  }
  std::size_t total = 0;
  const QMatrix j = t.form().gram();
  for (std::size_t a = 0; a < parts.size(); ++a) {
    total += parts[a]->cols();
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      if (parts[a]->cols() == 0 || parts[b]->cols() == 0) continue;
      require((parts[a]->transpose() * j * *parts[b]).is_zero(), "spectral subspaces are not J-orthogonal");
    }
  }
  require(total == t.dim(), "spectral subspaces do not span the space");
  return out;
}

std::vector<Rational> newton_power_sums(const Polynomial& cp, unsigned k_max) {
  if (cp.degree() < 1 || cp.leading() != 1) throw Error(ErrorCode::InvalidArgument, "newton_power_sums needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(cp.degree());
  // chi(x) = x^N - a1 x^{N-1} + a2 x^{N-2} - ... + (-1)^N aN
  std::vector<Rational> a(n + 1);
  for (std::size_t i = 1; i <= n; ++i) a[i] = (i % 2 == 0 ? 1 : -1) * cp.coefficient(n - i);

  std::vector<Rational> p(k_max + 1);
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k <= n) {
      QMatrix d(k, k);
      for (std::size_t r = 0; r < k; ++r) {
        d(r, 0) = static_cast<unsigned long>(r + 1) * a[r + 1];
        for (std::size_t c = 1; c < k; ++c) {
          if (c == r + 1) d(r, c) = 1;
          else if (c <= r) d(r, c) = a[r - c + 1];
        }
      }
      p[k] = d.determinant();
    } else {
      Rational acc = 0;
      for (std::size_t i = 1; i <= n; ++i) acc += (i % 2 == 1 ? a[i] : Rational(-a[i])) * p[k - i];
      p[k] = acc;
    }
  }
  p.erase(p.begin());
  return p;
}

TraceTestResult quick_trace_test(const IsometryElement& t, std::optional<Rational> boost_lower_bound, unsigned cap) {
  unsigned limit = cap;
  if (boost_lower_bound) {
    if (*boost_lower_bound <= 1) throw Error(ErrorCode::InvalidArgument, "boost lower bound must exceed 1");
    const double bound = std::log(2.0 * static_cast<double>(t.n())) / std::log(boost_lower_bound->get_d());
    limit = static_cast<unsigned>(std::floor(bound)) + 1;
  }
  TraceTestResult result;
  if (limit == 0) return result;
  const Rational threshold = static_cast<unsigned long>(t.dim());
  const auto sums = newton_power_sums(char_poly(t), limit);
  for (unsigned u = 1; u <= limit; ++u) {
    result.tried = u;
    if (sums[u - 1] > threshold) {
      result.verdict = TraceVerdict::Hyperbolic;
      result.power = u;
      break;
    }
  }
  return result;
}

IsometryType low_dim_criterion(const IsometryElement& t) {
  const std::size_t n = t.n();
  if (n != 2 && n != 3) throw Error(ErrorCode::UnsupportedDimension, "trace criteria exist for n = 2 and n = 3 only");
  const Rational tr = t.matrix().trace();
  const bool preserving = t.orientation() == 1;
  IsometryType type{Kind::Elliptic, !preserving};
  if (t.matrix() == QMatrix::identity(t.dim())) return type;

  if (n == 2) {
    const Rational edge = preserving ? 3 : 1;
    if (tr > edge) type.kind = Kind::Hyperbolic;
    else if (tr == edge) type.kind = preserving ? Kind::Parabolic : Kind::Elliptic;
    else if (!preserving) throw Error(ErrorCode::TaxonomyViolation, "orientation-reversing isometry of H^2 with trace < 1");
    return type;
  }
  if (preserving) {
    if (sgn(char_poly(t).evaluate(Rational(1))) != 0 || tr > 4) type.kind = Kind::Hyperbolic;
    else if (tr == 4) type.kind = Kind::Parabolic;
    return type;
  }
  if (tr > 2) {
    type.kind = Kind::Hyperbolic;
  } else if (kernel_rank(t, x_minus_one().pow(2)) > kernel_rank(t, x_minus_one())) {
    // trace 2 is shared by the reflection and the parabolic inversion.
    type.kind = Kind::Parabolic;
  }
  return type;
}

}  // namespace hypiso
