#include <random>

#include "hypiso/error.hpp"
#include "hypiso/lorentz.hpp"

namespace hypiso {

IsometryElement cayley_transform(const QMatrix& s, const LorentzForm& form) {
  if (!s.is_square() || s.rows() != form.dim()) throw Error(ErrorCode::DimensionMismatch, "Cayley generator has the wrong size");
  const QMatrix id = QMatrix::identity(form.dim());
  QMatrix denom_inv;
  try {
    denom_inv = (id + s).inverse();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw Error(ErrorCode::CayleySingular, "I + S is singular");
  }
  return validate_isometry((id - s) * denom_inv, form);
}

namespace {

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::size_t n, Recipe recipe)
      : rng_(seed * 0x9E3779B97F4A7C15ULL ^ (n << 8) ^ static_cast<std::uint64_t>(recipe)), form_(n) {}

  IsometryElement draw(Recipe recipe) {
    switch (recipe) {
      case Recipe::SemisimpleCayley: return cayley(0.5);
      case Recipe::WithReflection: return reflection() * cayley(0.5);
      case Recipe::ParabolicBlock: return conjugated(parabolic_block());
      case Recipe::BlockSum: return conjugated(block_sum());
    }
    throw Error(ErrorCode::InvalidArgument, "unknown recipe");
  }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational small_rational() { return make_rational(uniform(-3, 3), uniform(1, 3)); }

  QMatrix skew_generator(double density) {
    const std::size_t d = form_.dim();
    QMatrix s(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        if (!coin(density)) continue;
        Rational a = small_rational();
        // S = J A with A antisymmetric.
        s(i, j) = i == 0 ? a : -a;
        s(j, i) = -a * (j == 0 ? 1 : -1);
      }
    return s;
  }

  IsometryElement cayley(double density) {
    for (;;) {
      try {
        return cayley_transform(skew_generator(density), form_);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CayleySingular && e.code() != ErrorCode::WrongComponent) throw;
      }
    }
  }

  // Reflection in a random space-like vector v: x -> x - 2 <x,v>/<v,v> v.
  IsometryElement reflection() {
    const std::size_t d = form_.dim();
    std::vector<Rational> v(d);
    Rational q;
    do {
      for (auto& x : v) x = uniform(-2, 2);
      q = form_.inner(v, v);
    } while (sgn(q) >= 0);
    const QMatrix j = form_.gram();
    QMatrix r = QMatrix::identity(d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) r(a, b) -= 2 * v[a] * v[b] * j(b, b) / q;
    return validate_isometry(r, form_);
  }

  IsometryElement conjugated(const QMatrix& m) {
    const IsometryElement core = validate_isometry(m, form_);
    const IsometryElement p = cayley(0.3);
    return p * core * p.inverse();
  }

  void rotation(QMatrix& m, std::size_t at, int p, int q) {
    const Rational h = p * p + q * q;
    const Rational c = Rational(p * p - q * q) / h;
    const Rational s = Rational(2 * p * q) / h;
    m(at, at) = c;
    m(at, at + 1) = -s;
    m(at + 1, at) = s;
    m(at + 1, at + 1) = c;
  }

  // Fills spatial coordinates [from, dim) with rotation and +-1 blocks.
  void fill_compact(QMatrix& m, std::size_t from) {
    const std::size_t d = form_.dim();
    std::pair<int, int> last{uniform(1, 3), uniform(1, 4)};
    std::size_t at = from;
    while (at < d) {
      if (d - at >= 2 && coin(0.6)) {
        if (!coin(0.3)) last = {uniform(1, 3), uniform(1, 4)};
        rotation(m, at, last.first, last.second);
        at += 2;
      } else {
        m(at, at) = coin() ? 1 : -1;
        at += 1;
      }
    }
  }

  QMatrix parabolic_block() {
    QMatrix m(form_.dim(), form_.dim());
    const QMatrix u = unit_translation_block();
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) m(r, c) = u(r, c);
    fill_compact(m, 3);
    return m;
  }

  QMatrix block_sum() {
    QMatrix m(form_.dim(), form_.dim());
    std::size_t from = 1;
    m(0, 0) = 1;
    if (coin()) {
      static const long boosts[][2] = {{2, 1}, {3, 1}, {3, 2}, {5, 2}, {4, 3}};
      const auto& b = boosts[uniform(0, 4)];
      const Rational r = make_rational(b[0], b[1]);
      const Rational c = (r + 1 / r) / 2;
      const Rational s = (r - 1 / r) / 2;
      m(0, 0) = c;
      m(0, 1) = s;
      m(1, 0) = s;
      m(1, 1) = c;
      from = 2;
    }
    fill_compact(m, from);
    return m;
  }

  std::mt19937_64 rng_;
  LorentzForm form_;
};

}  // namespace

IsometryElement random_isometry(std::uint64_t seed, std::size_t n, Recipe recipe) {
  Sampler sampler(seed, n, recipe);
  return sampler.draw(recipe);
}

}  // namespace hypiso
