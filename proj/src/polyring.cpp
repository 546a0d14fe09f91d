#include "hypiso/polyring.hpp"

#include <algorithm>
#include <cmath>

#include "hypiso/error.hpp"

namespace hypiso {

unsigned root_multiplicity_at(const Polynomial& p, int c) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "root multiplicity of the zero polynomial");
  if (c != 1 && c != -1) throw Error(ErrorCode::InvalidArgument, "root_multiplicity_at expects c = +1 or -1");
  const Polynomial divisor = Polynomial::linear_root(c);
  const Rational at = c;
  Polynomial rest = p;
  unsigned e = 0;
  while (rest.degree() > 0 && sgn(rest.evaluate(at)) == 0) {
    rest = divmod(rest, divisor).first;
    ++e;
  }
  return e;
}

ReducedFactorization reduce(const Polynomial& p) {
  ReducedFactorization out;
  out.l = root_multiplicity_at(p, 1);
  out.m = root_multiplicity_at(p, -1);
  Polynomial strip = Polynomial::linear_root(1).pow(out.l) * Polynomial::linear_root(-1).pow(out.m);
  out.chi_o = divmod(p, strip).first;
  if (out.chi_o.degree() % 2 != 0)
    throw Error(ErrorCode::OddReducedDegree, "reduced characteristic polynomial has odd degree " +
                                                 std::to_string(out.chi_o.degree()));
  out.k_prime = static_cast<unsigned>(out.chi_o.degree() / 2);
  return out;
}

Polynomial halve_self_reciprocal(const Polynomial& p) {
  if (p.is_zero() || p.degree() % 2 != 0) throw Error(ErrorCode::NotSelfReciprocal, "self-reciprocal input must have even degree");
  const auto& c = p.coefficients();
  const std::size_t deg = c.size() - 1;
  for (std::size_t i = 0; i <= deg / 2; ++i)
    if (c[i] != c[deg - i]) throw Error(ErrorCode::NotSelfReciprocal, "coefficients are not palindromic: " + p.to_string());
  const std::size_t d = deg / 2;
  // x^k + x^-k = s_k(y): s_0 = 2, s_1 = y, s_k = y s_{k-1} - s_{k-2}.
  const Polynomial y = Polynomial::monomial(1, 1);
  Polynomial prev = Polynomial::constant(2);
  Polynomial cur = y;
  Polynomial q = Polynomial::constant(c[d]);
  for (std::size_t k = 1; k <= d; ++k) {
    q += cur * c[d + k];
    Polynomial next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return q;
}

Polynomial unhalve(const Polynomial& q) {
  if (q.is_zero()) return q;
  const std::size_t d = static_cast<std::size_t>(q.degree());
  const Polynomial x2p1({Rational(1), Rational(0), Rational(1)});
  Polynomial out;
  Polynomial power = Polynomial::constant(1);
  for (std::size_t k = 0; k <= d; ++k) {
    out += Polynomial::monomial(q.coefficient(k), d - k) * power;
    power *= x2p1;
  }
  return out;
}

Rational isolation_width() {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, 40);
  return Rational(1, den);
}

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  auto normalize = [](Polynomial q) {
    if (!q.is_zero()) q *= Rational(1) / abs(q.leading());
    return q;
  };
  std::vector<Polynomial> chain{normalize(p), normalize(p.derivative())};
  while (!chain.back().is_zero()) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(normalize(-r));
  }
  chain.pop_back();
  return chain;
}

int variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sgn(q.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int count_between(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b) {
  return variations(chain, a) - variations(chain, b);
}

std::vector<RootInterval> isolate_squarefree(const Polynomial& g) {
  if (g.degree() <= 0) return {};
  if (g.degree() == 1) {
    Rational root = -g.coefficient(0) / g.coefficient(1);
    return {{root, root}};
  }
  const auto chain = sturm_chain(g);
  Rational bound = 0;
  for (const auto& c : g.coefficients()) bound = std::max(bound, Rational(abs(c / g.leading())));
  bound += 1;

  const Rational width = isolation_width();
  std::vector<RootInterval> found;
  std::vector<RootInterval> work{{-bound, bound}};
  while (!work.empty()) {
    RootInterval iv = work.back();
    work.pop_back();
    const int count = count_between(chain, iv.lo, iv.hi);
    if (count == 0) continue;
    if (count == 1) {
      found.push_back(refine_root(g, iv, width));
      continue;
    }
    Rational mid = iv.midpoint();
    if (sgn(g.evaluate(mid)) != 0) {
      work.push_back({iv.lo, mid});
      work.push_back({mid, iv.hi});
      continue;
    }
    found.push_back({mid, mid});
    Rational delta = iv.width() / 4;
    while (sgn(g.evaluate(mid - delta)) == 0 || sgn(g.evaluate(mid + delta)) == 0 ||
           count_between(chain, mid - delta, mid + delta) != 1)
      delta /= 2;
    work.push_back({iv.lo, mid - delta});
    work.push_back({mid + delta, iv.hi});
  }
  return found;
}

bool overlaps(const RootInterval& a, const RootInterval& b) {
  if (a.exact() && b.exact()) return a.lo == b.lo;
  if (a.exact()) return b.lo < a.lo && a.lo < b.hi;
  if (b.exact()) return a.lo < b.lo && b.lo < a.hi;
  return std::max(a.lo, b.lo) < std::min(a.hi, b.hi);
}

}  // namespace

int sturm_count(const Polynomial& squarefree, const Rational& a, const Rational& b) {
  return count_between(sturm_chain(squarefree), a, b);
}

RootInterval refine_root(const Polynomial& g, RootInterval iv, const Rational& width) {
  if (iv.exact()) return iv;
  int lo_sign = sgn(g.evaluate(iv.lo));
  while (iv.width() >= width) {
    Rational mid = iv.midpoint();
    const int s = sgn(g.evaluate(mid));
    if (s == 0) return {mid, mid};
    if (s != lo_sign) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
      lo_sign = s;
    }
  }
  return iv;
}

RootInterval separate_from(const Polynomial& g, RootInterval iv, const Rational& point) {
  if (iv.exact() || !(iv.lo < point && point < iv.hi)) return iv;
  const int s = sgn(g.evaluate(point));
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "separation point is a root");
  if (s != sgn(g.evaluate(iv.lo))) return {iv.lo, point};
  return {point, iv.hi};
}

std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& q) {
  if (q.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot isolate roots of the zero polynomial");
  std::vector<IsolatedRoot> roots;
  for (const auto& [factor, mult] : squarefree_decomposition(q))
    for (const auto& iv : isolate_squarefree(factor)) roots.push_back({iv, mult, factor});

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        auto& a = roots[i];
        auto& b = roots[j];
        if (!overlaps(a.interval, b.interval)) continue;
        changed = true;
        if (a.interval.exact()) {
          b.interval = separate_from(b.factor, b.interval, a.interval.lo);
        } else if (b.interval.exact()) {
          a.interval = separate_from(a.factor, a.interval, b.interval.lo);
        } else {
          a.interval = refine_root(a.factor, a.interval, a.interval.width() / 2);
          b.interval = refine_root(b.factor, b.interval, b.interval.width() / 2);
        }
      }
  }
  std::sort(roots.begin(), roots.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.interval.lo < b.interval.lo; });
  return roots;
}

bool operator==(const ReducedSpectrum& a, const ReducedSpectrum& b) {
  if (!(a.halved == b.halved) || a.boost.has_value() != b.boost.has_value()) return false;
  if (a.boost && !(a.boost->interval == b.boost->interval && a.boost->y_interval == b.boost->y_interval &&
                   a.boost->factor == b.boost->factor))
    return false;
  if (a.angles.size() != b.angles.size()) return false;
  for (std::size_t i = 0; i < a.angles.size(); ++i) {
    const auto& x = a.angles[i];
    const auto& y = b.angles[i];
    if (!(x.cos_interval == y.cos_interval) || x.multiplicity != y.multiplicity || !(x.factor == y.factor)) return false;
  }
  return true;
}

ReducedSpectrum spectrum_from_reduced(const Polynomial& chi_o) {
  ReducedSpectrum spectrum;
  if (chi_o.is_zero()) throw Error(ErrorCode::MalformedSpectrum, "zero reduced polynomial");
  if (chi_o.degree() == 0) {
    spectrum.halved = chi_o;
    return spectrum;
  }
  try {
    spectrum.halved = halve_self_reciprocal(chi_o);
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedSpectrum, e.what());
  }
  const Rational two = 2;
  auto roots = isolate_real_roots(spectrum.halved);
  unsigned counted = 0;
  for (const auto& r : roots) counted += r.multiplicity;
  if (counted != static_cast<unsigned>(spectrum.halved.degree()))
    throw Error(ErrorCode::MalformedSpectrum, "reduced polynomial has eigenvalues off the unit circle and the real axis");

  for (auto& root : roots) {
    if (sgn(root.factor.evaluate(two)) == 0 || sgn(root.factor.evaluate(Rational(-two))) == 0)
      throw Error(ErrorCode::MalformedSpectrum, "halved polynomial vanishes at y = +-2");
    root.interval = separate_from(root.factor, root.interval, two);
    root.interval = separate_from(root.factor, root.interval, Rational(-two));
    const RootInterval& iv = root.interval;
    if (iv.hi <= -two) throw Error(ErrorCode::MalformedSpectrum, "negative real eigenvalue other than -1");
    if (iv.lo >= two) {
      if (root.multiplicity != 1 || spectrum.boost)
        throw Error(ErrorCode::MalformedSpectrum, "real eigenvalue pair r, 1/r is not simple");
      BoostRoot boost;
      boost.y_interval = iv;
      boost.factor = root.factor;
      boost.interval = {(iv.lo + sqrt_lower(iv.lo * iv.lo - 4)) / 2, (iv.hi + sqrt_upper(iv.hi * iv.hi - 4)) / 2};
      const double y = iv.midpoint().get_d();
      boost.r = (y + std::sqrt(y * y - 4.0)) / 2.0;
      spectrum.boost = boost;
      continue;
    }
    RotationAngle angle;
    angle.cos_interval = {iv.lo / 2, iv.hi / 2};
    angle.multiplicity = root.multiplicity;
    angle.factor = root.factor;
    angle.theta = std::acos(angle.cos_interval.midpoint().get_d());
    spectrum.angles.push_back(angle);
  }
  std::reverse(spectrum.angles.begin(), spectrum.angles.end());
  return spectrum;
}

}  // namespace hypiso
