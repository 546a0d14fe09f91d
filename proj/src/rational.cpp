#include "hypiso/rational.hpp"

#include <cctype>

#include "hypiso/error.hpp"

namespace hypiso {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::WrongComponent: return "WrongComponent";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::CayleySingular: return "CayleySingular";
    case ErrorCode::OddReducedDegree: return "OddReducedDegree";
    case ErrorCode::NotSelfReciprocal: return "NotSelfReciprocal";
    case ErrorCode::MalformedSpectrum: return "MalformedSpectrum";
    case ErrorCode::TaxonomyViolation: return "TaxonomyViolation";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::InvalidSignature: return "InvalidSignature";
    case ErrorCode::NotAnH2Element: return "NotAnH2Element";
    case ErrorCode::NonRationalNormalization: return "NonRationalNormalization";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::optional<Integer> parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  Integer z(std::string(s), 10);
  if (negative) z = -z;
  return z;
}

}  // namespace

std::optional<Rational> try_parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
    auto den = parse_integer(den_text);
    if (!num || !den || *den == 0) return std::nullopt;
    Rational q(*num, *den);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '+' || whole.front() == '-')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (!frac.empty() && !all_digits(frac)) return std::nullopt;
    Integer num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(num, den);
    q.canonicalize();
    if (negative) q = -q;
    return q;
  }
  auto z = parse_integer(text);
  if (!z) return std::nullopt;
  return Rational(*z);
}

Rational parse_rational(std::string_view text) {
  auto q = try_parse_rational(text);
  if (!q) throw ParseError("malformed rational '" + std::string(text) + "'", 0, 0);
  return *q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

int sign(const Rational& value) { return sgn(value); }

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  const mpz_srcptr num = value.get_num_mpz_t();
  const mpz_srcptr den = value.get_den_mpz_t();
  if (!mpz_perfect_square_p(num) || !mpz_perfect_square_p(den)) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num);
  mpz_sqrt(rd.get_mpz_t(), den);
  Rational q(rn, rd);
  q.canonicalize();
  return q;
}

namespace {

// floor(sqrt(value * 4^bits))
Integer scaled_isqrt(const Rational& value, unsigned bits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 4, bits);
  Rational scaled = value * scale;
  Integer floor_val = scaled.get_num() / scaled.get_den();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), floor_val.get_mpz_t());
  return root;
}

}  // namespace

Rational sqrt_lower(const Rational& value, unsigned bits) {
  if (sgn(value) <= 0) return 0;
  if (auto exact = exact_sqrt(value)) return *exact;
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  Rational q(scaled_isqrt(value, bits), den);
  q.canonicalize();
  return q;
}

Rational sqrt_upper(const Rational& value, unsigned bits) {
  if (sgn(value) <= 0) return 0;
  if (auto exact = exact_sqrt(value)) return *exact;
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  Rational q(scaled_isqrt(value, bits) + 1, den);
  q.canonicalize();
  return q;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) return simplest_between(hi, lo);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  Integer c = lo.get_num() / lo.get_den();
  if (Rational(c) < lo) c += 1;
  if (Rational(c) <= hi) return Rational(c);
  Integer f = c - 1;
  Rational inner = simplest_between(1 / (hi - f), 1 / (lo - f));
  Rational result = Rational(f) + 1 / inner;
  result.canonicalize();
  return result;
}

}  // namespace hypiso
