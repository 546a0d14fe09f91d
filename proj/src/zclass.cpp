#include "hypiso/zclass.hpp"

#include <algorithm>
#include <numeric>

#include "hypiso/error.hpp"

namespace hypiso {

ZClassSignature ZClassSignature::key() const {
  ZClassSignature out = *this;
  if (out.kind == Kind::Hyperbolic && out.l > out.m) std::swap(out.l, out.m);
  return out;
}

unsigned ZClassSignature::k_prime() const { return std::accumulate(partition.begin(), partition.end(), 0u); }

std::string to_string(const ZClassSignature& sig) {
  std::string out = std::string(to_string(sig.kind)) + "(l=" + std::to_string(sig.l) + ", m=" + std::to_string(sig.m) + ", {";
  for (std::size_t i = 0; i < sig.partition.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sig.partition[i]);
  }
  return out + "})";
}

ZClassSignature zclass_signature(const Classification& c) {
  ZClassSignature sig;
  sig.kind = c.type.kind;
  sig.l = c.l;
  sig.m = c.m;
  for (const auto& angle : c.spectrum.angles) sig.partition.push_back(angle.multiplicity);
  std::sort(sig.partition.begin(), sig.partition.end(), std::greater<>());
  return sig;
}

ZClassSignature zclass_signature(const IsometryElement& t) { return zclass_signature(classify(t)); }

bool same_zclass(const IsometryElement& a, const IsometryElement& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "isometries act on spaces of different dimension");
  return zclass_signature(a).key() == zclass_signature(b).key();
}

void validate_signature(const ZClassSignature& sig, std::size_t n) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidSignature, to_string(sig) + " is not a z-class for n = " + std::to_string(n) + ": " + why);
  };
  if (n < 2) fail("n must be at least 2");
  if (std::any_of(sig.partition.begin(), sig.partition.end(), [](unsigned r) { return r == 0; })) fail("zero part");
  if (!std::is_sorted(sig.partition.begin(), sig.partition.end(), std::greater<>())) fail("partition not non-increasing");
  const std::size_t used = sig.l + sig.m + 2 * static_cast<std::size_t>(sig.k_prime()) + (sig.kind == Kind::Hyperbolic ? 2 : 0);
  if (used != n + 1) fail("dimensions do not add up to n+1");
  if (sig.kind == Kind::Elliptic && sig.l < 1) fail("elliptic needs l >= 1");
  if (sig.kind == Kind::Parabolic && sig.l < 3) fail("parabolic needs l >= 3");
}

std::size_t CentralizerFactor::dim() const {
  switch (kind) {
    case FactorKind::FullIsometry: return (d + 1) * d / 2;
    case FactorKind::Orthogonal: return d * (d > 0 ? d - 1 : 0) / 2;
    case FactorKind::IdentityComponentIsometry: return 1;
    case FactorKind::Unitary: return d * d;
    case FactorKind::ParabolicStabilizer: {
      const std::size_t t = d >= 2 ? d - 2 : 0;
      return 1 + t + t * (t > 0 ? t - 1 : 0) / 2;
    }
  }
  return 0;
}

bool CentralizerFactor::abelian() const {
  switch (kind) {
    case FactorKind::FullIsometry: return d == 0;
    case FactorKind::Orthogonal: return d <= 1;
    case FactorKind::IdentityComponentIsometry: return true;
    case FactorKind::Unitary: return d == 1;
    case FactorKind::ParabolicStabilizer: return false;
  }
  return false;
}

std::string CentralizerFactor::name() const {
  const std::string ds = std::to_string(d);
  switch (kind) {
    case FactorKind::FullIsometry: return "I(1," + ds + ")";
    case FactorKind::Orthogonal: return "O(" + ds + ")";
    case FactorKind::IdentityComponentIsometry: return "I0(1,1)";
    case FactorKind::Unitary: return "U(" + ds + ")";
    case FactorKind::ParabolicStabilizer: return "ParabolicStabilizer(" + ds + ")";
  }
  return "?";
}

bool CentralizerDescriptor::abelian() const {
  return std::all_of(factors.begin(), factors.end(), [](const CentralizerFactor& f) { return f.abelian(); });
}

CentralizerDescriptor centralizer_descriptor(const ZClassSignature& sig, std::size_t n) {
  validate_signature(sig, n);
  const ZClassSignature s = sig.key();
  CentralizerDescriptor out;
  switch (s.kind) {
    case Kind::Elliptic:
      out.factors.push_back({FactorKind::FullIsometry, s.l - 1});
      out.factors.push_back({FactorKind::Orthogonal, s.m});
      break;
    case Kind::Hyperbolic:
      out.factors.push_back({FactorKind::IdentityComponentIsometry, 1});
      out.factors.push_back({FactorKind::Orthogonal, s.l});
      out.factors.push_back({FactorKind::Orthogonal, s.m});
      break;
    case Kind::Parabolic:
      // dim (W + U_1) = n' + 1 = l
      out.factors.push_back({FactorKind::ParabolicStabilizer, s.l - 1});
      out.factors.push_back({FactorKind::Orthogonal, s.m});
      break;
  }
  for (unsigned r : s.partition) out.factors.push_back({FactorKind::Unitary, r});
  for (const auto& f : out.factors) out.dim += f.dim();
  return out;
}

bool is_generic(const ZClassSignature& sig, std::size_t n) {
  validate_signature(sig, n);
  const ZClassSignature s = sig.key();
  const bool distinct = s.m <= 1 && std::all_of(s.partition.begin(), s.partition.end(), [](unsigned r) { return r == 1; });
  if (!distinct) return false;
  const unsigned half = static_cast<unsigned>(n / 2);
  const unsigned k = s.rotatory_index();
  if (n % 2 == 0) {
    if (s.kind == Kind::Elliptic) return !s.inversion() && k == half;
    if (s.kind == Kind::Hyperbolic) return k + 1 == half;
    return false;
  }
  if (s.kind == Kind::Hyperbolic) return s.inversion() ? k + 1 == half : k == half;
  if (s.kind == Kind::Elliptic) return s.inversion() && k == half;
  return false;
}

std::uint64_t partition_p(unsigned u) {
  std::vector<std::uint64_t> ways(u + 1, 0);
  ways[0] = 1;
  for (unsigned part = 1; part <= u; ++part)
    for (unsigned total = part; total <= u; ++total) ways[total] += ways[total - part];
  return ways[u];
}

CensusRow count_zclasses(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::RangeError, "census needs n >= 2");
  CensusRow row;
  row.n = n;
  for (std::size_t k = 0; 2 * k <= n; ++k) row.elliptic += (n + 1 - 2 * k) * partition_p(static_cast<unsigned>(k));
  for (std::size_t k = 0; 2 * k + 1 <= n; ++k)
    row.hyperbolic += ((n - 1 - 2 * k) / 2 + 1) * partition_p(static_cast<unsigned>(k));
  for (std::size_t k = 0; 2 * k + 2 <= n; ++k) row.parabolic += (n - 1 - 2 * k) * partition_p(static_cast<unsigned>(k));
  row.total = row.elliptic + row.hyperbolic + row.parabolic;
  return row;
}

std::vector<std::vector<unsigned>> partitions_of(unsigned u) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, u, u);
  return out;
}

std::vector<ZClassSignature> enumerate_zclasses(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::RangeError, "enumeration needs n >= 2");
  std::vector<ZClassSignature> out;
  const unsigned dim = static_cast<unsigned>(n + 1);
  for (unsigned kp = 0; 2 * kp <= dim; ++kp) {
    const auto parts = partitions_of(kp);
    const unsigned free = dim - 2 * kp;
    for (const auto& part : parts) {
      for (unsigned l = 1; l <= free; ++l) out.push_back({Kind::Elliptic, l, free - l, part});
      if (free >= 2)
        for (unsigned l = 0; 2 * l <= free - 2; ++l) out.push_back({Kind::Hyperbolic, l, free - 2 - l, part});
      for (unsigned l = 3; l <= free; ++l) out.push_back({Kind::Parabolic, l, free - l, part});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hypiso
