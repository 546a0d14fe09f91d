#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hypiso/classifier.hpp"

namespace hypiso {

/// (type, l, m, partition of the rotation multiplicities). l is always the
/// full multiplicity of the eigenvalue 1, so parabolic signatures have
/// l >= 3; paper_l() gives the count beyond the unipotent 3-block.
struct ZClassSignature {
  Kind kind = Kind::Elliptic;
  unsigned l = 0;
  unsigned m = 0;
  std::vector<unsigned> partition;  // non-increasing

  /// Hyperbolic (l, m) swapped so that l <= m.
  ZClassSignature key() const;
  unsigned paper_l() const { return kind == Kind::Parabolic ? l - 3 : l; }
  unsigned k_prime() const;
  /// sum r_j + floor(m/2)
  unsigned rotatory_index() const { return k_prime() + m / 2; }
  bool inversion() const { return m % 2 == 1; }

  friend auto operator<=>(const ZClassSignature&, const ZClassSignature&) = default;
  friend bool operator==(const ZClassSignature&, const ZClassSignature&) = default;
};

std::string to_string(const ZClassSignature& sig);

ZClassSignature zclass_signature(const IsometryElement& t);
ZClassSignature zclass_signature(const Classification& c);

/// Throws DimensionMismatch.
bool same_zclass(const IsometryElement& a, const IsometryElement& b);

/// Throws InvalidSignature unless sig describes a z-class of I(H^n).
void validate_signature(const ZClassSignature& sig, std::size_t n);

enum class FactorKind {
  FullIsometry,  // I(1, d)
  Orthogonal,  // O(d)
  IdentityComponentIsometry,  // I_0(1, 1)
  Unitary,  // U(d)
  ParabolicStabilizer,  // R x (R^{d-2} x| O(d-2))
};

struct CentralizerFactor {
  FactorKind kind;
  unsigned d = 0;

  std::size_t dim() const;
  bool abelian() const;
  std::string name() const;
  friend bool operator==(const CentralizerFactor&, const CentralizerFactor&) = default;
};

struct CentralizerDescriptor {
  std::vector<CentralizerFactor> factors;
  std::size_t dim = 0;
  bool abelian() const;
};

CentralizerDescriptor centralizer_descriptor(const ZClassSignature& sig, std::size_t n);

/// Membership in the explicit list of generic z-classes.
bool is_generic(const ZClassSignature& sig, std::size_t n);

std::uint64_t partition_p(unsigned u);

struct CensusRow {
  std::size_t n = 0;
  std::uint64_t elliptic = 0;
  std::uint64_t hyperbolic = 0;
  std::uint64_t parabolic = 0;
  std::uint64_t total = 0;
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Closed-form counts. Throws RangeError for n < 2.
CensusRow count_zclasses(std::size_t n);

/// Every admissible normalized signature, sorted. Throws RangeError for n < 2.
std::vector<ZClassSignature> enumerate_zclasses(std::size_t n);

/// All partitions of u, each non-increasing, in lexicographically decreasing order.
std::vector<std::vector<unsigned>> partitions_of(unsigned u);

}  // namespace hypiso
