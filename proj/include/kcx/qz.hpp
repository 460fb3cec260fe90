#pragma once

// Varying coefficients: divisibility chains of levels, the coefficient-change
// maps between levels, Q/Z-type complexes represented stage by stage, and
// their realization by block sums of increasing level.

#include "kcx/realize.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace kcx {

using Rational = mpq_class;

/// Levels n_1, n_2, ... with n_i | n_{i+1}. Equal consecutive levels are
/// accepted so that a fixed-level complex can be staged trivially.
struct DeltaChain {
  std::vector<Int> levels;

  /// Throws PreconditionError naming the first non-dividing pair.
  void validate() const;
  bool strictly_increasing() const;
  /// 2!, 3!, ..., (count + 1)!
  static DeltaChain factorial(std::size_t count);
};

struct KappaMap {
  NCoefficientComplex target; ///< same K-data at the larger level
  ComplexMorphism map;
};

/// Even part times mn/m, coefficient part times mn/m on the G0/mG0 summands and
/// the inclusion on the torsion of G1, identity on G1.
KappaMap kappa_stage(const Int &m, const Int &mn, const NCoefficientComplex &X);

/// Columns reduced to canonical coordinates of the target.
GroupHom canonical_hom(const GroupHom &h);

/// Limit-level data a staged complex is built from: either the Q/Z-type
/// complex G0 -> G0 (x) Q -> G0 (x) Q/Z (+) tor G1 -> G1 of finitely generated
/// K-data, or one fixed-level complex.
struct NBoldDescriptor {
  enum class Kind { Rational, Fixed };
  Kind kind = Kind::Rational;
  GradedOrderedGroup kdata;
  NCoefficientComplex fixed;

  static NBoldDescriptor rational(GradedOrderedGroup g);
  static NBoldDescriptor fixed_level(NCoefficientComplex X);
  /// The Q/Z complex of a point: G0 = Z with the standard order, G1 = 0.
  static NBoldDescriptor point();
  static NBoldDescriptor direct_sum(const NBoldDescriptor &a, const NBoldDescriptor &b);

  /// Whether q (a vector over G0 (x) Q) maps into the n-torsion of the
  /// coefficient group, computed at the limit level.
  bool rho_preimage_contains(const Int &n, const std::vector<Rational> &q) const;
  std::string describe() const;
};

struct NBoldComplex {
  DeltaChain chain;
  std::vector<NCoefficientComplex> stages;
  std::vector<ComplexMorphism> connects;
  /// Stage i's G0 coordinate vector v stands for v / scale[i] in G0 (x) Q.
  std::vector<Int> scale;

  std::vector<Rational> to_rational(std::size_t stage, const Vec &x) const;
};

NBoldComplex stage_decomposition(const NBoldDescriptor &X, const DeltaChain &chain);

struct NBoldReport {
  std::vector<PropertyReport> items;
  bool all_pass() const;
  const PropertyReport *first_failure() const;
};

NBoldReport verify_nbold_axioms(const NBoldComplex &X, std::uint64_t budget);

struct VaryingRealization {
  BlockSystem system;
  std::vector<ComplexMorphism> to_stage; ///< H_i -> X_i, bijective
  std::vector<HitCertificate> hits;      ///< stage field names the level index
  bool complete = true;
  std::string note;
};

VaryingRealization realize_limit_varying(const NBoldComplex &X, std::size_t steps, Budget &budget);

/// Cells commute, even connects are divisible by the level ratio, and hit
/// certificates replay.
std::optional<std::string> check_varying_realization(const NBoldComplex &X, const VaryingRealization &r,
                                                     std::uint64_t budget);

} // namespace kcx
