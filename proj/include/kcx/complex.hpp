#pragma once

// n-coefficient complexes G0 -> Gn -> G1 with their two graded orders, the
// three building blocks, direct sums, morphisms and the splitting normal form.

#include "kcx/order.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kcx {

struct BlockLabel {
  enum class Kind { C, DimDrop, Circle };
  Kind kind = Kind::C;
  Int n = 2;
  Int m = 0; ///< DimDrop only

  /// "C", "I<m>" or "S1"; the modulus n is carried by the complex.
  std::string to_string() const;
  bool operator==(const BlockLabel &o) const {
    return kind == o.kind && n == o.n && m == o.m;
  }
};

/// Coordinates a block occupies inside each group of a block sum.
struct BlockSpan {
  std::size_t g0 = 0, g0_len = 0;
  std::size_t gn = 0, gn_len = 0;
  std::size_t g1 = 0, g1_len = 0;
};

struct NCoefficientComplex {
  Int n;
  FGAbelianGroup G0, Gn, G1;
  GroupHom rho;  ///< G0 -> Gn
  GroupHom beta; ///< Gn -> G1
  GradedOrderedGroup star; ///< G0 (+) G1
  GradedOrderedGroup nat;  ///< G0 (+) Gn
  /// Filled for direct sums of building blocks, one entry per block.
  std::vector<BlockLabel> labels;
  std::vector<BlockSpan> spans;

  bool is_block_sum() const { return !labels.empty(); }
  std::size_t nblocks() const { return labels.size(); }
  std::string describe() const;
};

struct Triple {
  Vec x, y, z; ///< in G0, Gn, G1
};

NCoefficientComplex building_block(const BlockLabel &label);
NCoefficientComplex block_sum(const std::vector<BlockLabel> &labels);
NCoefficientComplex direct_sum(const std::vector<NCoefficientComplex> &summands);

struct AxiomsReport {
  std::vector<PropertyReport> items;
  bool all_pass() const;
  /// First failing item, if any.
  const PropertyReport *first_failure() const;
};

/// Exactness and the algebraic axioms are decided exactly; order axioms are
/// bounded evidence with witnesses on failure.
AxiomsReport verify_axioms(const NCoefficientComplex &X, std::uint64_t budget);

struct TriplePositivity {
  Verdict verdict = Verdict::Unknown;
  Positivity nat;  ///< (x, y) in the G0 (+) Gn order
  Positivity star; ///< (x, z) in the G0 (+) G1 order
};

TriplePositivity is_positive_triple(const NCoefficientComplex &X, const Triple &t, Budget &budget);
/// Yes/No as bool; Unknown raises BudgetExhausted.
bool positive_triple(const NCoefficientComplex &X, const Triple &t, Budget &budget);

/// Triples of the ambient G0 (+) Gn (+) G1 in canonical height order.
std::vector<Triple> triple_window(const NCoefficientComplex &X, std::size_t height, std::size_t limit);

struct ComplexMorphism {
  GroupHom theta0, thetan, theta1;

  Triple apply(const Triple &t) const;
  /// this o other
  ComplexMorphism after(const ComplexMorphism &other) const;
  static ComplexMorphism identity(const NCoefficientComplex &X);
  static ComplexMorphism zero(const NCoefficientComplex &src, const NCoefficientComplex &dst);
  static ComplexMorphism direct_sum(const std::vector<ComplexMorphism> &parts);
  bool operator==(const ComplexMorphism &o) const {
    return theta0 == o.theta0 && thetan == o.thetan && theta1 == o.theta1;
  }
};

struct MorphismReport {
  PropertyReport rho_square;
  PropertyReport beta_square;
  PropertyReport positivity;
  std::vector<Vec> ker0, kern, ker1;
  bool all_pass() const;
};

MorphismReport verify_morphism(const ComplexMorphism &m, const NCoefficientComplex &src,
                               const NCoefficientComplex &dst, std::uint64_t budget);

struct SplitResult {
  FGAbelianGroup R;   ///< G0 / n G0
  FGAbelianGroup B;   ///< G1[n]
  GroupHom iso;       ///< Gn -> R (+) B
  GroupHom iso_inverse;
  GroupHom quotient;  ///< G0 -> R
  GroupHom torsion_embedding; ///< B -> G1
  NCoefficientComplex normalized;
};

SplitResult split_coefficients(const NCoefficientComplex &X);

/// Completes a graded ordered group to a complex with Gn = G0/nG0 (+) G1[n].
NCoefficientComplex extend_to_complex(const GradedOrderedGroup &gstar, const Int &n);

/// Compares triple positivity in X and Y across a bijective morphism on a window.
PropertyReport compare_orders(const NCoefficientComplex &X, const NCoefficientComplex &Y,
                              const ComplexMorphism &iso, std::uint64_t budget);

} // namespace kcx
