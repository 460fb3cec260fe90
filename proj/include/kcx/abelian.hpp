#pragma once

// Finitely generated abelian groups in cyclic-decomposition coordinates,
// homomorphisms given by integer matrices, and the Smith-normal-form based
// linear algebra that every kernel, image and quotient computation uses.

#include "kcx/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kcx {

struct SmithResult {
  Matrix S;    ///< diagonal, d_1 | d_2 | ..., nonnegative
  Matrix U;    ///< unimodular row transform
  Matrix V;    ///< unimodular column transform, U * M * V == S
  Matrix Vinv; ///< V^{-1}
  std::size_t rank = 0;
};

/// Smallest-absolute-value pivoting with ties broken by lowest row, then lowest
/// column, so results are reproducible.
SmithResult smith_normal_form(const Matrix &M);

/// Integer solution of M x = b, or nullopt when none exists.
std::optional<Vec> solve_linear(const Matrix &M, const Vec &b);

/// Basis of the integer null space { x : M x = 0 }.
std::vector<Vec> integer_kernel(const Matrix &M);

/// Direct sum of cyclic groups Z/d_i with d_i = 0 meaning Z. Elements are
/// coordinate vectors reduced modulo each positive modulus.
class FGAbelianGroup {
public:
  FGAbelianGroup() = default;
  /// Each modulus is 0 (free) or >= 2.
  explicit FGAbelianGroup(std::vector<Int> moduli);

  static FGAbelianGroup free(std::size_t rank);
  static FGAbelianGroup cyclic(const Int &d);
  static FGAbelianGroup direct_sum(const std::vector<FGAbelianGroup> &parts);
  /// Group Z^g / (row span of relations); normalized through Smith normal form.
  /// The matrix taking presentation coordinates to normalized coordinates is
  /// kept in presentation_map().
  static FGAbelianGroup from_presentation(const Matrix &relations);

  std::size_t ngens() const { return moduli_.size(); }
  const std::vector<Int> &moduli() const { return moduli_; }
  const Int &modulus(std::size_t i) const { return moduli_[i]; }
  bool is_free_coord(std::size_t i) const { return moduli_[i] == 0; }

  std::size_t rank() const;
  /// Invariant factors d_1 | d_2 | ... (each >= 2) of the torsion part.
  std::vector<Int> invariant_factors() const;
  /// Relation matrix this group was built from (diagonal for direct sums).
  const Matrix &presentation() const { return presentation_; }
  const Matrix &presentation_map() const { return presentation_map_; }

  bool is_trivial() const { return moduli_.empty(); }
  bool is_finite() const;
  /// Number of elements; throws for infinite groups.
  Int order() const;

  Vec zero() const { return Vec(ngens()); }
  Vec unit(std::size_t i) const;
  Vec canonical(const Vec &v) const;
  bool contains_canonical(const Vec &v) const;
  bool equal(const Vec &a, const Vec &b) const;
  Vec add(const Vec &a, const Vec &b) const;
  Vec sub(const Vec &a, const Vec &b) const;
  Vec neg(const Vec &a) const;
  Vec mul(const Int &k, const Vec &a) const;
  /// Order of an element; 0 for elements of infinite order.
  Int element_order(const Vec &v) const;

  /// Whether x lies in the subgroup generated by gens.
  bool in_span(const std::vector<Vec> &gens, const Vec &x) const;
  /// Integer coefficients c with sum c_i gens_i == x.
  std::optional<Vec> span_coefficients(const std::vector<Vec> &gens,
                                       const Vec &x) const;
  bool same_subgroup(const std::vector<Vec> &a, const std::vector<Vec> &b) const;
  /// Canonicalized, zero-free, duplicate-free copy of a generator list.
  std::vector<Vec> clean_generators(const std::vector<Vec> &gens) const;

  /// Height used by all canonical enumerations: sum of |free coordinates| plus
  /// the canonical residues of torsion coordinates.
  Int height(const Vec &v) const;
  /// All elements of exactly the given height, lexicographically ordered.
  std::vector<Vec> elements_of_height(std::size_t h) const;
  /// Elements of height <= max_height in canonical order, at most limit of them.
  std::vector<Vec> elements_up_to_height(std::size_t max_height,
                                         std::size_t limit) const;

  std::string to_string() const;
  bool operator==(const FGAbelianGroup &o) const { return moduli_ == o.moduli_; }

private:
  std::vector<Int> moduli_;
  Matrix presentation_;
  Matrix presentation_map_;
};

/// Homomorphism given by its action on generators: column j is the image of
/// source generator j.
class GroupHom {
public:
  GroupHom() = default;
  GroupHom(FGAbelianGroup source, FGAbelianGroup target, Matrix matrix);

  static GroupHom identity(const FGAbelianGroup &g);
  static GroupHom zero(const FGAbelianGroup &source, const FGAbelianGroup &target);
  static GroupHom direct_sum(const std::vector<GroupHom> &parts);

  const FGAbelianGroup &source() const { return source_; }
  const FGAbelianGroup &target() const { return target_; }
  const Matrix &matrix() const { return matrix_; }

  Vec apply(const Vec &x) const;
  /// this o other
  GroupHom after(const GroupHom &other) const;
  GroupHom operator+(const GroupHom &o) const;
  bool well_defined() const;
  bool is_zero() const;
  bool operator==(const GroupHom &o) const;
  /// Inverse of a bijective homomorphism; throws PreconditionError otherwise.
  GroupHom inverse() const;

private:
  FGAbelianGroup source_;
  FGAbelianGroup target_;
  Matrix matrix_;
};

struct HomAnalysis {
  bool well_defined = true;
  /// Index of a source generator whose relation does not map to zero.
  std::optional<std::size_t> bad_relation;
  std::vector<Vec> kernel;
  std::vector<Vec> image;
  bool injective = false;
  bool surjective = false;
};

HomAnalysis hom_analyze(const GroupHom &h);

/// Preimage of a single element: some x with h(x) == y, or nullopt.
std::optional<Vec> preimage(const GroupHom &h, const Vec &y);

struct BocksteinGroups {
  FGAbelianGroup quotient;       ///< G / nG
  GroupHom quotient_map;         ///< G -> G / nG
  std::vector<Vec> torsion_gens; ///< generators of G[n] inside G
  FGAbelianGroup torsion_group;  ///< abstract group isomorphic to G[n]
  GroupHom torsion_embedding;    ///< torsion_group -> G
};

BocksteinGroups bockstein_groups(const FGAbelianGroup &g, const Int &n);

} // namespace kcx
