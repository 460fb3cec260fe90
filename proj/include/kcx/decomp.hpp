#pragma once

// Decomposition procedures for graded ordered groups and n-coefficient
// complexes: domination splitting, independent refinement, Tarski splitting,
// triple decomposition and refinement of whole systems of generators.
//
// Block sums and graded groups whose positivity of (g, s) depends only on the
// atom support of g are handled structurally; every result is re-verified
// before it is returned.

#include "kcx/complex.hpp"

#include <optional>
#include <vector>

namespace kcx {

/// Atoms of the even part: a basis of G0 whose nonnegative span is G0+.
std::vector<Vec> even_atoms(const GradedOrderedGroup &g, Budget &budget);
/// For each atom a, generators of { s : (a, s) >= 0 } inside the odd group.
std::vector<std::vector<Vec>> odd_faces(const GradedOrderedGroup &g, const std::vector<Vec> &atoms,
                                        Budget &budget);

/// g = g_1 + ... + g_m with g_i >= 0 and (g_i, s_i) >= 0.
std::vector<Vec> dominate_split(const GradedOrderedGroup &g, const Vec &total,
                                const std::vector<Vec> &odd, std::uint64_t budget);

struct IndependentRefinement {
  std::vector<std::vector<Vec>> subgroups; ///< H_j, by generators
  std::vector<Vec> parts;                  ///< x_j in H_j
};

IndependentRefinement independent_refine(const GradedOrderedGroup &g, const Vec &x,
                                         const std::vector<Vec> &evens, std::uint64_t budget);

/// Whether sum x_i = 0 with x_i in H_i forces every x_i = 0.
bool independent(const FGAbelianGroup &g, const std::vector<std::vector<Vec>> &subgroups);

/// b_0..b_n >= 0 with b = sum b_i and a = sum i*b_i.
std::vector<Vec> tarski_split(const OrderSpec &order, const Vec &a, const Vec &b, const Int &n);

/// Splits a positive triple along e = e_1 + ... + e_k into positive triples.
/// When odd_parts is given it fixes g_1..g_k.
std::vector<Triple> triple_split(const NCoefficientComplex &X, const Triple &t,
                                 const std::vector<Vec> &evens,
                                 const std::optional<std::vector<Vec>> &odd_parts,
                                 std::uint64_t budget);

struct SystemInput {
  std::vector<Vec> e, f;    ///< positive (e_i, f_i, 0)
  std::vector<Vec> x, z;    ///< x_j >= 0 and z_j <= x_j
  Matrix lambda, delta;     ///< k x r, nonnegative
};

struct SystemRefinement {
  std::vector<Vec> x, z, y;        ///< refined x, refined z, lifts y with beta(y) = z
  std::vector<std::size_t> parent; ///< index j of the original x_j each piece refines
  Matrix gamma, kappa, nmat;       ///< k x s
};

SystemRefinement system_refine(const NCoefficientComplex &X, const SystemInput &in,
                               std::uint64_t budget);

/// Recomputes both identities, the refinement sums, lift positivity and the
/// support condition; returns a description of the first violation.
std::optional<std::string> check_system_refinement(const NCoefficientComplex &X, const SystemInput &in,
                                                   const SystemRefinement &out, std::uint64_t budget);

} // namespace kcx
