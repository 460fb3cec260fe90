#pragma once

// Realization of n-coefficient complexes as limits of building-block sums:
// hitting a positive triple, factoring through block sums with kernel control,
// the zig-zag inductive system, and compression to large denominators.

#include "kcx/complex.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kcx {

struct BlockSystem {
  std::vector<NCoefficientComplex> stages;
  std::vector<ComplexMorphism> connects; ///< stage i -> stage i+1
};

/// Connecting maps verified (squares exact, positivity bounded) and n-values
/// equal or forming a divisibility chain; returns the first violation.
std::optional<std::string> verify_system(const BlockSystem &S, std::uint64_t budget);

/// Equality of homomorphisms on canonical images of generators.
bool hom_equal(const GroupHom &a, const GroupHom &b);
bool morphism_equal(const ComplexMorphism &a, const ComplexMorphism &b);

struct HitResult {
  NCoefficientComplex H;
  ComplexMorphism theta; ///< H -> target
  Triple preimage;       ///< positive in H, theta(preimage) == triple
};

HitResult hit_positive(const NCoefficientComplex &target, const Triple &t, Budget &budget);

struct Factorization {
  NCoefficientComplex H;
  ComplexMorphism gamma;  ///< G -> H
  ComplexMorphism lambda; ///< H -> target
};

/// lambda o gamma == theta and ker gamma == ker theta.
Factorization factor_intertwiner(const NCoefficientComplex &G, const ComplexMorphism &theta,
                                 const NCoefficientComplex &target, Budget &budget);

/// Checks both kernel inclusions on generators; returns the first failure.
std::optional<std::string> check_kernels(const ComplexMorphism &gamma, const ComplexMorphism &theta);

struct BlockRecognition {
  NCoefficientComplex H;  ///< block sum
  ComplexMorphism iso;    ///< H -> target
};

/// Finds a block sum isomorphic to X: atoms of G0 give blocks, the odd face of
/// each atom decides C / S1 / I<m>. Order agreement is checked on a window.
std::optional<BlockRecognition> recognize_block_sum(const NCoefficientComplex &X, Budget &budget);

/// Nonzero positive triples of X in canonical height order, the first count.
std::vector<Triple> enumerate_positive(const NCoefficientComplex &X, std::size_t count, Budget &budget);

struct HitCertificate {
  std::size_t index = 0; ///< position in the enumeration
  std::size_t stage = 0;
  Triple triple;         ///< in the target
  Triple preimage;       ///< positive in the stage
};

struct RealizeResult {
  BlockSystem system;
  std::vector<ComplexMorphism> to_target; ///< stage i -> target
  std::vector<HitCertificate> hits;
  bool complete = true;
  std::string note;
};

using StageCallback = std::function<void(std::size_t, const NCoefficientComplex &)>;

RealizeResult realize_limit(const NCoefficientComplex &target, std::size_t steps, Budget &budget,
                            const StageCallback &on_stage = {});

/// Recomputes triangles, certificate images and certificate positivity.
std::optional<std::string> check_realization(const NCoefficientComplex &target, const RealizeResult &r,
                                             std::uint64_t budget);

/// Every block pair is zero on G1 or has G0 multiplicity at least 2. Returns
/// the first offending pair.
std::optional<std::string> large_denominator_violation(const ComplexMorphism &m,
                                                       const NCoefficientComplex &src,
                                                       const NCoefficientComplex &dst);

struct LargeDenominators {
  BlockSystem system;
  std::vector<std::size_t> kept; ///< original indices of the retained stages
  bool ok = true;
  std::string note;
};

LargeDenominators enforce_large_denominators(const BlockSystem &S, Budget &budget);

} // namespace kcx
