#pragma once

// The Dadarlat-Loring group at n = 2: triadic elements with almost-everywhere
// prescribed coordinates, the epsilon-parametrized orders on the coefficient
// group, finite window complexes, and bounded search for equivalence of
// epsilon sequences under shift, flip, mask and reflect.

#include "kcx/complex.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kcx {

/// (x, y_i) with y_i = x * 3^|i| except at the listed indices.
struct DLElement {
  mpq_class x;
  std::map<long, Int> exceptions;

  /// y_i; throws PreconditionError where the default is not an integer.
  Int y(long i) const;
  std::string to_string() const;
  static DLElement parse(const std::string &s);
  bool operator==(const DLElement &o) const { return x == o.x && exceptions == o.exceptions; }
};

/// Drops exceptions equal to the default and rejects non-integral defaults.
DLElement dl_canonicalize(const DLElement &e);
DLElement dl_add(const DLElement &a, const DLElement &b);
DLElement dl_neg(const DLElement &a);

/// ((a, b_i), c) with b_i = a except on `flips`.
struct REBElement {
  int a = 0;
  std::set<long> flips;
  int c = 0;

  int b(long i) const { return flips.count(i) ? 1 - a : a; }
  std::string to_string() const;
  static REBElement parse(const std::string &s);
  bool operator==(const REBElement &o) const { return a == o.a && flips == o.flips && c == o.c; }
};

/// rho(x, y_i) = (parity of the numerator of x, y_i mod 2), c = 0.
REBElement dl_rho(const DLElement &e);

/// A bit sequence indexed by Z: `left` repeats below `start`, `mid` occupies
/// [start, start + |mid|), `right` repeats from there on. Tail words are read
/// at i mod their length, so shifting rotates them.
struct EpsilonSeq {
  std::string left = "0";
  std::vector<int> mid;
  long start = 0;
  std::string right = "0";

  int bit(long i) const;
  long end() const { return start + static_cast<long>(mid.size()); }
  /// Smallest tail words and the shortest middle.
  EpsilonSeq canonical() const;
  /// Largest |i| inside the middle window (0 when empty).
  long radius() const;
  std::string to_string() const;
  static EpsilonSeq parse(const std::string &s);
  bool operator==(const EpsilonSeq &o) const;

  static EpsilonSeq zero();
  static EpsilonSeq ones();
  /// 1 for j > 0, 0 for j <= 0.
  static EpsilonSeq sign_step();
  static EpsilonSeq delta(long j);
  /// 1 for |j| > N.
  static EpsilonSeq big_delta(long N);
};

/// u > 0, or u = 0 and t = 0.
bool dl_dominates(const mpq_class &u, int t);

/// Nat order: x >= 0, y_i >= 0, x |- a, x |- c and y_i |- b_i + eps_i c.
bool dl_is_positive(const EpsilonSeq &eps, const DLElement &g, const REBElement &r);
/// Adds the star clause for an odd component z in Z/2: x |- z.
bool dl_is_positive(const EpsilonSeq &eps, const DLElement &g, const REBElement &r, int z);
/// The first failing clause, or nullopt when the element is positive.
std::optional<std::string> dl_positivity_failure(const EpsilonSeq &eps, const DLElement &g,
                                                 const REBElement &r, int z);

/// Indices |i| <= W. G0 coordinates (u, y_-W .. y_W) with x = u / 3^(W+1);
/// Gn coordinates (a, b_-W .. b_W, c); G1 = Z/2.
NCoefficientComplex dl_build_complex_window(const EpsilonSeq &eps, long W);

struct DLWindowElement {
  DLElement g;
  REBElement r;
  int z = 0;
};
/// Reads a window triple as DL data.
DLWindowElement dl_from_window(long W, const Triple &t);

struct EpsilonMove {
  enum class Kind { Shift, Flip, Mask, Reflect };
  Kind kind = Kind::Flip;
  long k = 0;                ///< shift amount or mask radius
  std::vector<int> r_prefix; ///< reflect: r_0 .. r_{L-1}
  int r_tail = 0;            ///< reflect: r_m for m >= L

  std::string to_string() const;
  /// Inverse of to_string.
  static EpsilonMove parse(const std::string &s);
  static EpsilonMove shift(long k);
  static EpsilonMove flip();
  static EpsilonMove mask(long N);
  static EpsilonMove reflect(std::vector<int> prefix, int tail);
};

EpsilonSeq epsilon_move(const EpsilonSeq &s, const EpsilonMove &m);

struct EquivStep {
  EpsilonMove move;
  bool inverse = false; ///< result is a preimage of the current sequence
  EpsilonSeq result;
};

struct EquivSearch {
  bool found = false;
  std::vector<EquivStep> certificate;
  std::size_t explored = 0;
  bool budget_exhausted = false;
};

EquivSearch epsilon_equiv_search(const EpsilonSeq &s1, const EpsilonSeq &s2, std::size_t depth, Budget &budget);

/// Replays each step from s1 and checks the end point is s2.
bool replay_certificate(const EpsilonSeq &s1, const EpsilonSeq &s2, const std::vector<EquivStep> &cert);

} // namespace kcx
