#pragma once

// Positivity structures on finitely generated abelian groups and bounded,
// certificate-producing checkers for the classical order axioms.

#include "kcx/abelian.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kcx {

enum class OrderKind {
  Standard,       ///< coordinatewise on a free group
  SimplicialCone, ///< nonnegative integer combinations of generators
  StrictFirst,    ///< zero, or positive and nonzero on the first summand
  DirectSum,      ///< blockwise over a partition of the coordinates
  Quotient,       ///< images of positives under a surjection
  IdealGraded,    ///< (x, y) >= 0 iff x >= 0 and y in the subgroup attached to I(x)
  Intersection,   ///< positive under every listed projection
};

class OrderSpec;

/// Sends an order ideal I of the even group to the subgroup
/// phi(I) + sum of face_subgroups[i] over the coordinates e_i lying in I.
struct OddAssignment {
  GroupHom phi;
  std::vector<std::vector<Vec>> face_subgroups; ///< empty, or one list per even coordinate
};

class OrderSpec {
public:
  struct Part {
    std::vector<std::size_t> coords;
    std::shared_ptr<const OrderSpec> order; ///< ordered group on those coordinates
  };
  struct Term {
    GroupHom projection;
    std::shared_ptr<const OrderSpec> order; ///< order on projection.target()
  };

  static OrderSpec standard(const FGAbelianGroup &g);
  static OrderSpec cone(const FGAbelianGroup &g, std::vector<Vec> generators);
  /// The first `k` coordinates form the distinguished summand, ordered by `base`.
  static OrderSpec strict_first(const FGAbelianGroup &g, std::size_t k, const OrderSpec &base);
  static OrderSpec direct_sum(const FGAbelianGroup &g, std::vector<Part> parts);
  /// Throws PreconditionError unless h is surjective.
  static OrderSpec quotient(const GroupHom &h, const OrderSpec &source);
  static OrderSpec ideal_graded(const FGAbelianGroup &even, const FGAbelianGroup &odd,
                                const OrderSpec &even_order, OddAssignment assignment);
  static OrderSpec intersection(const FGAbelianGroup &g, std::vector<Term> terms);

  OrderKind kind() const { return kind_; }
  const FGAbelianGroup &group() const { return group_; }

  const std::vector<Vec> &generators() const { return gens_; }
  std::size_t strict_width() const { return width_; }
  const OrderSpec &base() const { return *base_; }
  const std::vector<Part> &parts() const { return parts_; }
  const GroupHom &surjection() const { return hom_; }
  const OrderSpec &source() const { return *base_; }
  const FGAbelianGroup &even_group() const { return even_; }
  const FGAbelianGroup &odd_group() const { return odd_; }
  const OrderSpec &even_order() const { return *base_; }
  const OddAssignment &assignment() const { return assign_; }
  const std::vector<Term> &terms() const { return terms_; }

  const std::optional<Vec> &functional_opt() const { return functional_; }
  const std::vector<Vec> &kernel() const { return kernel_; }
  bool graded_fast_path() const { return graded_fast_path_; }

  std::string describe() const;

private:
  OrderKind kind_ = OrderKind::Standard;
  FGAbelianGroup group_;
  std::vector<Vec> gens_;
  std::size_t width_ = 0;
  std::shared_ptr<const OrderSpec> base_;
  std::vector<Part> parts_;
  GroupHom hom_;
  FGAbelianGroup even_, odd_;
  OddAssignment assign_;
  std::vector<Term> terms_;
  std::optional<Vec> functional_;  // cone: strictly positive on free parts of generators
  std::vector<Vec> kernel_;        // quotient: kernel of the surjection
  bool graded_fast_path_ = false;  // quotient: id (+) h1 over an IdealGraded source
};

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

/// Evidence attached to a positivity verdict. `data` holds cone coefficients
/// ("cone"), a positive preimage ("lift") or subgroup coefficients ("span").
struct Certificate {
  std::string kind;
  Vec data;
  std::string note;
};

struct Positivity {
  Verdict verdict = Verdict::Unknown;
  Certificate certificate;
  explicit operator bool() const { return verdict == Verdict::Yes; }
};

Positivity is_positive(const OrderSpec &order, const Vec &v, Budget &budget);
/// Yes/No as a bool; Unknown raises BudgetExhausted.
bool positive(const OrderSpec &order, const Vec &v, Budget &budget);
/// Re-checks a "cone" certificate by pure arithmetic.
bool verify_cone_certificate(const OrderSpec &cone, const Vec &v, const Certificate &c);

/// Generators of the smallest order ideal containing the positive element x.
std::vector<Vec> order_ideal(const OrderSpec &order, const Vec &x, Budget &budget);

/// For an IdealGraded order: the odd subgroup attached to the even ideal
/// generated by even_ideal.
std::vector<Vec> assigned_subgroup(const OrderSpec &ideal_graded, const std::vector<Vec> &even_ideal);

OrderSpec quotient_order(const GroupHom &h, const OrderSpec &source);
/// A positive preimage of w under a Quotient order's surjection, if w is positive.
std::optional<Vec> quotient_lift(const OrderSpec &quotient, const Vec &w, Budget &budget);

/// All v with projection_k(v) in span(subgroups_k) for every k.
std::vector<Vec> preimage_intersection(const FGAbelianGroup &ambient,
                                       const std::vector<GroupHom> &projections,
                                       const std::vector<std::vector<Vec>> &subgroups);

struct GradedOrderedGroup {
  FGAbelianGroup even;
  FGAbelianGroup odd;
  OrderSpec order; ///< on even (+) odd, even coordinates first

  FGAbelianGroup ambient() const { return FGAbelianGroup::direct_sum({even, odd}); }
  Vec join(const Vec &x, const Vec &y) const { return concat(x, y); }
  bool contains(const Vec &x, const Vec &y, Budget &budget) const {
    return positive(order, join(x, y), budget);
  }
  /// The restriction of the order to the even summand.
  OrderSpec even_restriction() const;
};

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string to_string(CheckStatus s);

struct PropertyReport {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
  std::string note;
  std::size_t examined = 0;
};

PropertyReport check_graded(const GradedOrderedGroup &g, std::uint64_t budget);

struct OrderAxiomsReport {
  PropertyReport riesz_interpolation;
  PropertyReport riesz_decomposition;
  PropertyReport unperforated;
  PropertyReport weakly_unperforated;
};

/// Ungraded ordered group: the four classical properties, bounded.
OrderAxiomsReport check_order_axioms(const OrderSpec &order, std::uint64_t budget);
/// Graded group: Riesz properties of the even part together with splitting of
/// odd elements along even decompositions; unperforation of the even part;
/// weak unperforation of the whole group.
OrderAxiomsReport check_order_axioms(const GradedOrderedGroup &g, std::uint64_t budget);

/// Whether the order is coordinatewise on Z^k or a simplicial cone with an
/// integral basis; returns that basis (the atoms) when it is.
std::optional<std::vector<Vec>> simplicial_basis(const OrderSpec &order);

} // namespace kcx
