#include "doctest.h"
#include "kcx/order.hpp"

using namespace kcx;

namespace {

FGAbelianGroup Z(std::size_t k = 1) { return FGAbelianGroup::free(k); }
FGAbelianGroup Zn(long n) { return FGAbelianGroup::cyclic(n); }
auto sp(const OrderSpec &o) { return std::make_shared<const OrderSpec>(o); }

OrderSpec strict_z_z2() {
  auto g = FGAbelianGroup::direct_sum({Z(), Zn(2)});
  return OrderSpec::strict_first(g, 1, OrderSpec::standard(Z()));
}

} // namespace

TEST_CASE("strict order") {
  Budget b;
  auto o = strict_z_z2();
  CHECK(positive(o, make_vec({1, 1}), b));
  CHECK(positive(o, make_vec({1, 0}), b));
  CHECK_FALSE(positive(o, make_vec({0, 1}), b));
  CHECK(positive(o, make_vec({0, 0}), b));
  CHECK_FALSE(positive(o, make_vec({-1, 0}), b));
}

TEST_CASE("simplicial cone membership with certificates") {
  Budget b;
  auto cone = OrderSpec::cone(Z(2), {make_vec({1, 1}), make_vec({1, -1})});
  auto r = is_positive(cone, make_vec({2, 0}), b);
  REQUIRE(r.verdict == Verdict::Yes);
  CHECK(r.certificate.data == make_vec({1, 1}));
  CHECK(verify_cone_certificate(cone, make_vec({2, 0}), r.certificate));
  auto n = is_positive(cone, make_vec({0, 1}), b);
  CHECK(n.verdict == Verdict::No);
  CHECK_FALSE(n.certificate.note.empty());
  // Oracle: (a, c) lies in the cone iff a >= |c| and a = c mod 2.
  for (long a = -3; a <= 3; ++a)
    for (long c = -3; c <= 3; ++c) {
      bool want = a >= std::labs(c) && (a - c) % 2 == 0;
      CHECK(positive(cone, make_vec({a, c}), b) == want);
    }
}

TEST_CASE("cone without a derivable bound is unknown") {
  Budget b;
  auto cone = OrderSpec::cone(Z(1), {make_vec({1}), make_vec({-1})});
  auto r = is_positive(cone, make_vec({1}), b);
  CHECK(r.verdict == Verdict::Unknown);
  Budget zero(0);
  CHECK_THROWS_AS(is_positive(strict_z_z2(), make_vec({1, 0}), zero), PreconditionError);
}

TEST_CASE("order ideals") {
  Budget b;
  auto z = OrderSpec::standard(Z());
  CHECK(Z().same_subgroup(order_ideal(z, make_vec({1}), b), {make_vec({1})}));
  auto z2 = OrderSpec::standard(Z(2));
  auto I = order_ideal(z2, make_vec({1, 0}), b);
  CHECK(Z(2).same_subgroup(I, {make_vec({1, 0})}));
  CHECK(order_ideal(z2, make_vec({0, 0}), b).empty());
  CHECK_THROWS_AS(order_ideal(z2, make_vec({-1, 0}), b), PreconditionError);
}

TEST_CASE("quotient orders and lifts") {
  Budget b;
  auto z = OrderSpec::standard(Z());
  auto red = OrderSpec::quotient(GroupHom(Z(), Zn(2), {{1}}), z);
  CHECK(positive(red, make_vec({0}), b));
  CHECK(positive(red, make_vec({1}), b));

  auto proj = GroupHom(Z(2), Z(), {{1, 0}});
  auto q = quotient_order(proj, OrderSpec::standard(Z(2)));
  for (long n = -3; n <= 3; ++n) {
    CHECK(positive(q, make_vec({n}), b) == (n >= 0));
    auto lift = quotient_lift(q, make_vec({n}), b);
    CHECK(lift.has_value() == (n >= 0));
    if (lift) {
      CHECK(proj.apply(*lift) == make_vec({n}));
      CHECK(positive(OrderSpec::standard(Z(2)), *lift, b));
    }
  }
  CHECK_THROWS_AS(OrderSpec::quotient(GroupHom(Z(), Z(), {{2}}), z), PreconditionError);
}

TEST_CASE("ideal graded order with identity assignment") {
  Budget b;
  auto g0 = Z(2);
  auto o = OrderSpec::ideal_graded(g0, g0, OrderSpec::standard(g0), {GroupHom::identity(g0), {}});
  CHECK(positive(o, make_vec({1, 0, 5, 0}), b));
  CHECK_FALSE(positive(o, make_vec({1, 0, 0, 1}), b));
  CHECK(positive(o, make_vec({1, 2, -3, 7}), b));
  CHECK_FALSE(positive(o, make_vec({0, 0, 1, 0}), b));
}

TEST_CASE("check_graded") {
  auto g = FGAbelianGroup::direct_sum({Z(), Zn(2)});
  GradedOrderedGroup strict{Z(), Zn(2), strict_z_z2()};
  CHECK(check_graded(strict, 10000).status == CheckStatus::Pass);

  auto ideal = OrderSpec::ideal_graded(Z(), Zn(2), OrderSpec::standard(Z()),
                                       {GroupHom(Z(), Zn(2), {{1}}), {}});
  CHECK(check_graded({Z(), Zn(2), ideal}, 10000).status == CheckStatus::Pass);

  // Only y = 1 is allowed over x = 1: closure under y - y' fails.
  GradedOrderedGroup broken{Z(), Zn(2), OrderSpec::cone(g, {make_vec({1, 1})})};
  auto r = check_graded(broken, 10000);
  REQUIRE(r.status == CheckStatus::Fail);
  CHECK(r.witness.find("is not positive") != std::string::npos);
  Budget b;
  CHECK(positive(broken.order, make_vec({1, 1}), b));
  CHECK_FALSE(positive(broken.order, make_vec({1, 0}), b));
}

TEST_CASE("order axioms") {
  auto z = check_order_axioms(OrderSpec::standard(Z()), 10000);
  CHECK(z.unperforated.status == CheckStatus::Pass);
  CHECK(z.riesz_interpolation.status == CheckStatus::Pass);
  CHECK(z.riesz_decomposition.status == CheckStatus::Pass);
  CHECK(z.weakly_unperforated.status == CheckStatus::Pass);

  auto perf = check_order_axioms(OrderSpec::cone(Z(), {make_vec({2}), make_vec({3})}), 10000);
  CHECK(perf.unperforated.status == CheckStatus::Fail);
  CHECK(perf.unperforated.witness.find("m = 2, x = (1)") != std::string::npos);
  CHECK(perf.weakly_unperforated.status == CheckStatus::Fail);

  GradedOrderedGroup block{Z(), Zn(2), strict_z_z2()};
  auto g = check_order_axioms(block, 10000);
  CHECK(g.weakly_unperforated.status == CheckStatus::Pass);
  CHECK(g.riesz_interpolation.status == CheckStatus::Pass);
  CHECK(g.unperforated.status == CheckStatus::Pass);
}
