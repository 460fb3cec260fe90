#include "doctest.h"

#include "kcx/realize.hpp"

using namespace kcx;

namespace {

BlockLabel C2{BlockLabel::Kind::C, 2, 0};
BlockLabel I2{BlockLabel::Kind::DimDrop, 2, 2};
BlockLabel S2{BlockLabel::Kind::Circle, 2, 0};

NCoefficientComplex strict_z_z2(const Int &n) {
  auto z = FGAbelianGroup::free(1);
  auto odd = FGAbelianGroup::cyclic(2);
  auto amb = FGAbelianGroup::direct_sum({z, odd});
  return extend_to_complex({z, odd, OrderSpec::strict_first(amb, 1, OrderSpec::standard(z))}, n);
}

GroupHom hom(const FGAbelianGroup &s, const FGAbelianGroup &t, Matrix m) { return GroupHom(s, t, std::move(m)); }

ComplexMorphism circle_map(const NCoefficientComplex &a, const NCoefficientComplex &b, const Matrix &m0,
                           const Matrix &mn, const Matrix &m1) {
  return {hom(a.G0, b.G0, m0), hom(a.Gn, b.Gn, mn), hom(a.G1, b.G1, m1)};
}

} // namespace

TEST_CASE("hit_positive follows the three constructions") {
  Budget b(100000);
  SUBCASE("circle block when f = 0") {
    auto X = building_block(S2);
    auto h = hit_positive(X, {make_vec({1}), make_vec({0}), make_vec({1})}, b);
    REQUIRE(h.H.labels.size() == 1);
    CHECK(h.H.labels[0] == S2);
    CHECK(h.preimage.x == make_vec({1}));
    CHECK(h.preimage.y == make_vec({0}));
    CHECK(h.preimage.z == make_vec({1}));
  }
  SUBCASE("dimension-drop block when g = 0 is the identity") {
    auto X = building_block(I2);
    auto h = hit_positive(X, {make_vec({1}), make_vec({0, 1}), make_vec({0})}, b);
    CHECK(h.H.labels == X.labels);
    CHECK(morphism_equal(h.theta, ComplexMorphism::identity(X)));
  }
  SUBCASE("mixed triple on a two-block sum") {
    auto X = block_sum({I2, S2});
    Triple t{make_vec({1, 1}), make_vec({0, 1, 0}), make_vec({0, 1})};
    auto h = hit_positive(X, t, b);
    auto img = h.theta.apply(h.preimage);
    CHECK(X.G0.equal(img.x, t.x));
    CHECK(X.Gn.equal(img.y, t.y));
    CHECK(X.G1.equal(img.z, t.z));
    CHECK(positive_triple(h.H, h.preimage, b));
    CHECK(verify_morphism(h.theta, h.H, X, 20000).all_pass());
  }
  SUBCASE("non-positive input is rejected") {
    auto X = building_block(C2);
    CHECK_THROWS_AS(hit_positive(X, {make_vec({-1}), make_vec({0}), Vec{}}, b), PreconditionError);
  }
}

TEST_CASE("factor_intertwiner controls kernels") {
  Budget b(100000);
  SUBCASE("identity") {
    auto G = block_sum({I2, C2});
    auto id = ComplexMorphism::identity(G);
    auto f = factor_intertwiner(G, id, G, b);
    CHECK(f.H.labels == G.labels);
    CHECK(morphism_equal(f.gamma, id));
    CHECK(morphism_equal(f.lambda, id));
  }
  SUBCASE("circle onto C kills G1") {
    auto G = building_block(S2), T = building_block(C2);
    auto theta = circle_map(G, T, {{1}}, {{1}}, Matrix(0, 1));
    auto f = factor_intertwiner(G, theta, T, b);
    CHECK(f.H.labels == T.labels);
    CHECK_FALSE(check_kernels(f.gamma, theta));
    auto k1 = hom_analyze(f.gamma.theta1).kernel;
    CHECK(G.G1.same_subgroup(k1, {make_vec({1})}));
    CHECK(hom_analyze(f.gamma.theta0).kernel.empty());
  }
  SUBCASE("diagonal into a doubled C block") {
    auto G = building_block(C2), T = block_sum({C2, C2});
    auto theta = circle_map(G, T, {{1}, {1}}, {{1}, {1}}, Matrix(0, 0));
    auto f = factor_intertwiner(G, theta, T, b);
    CHECK(f.H.labels == T.labels);
    CHECK(morphism_equal(f.gamma, theta));
    CHECK(morphism_equal(f.lambda, ComplexMorphism::identity(T)));
    CHECK(hom_analyze(f.gamma.theta0).kernel.empty());
    CHECK(hom_analyze(f.gamma.thetan).kernel.empty());
  }
  SUBCASE("kernel mismatch is detected") {
    auto G = building_block(S2), T = building_block(S2);
    auto theta = ComplexMorphism::identity(G);
    auto zero1 = theta;
    zero1.theta1 = GroupHom::zero(G.G1, T.G1);
    CHECK(check_kernels(zero1, theta));
  }
}

TEST_CASE("recognize_block_sum finds the dimension-drop block") {
  Budget b(200000);
  auto X = strict_z_z2(2);
  auto r = recognize_block_sum(X, b);
  REQUIRE(r);
  REQUIRE(r->H.labels.size() == 1);
  CHECK(r->H.labels[0] == I2);
  CHECK(compare_orders(r->H, X, r->iso, 50000).status != CheckStatus::Fail);
}

TEST_CASE("realize_limit hits the enumerated positives") {
  Budget b(2000000);
  SUBCASE("(C,2)") {
    auto X = building_block(C2);
    auto r = realize_limit(X, 10, b);
    CHECK(r.complete);
    REQUIRE(r.system.stages.size() == 10);
    for (auto &s : r.system.stages) CHECK(s.labels == X.labels);
    for (auto &c : r.system.connects) CHECK(morphism_equal(c, ComplexMorphism::identity(X)));
    CHECK_FALSE(check_realization(X, r, 20000));
  }
  SUBCASE("(I2,2) + (C,2)") {
    auto X = block_sum({I2, C2});
    auto r = realize_limit(X, 10, b);
    CHECK(r.complete);
    CHECK(r.hits.size() == 10);
    CHECK_FALSE(check_realization(X, r, 20000));
  }
  SUBCASE("extension of the strict (Z, Z/2)") {
    auto X = strict_z_z2(2);
    std::size_t streamed = 0;
    auto r = realize_limit(X, 10, b, [&](std::size_t, const NCoefficientComplex &) { ++streamed; });
    CHECK(r.complete);
    CHECK(streamed == 10);
    for (auto &s : r.system.stages) CHECK(s.labels == std::vector<BlockLabel>{I2});
    CHECK_FALSE(check_realization(X, r, 20000));
  }
}

TEST_CASE("enforce_large_denominators") {
  Budget b(10000);
  auto S = building_block(S2);
  auto SS = block_sum({S2, S2});
  SUBCASE("already satisfying") {
    auto d = circle_map(S, S, {{2}}, {{0}}, {{1}});
    BlockSystem sys{{S, S, S}, {d, d}};
    auto out = enforce_large_denominators(sys, b);
    CHECK(out.ok);
    CHECK(out.kept == std::vector<std::size_t>{0, 1, 2});
  }
  SUBCASE("all odd parts zero") {
    auto C = building_block(C2);
    auto id = ComplexMorphism::identity(C);
    BlockSystem sys{{C, C}, {id}};
    auto out = enforce_large_denominators(sys, b);
    CHECK(out.ok);
    CHECK(out.kept == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("all-ones circle pair is compressed") {
    auto ones = circle_map(SS, SS, {{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}, {{1, 1}, {1, 1}});
    BlockSystem sys{{SS, SS, SS}, {ones, ones}};
    CHECK(large_denominator_violation(ones, SS, SS));
    auto out = enforce_large_denominators(sys, b);
    CHECK(out.ok);
    CHECK(out.kept == std::vector<std::size_t>{0, 2});
    for (std::size_t i = 0; i < out.system.connects.size(); ++i)
      CHECK_FALSE(large_denominator_violation(out.system.connects[i], out.system.stages[i],
                                              out.system.stages[i + 1]));
  }
  SUBCASE("identity circle connects cannot be compressed") {
    auto id = ComplexMorphism::identity(S);
    BlockSystem sys{{S, S, S, S}, {id, id, id}};
    auto out = enforce_large_denominators(sys, b);
    CHECK_FALSE(out.ok);
    CHECK(out.note.find("multiplicity 1") != std::string::npos);
  }
}
