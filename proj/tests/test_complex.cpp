#include "doctest.h"
#include "kcx/complex.hpp"

#include <chrono>

using namespace kcx;

namespace {

BlockLabel C(long n) { return {BlockLabel::Kind::C, n, 0}; }
BlockLabel I(long m, long n) { return {BlockLabel::Kind::DimDrop, n, m}; }
BlockLabel S(long n) { return {BlockLabel::Kind::Circle, n, 0}; }

void require_pass(const AxiomsReport &r) {
  for (auto &i : r.items) {
    INFO(i.name << ": " << i.witness << " " << i.note);
    CHECK(i.status == CheckStatus::Pass);
  }
}

} // namespace

TEST_CASE("building blocks have the displayed maps") {
  auto c = building_block(C(2));
  CHECK(c.G1.is_trivial());
  CHECK(c.rho.apply(make_vec({1})) == make_vec({1}));
  auto d = building_block(I(2, 2));
  CHECK(d.rho.apply(make_vec({1})) == make_vec({1, 0}));
  CHECK(d.beta.apply(make_vec({0, 1})) == make_vec({1}));
  CHECK(d.beta.apply(make_vec({1, 0})) == make_vec({0}));
  auto s = building_block(S(3));
  CHECK(s.beta.is_zero());
  CHECK(s.G1.rank() == 1);
  CHECK_THROWS_AS(building_block(I(4, 6)), PreconditionError);
}

TEST_CASE("building blocks satisfy the axioms") {
  for (long n : {2, 3, 4, 6}) {
    require_pass(verify_axioms(building_block(C(n)), 10000));
    require_pass(verify_axioms(building_block(S(n)), 10000));
    for (long m = 2; m <= n; ++m)
      if (n % m == 0) require_pass(verify_axioms(building_block(I(m, n)), 10000));
  }
}

TEST_CASE("direct sums") {
  auto x = direct_sum({building_block(C(2)), building_block(C(2))});
  CHECK(x.G0.rank() == 2);
  CHECK(x.Gn.moduli() == std::vector<Int>{Int(2), Int(2)});
  require_pass(verify_axioms(x, 10000));
  CHECK_THROWS_AS(direct_sum({building_block(C(2)), building_block(S(3))}), PreconditionError);
  CHECK_THROWS_AS(direct_sum({}), PreconditionError);
  auto one = direct_sum({building_block(S(2))});
  CHECK(one.labels.size() == 1);

  // Positivity in a sum is blockwise.
  auto y = block_sum({I(2, 2), S(2)});
  require_pass(verify_axioms(y, 10000));
  Budget b;
  auto d = building_block(I(2, 2)), s = building_block(S(2));
  for (auto &t1 : triple_window(d, 2, 30))
    for (auto &t2 : triple_window(s, 2, 30)) {
      Triple t{concat(t1.x, t2.x), concat(t1.y, t2.y), concat(t1.z, t2.z)};
      CHECK(positive_triple(y, t, b) == (positive_triple(d, t1, b) && positive_triple(s, t2, b)));
    }
}

TEST_CASE("axiom failures carry witnesses") {
  NCoefficientComplex x;
  x.n = 2;
  x.G0 = FGAbelianGroup::free(1);
  x.Gn = FGAbelianGroup::cyclic(4);
  x.G1 = FGAbelianGroup(std::vector<Int>{});
  x.rho = GroupHom(x.G0, x.Gn, {{1}});
  x.beta = GroupHom(x.Gn, x.G1, Matrix(0, 1));
  auto so = OrderSpec::standard(x.G0);
  x.star = {x.G0, x.G1, OrderSpec::strict_first(x.G0, 1, so)};
  x.nat = {x.G0, x.Gn, OrderSpec::strict_first(FGAbelianGroup::direct_sum({x.G0, x.Gn}), 1, so)};
  auto r = verify_axioms(x, 10000);
  auto *f = r.first_failure();
  REQUIRE(f);
  CHECK(f->name == "n_annihilates_Gn");
  CHECK(f->witness.rfind("(1)", 0) == 0);

  auto c = building_block(C(2));
  c.G1 = FGAbelianGroup::cyclic(2);
  c.beta = GroupHom(c.Gn, c.G1, {{1}});
  c.star = {c.G0, c.G1, OrderSpec::strict_first(FGAbelianGroup::direct_sum({c.G0, c.G1}), 1, so)};
  auto r2 = verify_axioms(c, 10000);
  REQUIRE(r2.first_failure());
  CHECK(r2.first_failure()->name == "exactness");
}

TEST_CASE("triple positivity") {
  Budget b;
  auto s = building_block(S(2));
  CHECK(positive_triple(s, {make_vec({1}), make_vec({1}), make_vec({5})}, b));
  CHECK_FALSE(positive_triple(s, {make_vec({0}), make_vec({1}), make_vec({0})}, b));
  CHECK(positive_triple(s, {make_vec({0}), make_vec({0}), make_vec({0})}, b));
}

TEST_CASE("morphisms") {
  auto c = building_block(C(2));
  auto id = verify_morphism(ComplexMorphism::identity(c), c, c, 10000);
  CHECK(id.all_pass());
  CHECK(id.ker0.empty());
  CHECK(id.kern.empty());

  auto s = building_block(S(2));
  ComplexMorphism m{GroupHom::identity(c.G0), GroupHom::identity(c.Gn), GroupHom::zero(c.G1, s.G1)};
  CHECK(verify_morphism(m, c, s, 10000).all_pass());

  ComplexMorphism bad{GroupHom::identity(c.G0), GroupHom::zero(c.Gn, c.Gn), GroupHom::identity(c.G1)};
  auto r = verify_morphism(bad, c, c, 10000);
  CHECK(r.rho_square.status == CheckStatus::Fail);
  CHECK(r.rho_square.witness.rfind("(1)", 0) == 0);
  REQUIRE(r.kern.size() == 1);
  CHECK(is_zero(bad.thetan.apply(r.kern[0])));

  // Doubling on Z is positive and its kernel generators vanish.
  auto d = building_block(I(2, 2));
  ComplexMorphism dbl{GroupHom(d.G0, d.G0, {{2}}), GroupHom(d.Gn, d.Gn, {{0, 0}, {0, 0}}),
                      GroupHom(d.G1, d.G1, {{0}})};
  auto rd = verify_morphism(dbl, d, d, 10000);
  CHECK(rd.all_pass());
  for (auto &k : rd.kern) CHECK(is_zero(dbl.thetan.apply(k)));
  CHECK_THROWS_AS(verify_morphism(dbl, d, c, 10000), DimensionError);
}

TEST_CASE("coefficient splitting") {
  auto d = split_coefficients(building_block(I(2, 2)));
  CHECK(d.R.moduli() == std::vector<Int>{Int(2)});
  CHECK(d.B.moduli() == std::vector<Int>{Int(2)});
  CHECK(d.iso.matrix() == Matrix::identity(2));
  auto s = split_coefficients(building_block(S(2)));
  CHECK(s.R.moduli() == std::vector<Int>{Int(2)});
  CHECK(s.B.is_trivial());
  auto c = split_coefficients(building_block(C(3)));
  CHECK(c.R.moduli() == std::vector<Int>{Int(3)});
  CHECK(c.B.is_trivial());

  // Round trip and the normal-form maps on a mixed sum.
  auto x = block_sum({I(2, 4), S(4), C(4), I(4, 4)});
  auto sp = split_coefficients(x);
  CHECK(sp.iso_inverse.after(sp.iso) == GroupHom::identity(x.Gn));
  const auto &N = sp.normalized;
  for (std::size_t i = 0; i < x.G0.ngens(); ++i) {
    Vec e = x.G0.unit(i);
    CHECK(N.rho.apply(e) == concat(sp.quotient.apply(e), sp.B.zero()));
  }
  for (std::size_t j = 0; j < N.Gn.ngens(); ++j) {
    Vec u = N.Gn.unit(j);
    Vec b = slice(u, sp.R.ngens(), sp.B.ngens());
    CHECK(N.beta.apply(u) == sp.torsion_embedding.apply(b));
  }
  require_pass(verify_axioms(N, 10000));
}

TEST_CASE("extension of a graded group to a complex") {
  auto z = FGAbelianGroup::free(1);
  auto strict = [&](const FGAbelianGroup &odd) {
    auto amb = FGAbelianGroup::direct_sum({z, odd});
    return GradedOrderedGroup{z, odd, OrderSpec::strict_first(amb, 1, OrderSpec::standard(z))};
  };
  struct Case {
    FGAbelianGroup odd;
    BlockLabel label;
  };
  for (auto &k : {Case{FGAbelianGroup::cyclic(2), I(2, 2)}, Case{FGAbelianGroup(std::vector<Int>{}), C(2)},
                  Case{z, S(2)}}) {
    auto X = extend_to_complex(strict(k.odd), 2);
    auto Y = building_block(k.label);
    REQUIRE(X.Gn == Y.Gn);
    require_pass(verify_axioms(X, 10000));
    auto r = compare_orders(X, Y, ComplexMorphism::identity(Y), 20000);
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.examined >= 12);
  }
}
