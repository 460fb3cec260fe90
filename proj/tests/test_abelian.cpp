#include "doctest.h"
#include "kcx/abelian.hpp"

using namespace kcx;

namespace {

// Product of the nonzero diagonal entries equals the gcd of maximal minors
// only for square full-rank input; here we compare against hand results and
// re-check U*M*V == S and unimodularity independently.
void check_smith(const Matrix &M, const std::vector<long> &diag) {
  auto r = smith_normal_form(M);
  CHECK(r.U * M * r.V == r.S);
  CHECK(r.V * r.Vinv == Matrix::identity(M.cols()));
  Int du = r.U.determinant();
  Int dv = r.V.determinant();
  CHECK(abs(du) == 1);
  CHECK(abs(dv) == 1);
  for (std::size_t i = 0; i < std::min(M.rows(), M.cols()); ++i) {
    long want = i < diag.size() ? diag[i] : 0;
    CHECK(r.S(i, i) == want);
  }
}

} // namespace

TEST_CASE("smith normal form of small matrices") {
  check_smith({{2, 0}, {0, 3}}, {1, 6});
  check_smith({{4, 6}}, {2});
  check_smith({{0}}, {0});
  check_smith({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, {2, 6, 12});
  check_smith({{0, 0}, {0, 5}}, {5});
}

TEST_CASE("canonical forms") {
  FGAbelianGroup g({Int(0), Int(2)});
  CHECK(g.canonical(make_vec({5, 3})) == make_vec({5, 1}));
  CHECK(g.canonical(make_vec({-1, -1})) == make_vec({-1, 1}));
  FGAbelianGroup z6 = FGAbelianGroup::cyclic(6);
  CHECK(z6.canonical(make_vec({-7})) == make_vec({5}));
  CHECK(FGAbelianGroup::cyclic(1).is_trivial());
  CHECK_THROWS_AS(FGAbelianGroup({Int(1)}), PreconditionError);
}

TEST_CASE("solve_linear") {
  auto x = solve_linear({{1, 2}, {3, 4}}, make_vec({1, 1}));
  REQUIRE(x);
  CHECK(*x == make_vec({-1, 1}));
  CHECK_FALSE(solve_linear({{2}}, make_vec({1})));
  auto k = integer_kernel({{1, 1}});
  REQUIRE(k.size() == 1);
  CHECK(Matrix({{1, 1}}) * k[0] == make_vec({0}));
}

TEST_CASE("presentation normalization") {
  auto g = FGAbelianGroup::from_presentation({{2, 0}, {0, 3}});
  CHECK(g.invariant_factors() == std::vector<Int>{Int(6)});
  CHECK(g.order() == 6);
  auto h = FGAbelianGroup::from_presentation({{2, 4}});
  CHECK(h.rank() == 1);
  CHECK(h.invariant_factors() == std::vector<Int>{Int(2)});
}

TEST_CASE("homomorphism analysis") {
  auto z = FGAbelianGroup::free(1);
  auto z2 = FGAbelianGroup::cyclic(2);
  auto q = hom_analyze(GroupHom(z, z2, {{1}}));
  CHECK(q.well_defined);
  CHECK(q.surjective);
  CHECK_FALSE(q.injective);
  REQUIRE(q.kernel.size() == 1);
  CHECK(abs(q.kernel[0][0]) == 2);

  auto bad = hom_analyze(GroupHom(z2, z, {{1}}));
  CHECK_FALSE(bad.well_defined);
  REQUIRE(bad.bad_relation);
  CHECK(*bad.bad_relation == 0);

  auto inc = GroupHom(z2, FGAbelianGroup::cyclic(4), {{2}});
  CHECK(inc.well_defined());
  auto a = hom_analyze(inc);
  CHECK(a.injective);
  CHECK_FALSE(a.surjective);
  auto pre = preimage(inc, make_vec({2}));
  REQUIRE(pre);
  CHECK(*pre == make_vec({1}));
  CHECK_FALSE(preimage(inc, make_vec({1})));
}

TEST_CASE("bockstein groups") {
  auto b = bockstein_groups(FGAbelianGroup::cyclic(6), 2);
  REQUIRE(b.torsion_gens.size() == 1);
  CHECK(b.torsion_gens[0] == make_vec({3}));
  CHECK(b.quotient.moduli() == std::vector<Int>{Int(2)});
  auto f = bockstein_groups(FGAbelianGroup::free(2), 3);
  CHECK(f.torsion_gens.empty());
  CHECK(f.quotient.moduli() == std::vector<Int>{Int(3), Int(3)});
  CHECK_THROWS_AS(bockstein_groups(FGAbelianGroup::free(1), 1), PreconditionError);
}

TEST_CASE("enumeration by height") {
  auto g = FGAbelianGroup({Int(0), Int(2)});
  auto h1 = g.elements_of_height(1);
  CHECK(h1 == std::vector<Vec>{make_vec({-1, 0}), make_vec({0, 1}), make_vec({1, 0})});
  CHECK(g.elements_up_to_height(1, 100).size() == 4);
}
