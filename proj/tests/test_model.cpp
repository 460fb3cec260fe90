#include "doctest.h"

#include "kcx/model.hpp"

using namespace kcx;

namespace {

BlockLabel block(BlockLabel::Kind k, long n, long m = 0) { return {k, n, m}; }

GradedOrderedGroup strict_z(const FGAbelianGroup &odd) {
  auto z = FGAbelianGroup::free(1);
  return {z, odd, OrderSpec::strict_first(FGAbelianGroup::direct_sum({z, odd}), 1, OrderSpec::standard(z))};
}

void check_round_trip(const Model &m) {
  auto text = print_model(m);
  auto back = parse_model(text);
  CHECK(same_model(m, back));
  CHECK(print_model(back) == text);
}

ParseError parse_error(const std::string &text) {
  try {
    parse_model(text);
  } catch (const ParseError &e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", 0, 0);
}

} // namespace

TEST_CASE("blocks shorthand") {
  auto m = parse_model("kcx-format 1\nn: 2\nblocks: I2\n");
  auto &X = std::get<NCoefficientComplex>(m);
  CHECK(same_complex(X, building_block(block(BlockLabel::Kind::DimDrop, 2, 2))));

  auto s = parse_model("kcx-format 1\n# three blocks\nn: 4\nblocks: C*2, I2, S1   # trailing comment\n");
  auto &Y = std::get<NCoefficientComplex>(s);
  REQUIRE(Y.labels.size() == 4);
  CHECK(print_blocks(Y.labels) == "C*2, I2, S1");
  CHECK(Y.n == 4);
}

TEST_CASE("print then parse reproduces constructed complexes") {
  std::vector<NCoefficientComplex> xs = {
      building_block(block(BlockLabel::Kind::C, 2)),
      block_sum({block(BlockLabel::Kind::Circle, 4), block(BlockLabel::Kind::DimDrop, 4, 2)}),
      extend_to_complex(strict_z(FGAbelianGroup::cyclic(2)), 2),
      extend_to_complex(strict_z(FGAbelianGroup::cyclic(4)), 6),
      dl_build_complex_window(EpsilonSeq::sign_step(), 1),
      kappa_stage(2, 6, block_sum({block(BlockLabel::Kind::C, 2), block(BlockLabel::Kind::Circle, 2)})).target,
  };
  auto q = building_block(block(BlockLabel::Kind::C, 2));
  auto sum = FGAbelianGroup::free(2);
  q.star.order = OrderSpec::quotient(GroupHom(sum, q.G0, {{1, 1}}), OrderSpec::standard(sum));
  xs.push_back(q);
  auto meet = building_block(block(BlockLabel::Kind::C, 2));
  meet.nat.order = OrderSpec::intersection(
      meet.nat.ambient(), {{GroupHom(meet.nat.ambient(), meet.G0, {{1, 0}}),
                            std::make_shared<const OrderSpec>(OrderSpec::cone(meet.G0, {make_vec({1})}))}});
  xs.push_back(meet);
  for (auto &X : xs) {
    INFO(X.describe());
    check_round_trip(X);
    auto expanded = parse_model(print_complex_expanded(X));
    CHECK(same_complex(X, std::get<NCoefficientComplex>(expanded)));
  }
}

TEST_CASE("systems, staged descriptors and epsilon jobs round-trip") {
  auto S1 = block_sum({block(BlockLabel::Kind::Circle, 2), block(BlockLabel::Kind::Circle, 2)});
  BlockSystem sys{{S1, S1}, {ComplexMorphism::identity(S1)}};
  check_round_trip(sys);

  auto a = building_block(block(BlockLabel::Kind::C, 2));
  auto k = kappa_stage(2, 6, a);
  BlockSystem varying{{a, k.target}, {k.map}};
  check_round_trip(varying);

  check_round_trip(StagedModel{NBoldDescriptor::point(), DeltaChain{{2, 6, 24}}});
  check_round_trip(StagedModel{NBoldDescriptor::rational(strict_z(FGAbelianGroup::cyclic(2))), std::nullopt});
  check_round_trip(StagedModel{NBoldDescriptor::fixed_level(S1), std::nullopt});
  check_round_trip(EpsilonJob{EpsilonSeq::sign_step(), EpsilonSeq::zero(), std::string("x=1 | c=1")});

  auto p = parse_model("kcx-format 1\nkind: qz\ndescriptor: point + point\nchain: 2, 4\n");
  CHECK(std::get<StagedModel>(p).descriptor.kdata.even.ngens() == 2);
}

TEST_CASE("parse errors carry positions") {
  auto e = parse_error("kcx-format 1\nn: 2\nG0: Z\nGn: Z/2\nG1: 0\nrho: [[1,0]]\nbeta: []\n"
                       "star: standard\nnat: strict(1; standard)\n");
  CHECK(e.line() == 6);
  CHECK(std::string(e.what()).find("matrix row 1 has 2 entries, expected 1") != std::string::npos);

  auto h = parse_error("kcx-format 2\n");
  CHECK(h.line() == 1);
  auto u = parse_error("kcx-format 1\nn: 2\nG0: Z\nGn: Z/2\nG1: 0\nrho: [[1]]\nbeta: []\n"
                       "star: standard\nnat: fancy(1)\n");
  CHECK(u.line() == 9);
  CHECK(u.column() == 6);
  CHECK(std::string(u.what()).find("unsupported order descriptor 'fancy'") != std::string::npos);

  auto b = parse_error("kcx-format 1\nn: 2\nblocks: C, X7\n");
  CHECK(b.line() == 3);
  CHECK(b.column() == 12);
  CHECK(parse_error("kcx-format 1\nn: 2\nblocks: C\nblocks: C\n").line() == 4);
  CHECK(parse_error("kcx-format 1\nkind: system\nn: 2\nstage: C\nstage: C\ntheta0: [[1]]\n").line() == 5);
  auto eps = parse_error("kcx-format 1\nkind: epsilon\nepsilon: left=2\n");
  CHECK(eps.line() == 3);
  CHECK_THROWS_AS(parse_triple("(1);(1,0);()", building_block(block(BlockLabel::Kind::C, 2))), ParseError);
  CHECK_THROWS_AS(parse_chain("2,5"), ParseError);
}

TEST_CASE("argument grammars") {
  auto X = building_block(block(BlockLabel::Kind::DimDrop, 2, 2));
  auto t = parse_triple("(3);(1,3);(1)", X);
  CHECK(t.y == make_vec({1, 1}));
  CHECK(parse_vector_list("(1,0), (0,1)").size() == 2);
  CHECK(parse_group("Z^2 + Z/4") == FGAbelianGroup({0, 0, 4}));
  CHECK(parse_group("<Z,Z/2>") == FGAbelianGroup({0, 2}));
  auto d = parse_dl_triple("x=1;y={0:0} | c=1 | z=1");
  CHECK(d.g.exceptions.at(0) == 0);
  CHECK(d.r.c == 1);
  CHECK(d.z == 1);
  CHECK_THROWS_AS(parse_dl_triple("x=1 | c=1 | z=2"), ParseError);
}
