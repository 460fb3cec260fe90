#include "kcx/qz.hpp"

#include <algorithm>

namespace kcx {

namespace {

Int ratio_of(const Int &m, const Int &mn) {
  if (m < 1 || mn < 1 || mn % m != 0)
    throw PreconditionError("level " + m.get_str() + " does not divide level " + mn.get_str());
  return mn / m;
}

KappaMap kappa_blocks(const Int &m, const Int &mn, const NCoefficientComplex &X) {
  Int k = ratio_of(m, mn);
  std::vector<BlockLabel> labels = X.labels;
  for (auto &l : labels) l.n = mn;
  KappaMap r;
  r.target = block_sum(labels);
  const auto &Y = r.target;
  Matrix M0(Y.G0.ngens(), X.G0.ngens()), Mn(Y.Gn.ngens(), X.Gn.ngens());
  for (std::size_t b = 0; b < X.nblocks(); ++b) {
    const auto &s = X.spans[b], &t = Y.spans[b];
    M0(t.g0, s.g0) = k;
    Mn(t.gn, s.gn) = k;
    for (std::size_t i = 1; i < s.gn_len; ++i) Mn(t.gn + i, s.gn + i) = 1;
  }
  r.map = {GroupHom(X.G0, Y.G0, M0), GroupHom(X.Gn, Y.Gn, Mn), GroupHom::identity(X.G1)};
  return r;
}

KappaMap kappa_general(const Int &m, const Int &mn, const NCoefficientComplex &X) {
  Int k = ratio_of(m, mn);
  if (X.n != m) throw PreconditionError("complex has level " + X.n.get_str() + ", not " + m.get_str());
  auto S = split_coefficients(X);
  KappaMap r;
  r.target = extend_to_complex(X.star, mn);
  auto b0 = bockstein_groups(X.G0, mn);
  auto b1 = bockstein_groups(X.G1, mn);
  const auto &Y = r.target;
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < S.R.ngens(); ++j) {
    auto x = preimage(S.quotient, S.R.unit(j));
    Vec img = b0.quotient_map.apply(X.G0.mul(k, *x));
    cols.push_back(concat(img, b1.torsion_group.zero()));
  }
  for (std::size_t j = 0; j < S.B.ngens(); ++j) {
    auto pre = preimage(b1.torsion_embedding, S.torsion_embedding.apply(S.B.unit(j)));
    if (!pre) throw Error("torsion of G1 does not include into the larger level");
    cols.push_back(concat(b0.quotient.zero(), *pre));
  }
  auto RB = FGAbelianGroup::direct_sum({S.R, S.B});
  GroupHom onto(RB, Y.Gn, Matrix::from_columns(Y.Gn.ngens(), cols));
  Matrix M0 = Matrix::identity(X.G0.ngens());
  for (std::size_t i = 0; i < X.G0.ngens(); ++i) M0(i, i) = k;
  r.map = {GroupHom(X.G0, Y.G0, M0), onto.after(S.iso), GroupHom::identity(X.G1)};
  return r;
}

OrderSpec graded_sum_order(const GradedOrderedGroup &a, const GradedOrderedGroup &b,
                           const FGAbelianGroup &even, const FGAbelianGroup &odd) {
  auto amb = FGAbelianGroup::direct_sum({even, odd});
  std::size_t ea = a.even.ngens(), eb = b.even.ngens(), oa = a.odd.ngens(), ob = b.odd.ngens();
  OrderSpec::Part pa, pb;
  for (std::size_t i = 0; i < ea; ++i) pa.coords.push_back(i);
  for (std::size_t i = 0; i < oa; ++i) pa.coords.push_back(ea + eb + i);
  for (std::size_t i = 0; i < eb; ++i) pb.coords.push_back(ea + i);
  for (std::size_t i = 0; i < ob; ++i) pb.coords.push_back(ea + eb + oa + i);
  pa.order = std::make_shared<const OrderSpec>(a.order);
  pb.order = std::make_shared<const OrderSpec>(b.order);
  return OrderSpec::direct_sum(amb, {pa, pb});
}

PropertyReport pass(std::string name, std::string note = {}) {
  PropertyReport r;
  r.name = std::move(name);
  r.note = std::move(note);
  return r;
}

PropertyReport fail(std::string name, std::string witness) {
  PropertyReport r;
  r.name = std::move(name);
  r.status = CheckStatus::Fail;
  r.witness = std::move(witness);
  return r;
}

} // namespace

void DeltaChain::validate() const {
  if (levels.empty()) throw PreconditionError("empty level chain");
  for (auto &l : levels)
    if (l < 2) throw PreconditionError("levels must be at least 2, got " + l.get_str());
  for (std::size_t i = 0; i + 1 < levels.size(); ++i)
    if (levels[i + 1] % levels[i] != 0)
      throw PreconditionError("level " + levels[i].get_str() + " does not divide " + levels[i + 1].get_str());
}

bool DeltaChain::strictly_increasing() const {
  for (std::size_t i = 0; i + 1 < levels.size(); ++i)
    if (levels[i + 1] <= levels[i]) return false;
  return true;
}

DeltaChain DeltaChain::factorial(std::size_t count) {
  DeltaChain c;
  Int f = 1;
  for (std::size_t i = 2; c.levels.size() < count; ++i) {
    f *= static_cast<unsigned long>(i);
    c.levels.push_back(f);
  }
  return c;
}

GroupHom canonical_hom(const GroupHom &h) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < h.source().ngens(); ++j) cols.push_back(h.target().canonical(h.matrix().column(j)));
  return GroupHom(h.source(), h.target(), Matrix::from_columns(h.target().ngens(), cols));
}

KappaMap kappa_stage(const Int &m, const Int &mn, const NCoefficientComplex &X) {
  ratio_of(m, mn);
  if (X.n != m) throw PreconditionError("complex has level " + X.n.get_str() + ", not " + m.get_str());
  if (m == mn) return {X, ComplexMorphism::identity(X)};
  KappaMap r = X.is_block_sum() ? kappa_blocks(m, mn, X) : kappa_general(m, mn, X);
  r.map = {canonical_hom(r.map.theta0), canonical_hom(r.map.thetan), canonical_hom(r.map.theta1)};
  return r;
}

NBoldDescriptor NBoldDescriptor::rational(GradedOrderedGroup g) {
  if (g.even.rank() != g.even.ngens())
    throw PreconditionError("the even group of a rational descriptor must be free");
  NBoldDescriptor d;
  d.kind = Kind::Rational;
  d.kdata = std::move(g);
  return d;
}

NBoldDescriptor NBoldDescriptor::fixed_level(NCoefficientComplex X) {
  NBoldDescriptor d;
  d.kind = Kind::Fixed;
  d.fixed = std::move(X);
  return d;
}

NBoldDescriptor NBoldDescriptor::point() {
  auto z = FGAbelianGroup::free(1);
  auto odd = FGAbelianGroup(std::vector<Int>{});
  return rational({z, odd, OrderSpec::standard(FGAbelianGroup::direct_sum({z, odd}))});
}

NBoldDescriptor NBoldDescriptor::direct_sum(const NBoldDescriptor &a, const NBoldDescriptor &b) {
  if (a.kind != b.kind) throw UnsupportedError("direct sum of a rational and a fixed-level descriptor");
  if (a.kind == Kind::Fixed) return fixed_level(kcx::direct_sum({a.fixed, b.fixed}));
  auto even = FGAbelianGroup::direct_sum({a.kdata.even, b.kdata.even});
  auto odd = FGAbelianGroup::direct_sum({a.kdata.odd, b.kdata.odd});
  return rational({even, odd, graded_sum_order(a.kdata, b.kdata, even, odd)});
}

bool NBoldDescriptor::rho_preimage_contains(const Int &n, const std::vector<Rational> &q) const {
  if (kind != Kind::Rational) throw UnsupportedError("rational coordinates need a rational descriptor");
  if (q.size() != kdata.even.ngens()) throw DimensionError("rational vector length does not match G0");
  for (auto &c : q) {
    Rational t = c * Rational(n);
    t.canonicalize();
    if (t.get_den() != 1) return false;
  }
  return true;
}

std::string NBoldDescriptor::describe() const {
  if (kind == Kind::Fixed) return "fixed " + fixed.describe();
  return "rational(" + kdata.even.to_string() + "; " + kdata.odd.to_string() + "; " + kdata.order.describe() + ")";
}

std::vector<Rational> NBoldComplex::to_rational(std::size_t stage, const Vec &x) const {
  std::vector<Rational> out;
  for (auto &c : x) {
    Rational q(c, scale.at(stage));
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

NBoldComplex stage_decomposition(const NBoldDescriptor &X, const DeltaChain &chain) {
  chain.validate();
  NBoldComplex out;
  out.chain = chain;
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    const Int &n = chain.levels[i];
    if (X.kind == NBoldDescriptor::Kind::Fixed) {
      if (n != X.fixed.n)
        throw UnsupportedError("a fixed-level complex at n = " + X.fixed.n.get_str() + " cannot be staged at " +
                               n.get_str());
      out.stages.push_back(X.fixed);
      out.scale.push_back(1);
    } else {
      out.stages.push_back(extend_to_complex(X.kdata, n));
      out.scale.push_back(n);
    }
    if (i > 0) {
      auto k = kappa_stage(chain.levels[i - 1], n, out.stages[i - 1]);
      if (!(k.target.Gn == out.stages[i].Gn) || !(k.target.G0 == out.stages[i].G0) ||
          !(k.target.G1 == out.stages[i].G1))
        throw Error("coefficient change does not land in the next stage");
      out.connects.push_back(k.map);
    }
  }
  return out;
}

bool NBoldReport::all_pass() const {
  for (auto &i : items)
    if (i.status == CheckStatus::Fail) return false;
  return true;
}

const PropertyReport *NBoldReport::first_failure() const {
  for (auto &i : items)
    if (i.status == CheckStatus::Fail) return &i;
  return nullptr;
}

NBoldReport verify_nbold_axioms(const NBoldComplex &X, std::uint64_t budget) {
  NBoldReport rep;
  if (X.stages.empty()) {
    rep.items.push_back(fail("stages", "no stages"));
    return rep;
  }

  auto stage_axioms = pass("stage_axioms");
  for (std::size_t i = 0; i < X.stages.size() && stage_axioms.status != CheckStatus::Fail; ++i) {
    auto a = verify_axioms(X.stages[i], budget);
    if (auto *f = a.first_failure())
      stage_axioms = fail("stage_axioms", "stage " + std::to_string(i) + ": " + f->name + ": " + f->witness);
    for (auto &it : a.items) stage_axioms.examined += it.examined;
  }
  rep.items.push_back(stage_axioms);

  auto connects = pass("connecting_maps");
  for (std::size_t i = 0; i < X.connects.size(); ++i) {
    auto m = verify_morphism(X.connects[i], X.stages[i], X.stages[i + 1], budget);
    if (!m.all_pass()) {
      const auto &bad = m.rho_square.status == CheckStatus::Fail   ? m.rho_square
                        : m.beta_square.status == CheckStatus::Fail ? m.beta_square
                                                                    : m.positivity;
      connects = fail("connecting_maps", "connect " + std::to_string(i) + ": " + bad.name + ": " + bad.witness);
      break;
    }
  }
  rep.items.push_back(connects);

  auto torsion = pass("pure_torsion", "window");
  for (std::size_t i = 0; i < X.stages.size() && torsion.status == CheckStatus::Pass; ++i) {
    const auto &g = X.stages[i].Gn;
    for (std::size_t j = 0; j < g.ngens(); ++j) {
      ++torsion.examined;
      if (g.is_free_coord(j)) {
        torsion = fail("pure_torsion", "stage " + std::to_string(i) + ": " + to_string(g.unit(j)) +
                                           " has infinite order");
        break;
      }
    }
  }
  rep.items.push_back(torsion);

  auto lifts = pass("beta_lift_of_equal_order", "window of the last stage");
  const auto &L = X.stages.back();
  if (!L.Gn.is_finite() || L.Gn.order() > 4096) {
    lifts.status = CheckStatus::Inconclusive;
    lifts.note = "coefficient group too large to enumerate";
  } else {
    Int h = 0;
    for (auto &d : L.Gn.moduli()) h += d - 1;
    auto ys = L.Gn.elements_up_to_height(h.get_ui(), 4096);
    for (auto &x : L.G1.elements_up_to_height(4, 200)) {
      Int l = L.G1.element_order(x);
      if (l == 0 || is_zero(L.G1.canonical(x))) continue;
      ++lifts.examined;
      bool found = std::any_of(ys.begin(), ys.end(), [&](const Vec &y) {
        return L.G1.equal(L.beta.apply(y), x) && L.Gn.element_order(y) == l;
      });
      if (!found) {
        lifts = fail("beta_lift_of_equal_order",
                     to_string(x) + " has order " + l.get_str() + " and no beta-lift of order " + l.get_str());
        break;
      }
    }
  }
  rep.items.push_back(lifts);
  return rep;
}

VaryingRealization realize_limit_varying(const NBoldComplex &X, std::size_t steps, Budget &budget) {
  VaryingRealization out;
  for (std::size_t i = 0; i < X.stages.size(); ++i) {
    auto rr = realize_limit(X.stages[i], steps, budget);
    if (rr.system.stages.empty()) {
      out.complete = false;
      out.note = "level " + std::to_string(i) + ": " + rr.note;
      return out;
    }
    const auto &H = rr.system.stages.back();
    const auto &lam = rr.to_target.back();
    ComplexMorphism inv;
    try {
      inv = {lam.theta0.inverse(), lam.thetan.inverse(), lam.theta1.inverse()};
    } catch (const PreconditionError &) {
      throw UnsupportedError("level " + std::to_string(i) + " is not realized by an isomorphic block sum");
    }
    for (auto &h : rr.hits) {
      Triple p = h.preimage;
      for (std::size_t s = h.stage; s + 1 < rr.system.stages.size(); ++s) p = rr.system.connects[s].apply(p);
      out.hits.push_back({h.index, i, h.triple, {H.G0.canonical(p.x), H.Gn.canonical(p.y), H.G1.canonical(p.z)}});
    }
    if (i > 0) {
      auto g = inv.after(X.connects[i - 1]).after(out.to_stage.back());
      out.system.connects.push_back({canonical_hom(g.theta0), canonical_hom(g.thetan), canonical_hom(g.theta1)});
    }
    out.system.stages.push_back(H);
    out.to_stage.push_back(lam);
    if (!rr.complete) {
      out.complete = false;
      out.note = "level " + std::to_string(i) + ": " + rr.note;
      return out;
    }
  }
  return out;
}

std::optional<std::string> check_varying_realization(const NBoldComplex &X, const VaryingRealization &r,
                                                     std::uint64_t budget) {
  const auto &S = r.system;
  if (r.to_stage.size() != S.stages.size()) return "one map per level required";
  for (std::size_t i = 0; i + 1 < S.stages.size(); ++i) {
    if (!morphism_equal(r.to_stage[i + 1].after(S.connects[i]), X.connects[i].after(r.to_stage[i])))
      return "cell " + std::to_string(i) + " does not commute";
    Int k = X.chain.levels[i + 1] / X.chain.levels[i];
    const auto &M = S.connects[i].theta0.matrix();
    for (std::size_t a = 0; a < M.rows(); ++a)
      for (std::size_t b = 0; b < M.cols(); ++b)
        if (M(a, b) % k != 0)
          return "connect " + std::to_string(i) + ": even entry " + M(a, b).get_str() + " is not divisible by " +
                 k.get_str();
  }
  if (auto bad = verify_system(S, budget)) return bad;
  Budget b(budget);
  for (auto &h : r.hits) {
    const auto &lam = r.to_stage.at(h.stage);
    auto img = lam.apply(h.preimage);
    const auto &T = X.stages[h.stage];
    if (!T.G0.equal(img.x, h.triple.x) || !T.Gn.equal(img.y, h.triple.y) || !T.G1.equal(img.z, h.triple.z))
      return "certificate at level " + std::to_string(h.stage) + " does not replay";
    if (!positive_triple(S.stages[h.stage], h.preimage, b))
      return "certificate at level " + std::to_string(h.stage) + " has a non-positive preimage";
  }
  return std::nullopt;
}

} // namespace kcx
