#include "kcx/realize.hpp"

#include "kcx/decomp.hpp"

namespace kcx {

namespace {

Matrix columns_of(std::size_t rows, const std::vector<Vec> &cols) {
  return Matrix::from_columns(rows, cols);
}

GroupHom hom_from_images(const FGAbelianGroup &src, const FGAbelianGroup &dst, const std::vector<Vec> &images) {
  if (images.size() != src.ngens()) throw DimensionError("one image per generator required");
  return GroupHom(src, dst, columns_of(dst.ngens(), images));
}

// Columns [begin, begin + src.ngens()) of h, as a map out of src.
GroupHom restrict_columns(const GroupHom &h, const FGAbelianGroup &src, std::size_t begin) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < src.ngens(); ++j) cols.push_back(h.matrix().column(begin + j));
  return GroupHom(src, h.target(), columns_of(h.target().ngens(), cols));
}

GroupHom hcat_hom(const FGAbelianGroup &src, const GroupHom &a, const GroupHom &b) {
  return GroupHom(src, a.target(), Matrix::hcat(a.matrix(), b.matrix()));
}

std::optional<std::string> squares_commute(const ComplexMorphism &m, const NCoefficientComplex &src,
                                           const NCoefficientComplex &dst) {
  for (std::size_t i = 0; i < src.G0.ngens(); ++i) {
    Vec e = src.G0.unit(i);
    if (!dst.Gn.equal(dst.rho.apply(m.theta0.apply(e)), m.thetan.apply(src.rho.apply(e))))
      return "rho square fails on " + to_string(e);
  }
  for (std::size_t i = 0; i < src.Gn.ngens(); ++i) {
    Vec e = src.Gn.unit(i);
    if (!dst.G1.equal(dst.beta.apply(m.thetan.apply(e)), m.theta1.apply(src.beta.apply(e))))
      return "beta square fails on " + to_string(e);
  }
  return std::nullopt;
}

std::string show(const Triple &t) {
  return "(" + to_string(t.x) + ", " + to_string(t.y) + ", " + to_string(t.z) + ")";
}

bool triple_equal(const NCoefficientComplex &X, const Triple &a, const Triple &b) {
  return X.G0.equal(a.x, b.x) && X.Gn.equal(a.y, b.y) && X.G1.equal(a.z, b.z);
}

Triple canonical(const NCoefficientComplex &X, const Triple &t) {
  return {X.G0.canonical(t.x), X.Gn.canonical(t.y), X.G1.canonical(t.z)};
}

// Single generator of the subgroup spanned by gens, if one is found among the
// generators and their pairwise sums.
std::optional<Vec> cyclic_generator(const FGAbelianGroup &g, const std::vector<Vec> &gens) {
  std::vector<Vec> cands = gens;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) cands.push_back(g.add(gens[i], gens[j]));
  for (auto &c : cands)
    if (g.same_subgroup({c}, gens)) return g.canonical(c);
  return std::nullopt;
}

HitResult circle_hit(const NCoefficientComplex &X, const Vec &e, const Vec &g) {
  HitResult r;
  r.H = building_block({BlockLabel::Kind::Circle, X.n, 0});
  r.theta = {hom_from_images(r.H.G0, X.G0, {e}), hom_from_images(r.H.Gn, X.Gn, {X.rho.apply(e)}),
             hom_from_images(r.H.G1, X.G1, {g})};
  r.preimage = {make_vec({1}), make_vec({0}), make_vec({1})};
  return r;
}

HitResult dimdrop_hit(const NCoefficientComplex &X, const Vec &e, const Vec &f) {
  HitResult r;
  r.H = building_block({BlockLabel::Kind::DimDrop, X.n, X.n});
  r.theta = {hom_from_images(r.H.G0, X.G0, {e}),
             hom_from_images(r.H.Gn, X.Gn, {X.rho.apply(e), f}),
             hom_from_images(r.H.G1, X.G1, {X.beta.apply(f)})};
  r.preimage = {make_vec({1}), make_vec({0, 1}), make_vec({0})};
  return r;
}

} // namespace

bool hom_equal(const GroupHom &a, const GroupHom &b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) return false;
  for (std::size_t i = 0; i < a.source().ngens(); ++i) {
    Vec e = a.source().unit(i);
    if (!a.target().equal(a.apply(e), b.apply(e))) return false;
  }
  return true;
}

bool morphism_equal(const ComplexMorphism &a, const ComplexMorphism &b) {
  return hom_equal(a.theta0, b.theta0) && hom_equal(a.thetan, b.thetan) && hom_equal(a.theta1, b.theta1);
}

std::optional<std::string> verify_system(const BlockSystem &S, std::uint64_t budget) {
  if (S.stages.empty()) return "system has no stages";
  if (S.connects.size() + 1 != S.stages.size()) return "need exactly one connecting map per consecutive pair";
  for (std::size_t i = 0; i + 1 < S.stages.size(); ++i) {
    const auto &a = S.stages[i], &b = S.stages[i + 1];
    if (a.n != b.n && (b.n % a.n) != 0)
      return "stage " + std::to_string(i + 1) + ": n = " + b.n.get_str() + " is not a multiple of " + a.n.get_str();
    auto rep = verify_morphism(S.connects[i], a, b, budget);
    if (!rep.all_pass()) {
      const auto &bad = rep.rho_square.status == CheckStatus::Fail   ? rep.rho_square
                        : rep.beta_square.status == CheckStatus::Fail ? rep.beta_square
                                                                      : rep.positivity;
      return "connect " + std::to_string(i) + ": " + bad.name + ": " + bad.witness;
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_kernels(const ComplexMorphism &gamma, const ComplexMorphism &theta) {
  const GroupHom *gs[3] = {&gamma.theta0, &gamma.thetan, &gamma.theta1};
  const GroupHom *ts[3] = {&theta.theta0, &theta.thetan, &theta.theta1};
  const char *names[3] = {"G0", "Gn", "G1"};
  for (int k = 0; k < 3; ++k) {
    const auto &src = ts[k]->source();
    auto kt = hom_analyze(*ts[k]).kernel;
    auto kg = hom_analyze(*gs[k]).kernel;
    for (auto &v : kt)
      if (!is_zero(gs[k]->target().canonical(gs[k]->apply(v))))
        return std::string(names[k]) + ": " + to_string(v) + " is in ker theta but not in ker gamma";
    for (auto &v : kg)
      if (!src.in_span(kt, v))
        return std::string(names[k]) + ": " + to_string(v) + " is in ker gamma but not in ker theta";
  }
  return std::nullopt;
}

std::optional<BlockRecognition> recognize_block_sum(const NCoefficientComplex &X, Budget &budget) {
  if (X.is_block_sum()) return BlockRecognition{X, ComplexMorphism::identity(X)};
  if (X.G0.rank() != X.G0.ngens() || X.G0.ngens() == 0 || !X.Gn.is_finite() || X.Gn.order() > 4096)
    return std::nullopt;
  std::vector<Vec> atoms;
  std::vector<std::vector<Vec>> faces;
  try {
    atoms = even_atoms(X.star, budget);
    faces = odd_faces(X.star, atoms, budget);
  } catch (const UnsupportedError &) {
    return std::nullopt;
  }
  if (atoms.size() != X.G0.ngens()) return std::nullopt;

  std::vector<BlockLabel> labels;
  std::vector<std::optional<Vec>> odd_gen;
  for (auto &face : faces) {
    auto gens = X.G1.clean_generators(face);
    if (gens.empty()) {
      labels.push_back({BlockLabel::Kind::C, X.n, 0});
      odd_gen.push_back(std::nullopt);
      continue;
    }
    auto c = cyclic_generator(X.G1, gens);
    if (!c) return std::nullopt;
    Int m = X.G1.element_order(*c);
    if (m == 0)
      labels.push_back({BlockLabel::Kind::Circle, X.n, 0});
    else if (m >= 2 && X.n % m == 0)
      labels.push_back({BlockLabel::Kind::DimDrop, X.n, m});
    else
      return std::nullopt;
    odd_gen.push_back(c);
  }

  Int total = 0;
  for (auto &d : X.Gn.moduli()) total += d - 1;
  auto gn_elements = X.Gn.elements_up_to_height(total.get_ui(), 4096);

  std::vector<Vec> img0, imgn, img1;
  for (std::size_t b = 0; b < labels.size(); ++b) {
    const Vec &a = atoms[b];
    img0.push_back(a);
    imgn.push_back(X.rho.apply(a));
    if (labels[b].kind == BlockLabel::Kind::C) continue;
    img1.push_back(*odd_gen[b]);
    if (labels[b].kind != BlockLabel::Kind::DimDrop) continue;
    std::optional<Vec> y;
    for (auto &c : gn_elements) {
      budget.require("torsion lift search");
      if (!X.G1.equal(X.beta.apply(c), *odd_gen[b])) continue;
      if (!is_zero(X.Gn.mul(labels[b].m, c))) continue;
      if (!positive(X.nat.order, X.nat.join(a, c), budget)) continue;
      y = c;
      break;
    }
    if (!y) return std::nullopt;
    imgn.push_back(*y);
  }

  BlockRecognition r;
  r.H = block_sum(labels);
  r.iso = {hom_from_images(r.H.G0, X.G0, img0), hom_from_images(r.H.Gn, X.Gn, imgn),
           hom_from_images(r.H.G1, X.G1, img1)};
  try {
    (void)r.iso.theta0.inverse();
    (void)r.iso.thetan.inverse();
    (void)r.iso.theta1.inverse();
  } catch (const PreconditionError &) {
    return std::nullopt;
  }
  if (squares_commute(r.iso, r.H, X)) return std::nullopt;
  std::uint64_t left = budget.limit() > budget.used() ? budget.limit() - budget.used() : 0;
  auto cmp = compare_orders(r.H, X, r.iso, left);
  budget.step(cmp.examined);
  if (cmp.status == CheckStatus::Fail) return std::nullopt;
  return r;
}

Factorization factor_intertwiner(const NCoefficientComplex &G, const ComplexMorphism &theta,
                                 const NCoefficientComplex &target, Budget &budget) {
  if (auto bad = squares_commute(theta, G, target)) throw PreconditionError("theta is not a morphism: " + *bad);
  auto rec = recognize_block_sum(target, budget);
  if (!rec) {
    if (budget.exhausted()) throw BudgetExhausted("budget exhausted while searching for a block-sum factorization");
    throw UnsupportedError("no block-sum factorization found for target " + target.describe());
  }
  Factorization f;
  f.H = rec->H;
  f.lambda = rec->iso;
  if (target.is_block_sum()) {
    f.gamma = theta;
  } else {
    ComplexMorphism inv{rec->iso.theta0.inverse(), rec->iso.thetan.inverse(), rec->iso.theta1.inverse()};
    f.gamma = inv.after(theta);
  }
  if (!morphism_equal(f.lambda.after(f.gamma), theta))
    throw Error("factorization does not reproduce theta");
  if (auto bad = check_kernels(f.gamma, theta)) throw Error("kernel mismatch: " + *bad);
  return f;
}

HitResult hit_positive(const NCoefficientComplex &target, const Triple &t0, Budget &budget) {
  Triple t = canonical(target, t0);
  if (!positive_triple(target, t, budget))
    throw PreconditionError("triple " + show(t) + " is not positive");
  HitResult r;
  if (is_zero(t.y)) {
    r = circle_hit(target, t.x, t.z);
  } else if (is_zero(t.z)) {
    r = dimdrop_hit(target, t.x, t.y);
  } else {
    auto hg = circle_hit(target, t.x, t.z);
    auto hf = dimdrop_hit(target, t.x, t.y);
    auto G = direct_sum({hg.H, hf.H});
    ComplexMorphism theta{hcat_hom(G.G0, hg.theta.theta0, hf.theta.theta0),
                          hcat_hom(G.Gn, hg.theta.thetan, hf.theta.thetan),
                          hcat_hom(G.G1, hg.theta.theta1, hf.theta.theta1)};
    auto fac = factor_intertwiner(G, theta, target, budget);
    Vec x = fac.gamma.theta0.apply(make_vec({1, 0}));
    if (!fac.H.G0.equal(x, fac.gamma.theta0.apply(make_vec({0, 1}))))
      throw Error("factorization separates the two copies of e");
    r.H = fac.H;
    r.theta = fac.lambda;
    r.preimage = canonical(fac.H, {x, fac.gamma.thetan.apply(make_vec({0, 0, 1})),
                                   fac.gamma.theta1.apply(make_vec({1, 0}))});
  }
  if (!triple_equal(target, r.theta.apply(r.preimage), t))
    throw Error("hit construction does not map onto " + show(t));
  if (!positive_triple(r.H, r.preimage, budget))
    throw Error("hit preimage " + show(r.preimage) + " is not positive");
  return r;
}

std::vector<Triple> enumerate_positive(const NCoefficientComplex &X, std::size_t count, Budget &budget) {
  auto amb = FGAbelianGroup::direct_sum({X.G0, X.Gn, X.G1});
  std::size_t a = X.G0.ngens(), b = X.Gn.ngens(), c = X.G1.ngens();
  std::vector<Triple> out;
  for (std::size_t h = 1; out.size() < count && h <= 64; ++h) {
    auto layer = amb.elements_of_height(h);
    if (layer.empty()) break;
    for (auto &v : layer) {
      budget.require("positive enumeration");
      Triple t{slice(v, 0, a), slice(v, a, b), slice(v, a + b, c)};
      if (!positive_triple(X, t, budget)) continue;
      out.push_back(t);
      if (out.size() == count) break;
    }
  }
  return out;
}

RealizeResult realize_limit(const NCoefficientComplex &target, std::size_t steps, Budget &budget,
                            const StageCallback &on_stage) {
  RealizeResult r;
  try {
    auto pos = enumerate_positive(target, steps, budget);
    if (pos.size() < steps) {
      r.complete = false;
      r.note = "only " + std::to_string(pos.size()) + " positive triples found";
    }
    for (std::size_t i = 0; i < pos.size(); ++i) {
      auto hit = hit_positive(target, pos[i], budget);
      NCoefficientComplex G;
      ComplexMorphism theta;
      Triple pre;
      if (i == 0) {
        G = hit.H;
        theta = hit.theta;
        pre = hit.preimage;
      } else {
        const auto &prev = r.system.stages.back();
        const auto &mu = r.to_target.back();
        G = direct_sum({prev, hit.H});
        theta = {hcat_hom(G.G0, mu.theta0, hit.theta.theta0), hcat_hom(G.Gn, mu.thetan, hit.theta.thetan),
                 hcat_hom(G.G1, mu.theta1, hit.theta.theta1)};
        pre = {concat(prev.G0.zero(), hit.preimage.x), concat(prev.Gn.zero(), hit.preimage.y),
               concat(prev.G1.zero(), hit.preimage.z)};
      }
      auto fac = factor_intertwiner(G, theta, target, budget);
      if (i > 0) {
        const auto &prev = r.system.stages.back();
        r.system.connects.push_back({restrict_columns(fac.gamma.theta0, prev.G0, 0),
                                     restrict_columns(fac.gamma.thetan, prev.Gn, 0),
                                     restrict_columns(fac.gamma.theta1, prev.G1, 0)});
      }
      r.system.stages.push_back(fac.H);
      r.to_target.push_back(fac.lambda);
      r.hits.push_back({i, i, pos[i], canonical(fac.H, fac.gamma.apply(pre))});
      if (on_stage) on_stage(i, fac.H);
    }
  } catch (const BudgetExhausted &e) {
    r.complete = false;
    r.note = std::string(e.what()) + " after " + std::to_string(r.system.stages.size()) + " stages";
  }
  return r;
}

std::optional<std::string> check_realization(const NCoefficientComplex &target, const RealizeResult &r,
                                             std::uint64_t budget) {
  const auto &S = r.system;
  if (r.to_target.size() != S.stages.size()) return "one map to the target per stage required";
  for (std::size_t i = 0; i + 1 < S.stages.size(); ++i)
    if (!morphism_equal(r.to_target[i + 1].after(S.connects[i]), r.to_target[i]))
      return "triangle at stage " + std::to_string(i) + " does not commute";
  for (std::size_t i = 0; i < S.stages.size(); ++i)
    if (auto bad = squares_commute(r.to_target[i], S.stages[i], target))
      return "stage " + std::to_string(i) + " map: " + *bad;
  if (auto bad = verify_system(S, budget)) return bad;
  Budget b(budget);
  for (auto &h : r.hits) {
    if (h.stage >= S.stages.size()) return "certificate names a missing stage";
    if (!triple_equal(target, r.to_target[h.stage].apply(h.preimage), h.triple))
      return "certificate " + std::to_string(h.index) + " does not map onto " + show(h.triple);
    if (!positive_triple(S.stages[h.stage], h.preimage, b))
      return "certificate " + std::to_string(h.index) + ": preimage " + show(h.preimage) + " is not positive";
  }
  return std::nullopt;
}

std::optional<std::string> large_denominator_violation(const ComplexMorphism &m,
                                                       const NCoefficientComplex &src,
                                                       const NCoefficientComplex &dst) {
  if (!src.is_block_sum() || !dst.is_block_sum())
    throw PreconditionError("large denominators are defined for block sums");
  const auto &M0 = m.theta0.matrix();
  const auto &M1 = m.theta1.matrix();
  for (std::size_t s = 0; s < src.nblocks(); ++s)
    for (std::size_t t = 0; t < dst.nblocks(); ++t) {
      const auto &ss = src.spans[s], &ts = dst.spans[t];
      bool odd_zero = true;
      for (std::size_t j = 0; j < ss.g1_len && odd_zero; ++j) {
        Vec col(ts.g1_len);
        for (std::size_t i = 0; i < ts.g1_len; ++i) col[i] = mod_floor(M1(ts.g1 + i, ss.g1 + j), dst.G1.modulus(ts.g1 + i));
        odd_zero = is_zero(col);
      }
      if (odd_zero) continue;
      const Int &k = M0(ts.g0, ss.g0);
      if (k < 2)
        return "block " + std::to_string(s) + " -> block " + std::to_string(t) +
               ": nonzero on G1 with G0 multiplicity " + k.get_str();
    }
  return std::nullopt;
}

LargeDenominators enforce_large_denominators(const BlockSystem &S, Budget &budget) {
  if (S.stages.empty()) throw PreconditionError("empty system");
  if (S.connects.size() + 1 != S.stages.size())
    throw PreconditionError("need exactly one connecting map per consecutive pair");
  LargeDenominators out;
  out.system.stages.push_back(S.stages[0]);
  out.kept.push_back(0);
  std::size_t j = 0;
  while (j < S.connects.size()) {
    ComplexMorphism comp = S.connects[j];
    std::size_t k = j + 1;
    while (auto bad = large_denominator_violation(comp, S.stages[j], S.stages[k])) {
      if (k == S.connects.size()) {
        out.ok = false;
        out.note = "no composite of connects from stage " + std::to_string(j) +
                   " reaches large denominators: " + *bad;
        return out;
      }
      if (!budget.step()) {
        out.ok = false;
        out.note = "budget exhausted while compressing from stage " + std::to_string(j);
        return out;
      }
      comp = S.connects[k].after(comp);
      ++k;
    }
    out.system.connects.push_back(comp);
    out.system.stages.push_back(S.stages[k]);
    out.kept.push_back(k);
    j = k;
  }
  return out;
}

} // namespace kcx
