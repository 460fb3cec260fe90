#include "kcx/complex.hpp"

#include <set>
#include <sstream>

namespace kcx {

namespace {

FGAbelianGroup trivial_group() { return FGAbelianGroup(std::vector<Int>{}); }

OrderSpec strict_over_z(const FGAbelianGroup &g) {
  return OrderSpec::strict_first(g, 1, OrderSpec::standard(FGAbelianGroup::free(1)));
}

GradedOrderedGroup strict_graded(const FGAbelianGroup &even, const FGAbelianGroup &odd) {
  return {even, odd, strict_over_z(FGAbelianGroup::direct_sum({even, odd}))};
}

// All elements of the subgroup generated by gens inside a group, by closure.
// Stops at cap elements.
std::vector<Vec> subgroup_elements(const FGAbelianGroup &g, const std::vector<Vec> &gens,
                                   std::size_t cap, bool *complete = nullptr) {
  std::vector<Vec> out{g.zero()};
  std::set<Vec> seen{g.zero()};
  bool full = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto &s : gens) {
      Vec w = g.add(out[i], s);
      if (seen.count(w)) continue;
      if (out.size() >= cap) { full = false; break; }
      seen.insert(w);
      out.push_back(w);
    }
  }
  if (complete) *complete = full;
  return out;
}

PropertyReport item(std::string name, bool ok, std::string witness = {}, std::string note = {}) {
  PropertyReport r;
  r.name = std::move(name);
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  if (!ok) r.witness = std::move(witness);
  r.note = note.empty() ? std::string("exact") : note;
  r.examined = 1;
  return r;
}

PropertyReport inconclusive(std::string name, std::string note) {
  PropertyReport r;
  r.name = std::move(name);
  r.status = CheckStatus::Inconclusive;
  r.note = std::move(note);
  return r;
}

// A generator of one subgroup missing from the other, if any.
std::optional<Vec> subgroup_difference(const FGAbelianGroup &g, const std::vector<Vec> &a,
                                       const std::vector<Vec> &b) {
  for (auto &x : a)
    if (!g.in_span(b, x)) return x;
  for (auto &x : b)
    if (!g.in_span(a, x)) return x;
  return std::nullopt;
}

bool gn_finite(const NCoefficientComplex &X) { return X.Gn.is_finite(); }

PropertyReport check_exactness(const NCoefficientComplex &X) {
  auto im = hom_analyze(X.rho).image;
  auto ker = hom_analyze(X.beta).kernel;
  auto d = subgroup_difference(X.Gn, im, ker);
  return item("exactness", !d, d ? to_string(*d) + " lies in only one of im(rho), ker(beta)" : "");
}

PropertyReport check_annihilated(const NCoefficientComplex &X) {
  for (std::size_t j = 0; j < X.Gn.ngens(); ++j) {
    Vec e = X.Gn.unit(j);
    if (!is_zero(X.Gn.mul(X.n, e)))
      return item("n_annihilates_Gn", false,
                  to_string(e) + ": " + X.n.get_str() + " * it = " + to_string(X.Gn.mul(X.n, e)) + " != 0");
  }
  return item("n_annihilates_Gn", true);
}

PropertyReport check_kernel_rho(const NCoefficientComplex &X) {
  std::vector<Vec> nG0;
  for (std::size_t i = 0; i < X.G0.ngens(); ++i) nG0.push_back(X.G0.mul(X.n, X.G0.unit(i)));
  auto d = subgroup_difference(X.G0, hom_analyze(X.rho).kernel, X.G0.clean_generators(nG0));
  return item("kernel_of_rho", !d, d ? to_string(*d) + " separates ker(rho) from n*G0" : "");
}

PropertyReport check_image_beta(const NCoefficientComplex &X) {
  auto tor = bockstein_groups(X.G1, X.n).torsion_gens;
  auto d = subgroup_difference(X.G1, hom_analyze(X.beta).image, tor);
  return item("image_of_beta", !d, d ? to_string(*d) + " separates im(beta) from the n-torsion of G1" : "");
}

PropertyReport check_same_even_order(const NCoefficientComplex &X, std::uint64_t budget) {
  Budget b(budget);
  PropertyReport r;
  r.name = "same_even_order";
  r.note = "bounded evidence";
  for (auto &x : X.G0.elements_up_to_height(3, 80)) {
    auto s = is_positive(X.star.order, concat(x, X.G1.zero()), b);
    auto t = is_positive(X.nat.order, concat(x, X.Gn.zero()), b);
    if (s.verdict == Verdict::Unknown || t.verdict == Verdict::Unknown) {
      r.note += "; budget exhausted";
      break;
    }
    ++r.examined;
    if (s.verdict != t.verdict) {
      r.status = CheckStatus::Fail;
      r.witness = "x = " + to_string(x) + " is " + (s ? "" : "not ") + "positive in G0+G1 but " +
                  (t ? "" : "not ") + "positive in G0+Gn";
      return r;
    }
  }
  return r;
}

// Positives of G0 + im(rho) inside G0 + Gn are exactly the images of
// positives of G0 + G0 ordered by (u, v) >= 0 iff u >= 0 and v in I(u).
PropertyReport check_rho_quotient(const NCoefficientComplex &X, std::uint64_t budget) {
  const std::string name = "rho_quotient_order";
  if (!gn_finite(X)) return inconclusive(name, "Gn is infinite");
  Budget b(budget);
  auto even = X.nat.even_restriction();
  std::vector<Vec> rgens;
  for (std::size_t i = 0; i < X.G0.ngens(); ++i) rgens.push_back(X.rho.apply(X.G0.unit(i)));
  auto im = subgroup_elements(X.Gn, rgens, 512);
  PropertyReport r;
  r.name = name;
  r.note = "bounded evidence";
  try {
    for (auto &x : X.G0.elements_up_to_height(2, 40)) {
      bool xpos = positive(even, x, b);
      std::vector<Vec> ideal_images;
      if (xpos)
        for (auto &g : order_ideal(even, x, b)) ideal_images.push_back(X.rho.apply(g));
      for (auto &y : im) {
        if (!b.step()) throw BudgetExhausted("");
        ++r.examined;
        bool lifted = xpos && X.Gn.in_span(ideal_images, y);
        bool pos = positive(X.nat.order, concat(x, y), b);
        if (lifted != pos) {
          r.status = CheckStatus::Fail;
          r.witness = "(" + to_string(x) + ", " + to_string(y) + ") is " + (pos ? "" : "not ") +
                      "positive but " + (lifted ? "has" : "has no") + " positive preimage";
          return r;
        }
      }
    }
  } catch (const BudgetExhausted &) {
    r.note += "; budget exhausted";
  }
  return r;
}

// Positives of G0 + im(beta) inside G0 + G1 are exactly images of positives
// of G0 + Gn under id + beta.
PropertyReport check_beta_quotient(const NCoefficientComplex &X, std::uint64_t budget) {
  const std::string name = "beta_quotient_order";
  if (!gn_finite(X)) return inconclusive(name, "Gn is infinite");
  Budget b(budget);
  auto ker = subgroup_elements(X.Gn, hom_analyze(X.beta).kernel, 512);
  std::vector<Vec> units;
  for (std::size_t j = 0; j < X.Gn.ngens(); ++j) units.push_back(X.Gn.unit(j));
  auto all_gn = subgroup_elements(X.Gn, units, 1024);
  PropertyReport r;
  r.name = name;
  r.note = "bounded evidence";
  try {
    for (auto &x : X.G0.elements_up_to_height(2, 40)) {
      std::set<Vec> done;
      for (auto &y0 : all_gn) {
        Vec z = X.beta.apply(y0);
        if (!done.insert(z).second) continue;
        bool lifted = false;
        for (auto &k : ker) {
          if (!b.step()) throw BudgetExhausted("");
          if (positive(X.nat.order, concat(x, X.Gn.add(y0, k)), b)) { lifted = true; break; }
        }
        ++r.examined;
        bool pos = positive(X.star.order, concat(x, z), b);
        if (lifted != pos) {
          r.status = CheckStatus::Fail;
          r.witness = "(" + to_string(x) + ", " + to_string(z) + ") is " + (pos ? "" : "not ") +
                      "positive but " + (lifted ? "has" : "has no") + " positive preimage";
          return r;
        }
      }
    }
  } catch (const BudgetExhausted &) {
    r.note += "; budget exhausted";
  }
  return r;
}

void require_algebraic_axioms(const NCoefficientComplex &X) {
  for (auto &r : {check_annihilated(X), check_exactness(X), check_kernel_rho(X), check_image_beta(X)})
    if (r.status == CheckStatus::Fail)
      throw PreconditionError(r.name + " fails: " + r.witness);
}

} // namespace

std::string BlockLabel::to_string() const {
  switch (kind) {
  case Kind::C: return "C";
  case Kind::DimDrop: return "I" + m.get_str();
  default: return "S1";
  }
}

std::string NCoefficientComplex::describe() const {
  std::ostringstream os;
  os << "n = " << n << "; " << G0.to_string() << " -> " << Gn.to_string() << " -> " << G1.to_string();
  if (is_block_sum()) {
    os << "; blocks:";
    for (auto &l : labels) os << " " << l.to_string();
  }
  return os.str();
}

NCoefficientComplex building_block(const BlockLabel &label) {
  if (label.n < 2) throw PreconditionError("coefficient modulus must be at least 2");
  NCoefficientComplex X;
  X.n = label.n;
  X.G0 = FGAbelianGroup::free(1);
  switch (label.kind) {
  case BlockLabel::Kind::C:
    X.Gn = FGAbelianGroup::cyclic(label.n);
    X.G1 = trivial_group();
    X.rho = GroupHom(X.G0, X.Gn, {{1}});
    X.beta = GroupHom(X.Gn, X.G1, Matrix(0, 1));
    break;
  case BlockLabel::Kind::DimDrop:
    if (label.m < 2 || label.n % label.m != 0)
      throw PreconditionError("dimension-drop block needs m >= 2 dividing n, got m = " +
                              label.m.get_str() + ", n = " + label.n.get_str());
    X.Gn = FGAbelianGroup({label.n, label.m});
    X.G1 = FGAbelianGroup::cyclic(label.m);
    X.rho = GroupHom(X.G0, X.Gn, {{1}, {0}});
    X.beta = GroupHom(X.Gn, X.G1, {{0, 1}});
    break;
  case BlockLabel::Kind::Circle:
    X.Gn = FGAbelianGroup::cyclic(label.n);
    X.G1 = FGAbelianGroup::free(1);
    X.rho = GroupHom(X.G0, X.Gn, {{1}});
    X.beta = GroupHom(X.Gn, X.G1, {{0}});
    break;
  }
  X.star = strict_graded(X.G0, X.G1);
  X.nat = strict_graded(X.G0, X.Gn);
  X.labels = {label};
  X.spans = {BlockSpan{0, X.G0.ngens(), 0, X.Gn.ngens(), 0, X.G1.ngens()}};
  return X;
}

NCoefficientComplex block_sum(const std::vector<BlockLabel> &labels) {
  std::vector<NCoefficientComplex> parts;
  for (auto &l : labels) parts.push_back(building_block(l));
  return direct_sum(parts);
}

namespace {

OrderSpec sum_order(const FGAbelianGroup &even, const FGAbelianGroup &odd,
                    const std::vector<const GradedOrderedGroup *> &parts) {
  auto amb = FGAbelianGroup::direct_sum({even, odd});
  std::vector<OrderSpec::Part> ps;
  std::size_t e = 0, o = 0;
  for (auto *p : parts) {
    OrderSpec::Part part;
    for (std::size_t i = 0; i < p->even.ngens(); ++i) part.coords.push_back(e + i);
    for (std::size_t i = 0; i < p->odd.ngens(); ++i) part.coords.push_back(even.ngens() + o + i);
    part.order = std::make_shared<const OrderSpec>(p->order);
    e += p->even.ngens();
    o += p->odd.ngens();
    ps.push_back(std::move(part));
  }
  return OrderSpec::direct_sum(amb, std::move(ps));
}

} // namespace

NCoefficientComplex direct_sum(const std::vector<NCoefficientComplex> &summands) {
  if (summands.empty()) throw PreconditionError("direct sum of an empty list");
  for (auto &s : summands)
    if (s.n != summands[0].n)
      throw PreconditionError("direct sum with mixed n: " + summands[0].n.get_str() + " and " + s.n.get_str());
  if (summands.size() == 1) return summands[0];
  NCoefficientComplex X;
  X.n = summands[0].n;
  std::vector<FGAbelianGroup> g0, gn, g1;
  std::vector<GroupHom> rho, beta;
  std::vector<const GradedOrderedGroup *> star, nat;
  bool labelled = true;
  for (auto &s : summands) {
    g0.push_back(s.G0);
    gn.push_back(s.Gn);
    g1.push_back(s.G1);
    rho.push_back(s.rho);
    beta.push_back(s.beta);
    star.push_back(&s.star);
    nat.push_back(&s.nat);
    labelled = labelled && s.is_block_sum();
  }
  X.G0 = FGAbelianGroup::direct_sum(g0);
  X.Gn = FGAbelianGroup::direct_sum(gn);
  X.G1 = FGAbelianGroup::direct_sum(g1);
  X.rho = GroupHom::direct_sum(rho);
  X.beta = GroupHom::direct_sum(beta);
  X.star = {X.G0, X.G1, sum_order(X.G0, X.G1, star)};
  X.nat = {X.G0, X.Gn, sum_order(X.G0, X.Gn, nat)};
  if (labelled) {
    std::size_t a = 0, b = 0, c = 0;
    for (auto &s : summands) {
      for (std::size_t i = 0; i < s.labels.size(); ++i) {
        auto sp = s.spans[i];
        sp.g0 += a;
        sp.gn += b;
        sp.g1 += c;
        X.labels.push_back(s.labels[i]);
        X.spans.push_back(sp);
      }
      a += s.G0.ngens();
      b += s.Gn.ngens();
      c += s.G1.ngens();
    }
  }
  return X;
}

bool AxiomsReport::all_pass() const {
  for (auto &r : items)
    if (r.status != CheckStatus::Pass) return false;
  return true;
}

const PropertyReport *AxiomsReport::first_failure() const {
  for (auto &r : items)
    if (r.status == CheckStatus::Fail) return &r;
  return nullptr;
}

AxiomsReport verify_axioms(const NCoefficientComplex &X, std::uint64_t budget) {
  AxiomsReport rep;
  bool maps_ok = X.rho.well_defined() && X.beta.well_defined();
  rep.items.push_back(item("maps_well_defined", maps_ok, "rho or beta does not respect the relations"));
  rep.items.push_back(check_exactness(X));
  rep.items.push_back(check_annihilated(X));
  rep.items.push_back(check_kernel_rho(X));
  rep.items.push_back(check_image_beta(X));
  auto gs = check_graded(X.star, budget);
  gs.name = "graded_G0_G1";
  rep.items.push_back(gs);
  auto gn = check_graded(X.nat, budget);
  gn.name = "graded_G0_Gn";
  rep.items.push_back(gn);
  rep.items.push_back(check_same_even_order(X, budget));
  auto ax = check_order_axioms(X.star, budget);
  rep.items.push_back(ax.riesz_interpolation);
  rep.items.push_back(check_rho_quotient(X, budget));
  rep.items.push_back(check_beta_quotient(X, budget));
  rep.items.push_back(ax.unperforated);
  rep.items.push_back(ax.weakly_unperforated);
  return rep;
}

TriplePositivity is_positive_triple(const NCoefficientComplex &X, const Triple &t, Budget &budget) {
  if (t.x.size() != X.G0.ngens() || t.y.size() != X.Gn.ngens() || t.z.size() != X.G1.ngens())
    throw DimensionError("triple components do not match G0, Gn, G1");
  TriplePositivity r;
  r.nat = is_positive(X.nat.order, concat(t.x, t.y), budget);
  r.star = is_positive(X.star.order, concat(t.x, t.z), budget);
  if (r.nat.verdict == Verdict::No || r.star.verdict == Verdict::No)
    r.verdict = Verdict::No;
  else if (r.nat.verdict == Verdict::Yes && r.star.verdict == Verdict::Yes)
    r.verdict = Verdict::Yes;
  else
    r.verdict = Verdict::Unknown;
  return r;
}

bool positive_triple(const NCoefficientComplex &X, const Triple &t, Budget &budget) {
  auto r = is_positive_triple(X, t, budget);
  if (r.verdict == Verdict::Unknown) throw BudgetExhausted("triple positivity undecided within budget");
  return r.verdict == Verdict::Yes;
}

std::vector<Triple> triple_window(const NCoefficientComplex &X, std::size_t height, std::size_t limit) {
  auto amb = FGAbelianGroup::direct_sum({X.G0, X.Gn, X.G1});
  std::vector<Triple> out;
  std::size_t a = X.G0.ngens(), b = X.Gn.ngens(), c = X.G1.ngens();
  for (auto &v : amb.elements_up_to_height(height, limit))
    out.push_back({slice(v, 0, a), slice(v, a, b), slice(v, a + b, c)});
  return out;
}

Triple ComplexMorphism::apply(const Triple &t) const {
  return {theta0.apply(t.x), thetan.apply(t.y), theta1.apply(t.z)};
}

ComplexMorphism ComplexMorphism::after(const ComplexMorphism &o) const {
  return {theta0.after(o.theta0), thetan.after(o.thetan), theta1.after(o.theta1)};
}

ComplexMorphism ComplexMorphism::identity(const NCoefficientComplex &X) {
  return {GroupHom::identity(X.G0), GroupHom::identity(X.Gn), GroupHom::identity(X.G1)};
}

ComplexMorphism ComplexMorphism::zero(const NCoefficientComplex &s, const NCoefficientComplex &d) {
  return {GroupHom::zero(s.G0, d.G0), GroupHom::zero(s.Gn, d.Gn), GroupHom::zero(s.G1, d.G1)};
}

ComplexMorphism ComplexMorphism::direct_sum(const std::vector<ComplexMorphism> &parts) {
  std::vector<GroupHom> a, b, c;
  for (auto &p : parts) {
    a.push_back(p.theta0);
    b.push_back(p.thetan);
    c.push_back(p.theta1);
  }
  return {GroupHom::direct_sum(a), GroupHom::direct_sum(b), GroupHom::direct_sum(c)};
}

bool MorphismReport::all_pass() const {
  return rho_square.status == CheckStatus::Pass && beta_square.status == CheckStatus::Pass &&
         positivity.status != CheckStatus::Fail;
}

MorphismReport verify_morphism(const ComplexMorphism &m, const NCoefficientComplex &src,
                               const NCoefficientComplex &dst, std::uint64_t budget) {
  if (!(m.theta0.source() == src.G0) || !(m.theta0.target() == dst.G0) ||
      !(m.thetan.source() == src.Gn) || !(m.thetan.target() == dst.Gn) ||
      !(m.theta1.source() == src.G1) || !(m.theta1.target() == dst.G1))
    throw DimensionError("morphism maps do not match the groups of the two complexes");
  MorphismReport r;
  r.rho_square = item("rho_square", true);
  for (std::size_t i = 0; i < src.G0.ngens(); ++i) {
    Vec e = src.G0.unit(i);
    Vec a = dst.rho.apply(m.theta0.apply(e)), b = m.thetan.apply(src.rho.apply(e));
    if (!dst.Gn.equal(a, b)) {
      r.rho_square = item("rho_square", false,
                          to_string(e) + ": rho'(theta0) = " + to_string(a) + ", thetan(rho) = " + to_string(b));
      break;
    }
  }
  r.beta_square = item("beta_square", true);
  for (std::size_t i = 0; i < src.Gn.ngens(); ++i) {
    Vec e = src.Gn.unit(i);
    Vec a = dst.beta.apply(m.thetan.apply(e)), b = m.theta1.apply(src.beta.apply(e));
    if (!dst.G1.equal(a, b)) {
      r.beta_square = item("beta_square", false,
                           to_string(e) + ": beta'(thetan) = " + to_string(a) + ", theta1(beta) = " + to_string(b));
      break;
    }
  }
  Budget b(budget);
  r.positivity.name = "positivity";
  r.positivity.note = "bounded evidence";
  for (auto &t : triple_window(src, 3, 400)) {
    auto p = is_positive_triple(src, t, b);
    if (p.verdict == Verdict::Unknown) { r.positivity.note += "; budget exhausted"; break; }
    if (p.verdict == Verdict::No) continue;
    ++r.positivity.examined;
    auto q = is_positive_triple(dst, m.apply(t), b);
    if (q.verdict == Verdict::Unknown) { r.positivity.note += "; budget exhausted"; break; }
    if (q.verdict == Verdict::No) {
      r.positivity.status = CheckStatus::Fail;
      auto u = m.apply(t);
      r.positivity.witness = "(" + to_string(t.x) + ", " + to_string(t.y) + ", " + to_string(t.z) +
                             ") is positive, its image (" + to_string(u.x) + ", " + to_string(u.y) +
                             ", " + to_string(u.z) + ") is not";
      break;
    }
  }
  if (r.positivity.examined == 0 && r.positivity.status == CheckStatus::Pass)
    r.positivity.status = CheckStatus::Inconclusive;
  r.ker0 = hom_analyze(m.theta0).kernel;
  r.kern = hom_analyze(m.thetan).kernel;
  r.ker1 = hom_analyze(m.theta1).kernel;
  return r;
}

// ---------------------------------------------------------------------------

SplitResult split_coefficients(const NCoefficientComplex &X) {
  require_algebraic_axioms(X);
  auto b0 = bockstein_groups(X.G0, X.n);
  auto b1 = bockstein_groups(X.G1, X.n);
  SplitResult out;
  out.R = b0.quotient;
  out.B = b1.torsion_group;
  out.quotient = b0.quotient_map;
  out.torsion_embedding = b1.torsion_embedding;

  const auto &rho = X.rho.matrix();
  const auto &Q = b0.quotient_map.matrix();
  std::size_t g0 = X.G0.ngens(), gn = X.Gn.ngens();
  // Retraction s: Gn -> R with s o rho = q, solved one R-coordinate at a time.
  // Entries are forced to zero greedily so block sums stay coordinate-aligned.
  Matrix S(out.R.ngens(), gn);
  for (std::size_t i = 0; i < out.R.ngens(); ++i) {
    const Int &r = out.R.modulus(i);
    std::vector<std::size_t> zeros;
    auto attempt = [&](const std::vector<std::size_t> &z) -> std::optional<Vec> {
      std::size_t cols = gn + g0 + gn;
      Matrix M(g0 + gn + z.size(), cols);
      Vec rhs(g0 + gn + z.size());
      for (std::size_t k = 0; k < g0; ++k) {
        for (std::size_t j = 0; j < gn; ++j) M(k, j) = rho(j, k);
        M(k, gn + k) = -r;
        rhs[k] = Q(i, k);
      }
      for (std::size_t j = 0; j < gn; ++j) {
        M(g0 + j, j) = X.Gn.modulus(j);
        M(g0 + j, gn + g0 + j) = -r;
      }
      for (std::size_t t = 0; t < z.size(); ++t) M(g0 + gn + t, z[t]) = 1;
      return solve_linear(M, rhs);
    };
    auto sol = attempt(zeros);
    if (!sol) throw PreconditionError("the coefficient group does not split: no retraction onto G0/nG0");
    for (std::size_t j = 0; j < gn; ++j) {
      auto z = zeros;
      z.push_back(j);
      if (auto s2 = attempt(z)) {
        zeros = z;
        sol = s2;
      }
    }
    for (std::size_t j = 0; j < gn; ++j) S(i, j) = mod_floor((*sol)[j], r);
  }
  Matrix Bm(out.B.ngens(), gn);
  for (std::size_t j = 0; j < gn; ++j) {
    auto pre = preimage(b1.torsion_embedding, X.beta.apply(X.Gn.unit(j)));
    if (!pre) throw PreconditionError("beta leaves the n-torsion of G1");
    for (std::size_t i = 0; i < out.B.ngens(); ++i) Bm(i, j) = (*pre)[i];
  }
  auto RB = FGAbelianGroup::direct_sum({out.R, out.B});
  out.iso = GroupHom(X.Gn, RB, Matrix::vcat(S, Bm));
  out.iso_inverse = out.iso.inverse();

  NCoefficientComplex N;
  N.n = X.n;
  N.G0 = X.G0;
  N.Gn = RB;
  N.G1 = X.G1;
  N.rho = out.iso.after(X.rho);
  N.beta = X.beta.after(out.iso_inverse);
  N.star = X.star;
  auto amb = FGAbelianGroup::direct_sum({N.G0, N.Gn});
  auto back = GroupHom::direct_sum({GroupHom::identity(X.G0), out.iso_inverse});
  N.nat = {N.G0, N.Gn,
           OrderSpec::intersection(amb, {{back, std::make_shared<const OrderSpec>(X.nat.order)}})};
  out.normalized = std::move(N);
  return out;
}

NCoefficientComplex extend_to_complex(const GradedOrderedGroup &gstar, const Int &n) {
  auto b0 = bockstein_groups(gstar.even, n);
  auto b1 = bockstein_groups(gstar.odd, n);
  NCoefficientComplex X;
  X.n = n;
  X.G0 = gstar.even;
  X.G1 = gstar.odd;
  const auto &R = b0.quotient;
  const auto &B = b1.torsion_group;
  X.Gn = FGAbelianGroup::direct_sum({R, B});
  X.rho = GroupHom(X.G0, X.Gn, Matrix::vcat(b0.quotient_map.matrix(), Matrix(B.ngens(), X.G0.ngens())));
  X.beta = GroupHom(X.Gn, X.G1, Matrix::hcat(Matrix(X.G1.ngens(), R.ngens()), b1.torsion_embedding.matrix()));
  X.star = gstar;

  std::size_t e = X.G0.ngens(), r = R.ngens(), b = B.ngens();
  auto amb = FGAbelianGroup::direct_sum({X.G0, X.Gn});
  auto even = gstar.even_restriction();
  auto doubled = OrderSpec::ideal_graded(X.G0, X.G0, even, {GroupHom::identity(X.G0), {}});
  auto quot = OrderSpec::quotient(GroupHom::direct_sum({GroupHom::identity(X.G0), b0.quotient_map}), doubled);
  Matrix drop_b(e + r, e + r + b);
  for (std::size_t i = 0; i < e + r; ++i) drop_b(i, i) = 1;
  Matrix to_star(e + X.G1.ngens(), e + r + b);
  for (std::size_t i = 0; i < e; ++i) to_star(i, i) = 1;
  const auto &iota = b1.torsion_embedding.matrix();
  for (std::size_t i = 0; i < X.G1.ngens(); ++i)
    for (std::size_t j = 0; j < b; ++j) to_star(e + i, e + r + j) = iota(i, j);
  auto er = FGAbelianGroup::direct_sum({X.G0, R});
  X.nat = {X.G0, X.Gn,
           OrderSpec::intersection(
               amb, {{GroupHom(amb, er, drop_b), std::make_shared<const OrderSpec>(quot)},
                     {GroupHom(amb, gstar.ambient(), to_star), std::make_shared<const OrderSpec>(gstar.order)}})};
  return X;
}

PropertyReport compare_orders(const NCoefficientComplex &X, const NCoefficientComplex &Y,
                              const ComplexMorphism &iso, std::uint64_t budget) {
  Budget b(budget);
  PropertyReport r;
  r.name = "order_isomorphism";
  r.note = "bounded evidence";
  for (auto &t : triple_window(X, 6, 600)) {
    auto p = is_positive_triple(X, t, b);
    auto q = is_positive_triple(Y, iso.apply(t), b);
    if (p.verdict == Verdict::Unknown || q.verdict == Verdict::Unknown) {
      r.note += "; budget exhausted";
      break;
    }
    ++r.examined;
    if (p.verdict != q.verdict) {
      r.status = CheckStatus::Fail;
      r.witness = "(" + to_string(t.x) + ", " + to_string(t.y) + ", " + to_string(t.z) + ") is " +
                  (p.verdict == Verdict::Yes ? "" : "not ") + "positive on the left, " + (q.verdict == Verdict::Yes ? "" : "not ") + "on the right";
      return r;
    }
  }
  return r;
}

} // namespace kcx
