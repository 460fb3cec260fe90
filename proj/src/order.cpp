#include "kcx/order.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace kcx {

namespace {

FGAbelianGroup sub_group(const FGAbelianGroup &g, const std::vector<std::size_t> &coords) {
  std::vector<Int> m;
  for (auto c : coords) m.push_back(g.modulus(c));
  return FGAbelianGroup(m);
}

FGAbelianGroup range_group(const FGAbelianGroup &g, std::size_t begin, std::size_t count) {
  std::vector<Int> m(g.moduli().begin() + begin, g.moduli().begin() + begin + count);
  return FGAbelianGroup(m);
}

Vec pick(const Vec &v, const std::vector<std::size_t> &coords) {
  Vec out;
  for (auto c : coords) out.push_back(v[c]);
  return out;
}

std::vector<std::size_t> free_coords(const FGAbelianGroup &g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.ngens(); ++i)
    if (g.is_free_coord(i)) out.push_back(i);
  return out;
}

Int dot_free(const Vec &f, const std::vector<std::size_t> &fc, const Vec &v) {
  Int s = 0;
  for (std::size_t i = 0; i < fc.size(); ++i) s += f[i] * v[fc[i]];
  return s;
}

// Looks for an integer functional, small entries first, that is >= 1 on the
// free part of every generator with a nonzero free part.
std::optional<Vec> find_functional(const FGAbelianGroup &g, const std::vector<Vec> &gens) {
  auto fc = free_coords(g);
  std::vector<const Vec *> relevant;
  for (auto &x : gens) {
    bool nz = false;
    for (auto c : fc) nz = nz || x[c] != 0;
    if (nz) relevant.push_back(&x);
  }
  if (relevant.empty()) return Vec(fc.size());
  for (long r = 1; r <= 3; ++r) {
    long base = 2 * r + 1;
    double total = 1;
    for (std::size_t i = 0; i < fc.size(); ++i) total *= double(base);
    if (total > 2e5) break;
    std::vector<long> digits(fc.size(), 0);
    for (long idx = 0; idx < long(total); ++idx) {
      long t = idx;
      Vec f(fc.size());
      for (std::size_t i = 0; i < fc.size(); ++i) {
        long d = t % base;
        t /= base;
        f[i] = d <= r ? d : r - d; // 0,1..r,-1..-r
      }
      bool ok = true;
      for (auto *x : relevant)
        if (dot_free(f, fc, *x) < 1) { ok = false; break; }
      if (ok) return f;
    }
  }
  return std::nullopt;
}

void require_budget(const Budget &b) {
  if (b.limit() == 0) throw PreconditionError("budget must be positive");
}

} // namespace

std::vector<Vec> assigned_subgroup(const OrderSpec &o, const std::vector<Vec> &even_ideal) {
  const auto &a = o.assignment();
  const auto &even = o.even_group();
  std::vector<Vec> out;
  for (auto &x : even_ideal) out.push_back(a.phi.apply(x));
  if (!a.face_subgroups.empty()) {
    for (std::size_t i = 0; i < even.ngens(); ++i) {
      if (a.face_subgroups[i].empty()) continue;
      if (even.in_span(even_ideal, even.unit(i)))
        for (auto &s : a.face_subgroups[i]) out.push_back(o.odd_group().canonical(s));
    }
  }
  return o.odd_group().clean_generators(out);
}

// ---------------------------------------------------------------------------

OrderSpec OrderSpec::standard(const FGAbelianGroup &g) {
  for (std::size_t i = 0; i < g.ngens(); ++i)
    if (!g.is_free_coord(i))
      throw PreconditionError("standard order needs a free group, got " + g.to_string());
  OrderSpec o;
  o.kind_ = OrderKind::Standard;
  o.group_ = g;
  return o;
}

OrderSpec OrderSpec::cone(const FGAbelianGroup &g, std::vector<Vec> generators) {
  OrderSpec o;
  o.kind_ = OrderKind::SimplicialCone;
  o.group_ = g;
  for (auto &x : generators) {
    if (x.size() != g.ngens()) throw DimensionError("cone generator has wrong length");
    o.gens_.push_back(g.canonical(x));
  }
  o.functional_ = find_functional(g, o.gens_);
  return o;
}

OrderSpec OrderSpec::strict_first(const FGAbelianGroup &g, std::size_t k, const OrderSpec &base) {
  if (k > g.ngens()) throw DimensionError("strict summand wider than the group");
  if (!(base.group() == range_group(g, 0, k)))
    throw DimensionError("strict base order lives on " + base.group().to_string() +
                         ", expected " + range_group(g, 0, k).to_string());
  OrderSpec o;
  o.kind_ = OrderKind::StrictFirst;
  o.group_ = g;
  o.width_ = k;
  o.base_ = std::make_shared<const OrderSpec>(base);
  return o;
}

OrderSpec OrderSpec::direct_sum(const FGAbelianGroup &g, std::vector<Part> parts) {
  std::vector<int> seen(g.ngens(), 0);
  for (auto &p : parts) {
    for (auto c : p.coords) {
      if (c >= g.ngens()) throw DimensionError("direct-sum coordinate out of range");
      ++seen[c];
    }
    if (!(p.order->group() == sub_group(g, p.coords)))
      throw DimensionError("direct-sum part order does not match its coordinates");
  }
  for (auto s : seen)
    if (s != 1) throw DimensionError("direct-sum parts must partition the coordinates");
  OrderSpec o;
  o.kind_ = OrderKind::DirectSum;
  o.group_ = g;
  o.parts_ = std::move(parts);
  return o;
}

OrderSpec OrderSpec::quotient(const GroupHom &h, const OrderSpec &source) {
  if (!(h.source() == source.group()))
    throw DimensionError("quotient surjection does not start at the source order's group");
  auto a = hom_analyze(h);
  if (!a.well_defined) throw PreconditionError("quotient map is not well defined");
  if (!a.surjective) throw PreconditionError("quotient map is not surjective");
  OrderSpec o;
  o.kind_ = OrderKind::Quotient;
  o.group_ = h.target();
  o.hom_ = h;
  o.base_ = std::make_shared<const OrderSpec>(source);
  o.kernel_ = a.kernel;
  if (source.kind() == OrderKind::IdealGraded) {
    std::size_t e = source.even_group().ngens();
    const auto &M = h.matrix();
    bool ok = h.target().ngens() >= e;
    for (std::size_t i = 0; ok && i < e; ++i) {
      if (!(h.target().modulus(i) == source.even_group().modulus(i))) ok = false;
      for (std::size_t j = 0; ok && j < M.cols(); ++j)
        if (M(i, j) != (j == i ? 1 : 0)) ok = false;
    }
    for (std::size_t i = e; ok && i < M.rows(); ++i)
      for (std::size_t j = 0; ok && j < e; ++j)
        if (M(i, j) != 0) ok = false;
    o.graded_fast_path_ = ok;
  }
  return o;
}

OrderSpec OrderSpec::ideal_graded(const FGAbelianGroup &even, const FGAbelianGroup &odd,
                                  const OrderSpec &even_order, OddAssignment assignment) {
  if (!(even_order.group() == even)) throw DimensionError("even order on the wrong group");
  if (!(assignment.phi.source() == even) || !(assignment.phi.target() == odd))
    throw DimensionError("odd assignment map must go from the even to the odd group");
  if (!assignment.face_subgroups.empty() && assignment.face_subgroups.size() != even.ngens())
    throw DimensionError("face subgroups must be listed per even coordinate");
  for (auto &f : assignment.face_subgroups)
    for (auto &v : f)
      if (v.size() != odd.ngens()) throw DimensionError("face subgroup generator has wrong length");
  OrderSpec o;
  o.kind_ = OrderKind::IdealGraded;
  o.group_ = FGAbelianGroup::direct_sum({even, odd});
  o.even_ = even;
  o.odd_ = odd;
  o.base_ = std::make_shared<const OrderSpec>(even_order);
  o.assign_ = std::move(assignment);
  return o;
}

OrderSpec OrderSpec::intersection(const FGAbelianGroup &g, std::vector<Term> terms) {
  for (auto &t : terms) {
    if (!(t.projection.source() == g)) throw DimensionError("intersection term starts elsewhere");
    if (!(t.order->group() == t.projection.target()))
      throw DimensionError("intersection term order lives on the wrong group");
  }
  OrderSpec o;
  o.kind_ = OrderKind::Intersection;
  o.group_ = g;
  o.terms_ = std::move(terms);
  return o;
}

namespace {

std::string group_desc(const FGAbelianGroup &g) {
  std::string s = "<";
  for (std::size_t i = 0; i < g.ngens(); ++i) {
    if (i) s += ",";
    s += g.is_free_coord(i) ? std::string("Z") : "Z/" + g.modulus(i).get_str();
  }
  return s + ">";
}

} // namespace

std::string OrderSpec::describe() const {
  std::ostringstream os;
  switch (kind_) {
  case OrderKind::Standard:
    os << "standard";
    break;
  case OrderKind::SimplicialCone:
    os << "cone(";
    for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << to_string(gens_[i]);
    os << ")";
    break;
  case OrderKind::StrictFirst:
    os << "strict(" << width_ << "; " << base_->describe() << ")";
    break;
  case OrderKind::DirectSum:
    os << "sum(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      os << (i ? " | " : "") << "[";
      for (std::size_t j = 0; j < parts_[i].coords.size(); ++j)
        os << (j ? "," : "") << parts_[i].coords[j];
      os << "]: " << parts_[i].order->describe();
    }
    os << ")";
    break;
  case OrderKind::Quotient:
    os << "quotient(" << group_desc(hom_.source()) << "; " << hom_.matrix().to_string() << "; "
       << base_->describe() << ")";
    break;
  case OrderKind::IdealGraded:
    os << "ideal(" << even_.ngens() << "; " << base_->describe() << "; "
       << assign_.phi.matrix().to_string();
    for (std::size_t i = 0; i < assign_.face_subgroups.size(); ++i) {
      if (assign_.face_subgroups[i].empty()) continue;
      os << "; " << i << ":";
      for (std::size_t j = 0; j < assign_.face_subgroups[i].size(); ++j)
        os << (j ? "," : "") << to_string(assign_.face_subgroups[i][j]);
    }
    os << ")";
    break;
  case OrderKind::Intersection:
    os << "meet(";
    for (std::size_t i = 0; i < terms_.size(); ++i)
      os << (i ? " | " : "") << group_desc(terms_[i].projection.target()) << "; "
         << terms_[i].projection.matrix().to_string() << "; " << terms_[i].order->describe();
    os << ")";
    break;
  }
  return os.str();
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Yes: return "yes";
  case Verdict::No: return "no";
  default: return "unknown";
  }
}

std::string to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::Pass: return "pass";
  case CheckStatus::Fail: return "fail";
  default: return "inconclusive";
  }
}

// ---------------------------------------------------------------------------
// Positivity

namespace {

Positivity yes(std::string kind, Vec data = {}, std::string note = {}) {
  return {Verdict::Yes, {std::move(kind), std::move(data), std::move(note)}};
}
Positivity no(std::string note) { return {Verdict::No, {"obstruction", {}, std::move(note)}}; }
Positivity unknown(std::string note) {
  return {Verdict::Unknown, {"budget", {}, std::move(note)}};
}

Positivity positivity(const OrderSpec &o, const Vec &c, Budget &budget);

Positivity cone_positivity(const OrderSpec &o, const Vec &c, Budget &budget) {
  const auto &g = o.group();
  const auto &gens = o.generators();
  if (is_zero(c)) return yes("cone", Vec(gens.size()), "empty combination");
  if (!o.functional_opt()) return unknown("no coefficient bound derivable for this cone");
  const Vec &f = *o.functional_opt();
  auto fc = free_coords(g);
  Int target = dot_free(f, fc, c);
  if (target < 0)
    return no("functional " + to_string(f) + " is negative on the element");

  std::vector<std::size_t> heavy, light;
  std::vector<Int> weight(gens.size()), bound(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    weight[i] = dot_free(f, fc, gens[i]);
    if (weight[i] >= 1) {
      heavy.push_back(i);
    } else {
      Int ord = g.element_order(gens[i]);
      if (ord == 0) return unknown("generator of infinite order outside the functional");
      bound[i] = ord - 1;
      light.push_back(i);
    }
  }

  Vec coeff(gens.size());
  bool found = false, out_of_budget = false;
  std::function<void(std::size_t, Int)> light_rec;
  auto leaf = [&]() {
    if (!budget.step()) { out_of_budget = true; return; }
    Vec s = g.zero();
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (coeff[i] != 0) s = add(s, scale(coeff[i], gens[i]));
    if (g.equal(s, c)) found = true;
  };
  light_rec = [&](std::size_t k, Int) {
    if (found || out_of_budget) return;
    if (k == light.size()) { leaf(); return; }
    std::size_t i = light[k];
    for (Int v = 0; v <= bound[i] && !found && !out_of_budget; ++v) {
      coeff[i] = v;
      light_rec(k + 1, 0);
    }
    coeff[i] = 0;
  };
  std::function<void(std::size_t, Int)> heavy_rec = [&](std::size_t k, Int rest) {
    if (found || out_of_budget) return;
    if (k == heavy.size()) {
      if (rest == 0) light_rec(0, 0);
      return;
    }
    std::size_t i = heavy[k];
    if (k + 1 == heavy.size()) {
      if (rest % weight[i] != 0) return;
      coeff[i] = rest / weight[i];
      heavy_rec(k + 1, 0);
      if (!found) coeff[i] = 0;
      return;
    }
    for (Int v = 0; v * weight[i] <= rest && !found && !out_of_budget; ++v) {
      coeff[i] = v;
      heavy_rec(k + 1, rest - v * weight[i]);
    }
    if (!found) coeff[i] = 0;
  };
  heavy_rec(0, target);
  if (found) return yes("cone", coeff);
  if (out_of_budget) return unknown("cone search budget exhausted");
  return no("no combination: coefficients bounded by functional " + to_string(f) +
            " with value " + target.get_str());
}

Positivity quotient_positivity(const OrderSpec &o, const Vec &c, Budget &budget) {
  const auto &h = o.surjection();
  const auto &src = o.source();
  if (o.graded_fast_path()) {
    std::size_t e = src.even_group().ngens();
    Vec x = slice(c, 0, e);
    Vec t = slice(c, e, c.size() - e);
    auto px = positivity(src.even_order(), src.even_group().canonical(x), budget);
    if (px.verdict != Verdict::Yes) return px.verdict == Verdict::No ? no("even part not positive") : px;
    auto I = order_ideal(src.even_order(), x, budget);
    auto S = assigned_subgroup(src, I);
    FGAbelianGroup tail = range_group(o.group(), e, o.group().ngens() - e);
    std::vector<Vec> images;
    for (auto &s : S) images.push_back(slice(h.apply(concat(src.even_group().zero(), s)), e, tail.ngens()));
    auto coeffs = tail.span_coefficients(images, t);
    if (!coeffs) return no("odd part outside the image of the assigned subgroup");
    Vec w = src.odd_group().zero();
    for (std::size_t i = 0; i < S.size(); ++i) w = add(w, scale((*coeffs)[i], S[i]));
    return yes("lift", src.group().canonical(concat(x, w)));
  }
  auto p0 = preimage(h, c);
  if (!p0) return no("no preimage");
  const auto &K = o.kernel();
  if (src.kind() == OrderKind::Standard) {
    // A free target coordinate whose row is nonnegative is a positive functional.
    const auto &M = h.matrix();
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (!o.group().is_free_coord(i) || c[i] >= 0) continue;
      bool nonneg = true;
      for (std::size_t j = 0; j < M.cols() && nonneg; ++j) nonneg = M(i, j) >= 0;
      if (nonneg) return no("coordinate " + std::to_string(i) + " is negative under a positive functional");
    }
    if (K.size() == 1) {
      // Exact: p0 + k*K >= 0 is an interval in k.
      std::optional<Int> lo, hi;
      bool empty = false;
      for (std::size_t i = 0; i < K[0].size() && !empty; ++i) {
        const Int &a = K[0][i], &p = (*p0)[i];
        if (a == 0) {
          if (p < 0) empty = true;
        } else if (a > 0) {
          Int q;
          mpz_cdiv_q(q.get_mpz_t(), Int(-p).get_mpz_t(), a.get_mpz_t());
          if (!lo || q > *lo) lo = q;
        } else {
          Int q;
          mpz_fdiv_q(q.get_mpz_t(), p.get_mpz_t(), Int(-a).get_mpz_t());
          if (!hi || q < *hi) hi = q;
        }
      }
      if (!empty && lo && hi && *lo > *hi) empty = true;
      if (empty) return no("no positive preimage: kernel translates bounded coordinatewise");
      Int k = lo ? *lo : (hi ? *hi : Int(0));
      return yes("lift", add(*p0, scale(k, K[0])));
    }
  }
  auto check = [&](const Vec &p) -> std::optional<Positivity> {
    Vec cp = src.group().canonical(p);
    auto r = positivity(src, cp, budget);
    if (r.verdict == Verdict::Yes) return yes("lift", cp);
    if (r.verdict == Verdict::Unknown) return r;
    return std::nullopt;
  };
  if (K.empty()) {
    auto r = check(*p0);
    return r ? *r : no("the unique preimage is not positive");
  }
  // Kernel translates by increasing l1 norm until the budget runs out.
  std::vector<long> k(K.size());
  for (long norm = 0;; ++norm) {
    std::vector<Vec> layer;
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long rest) {
      if (i + 1 == K.size()) {
        for (long s : {-rest, rest}) {
          k[i] = s;
          Vec p = *p0;
          for (std::size_t j = 0; j < K.size(); ++j)
            if (k[j]) p = add(p, scale(Int(k[j]), K[j]));
          layer.push_back(p);
          if (rest == 0) break;
        }
        return;
      }
      for (long a = -rest; a <= rest; ++a) {
        k[i] = a;
        rec(i + 1, rest - std::labs(a));
      }
    };
    rec(0, norm);
    for (auto &p : layer) {
      if (!budget.step()) return unknown("lift search budget exhausted");
      auto r = check(p);
      if (r) return *r;
    }
    if (budget.exhausted()) return unknown("lift search budget exhausted");
  }
}

Positivity positivity(const OrderSpec &o, const Vec &c, Budget &budget) {
  const auto &g = o.group();
  switch (o.kind()) {
  case OrderKind::Standard:
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] < 0) return no("coordinate " + std::to_string(i) + " is negative");
    return yes("coordinates", c);
  case OrderKind::SimplicialCone:
    return cone_positivity(o, c, budget);
  case OrderKind::StrictFirst: {
    if (is_zero(c)) return yes("zero");
    Vec x = slice(c, 0, o.strict_width());
    if (is_zero(x)) return no("first summand vanishes on a nonzero element");
    auto r = positivity(o.base(), x, budget);
    if (r.verdict == Verdict::Yes) return yes("strict", r.certificate.data, r.certificate.kind);
    return r;
  }
  case OrderKind::DirectSum: {
    for (auto &p : o.parts()) {
      auto r = positivity(*p.order, pick(c, p.coords), budget);
      if (r.verdict != Verdict::Yes) return r;
    }
    return yes("blockwise");
  }
  case OrderKind::Quotient:
    return quotient_positivity(o, c, budget);
  case OrderKind::IdealGraded: {
    std::size_t e = o.even_group().ngens();
    Vec x = slice(c, 0, e);
    Vec y = slice(c, e, c.size() - e);
    auto r = positivity(o.even_order(), x, budget);
    if (r.verdict != Verdict::Yes) return r;
    auto S = assigned_subgroup(o, order_ideal(o.even_order(), x, budget));
    auto coeffs = o.odd_group().span_coefficients(S, y);
    if (!coeffs) return no("odd part outside the subgroup attached to I(x)");
    return yes("span", *coeffs);
  }
  case OrderKind::Intersection: {
    Positivity pending{Verdict::Yes, {"meet", {}, {}}};
    for (auto &t : o.terms()) {
      auto r = positivity(*t.order, t.projection.apply(c), budget);
      if (r.verdict == Verdict::No) return r;
      if (r.verdict == Verdict::Unknown) pending = r;
    }
    return pending;
  }
  }
  (void)g;
  return unknown("unreachable");
}

} // namespace

Positivity is_positive(const OrderSpec &order, const Vec &v, Budget &budget) {
  require_budget(budget);
  if (v.size() != order.group().ngens())
    throw DimensionError("element of length " + std::to_string(v.size()) + " in a group with " +
                         std::to_string(order.group().ngens()) + " generators");
  return positivity(order, order.group().canonical(v), budget);
}

bool positive(const OrderSpec &order, const Vec &v, Budget &budget) {
  auto r = is_positive(order, v, budget);
  if (r.verdict == Verdict::Unknown) throw BudgetExhausted(r.certificate.note);
  return r.verdict == Verdict::Yes;
}

bool verify_cone_certificate(const OrderSpec &cone, const Vec &v, const Certificate &c) {
  if (cone.kind() != OrderKind::SimplicialCone || c.kind != "cone") return false;
  if (c.data.size() != cone.generators().size()) return false;
  Vec s = cone.group().zero();
  for (std::size_t i = 0; i < c.data.size(); ++i) {
    if (c.data[i] < 0) return false;
    s = add(s, scale(c.data[i], cone.generators()[i]));
  }
  return cone.group().equal(s, v);
}

// ---------------------------------------------------------------------------
// Order ideals

std::vector<Vec> preimage_intersection(const FGAbelianGroup &ambient,
                                       const std::vector<GroupHom> &projections,
                                       const std::vector<std::vector<Vec>> &subgroups) {
  std::size_t n = ambient.ngens();
  if (projections.empty()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(ambient.unit(i));
    return ambient.clean_generators(all);
  }
  std::size_t rows = 0, cols = n;
  for (std::size_t k = 0; k < projections.size(); ++k) {
    rows += projections[k].target().ngens();
    cols += subgroups[k].size() + projections[k].target().ngens();
  }
  Matrix M(rows, cols);
  std::size_t r0 = 0, c0 = n;
  for (std::size_t k = 0; k < projections.size(); ++k) {
    const auto &P = projections[k].matrix();
    const auto &T = projections[k].target();
    for (std::size_t i = 0; i < T.ngens(); ++i)
      for (std::size_t j = 0; j < n; ++j) M(r0 + i, j) = P(i, j);
    for (std::size_t s = 0; s < subgroups[k].size(); ++s)
      for (std::size_t i = 0; i < T.ngens(); ++i) M(r0 + i, c0 + s) = -subgroups[k][s][i];
    c0 += subgroups[k].size();
    for (std::size_t i = 0; i < T.ngens(); ++i) M(r0 + i, c0 + i) = -T.modulus(i);
    c0 += T.ngens();
    r0 += T.ngens();
  }
  std::vector<Vec> out;
  for (auto &k : integer_kernel(M)) out.push_back(slice(k, 0, n));
  return ambient.clean_generators(out);
}

std::vector<Vec> order_ideal(const OrderSpec &order, const Vec &x, Budget &budget) {
  const auto &g = order.group();
  Vec c = g.canonical(x);
  auto r = is_positive(order, c, budget);
  if (r.verdict == Verdict::Unknown) throw BudgetExhausted(r.certificate.note);
  if (r.verdict == Verdict::No) throw PreconditionError("order ideal of a non-positive element " + to_string(c));
  if (is_zero(c)) return {};
  std::vector<Vec> out;
  switch (order.kind()) {
  case OrderKind::Standard:
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] > 0) out.push_back(g.unit(i));
    break;
  case OrderKind::SimplicialCone: {
    const auto &gens = order.generators();
    Int total = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (r.certificate.data[i] > 0) out.push_back(gens[i]);
      total += r.certificate.data[i];
    }
    // Generators below a multiple of x lie in the face as well.
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (r.certificate.data[i] > 0) continue;
      auto q = is_positive(order, g.sub(g.mul(total, c), gens[i]), budget);
      if (q.verdict == Verdict::Yes) out.push_back(gens[i]);
    }
    break;
  }
  case OrderKind::StrictFirst: {
    std::size_t k = order.strict_width();
    for (auto &v : order_ideal(order.base(), slice(c, 0, k), budget)) {
      Vec w = g.zero();
      for (std::size_t i = 0; i < k; ++i) w[i] = v[i];
      out.push_back(w);
    }
    for (std::size_t i = k; i < g.ngens(); ++i) out.push_back(g.unit(i));
    break;
  }
  case OrderKind::DirectSum:
    for (auto &p : order.parts()) {
      for (auto &v : order_ideal(*p.order, pick(c, p.coords), budget)) {
        Vec w = g.zero();
        for (std::size_t i = 0; i < p.coords.size(); ++i) w[p.coords[i]] = v[i];
        out.push_back(w);
      }
    }
    break;
  case OrderKind::Quotient:
    for (auto &v : order_ideal(order.source(), r.certificate.data, budget))
      out.push_back(order.surjection().apply(v));
    break;
  case OrderKind::IdealGraded: {
    std::size_t e = order.even_group().ngens();
    auto I = order_ideal(order.even_order(), slice(c, 0, e), budget);
    for (auto &v : I) out.push_back(concat(v, order.odd_group().zero()));
    for (auto &s : assigned_subgroup(order, I)) out.push_back(concat(order.even_group().zero(), s));
    break;
  }
  case OrderKind::Intersection: {
    std::vector<GroupHom> projs;
    std::vector<std::vector<Vec>> subs;
    for (auto &t : order.terms()) {
      projs.push_back(t.projection);
      subs.push_back(order_ideal(*t.order, t.projection.apply(c), budget));
    }
    return preimage_intersection(g, projs, subs);
  }
  }
  return g.clean_generators(out);
}

OrderSpec quotient_order(const GroupHom &h, const OrderSpec &source) {
  return OrderSpec::quotient(h, source);
}

std::optional<Vec> quotient_lift(const OrderSpec &q, const Vec &w, Budget &budget) {
  if (q.kind() != OrderKind::Quotient) throw PreconditionError("not a quotient order");
  auto r = is_positive(q, w, budget);
  if (r.verdict == Verdict::Unknown) throw BudgetExhausted(r.certificate.note);
  if (r.verdict == Verdict::No) return std::nullopt;
  return r.certificate.data;
}

OrderSpec GradedOrderedGroup::even_restriction() const {
  auto amb = ambient();
  Matrix emb(amb.ngens(), even.ngens());
  for (std::size_t i = 0; i < even.ngens(); ++i) emb(i, i) = 1;
  OrderSpec::Term t{GroupHom(even, amb, emb), std::make_shared<const OrderSpec>(order)};
  return OrderSpec::intersection(even, {t});
}

std::optional<std::vector<Vec>> simplicial_basis(const OrderSpec &order) {
  const auto &g = order.group();
  if (free_coords(g).size() != g.ngens()) return std::nullopt;
  if (order.kind() == OrderKind::Standard) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < g.ngens(); ++i) out.push_back(g.unit(i));
    return out;
  }
  if (order.kind() == OrderKind::SimplicialCone) {
    const auto &gens = order.generators();
    if (gens.empty()) return gens;
    if (integer_kernel(Matrix::from_columns(g.ngens(), gens)).empty()) return gens;
  }
  return std::nullopt;
}


// ---------------------------------------------------------------------------
// Bounded axiom checks

namespace {

constexpr std::size_t kSmallWindow = 24;
constexpr std::size_t kSearchWindow = 160;
constexpr long kMaxMultiple = 4;

std::vector<Vec> window(const FGAbelianGroup &g, std::size_t height, std::size_t limit) {
  return g.elements_up_to_height(height, limit);
}

// Evaluates positivity inside a property check; Unknown counts as "not
// established" and is remembered so the report can say so.
struct Probe {
  const OrderSpec &order;
  Budget budget;
  bool unknown_seen = false;
  std::size_t examined = 0;

  Probe(const OrderSpec &o, std::uint64_t limit) : order(o), budget(limit) {}

  std::optional<bool> pos(const Vec &v) {
    if (budget.exhausted()) return std::nullopt;
    budget.step();
    auto r = is_positive(order, v, budget);
    if (r.verdict == Verdict::Unknown) {
      unknown_seen = true;
      return std::nullopt;
    }
    return r.verdict == Verdict::Yes;
  }
  bool is(const Vec &v) { return pos(v).value_or(false); }
  bool out() const { return budget.exhausted(); }
};

PropertyReport finish(std::string name, Probe &p, std::string witness, std::string note = {}) {
  PropertyReport r;
  r.name = std::move(name);
  r.examined = p.examined;
  if (!witness.empty()) {
    r.status = CheckStatus::Fail;
    r.witness = std::move(witness);
  } else if (p.examined == 0) {
    r.status = CheckStatus::Inconclusive;
  } else {
    r.status = CheckStatus::Pass;
  }
  std::string n = "bounded evidence";
  if (p.out()) n += "; budget exhausted after " + std::to_string(p.examined) + " cases";
  if (p.unknown_seen) n += "; some positivity queries were undecided";
  if (!note.empty()) n += "; " + note;
  r.note = n;
  return r;
}

std::vector<Vec> positives(Probe &p, const std::vector<Vec> &w) {
  std::vector<Vec> out;
  for (auto &v : w)
    if (p.is(v)) out.push_back(v);
  return out;
}

PropertyReport interpolation(const OrderSpec &o, std::uint64_t budget) {
  Probe p(o, budget);
  const auto &g = o.group();
  auto W = window(g, 2, kSmallWindow);
  auto P = positives(p, W);
  auto Pbig = positives(p, window(g, 4, kSearchWindow));
  // Translation invariance lets the first lower bound be 0.
  for (auto &b : W) {
    for (auto &c : P) {
      if (!p.is(g.sub(c, b))) continue;
      for (auto &d : P) {
        if (p.out()) return finish("riesz_interpolation", p, "");
        if (!p.is(g.sub(d, b))) continue;
        ++p.examined;
        bool ok = false;
        for (auto &e : Pbig) {
          if (p.is(g.sub(e, b)) && p.is(g.sub(c, e)) && p.is(g.sub(d, e))) { ok = true; break; }
        }
        if (!ok && !p.out())
          return finish("riesz_interpolation", p,
                        "0, " + to_string(b) + " <= " + to_string(c) + ", " + to_string(d) +
                            " has no interpolant within the search window");
      }
    }
  }
  return finish("riesz_interpolation", p, "");
}

PropertyReport decomposition(const OrderSpec &o, std::uint64_t budget) {
  Probe p(o, budget);
  const auto &g = o.group();
  auto P = positives(p, window(g, 2, kSmallWindow));
  auto Pbig = positives(p, window(g, 4, kSearchWindow));
  for (auto &x : P) {
    for (auto &y : P) {
      for (auto &z : P) {
        if (p.out()) return finish("riesz_decomposition", p, "");
        if (!p.is(g.sub(g.add(y, z), x))) continue;
        ++p.examined;
        bool ok = false;
        for (auto &y1 : Pbig) {
          Vec z1 = g.sub(x, y1);
          if (p.is(g.sub(y, y1)) && p.is(z1) && p.is(g.sub(z, z1))) { ok = true; break; }
        }
        if (!ok && !p.out())
          return finish("riesz_decomposition", p,
                        to_string(x) + " <= " + to_string(y) + " + " + to_string(z) +
                            " has no decomposition within the search window");
      }
    }
  }
  return finish("riesz_decomposition", p, "");
}

PropertyReport unperforation(const OrderSpec &o, std::uint64_t budget) {
  Probe p(o, budget);
  const auto &g = o.group();
  for (auto &x : window(g, 3, kSearchWindow)) {
    if (p.out()) break;
    auto px = p.pos(x);
    if (!px || *px) continue;
    for (long m = 2; m <= kMaxMultiple; ++m) {
      ++p.examined;
      if (p.is(g.mul(m, x)))
        return finish("unperforated", p,
                      "m = " + std::to_string(m) + ", x = " + to_string(x) + ": m*x >= 0 but x is not");
    }
  }
  return finish("unperforated", p, "");
}

std::vector<Vec> torsion_elements(const FGAbelianGroup &g, std::size_t limit) {
  std::vector<Vec> out{g.zero()};
  for (std::size_t i = 0; i < g.ngens(); ++i) {
    if (g.is_free_coord(i)) continue;
    std::vector<Vec> next;
    for (auto &v : out) {
      for (Int k = 0; k < g.modulus(i) && next.size() < limit; ++k) {
        Vec w = v;
        w[i] = k;
        next.push_back(w);
      }
    }
    out = std::move(next);
  }
  return out;
}

PropertyReport weak_unperforation(const OrderSpec &o, std::uint64_t budget) {
  Probe p(o, budget);
  const auto &g = o.group();
  auto tor = torsion_elements(g, 64);
  for (auto &x : window(g, 3, kSearchWindow)) {
    for (long m = 2; m <= kMaxMultiple; ++m) {
      if (p.out()) return finish("weakly_unperforated", p, "");
      if (!p.is(g.mul(m, x))) continue;
      ++p.examined;
      bool ok = false;
      for (auto &t : tor) {
        if (!is_zero(g.mul(m, t))) continue;
        if (p.is(g.add(x, t))) { ok = true; break; }
      }
      if (!ok && !p.out())
        return finish("weakly_unperforated", p,
                      "m = " + std::to_string(m) + ", x = " + to_string(x) +
                          ": m*x >= 0 and no torsion t with m*t = 0 makes x + t >= 0");
    }
  }
  for (auto &y : positives(p, window(g, 2, kSmallWindow))) {
    for (auto &t : tor) {
      if (is_zero(t)) continue;
      for (long n = 1; n <= kMaxMultiple; ++n) {
        if (p.out()) return finish("weakly_unperforated", p, "");
        if (!p.is(g.add(g.mul(n, y), t))) continue;
        ++p.examined;
        if (!p.is(g.add(y, t)) || !p.is(g.sub(y, t)))
          return finish("weakly_unperforated", p,
                        "y = " + to_string(y) + ", t = " + to_string(t) + ", n = " +
                            std::to_string(n) + ": n*y + t >= 0 but y +- t is not positive");
        break;
      }
    }
  }
  return finish("weakly_unperforated", p, "");
}

// Odd splitting: (g1 + g2, y) >= 0 with g1, g2 >= 0 gives y = y1 + y2 with
// (g1, y1) >= 0 and (g2, y2) >= 0.
PropertyReport odd_splitting(const GradedOrderedGroup &G, std::uint64_t budget, const std::string &name) {
  Probe p(G.order, budget);
  auto evenP = [&]() {
    std::vector<Vec> out;
    for (auto &x : window(G.even, 2, 12))
      if (p.is(G.join(x, G.odd.zero()))) out.push_back(x);
    return out;
  }();
  auto Y = window(G.odd, 2, kSmallWindow);
  auto Ybig = window(G.odd, 3, kSearchWindow);
  for (auto &g1 : evenP) {
    for (auto &g2 : evenP) {
      for (auto &y : Y) {
        if (p.out()) return finish(name, p, "");
        if (!p.is(G.join(G.even.add(g1, g2), y))) continue;
        ++p.examined;
        bool ok = false;
        for (auto &y1 : Ybig) {
          if (p.is(G.join(g1, y1)) && p.is(G.join(g2, G.odd.sub(y, y1)))) { ok = true; break; }
        }
        if (!ok && !p.out())
          return finish(name, p,
                        "(" + to_string(G.even.add(g1, g2)) + ", " + to_string(y) +
                            ") does not split along " + to_string(g1) + " + " + to_string(g2));
      }
    }
  }
  return finish(name, p, "");
}

PropertyReport merge(PropertyReport a, const PropertyReport &b) {
  if (a.status != CheckStatus::Fail && b.status == CheckStatus::Fail) {
    a.status = CheckStatus::Fail;
    a.witness = b.witness;
  } else if (a.status == CheckStatus::Pass && b.status == CheckStatus::Inconclusive) {
    a.status = CheckStatus::Inconclusive;
  }
  a.examined += b.examined;
  a.note += "; odd splitting: " + to_string(b.status);
  return a;
}

} // namespace

PropertyReport check_graded(const GradedOrderedGroup &G, std::uint64_t budget) {
  Probe p(G.order, budget);
  auto X = window(G.even, 2, 12);
  auto Y = window(G.odd, 2, kSmallWindow);
  for (auto &x : X) {
    std::vector<Vec> good;
    for (auto &y : Y)
      if (p.is(G.join(x, y))) good.push_back(y);
    for (auto &y : good) {
      for (auto &y2 : good) {
        if (p.out()) return finish("graded", p, "");
        ++p.examined;
        for (int sign : {1, -1}) {
          Vec z = sign > 0 ? G.odd.add(y, y2) : G.odd.sub(y, y2);
          if (!p.is(G.join(x, z)) && !p.out())
            return finish("graded", p,
                          "x = " + to_string(x) + ", y = " + to_string(y) + ", y' = " + to_string(y2) +
                              ": (x, y " + (sign > 0 ? "+" : "-") + " y') is not positive");
        }
      }
    }
  }
  return finish("graded", p, "");
}

OrderAxiomsReport check_order_axioms(const OrderSpec &order, std::uint64_t budget) {
  return {interpolation(order, budget), decomposition(order, budget), unperforation(order, budget),
          weak_unperforation(order, budget)};
}

OrderAxiomsReport check_order_axioms(const GradedOrderedGroup &G, std::uint64_t budget) {
  auto even = G.even_restriction();
  OrderAxiomsReport r;
  auto split = odd_splitting(G, budget, "odd_splitting");
  r.riesz_interpolation = merge(interpolation(even, budget), split);
  r.riesz_decomposition = merge(decomposition(even, budget), split);
  r.unperforated = unperforation(even, budget);
  r.unperforated.note += "; checked on the even part";
  r.weakly_unperforated = weak_unperforation(G.order, budget);
  return r;
}

} // namespace kcx
