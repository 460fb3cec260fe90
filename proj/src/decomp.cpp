#include "kcx/decomp.hpp"

#include <functional>
#include <map>

namespace kcx {

namespace {

std::vector<Vec> finite_elements(const FGAbelianGroup &g) {
  std::vector<Vec> out{g.zero()};
  for (std::size_t i = 0; i < g.ngens(); ++i) {
    std::vector<Vec> next;
    for (auto &v : out)
      for (Int k = 0; k < g.modulus(i); ++k) {
        Vec w = v;
        w[i] = k;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

bool small_finite(const FGAbelianGroup &g, long cap) {
  return g.is_finite() && g.order() <= cap;
}

Matrix atom_matrix(const FGAbelianGroup &g, const std::vector<Vec> &atoms) {
  return Matrix::from_columns(g.ngens(), atoms);
}

// Nonnegative atom coordinates of a positive even element.
Vec atom_coords(const FGAbelianGroup &g, const std::vector<Vec> &atoms, const Vec &x) {
  auto c = solve_linear(atom_matrix(g, atoms), x);
  if (!c) throw PreconditionError(to_string(x) + " is not in the span of the positive atoms");
  for (auto &v : *c)
    if (v < 0) throw PreconditionError(to_string(x) + " is not positive");
  return *c;
}

Vec sum_of(const FGAbelianGroup &g, const std::vector<Vec> &xs) {
  Vec s = g.zero();
  for (auto &x : xs) s = g.add(s, x);
  return s;
}

// Coordinate basis detection: units are positive and, on a window, positivity
// agrees with coordinatewise nonnegativity.
std::optional<std::vector<Vec>> order_basis(const OrderSpec &o, Budget &budget) {
  if (auto b = simplicial_basis(o)) return b;
  const auto &g = o.group();
  for (std::size_t i = 0; i < g.ngens(); ++i)
    if (!g.is_free_coord(i)) return std::nullopt;
  for (std::size_t i = 0; i < g.ngens(); ++i)
    if (!positive(o, g.unit(i), budget)) return std::nullopt;
  for (auto &x : g.elements_up_to_height(3, 120)) {
    bool nonneg = true;
    for (auto &c : x) nonneg = nonneg && c >= 0;
    if (positive(o, x, budget) != nonneg) return std::nullopt;
  }
  std::vector<Vec> units;
  for (std::size_t i = 0; i < g.ngens(); ++i) units.push_back(g.unit(i));
  return units;
}

// Odd coordinates tied to even coordinate c by a strict order, if the order is
// a (nested) direct sum of strict orders.
std::optional<std::vector<std::size_t>> strict_face(const OrderSpec &o, const std::vector<bool> &even,
                                                     std::size_t c) {
  switch (o.kind()) {
  case OrderKind::StrictFirst: {
    std::size_t k = o.strict_width();
    if (c >= k) return std::nullopt;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < even.size(); ++i) {
      if (even[i] != (i < k)) return std::nullopt;
      if (!even[i]) out.push_back(i);
    }
    return out;
  }
  case OrderKind::DirectSum:
    for (auto &p : o.parts()) {
      for (std::size_t a = 0; a < p.coords.size(); ++a) {
        if (p.coords[a] != c) continue;
        std::vector<bool> sub;
        for (auto pc : p.coords) sub.push_back(even[pc]);
        auto f = strict_face(*p.order, sub, a);
        if (!f) return std::nullopt;
        std::vector<std::size_t> out;
        for (auto i : *f) out.push_back(p.coords[i]);
        return out;
      }
    }
    return std::nullopt;
  default:
    return std::nullopt;
  }
}

struct AtomData {
  std::vector<Vec> atoms;
  std::vector<std::vector<Vec>> faces;
};

AtomData atom_data(const GradedOrderedGroup &g, Budget &b) {
  AtomData d;
  d.atoms = even_atoms(g, b);
  d.faces = odd_faces(g, d.atoms, b);
  return d;
}

// Splits an odd element across atom faces: w_t in face t, sum w_t = y, using
// only atoms in `allowed`.
std::optional<std::vector<Vec>> split_over_faces(const FGAbelianGroup &odd, const AtomData &d,
                                                 const std::vector<bool> &allowed, const Vec &y) {
  std::vector<Vec> gens;
  std::vector<std::size_t> owner;
  for (std::size_t t = 0; t < d.atoms.size(); ++t) {
    if (!allowed[t]) continue;
    for (auto &f : d.faces[t]) {
      gens.push_back(f);
      owner.push_back(t);
    }
  }
  std::vector<Vec> w(d.atoms.size(), odd.zero());
  if (is_zero(odd.canonical(y))) return w;
  auto c = odd.span_coefficients(gens, y);
  if (!c) return std::nullopt;
  for (std::size_t i = 0; i < gens.size(); ++i)
    w[owner[i]] = odd.add(w[owner[i]], odd.mul((*c)[i], gens[i]));
  return w;
}

} // namespace

std::vector<Vec> even_atoms(const GradedOrderedGroup &g, Budget &budget) {
  if (g.order.kind() == OrderKind::IdealGraded)
    if (auto b = simplicial_basis(g.order.even_order())) return *b;
  if (auto b = order_basis(g.even_restriction(), budget)) return *b;
  throw UnsupportedError("the even order has no recognizable simplicial basis");
}

std::vector<std::vector<Vec>> odd_faces(const GradedOrderedGroup &g, const std::vector<Vec> &atoms,
                                        Budget &budget) {
  std::vector<std::vector<Vec>> out;
  if (small_finite(g.odd, 4096)) {
    auto all = finite_elements(g.odd);
    for (auto &a : atoms) {
      std::vector<Vec> face;
      for (auto &s : all)
        if (!is_zero(s) && positive(g.order, g.join(a, s), budget)) face.push_back(s);
      out.push_back(g.odd.clean_generators(face));
    }
    return out;
  }
  if (g.order.kind() == OrderKind::IdealGraded) {
    for (auto &a : atoms)
      out.push_back(assigned_subgroup(g.order, order_ideal(g.order.even_order(), a, budget)));
    return out;
  }
  std::vector<bool> even(g.even.ngens() + g.odd.ngens(), false);
  for (std::size_t i = 0; i < g.even.ngens(); ++i) even[i] = true;
  for (auto &a : atoms) {
    std::optional<std::size_t> coord;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (coord || a[i] != 1) throw UnsupportedError("odd faces need unit atoms for this order");
      coord = i;
    }
    if (!coord) throw UnsupportedError("zero atom");
    auto f = strict_face(g.order, even, *coord);
    if (!f) throw UnsupportedError("odd faces are not computable for order " + g.order.describe());
    std::vector<Vec> face;
    for (auto i : *f) face.push_back(g.odd.unit(i - g.even.ngens()));
    out.push_back(face);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Vec> dominate_split(const GradedOrderedGroup &g, const Vec &total,
                                const std::vector<Vec> &odd, std::uint64_t budget) {
  Budget b(budget);
  if (odd.empty()) throw PreconditionError("dominate_split needs at least one odd element");
  if (!positive(g.order, g.join(total, g.odd.zero()), b))
    throw PreconditionError("g = " + to_string(total) + " is not positive");
  for (auto &s : odd)
    if (!positive(g.order, g.join(total, s), b))
      throw PreconditionError(to_string(s) + " is not below g = " + to_string(total));
  if (odd.size() == 1) return {g.even.canonical(total)};

  auto d = atom_data(g, b);
  Vec c = atom_coords(g.even, d.atoms, total);
  std::size_t na = d.atoms.size();
  // Minimal atom support each odd element needs.
  std::vector<std::vector<bool>> need;
  for (auto &s : odd) {
    std::vector<bool> T(na);
    for (std::size_t t = 0; t < na; ++t) T[t] = c[t] > 0;
    for (std::size_t t = 0; t < na; ++t) {
      if (!T[t]) continue;
      T[t] = false;
      if (!split_over_faces(g.odd, d, T, s)) T[t] = true;
    }
    need.push_back(T);
  }
  std::vector<Vec> coef(odd.size(), Vec(na));
  for (std::size_t t = 0; t < na; ++t) {
    Int count = 0;
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < odd.size(); ++i)
      if (need[i][t]) {
        ++count;
        coef[i][t] = 1;
        if (!first) first = i;
      }
    if (count > c[t])
      throw PreconditionError("hypotheses fail: atom " + std::to_string(t) + " occurs " + c[t].get_str() +
                              " times in g but " + count.get_str() +
                              " odd elements each need a share of it (Riesz decomposition fails here)");
    coef[first.value_or(0)][t] += c[t] - count;
  }
  std::vector<Vec> parts;
  for (auto &cf : coef) {
    Vec v = g.even.zero();
    for (std::size_t t = 0; t < na; ++t) v = g.even.add(v, g.even.mul(cf[t], d.atoms[t]));
    parts.push_back(v);
  }
  for (std::size_t i = 0; i < odd.size(); ++i)
    if (!positive(g.order, g.join(parts[i], odd[i]), b))
      throw UnsupportedError("structural domination split failed to verify for this order");
  return parts;
}

bool independent(const FGAbelianGroup &g, const std::vector<std::vector<Vec>> &subgroups) {
  std::vector<Vec> cols;
  std::vector<std::size_t> owner;
  for (std::size_t j = 0; j < subgroups.size(); ++j)
    for (auto &h : subgroups[j]) {
      cols.push_back(h);
      owner.push_back(j);
    }
  std::size_t nh = cols.size();
  for (std::size_t i = 0; i < g.ngens(); ++i)
    if (!g.is_free_coord(i)) {
      Vec r = g.zero();
      r[i] = g.modulus(i);
      cols.push_back(r);
    }
  if (nh == 0) return true;
  for (auto &k : integer_kernel(Matrix::from_columns(g.ngens(), cols))) {
    std::vector<Vec> part(subgroups.size(), g.zero());
    for (std::size_t i = 0; i < nh; ++i) part[owner[i]] = g.add(part[owner[i]], g.mul(k[i], cols[i]));
    for (auto &p : part)
      if (!is_zero(p)) return false;
  }
  return true;
}

IndependentRefinement independent_refine(const GradedOrderedGroup &g, const Vec &x,
                                         const std::vector<Vec> &evens, std::uint64_t budget) {
  Budget b(budget);
  if (evens.empty()) throw PreconditionError("independent_refine needs at least one even element");
  for (auto &e : evens)
    if (!positive(g.order, g.join(e, g.odd.zero()), b))
      throw PreconditionError(to_string(e) + " is not positive");
  Vec total = sum_of(g.even, evens);
  Vec xc = g.odd.canonical(x);
  if (!positive(g.order, g.join(total, xc), b))
    throw PreconditionError(to_string(x) + " is not below the sum of the even elements");
  IndependentRefinement out;
  if (evens.size() == 1) {
    out.subgroups = {g.odd.clean_generators({xc})};
    out.parts = {xc};
    return out;
  }
  auto d = atom_data(g, b);
  std::size_t na = d.atoms.size();
  std::vector<Vec> coords;
  for (auto &e : evens) coords.push_back(atom_coords(g.even, d.atoms, e));
  std::vector<std::optional<std::size_t>> owner(na);
  std::vector<bool> allowed(na, false);
  for (std::size_t t = 0; t < na; ++t)
    for (std::size_t j = 0; j < evens.size(); ++j)
      if (coords[j][t] > 0) {
        owner[t] = j;
        allowed[t] = true;
        break;
      }
  auto w = split_over_faces(g.odd, d, allowed, xc);
  if (!w) throw UnsupportedError("odd element is not a sum of face elements");
  out.subgroups.assign(evens.size(), {});
  out.parts.assign(evens.size(), g.odd.zero());
  for (std::size_t t = 0; t < na; ++t) {
    if (!owner[t]) continue;
    auto j = *owner[t];
    for (auto &f : d.faces[t]) out.subgroups[j].push_back(f);
    out.parts[j] = g.odd.add(out.parts[j], (*w)[t]);
  }
  for (auto &h : out.subgroups) h = g.odd.clean_generators(h);
  if (!independent(g.odd, out.subgroups))
    throw UnsupportedError("the face subgroups of this order are not independent");
  for (std::size_t j = 0; j < evens.size(); ++j)
    for (auto &h : out.subgroups[j])
      if (!positive(g.order, g.join(evens[j], h), b))
        throw UnsupportedError("face subgroup is not dominated by its even element");
  return out;
}

std::vector<Vec> tarski_split(const OrderSpec &order, const Vec &a, const Vec &b, const Int &n) {
  if (n < 1) throw PreconditionError("tarski_split needs n >= 1");
  Budget budget;
  const auto &g = order.group();
  if (!positive(order, a, budget) || !positive(order, b, budget))
    throw PreconditionError("a and b must be positive");
  if (!positive(order, g.sub(g.mul(n, b), a), budget))
    throw PreconditionError("a <= n*b fails");
  auto basis = order_basis(order, budget);
  if (!basis) throw UnsupportedError("tarski_split needs a simplicial order");
  Vec ca = atom_coords(g, *basis, a), cb = atom_coords(g, *basis, b);
  std::size_t N = n.get_ui();
  std::vector<Vec> coef(N + 1, Vec(basis->size()));
  for (std::size_t t = 0; t < basis->size(); ++t) {
    if (cb[t] == 0) continue; // then ca[t] == 0 too
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ca[t].get_mpz_t(), cb[t].get_mpz_t());
    std::size_t qi = q.get_ui();
    coef[qi][t] += cb[t] - r;
    if (r != 0) coef[qi + 1][t] += r;
  }
  std::vector<Vec> out;
  for (auto &cf : coef) {
    Vec v = g.zero();
    for (std::size_t t = 0; t < basis->size(); ++t) v = g.add(v, g.mul(cf[t], (*basis)[t]));
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::vector<Triple>> triple_split_structural(const NCoefficientComplex &X, const Triple &t,
                                                           const std::vector<Vec> &evens,
                                                           const std::optional<std::vector<Vec>> &odd_parts,
                                                           Budget &b) {
  AtomData star = atom_data(X.star, b);
  AtomData nat{star.atoms, odd_faces(X.nat, star.atoms, b)};
  std::size_t na = star.atoms.size();
  std::vector<Vec> coords;
  for (auto &e : evens) coords.push_back(atom_coords(X.G0, star.atoms, e));
  std::vector<std::optional<std::size_t>> owner(na);
  std::vector<bool> allowed(na, false);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t j = 0; j < evens.size(); ++j)
      if (coords[j][a] > 0) {
        owner[a] = j;
        allowed[a] = true;
        break;
      }
  auto wf = split_over_faces(X.Gn, nat, allowed, t.y);
  if (!wf) return std::nullopt;
  std::optional<std::vector<Vec>> wg;
  if (!odd_parts) {
    wg = split_over_faces(X.G1, star, allowed, t.z);
    if (!wg) return std::nullopt;
  }
  std::vector<Triple> out;
  for (std::size_t j = 0; j < evens.size(); ++j)
    out.push_back({X.G0.canonical(evens[j]), X.Gn.zero(), odd_parts ? X.G1.canonical((*odd_parts)[j]) : X.G1.zero()});
  for (std::size_t a = 0; a < na; ++a) {
    if (!owner[a]) continue;
    auto j = *owner[a];
    out[j].y = X.Gn.add(out[j].y, (*wf)[a]);
    if (wg) out[j].z = X.G1.add(out[j].z, (*wg)[a]);
  }
  for (auto &p : out)
    if (!positive_triple(X, p, b)) return std::nullopt;
  return out;
}

std::vector<Triple> triple_split_search(const NCoefficientComplex &X, const Triple &t,
                                        const std::vector<Vec> &evens,
                                        const std::optional<std::vector<Vec>> &odd_parts, Budget &b) {
  if (!small_finite(X.Gn, 4096)) throw UnsupportedError("triple_split search needs a small finite Gn");
  auto ys = finite_elements(X.Gn);
  std::vector<Vec> zs = small_finite(X.G1, 4096) ? finite_elements(X.G1) : X.G1.elements_up_to_height(2, 64);
  std::size_t k = evens.size();
  std::vector<Triple> cur(k);
  std::function<bool(std::size_t, const Vec &, const Vec &)> rec = [&](std::size_t j, const Vec &fy,
                                                                      const Vec &fz) -> bool {
    if (j + 1 == k) {
      cur[j] = {evens[j], fy, odd_parts ? (*odd_parts)[j] : fz};
      b.require("triple_split search");
      return positive_triple(X, cur[j], b);
    }
    for (auto &y : ys) {
      if (odd_parts) {
        Triple p{evens[j], y, (*odd_parts)[j]};
        b.require("triple_split search");
        if (!positive_triple(X, p, b)) continue;
        cur[j] = p;
        if (rec(j + 1, X.Gn.sub(fy, y), fz)) return true;
        continue;
      }
      for (auto &z : zs) {
        Triple p{evens[j], y, z};
        b.require("triple_split search");
        if (!positive_triple(X, p, b)) continue;
        cur[j] = p;
        if (rec(j + 1, X.Gn.sub(fy, y), X.G1.sub(fz, z))) return true;
      }
    }
    return false;
  };
  if (!rec(0, t.y, t.z)) throw UnsupportedError("no positive split found within the search window");
  return cur;
}

} // namespace

std::vector<Triple> triple_split(const NCoefficientComplex &X, const Triple &t, const std::vector<Vec> &evens,
                                 const std::optional<std::vector<Vec>> &odd_parts, std::uint64_t budget) {
  Budget b(budget);
  if (evens.empty()) throw PreconditionError("triple_split needs at least one even part");
  if (!positive_triple(X, t, b)) throw PreconditionError("the triple is not positive");
  if (!X.G0.equal(sum_of(X.G0, evens), t.x)) throw PreconditionError("the even parts do not sum to e");
  for (auto &e : evens)
    if (!positive(X.star.order, concat(e, X.G1.zero()), b))
      throw PreconditionError(to_string(e) + " is not positive");
  if (odd_parts) {
    if (odd_parts->size() != evens.size()) throw DimensionError("one odd part per even part is needed");
    if (!X.G1.equal(sum_of(X.G1, *odd_parts), t.z)) throw PreconditionError("the odd parts do not sum to g");
    for (std::size_t j = 0; j < evens.size(); ++j)
      if (!positive(X.star.order, concat(evens[j], (*odd_parts)[j]), b))
        throw PreconditionError("prescribed odd part " + std::to_string(j) + " is not below its even part");
  }
  if (evens.size() == 1) return {{X.G0.canonical(t.x), X.Gn.canonical(t.y), X.G1.canonical(t.z)}};
  try {
    if (auto r = triple_split_structural(X, t, evens, odd_parts, b)) return *r;
  } catch (const UnsupportedError &) {
  }
  return triple_split_search(X, t, evens, odd_parts, b);
}

// ---------------------------------------------------------------------------

namespace {

Vec block_part(const Vec &v, std::size_t off, std::size_t len) { return slice(v, off, len); }

void put(Vec &v, std::size_t off, const Vec &part) {
  for (std::size_t i = 0; i < part.size(); ++i) v[off + i] = part[i];
}

// Least-height lift y of z in one block with (x, y) >= 0.
std::optional<Vec> block_lift(const NCoefficientComplex &blk, const Int &x, const Vec &z, Budget &b) {
  std::optional<Vec> best;
  Int best_h;
  for (auto &y : finite_elements(blk.Gn)) {
    if (!blk.G1.equal(blk.beta.apply(y), z)) continue;
    if (!positive(blk.nat.order, concat(Vec{x}, y), b)) continue;
    Int h = blk.Gn.height(y);
    if (!best || h < best_h) {
      best = y;
      best_h = h;
    }
  }
  return best;
}

} // namespace

SystemRefinement system_refine(const NCoefficientComplex &X, const SystemInput &in, std::uint64_t budget) {
  if (!X.is_block_sum()) throw UnsupportedError("system_refine is implemented for direct sums of building blocks");
  Budget b(budget);
  std::size_t k = in.e.size(), r = in.x.size();
  if (in.f.size() != k || in.z.size() != r || in.lambda.rows() != k || in.lambda.cols() != r ||
      in.delta.rows() != k || in.delta.cols() != r)
    throw DimensionError("system_refine: inconsistent sizes");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (in.lambda(i, j) < 0 || in.delta(i, j) < 0) throw PreconditionError("coefficients must be nonnegative");
  for (std::size_t i = 0; i < k; ++i) {
    if (!positive_triple(X, {in.e[i], in.f[i], X.G1.zero()}, b))
      throw PreconditionError("(e, f, 0) number " + std::to_string(i) + " is not positive");
    Vec se = X.G0.zero();
    Vec sz = X.G1.zero();
    for (std::size_t j = 0; j < r; ++j) {
      se = X.G0.add(se, X.G0.mul(in.lambda(i, j), in.x[j]));
      sz = X.G1.add(sz, X.G1.mul(in.delta(i, j), in.z[j]));
    }
    if (!X.G0.equal(se, in.e[i])) throw PreconditionError("e_" + std::to_string(i) + " != sum lambda x");
    if (!X.G1.equal(sz, X.beta.apply(in.f[i])))
      throw PreconditionError("beta(f_" + std::to_string(i) + ") != sum delta z");
  }
  for (std::size_t j = 0; j < r; ++j)
    if (!positive(X.star.order, concat(in.x[j], in.z[j]), b))
      throw PreconditionError("z_" + std::to_string(j) + " is not below x_" + std::to_string(j));

  std::size_t B = X.nblocks();
  std::vector<NCoefficientComplex> blocks;
  for (auto &l : X.labels) blocks.push_back(building_block(l));

  // Lifts y_j, blockwise.
  std::vector<Vec> y(r, X.Gn.zero());
  for (std::size_t j = 0; j < r; ++j) {
    bool used = false;
    for (std::size_t i = 0; i < k; ++i) used = used || in.delta(i, j) != 0;
    for (std::size_t bi = 0; bi < B; ++bi) {
      const auto &sp = X.spans[bi];
      Vec zb = block_part(X.G1.canonical(in.z[j]), sp.g1, sp.g1_len);
      auto lift = block_lift(blocks[bi], in.x[j][sp.g0], zb, b);
      if (!lift) {
        if (used) throw PreconditionError("z_" + std::to_string(j) + " has no lift below x_" + std::to_string(j));
        lift = blocks[bi].Gn.zero();
      }
      put(y[j], sp.gn, *lift);
    }
  }

  // Residuals rho(c_i) = f_i - sum delta y, placed blockwise on some x_j.
  // C[i][j] holds the per-block values of c_ij.
  const Int &n = X.n;
  std::vector<std::vector<Vec>> C(k, std::vector<Vec>(r, Vec(B)));
  for (std::size_t i = 0; i < k; ++i) {
    Vec res = in.f[i];
    for (std::size_t j = 0; j < r; ++j) res = X.Gn.sub(res, X.Gn.mul(in.delta(i, j), y[j]));
    for (std::size_t bi = 0; bi < B; ++bi) {
      const auto &sp = X.spans[bi];
      Vec rb = block_part(res, sp.gn, sp.gn_len);
      std::optional<Int> c;
      for (Int v = 0; v < n; ++v)
        if (blocks[bi].Gn.equal(blocks[bi].rho.apply(Vec{v}), rb)) { c = v; break; }
      if (!c) throw PreconditionError("residual is not in the image of rho");
      if (*c == 0) continue;
      std::optional<std::size_t> owner;
      for (std::size_t j = 0; j < r && !owner; ++j)
        if (in.lambda(i, j) > 0 && in.x[j][sp.g0] > 0) owner = j;
      if (!owner)
        throw PreconditionError("hypotheses fail: the rho-residual of f_" + std::to_string(i) + " in block " +
                                std::to_string(bi) + " lies outside I(e_" + std::to_string(i) + ")");
      C[i][*owner][bi] = *c;
    }
  }

  SystemRefinement out;
  std::vector<std::vector<Int>> piece_coef;
  for (std::size_t j = 0; j < r; ++j) {
    // Each x_j is cut into unit atoms per block; Tarski assigns every atom a
    // coefficient per i, and atoms with equal coefficient tuples form a piece.
    std::map<std::vector<Int>, std::size_t> piece_of;
    for (std::size_t bi = 0; bi < B; ++bi) {
      const auto &sp = X.spans[bi];
      Int X_b = in.x[j][sp.g0];
      if (X_b <= 0) continue;
      std::size_t units = X_b.get_ui();
      std::vector<std::vector<Int>> unit_coef(units, std::vector<Int>(k, 0));
      for (std::size_t i = 0; i < k; ++i) {
        auto parts = tarski_split(OrderSpec::standard(FGAbelianGroup::free(1)), Vec{C[i][j][bi]}, Vec{X_b}, n);
        std::size_t u = 0;
        for (std::size_t q = parts.size(); q-- > 0;)
          for (Int cnt = 0; cnt < parts[q][0]; ++cnt) unit_coef[u++][i] = Int(q);
      }
      for (std::size_t u = 0; u < units; ++u) {
        auto it = piece_of.find(unit_coef[u]);
        std::size_t l;
        if (it == piece_of.end()) {
          l = out.x.size();
          piece_of[unit_coef[u]] = l;
          piece_coef.push_back(unit_coef[u]);
          out.x.push_back(X.G0.zero());
          out.y.push_back(X.Gn.zero());
          out.parent.push_back(j);
        } else {
          l = it->second;
        }
        out.x[l][sp.g0] += 1;
        if (u == 0) put(out.y[l], sp.gn, block_part(y[j], sp.gn, sp.gn_len));
      }
    }
  }
  std::size_t s = out.x.size();
  out.gamma = Matrix(k, s);
  out.kappa = Matrix(k, s);
  out.nmat = Matrix(k, s);
  for (std::size_t l = 0; l < s; ++l) {
    for (std::size_t i = 0; i < k; ++i) {
      out.gamma(i, l) = in.lambda(i, out.parent[l]);
      out.kappa(i, l) = in.delta(i, out.parent[l]);
      out.nmat(i, l) = piece_coef[l][i];
    }
    out.z.push_back(X.beta.apply(out.y[l]));
  }
  if (auto bad = check_system_refinement(X, in, out, budget))
    throw Error("system_refine produced an invalid refinement: " + *bad);
  return out;
}

std::optional<std::string> check_system_refinement(const NCoefficientComplex &X, const SystemInput &in,
                                                   const SystemRefinement &out, std::uint64_t budget) {
  Budget b(budget);
  std::size_t k = in.e.size(), r = in.x.size(), s = out.x.size();
  if (out.y.size() != s || out.z.size() != s || out.parent.size() != s)
    return "refinement lists have different lengths";
  if (out.gamma.rows() != k || out.gamma.cols() != s || out.kappa.rows() != k || out.kappa.cols() != s ||
      out.nmat.rows() != k || out.nmat.cols() != s)
    return "coefficient matrices have the wrong shape";
  for (std::size_t j = 0; j < r; ++j) {
    Vec sx = X.G0.zero(), sz = X.G1.zero();
    for (std::size_t l = 0; l < s; ++l)
      if (out.parent[l] == j) {
        sx = X.G0.add(sx, out.x[l]);
        sz = X.G1.add(sz, out.z[l]);
      }
    if (!X.G0.equal(sx, in.x[j])) return "pieces of x_" + std::to_string(j) + " do not sum to it";
    if (!X.G1.equal(sz, in.z[j])) return "pieces of z_" + std::to_string(j) + " do not sum to it";
  }
  for (std::size_t l = 0; l < s; ++l) {
    if (!X.G1.equal(X.beta.apply(out.y[l]), out.z[l])) return "lift " + std::to_string(l) + " does not map to its z";
    if (!positive(X.nat.order, concat(out.x[l], out.y[l]), b))
      return "lift " + std::to_string(l) + " is not below its x";
  }
  for (std::size_t i = 0; i < k; ++i) {
    Vec se = X.G0.zero(), sf = X.Gn.zero();
    for (std::size_t l = 0; l < s; ++l) {
      if (out.gamma(i, l) < 0 || out.kappa(i, l) < 0 || out.nmat(i, l) < 0) return "negative coefficient";
      if (out.nmat(i, l) != 0 && out.gamma(i, l) == 0)
        return "support condition fails at (" + std::to_string(i) + ", " + std::to_string(l) + ")";
      se = X.G0.add(se, X.G0.mul(out.gamma(i, l), out.x[l]));
      sf = X.Gn.add(sf, X.Gn.add(X.Gn.mul(out.kappa(i, l), out.y[l]),
                                 X.Gn.mul(out.nmat(i, l), X.rho.apply(out.x[l]))));
    }
    if (!X.G0.equal(se, in.e[i])) return "e_" + std::to_string(i) + " != sum gamma x";
    if (!X.Gn.equal(sf, in.f[i])) return "f_" + std::to_string(i) + " != sum kappa y + n rho(x)";
  }
  return std::nullopt;
}

} // namespace kcx
