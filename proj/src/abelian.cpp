#include "kcx/abelian.hpp"

#include <algorithm>
#include <functional>

namespace kcx {

namespace {

struct SmithWork {
  Matrix A, U, V, Vinv;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A(i, c), A(j, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A(r, i), A(r, j));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
    for (std::size_t c = 0; c < Vinv.cols(); ++c) std::swap(Vinv(i, c), Vinv(j, c));
  }
  // row i += q * row j
  void add_row(std::size_t i, std::size_t j, const Int &q) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) += q * A(j, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) += q * U(j, c);
  }
  // col i += q * col j
  void add_col(std::size_t i, std::size_t j, const Int &q) {
    for (std::size_t r = 0; r < A.rows(); ++r) A(r, i) += q * A(r, j);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, i) += q * V(r, j);
    for (std::size_t c = 0; c < Vinv.cols(); ++c) Vinv(j, c) -= q * Vinv(i, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < A.cols(); ++c) A(i, c) = -A(i, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
  }
};

} // namespace

SmithResult smith_normal_form(const Matrix &M) {
  const std::size_t m = M.rows(), n = M.cols();
  SmithWork w{M, Matrix::identity(m), Matrix::identity(n), Matrix::identity(n)};
  Matrix &A = w.A;
  std::size_t t = 0;
  while (t < std::min(m, n)) {
    // global pivot: smallest |entry|, lowest row, then lowest column
    bool found = false;
    std::size_t pi = 0, pj = 0;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (A(i, j) == 0) continue;
        if (!found || abs(A(i, j)) < abs(A(pi, pj))) {
          found = true;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        Int q = A(i, t) / A(t, t);
        w.add_row(i, t, -q);
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        Int q = A(t, j) / A(t, t);
        w.add_col(j, t, -q);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) {
        // bring the smallest leftover remainder in row/column t to the pivot
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (A(i, t) != 0 && abs(A(i, t)) < abs(A(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(t, j) != 0 && abs(A(t, j)) < abs(A(bi, bj))) {
            bi = t;
            bj = j;
          }
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            w.add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (A(t, t) < 0) w.negate_row(t);
    ++t;
  }
  SmithResult r{A, w.U, w.V, w.Vinv, t};
  return r;
}

std::optional<Vec> solve_linear(const Matrix &M, const Vec &b) {
  if (b.size() != M.rows())
    throw DimensionError("solve_linear: right-hand side has length " +
                         std::to_string(b.size()) + ", matrix has " +
                         std::to_string(M.rows()) + " rows");
  SmithResult s = smith_normal_form(M);
  Vec c = s.U * b;
  Vec y(M.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (c[i] % s.S(i, i) != 0) return std::nullopt;
      y[i] = c[i] / s.S(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

std::vector<Vec> integer_kernel(const Matrix &M) {
  SmithResult s = smith_normal_form(M);
  std::vector<Vec> basis;
  for (std::size_t j = s.rank; j < M.cols(); ++j) basis.push_back(s.V.column(j));
  return basis;
}

// ---------------------------------------------------------------------------

FGAbelianGroup::FGAbelianGroup(std::vector<Int> moduli) : moduli_(std::move(moduli)) {
  std::size_t torsion = 0;
  for (const auto &d : moduli_) {
    if (d < 0 || d == 1)
      throw PreconditionError("group modulus must be 0 (free) or >= 2, got " + d.get_str());
    if (d > 0) ++torsion;
  }
  presentation_ = Matrix(torsion, moduli_.size());
  std::size_t r = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    if (moduli_[i] > 0) presentation_(r++, i) = moduli_[i];
  presentation_map_ = Matrix::identity(moduli_.size());
}

FGAbelianGroup FGAbelianGroup::free(std::size_t rank) {
  return FGAbelianGroup(std::vector<Int>(rank, Int(0)));
}

FGAbelianGroup FGAbelianGroup::cyclic(const Int &d) {
  if (d == 1) return FGAbelianGroup();
  return FGAbelianGroup(std::vector<Int>{d});
}

FGAbelianGroup FGAbelianGroup::direct_sum(const std::vector<FGAbelianGroup> &parts) {
  std::vector<Int> mods;
  for (const auto &p : parts) mods.insert(mods.end(), p.moduli_.begin(), p.moduli_.end());
  return FGAbelianGroup(std::move(mods));
}

FGAbelianGroup FGAbelianGroup::from_presentation(const Matrix &relations) {
  SmithResult s = smith_normal_form(relations);
  const std::size_t g = relations.cols();
  std::vector<Int> mods;
  std::vector<Vec> map_rows;
  for (std::size_t k = 0; k < g; ++k) {
    Int d = k < s.rank ? s.S(k, k) : Int(0);
    if (d == 1) continue;
    mods.push_back(d);
    map_rows.push_back(s.Vinv.row(k));
  }
  FGAbelianGroup out(mods);
  out.presentation_ = relations;
  out.presentation_map_ = Matrix::from_rows(g, map_rows);
  return out;
}

std::size_t FGAbelianGroup::rank() const {
  return static_cast<std::size_t>(std::count(moduli_.begin(), moduli_.end(), Int(0)));
}

std::vector<Int> FGAbelianGroup::invariant_factors() const {
  std::vector<Int> tors;
  for (const auto &d : moduli_)
    if (d > 0) tors.push_back(d);
  Matrix D(tors.size(), tors.size());
  for (std::size_t i = 0; i < tors.size(); ++i) D(i, i) = tors[i];
  SmithResult s = smith_normal_form(D);
  std::vector<Int> out;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.S(i, i) > 1) out.push_back(s.S(i, i));
  return out;
}

bool FGAbelianGroup::is_finite() const { return rank() == 0; }

Int FGAbelianGroup::order() const {
  if (!is_finite()) throw PreconditionError("order of an infinite group");
  Int o = 1;
  for (const auto &d : moduli_) o *= d;
  return o;
}

Vec FGAbelianGroup::unit(std::size_t i) const {
  Vec v(ngens());
  v.at(i) = 1;
  return canonical(v);
}

Vec FGAbelianGroup::canonical(const Vec &v) const {
  if (v.size() != ngens())
    throw DimensionError("element has " + std::to_string(v.size()) +
                         " coordinates, group " + to_string() + " has " +
                         std::to_string(ngens()));
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = mod_floor(v[i], moduli_[i]);
  return r;
}

bool FGAbelianGroup::contains_canonical(const Vec &v) const {
  if (v.size() != ngens()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (moduli_[i] > 0 && (v[i] < 0 || v[i] >= moduli_[i])) return false;
  return true;
}

bool FGAbelianGroup::equal(const Vec &a, const Vec &b) const {
  return canonical(a) == canonical(b);
}

Vec FGAbelianGroup::add(const Vec &a, const Vec &b) const { return canonical(kcx::add(a, b)); }
Vec FGAbelianGroup::sub(const Vec &a, const Vec &b) const { return canonical(kcx::sub(a, b)); }
Vec FGAbelianGroup::neg(const Vec &a) const { return canonical(scale(Int(-1), a)); }
Vec FGAbelianGroup::mul(const Int &k, const Vec &a) const { return canonical(scale(k, a)); }

Int FGAbelianGroup::element_order(const Vec &v) const {
  Vec c = canonical(v);
  Int o = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (moduli_[i] == 0) return 0;
    o = lcm(o, moduli_[i] / gcd(moduli_[i], c[i]));
  }
  return o;
}

std::optional<Vec> FGAbelianGroup::span_coefficients(const std::vector<Vec> &gens,
                                                     const Vec &x) const {
  std::vector<Vec> cols;
  for (const auto &g : gens) cols.push_back(canonical(g));
  for (std::size_t i = 0; i < ngens(); ++i)
    if (moduli_[i] > 0) {
      Vec r(ngens());
      r[i] = moduli_[i];
      cols.push_back(r);
    }
  Matrix M = Matrix::from_columns(ngens(), cols);
  auto sol = solve_linear(M, canonical(x));
  if (!sol) return std::nullopt;
  return slice(*sol, 0, gens.size());
}

bool FGAbelianGroup::in_span(const std::vector<Vec> &gens, const Vec &x) const {
  return span_coefficients(gens, x).has_value();
}

bool FGAbelianGroup::same_subgroup(const std::vector<Vec> &a,
                                   const std::vector<Vec> &b) const {
  for (const auto &x : a)
    if (!in_span(b, x)) return false;
  for (const auto &x : b)
    if (!in_span(a, x)) return false;
  return true;
}

std::vector<Vec> FGAbelianGroup::clean_generators(const std::vector<Vec> &gens) const {
  std::vector<Vec> out;
  for (const auto &g : gens) {
    Vec c = canonical(g);
    if (kcx::is_zero(c)) continue;
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

Int FGAbelianGroup::height(const Vec &v) const {
  Vec c = canonical(v);
  Int h = 0;
  for (const auto &x : c) h += abs(x);
  return h;
}

std::vector<Vec> FGAbelianGroup::elements_of_height(std::size_t h) const {
  std::vector<Vec> out;
  Vec cur(ngens());
  const long H = static_cast<long>(h);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == ngens()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    if (moduli_[i] == 0) {
      for (long v = -left; v <= left; ++v) {
        cur[i] = v;
        rec(i + 1, left - (v < 0 ? -v : v));
      }
    } else {
      long top = left;
      if (moduli_[i] - 1 < top) top = moduli_[i].get_si() - 1;
      for (long v = 0; v <= top; ++v) {
        cur[i] = v;
        rec(i + 1, left - v);
      }
    }
    cur[i] = 0;
  };
  rec(0, H);
  return out;
}

std::vector<Vec> FGAbelianGroup::elements_up_to_height(std::size_t max_height,
                                                       std::size_t limit) const {
  std::vector<Vec> out;
  for (std::size_t h = 0; h <= max_height && out.size() < limit; ++h) {
    for (auto &v : elements_of_height(h)) {
      if (out.size() >= limit) break;
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::string FGAbelianGroup::to_string() const {
  if (moduli_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += " + ";
    s += moduli_[i] == 0 ? std::string("Z") : "Z/" + moduli_[i].get_str();
  }
  return s;
}

// ---------------------------------------------------------------------------

GroupHom::GroupHom(FGAbelianGroup source, FGAbelianGroup target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.ngens() || matrix_.cols() != source_.ngens())
    throw DimensionError("homomorphism matrix is " + std::to_string(matrix_.rows()) + "x" +
                         std::to_string(matrix_.cols()) + ", expected " +
                         std::to_string(target_.ngens()) + "x" +
                         std::to_string(source_.ngens()));
  for (std::size_t j = 0; j < matrix_.cols(); ++j)
    matrix_.set_column(j, target_.canonical(matrix_.column(j)));
}

GroupHom GroupHom::identity(const FGAbelianGroup &g) {
  return GroupHom(g, g, Matrix::identity(g.ngens()));
}

GroupHom GroupHom::zero(const FGAbelianGroup &source, const FGAbelianGroup &target) {
  return GroupHom(source, target, Matrix(target.ngens(), source.ngens()));
}

GroupHom GroupHom::direct_sum(const std::vector<GroupHom> &parts) {
  std::vector<FGAbelianGroup> s, t;
  std::vector<Matrix> m;
  for (const auto &p : parts) {
    s.push_back(p.source());
    t.push_back(p.target());
    m.push_back(p.matrix());
  }
  return GroupHom(FGAbelianGroup::direct_sum(s), FGAbelianGroup::direct_sum(t),
                  Matrix::direct_sum(m));
}

Vec GroupHom::apply(const Vec &x) const {
  return target_.canonical(matrix_ * source_.canonical(x));
}

GroupHom GroupHom::after(const GroupHom &other) const {
  if (!(other.target() == source_))
    throw DimensionError("composition: " + other.target().to_string() + " vs " +
                         source_.to_string());
  return GroupHom(other.source(), target_, matrix_ * other.matrix());
}

GroupHom GroupHom::operator+(const GroupHom &o) const {
  if (!(o.source_ == source_) || !(o.target_ == target_))
    throw DimensionError("sum of homomorphisms with different groups");
  return GroupHom(source_, target_, matrix_ + o.matrix_);
}

bool GroupHom::well_defined() const {
  for (std::size_t j = 0; j < source_.ngens(); ++j) {
    const Int &d = source_.modulus(j);
    if (d == 0) continue;
    if (!kcx::is_zero(target_.mul(d, matrix_.column(j)))) return false;
  }
  return true;
}

bool GroupHom::is_zero() const { return matrix_.is_zero(); }

bool GroupHom::operator==(const GroupHom &o) const {
  return source_ == o.source_ && target_ == o.target_ && matrix_ == o.matrix_;
}

GroupHom GroupHom::inverse() const {
  HomAnalysis a = hom_analyze(*this);
  if (!a.well_defined || !a.injective || !a.surjective)
    throw PreconditionError("inverse of a non-bijective homomorphism");
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < target_.ngens(); ++i) {
    auto p = preimage(*this, target_.unit(i));
    cols.push_back(*p);
  }
  return GroupHom(target_, source_, Matrix::from_columns(source_.ngens(), cols));
}

namespace {

// [M | D_target]: solutions (x, t) describe x with M x == 0 in the target.
Matrix with_target_relations(const GroupHom &h) {
  std::vector<Vec> cols;
  const auto &T = h.target();
  for (std::size_t i = 0; i < T.ngens(); ++i)
    if (T.modulus(i) > 0) {
      Vec r(T.ngens());
      r[i] = T.modulus(i);
      cols.push_back(r);
    }
  return Matrix::hcat(h.matrix(), Matrix::from_columns(T.ngens(), cols));
}

} // namespace

HomAnalysis hom_analyze(const GroupHom &h) {
  HomAnalysis a;
  const auto &S = h.source();
  for (std::size_t j = 0; j < S.ngens(); ++j) {
    const Int &d = S.modulus(j);
    if (d == 0) continue;
    if (!is_zero(h.target().mul(d, h.matrix().column(j)))) {
      a.well_defined = false;
      a.bad_relation = j;
      break;
    }
  }
  Matrix K = with_target_relations(h);
  std::vector<Vec> raw;
  for (const auto &w : integer_kernel(K)) raw.push_back(slice(w, 0, S.ngens()));
  a.kernel = S.clean_generators(raw);
  std::vector<Vec> img;
  for (std::size_t j = 0; j < S.ngens(); ++j) img.push_back(h.matrix().column(j));
  a.image = h.target().clean_generators(img);
  a.injective = a.well_defined && a.kernel.empty();
  a.surjective = true;
  for (std::size_t i = 0; i < h.target().ngens(); ++i)
    if (!h.target().in_span(a.image, h.target().unit(i))) {
      a.surjective = false;
      break;
    }
  return a;
}

std::optional<Vec> preimage(const GroupHom &h, const Vec &y) {
  Matrix K = with_target_relations(h);
  auto sol = solve_linear(K, h.target().canonical(y));
  if (!sol) return std::nullopt;
  return h.source().canonical(slice(*sol, 0, h.source().ngens()));
}

BocksteinGroups bockstein_groups(const FGAbelianGroup &g, const Int &n) {
  if (n < 2) throw PreconditionError("bockstein_groups: n must be >= 2");
  std::vector<Int> qmods;
  std::vector<Vec> qrows;
  std::vector<Vec> tgens;
  std::vector<Int> tmods;
  for (std::size_t i = 0; i < g.ngens(); ++i) {
    const Int &d = g.modulus(i);
    Int q = d == 0 ? n : gcd(d, n);
    if (q > 1) {
      qmods.push_back(q);
      Vec row(g.ngens());
      row[i] = 1;
      qrows.push_back(row);
    }
    if (d > 0) {
      Int t = gcd(d, n);
      if (t > 1) {
        Vec gen(g.ngens());
        gen[i] = d / t;
        tgens.push_back(gen);
        tmods.push_back(t);
      }
    }
  }
  BocksteinGroups b;
  b.quotient = FGAbelianGroup(qmods);
  b.quotient_map = GroupHom(g, b.quotient, Matrix::from_rows(g.ngens(), qrows));
  b.torsion_gens = tgens;
  b.torsion_group = FGAbelianGroup(tmods);
  b.torsion_embedding =
      GroupHom(b.torsion_group, g, Matrix::from_columns(g.ngens(), tgens));
  return b;
}

} // namespace kcx
