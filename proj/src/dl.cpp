#include "kcx/dl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace kcx {

namespace {

Int pow3(unsigned long k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, k);
  return r;
}

bool is_power_of_three(Int d) {
  while (d % 3 == 0) d /= 3;
  return d == 1;
}

unsigned long three_adic_depth(const mpq_class &x) {
  Int d = x.get_den();
  unsigned long k = 0;
  while (d % 3 == 0) {
    d /= 3;
    ++k;
  }
  return k;
}

int parity(const Int &v) { return mod_floor(v, 2) == 0 ? 0 : 1; }

int word_bit(const std::string &w, long i) {
  long p = static_cast<long>(w.size());
  long r = ((i % p) + p) % p;
  return w[static_cast<std::size_t>(r)] - '0';
}

std::string minimal_word(const std::string &w) {
  std::size_t p = w.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d) continue;
    bool ok = true;
    for (std::size_t k = 0; k < p && ok; ++k) ok = w[k] == w[k % d];
    if (ok) return w.substr(0, d);
  }
  return w;
}

void check_word(const std::string &w, const char *what) {
  if (w.empty()) throw PreconditionError(std::string(what) + " tail word is empty");
  for (char ch : w)
    if (ch != '0' && ch != '1') throw PreconditionError(std::string(what) + " tail word must be a bit string");
}

EpsilonSeq build(long lo, long hi, const std::function<int(long)> &fn, std::string left, std::string right) {
  EpsilonSeq s;
  s.left = std::move(left);
  s.right = std::move(right);
  s.start = lo;
  for (long i = lo; i < hi; ++i) s.mid.push_back(fn(i));
  return s.canonical();
}

std::string rotate(const std::string &w, long k) {
  std::string out(w.size(), '0');
  for (std::size_t r = 0; r < w.size(); ++r) out[r] = static_cast<char>('0' + word_bit(w, static_cast<long>(r) + k));
  return out;
}

std::string mirror(const std::string &w) {
  std::string out(w.size(), '0');
  for (std::size_t r = 0; r < w.size(); ++r) out[r] = static_cast<char>('0' + word_bit(w, -static_cast<long>(r)));
  return out;
}

std::string complement(const std::string &w) {
  std::string out = w;
  for (auto &ch : out) ch = ch == '0' ? '1' : '0';
  return out;
}

std::map<std::string, std::string> fields(const std::string &s, const char *what) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto semi = s.find(';', pos);
    auto part = s.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    if (!part.empty()) {
      auto eq = part.find('=');
      if (eq == std::string::npos)
        throw ParseError(std::string(what) + ": expected key=value in '" + part + "'", 1, pos + 1);
      out[part.substr(0, eq)] = part.substr(eq + 1);
    }
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return out;
}

long parse_long(const std::string &s, const char *what) {
  char *endp = nullptr;
  long v = std::strtol(s.c_str(), &endp, 10);
  if (s.empty() || *endp) throw ParseError(std::string(what) + ": bad integer '" + s + "'", 1, 1);
  return v;
}

} // namespace

// ---------------------------------------------------------------------------

Int DLElement::y(long i) const {
  auto it = exceptions.find(i);
  if (it != exceptions.end()) return it->second;
  mpq_class d = x * mpq_class(pow3(static_cast<unsigned long>(std::labs(i))));
  d.canonicalize();
  if (d.get_den() != 1)
    throw PreconditionError("default y_" + std::to_string(i) + " = " + d.get_str() + " is not an integer");
  return d.get_num();
}

std::string DLElement::to_string() const {
  std::string s = "x=" + x.get_str() + ";y={";
  bool first = true;
  for (auto &[i, v] : exceptions) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(i) + ":" + v.get_str();
  }
  return s + "}";
}

DLElement DLElement::parse(const std::string &s) {
  auto f = fields(s, "DL element");
  DLElement e;
  if (!f.count("x")) throw ParseError("DL element: missing x", 1, 1);
  try {
    e.x = mpq_class(f["x"]);
  } catch (const std::invalid_argument &) {
    throw ParseError("DL element: bad rational '" + f["x"] + "'", 1, 3);
  }
  e.x.canonicalize();
  if (f.count("y")) {
    auto body = f["y"];
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
      throw ParseError("DL element: y must be {i:v,...}", 1, 1);
    body = body.substr(1, body.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto colon = item.find(':');
      if (colon == std::string::npos) throw ParseError("DL element: expected i:v in '" + item + "'", 1, 1);
      long i = parse_long(item.substr(0, colon), "DL element");
      try {
        e.exceptions[i] = Int(item.substr(colon + 1));
      } catch (const std::invalid_argument &) {
        throw ParseError("DL element: bad integer in '" + item + "'", 1, 1);
      }
    }
  }
  return dl_canonicalize(e);
}

DLElement dl_canonicalize(const DLElement &e) {
  DLElement out;
  out.x = e.x;
  out.x.canonicalize();
  if (!is_power_of_three(out.x.get_den()))
    throw PreconditionError("x = " + out.x.get_str() + " is not triadic");
  long k = static_cast<long>(three_adic_depth(out.x));
  for (long i = -k + 1; i < k; ++i)
    if (!e.exceptions.count(i))
      throw PreconditionError("index " + std::to_string(i) + ": default x*3^|i| = " +
                              mpq_class(out.x * mpq_class(pow3(static_cast<unsigned long>(std::labs(i))))).get_str() +
                              " is not an integer; supply y_" + std::to_string(i));
  for (auto &[i, v] : e.exceptions) {
    if (std::labs(i) >= k) {
      mpq_class d = out.x * mpq_class(pow3(static_cast<unsigned long>(std::labs(i))));
      d.canonicalize();
      if (d.get_den() == 1 && d.get_num() == v) continue;
    }
    out.exceptions[i] = v;
  }
  return out;
}

DLElement dl_add(const DLElement &a, const DLElement &b) {
  DLElement s;
  s.x = a.x + b.x;
  std::set<long> idx;
  for (auto &kv : a.exceptions) idx.insert(kv.first);
  for (auto &kv : b.exceptions) idx.insert(kv.first);
  for (long i : idx) s.exceptions[i] = a.y(i) + b.y(i);
  return dl_canonicalize(s);
}

DLElement dl_neg(const DLElement &a) {
  DLElement n;
  n.x = -a.x;
  for (auto &[i, v] : a.exceptions) n.exceptions[i] = -v;
  return dl_canonicalize(n);
}

std::string REBElement::to_string() const {
  std::string s = "a=" + std::to_string(a) + ";b={";
  bool first = true;
  for (long i : flips) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(i);
  }
  return s + "};c=" + std::to_string(c);
}

REBElement REBElement::parse(const std::string &s) {
  auto f = fields(s, "coefficient element");
  REBElement r;
  auto bit = [&](const char *key) {
    if (!f.count(key)) return 0;
    long v = parse_long(f[key], "coefficient element");
    if (v != 0 && v != 1) throw ParseError(std::string("coefficient element: ") + key + " must be 0 or 1", 1, 1);
    return static_cast<int>(v);
  };
  r.a = bit("a");
  r.c = bit("c");
  if (f.count("b")) {
    auto body = f["b"];
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
      throw ParseError("coefficient element: b must be {i,...}", 1, 1);
    std::stringstream ss(body.substr(1, body.size() - 2));
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) r.flips.insert(parse_long(item, "coefficient element"));
  }
  return r;
}

REBElement dl_rho(const DLElement &e0) {
  auto e = dl_canonicalize(e0);
  REBElement r;
  r.a = parity(e.x.get_num());
  for (auto &[i, v] : e.exceptions)
    if (parity(v) != r.a) r.flips.insert(i);
  return r;
}

// ---------------------------------------------------------------------------

int EpsilonSeq::bit(long i) const {
  if (i < start) return word_bit(left, i);
  if (i >= end()) return word_bit(right, i);
  return mid[static_cast<std::size_t>(i - start)];
}

EpsilonSeq EpsilonSeq::canonical() const {
  check_word(left, "left");
  check_word(right, "right");
  for (int b : mid)
    if (b != 0 && b != 1) throw PreconditionError("middle entries must be bits");
  EpsilonSeq out;
  out.left = minimal_word(left);
  out.right = minimal_word(right);
  long L = std::lcm(static_cast<long>(out.left.size()), static_cast<long>(out.right.size()));
  bool same_tails = true;
  for (long k = 0; k < L && same_tails; ++k) same_tails = word_bit(out.left, k) == word_bit(out.right, k);
  if (same_tails) out.left = out.right;

  long e = end();
  while (e > start && bit(e - 1) == word_bit(out.right, e - 1)) --e;
  if (same_tails && e == start) {
    out.start = 0;
    return out;
  }
  if (!same_tails && e == start)
    while (bit(e - 1) == word_bit(out.right, e - 1)) --e;
  long s = std::min(start, e);
  while (s < e && bit(s) == word_bit(out.left, s)) ++s;
  out.start = s;
  for (long i = s; i < e; ++i) out.mid.push_back(bit(i));
  return out;
}

long EpsilonSeq::radius() const {
  if (mid.empty()) return 0;
  return std::max(std::labs(start), std::labs(end() - 1));
}

std::string EpsilonSeq::to_string() const {
  std::string m;
  for (int b : mid) m += static_cast<char>('0' + b);
  return "left=" + left + ";mid=" + m + "@" + std::to_string(start) + ";right=" + right;
}

EpsilonSeq EpsilonSeq::parse(const std::string &s) {
  auto f = fields(s, "epsilon sequence");
  EpsilonSeq e;
  for (auto &[k, v] : f)
    if (k != "left" && k != "mid" && k != "right") throw ParseError("epsilon sequence: unknown key '" + k + "'", 1, 1);
  if (f.count("left")) e.left = f["left"];
  if (f.count("right")) e.right = f["right"];
  if (f.count("mid")) {
    auto v = f["mid"];
    auto at = v.find('@');
    auto bits = v.substr(0, at);
    for (char ch : bits) {
      if (ch != '0' && ch != '1') throw ParseError("epsilon sequence: middle must be a bit string", 1, 1);
      e.mid.push_back(ch - '0');
    }
    e.start = at == std::string::npos ? 0 : parse_long(v.substr(at + 1), "epsilon sequence");
  }
  try {
    return e.canonical();
  } catch (const PreconditionError &err) {
    throw ParseError(std::string("epsilon sequence: ") + err.what(), 1, 1);
  }
}

bool EpsilonSeq::operator==(const EpsilonSeq &o) const {
  auto a = canonical(), b = o.canonical();
  return a.left == b.left && a.right == b.right && a.start == b.start && a.mid == b.mid;
}

EpsilonSeq EpsilonSeq::zero() { return EpsilonSeq{}; }

EpsilonSeq EpsilonSeq::ones() { return EpsilonSeq{"1", {}, 0, "1"}; }

EpsilonSeq EpsilonSeq::sign_step() { return EpsilonSeq{"0", {}, 1, "1"}.canonical(); }

EpsilonSeq EpsilonSeq::delta(long j) { return EpsilonSeq{"0", {1}, j, "0"}.canonical(); }

EpsilonSeq EpsilonSeq::big_delta(long N) {
  std::vector<int> mid(static_cast<std::size_t>(2 * N + 1), 0);
  return EpsilonSeq{"1", mid, -N, "1"}.canonical();
}

// ---------------------------------------------------------------------------

bool dl_dominates(const mpq_class &u, int t) { return u > 0 || (u == 0 && (t & 1) == 0); }

std::optional<std::string> dl_positivity_failure(const EpsilonSeq &eps, const DLElement &g0,
                                                 const REBElement &r, int z) {
  auto g = dl_canonicalize(g0);
  if (g.x < 0) return "x = " + g.x.get_str() + " is negative";
  for (auto &kv : g.exceptions)
    if (kv.second < 0) return "y_" + std::to_string(kv.first) + " = " + kv.second.get_str() + " is negative";
  if (!dl_dominates(g.x, r.a)) return "x = 0 does not dominate a = 1";
  if (!dl_dominates(g.x, r.c)) return "x = 0 does not dominate c = 1";
  if (!dl_dominates(g.x, z)) return "x = 0 does not dominate z = 1";
  // Away from the listed indices y_i = x 3^|i| and b_i = a: either x > 0 and
  // every clause holds, or x = 0 and a = c = 0 make every clause 0 |- 0.
  std::set<long> idx(r.flips.begin(), r.flips.end());
  for (auto &kv : g.exceptions) idx.insert(kv.first);
  for (long i : idx)
    if (!dl_dominates(mpq_class(g.y(i)), (r.b(i) + eps.bit(i) * r.c) & 1))
      return "y_" + std::to_string(i) + " = 0 does not dominate b_" + std::to_string(i) + " + eps_" +
             std::to_string(i) + " c = 1";
  return std::nullopt;
}

bool dl_is_positive(const EpsilonSeq &eps, const DLElement &g, const REBElement &r) {
  return !dl_positivity_failure(eps, g, r, 0);
}

bool dl_is_positive(const EpsilonSeq &eps, const DLElement &g, const REBElement &r, int z) {
  return !dl_positivity_failure(eps, g, r, z);
}

NCoefficientComplex dl_build_complex_window(const EpsilonSeq &eps, long W) {
  if (W < 1) throw PreconditionError("window radius must be at least 1");
  std::size_t K = static_cast<std::size_t>(2 * W + 2);
  auto idx = [&](long i) { return static_cast<std::size_t>(1 + i + W); };
  NCoefficientComplex X;
  X.n = 2;
  X.G0 = FGAbelianGroup::free(K);
  X.Gn = FGAbelianGroup(std::vector<Int>(K + 1, Int(2)));
  X.G1 = FGAbelianGroup::cyclic(2);
  Matrix R(K + 1, K);
  for (std::size_t i = 0; i < K; ++i) R(i, i) = 1;
  X.rho = GroupHom(X.G0, X.Gn, R);
  Matrix B(1, K + 1);
  B(0, K) = 1;
  X.beta = GroupHom(X.Gn, X.G1, B);

  auto standard = OrderSpec::standard(X.G0);
  std::vector<std::vector<Vec>> star_faces(K), nat_faces(K);
  star_faces[0] = {make_vec({1})};
  X.star = {X.G0, X.G1,
            OrderSpec::ideal_graded(X.G0, X.G1, standard, {GroupHom::zero(X.G0, X.G1), star_faces})};

  Matrix phi(K + 1, K);
  phi(K, 0) = 1;
  for (long i = -W; i <= W; ++i) {
    phi(idx(i), 0) = eps.bit(i);
    phi(idx(i), idx(i)) = 1;
  }
  Vec a(K + 1);
  a[0] = 1;
  nat_faces[0] = {a};
  X.nat = {X.G0, X.Gn, OrderSpec::ideal_graded(X.G0, X.Gn, standard, {GroupHom(X.G0, X.Gn, phi), nat_faces})};
  return X;
}

DLWindowElement dl_from_window(long W, const Triple &t) {
  std::size_t K = static_cast<std::size_t>(2 * W + 2);
  if (t.x.size() != K || t.y.size() != K + 1 || t.z.size() != 1)
    throw DimensionError("triple does not match a window of radius " + std::to_string(W));
  DLWindowElement out;
  DLElement g;
  g.x = mpq_class(t.x[0], pow3(static_cast<unsigned long>(W + 1)));
  g.x.canonicalize();
  for (long i = -W; i <= W; ++i) g.exceptions[i] = t.x[static_cast<std::size_t>(1 + i + W)];
  out.g = dl_canonicalize(g);
  out.r.a = parity(t.y[0]);
  for (long i = -W; i <= W; ++i)
    if (parity(t.y[static_cast<std::size_t>(1 + i + W)]) != out.r.a) out.r.flips.insert(i);
  out.r.c = parity(t.y[K]);
  out.z = parity(t.z[0]);
  return out;
}

// ---------------------------------------------------------------------------

std::string EpsilonMove::to_string() const {
  switch (kind) {
  case Kind::Shift: return "shift(" + std::to_string(k) + ")";
  case Kind::Flip: return "flip";
  case Kind::Mask: return "mask(" + std::to_string(k) + ")";
  case Kind::Reflect: {
    std::string p;
    for (int b : r_prefix) p += static_cast<char>('0' + b);
    return "reflect(" + p + ";" + std::to_string(r_tail) + ")";
  }
  }
  return "?";
}

EpsilonMove EpsilonMove::parse(const std::string &s) {
  if (s == "flip") return flip();
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw ParseError("move: expected name(args) or flip", 1, 1);
  auto name = s.substr(0, open);
  auto args = s.substr(open + 1, s.size() - open - 2);
  try {
    if (name == "shift") return shift(parse_long(args, "move"));
    if (name == "mask") return mask(parse_long(args, "move"));
  } catch (const PreconditionError &e) {
    throw ParseError(std::string("move: ") + e.what(), 1, open + 2);
  }
  if (name == "reflect") {
    auto semi = args.find(';');
    if (semi == std::string::npos) throw ParseError("move: reflect needs prefix;tail", 1, open + 2);
    std::vector<int> prefix;
    for (char c : args.substr(0, semi)) {
      if (c != '0' && c != '1') throw ParseError("move: reflect prefix must be bits", 1, open + 2);
      prefix.push_back(c - '0');
    }
    auto tail = args.substr(semi + 1);
    if (tail != "0" && tail != "1") throw ParseError("move: reflect tail must be 0 or 1", 1, open + semi + 3);
    return reflect(prefix, tail[0] - '0');
  }
  throw ParseError("move: unknown move '" + name + "'", 1, 1);
}

EpsilonMove EpsilonMove::shift(long k) { return {Kind::Shift, k, {}, 0}; }
EpsilonMove EpsilonMove::flip() { return {Kind::Flip, 0, {}, 0}; }
EpsilonMove EpsilonMove::mask(long N) {
  if (N < 0) throw PreconditionError("mask radius must be nonnegative");
  return {Kind::Mask, N, {}, 0};
}
EpsilonMove EpsilonMove::reflect(std::vector<int> prefix, int tail) {
  for (int b : prefix)
    if (b != 0 && b != 1) throw PreconditionError("reflect pattern must be bits");
  if (tail != 0 && tail != 1) throw PreconditionError("reflect tail must be a bit");
  return {Kind::Reflect, 0, std::move(prefix), tail};
}

EpsilonSeq epsilon_move(const EpsilonSeq &s0, const EpsilonMove &m) {
  auto s = s0.canonical();
  switch (m.kind) {
  case EpsilonMove::Kind::Shift:
    return build(s.start - m.k, s.end() - m.k, [&](long i) { return s.bit(i + m.k); }, rotate(s.left, m.k),
                 rotate(s.right, m.k));
  case EpsilonMove::Kind::Flip:
    return build(s.start, s.end(), [&](long i) { return 1 - s.bit(i); }, complement(s.left), complement(s.right));
  case EpsilonMove::Kind::Mask:
    return build(std::min(s.start, -m.k), std::max(s.end(), m.k + 1),
                 [&](long i) { return std::labs(i) <= m.k ? 0 : s.bit(i); }, s.left, s.right);
  case EpsilonMove::Kind::Reflect: {
    long L = static_cast<long>(m.r_prefix.size());
    long M = std::max({std::labs(s.start), std::labs(s.end()), L}) + 1;
    auto r = [&](long mag) { return mag < L ? m.r_prefix[static_cast<std::size_t>(mag)] : m.r_tail; };
    auto fn = [&](long i) { return s.bit(r(std::labs(i)) ? -i : i); };
    if (m.r_tail == 0) return build(-M, M + 1, fn, s.left, s.right);
    return build(-M, M + 1, fn, mirror(s.right), mirror(s.left));
  }
  }
  throw PreconditionError("unknown move");
}

namespace {

struct Edge {
  EquivStep step; // from the parent to this node
  std::string parent;
};

std::vector<EquivStep> neighbours(const EpsilonSeq &s) {
  std::vector<EpsilonMove> moves = {EpsilonMove::shift(1), EpsilonMove::shift(-1), EpsilonMove::flip(),
                                    EpsilonMove::reflect({}, 1), EpsilonMove::reflect({0, 1}, 0),
                                    EpsilonMove::reflect({0, 0, 1}, 0)};
  std::set<long> radii = {0, 1, 2, s.radius()};
  for (long N : radii) moves.push_back(EpsilonMove::mask(N));
  std::vector<EquivStep> out;
  for (auto &m : moves) {
    auto t = epsilon_move(s, m);
    if (!(t == s)) out.push_back({m, false, t});
  }
  // Preimages under mask(N): refill the masked window.
  for (long N = 0; N <= 1; ++N) {
    bool zero = true;
    for (long i = -N; i <= N; ++i) zero = zero && s.bit(i) == 0;
    if (!zero) continue;
    long width = 2 * N + 1;
    for (long fill = 1; fill < (1L << width); ++fill) {
      auto t = build(std::min(s.start, -N), std::max(s.end(), N + 1),
                     [&](long i) { return std::labs(i) <= N ? static_cast<int>((fill >> (i + N)) & 1) : s.bit(i); },
                     s.left, s.right);
      out.push_back({EpsilonMove::mask(N), true, t});
    }
  }
  return out;
}

// Reverses an edge u -> v into v -> u.
EquivStep reverse(const EquivStep &st, const EpsilonSeq &u) { return {st.move, !st.inverse, u}; }

} // namespace

EquivSearch epsilon_equiv_search(const EpsilonSeq &s1, const EpsilonSeq &s2, std::size_t depth, Budget &budget) {
  EquivSearch res;
  auto a = s1.canonical(), b = s2.canonical();
  if (a == b) {
    res.found = true;
    return res;
  }
  std::unordered_map<std::string, Edge> seen[2];
  std::unordered_map<std::string, EpsilonSeq> value;
  std::vector<std::string> frontier[2];
  seen[0][a.to_string()] = {};
  seen[1][b.to_string()] = {};
  value[a.to_string()] = a;
  value[b.to_string()] = b;
  frontier[0] = {a.to_string()};
  frontier[1] = {b.to_string()};
  std::size_t used = 0;
  std::optional<std::string> meet;
  while (used < depth && !meet) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<std::string> next;
    for (auto &key : frontier[side]) {
      const auto &cur = value.at(key);
      for (auto &st : neighbours(cur)) {
        if (!budget.step()) {
          res.budget_exhausted = true;
          return res;
        }
        auto k2 = st.result.to_string();
        if (seen[side].count(k2)) continue;
        seen[side][k2] = {st, key};
        value.emplace(k2, st.result);
        next.push_back(k2);
        ++res.explored;
        if (seen[1 - side].count(k2)) {
          meet = k2;
          break;
        }
      }
      if (meet) break;
    }
    frontier[side] = std::move(next);
    ++used;
    if (frontier[side].empty()) break;
  }
  if (!meet) return res;
  // s1 -> meet along side 0 parents, then meet -> s2 reversing side 1 edges.
  std::vector<EquivStep> head;
  for (std::string k = *meet; k != a.to_string();) {
    const auto &e = seen[0].at(k);
    head.push_back(e.step);
    k = e.parent;
  }
  std::reverse(head.begin(), head.end());
  for (std::string k = *meet; k != b.to_string();) {
    const auto &e = seen[1].at(k);
    head.push_back(reverse(e.step, value.at(e.parent)));
    k = e.parent;
  }
  res.found = true;
  res.certificate = std::move(head);
  return res;
}

bool replay_certificate(const EpsilonSeq &s1, const EpsilonSeq &s2, const std::vector<EquivStep> &cert) {
  auto cur = s1.canonical();
  for (auto &st : cert) {
    if (!st.inverse) {
      if (!(epsilon_move(cur, st.move) == st.result)) return false;
    } else {
      if (!(epsilon_move(st.result, st.move) == cur)) return false;
    }
    cur = st.result.canonical();
  }
  return cur == s2;
}

} // namespace kcx
