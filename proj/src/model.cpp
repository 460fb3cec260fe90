#include "kcx/model.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace kcx {

namespace {

// Recursive-descent reader over one payload; columns are reported relative to
// the start of the line the payload came from.
class Reader {
public:
  Reader(const std::string &s, std::size_t line = 1, std::size_t col0 = 1) : s_(s), line_(line), col0_(col0) {}

  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, line_, col0_ + pos_); }

  std::size_t mark() {
    ws();
    return pos_;
  }
  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    ws();
    return pos_ >= s_.size();
  }
  char peek() {
    ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }
  std::string found() {
    if (done()) return ", found end of input";
    return std::string(", found '") + s_[pos_] + "'";
  }
  void finish() {
    if (!done()) fail("unexpected trailing input '" + s_.substr(pos_) + "'");
  }
  std::string ident() {
    ws();
    std::size_t b = mark();
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (b == pos_) fail("expected a name" + found());
    return s_.substr(b, pos_ - b);
  }
  Int integer() {
    ws();
    std::size_t b = mark();
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = b;
      fail("expected an integer" + found());
    }
    std::string t = s_.substr(b, pos_ - b);
    if (t[0] == '+') t.erase(0, 1);
    return Int(t);
  }
  std::size_t count() {
    std::size_t at = mark();
    Int v = integer();
    if (v < 0 || !v.fits_ulong_p()) {
      pos_ = at;
      fail("expected a nonnegative count");
    }
    return v.get_ui();
  }

  // "(1,0,-2)"
  Vec vec() {
    expect('(');
    Vec v;
    while (!accept(')')) {
      v.push_back(integer());
      accept(',');
    }
    return v;
  }
  Vec vec_of(std::size_t len, const char *what) {
    std::size_t at = mark();
    Vec v = vec();
    if (v.size() != len) {
      pos_ = at;
      fail(std::string(what) + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(len));
    }
    return v;
  }

  // "[[1,0],[0,1]]"
  Matrix matrix(std::size_t rows, std::size_t cols) {
    std::size_t at = mark();
    expect('[');
    std::vector<Vec> rs;
    while (!accept(']')) {
      std::size_t row_at = mark();
      expect('[');
      Vec r;
      while (!accept(']')) {
        r.push_back(integer());
        accept(',');
      }
      if (r.size() != cols) {
        pos_ = row_at;
        fail("matrix row " + std::to_string(rs.size() + 1) + " has " + std::to_string(r.size()) +
             " entries, expected " + std::to_string(cols));
      }
      rs.push_back(r);
      accept(',');
    }
    if (rs.size() != rows) {
      pos_ = at;
      fail("matrix has " + std::to_string(rs.size()) + " rows, expected " + std::to_string(rows));
    }
    return Matrix::from_rows(cols, rs);
  }

  // "Z + Z/2^3", "0" or "<Z,Z/2>"
  FGAbelianGroup group() {
    std::vector<Int> moduli;
    auto cyclic = [&]() {
      std::size_t at = mark();
      if (ident() != "Z") {
        pos_ = at;
        fail("expected Z or Z/d");
      }
      Int d = 0;
      if (accept('/')) {
        at = mark();
        d = integer();
        if (d < 2) {
          pos_ = at;
          fail("cyclic modulus must be at least 2");
        }
      }
      std::size_t reps = 1;
      if (accept('^')) reps = count();
      for (std::size_t i = 0; i < reps; ++i) moduli.push_back(d);
    };
    if (accept('<')) {
      while (!accept('>')) {
        cyclic();
        accept(',');
      }
    } else if (peek() == '0') {
      ++pos_;
    } else {
      cyclic();
      while (accept('+')) cyclic();
    }
    return FGAbelianGroup(moduli);
  }

  OrderSpec order(const FGAbelianGroup &g) {
    std::size_t at = mark();
    std::string kind = ident();
    try {
      if (kind == "standard") return OrderSpec::standard(g);
      expect('(');
      if (kind == "cone") {
        std::vector<Vec> gens;
        while (!accept(')')) {
          gens.push_back(vec_of(g.ngens(), "cone generator"));
          accept(',');
        }
        return OrderSpec::cone(g, gens);
      }
      if (kind == "strict") {
        std::size_t k = count();
        if (k > g.ngens()) fail("strict summand wider than the group");
        expect(';');
        auto base = order(range(g, 0, k));
        expect(')');
        return OrderSpec::strict_first(g, k, base);
      }
      if (kind == "sum") {
        std::vector<OrderSpec::Part> parts;
        while (!accept(')')) {
          expect('[');
          std::vector<std::size_t> coords;
          std::vector<Int> moduli;
          while (!accept(']')) {
            std::size_t c = count();
            if (c >= g.ngens()) fail("coordinate " + std::to_string(c) + " out of range");
            coords.push_back(c);
            moduli.push_back(g.modulus(c));
            accept(',');
          }
          expect(':');
          auto o = order(FGAbelianGroup(moduli));
          parts.push_back({coords, std::make_shared<const OrderSpec>(o)});
          accept('|');
        }
        return OrderSpec::direct_sum(g, parts);
      }
      if (kind == "quotient") {
        auto src = group();
        expect(';');
        auto M = matrix(g.ngens(), src.ngens());
        expect(';');
        auto base = order(src);
        expect(')');
        return OrderSpec::quotient(GroupHom(src, g, M), base);
      }
      if (kind == "ideal") {
        std::size_t k = count();
        if (k > g.ngens()) fail("even part wider than the group");
        auto even = range(g, 0, k), odd = range(g, k, g.ngens() - k);
        expect(';');
        auto base = order(even);
        expect(';');
        auto phi = matrix(odd.ngens(), k);
        std::vector<std::vector<Vec>> faces;
        while (accept(';')) {
          std::size_t i = count();
          if (i >= k) fail("face index " + std::to_string(i) + " is not an even coordinate");
          expect(':');
          if (faces.empty()) faces.resize(k);
          faces[i].push_back(vec_of(odd.ngens(), "face generator"));
          while (accept(',')) faces[i].push_back(vec_of(odd.ngens(), "face generator"));
        }
        expect(')');
        return OrderSpec::ideal_graded(even, odd, base, {GroupHom(even, odd, phi), faces});
      }
      if (kind == "meet") {
        std::vector<OrderSpec::Term> terms;
        while (!accept(')')) {
          auto tgt = group();
          expect(';');
          auto M = matrix(tgt.ngens(), g.ngens());
          expect(';');
          auto o = order(tgt);
          terms.push_back({GroupHom(g, tgt, M), std::make_shared<const OrderSpec>(o)});
          accept('|');
        }
        return OrderSpec::intersection(g, terms);
      }
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      pos_ = at;
      fail(std::string(kind) + ": " + e.what());
    }
    pos_ = at;
    fail("unsupported order descriptor '" + kind + "'");
  }

  std::vector<BlockLabel> blocks(const Int &n) {
    std::vector<BlockLabel> out;
    do {
      std::size_t at = mark();
      std::string t = ident();
      BlockLabel l{BlockLabel::Kind::C, n, 0};
      if (t == "C") {
      } else if (t == "S1") {
        l.kind = BlockLabel::Kind::Circle;
      } else if (t.size() > 1 && t[0] == 'I' && t.find_first_not_of("0123456789", 1) == std::string::npos) {
        l.kind = BlockLabel::Kind::DimDrop;
        l.m = Int(t.substr(1));
        if (l.m < 2) {
          pos_ = at;
          fail("I<m> needs m >= 2");
        }
      } else {
        pos_ = at;
        fail("unknown block '" + t + "' (expected C, S1 or I<m>)");
      }
      std::size_t reps = 1;
      if (accept('*')) reps = count();
      for (std::size_t i = 0; i < reps; ++i) out.push_back(l);
    } while (accept(','));
    return out;
  }

  static FGAbelianGroup range(const FGAbelianGroup &g, std::size_t b, std::size_t len) {
    return FGAbelianGroup(std::vector<Int>(g.moduli().begin() + b, g.moduli().begin() + b + len));
  }

private:
  const std::string &s_;
  std::size_t pos_ = 0;
  std::size_t line_, col0_;
};

struct Entry {
  std::string key, payload;
  std::size_t line = 0, col = 0;
};

template <class F> auto at_entry(const Entry &e, F &&f) {
  Reader r(e.payload, e.line, e.col);
  try {
    auto v = f(r);
    r.finish();
    return v;
  } catch (const ParseError &) {
    throw;
  } catch (const Error &err) {
    throw ParseError(e.key + ": " + err.what(), e.line, e.col);
  }
}

// Reparses a sub-grammar that reports line 1 at its own offsets.
template <class F> auto shifted(const Entry &e, F &&f) {
  try {
    return f(e.payload);
  } catch (const ParseError &err) {
    throw ParseError(e.key + ": " + std::string(err.what()).substr(std::string(err.what()).find(": ") + 2), e.line,
                     e.col + err.column() - 1);
  }
}

class Sections {
public:
  explicit Sections(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  const Entry *find(const std::string &key) const {
    for (auto &e : entries_)
      if (e.key == key) return &e;
    return nullptr;
  }
  const Entry &need(const std::string &key, std::size_t line) const {
    if (auto *e = find(key)) return *e;
    throw ParseError("missing section '" + key + "'", line, 1);
  }
  const std::vector<Entry> &all() const { return entries_; }

private:
  std::vector<Entry> entries_;
};

std::vector<Entry> split_lines(const std::string &text, std::size_t &last_line) {
  std::vector<Entry> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto hash = raw.find('#');
    std::string s = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    auto last = s.find_last_not_of(" \t");
    s = s.substr(0, last + 1);
    if (!header) {
      std::istringstream hs(s.substr(first));
      std::string magic, version, extra;
      hs >> magic >> version;
      if (magic != "kcx-format") throw ParseError("expected header 'kcx-format 1'", line, first + 1);
      if (version != "1" || (hs >> extra)) throw ParseError("unsupported format version '" + version + "'", line, first + 12);
      header = true;
      continue;
    }
    auto colon = s.find(':', first);
    if (colon == std::string::npos) throw ParseError("expected 'key: payload'", line, first + 1);
    Entry e;
    e.key = s.substr(first, colon - first);
    while (!e.key.empty() && std::isspace(static_cast<unsigned char>(e.key.back()))) e.key.pop_back();
    for (char c : e.key)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw ParseError("bad section name '" + e.key + "'", line, first + 1);
    auto p = s.find_first_not_of(" \t", colon + 1);
    e.payload = p == std::string::npos ? "" : s.substr(p);
    e.line = line;
    e.col = p == std::string::npos ? s.size() + 1 : p + 1;
    out.push_back(e);
  }
  if (!header) throw ParseError("expected header 'kcx-format 1'", line ? line : 1, 1);
  last_line = line ? line : 1;
  return out;
}

void reject_unknown(const Sections &s, std::initializer_list<const char *> allowed, bool repeatable_ok = false) {
  std::map<std::string, int> seen;
  for (auto &e : s.all()) {
    bool ok = false;
    for (auto *a : allowed) ok = ok || e.key == a;
    if (!ok) throw ParseError("unknown section '" + e.key + "'", e.line, 1);
    if (!repeatable_ok && ++seen[e.key] > 1) throw ParseError("duplicate section '" + e.key + "'", e.line, 1);
  }
}

Int parse_level(const Entry &e) {
  return at_entry(e, [](Reader &r) {
    Int n = r.integer();
    if (n < 2) r.fail("n must be at least 2");
    return n;
  });
}

NCoefficientComplex complex_from(const Sections &s, std::size_t last) {
  Int n = parse_level(s.need("n", last));
  if (auto *b = s.find("blocks")) {
    for (auto *k : {"G0", "Gn", "G1", "rho", "beta", "star", "nat"})
      if (auto *e = s.find(k)) throw ParseError("section '" + std::string(k) + "' conflicts with blocks", e->line, 1);
    auto labels = at_entry(*b, [&](Reader &r) { return r.blocks(n); });
    return block_sum(labels);
  }
  NCoefficientComplex X;
  X.n = n;
  auto grp = [&](const char *k) { return at_entry(s.need(k, last), [](Reader &r) { return r.group(); }); };
  X.G0 = grp("G0");
  X.Gn = grp("Gn");
  X.G1 = grp("G1");
  auto hom = [&](const char *k, const FGAbelianGroup &a, const FGAbelianGroup &b) {
    auto M = at_entry(s.need(k, last), [&](Reader &r) { return r.matrix(b.ngens(), a.ngens()); });
    return GroupHom(a, b, M);
  };
  X.rho = hom("rho", X.G0, X.Gn);
  X.beta = hom("beta", X.Gn, X.G1);
  auto graded = [&](const char *k, const FGAbelianGroup &odd) {
    auto amb = FGAbelianGroup::direct_sum({X.G0, odd});
    auto o = at_entry(s.need(k, last), [&](Reader &r) { return r.order(amb); });
    return GradedOrderedGroup{X.G0, odd, o};
  };
  X.star = graded("star", X.G1);
  X.nat = graded("nat", X.Gn);
  return X;
}

std::string print_sections(const NCoefficientComplex &X) {
  std::ostringstream os;
  os << "n: " << X.n << "\n";
  os << "G0: " << X.G0.to_string() << "\n";
  os << "Gn: " << X.Gn.to_string() << "\n";
  os << "G1: " << X.G1.to_string() << "\n";
  os << "rho: " << X.rho.matrix().to_string() << "\n";
  os << "beta: " << X.beta.matrix().to_string() << "\n";
  os << "star: " << X.star.order.describe() << "\n";
  os << "nat: " << X.nat.order.describe() << "\n";
  return os.str();
}

bool same_graded(const GradedOrderedGroup &a, const GradedOrderedGroup &b) {
  return a.even == b.even && a.odd == b.odd && a.order.describe() == b.order.describe();
}

// The shorthand is used only when it rebuilds exactly this complex.
bool uniform_blocks(const NCoefficientComplex &X) {
  if (!X.is_block_sum()) return false;
  for (auto &l : X.labels)
    if (l.n != X.n) return false;
  return same_complex(X, block_sum(X.labels));
}

std::string print_complex_body(const NCoefficientComplex &X) {
  if (uniform_blocks(X)) return "n: " + X.n.get_str() + "\nblocks: " + print_blocks(X.labels) + "\n";
  return print_sections(X);
}

BlockSystem system_from(const Sections &s, std::size_t last) {
  reject_unknown(s, {"kind", "n", "stage", "theta0", "thetan", "theta1"}, true);
  for (auto *k : {"kind", "n"}) {
    int c = 0;
    for (auto &e : s.all())
      if (e.key == k && ++c > 1) throw ParseError("duplicate section '" + std::string(k) + "'", e.line, 1);
  }
  Int n = parse_level(s.need("n", last));
  BlockSystem S;
  std::map<std::string, const Entry *> pending;
  auto close_connect = [&](std::size_t line) {
    if (S.stages.size() < 2) {
      if (!pending.empty()) throw ParseError("connecting maps before the second stage", pending.begin()->second->line, 1);
      return;
    }
    const auto &a = S.stages[S.stages.size() - 2], &b = S.stages.back();
    ComplexMorphism m;
    auto hom = [&](const char *k, const FGAbelianGroup &src, const FGAbelianGroup &dst) {
      if (!pending.count(k))
        throw ParseError("stage " + std::to_string(S.stages.size() - 1) + " is missing '" + k + "'", line, 1);
      auto M = at_entry(*pending[k], [&](Reader &r) { return r.matrix(dst.ngens(), src.ngens()); });
      return GroupHom(src, dst, M);
    };
    m.theta0 = hom("theta0", a.G0, b.G0);
    m.thetan = hom("thetan", a.Gn, b.Gn);
    m.theta1 = hom("theta1", a.G1, b.G1);
    S.connects.push_back(m);
    pending.clear();
  };
  std::size_t stage_line = 0;
  for (auto &e : s.all()) {
    if (e.key == "stage") {
      if (!S.stages.empty()) close_connect(stage_line);
      auto labels = at_entry(e, [&](Reader &r) {
        Int level = n;
        if (r.peek() == 'n') {
          if (r.ident() != "n") r.fail("expected n=<level>; or a block list");
          r.expect('=');
          level = r.integer();
          if (level < 2) r.fail("n must be at least 2");
          r.expect(';');
        }
        return r.blocks(level);
      });
      S.stages.push_back(block_sum(labels));
      stage_line = e.line;
    } else if (e.key.rfind("theta", 0) == 0) {
      if (pending.count(e.key)) throw ParseError("duplicate section '" + e.key + "'", e.line, 1);
      pending[e.key] = &e;
    }
  }
  if (S.stages.empty()) throw ParseError("a system needs at least one stage", last, 1);
  close_connect(stage_line);
  return S;
}

StagedModel staged_from(const Sections &s, std::size_t last) {
  const auto &d = s.need("descriptor", last);
  auto parts = at_entry(d, [](Reader &r) {
    std::vector<std::string> out{r.ident()};
    while (r.accept('+')) out.push_back(r.ident());
    return out;
  });
  std::optional<NBoldDescriptor> desc;
  for (auto &p : parts) {
    NBoldDescriptor one;
    if (p == "point") {
      one = NBoldDescriptor::point();
    } else if (p == "rational") {
      auto even = at_entry(s.need("even", last), [](Reader &r) { return r.group(); });
      auto odd = at_entry(s.need("odd", last), [](Reader &r) { return r.group(); });
      auto amb = FGAbelianGroup::direct_sum({even, odd});
      auto o = at_entry(s.need("order", last), [&](Reader &r) { return r.order(amb); });
      try {
        one = NBoldDescriptor::rational({even, odd, o});
      } catch (const Error &e) {
        throw ParseError(std::string("descriptor: ") + e.what(), d.line, d.col);
      }
    } else if (p == "fixed") {
      one = NBoldDescriptor::fixed_level(complex_from(s, last));
    } else {
      throw ParseError("unknown descriptor '" + p + "' (expected point, rational or fixed)", d.line, d.col);
    }
    try {
      desc = desc ? NBoldDescriptor::direct_sum(*desc, one) : one;
    } catch (const Error &e) {
      throw ParseError(std::string("descriptor: ") + e.what(), d.line, d.col);
    }
  }
  StagedModel m{*desc, std::nullopt};
  if (auto *c = s.find("chain")) m.chain = shifted(*c, parse_chain);
  return m;
}

EpsilonJob epsilon_from(const Sections &s, std::size_t last) {
  EpsilonJob j;
  j.epsilon = shifted(s.need("epsilon", last), EpsilonSeq::parse);
  if (auto *c = s.find("compare")) j.compare = shifted(*c, EpsilonSeq::parse);
  if (auto *e = s.find("element")) {
    shifted(*e, parse_dl_triple);
    j.element = e->payload;
  }
  return j;
}

} // namespace

// ---------------------------------------------------------------------------

FGAbelianGroup parse_group(const std::string &s) {
  Reader r(s);
  auto g = r.group();
  r.finish();
  return g;
}

Matrix parse_matrix(const std::string &s, std::size_t rows, std::size_t cols) {
  Reader r(s);
  auto m = r.matrix(rows, cols);
  r.finish();
  return m;
}

Vec parse_vector(const std::string &s) {
  Reader r(s);
  auto v = r.vec();
  r.finish();
  return v;
}

std::vector<Vec> parse_vector_list(const std::string &s) {
  Reader r(s);
  std::vector<Vec> out;
  if (r.done()) return out;
  do out.push_back(r.vec());
  while (r.accept(','));
  r.finish();
  return out;
}

OrderSpec parse_order(const std::string &s, const FGAbelianGroup &ambient) {
  Reader r(s);
  auto o = r.order(ambient);
  r.finish();
  return o;
}

std::vector<BlockLabel> parse_blocks(const std::string &s, const Int &n) {
  Reader r(s);
  auto b = r.blocks(n);
  r.finish();
  return b;
}

std::string print_blocks(const std::vector<BlockLabel> &labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size();) {
    std::size_t j = i;
    while (j < labels.size() && labels[j] == labels[i]) ++j;
    if (!out.empty()) out += ", ";
    out += labels[i].to_string();
    if (j - i > 1) out += "*" + std::to_string(j - i);
    i = j;
  }
  return out;
}

Triple parse_triple(const std::string &s, const NCoefficientComplex &X) {
  Reader r(s);
  Triple t;
  t.x = r.vec_of(X.G0.ngens(), "x");
  r.expect(';');
  t.y = r.vec_of(X.Gn.ngens(), "y");
  r.expect(';');
  t.z = r.vec_of(X.G1.ngens(), "z");
  r.finish();
  t.x = X.G0.canonical(t.x);
  t.y = X.Gn.canonical(t.y);
  t.z = X.G1.canonical(t.z);
  return t;
}

DeltaChain parse_chain(const std::string &s) {
  Reader r(s);
  DeltaChain c;
  do {
    Int v = r.integer();
    if (v < 2) r.fail("levels must be at least 2");
    c.levels.push_back(v);
  } while (r.accept(','));
  r.finish();
  try {
    c.validate();
  } catch (const PreconditionError &e) {
    throw ParseError(std::string("chain: ") + e.what(), 1, 1);
  }
  return c;
}

DLTriple parse_dl_triple(const std::string &s) {
  std::vector<std::string> parts;
  std::vector<std::size_t> offsets;
  std::size_t b = 0;
  for (;;) {
    auto bar = s.find('|', b);
    parts.push_back(s.substr(b, bar == std::string::npos ? std::string::npos : bar - b));
    offsets.push_back(b);
    if (bar == std::string::npos) break;
    b = bar + 1;
  }
  if (parts.size() > 3) throw ParseError("element has more than three parts", 1, offsets[3] + 1);
  auto trim = [](std::string t) {
    auto f = t.find_first_not_of(" \t");
    if (f == std::string::npos) return std::string();
    return t.substr(f, t.find_last_not_of(" \t") - f + 1);
  };
  auto wrap = [&](std::size_t i, auto &&f) {
    try {
      return f(trim(parts[i]));
    } catch (const ParseError &e) {
      throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), 1,
                       offsets[i] + e.column());
    }
  };
  DLTriple t;
  t.g = wrap(0, DLElement::parse);
  if (parts.size() > 1) t.r = wrap(1, REBElement::parse);
  if (parts.size() > 2) {
    auto z = trim(parts[2]);
    if (z != "z=0" && z != "z=1") throw ParseError("third part must be z=0 or z=1", 1, offsets[2] + 1);
    t.z = z.back() - '0';
  }
  return t;
}

Model parse_model(const std::string &text) {
  std::size_t last = 1;
  Sections s(split_lines(text, last));
  std::string kind = "complex";
  if (auto *k = s.find("kind")) kind = at_entry(*k, [](Reader &r) { return r.ident(); });
  if (kind == "complex") {
    reject_unknown(s, {"kind", "n", "blocks", "G0", "Gn", "G1", "rho", "beta", "star", "nat"});
    return complex_from(s, last);
  }
  if (kind == "system") return system_from(s, last);
  if (kind == "qz") {
    reject_unknown(s, {"kind", "descriptor", "chain", "even", "odd", "order", "n", "blocks", "G0", "Gn", "G1", "rho",
                       "beta", "star", "nat"});
    return staged_from(s, last);
  }
  if (kind == "epsilon") {
    reject_unknown(s, {"kind", "epsilon", "compare", "element"});
    return epsilon_from(s, last);
  }
  const auto *k = s.find("kind");
  throw ParseError("unknown model kind '" + kind + "' (expected complex, system, qz or epsilon)", k->line, k->col);
}

std::string print_complex_expanded(const NCoefficientComplex &X) { return "kcx-format 1\n" + print_sections(X); }

std::string print_model(const Model &m) {
  std::ostringstream os;
  os << "kcx-format 1\n";
  if (auto *X = std::get_if<NCoefficientComplex>(&m)) {
    os << print_complex_body(*X);
  } else if (auto *S = std::get_if<BlockSystem>(&m)) {
    os << "kind: system\n";
    Int n = S->stages.empty() ? Int(2) : S->stages[0].n;
    os << "n: " << n << "\n";
    for (std::size_t i = 0; i < S->stages.size(); ++i) {
      const auto &X = S->stages[i];
      if (!uniform_blocks(X)) throw UnsupportedError("system stages must be block sums of one level");
      os << "stage: ";
      if (X.n != n) os << "n=" << X.n << "; ";
      os << print_blocks(X.labels) << "\n";
      if (i > 0) {
        const auto &c = S->connects.at(i - 1);
        os << "theta0: " << c.theta0.matrix().to_string() << "\n";
        os << "thetan: " << c.thetan.matrix().to_string() << "\n";
        os << "theta1: " << c.theta1.matrix().to_string() << "\n";
      }
    }
  } else if (auto *Q = std::get_if<StagedModel>(&m)) {
    os << "kind: qz\n";
    const auto &d = Q->descriptor;
    if (d.kind == NBoldDescriptor::Kind::Rational) {
      os << "descriptor: rational\n";
      os << "even: " << d.kdata.even.to_string() << "\n";
      os << "odd: " << d.kdata.odd.to_string() << "\n";
      os << "order: " << d.kdata.order.describe() << "\n";
    } else {
      os << "descriptor: fixed\n" << print_complex_body(d.fixed);
    }
    if (Q->chain) {
      os << "chain: ";
      for (std::size_t i = 0; i < Q->chain->levels.size(); ++i) os << (i ? "," : "") << Q->chain->levels[i];
      os << "\n";
    }
  } else {
    const auto &j = std::get<EpsilonJob>(m);
    os << "kind: epsilon\n";
    os << "epsilon: " << j.epsilon.to_string() << "\n";
    if (j.compare) os << "compare: " << j.compare->to_string() << "\n";
    if (j.element) os << "element: " << *j.element << "\n";
  }
  return os.str();
}

bool same_complex(const NCoefficientComplex &a, const NCoefficientComplex &b) {
  if (!(a.n == b.n && a.G0 == b.G0 && a.Gn == b.Gn && a.G1 == b.G1)) return false;
  if (!(a.rho.matrix() == b.rho.matrix() && a.beta.matrix() == b.beta.matrix())) return false;
  if (!same_graded(a.star, b.star) || !same_graded(a.nat, b.nat)) return false;
  if (a.is_block_sum() && b.is_block_sum() && !(a.labels == b.labels)) return false;
  return true;
}

bool same_model(const Model &a, const Model &b) {
  if (a.index() != b.index()) return false;
  if (auto *X = std::get_if<NCoefficientComplex>(&a)) return same_complex(*X, std::get<NCoefficientComplex>(b));
  if (auto *S = std::get_if<BlockSystem>(&a)) {
    const auto &T = std::get<BlockSystem>(b);
    if (S->stages.size() != T.stages.size() || S->connects.size() != T.connects.size()) return false;
    for (std::size_t i = 0; i < S->stages.size(); ++i)
      if (!same_complex(S->stages[i], T.stages[i])) return false;
    for (std::size_t i = 0; i < S->connects.size(); ++i)
      if (!(S->connects[i] == T.connects[i])) return false;
    return true;
  }
  if (auto *Q = std::get_if<StagedModel>(&a)) {
    const auto &R = std::get<StagedModel>(b);
    if (Q->descriptor.kind != R.descriptor.kind) return false;
    bool same_desc = Q->descriptor.kind == NBoldDescriptor::Kind::Rational
                         ? same_graded(Q->descriptor.kdata, R.descriptor.kdata)
                         : same_complex(Q->descriptor.fixed, R.descriptor.fixed);
    bool same_chain = Q->chain.has_value() == R.chain.has_value() && (!Q->chain || Q->chain->levels == R.chain->levels);
    return same_desc && same_chain;
  }
  const auto &j = std::get<EpsilonJob>(a), &k = std::get<EpsilonJob>(b);
  return j.epsilon == k.epsilon && j.compare == k.compare && j.element == k.element;
}

} // namespace kcx
