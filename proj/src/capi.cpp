#include "kcx/kcx.h"

#include "kcx/decomp.hpp"
#include "kcx/model.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

using json = nlohmann::ordered_json;

struct kcx_model {
  kcx::Model model;
};

struct kcx_report {
  int status = KCX_OK;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_line = 0, last_column = 0;

void set_error(const std::string &msg, std::size_t line = 0, std::size_t column = 0) {
  last_error = msg;
  last_line = line;
  last_column = column;
}

void clear_error() { set_error(""); }

std::uint64_t budget_of(const kcx_options *o) { return o && o->budget ? o->budget : 10000; }

const char *status_word(int s) {
  switch (s) {
  case KCX_OK: return "pass";
  case KCX_PROPERTY_FAILED: return "fail";
  default: return "budget";
  }
}

// Collects a report as JSON and as text lines side by side.
class Builder {
public:
  explicit Builder(const char *command) { j_["command"] = command; }

  json &data() { return j_; }
  void line(const std::string &s) { text_ += s + "\n"; }

  int finish(int status, kcx_report **out) {
    json head;
    head["command"] = j_["command"];
    head["status"] = status_word(status);
    head["exit_code"] = status;
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (it.key() != "command") head[it.key()] = it.value();
    auto *r = new kcx_report;
    r->status = status;
    r->json = head.dump(2) + "\n";
    r->text = text_ + "result: " + status_word(status) + "\n";
    *out = r;
    return status;
  }

private:
  json j_;
  std::string text_;
};

json property(const kcx::PropertyReport &p) {
  json j;
  j["name"] = p.name;
  j["status"] = kcx::to_string(p.status);
  j["witness"] = p.witness;
  j["note"] = p.note;
  j["examined"] = p.examined;
  return j;
}

std::string property_line(const kcx::PropertyReport &p) {
  std::string s = "  " + p.name + ": " + kcx::to_string(p.status);
  if (!p.witness.empty()) s += " [" + p.witness + "]";
  if (!p.note.empty()) s += " (" + p.note + ")";
  return s;
}

int status_of(const std::vector<kcx::PropertyReport> &items) {
  bool inconclusive = false;
  for (auto &p : items) {
    if (p.status == kcx::CheckStatus::Fail) return KCX_PROPERTY_FAILED;
    if (p.status == kcx::CheckStatus::Inconclusive) inconclusive = true;
  }
  return inconclusive ? KCX_BUDGET_EXHAUSTED : KCX_OK;
}

std::string triple_text(const kcx::Triple &t) {
  return kcx::to_string(t.x) + ";" + kcx::to_string(t.y) + ";" + kcx::to_string(t.z);
}

json morphism(const kcx::ComplexMorphism &m) {
  return json{{"theta0", m.theta0.matrix().to_string()},
              {"thetan", m.thetan.matrix().to_string()},
              {"theta1", m.theta1.matrix().to_string()}};
}

json stage(const kcx::NCoefficientComplex &X) {
  json j;
  j["n"] = X.n.get_str();
  j["blocks"] = kcx::print_blocks(X.labels);
  j["groups"] = X.G0.to_string() + " -> " + X.Gn.to_string() + " -> " + X.G1.to_string();
  return j;
}

std::string stage_line(std::size_t i, const kcx::NCoefficientComplex &X) {
  return "stage " + std::to_string(i) + ": n = " + X.n.get_str() + "; " + kcx::print_blocks(X.labels);
}

int wrong_kind(const char *what) {
  set_error(std::string("this command needs a ") + what + " model");
  return KCX_ERR_WRONG_KIND;
}

template <class T> const T *model_as(const kcx_model *m) {
  if (!m) throw kcx::PreconditionError("null model");
  return std::get_if<T>(&m->model);
}

kcx::DeltaChain chain_for(const kcx::StagedModel &m, const char *chain, const char *fallback) {
  if (chain && *chain) return kcx::parse_chain(chain);
  if (m.chain) return *m.chain;
  if (fallback) return kcx::parse_chain(fallback);
  throw kcx::PreconditionError("no chain given and none in the model file");
}

int budget_report(Builder &b, const kcx::BudgetExhausted &e, kcx_report **out) {
  b.data()["note"] = e.what();
  b.line(std::string("budget exhausted: ") + e.what());
  return b.finish(KCX_BUDGET_EXHAUSTED, out);
}

// Maps library exceptions onto status codes.
template <class F> int guarded(F &&f, const char *command = nullptr, kcx_report **out = nullptr) {
  clear_error();
  try {
    return f();
  } catch (const kcx::ParseError &e) {
    set_error(e.what(), e.line(), e.column());
    return KCX_ERR_PARSE;
  } catch (const kcx::UnsupportedError &e) {
    set_error(e.what());
    return KCX_ERR_UNSUPPORTED;
  } catch (const kcx::DimensionError &e) {
    set_error(e.what());
    return KCX_ERR_ARGUMENT;
  } catch (const kcx::PreconditionError &e) {
    set_error(e.what());
    return KCX_ERR_ARGUMENT;
  } catch (const kcx::BudgetExhausted &e) {
    if (!out) {
      set_error(e.what());
      return KCX_BUDGET_EXHAUSTED;
    }
    Builder b(command);
    return budget_report(b, e, out);
  } catch (const std::exception &e) {
    set_error(std::string("internal error: ") + e.what());
    return KCX_ERR_INTERNAL;
  }
}

char *dup(const std::string &s) {
  char *p = static_cast<char *>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

} // namespace

extern "C" {

const char *kcx_version(void) { return "1.0.0"; }

const char *kcx_status_name(int status) {
  switch (status) {
  case KCX_OK: return "ok";
  case KCX_PROPERTY_FAILED: return "property failed";
  case KCX_ERR_PARSE: return "parse error";
  case KCX_BUDGET_EXHAUSTED: return "budget exhausted";
  case KCX_ERR_ARGUMENT: return "invalid argument";
  case KCX_ERR_WRONG_KIND: return "wrong model kind";
  case KCX_ERR_UNSUPPORTED: return "unsupported";
  case KCX_ERR_IO: return "i/o error";
  default: return "internal error";
  }
}

void kcx_options_init(kcx_options *opts) {
  if (!opts) return;
  opts->budget = 10000;
  opts->threads = 1;
}

const char *kcx_last_error(void) { return last_error.c_str(); }
size_t kcx_last_error_line(void) { return last_line; }
size_t kcx_last_error_column(void) { return last_column; }

int kcx_model_parse(const char *text, kcx_model **out) {
  if (!out) return KCX_ERR_ARGUMENT;
  *out = nullptr;
  if (!text) {
    set_error("null text");
    return KCX_ERR_ARGUMENT;
  }
  return guarded([&] {
    *out = new kcx_model{kcx::parse_model(text)};
    return KCX_OK;
  });
}

int kcx_model_load(const char *path, kcx_model **out) {
  if (!out) return KCX_ERR_ARGUMENT;
  *out = nullptr;
  if (!path) {
    set_error("null path");
    return KCX_ERR_ARGUMENT;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    set_error(std::string("cannot read ") + path);
    return KCX_ERR_IO;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  int rc = kcx_model_parse(ss.str().c_str(), out);
  if (rc == KCX_ERR_PARSE) last_error = std::string(path) + ": " + last_error;
  return rc;
}

int kcx_model_get_kind(const kcx_model *model) {
  if (!model) return -1;
  return static_cast<int>(model->model.index());
}

int kcx_model_print(const kcx_model *model, char **out) {
  if (!model || !out) {
    set_error("null argument");
    return KCX_ERR_ARGUMENT;
  }
  return guarded([&] {
    *out = dup(kcx::print_model(model->model));
    return KCX_OK;
  });
}

void kcx_model_free(kcx_model *model) { delete model; }
void kcx_string_free(char *s) { std::free(s); }

int kcx_check(const kcx_model *model, const kcx_options *opts, kcx_report **out) {
  if (!out) return KCX_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    Builder b("check");
    auto budget = budget_of(opts);
    if (auto *X = model_as<kcx::NCoefficientComplex>(model)) {
      b.data()["model"] = X->describe();
      b.line("complex: " + X->describe());
      auto rep = kcx::verify_axioms(*X, budget);
      json items = json::array();
      for (auto &p : rep.items) {
        items.push_back(property(p));
        b.line(property_line(p));
      }
      b.data()["items"] = items;
      return b.finish(status_of(rep.items), out);
    }
    if (auto *S = model_as<kcx::BlockSystem>(model)) {
      b.data()["model"] = "system of " + std::to_string(S->stages.size()) + " stages";
      std::vector<kcx::PropertyReport> all;
      for (std::size_t i = 0; i < S->stages.size(); ++i) {
        b.line(stage_line(i, S->stages[i]));
        for (auto p : kcx::verify_axioms(S->stages[i], budget).items) {
          p.name = "stage " + std::to_string(i) + " " + p.name;
          b.line(property_line(p));
          all.push_back(p);
        }
      }
      kcx::PropertyReport conn{"connecting maps", kcx::CheckStatus::Pass, "", "", S->connects.size()};
      if (auto v = kcx::verify_system(*S, budget)) {
        conn.status = kcx::CheckStatus::Fail;
        conn.witness = *v;
      }
      b.line(property_line(conn));
      all.push_back(conn);
      json items = json::array();
      for (auto &p : all) items.push_back(property(p));
      b.data()["items"] = items;
      return b.finish(status_of(all), out);
    }
    return wrong_kind("complex or system");
  }, "check", out);
}

int kcx_split(const kcx_model *model, const kcx_options *opts, kcx_report **out) {
  (void)opts;
  if (!out) return KCX_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto *X = model_as<kcx::NCoefficientComplex>(model);
    if (!X) return wrong_kind("complex");
    Builder b("split");
    auto s = kcx::split_coefficients(*X);
    auto roundtrip = kcx::hom_equal(s.iso_inverse.after(s.iso), kcx::GroupHom::identity(X->Gn)) &&
                     kcx::hom_equal(s.iso.after(s.iso_inverse), kcx::GroupHom::identity(s.iso.target()));
    auto &d = b.data();
    d["R"] = s.R.to_string();
    d["B"] = s.B.to_string();
    d["iso"] = s.iso.matrix().to_string();
    d["iso_inverse"] = s.iso_inverse.matrix().to_string();
    d["quotient"] = s.quotient.matrix().to_string();
    d["torsion_embedding"] = s.torsion_embedding.matrix().to_string();
    d["rho"] = s.normalized.rho.matrix().to_string();
    d["beta"] = s.normalized.beta.matrix().to_string();
    d["round_trip"] = roundtrip;
    d["normalized"] = kcx::print_complex_expanded(s.normalized);
    b.line("R = G0/nG0: " + s.R.to_string());
    b.line("B = G1[n]: " + s.B.to_string());
    b.line("Gn -> R (+) B: " + s.iso.matrix().to_string());
    b.line("inverse: " + s.iso_inverse.matrix().to_string());
    b.line("normalized rho: " + s.normalized.rho.matrix().to_string());
    b.line("normalized beta: " + s.normalized.beta.matrix().to_string());
    b.line(std::string("round trip: ") + (roundtrip ? "identity" : "NOT identity"));
    return b.finish(roundtrip ? KCX_OK : KCX_PROPERTY_FAILED, out);
  }, "split", out);
}

int kcx_decompose(const kcx_model *model, const char *triple, const char *parts, const kcx_options *opts,
                  kcx_report **out) {
  if (!out) return KCX_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto *X = model_as<kcx::NCoefficientComplex>(model);
    if (!X) return wrong_kind("complex");
    if (!triple || !parts) throw kcx::PreconditionError("decompose needs a triple and parts");
    auto t = kcx::parse_triple(triple, *X);
    auto evens = kcx::parse_vector_list(parts);
    for (auto &e : evens)
      if (e.size() != X->G0.ngens()) throw kcx::ParseError("part length does not match G0", 1, 1);
    Builder b("decompose");
    b.data()["triple"] = triple_text(t);
    b.line("triple: " + triple_text(t));
    auto budget = budget_of(opts);
    try {
      kcx::Budget pb(budget);
      if (!kcx::positive_triple(*X, t, pb)) {
        b.data()["witness"] = "the triple is not positive";
        b.line("witness: the triple is not positive");
        return b.finish(KCX_PROPERTY_FAILED, out);
      }
      auto pieces = kcx::triple_split(*X, t, evens, std::nullopt, budget);
      kcx::Triple sum{X->G0.zero(), X->Gn.zero(), X->G1.zero()};
      json js = json::array();
      bool ok = true;
      kcx::Budget vb(budget);
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto &p = pieces[i];
        bool pos = kcx::positive_triple(*X, p, vb);
        ok = ok && pos;
        sum = {X->G0.add(sum.x, p.x), X->Gn.add(sum.y, p.y), X->G1.add(sum.z, p.z)};
        js.push_back(json{{"part", triple_text(p)}, {"positive", pos}});
        b.line("part " + std::to_string(i) + ": " + triple_text(p) + (pos ? "" : "  NOT positive"));
      }
      bool sums = X->G0.equal(sum.x, t.x) && X->Gn.equal(sum.y, t.y) && X->G1.equal(sum.z, t.z);
      b.data()["parts"] = js;
      b.data()["sums_to_triple"] = sums;
      b.line(std::string("sum equals triple: ") + (sums ? "yes" : "no"));
      return b.finish(ok && sums ? KCX_OK : KCX_PROPERTY_FAILED, out);
    } catch (const kcx::BudgetExhausted &e) {
      return budget_report(b, e, out);
    }
  }, "decompose", out);
}

int kcx_realize(const kcx_model *model, size_t steps, const kcx_options *opts, kcx_report **out) {
  if (!out) return KCX_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto *X = model_as<kcx::NCoefficientComplex>(model);
    if (!X) return wrong_kind("complex");
    Builder b("realize");
    kcx::Budget budget(budget_of(opts));
    auto r = kcx::realize_limit(*X, steps, budget);
    json stages = json::array();
    for (std::size_t i = 0; i < r.system.stages.size(); ++i) {
      auto js = stage(r.system.stages[i]);
      js["to_target"] = morphism(r.to_target[i]);
      if (i > 0) js["connect"] = morphism(r.system.connects[i - 1]);
      stages.push_back(js);
      b.line(stage_line(i, r.system.stages[i]));
      for (auto &h : r.hits)
        if (h.stage == i)
          b.line("  hit " + std::to_string(h.index) + ": " + triple_text(h.triple) + " <- " + triple_text(h.preimage));
    }
    json hits = json::array();
    for (auto &h : r.hits)
      hits.push_back(json{{"index", h.index}, {"stage", h.stage}, {"triple", triple_text(h.triple)},
                          {"preimage", triple_text(h.preimage)}});
    auto &d = b.data();
    d["steps"] = steps;
    d["stages"] = stages;
    d["hits"] = hits;
    d["complete"] = r.complete;
    d["note"] = r.note;
    if (!r.complete) {
      b.line("incomplete: " + r.note);
      return b.finish(KCX_BUDGET_EXHAUSTED, out);
    }
    auto v = kcx::check_realization(*X, r, budget_of(opts));
    d["verified"] = !v.has_value();
    d["witness"] = v.value_or("");
    b.line(v ? "verification failed: " + *v : "verified: triangles commute and certificates replay");
    return b.finish(v ? KCX_PROPERTY_FAILED : KCX_OK, out);
  }, "realize", out);
}

int kcx_large_denominators(const kcx_model *model, const kcx_options *opts, kcx_report **out) {
  if (!out) return KCX_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto *S = model_as<kcx::BlockSystem>(model);
    if (!S) return wrong_kind("system");
    Builder b("large-denominators");
    kcx::Budget budget(budget_of(opts));
    auto r = kcx::enforce_large_denominators(*S, budget);
    json kept = json::array();
    for (auto k : r.kept) kept.push_back(k);
    json connects = json::array();
    std::string line = "kept stages:";
    for (auto k : r.kept) line += " " + std::to_string(k);
    b.line(line);
    std::optional<std::string> violation;
    for (std::size_t i = 0; i < r.system.connects.size(); ++i) {
      auto v = kcx::large_denominator_violation(r.system.connects[i], r.system.stages[i], r.system.stages[i + 1]);
      if (v && !violation) violation = "connect " + std::to_string(i) + ": " + *v;
      auto js = morphism(r.system.connects[i]);
      js["satisfied"] = !v;
      connects.push_back(js);
      b.line("connect " + std::to_string(i) + ": theta0 " + r.system.connects[i].theta0.matrix().to_string() +
             ", theta1 " + r.system.connects[i].theta1.matrix().to_string() + (v ? "  violates: " + *v : ""));
    }
    auto &d = b.data();
    d["kept"] = kept;
    d["connects"] = connects;
    d["ok"] = r.ok;
    d["note"] = r.note;
    if (!r.ok) {
      d["witness"] = r.note;
      b.line("witness: " + r.note);
      return b.finish(budget.exhausted() ? KCX_BUDGET_EXHAUSTED : KCX_PROPERTY_FAILED, out);
    }
    if (violation) {
      d["witness"] = *violation;
      b.line("witness: " + *violation);
      return b.finish(KCX_PROPERTY_FAILED, out);
    }
    return b.finish(KCX_OK, out);
  }, "large-denominators", out);
}

int kcx_qz_stage(const kcx_model *model, const char *chain, const kcx_options *opts, kcx_report **out) {
  if (!out) return KCX_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto *Q = model_as<kcx::StagedModel>(model);
    if (!Q) return wrong_kind("qz");
    auto c = chain_for(*Q, chain, nullptr);
    Builder b("qz-stage");
    b.data()["descriptor"] = Q->descriptor.describe();
    b.line("descriptor: " + Q->descriptor.describe());
    auto N = kcx::stage_decomposition(Q->descriptor, c);
    json stages = json::array();
    for (std::size_t i = 0; i < N.stages.size(); ++i) {
      const auto &S = N.stages[i];
      json js{{"n", S.n.get_str()},
              {"groups", S.G0.to_string() + " -> " + S.Gn.to_string() + " -> " + S.G1.to_string()},
              {"scale", N.scale[i].get_str()}};
      if (i > 0) js["connect"] = morphism(N.connects[i - 1]);
      stages.push_back(js);
      b.line("stage " + std::to_string(i) + ": n = " + S.n.get_str() + "; " + S.G0.to_string() + " -> " +
             S.Gn.to_string() + " -> " + S.G1.to_string() + "; G0 unit = 1/" + N.scale[i].get_str());
    }
    auto rep = kcx::verify_nbold_axioms(N, budget_of(opts));
    json items = json::array();
    for (auto &p : rep.items) {
      items.push_back(property(p));
      b.line(property_line(p));
    }
    b.data()["stages"] = stages;
    b.data()["items"] = items;
    return b.finish(status_of(rep.items), out);
  }, "qz-stage", out);
}

int kcx_qz_realize(const kcx_model *model, const char *chain, size_t steps, const kcx_options *opts,
                   kcx_report **out) {
  if (!out) return KCX_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto *Q = model_as<kcx::StagedModel>(model);
    if (!Q) return wrong_kind("qz");
    auto c = chain_for(*Q, chain, "2,6,24");
    Builder b("qz-realize");
    auto N = kcx::stage_decomposition(Q->descriptor, c);
    kcx::Budget budget(budget_of(opts));
    auto r = kcx::realize_limit_varying(N, steps, budget);
    json stages = json::array();
    for (std::size_t i = 0; i < r.system.stages.size(); ++i) {
      auto js = stage(r.system.stages[i]);
      if (i > 0) js["connect"] = morphism(r.system.connects[i - 1]);
      stages.push_back(js);
      b.line(stage_line(i, r.system.stages[i]));
      if (i > 0) b.line("  connect theta0: " + r.system.connects[i - 1].theta0.matrix().to_string());
    }
    json hits = json::array();
    for (auto &h : r.hits)
      hits.push_back(json{{"index", h.index}, {"level", h.stage}, {"triple", triple_text(h.triple)},
                          {"preimage", triple_text(h.preimage)}});
    auto &d = b.data();
    d["chain"] = json::array();
    for (auto &l : c.levels) d["chain"].push_back(l.get_str());
    d["stages"] = stages;
    d["hits"] = hits;
    d["complete"] = r.complete;
    d["note"] = r.note;
    b.line(std::to_string(r.hits.size()) + " hit certificates");
    if (!r.complete) {
      b.line("incomplete: " + r.note);
      return b.finish(KCX_BUDGET_EXHAUSTED, out);
    }
    auto v = kcx::check_varying_realization(N, r, budget_of(opts));
    d["verified"] = !v.has_value();
    d["witness"] = v.value_or("");
    b.line(v ? "verification failed: " + *v : "verified: cells commute, connects divisible, certificates replay");
    return b.finish(v ? KCX_PROPERTY_FAILED : KCX_OK, out);
  }, "qz-realize", out);
}

int kcx_dl_positive(const char *epsilon, const char *element, const kcx_options *opts, kcx_report **out) {
  (void)opts;
  if (!out) return KCX_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    if (!epsilon || !element) throw kcx::PreconditionError("dl-positive needs an epsilon and an element");
    auto eps = kcx::EpsilonSeq::parse(epsilon);
    auto t = kcx::parse_dl_triple(element);
    Builder b("dl-positive");
    auto fail = kcx::dl_positivity_failure(eps, t.g, t.r, t.z);
    auto &d = b.data();
    d["epsilon"] = eps.to_string();
    d["element"] = t.g.to_string() + " | " + t.r.to_string() + " | z=" + std::to_string(t.z);
    d["positive"] = !fail;
    d["witness"] = fail.value_or("");
    b.line("epsilon: " + eps.to_string());
    b.line("element: " + t.g.to_string() + " | " + t.r.to_string() + " | z=" + std::to_string(t.z));
    b.line(fail ? "not positive: " + *fail : "positive");
    return b.finish(fail ? KCX_PROPERTY_FAILED : KCX_OK, out);
  }, "dl-positive", out);
}

int kcx_dl_equiv(const char *a, const char *bseq, size_t depth, const kcx_options *opts, kcx_report **out) {
  if (!out) return KCX_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    if (!a || !bseq) throw kcx::PreconditionError("dl-equiv needs two epsilon sequences");
    auto s1 = kcx::EpsilonSeq::parse(a), s2 = kcx::EpsilonSeq::parse(bseq);
    Builder b("dl-equiv");
    kcx::Budget budget(budget_of(opts));
    auto r = kcx::epsilon_equiv_search(s1, s2, depth, budget);
    auto &d = b.data();
    d["a"] = s1.to_string();
    d["b"] = s2.to_string();
    d["depth"] = depth;
    d["found"] = r.found;
    d["explored"] = r.explored;
    b.line("a: " + s1.to_string());
    b.line("b: " + s2.to_string());
    json cert = json::array();
    for (auto &st : r.certificate) {
      cert.push_back(json{{"move", st.move.to_string()}, {"inverse", st.inverse}, {"result", st.result.to_string()}});
      b.line(std::string("  ") + (st.inverse ? "undo " : "") + st.move.to_string() + " -> " + st.result.to_string());
    }
    d["certificate"] = cert;
    if (r.found) {
      bool replay = kcx::replay_certificate(s1, s2, r.certificate);
      d["replayed"] = replay;
      b.line(std::string("certificate of length ") + std::to_string(r.certificate.size()) +
             (replay ? " replays" : " does NOT replay"));
      return b.finish(replay ? KCX_OK : KCX_PROPERTY_FAILED, out);
    }
    if (r.budget_exhausted) {
      b.line("search stopped by the budget after " + std::to_string(r.explored) + " sequences");
      return b.finish(KCX_BUDGET_EXHAUSTED, out);
    }
    d["witness"] = "no certificate up to depth " + std::to_string(depth);
    b.line("no certificate up to depth " + std::to_string(depth) + " (" + std::to_string(r.explored) +
           " sequences explored)");
    return b.finish(KCX_PROPERTY_FAILED, out);
  }, "dl-equiv", out);
}

int kcx_report_status(const kcx_report *report) { return report ? report->status : KCX_ERR_ARGUMENT; }
const char *kcx_report_text(const kcx_report *report) { return report ? report->text.c_str() : ""; }
const char *kcx_report_json(const kcx_report *report) { return report ? report->json.c_str() : ""; }
void kcx_report_free(kcx_report *report) { delete report; }

} // extern "C"
