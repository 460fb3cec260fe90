#include "doctest.h"

#include "kcx/kcx.h"
#include "kcx/model.hpp"

#include <json.hpp>

#include <memory>

using namespace kcx;
using json = nlohmann::json;

namespace {

const char *kMixed = "kcx-format 1\nn: 2\nblocks: I2, C*2\n";

struct ModelHandle {
  kcx_model *m = nullptr;
  explicit ModelHandle(const char *text) { REQUIRE(kcx_model_parse(text, &m) == KCX_OK); }
  ~ModelHandle() { kcx_model_free(m); }
};

// Runs a command and returns its status and parsed JSON report.
template <class F> std::pair<int, json> run(F &&f) {
  kcx_report *r = nullptr;
  int s = f(&r);
  REQUIRE(r != nullptr);
  CHECK(kcx_report_status(r) == s);
  auto j = json::parse(kcx_report_json(r));
  CHECK(std::string(kcx_report_text(r)).find("result: ") != std::string::npos);
  kcx_report_free(r);
  return {s, j};
}

Triple apply(const json &m, const NCoefficientComplex &src, const NCoefficientComplex &dst, const Triple &t) {
  GroupHom a(src.G0, dst.G0, parse_matrix(m["theta0"], dst.G0.ngens(), src.G0.ngens()));
  GroupHom b(src.Gn, dst.Gn, parse_matrix(m["thetan"], dst.Gn.ngens(), src.Gn.ngens()));
  GroupHom c(src.G1, dst.G1, parse_matrix(m["theta1"], dst.G1.ngens(), src.G1.ngens()));
  return {a.apply(t.x), b.apply(t.y), c.apply(t.z)};
}

} // namespace

TEST_CASE("model handles") {
  ModelHandle h(kMixed);
  CHECK(kcx_model_get_kind(h.m) == KCX_MODEL_COMPLEX);
  char *text = nullptr;
  REQUIRE(kcx_model_print(h.m, &text) == KCX_OK);
  CHECK(std::string(text) == kMixed);
  kcx_string_free(text);

  kcx_model *bad = nullptr;
  CHECK(kcx_model_parse("kcx-format 1\nn: 2\nG0: Z\nGn: Z/2\nG1: 0\nrho: [[1,0]]\nbeta: []\nstar: standard\n"
                        "nat: strict(1; standard)\n",
                        &bad) == KCX_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(kcx_last_error_line() == 6);
  CHECK(kcx_last_error_column() == 7);
  CHECK(std::string(kcx_last_error()).find("matrix row 1") != std::string::npos);
  CHECK(kcx_model_parse(nullptr, &bad) == KCX_ERR_ARGUMENT);
  CHECK(kcx_model_load("/nonexistent/model.kcx", &bad) == KCX_ERR_IO);

  kcx_report *r = nullptr;
  CHECK(kcx_check(nullptr, nullptr, &r) == KCX_ERR_ARGUMENT);
  CHECK(r == nullptr);
  CHECK(kcx_large_denominators(h.m, nullptr, &r) == KCX_ERR_WRONG_KIND);
  CHECK(kcx_dl_positive("left=2", "x=1", nullptr, &r) == KCX_ERR_PARSE);
}

TEST_CASE("check and split reports") {
  ModelHandle h(kMixed);
  auto [s, j] = run([&](kcx_report **r) { return kcx_check(h.m, nullptr, r); });
  CHECK(s == KCX_OK);
  CHECK(j["command"] == "check");
  CHECK(j["status"] == "pass");
  CHECK(j["exit_code"] == 0);
  CHECK(j["items"].size() >= 10);
  for (auto &it : j["items"]) {
    CHECK(it.contains("name"));
    CHECK(it.contains("witness"));
  }
  auto [s2, j2] = run([&](kcx_report **r) { return kcx_split(h.m, nullptr, r); });
  CHECK(s2 == KCX_OK);
  CHECK(j2["round_trip"] == true);
  CHECK(j2["B"] == "Z/2");
}

TEST_CASE("realize certificates replay through the library") {
  ModelHandle h(kMixed);
  kcx_options o;
  kcx_options_init(&o);
  o.budget = 200000;
  auto [s, j] = run([&](kcx_report **r) { return kcx_realize(h.m, 5, &o, r); });
  REQUIRE(s == KCX_OK);
  auto target = std::get<NCoefficientComplex>(parse_model(kMixed));
  REQUIRE(j["stages"].size() == 5);
  REQUIRE(j["hits"].size() == 5);
  for (auto &hit : j["hits"]) {
    const auto &st = j["stages"][hit["stage"].get<std::size_t>()];
    auto H = block_sum(parse_blocks(st["blocks"], Int(st["n"].get<std::string>())));
    auto pre = parse_triple(hit["preimage"], H);
    auto t = parse_triple(hit["triple"], target);
    Budget b(100000);
    CHECK(positive_triple(H, pre, b));
    auto img = apply(st["to_target"], H, target, pre);
    CHECK(target.G0.equal(img.x, t.x));
    CHECK(target.Gn.equal(img.y, t.y));
    CHECK(target.G1.equal(img.z, t.z));
  }
}

TEST_CASE("large denominators through the C interface") {
  ModelHandle ones("kcx-format 1\nkind: system\nn: 2\nstage: S1*2\nstage: S1*2\ntheta0: [[1,1],[1,1]]\n"
                   "thetan: [[1,1],[1,1]]\ntheta1: [[1,1],[1,1]]\nstage: S1*2\ntheta0: [[1,1],[1,1]]\n"
                   "thetan: [[1,1],[1,1]]\ntheta1: [[1,1],[1,1]]\n");
  auto [s, j] = run([&](kcx_report **r) { return kcx_large_denominators(ones.m, nullptr, r); });
  CHECK(s == KCX_OK);
  CHECK(j["kept"] == json::array({0, 2}));

  ModelHandle id("kcx-format 1\nkind: system\nn: 2\nstage: S1\nstage: S1\ntheta0: [[1]]\nthetan: [[1]]\n"
                 "theta1: [[1]]\n");
  auto [s2, j2] = run([&](kcx_report **r) { return kcx_large_denominators(id.m, nullptr, r); });
  CHECK(s2 == KCX_PROPERTY_FAILED);
  CHECK(j2["witness"].get<std::string>().find("multiplicity 1") != std::string::npos);
}

TEST_CASE("staged descriptors through the C interface") {
  ModelHandle p("kcx-format 1\nkind: qz\ndescriptor: point\nchain: 2,6,24\n");
  auto [s, j] = run([&](kcx_report **r) { return kcx_qz_stage(p.m, nullptr, nullptr, r); });
  CHECK(s == KCX_OK);
  CHECK(j["stages"][2]["scale"] == "24");
  auto [s2, j2] = run([&](kcx_report **r) { return kcx_qz_stage(p.m, "2,4", nullptr, r); });
  CHECK(s2 == KCX_OK);
  CHECK(j2["stages"].size() == 2);
  kcx_report *r = nullptr;
  CHECK(kcx_qz_stage(p.m, "2,5", nullptr, &r) == KCX_ERR_PARSE);
}

TEST_CASE("epsilon commands and certificate replay") {
  auto [s, j] = run([&](kcx_report **r) { return kcx_dl_positive("left=0;right=1", "x=0 | c=1", nullptr, r); });
  CHECK(s == KCX_PROPERTY_FAILED);
  CHECK(j["witness"] == "x = 0 does not dominate c = 1");

  kcx_options o;
  kcx_options_init(&o);
  o.budget = 1000000;
  auto [s2, j2] = run([&](kcx_report **r) { return kcx_dl_equiv("left=0", "left=0;mid=1@4;right=0", 3, &o, r); });
  REQUIRE(s2 == KCX_OK);
  auto cur = EpsilonSeq::parse(j2["a"]);
  for (auto &step : j2["certificate"]) {
    auto m = EpsilonMove::parse(step["move"]);
    auto next = EpsilonSeq::parse(step["result"]);
    if (step["inverse"]) CHECK(epsilon_move(next, m) == cur);
    else CHECK(epsilon_move(cur, m) == next);
    cur = next;
  }
  CHECK(cur == EpsilonSeq::delta(4));

  o.budget = 100;
  auto [s3, j3] = run([&](kcx_report **r) { return kcx_dl_equiv("left=0;right=1", "left=0", 6, &o, r); });
  CHECK(s3 == KCX_BUDGET_EXHAUSTED);
  CHECK(j3["status"] == "budget");
}
