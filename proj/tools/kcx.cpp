// Command-line front end over the C interface.
//
// Exit codes: 0 pass, 1 property failure (a witness is printed), 2 usage or
// parse error, 3 budget exhausted.

#include "kcx/kcx.h"

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Globals {
  std::string format = "text";
  std::uint64_t budget = 10000;
  unsigned threads = 1;
};

int exit_code(int status) {
  switch (status) {
  case KCX_OK: return kExitPass;
  case KCX_PROPERTY_FAILED: return kExitFail;
  case KCX_BUDGET_EXHAUSTED: return kExitBudget;
  default: return kExitUsage;
  }
}

int report_error(int status) {
  std::cerr << "error (" << kcx_status_name(status) << "): " << kcx_last_error() << "\n";
  return exit_code(status);
}

// Runs one command and prints its report in the selected format.
int emit(const Globals &g, const std::function<int(const kcx_options *, kcx_report **)> &run) {
  kcx_options opts;
  kcx_options_init(&opts);
  opts.budget = g.budget;
  opts.threads = g.threads;
  kcx_report *rep = nullptr;
  int status = run(&opts, &rep);
  if (!rep) return report_error(status);
  std::fputs(g.format == "json" ? kcx_report_json(rep) : kcx_report_text(rep), stdout);
  kcx_report_free(rep);
  return exit_code(status);
}

int with_model(const Globals &g, const std::string &path,
               const std::function<int(const kcx_model *, const kcx_options *, kcx_report **)> &run) {
  kcx_model *m = nullptr;
  int status = kcx_model_load(path.c_str(), &m);
  if (status != KCX_OK) return report_error(status);
  int rc = emit(g, [&](const kcx_options *o, kcx_report **r) { return run(m, o, r); });
  kcx_model_free(m);
  return rc;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"kcx: n-coefficient complexes, their realization and the related searches"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--budget", g.budget, "Elementary search steps per bounded check")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (outputs do not depend on it)")->capture_default_str();

  std::string file, triple, parts, chain, epsilon, element, a, b;
  std::size_t steps = 3, depth = 4;
  std::function<int()> action;

  auto file_arg = [&](CLI::App *sub) { sub->add_option("file", file, "Model file")->required(); };

  auto *print = app.add_subcommand("print", "Parse a model file and print its canonical form");
  file_arg(print);
  print->callback([&] {
    action = [&] {
      kcx_model *m = nullptr;
      int status = kcx_model_load(file.c_str(), &m);
      if (status != KCX_OK) return report_error(status);
      char *text = nullptr;
      status = kcx_model_print(m, &text);
      kcx_model_free(m);
      if (status != KCX_OK) return report_error(status);
      std::fputs(text, stdout);
      kcx_string_free(text);
      return kExitPass;
    };
  });

  auto *check = app.add_subcommand("check", "Verify the axioms of a complex or a block system");
  file_arg(check);
  check->callback([&] { action = [&] { return with_model(g, file, kcx_check); }; });

  auto *split = app.add_subcommand("split", "Split the coefficient group as G0/nG0 (+) G1[n]");
  file_arg(split);
  split->callback([&] { action = [&] { return with_model(g, file, kcx_split); }; });

  auto *decompose = app.add_subcommand("decompose", "Split a positive triple along a decomposition of its even part");
  file_arg(decompose);
  decompose->add_option("--triple", triple, "Triple as (x);(y);(z)")->required();
  decompose->add_option("--parts", parts, "Even parts as (e1),(e2),...")->required();
  decompose->callback([&] {
    action = [&] {
      return with_model(g, file, [&](const kcx_model *m, const kcx_options *o, kcx_report **r) {
        return kcx_decompose(m, triple.c_str(), parts.c_str(), o, r);
      });
    };
  });

  auto *realize = app.add_subcommand("realize", "Realize a complex as a limit of block sums");
  file_arg(realize);
  realize->add_option("--steps", steps, "Number of positive triples to hit")->capture_default_str();
  realize->callback([&] {
    action = [&] {
      return with_model(g, file, [&](const kcx_model *m, const kcx_options *o, kcx_report **r) {
        return kcx_realize(m, steps, o, r);
      });
    };
  });

  auto *large = app.add_subcommand("large-denominators", "Compress a block system to large denominators");
  file_arg(large);
  large->callback([&] { action = [&] { return with_model(g, file, kcx_large_denominators); }; });

  auto *qz_stage = app.add_subcommand("qz-stage", "Stage a Q/Z-type descriptor along a divisibility chain");
  file_arg(qz_stage);
  qz_stage->add_option("--chain", chain, "Levels such as 2,6,24 (default: the file's chain)");
  qz_stage->callback([&] {
    action = [&] {
      return with_model(g, file, [&](const kcx_model *m, const kcx_options *o, kcx_report **r) {
        return kcx_qz_stage(m, chain.c_str(), o, r);
      });
    };
  });

  auto *qz_realize = app.add_subcommand("qz-realize", "Realize a staged descriptor by blocks of increasing level");
  file_arg(qz_realize);
  qz_realize->add_option("--steps", steps, "Positive triples to hit per level")->capture_default_str();
  qz_realize->add_option("--chain", chain, "Levels (default: the file's chain, else 2,6,24)");
  qz_realize->callback([&] {
    action = [&] {
      return with_model(g, file, [&](const kcx_model *m, const kcx_options *o, kcx_report **r) {
        return kcx_qz_realize(m, chain.c_str(), steps, o, r);
      });
    };
  });

  auto *dl_positive = app.add_subcommand("dl-positive", "Decide positivity in the epsilon-ordered group");
  dl_positive->add_option("--epsilon", epsilon, "Sequence as left=..;mid=..@k;right=..")->required();
  dl_positive->add_option("--element", element, "Element as x=..;y={..} | a=..;b={..};c=.. | z=..")->required();
  dl_positive->callback([&] {
    action = [&] {
      return emit(g, [&](const kcx_options *o, kcx_report **r) {
        return kcx_dl_positive(epsilon.c_str(), element.c_str(), o, r);
      });
    };
  });

  auto *dl_equiv = app.add_subcommand("dl-equiv", "Search for a move sequence relating two epsilon sequences");
  dl_equiv->add_option("--a", a, "First sequence")->required();
  dl_equiv->add_option("--b", b, "Second sequence")->required();
  dl_equiv->add_option("--depth", depth, "Maximum number of moves")->capture_default_str();
  dl_equiv->callback([&] {
    action = [&] {
      return emit(g, [&](const kcx_options *o, kcx_report **r) {
        return kcx_dl_equiv(a.c_str(), b.c_str(), depth, o, r);
      });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  return action ? action() : kExitUsage;
}
