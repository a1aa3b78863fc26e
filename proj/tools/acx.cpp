//===--- acx.cpp - Command-line prover ------------------------------------===//
//
// Part of the acx prover. Licensed under the Apache License v2.0.
//
//===----------------------------------------------------------------------===//

#include "acx/bench.hpp"
#include "acx/completion.hpp"
#include "acx/oracle.hpp"
#include "acx/problem.hpp"
#include "acx/shostak.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// exit codes: 0 valid, 10 invalid, 1 usage, 2 parse/input, 3 budget
constexpr int kExitValid = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInvalid = 10;

struct RunReport {
  acx::Verdict verdict;
  size_t rules;
  long long ms;
};

int report(const RunReport& r) {
  switch (r.verdict) {
  case acx::Verdict::Valid:
    std::cout << "result: valid\n";
    break;
  case acx::Verdict::ValidInconsistent:
    std::cout << "result: valid (inconsistent hypotheses)\n";
    break;
  case acx::Verdict::Invalid:
    std::cout << "result: invalid\n";
    break;
  }
  std::cout << "rules: " << r.rules << "\n";
  std::cout << "time_ms: " << r.ms << "\n";
  return r.verdict == acx::Verdict::Invalid ? kExitInvalid : kExitValid;
}

int run_problem(const acx::Problem& problem, bool trace, long budget) {
  const acx::ShostakTheory& X = acx::theory_by_name(problem.theory);
  acx::CanonContext ctx;
  acx::CompletionOptions opts;
  if (budget > 0)
    opts.max_inferences = budget;
  auto t0 = std::chrono::steady_clock::now();
  acx::DecideOutcome out =
      acx::decide(problem.hypotheses, problem.goals, ctx, X, opts);
  auto t1 = std::chrono::steady_clock::now();
  if (trace) {
    for (const acx::TraceEntry& e : out.system.trace)
      std::cout << acx::render_trace_entry(e) << "\n";
  }
  RunReport r;
  r.verdict = out.verdict;
  r.rules = acx::core_rules(out.system, ctx).size();
  r.ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return report(r);
}

int cmd_prove(const std::string& path, bool trace, long budget,
              const std::string& theory_override) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitParse;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  acx::Problem problem = acx::parse_problem(ss.str());
  if (!theory_override.empty())
    problem.theory = theory_override;
  return run_problem(problem, trace, budget);
}

int cmd_bench(const std::string& category, int n, int d,
              const std::string& emit, long budget) {
  acx::BenchParams params{n, d};
  acx::Problem problem =
      category == "c1" ? acx::gen_c1(params) : acx::gen_c2(params);
  if (!emit.empty()) {
    std::ofstream out(emit);
    if (!out) {
      std::cerr << "error: cannot write " << emit << "\n";
      return kExitParse;
    }
    out << acx::render_problem(problem);
  }
  return run_problem(problem, false, budget);
}

const char* kFig3 = R"((theory empty)
(ac u)
(const a1 a2 a3 a4 a5 a6)
(assert (= (u a1 a4) a1))
(assert (= (u a3 a6) (u a5 a5)))
(assert (= a5 a4))
(assert (= a6 a2))
(goal (= a1 (u a1 (u a6 a3))))
)";

const char* kFig4 = R"((theory lia)
(ac u)
(op f 1)
(const a b c1 c2 d e1 e2)
(assert (= (u a (- c2 c1)) a))
(assert (= (- (u e1 e2) (f b)) (u d d)))
(assert (= d (+ c1 1)))
(assert (= e2 b))
(assert (= (u b e1) (f e2)))
(assert (= c2 (+ (* 2 c1) 1)))
(goal (= a (u a 0)))
)";

bool selftest_case(const char* name, const char* text, size_t want_rules,
                   const std::vector<acx::InferenceKind>* want_prefix) {
  acx::Problem problem = acx::parse_problem(text);
  const acx::ShostakTheory& X = acx::theory_by_name(problem.theory);
  acx::CanonContext ctx;
  acx::DecideOutcome out =
      acx::decide(problem.hypotheses, problem.goals, ctx, X);
  bool ok = out.verdict == acx::Verdict::Valid &&
            acx::core_rules(out.system, ctx).size() == want_rules;
  if (ok && want_prefix) {
    if (out.system.trace.size() < want_prefix->size())
      ok = false;
    else
      for (size_t i = 0; i < want_prefix->size(); ++i)
        if (out.system.trace[i].kind != (*want_prefix)[i])
          ok = false;
  }
  std::cout << (ok ? "PASS" : "FAIL") << " " << name << " (rules "
            << acx::core_rules(out.system, ctx).size() << ", verdict "
            << (out.verdict == acx::Verdict::Valid ? "valid" : "other")
            << ")\n";
  return ok;
}

int cmd_selftest() {
  using K = acx::InferenceKind;
  std::vector<K> fig3_prefix = {K::Orient, K::Orient, K::Orient, K::Compose,
                                K::Orient, K::Collapse, K::Orient, K::Deduce,
                                K::Simplify, K::Orient};
  bool ok = true;
  ok &= selftest_case("ac-ground-completion-replay", kFig3, 5, &fig3_prefix);
  ok &= selftest_case("ac-la-completion-replay", kFig4, 7, nullptr);
  // inconsistency path: a ≈ a+1 entails anything
  {
    acx::Problem p = acx::parse_problem(R"((theory lia)
(const a b)
(assert (= a (+ a 1)))
(goal (= a b))
)");
    acx::CanonContext ctx;
    acx::DecideOutcome out = acx::decide(p.hypotheses, p.goals, ctx,
                                         acx::theory_by_name(p.theory));
    bool got = out.verdict == acx::Verdict::ValidInconsistent;
    std::cout << (got ? "PASS" : "FAIL") << " inconsistent-hypotheses\n";
    ok &= got;
  }
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"acx - ground AC-completion prover modulo a Shostak theory"};
  app.require_subcommand(1);

  std::string path, theory_override, emit;
  bool trace = false;
  long budget = 0;
  int n = 3, d = 3;
  std::string category;

  auto* prove = app.add_subcommand("prove", "decide a problem file");
  prove->add_option("file", path, "problem file")->required();
  prove->add_flag("--trace", trace, "print the completion trace");
  prove->add_option("--budget", budget, "inference budget");
  prove->add_option("--theory", theory_override,
                    "override the file's theory (empty|lia)");

  auto* bench = app.add_subcommand("bench", "run a generated benchmark");
  bench->add_option("category", category, "c1 or c2")
      ->required()
      ->check(CLI::IsMember({"c1", "c2"}));
  bench->add_option("--n", n, "number of hypothesis equations")->required();
  bench->add_option("--d", d, "AC term depth")->required();
  bench->add_option("--emit", emit, "write the generated problem to a file");
  bench->add_option("--budget", budget, "inference budget");

  auto* selftest =
      app.add_subcommand("selftest", "replay the built-in reference runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (prove->parsed())
      return cmd_prove(path, trace, budget, theory_override);
    if (bench->parsed())
      return cmd_bench(category, n, d, emit, budget);
    if (selftest->parsed())
      return cmd_selftest();
  } catch (const acx::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const acx::BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
