#include "switchquest/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "switchquest/formulas.hpp"
#include "switchquest/generators.hpp"
#include "switchquest/reduce.hpp"
#include "switchquest/solver.hpp"
#include "switchquest/strategies.hpp"
#include "switchquest/verify.hpp"

namespace switchquest {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

std::string read_text(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  return read_all(f);
}

Graph load_graph(const std::string& path, std::istream& in) {
  Graph g = parse_graph(read_text(path, in));
  const auto problems = validate(g);
  if (!problems.empty()) {
    std::string msg = "invalid graph:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw GraphFormatError(msg);
  }
  return g;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

Json id_list(const Graph& g, std::span<const VertexIndex> vs) {
  Json a = Json::array();
  for (VertexIndex v : vs) a.push_back(g.id(v));
  return a;
}

struct GenFamily {
  std::vector<std::string> params;
  std::function<Graph(const std::vector<int>&, bool multigraph, std::uint64_t seed)> make;
};

const std::map<std::string, GenFamily>& gen_families() {
  static const std::map<std::string, GenFamily> families = {
      {"tree", {{"d", "n"}, [](auto& p, bool, auto) { return gen_tree(p[0], p[1]); }}},
      {"pyramid", {{"n"}, [](auto& p, bool, auto) { return gen_pyramid(p[0]); }}},
      {"gpy_complete",
       {{"d", "n"}, [](auto& p, bool, auto) { return gen_gpy_complete(p[0], p[1]); }}},
      {"gpy_grid", {{"d", "n"}, [](auto& p, bool, auto) { return gen_gpy_grid(p[0], p[1]); }}},
      {"hl", {{"k", "l"}, [](auto& p, bool, auto) { return gen_hl(p[0], p[1]); }}},
      {"algb_example",
       {{"k", "l"}, [](auto& p, bool, auto) { return gen_algb_example(p[0], p[1]); }}},
      {"tree_remark", {{"n"}, [](auto& p, bool, auto) { return gen_tree_remark(p[0]); }}},
      {"tree_of_h", {{"k", "l"}, [](auto& p, bool, auto) { return gen_tree_of_h(p[0], p[1]); }}},
      {"random_dag",
       {{"n_vertices", "max_outdeg", "min_outdeg"},
        [](auto& p, bool multi, auto seed) { return random_dag(p[0], p[1], p[2], multi, seed); }}},
      {"random_cyclic",
       {{"n_vertices", "max_outdeg"},
        [](auto& p, bool, auto seed) { return random_cyclic_multigraph(p[0], p[1], seed); }}},
  };
  return families;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Switch-search game toolkit: generators, reductions, exact solver, strategy "
               "matches and verification suites."};
  app.name("switchquest");
  app.require_subcommand(1);

  std::string input, output;
  int k = 1;
  std::string goal_text = "path";
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", input, "graph JSON file (default: stdin)");
  };
  auto add_game = [&](CLI::App* sub) {
    sub->add_option("--k", k, "questions per round")->required()->check(CLI::PositiveNumber);
    sub->add_option("--goal", goal_text, "sink | path")->required();
  };

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph family");
  std::string family;
  std::vector<int> gen_params;
  bool gen_multi = false;
  std::uint64_t gen_seed = 1;
  gen->add_option("family", family, "tree|pyramid|gpy_complete|gpy_grid|hl|algb_example|"
                                    "tree_remark|tree_of_h|random_dag|random_cyclic")
      ->required();
  gen->add_option("params", gen_params, "integer parameters of the family");
  gen->add_flag("--multigraph", gen_multi, "random_dag: allow parallel edges");
  gen->add_option("--seed", gen_seed, "seed of the random families");
  gen->add_option("-o,--output", output, "output file (default: stdout)");

  // reduce
  auto* red = app.add_subcommand("reduce", "merge out-degree-1 vertices (G' or G'')");
  std::string mode = "simple";
  add_input(red);
  red->add_option("--mode", mode, "simple | multi")
      ->check(CLI::IsMember({"simple", "multi"}));

  auto* lp = app.add_subcommand("lp", "longest path from the source");
  add_input(lp);
  auto* glp = app.add_subcommand("glp", "longest generalized path from the source");
  int glp_cap = kDefaultGeneralizedPathCap;
  add_input(glp);
  glp->add_option("--cap", glp_cap, "vertex cap of the exhaustive search");

  // solve
  auto* solve = app.add_subcommand("solve", "exact si_k / pa_k");
  SolverConfig cfg;
  int curve = 0;
  add_input(solve);
  add_game(solve);
  solve->add_option("--max-askable", cfg.max_askable, "refuse graphs above this many askable vertices");
  solve->add_flag("--symmetry", cfg.symmetry_reduction, "use the pyramid mirror symmetry");
  solve->add_flag("--parallel", cfg.parallel, "split the root question sets over threads");
  solve->add_option("--threads", cfg.threads, "worker threads for --parallel");
  solve->add_option("--curve", curve, "also report values for k = 1..N");

  // match
  auto* match = app.add_subcommand("match", "play one questioner against one adversary");
  std::string qname, aname, assignment_path;
  add_input(match);
  add_game(match);
  match->add_option("--questioner", qname, "questioner registry name")->required();
  auto* adv_opt = match->add_option("--adversary", aname, "adversary registry name");
  match->add_option("--assignment", assignment_path, "answer from a fixed switch assignment")
      ->excludes(adv_opt);

  // eval
  auto* eval = app.add_subcommand("eval", "worst case of a questioner or best response to an adversary");
  bool worst = false, best = false, sampling = false;
  std::string eval_q, eval_a;
  std::uint64_t eval_seed = 1;
  int samples = 2000;
  add_input(eval);
  add_game(eval);
  auto* wflag = eval->add_flag("--worst-case", worst, "maximize over switch assignments");
  auto* bflag = eval->add_flag("--best-response", best, "minimize over questioners");
  wflag->excludes(bflag);
  eval->add_option("--questioner", eval_q, "questioner for --worst-case");
  eval->add_option("--adversary", eval_a, "adversary for --best-response");
  eval->add_flag("--allow-sampling", sampling, "sample assignments on large graphs");
  eval->add_option("--samples", samples, "sample count");
  eval->add_option("--seed", eval_seed, "sampling seed");

  // formula
  auto* formula = app.add_subcommand("formula", "evaluate a closed-form value or bound");
  std::string formula_name;
  std::vector<int> formula_args;
  formula->add_option("name", formula_name, "formula name")->required();
  formula->add_option("params", formula_args, "integer arguments");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, budget_text = "small";
  std::uint64_t seed = kDefaultSeed;
  verify->add_option("suite", suite, "suite name or 'all'")->required();
  verify->add_option("--seed", seed, "instance seed")->envname("SWITCHQUEST_SEED");
  verify->add_option("--budget", budget_text, "small | full")
      ->envname("SWITCHQUEST_BUDGET")
      ->check(CLI::IsMember({"small", "full"}));

  // export
  auto* exp = app.add_subcommand("export", "re-emit a graph as canonical JSON or DOT");
  bool dot = false;
  add_input(exp);
  exp->add_flag("--dot", dot, "Graphviz DOT instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const auto& families = gen_families();
      auto it = families.find(family);
      if (it == families.end()) throw UsageError("unknown family '" + family + "'");
      if (gen_params.size() != it->second.params.size()) {
        std::string names;
        for (const auto& p : it->second.params) names += " " + p;
        throw UsageError("gen " + family + " expects parameters:" + names);
      }
      const Graph g = it->second.make(gen_params, gen_multi, gen_seed);
      write_output(output, dump_json(graph_to_json(g)), out);
      err << g.name() << ": " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
      return 0;
    }
    if (red->parsed()) {
      const Graph g = load_graph(input, in);
      const ReductionResult r = mode == "simple" ? reduce_simple(g) : reduce_multi(g);
      out << dump_json(reduction_to_json(g, r));
      err << g.vertex_count() << " -> " << r.graph.vertex_count() << " vertices\n";
      return 0;
    }
    if (lp->parsed()) {
      const Graph g = load_graph(input, in);
      const PathEdges p = longest_path(g);
      Json doc;
      doc["value"] = static_cast<int>(p.edges.size());
      doc["path"] = id_list(g, p.vertices);
      out << dump_json(doc);
      return 0;
    }
    if (glp->parsed()) {
      const Graph g = load_graph(input, in);
      const GeneralizedPath p = longest_generalized_path(g, glp_cap);
      Json doc;
      doc["value"] = p.length();
      doc["path"] = id_list(g, p.vertices);
      doc["closed"] = p.closed;
      out << dump_json(doc);
      return 0;
    }
    if (solve->parsed()) {
      const Graph g = load_graph(input, in);
      const Goal goal = parse_goal(goal_text);
      const SolveResult r = solve_exact(g, k, goal, cfg);
      Json doc = solve_to_json(g, r);
      if (curve > 0) {
        Json c = Json::array();
        for (auto [kk, v] : solve_curve(g, curve, goal, cfg)) c.push_back({{"k", kk}, {"value", v}});
        doc["curve"] = std::move(c);
      }
      out << dump_json(doc);
      err << to_string(goal) << "_" << k << "(" << g.name() << ") = " << r.value << " ("
          << r.stats.states << " states, " << r.stats.ms << " ms)\n";
      return 0;
    }
    if (match->parsed()) {
      const Graph g = load_graph(input, in);
      const Goal goal = parse_goal(goal_text);
      auto q = make_questioner(qname);
      std::unique_ptr<Adversary> a;
      if (!assignment_path.empty()) {
        a = std::make_unique<AssignmentAdversary>(
            assignment_from_json(g, Json::parse(read_text(assignment_path, in))));
      } else if (!aname.empty()) {
        a = make_adversary(aname);
      } else {
        throw UsageError("match needs --adversary or --assignment");
      }
      const MatchResult m = run_match(g, k, *q, *a, goal);
      Json doc;
      doc["questioner"] = q->name();
      doc["adversary"] = a->name();
      const Json body = match_to_json(g, m);
      for (auto& [key, val] : body.items()) doc[key] = val;
      out << dump_json(doc);
      err << q->name() << " vs " << a->name() << ": " << m.rounds << " rounds\n";
      return 0;
    }
    if (eval->parsed()) {
      const Graph g = load_graph(input, in);
      const Goal goal = parse_goal(goal_text);
      Json doc;
      if (worst) {
        if (eval_q.empty()) throw UsageError("--worst-case needs --questioner");
        auto q = make_questioner(eval_q);
        WorstCaseOptions opts;
        opts.allow_sampling = sampling;
        opts.samples = samples;
        opts.seed = eval_seed;
        const WorstCaseResult r = worst_case_rounds(g, k, *q, goal, opts);
        doc["mode"] = "worst_case";
        doc["questioner"] = q->name();
        doc["rounds"] = r.rounds;
        doc["exhaustive"] = r.exhaustive;
        doc["evaluated"] = r.evaluated;
      } else if (best) {
        if (eval_a.empty()) throw UsageError("--best-response needs --adversary");
        auto a = make_adversary(eval_a);
        doc["mode"] = "best_response";
        doc["adversary"] = a->name();
        doc["rounds"] = best_response_rounds(g, k, *a, goal);
      } else {
        throw UsageError("eval needs --worst-case or --best-response");
      }
      out << dump_json(doc);
      return 0;
    }
    if (formula->parsed()) {
      out << dump_json(evaluate_formula(formula_name, formula_args));
      return 0;
    }
    if (verify->parsed()) {
      const Budget budget = parse_budget(budget_text);
      std::vector<std::string> suites;
      if (suite == "all") {
        suites = suite_names();
      } else {
        const auto names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end())
          throw UsageError("unknown suite '" + suite + "'");
        suites = {suite};
      }
      bool all_passed = true;
      Json reports = Json::array();
      for (const auto& s : suites) {
        const SuiteReport r = run_suite(s, seed, budget);
        std::size_t failed = 0;
        for (const auto& c : r.checks) {
          if (c.report_only) {
            err << "  [report] " << c.name << ": expected " << c.expected << ", got " << c.actual
                << "\n";
          } else if (!c.pass) {
            ++failed;
            err << "  [FAIL] " << c.name << ": expected " << c.expected << ", got " << c.actual
                << "\n";
          }
        }
        err << s << ": " << r.checks.size() << " checks, " << failed << " failed"
            << (r.complete ? "" : ", INCOMPLETE (budget exceeded)") << ", " << r.ms << " ms\n";
        all_passed = all_passed && r.passed();
        reports.push_back(report_to_json(r));
      }
      if (suites.size() == 1) {
        out << dump_json(reports[0]);
      } else {
        Json doc;
        doc["passed"] = all_passed;
        doc["suites"] = std::move(reports);
        out << dump_json(doc);
      }
      return all_passed ? 0 : 1;
    }
    if (exp->parsed()) {
      const Graph g = load_graph(input, in);
      out << (dot ? graph_to_dot(g) : dump_json(graph_to_json(g)));
      return 0;
    }
  } catch (const ProtocolError& e) {
    err << "protocol violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace switchquest
