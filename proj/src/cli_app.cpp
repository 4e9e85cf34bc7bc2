#include "knots/cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "knots/braid.hpp"
#include "knots/diagram.hpp"
#include "knots/errors.hpp"
#include "knots/invariants.hpp"
#include "knots/json_io.hpp"
#include "knots/moves.hpp"
#include "knots/plan.hpp"
#include "knots/search.hpp"
#include "knots/seifert.hpp"

namespace knots {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000000;
  std::optional<int> unknotting;
  std::string policy = "random";
  std::string input_file;
};

struct Input {
  LinkDiagram diagram;
  std::optional<BraidWord> braid;
};

std::string slurp(const Options& opt, std::istream& in) {
  if (!opt.input_file.empty()) {
    std::ifstream f(opt.input_file);
    if (!f) fail(ErrorKind::MalformedCode, "cannot open input file '" + opt.input_file + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// PD input starts with '['; anything else is treated as a braid word.
Input read_input(const Options& opt, std::istream& in) {
  std::string text = slurp(opt, in);
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) fail(ErrorKind::MalformedCode, "empty input");
  Input r;
  if (text[i] == '[') {
    r.diagram = parse_pd(text);
  } else {
    r.braid = parse_braid_word(text);
    r.diagram = braid_closure(*r.braid);
  }
  return r;
}

const char* policy_name(CascadePolicy p) {
  switch (p) {
    case CascadePolicy::random: return "random";
    case CascadePolicy::planned: return "planned";
    case CascadePolicy::greedy_split: return "greedy-split";
  }
  return "random";
}

CascadePolicy parse_policy(const std::string& s) {
  if (s == "random") return CascadePolicy::random;
  if (s == "planned") return CascadePolicy::planned;
  if (s == "greedy-split") return CascadePolicy::greedy_split;
  fail(ErrorKind::MalformedCode, "unknown policy '" + s + "'");
}

void emit(const Options& opt, std::ostream& out, const json& record, const std::string& text) {
  if (opt.format == "json") {
    out << record.dump() << "\n";
  } else {
    out << text;
  }
}

int cmd_stats(const Options& opt, std::istream& in, std::ostream& out) {
  Input input = read_input(opt, in);
  DiagramStats s = diagram_stats(input.diagram);
  std::ostringstream text;
  text << "crossings: " << s.c << "\ncomponents: " << s.mu << "\nwrithe: " << s.writhe
       << "\npositive: " << (s.positive ? "yes" : "no") << "\nconnected: " << (s.connected ? "yes" : "no") << "\n";
  emit(opt, out, to_json(s), text.str());
  return 0;
}

int cmd_seifert(const Options& opt, std::istream& in, std::ostream& out) {
  Input input = read_input(opt, in);
  SeifertCircles circles = seifert_circles(input.diagram);
  SeifertGraph graph = seifert_graph(input.diagram);
  GenusReport genus = seifert_genus(input.diagram);

  json record{{"circles", circles.count}, {"genus", to_json(genus)}, {"graph_vertices", graph.vertices},
              {"graph_edges", json::array()}};
  for (const auto& e : graph.edges)
    record["graph_edges"].push_back(json{{"u", e.u}, {"v", e.v}, {"crossing", e.crossing}, {"sign", e.sign}});

  std::ostringstream text;
  text << "seifert circles: " << circles.count << "\ngenus: " << genus.genus << " (euler " << genus.euler << ")\n"
       << "seifert graph: " << graph.vertices << " vertices, " << graph.edges.size() << " edges\n";
  if (input.braid) {
    SeifertMatrix m = seifert_matrix(*input.braid);
    record["seifert_matrix"] = to_json(m);
    text << "seifert matrix (" << m.dim << "x" << m.dim << "):\n";
    for (int i = 0; i < m.dim; ++i) {
      text << "  ";
      for (int j = 0; j < m.dim; ++j) text << m.at(i, j) << (j + 1 < m.dim ? " " : "");
      text << "\n";
    }
  }
  emit(opt, out, record, text.str());
  return 0;
}

int cmd_invariants(const Options& opt, std::istream& in, std::ostream& out) {
  Input input = read_input(opt, in);
  if (!input.braid) fail(ErrorKind::BraidInputRequired, "invariants require a braid word input");
  SeifertMatrix m = seifert_matrix(*input.braid);
  LaurentPoly alex = normalize_laurent(alexander_polynomial(m));
  int sigma = signature(m);
  json record{{"alexander", to_json(alex)}, {"signature", sigma}};
  std::ostringstream text;
  text << "alexander: " << alex.to_string() << "\nsignature: " << sigma << "\n";
  emit(opt, out, record, text.str());
  return 0;
}

int cmd_bounds(const Options& opt, std::istream& in, std::ostream& out) {
  Input input = read_input(opt, in);
  ReconnectionBounds b = reconnection_bounds(input.diagram, input.braid, opt.unknotting);
  std::ostringstream text;
  text << "lower: " << b.lower << "\nupper: " << b.upper << "\n";
  if (b.exact) text << "exact: " << *b.exact << "\n";
  for (const auto& c : b.certificates) text << "  certificate " << c.kind << ": " << c.value << "\n";
  emit(opt, out, to_json(b), text.str());
  return 0;
}

int cmd_plan(const Options& opt, std::istream& in, std::ostream& out) {
  Input input = read_input(opt, in);
  ReconnectionPlan p = plan_unknotting(input.diagram);
  CascadeTrace trace = apply_plan(input.diagram, p);
  UnknotVerdict verdict = verify_unknot(trace.final);
  json record{{"plan", to_json(p)},
              {"trace", to_json(trace)},
              {"verdict", verdict == UnknotVerdict::confirmed ? "confirmed" : "inconclusive"}};
  std::ostringstream text;
  text << "keep:";
  for (int k : p.keep) text << " " << k;
  text << "\nsmooth:";
  for (int k : p.smooth_order) text << " " << k;
  text << "\ncost: " << p.claimed_cost << "\nfinal: " << serialize_pd(trace.final)
       << "\nunknot: " << (verdict == UnknotVerdict::confirmed ? "confirmed" : "inconclusive") << "\n";
  emit(opt, out, record, text.str());
  return 0;
}

int cmd_cascade(const Options& opt, std::istream& in, std::ostream& out) {
  Input input = read_input(opt, in);
  CascadePolicy policy = parse_policy(opt.policy);
  int max_steps = static_cast<int>(std::min<std::uint64_t>(opt.budget, 1u << 30));
  CascadeTrace trace = cascade(input.diagram, policy, opt.seed, max_steps);
  json record{{"policy", policy_name(policy)}, {"seed", opt.seed}, {"trace", to_json(trace)}};
  std::ostringstream text;
  text << "policy: " << policy_name(policy) << "\nreconnections: " << trace.total_reconnections << "\n";
  for (const auto& s : trace.steps) {
    text << "  " << (s.kind == MoveKind::smooth ? "smooth" : s.kind == MoveKind::merge ? "merge" : "switch") << " @"
         << s.site << " -> c=" << s.crossings_after << " mu=" << s.components_after << " w=" << s.writhe_after << "\n";
  }
  if (trace.budget_exceeded) text << "step budget exceeded\n";
  emit(opt, out, record, text.str());
  return 0;
}

int cmd_search(const Options& opt, std::istream& in, std::ostream& out) {
  Input input = read_input(opt, in);
  SearchResult r = min_reconnections_search(input.diagram, opt.budget);
  json record{{"minimum", r.min_moves}, {"states_expanded", r.states_expanded}, {"witness", to_json(r.witness)}};
  std::ostringstream text;
  text << "minimum reconnections: " << r.min_moves << "\nstates expanded: " << r.states_expanded << "\n";
  for (const auto& s : r.witness.steps) {
    text << "  " << (s.kind == MoveKind::smooth ? "smooth" : "merge") << " @" << s.site << " -> c=" << s.crossings_after
         << " mu=" << s.components_after << "\n";
  }
  emit(opt, out, record, text.str());
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"knot diagram invariants and reconnection analysis"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool with_input) {
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", opt.seed, "random seed (default 0)");
    sub->add_option("--budget", opt.budget, "step/state budget");
    sub->add_option("--unknotting", opt.unknotting, "known unknotting number");
    sub->add_option("--policy", opt.policy, "cascade policy")->check(CLI::IsMember({"random", "planned", "greedy-split"}));
    if (with_input) sub->add_option("input", opt.input_file, "input file (defaults to stdin)");
  };

  for (const char* name : {"stats", "seifert", "invariants", "bounds", "plan", "cascade", "search"}) {
    add_common(app.add_subcommand(name), true);
  }
  CLI::App* gen = app.add_subcommand("gen", "generate a braid word");
  std::string family;
  int gen_p = 0, gen_q = 0;
  gen->add_option("family", family)->required()->check(CLI::IsMember({"torus"}));
  gen->add_option("p", gen_p)->required();
  gen->add_option("q", gen_q)->required();
  add_common(gen, false);

  std::vector<std::string> argv = args;
  try {
    std::vector<const char*> cargs;
    cargs.push_back("reconnum");
    for (const auto& a : argv) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) {
      out << serialize_braid_word(torus_braid(gen_p, gen_q)) << "\n";
      return 0;
    }
    if (app.get_subcommand("stats")->parsed()) return cmd_stats(opt, in, out);
    if (app.get_subcommand("seifert")->parsed()) return cmd_seifert(opt, in, out);
    if (app.get_subcommand("invariants")->parsed()) return cmd_invariants(opt, in, out);
    if (app.get_subcommand("bounds")->parsed()) return cmd_bounds(opt, in, out);
    if (app.get_subcommand("plan")->parsed()) return cmd_plan(opt, in, out);
    if (app.get_subcommand("cascade")->parsed()) return cmd_cascade(opt, in, out);
    if (app.get_subcommand("search")->parsed()) return cmd_search(opt, in, out);
    err << "usage error: no subcommand\n";
    return 2;
  } catch (const Error& e) {
    if (opt.format == "json") {
      out << json{{"error", {{"kind", to_string(e.kind())}, {"message", e.detail()}}}}.dump() << "\n";
    } else {
      err << "error: " << e.what() << "\n";
    }
    return 1;
  }
}

}  // namespace knots
