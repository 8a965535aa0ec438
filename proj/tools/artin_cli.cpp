#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "artin/coxeter_graph.hpp"
#include "artin/derivation.hpp"
#include "artin/garside.hpp"
#include "artin/mcg.hpp"
#include "artin/presentation.hpp"
#include "artin/suites.hpp"

using namespace artin;

namespace {

constexpr int kOk = 0, kUsage = 2, kMath = 3, kRefuted = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string render(const Presentation& p, const std::string& format) {
  if (format == "gap") return format_gap(p);
  if (format == "machine") return format_machine(p);
  return format_text(p) + "\n";
}

struct Config {
  int g = 1, r = 0, n = 0;
  bool pure = false, closed = false;
  std::string format = "text";
  std::string extra_edges;

  std::string graph, type, word, word2, subset;

  std::string suite, script, presentation, input, data_dir;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::size_t samples = 1000, depth = 12, cap = 20000;
};

CoxeterGraph graph_of(const Config& c) {
  if (!c.graph.empty()) return parse_graph(read_file(c.graph));
  return instantiate(parse_standard_type(c.type));
}

int cmd_present(const Config& c) {
  SurfaceParams p{c.g, c.r, c.n, c.pure ? Flavor::pure : Flavor::full, c.closed};
  std::vector<ExtraEdge> extra;
  if (!c.extra_edges.empty()) extra = parse_extra_edges(read_file(c.extra_edges));
  std::cout << render(presentation_of(p, extra), c.format);
  return kOk;
}

int cmd_solve(const Config& c) {
  ArtinGroup grp(graph_of(c));
  Word a = grp.parse(c.word);
  if (!c.word2.empty()) {
    std::cout << (grp.equal(a, grp.parse(c.word2)) ? "equal" : "distinct") << "\n";
    return kOk;
  }
  for (const auto& line : grp.describe(grp.normal_form(a))) std::cout << line << "\n";
  return kOk;
}

int cmd_delta(const Config& c) {
  CoxeterGraph g = graph_of(c);
  Word d;
  if (c.subset.empty()) {
    d = ArtinGroup(g).delta_word();
  } else {
    std::vector<std::string> names;
    std::stringstream ss(c.subset);
    for (std::string s; std::getline(ss, s, ',');)
      if (!s.empty()) names.push_back(s);
    d = delta_word(g, names);
  }
  std::cout << (d.empty() ? "1" : format_word(d, g.alphabet())) << "\n";
  return kOk;
}

int cmd_classify(const Config& c) {
  CoxeterGraph g = parse_graph(read_file(c.graph));
  if (!g.connected()) throw NotFiniteType("graph is disconnected");
  auto cl = classify_finite_type(g);
  if (!cl) throw NotFiniteType("graph is not of finite type");
  std::cout << to_string(cl->type) << "\n";
  return kOk;
}

int cmd_verify(const Config& c) {
  if (!c.suite.empty()) {
    SuiteOptions o;
    o.seed = c.seed;
    o.jobs = c.jobs;
    o.samples = c.samples;
    if (!c.data_dir.empty()) o.data_dir = c.data_dir;
    SuiteReport r = run_suite(c.suite, o);
    std::printf("suite %s\n", r.suite.c_str());
    std::printf("%-24s %-14s %9s  %s\n", "claim", "status", "seconds", "note");
    for (const auto& cl : r.claims)
      std::printf("%-24s %-14s %9.3f  %s\n", cl.id.c_str(), status_text(cl).c_str(), cl.seconds, cl.message.c_str());
    for (const auto& cl : r.claims) std::printf("claim %s %s\n", cl.id.c_str(), status_text(cl).c_str());
    return r.refuted() ? kRefuted : kOk;
  }
  Presentation p = parse_presentation(read_file(c.presentation));
  if (!c.script.empty()) {
    CheckResult r = check_derivation(p, parse_script(p, read_file(c.script)));
    std::printf("claim script %s\n", r.ok ? "verified" : "refuted");
    if (!r.ok) std::printf("%s\n", r.message.c_str());
    return r.ok ? kOk : kRefuted;
  }
  auto s = bounded_search(p, p.parse(c.word), c.depth, c.cap);
  if (!s) {
    std::printf("inconclusive\n");
    return kOk;
  }
  std::printf("trivial\n%s", format_script(p, *s).c_str());
  return kOk;
}

int cmd_export(const Config& c) {
  std::cout << render(parse_presentation(read_file(c.input)), c.format);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin groups, Garside normal forms and mapping class group presentations"};
  app.require_subcommand(1);
  Config c;
  const std::vector<std::string> formats{"text", "gap", "machine"};

  auto* present = app.add_subcommand("present", "Print the presentation of a surface family");
  present->add_option("--g", c.g, "Genus")->check(CLI::PositiveNumber);
  present->add_option("--r", c.r, "Extra boundary components")->check(CLI::NonNegativeNumber);
  present->add_option("--n", c.n, "Punctures")->check(CLI::NonNegativeNumber);
  present->add_flag("--pure", c.pure, "Pure mapping class group");
  present->add_flag("--closed", c.closed, "Closed surface");
  present->add_option("--format", c.format)->check(CLI::IsMember(formats));
  present->add_option("--extra-edges", c.extra_edges, "File of additional graph edges")->check(CLI::ExistingFile);

  auto* solve = app.add_subcommand("solve", "Garside normal form, or compare two words");
  auto* sg = solve->add_option("--graph", c.graph, "Graph file")->check(CLI::ExistingFile);
  auto* st = solve->add_option("--type", c.type, "Standard type such as A3");
  sg->excludes(st);
  solve->add_option("--word", c.word, "Word")->required();
  solve->add_option("--word2", c.word2, "Second word");

  auto* delta = app.add_subcommand("delta", "Fundamental element of a type or vertex subset");
  auto* dg = delta->add_option("--graph", c.graph, "Graph file")->check(CLI::ExistingFile);
  auto* dt = delta->add_option("--type", c.type, "Standard type");
  dg->excludes(dt);
  delta->add_option("--subset", c.subset, "Comma-separated vertex names")->needs(dg);

  auto* classify = app.add_subcommand("classify", "Finite type of a connected graph");
  classify->add_option("--graph", c.graph, "Graph file")->required()->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "Run a suite, check a script, or search for a derivation");
  auto* vs = verify->add_option("--suite", c.suite, "Suite id");
  auto* vsc = verify->add_option("--script", c.script, "Derivation script")->check(CLI::ExistingFile);
  auto* vp = verify->add_option("--presentation", c.presentation, "Presentation file")->check(CLI::ExistingFile);
  auto* vw = verify->add_option("--word", c.word, "Word to reduce to the identity");
  verify->add_option("--seed", c.seed, "Seed for randomized suites");
  verify->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--samples", c.samples, "Random samples per property")->check(CLI::PositiveNumber);
  verify->add_option("--data-dir", c.data_dir, "Fixture directory");
  verify->add_option("--depth", c.depth, "Search depth");
  verify->add_option("--cap", c.cap, "Search state cap");
  vs->excludes(vsc)->excludes(vp)->excludes(vw);
  vsc->needs(vp)->excludes(vw);
  vw->needs(vp);

  auto* exp = app.add_subcommand("export", "Convert a presentation file");
  exp->add_option("--input", c.input, "Presentation file")->required()->check(CLI::ExistingFile);
  exp->add_option("--format", c.format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*present) return cmd_present(c);
    if (*solve) {
      if (c.graph.empty() && c.type.empty()) throw InvalidArgument("solve needs --graph or --type");
      return cmd_solve(c);
    }
    if (*delta) {
      if (c.graph.empty() && c.type.empty()) throw InvalidArgument("delta needs --graph or --type");
      return cmd_delta(c);
    }
    if (*classify) return cmd_classify(c);
    if (*verify) {
      if (c.suite.empty() && c.presentation.empty())
        throw InvalidArgument("verify needs --suite, or --presentation with --script or --word");
      if (!c.presentation.empty() && c.script.empty() && c.word.empty())
        throw InvalidArgument("--presentation needs --script or --word");
      return cmd_verify(c);
    }
    if (*exp) return cmd_export(c);
  } catch (const NotFiniteType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMath;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMath;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
