#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sglab/catalog.hpp"
#include "sglab/error.hpp"
#include "sglab/report.hpp"
#include "sglab/spec_io.hpp"

using namespace sglab;
using nlohmann::json;

namespace {

struct RunConfig {
  std::size_t order_limit = kDefaultOrderLimit;
  std::size_t node_cap = kDefaultNodeCap;
  std::size_t triple_scan_cap = kDefaultTripleScanCap;
  std::size_t jobs = 1;
  std::optional<std::uint64_t> seed;
  std::string json_path;
  bool timing = false;
};

struct GroupSource {
  std::string catalog;
  std::string spec;
  std::string gens;
  std::size_t degree = 0;
  std::string name = "G";
};

void add_source(CLI::App* cmd, GroupSource& src) {
  cmd->add_option("--catalog", src.catalog, "Catalog group, e.g. S4, D16, Q8, C8xC2, M4(2), C2^3");
  cmd->add_option("--spec", src.spec, "Group spec: 'name=..; degree=..; gens=..' or JSON");
  cmd->add_option("--gens", src.gens, "Generators in cycle notation, e.g. \"(1 2 3), (1 2)\"");
  cmd->add_option("--degree", src.degree, "Degree for --gens (default: largest point)");
  cmd->add_option("--name", src.name, "Name for --gens");
}

GroupSpec resolve(const GroupSource& src) {
  int given = !src.catalog.empty() + !src.spec.empty() + !src.gens.empty();
  if (given != 1) throw Error(ErrorKind::MalformedSpec, "give exactly one of --catalog, --spec, --gens");
  if (!src.catalog.empty()) return catalog::by_name(src.catalog);
  if (!src.spec.empty()) return parse_group_spec(src.spec);
  GroupSpec spec;
  spec.name = src.name;
  spec.generators = parse_generator_list(src.gens);
  std::size_t max_point = 0;
  for (const CycleWord& w : spec.generators)
    for (const Cycle& c : w)
      for (std::size_t p : c) max_point = std::max(max_point, p);
  spec.degree = src.degree ? src.degree : max_point;
  return spec;
}

// Node of the subgroup generated by a cycle-notation list; empty text is the
// trivial subgroup, `whole` when the option was not given.
NodeIndex subgroup_node(const SubgroupLattice& l, const std::string& text, bool given, NodeIndex whole) {
  if (!given) return whole;
  const FiniteGroup& g = l.group();
  std::vector<ElementIndex> seed;
  for (const CycleWord& w : parse_generator_list(text)) {
    std::int64_t i = g.index_of(Permutation::from_cycles(g.degree(), w));
    if (i < 0) throw Error(ErrorKind::MalformedSpec, "generator " + Permutation::from_cycles(g.degree(), w).to_string() + " is not in the group");
    seed.push_back(static_cast<ElementIndex>(i));
  }
  auto node = l.index_of(subgroup_closure(g, seed));
  if (!node) throw Error(ErrorKind::InternalInconsistency, "subgroup missing from the lattice");
  return *node;
}

void emit(const RunConfig& cfg, const std::string& command, json body) {
  if (cfg.json_path.empty()) return;
  json out = {{"schema", report::kSchema}, {"command", command}};
  out.update(body);
  std::ofstream f(cfg.json_path);
  if (!f) throw Error(ErrorKind::MalformedSpec, "cannot write " + cfg.json_path);
  f << out.dump(2) << '\n';
}

std::string yes(bool b) { return b ? "yes" : "no"; }

TableOptions table_options(const RunConfig& cfg) { return TableOptions{std::nullopt, cfg.seed}; }

int cmd_group(const RunConfig& cfg, const GroupSource& src) {
  FiniteGroup g = FiniteGroup::build(resolve(src), cfg.order_limit);
  std::cout << g.name() << ": order " << g.order() << ", exponent " << g.exponent() << ", " << g.classes().size()
            << " classes\n";
  for (const ConjugacyClass& c : g.classes())
    std::cout << "  size " << c.size() << "  order " << g.element_order(c.representative) << "  "
              << g.element(c.representative).to_string() << '\n';
  emit(cfg, "group", {{"group", report::group(g)}});
  return 0;
}

int cmd_lattice(const RunConfig& cfg, const GroupSource& src, bool intervals) {
  FiniteGroup g = FiniteGroup::build(resolve(src), cfg.order_limit);
  SubgroupLattice l = SubgroupLattice::enumerate(g, cfg.node_cap);
  std::cout << g.name() << ": " << l.size() << " subgroups\n";
  for (NodeIndex i = 0; i < l.size(); ++i) {
    std::cout << "  [" << i << "] order " << l.node(i).order() << "  <";
    const auto& gens = l.node(i).generators();
    for (std::size_t k = 0; k < gens.size(); ++k) std::cout << (k ? ", " : "") << g.element(gens[k]).to_string();
    std::cout << ">" << (is_normal(g, l.node(i)) ? "  normal" : "") << '\n';
  }
  for (ChainFlavor f : {ChainFlavor::Distributive, ChainFlavor::BottomBoolean})
    for (ChainStart s : {ChainStart::Trivial, ChainStart::CoreFree}) {
      ChainWitness w = min_chain(l, f, s, cfg.triple_scan_cap);
      std::cout << "  shortest " << to_string(f) << " chain from " << to_string(s) << ": length " << w.length() << '\n';
    }
  emit(cfg, "lattice", {{"group", report::group(g)}, {"lattice", report::lattice(l, cfg.triple_scan_cap, intervals)}});
  return 0;
}

int cmd_interval(const RunConfig& cfg, const GroupSource& src, const std::string& h_text, bool h_given,
                 const std::string& k_text, bool k_given) {
  FiniteGroup g = FiniteGroup::build(resolve(src), cfg.order_limit);
  SubgroupLattice l = SubgroupLattice::enumerate(g, cfg.node_cap);
  NodeIndex h = subgroup_node(l, h_text, h_given, l.bottom());
  NodeIndex k = subgroup_node(l, k_text, k_given, l.top());
  TableCache cache(l, table_options(cfg));
  json j = report::interval(cache, h, k, cfg.triple_scan_cap);
  std::cout << "interval [" << h << ", " << k << "]: |H| = " << l.node(h).order() << ", |K| = " << l.node(k).order()
            << ", " << j["size"].get<std::size_t>() << " subgroups\n";
  if (j["degenerate"].get<bool>()) {
    std::cout << "  degenerate (H = K)\n";
  } else {
    const json& c = j["classification"];
    std::cout << "  distributive " << yes(c["distributive"]) << ", Boolean " << yes(c["boolean"]);
    if (c.contains("rank")) std::cout << " (rank " << c["rank"].get<std::size_t>() << ")";
    std::cout << ", top Boolean " << yes(c["top_boolean"]) << ", bottom Boolean " << yes(c["bottom_boolean"]) << '\n';
    std::cout << "  H-cyclic " << yes(j["h_cyclic"]);
    if (j.contains("ore_brute")) std::cout << ", witness " << j["ore_brute"]["cycles"].get<std::string>();
    std::cout << '\n';
    if (j.contains("ore_top_reduction"))
      std::cout << "  top-reduction witness " << j["ore_top_reduction"]["cycles"].get<std::string>() << '\n';
  }
  std::cout << "  linearly primitive " << yes(j["linearly_primitive"]);
  if (j.contains("linear_witness"))
    std::cout << ", row " << j["linear_witness"]["row"].get<std::size_t>() << ", dim V^H = "
              << j["linear_witness"]["fixed_dim"].get<std::size_t>();
  std::cout << '\n';
  emit(cfg, "interval", {{"group", report::group(g)}, {"interval", j}});
  return 0;
}

int cmd_chartable(const RunConfig& cfg, const GroupSource& src) {
  FiniteGroup g = FiniteGroup::build(resolve(src), cfg.order_limit);
  CharacterTable t = character_table(g, table_options(cfg));
  std::cout << g.name() << ": " << t.size() << " irreducibles over GF(" << t.prime << "), omega = " << t.omega << '\n';
  std::cout << "  class sizes:";
  for (std::size_t s : t.class_sizes) std::cout << ' ' << s;
  std::cout << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::cout << "  chi" << i << " (deg " << t.degrees[i] << "):";
    for (Residue v : t.values[i]) std::cout << ' ' << v;
    std::cout << '\n';
  }
  emit(cfg, "chartable", {{"group", report::group(g)}, {"table", report::table(t, g)}});
  return 0;
}

int cmd_ore(const RunConfig& cfg, const GroupSource& src) {
  FiniteGroup g = FiniteGroup::build(resolve(src), cfg.order_limit);
  SubgroupLattice l = SubgroupLattice::enumerate(g, cfg.node_cap);
  OreReport r = verify_ore(l, cfg.triple_scan_cap);
  bool distributive = is_distributive(whole_lattice(l), cfg.triple_scan_cap);
  std::cout << g.name() << ": cyclic " << yes(g.is_cyclic()) << ", distributive lattice " << yes(distributive) << '\n';
  std::cout << "  " << r.intervals.size() << " intervals, " << r.top_boolean_count << " top Boolean, " << r.hcyclic_count
            << " H-cyclic (" << r.hcyclic_not_top_boolean << " of them not top Boolean)\n";
  emit(cfg, "ore",
       {{"group", report::group(g)}, {"cyclic", g.is_cyclic()}, {"distributive", distributive}, {"ore", report::ore(l, r)}});
  return g.is_cyclic() == distributive ? 0 : 1;
}

int cmd_linprim(const RunConfig& cfg, const GroupSource& src) {
  FiniteGroup g = FiniteGroup::build(resolve(src), cfg.order_limit);
  CharacterTable t = character_table(g, table_options(cfg));
  auto row = group_linearly_primitive(g, t);
  FaithfulComponents f = min_faithful_components(g, t);
  std::cout << g.name() << ": linearly primitive " << yes(row.has_value());
  if (row) std::cout << " (faithful row " << *row << ", degree " << t.degrees[*row] << ")";
  std::cout << "\n  minimal faithful components " << f.m << ", rows";
  for (std::size_t r : f.rows) std::cout << ' ' << r;
  std::cout << '\n';
  json j = {{"group", report::group(g)}, {"linearly_primitive", row.has_value()}, {"faithful_components", report::faithful(f)}};
  if (row) j["faithful_row"] = *row;
  emit(cfg, "linprim", j);
  return 0;
}

int cmd_verify(const RunConfig& cfg, const GroupSource& src, const std::string& which) {
  FiniteGroup g = FiniteGroup::build(resolve(src), cfg.order_limit);
  SubgroupLattice l = SubgroupLattice::enumerate(g, cfg.node_cap);
  TableCache cache(l, table_options(cfg));
  const bool all = which == "all";
  json j = {{"group", report::group(g)}, {"which", which}};
  std::cout << g.name() << ": " << l.size() << " subgroups\n";
  if (all || which == "ore") {
    OreReport r = verify_ore(l, cfg.triple_scan_cap);
    bool distributive = is_distributive(whole_lattice(l), cfg.triple_scan_cap);
    if (distributive != g.is_cyclic())
      throw Error(ErrorKind::TheoremViolation, "cyclic and distributive lattice disagree for " + g.name());
    std::cout << "  ore: " << r.top_boolean_count << " top-Boolean intervals, all witnessed\n";
    j["ore"] = report::ore(l, r);
  }
  if (all || which == "dualore") {
    DualOreReport r = verify_dual_ore(cache, cfg.triple_scan_cap);
    std::cout << "  dualore: " << r.bottom_boolean << " bottom-Boolean intervals, all linearly primitive\n";
    j["dual_ore"] = report::dual_ore(r);
  }
  if (all || which == "lemmas") {
    BottomLiftReport b = verify_bottom_lift(cache);
    InductionReport c = induction_stabilizer_suite(cache);
    LemmaReport lr = lemma_suite(cache, cfg.triple_scan_cap);
    bool index_ok = true;
    for (const Subgroup& h : l.nodes()) index_ok = index_ok && index_identity_check(cache.root(), h);
    if (!index_ok) throw Error(ErrorKind::TheoremViolation, "index identity fails for " + g.name());
    std::cout << "  lemmas: " << lr.samples << " samples, " << c.hypotheses << " induction hypotheses, " << b.nonvacuous
              << " bottom-interval lifts\n";
    j["bottom_lift"] = report::bottom_lift(b);
    j["induction_stabilizer"] = report::induction(c);
    j["lemmas"] = report::lemmas(lr);
    j["index_identity"] = index_ok;
  }
  if (all || which == "bounds") {
    ChainBoundReport r = chain_bound_check(l, cache.root(), cfg.triple_scan_cap);
    std::cout << "  bounds: " << r.components.m << " <= " << r.bottom_boolean.length()
              << " <= " << r.distributive.length() << " (core-free start " << r.core_free.length() << ")\n";
    j["chain_bounds"] = report::chain_bounds(r);
  }
  std::cout << "  pass\n";
  j["pass"] = true;
  emit(cfg, "verify", j);
  return 0;
}

int cmd_survey(const RunConfig& cfg, std::size_t bound, const std::vector<std::string>& families) {
  SurveyOptions opt{cfg.order_limit, cfg.node_cap, cfg.triple_scan_cap, cfg.jobs, cfg.seed};
  SurveyReport r = primitivity_survey(bound, families, opt);
  for (const SurveyRecord& rec : r.records) {
    std::cout << "  " << rec.name << " (" << rec.order << "): ";
    if (rec.skipped) {
      std::cout << "skipped: " << *rec.skipped << '\n';
      continue;
    }
    std::cout << "primitive " << yes(rec.primitive_row.has_value()) << ", core-free bottom Boolean "
              << yes(rec.core_free_node.has_value()) << ", verdict " << (rec.verdict ? "true" : "false") << '\n';
  }
  std::cout << r.surveyed << " surveyed, " << r.skipped << " skipped, " << r.verdict_true << " verdicts true\n";
  std::cout << "M4(2) / C8xC2: lattices isomorphic " << yes(r.lattice_pair.lattices_isomorphic) << ", primitive "
            << yes(r.lattice_pair.first_primitive) << " / " << yes(r.lattice_pair.second_primitive) << '\n';
  emit(cfg, "survey", {{"survey", report::survey(r, cfg.timing)}});
  return r.all_true ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup lattices, Ore witnesses and linear primitivity of finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::uint64_t seed = 0;
  app.add_option("--json", cfg.json_path, "Write a JSON report to this path");
  app.add_option("--limit", cfg.order_limit, "Group order limit")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for character-table splitting (default: group hash)");
  app.add_option("--node-cap", cfg.node_cap, "Subgroup lattice node cap")->check(CLI::PositiveNumber);
  app.add_option("--triple-cap", cfg.triple_scan_cap, "Largest interval checked by triple scan")->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "Worker threads for the survey")->check(CLI::PositiveNumber);
  app.add_flag("--timing", cfg.timing, "Include timings in survey JSON");

  GroupSource src;
  auto* group = app.add_subcommand("group", "Order, exponent and conjugacy classes");
  add_source(group, src);

  bool intervals = false;
  auto* lattice = app.add_subcommand("lattice", "Subgroup lattice with covers and shortest chains");
  add_source(lattice, src);
  lattice->add_flag("--intervals", intervals, "Classify every interval in the JSON report");

  std::string h_text, k_text;
  auto* interval = app.add_subcommand("interval", "Classify [H, K] and give Ore and linear witnesses");
  add_source(interval, src);
  auto* h_opt = interval->add_option("--sub-h", h_text, "Generators of H (default: trivial)");
  auto* k_opt = interval->add_option("--sub-k", k_text, "Generators of K (default: whole group)");

  auto* chartable = app.add_subcommand("chartable", "Character table over GF(p)");
  add_source(chartable, src);

  auto* ore = app.add_subcommand("ore", "Ore witnesses for every top-Boolean interval");
  add_source(ore, src);

  auto* linprim = app.add_subcommand("linprim", "Faithful irreducibles and minimal faithful components");
  add_source(linprim, src);

  std::string which = "all";
  auto* verify = app.add_subcommand("verify", "Run verification suites on the whole lattice");
  add_source(verify, src);
  verify->add_option("--which", which, "ore | dualore | lemmas | bounds | all")
      ->check(CLI::IsMember({"ore", "dualore", "lemmas", "bounds", "all"}));

  std::size_t bound = 64;
  std::vector<std::string> families;
  auto* survey = app.add_subcommand("survey", "Linear primitivity versus core-free bottom-Boolean intervals");
  survey->add_option("--bound", bound, "Largest group order");
  survey->add_option("--family", families, "Restrict to families (cyclic, dihedral, dicyclic, symmetric, "
                                           "alternating, abelian, product, special)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (app.count("--seed")) cfg.seed = seed;

  try {
    if (*group) return cmd_group(cfg, src);
    if (*lattice) return cmd_lattice(cfg, src, intervals);
    if (*interval) return cmd_interval(cfg, src, h_text, h_opt->count() > 0, k_text, k_opt->count() > 0);
    if (*chartable) return cmd_chartable(cfg, src);
    if (*ore) return cmd_ore(cfg, src);
    if (*linprim) return cmd_linprim(cfg, src);
    if (*verify) return cmd_verify(cfg, src, which);
    if (*survey) return cmd_survey(cfg, bound, families);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return 0;
}
