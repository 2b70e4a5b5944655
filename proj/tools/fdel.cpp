#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdel/family.hpp"
#include "fdel/graph.hpp"
#include "fdel/matching.hpp"
#include "fdel/minors.hpp"
#include "fdel/reduction.hpp"
#include "fdel/structure.hpp"
#include "fdel/turing_kernel.hpp"
#include "fdel/vc_oracle.hpp"

using nlohmann::json;

namespace {

fdel::ContainType parse_type(const std::string& s) {
  if (s == "minor") return fdel::ContainType::minor;
  if (s == "subgraph") return fdel::ContainType::subgraph;
  throw fdel::parse_error("unknown type: " + s + " (expected minor|subgraph)");
}

json labels_json(const fdel::GadgetLabels& gl) {
  json copies = json::array();
  for (const auto& c : gl.copies)
    copies.push_back({{"u", c.u}, {"v", c.v}, {"w", c.w}, {"s", c.s}, {"t", c.t}});
  return {{"copies", copies}, {"S", gl.S}};
}

json artifact_json(const fdel::ReductionArtifact& art,
                   const std::string& family_file, const std::string& type) {
  json clause_labels = json::array();
  for (const auto& gl : art.clause_labels) clause_labels.push_back(labels_json(gl));
  json variable_labels = json::array();
  for (const auto& vl : art.variable_labels)
    variable_labels.push_back({{"v_pos", vl.v_pos}, {"v_neg", vl.v_neg}});
  return {{"ell", art.ell},
          {"modulator", art.modulator},
          {"family_file", family_file},
          {"type", type},
          {"labels",
           {{"clauses", clause_labels}, {"variables", variable_labels}}}};
}

bool sat_by_enumeration(const fdel::CnfFormula& phi) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << phi.k); ++mask) {
    bool ok = true;
    for (const auto& clause : phi.clauses) {
      bool sat = false;
      for (int lit : clause) {
        bool val = mask >> (std::abs(lit) - 1) & 1;
        if (lit > 0 ? val : !val) sat = true;
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

int run(int argc, char** argv) {
  CLI::App app{"F-type-free deletion: Turing-kernel solver and hard-instance generator"};
  app.require_subcommand(1);

  std::string graph_path, family_path, cnf_path, type_str = "minor";
  std::string engine = "auto", out_path, meta_path, log_path;
  int ell = 0, gadget_n = 1;
  bool verify = false, check_witnesses = false;
  int pattern_cap = fdel::kDefaultPatternCap;
  int vc_cap = fdel::kDefaultVcCap;
  int brute_cap = fdel::kDefaultBruteCap;
  int tw_cap = fdel::kDefaultTreewidthCap;

  auto* solve_cmd = app.add_subcommand("solve", "decide an instance");
  solve_cmd->add_option("--graph", graph_path)->required();
  solve_cmd->add_option("--family", family_path)->required();
  solve_cmd->add_option("--ell", ell)->required();
  solve_cmd->add_option("--type", type_str);
  solve_cmd->add_option("--engine", engine)
      ->check(CLI::IsMember({"auto", "turing", "brute"}));
  solve_cmd->add_option("--log-queries", log_path);
  solve_cmd->add_flag("--check-witnesses", check_witnesses);
  solve_cmd->add_option("--pattern-cap", pattern_cap);
  solve_cmd->add_option("--vc-cap", vc_cap);
  solve_cmd->add_option("--brute-cap", brute_cap);

  auto* reduce_cmd = app.add_subcommand("reduce", "generate a hard instance from CNF");
  reduce_cmd->add_option("--cnf", cnf_path)->required();
  reduce_cmd->add_option("--family", family_path)->required();
  reduce_cmd->add_option("--out", out_path);
  reduce_cmd->add_option("--meta", meta_path);
  reduce_cmd->add_option("--type", type_str);
  reduce_cmd->add_flag("--verify", verify);
  reduce_cmd->add_option("--brute-cap", brute_cap);

  auto* gadget_cmd = app.add_subcommand("gadget", "build and check the clause gadget");
  gadget_cmd->add_option("--graph", graph_path)->required();
  gadget_cmd->add_option("--n", gadget_n)->required();
  gadget_cmd->add_option("--out", out_path);
  gadget_cmd->add_flag("--verify", verify);

  auto* analyze_cmd = app.add_subcommand("analyze", "structure report as JSON");
  analyze_cmd->add_option("--graph", graph_path);
  analyze_cmd->add_option("--family", family_path);
  analyze_cmd->add_option("--tw-cap", tw_cap);

  CLI11_PARSE(app, argc, argv);

  if (solve_cmd->parsed()) {
    fdel::DeletionInstance inst;
    inst.graph = fdel::read_graph_file(graph_path);
    inst.family = fdel::read_family_file(family_path);
    inst.type = parse_type(type_str);
    inst.ell = ell;
    if (ell < 0) throw fdel::parse_error("--ell must be >= 0");

    bool yes;
    if (engine == "brute" ||
        (engine == "auto" && inst.family.witness_index == -1 &&
         !inst.family.has_empty_member)) {
      yes = fdel::brute_force_delete(inst.graph, inst.family, inst.type, ell,
                                     brute_cap, pattern_cap)
                .has_value();
    } else {
      if (engine == "turing" && inst.family.witness_index == -1 &&
          !inst.family.has_empty_member)
        throw fdel::regime_error(
            "lower-bound regime: family has no P3-subgraph-free member after "
            "stripping isolated vertices");
      fdel::SolveOptions opts;
      opts.pattern_cap = pattern_cap;
      opts.vc_cap = vc_cap;
      opts.brute_cap = brute_cap;
      opts.check_witnesses = check_witnesses;
      std::ofstream log;
      if (!log_path.empty()) {
        log.open(log_path);
        if (!log) throw fdel::parse_error("cannot open log file: " + log_path);
        opts.query_log = &log;
      }
      yes = fdel::solve(inst, opts).yes;
    }
    std::cout << (yes ? "YES" : "NO") << "\n";
    return 0;
  }

  if (reduce_cmd->parsed()) {
    auto phi = fdel::read_cnf_file(cnf_path);
    auto fam = fdel::read_family_file(family_path);
    auto art = fdel::build_instance_family(fam, phi);  // throws on wrong regime
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw fdel::parse_error("cannot open output file: " + out_path);
      fdel::write_graph(out, art.graph);
    }
    json meta = artifact_json(art, family_path, type_str);
    if (verify) {
      json checks;
      auto target = fdel::select_reduction_target(fam);
      checks["modulator_size_ok"] =
          static_cast<int>(art.modulator.size()) ==
          (2 * target.c - 1) * 2 * phi.k;
      for (const auto& clause : phi.clauses) {
        auto rep = fdel::verify_gadget(target.H_up,
                                       static_cast<int>(clause.size()));
        checks["gadgets_ok"] = rep.all_ok() &&
                               (!checks.contains("gadgets_ok") ||
                                checks["gadgets_ok"].get<bool>());
        for (const auto& msg : rep.failures) checks["failures"].push_back(msg);
      }
      int n = art.graph.n;
      if (std::min(art.ell, n - art.ell) <= brute_cap) {
        bool sat = sat_by_enumeration(phi);
        bool yes = fdel::brute_force_delete(art.graph, fam,
                                            fdel::ContainType::minor, art.ell,
                                            brute_cap)
                       .has_value();
        checks["sat"] = sat;
        checks["instance_yes"] = yes;
        checks["sound"] = sat == yes;
      } else {
        checks["sound"] = "skipped: beyond brute-force cap";
      }
      meta["verify"] = checks;
    }
    std::string meta_text = meta.dump(2) + "\n";
    if (!meta_path.empty()) {
      std::ofstream out(meta_path);
      if (!out) throw fdel::parse_error("cannot open meta file: " + meta_path);
      out << meta_text;
    } else {
      std::cout << meta_text;
    }
    return 0;
  }

  if (gadget_cmd->parsed()) {
    auto h = fdel::read_graph_file(graph_path);
    auto [g, labels] = fdel::clause_gadget(h, gadget_n);
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw fdel::parse_error("cannot open output file: " + out_path);
      fdel::write_graph(out, g);
    }
    json rep = {{"n_vertices", g.n},
                {"n_edges", g.edge_count()},
                {"labels", labels_json(labels)}};
    if (verify) {
      auto check = fdel::verify_gadget(h, gadget_n);
      rep["verify"] = {{"tw_ok", check.tw_ok},
                       {"packing_ok", check.packing_ok},
                       {"packing_minus_s_ok", check.packing_minus_s_ok},
                       {"solution_ok", check.solution_ok},
                       {"failures", check.failures},
                       {"all_ok", check.all_ok()}};
    }
    std::cout << rep.dump(2) << "\n";
    return 0;
  }

  // analyze
  json rep;
  if (!graph_path.empty()) {
    auto g = fdel::read_graph_file(graph_path);
    auto dec = fdel::block_decomposition(g);
    rep["n"] = g.n;
    rep["m"] = g.edge_count();
    rep["components"] = static_cast<int>(fdel::connected_components(g).size());
    rep["cut_vertices"] = dec.cut_vertices;
    rep["blocks"] = static_cast<int>(dec.blocks.size());
    if (!dec.blocks.empty()) rep["slb"] = fdel::slb(g);
    rep["fvs_size"] = static_cast<int>(fdel::fvs_exact(g).size());
    rep["treewidth"] = fdel::treewidth_exact(g, tw_cap);
    rep["matching_number"] = fdel::matching_number(g);
  }
  if (!family_path.empty()) {
    auto fam = fdel::read_family_file(family_path);
    json fj;
    fj["names"] = fam.names;
    fj["has_empty_member"] = fam.has_empty_member;
    fj["mintw"] = fam.min_treewidth;
    fj["guard_bound"] = fam.guard_bound;
    if (fam.witness_index != -1) {
      fj["witness"] = fam.names[fam.witness_index];
      fj["m"] = fam.m;
      fj["alpha"] = fam.alpha;
    } else {
      fj["regime"] = "lower-bound";
    }
    rep["family"] = fj;
  }
  if (rep.empty()) throw fdel::parse_error("analyze: nothing to analyze");
  std::cout << rep.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error&) {
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
