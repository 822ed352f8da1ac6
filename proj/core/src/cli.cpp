#include "pdp/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdp/edpp.hpp"
#include "pdp/instance_io.hpp"
#include "pdp/oracle.hpp"
#include "pdp/search.hpp"

namespace pdp::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

int default_jobs() {
  if (const char* env = std::getenv("PDP_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

json solution_json(const Solution& sol) {
  json paths = json::array();
  for (const Path& p : sol.paths) {
    paths.push_back({{"vertices", p.vertices}, {"edges", p.edges}});
  }
  return {{"length", sol.total_length}, {"paths", std::move(paths)}};
}

json count_json(const CountResult& r) {
  return {{"length", r.min_length},
          {"count", to_string(r.count)},
          {"exists", r.exists()}};
}

json telescope_json(const TelescopeExpansion& expansion) {
  json entries = json::array();
  for (const TelescopeEntry& e : expansion.entries) {
    entries.push_back({{"pairing", e.pairing.to_string()},
                       {"coefficient", e.coefficient},
                       {"len", len(e.pairing)}});
  }
  return entries;
}

struct Reporter {
  std::string command;
  Clock::time_point started = Clock::now();
  json report;

  explicit Reporter(std::string cmd) : command(std::move(cmd)) {
    report["command"] = command;
  }

  void attach_instance(const Instance& inst) {
    report["instance"] = instance_digest(inst);
  }

  int finish(std::ostream& out, std::ostream& err, int code,
             const std::string& summary) {
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - started)
            .count();
    report["exit"] = code;
    out << report.dump() << "\n";
    err << summary << "\n";
    return code;
  }
};

Instance load_checked(const std::string& path) {
  return validate_instance(load_instance(path));
}

void maybe_dump(const Instance& inst, const std::string& dump_path) {
  if (dump_path.empty()) return;
  std::ofstream out(dump_path);
  if (!out) fail(ErrorCode::BadInstanceFile, "cannot open " + dump_path);
  out << instance_to_dot(inst);
}

json diagnostics_for(const Instance& inst) {
  json diag;
  if (inst.tag == CaseTag::kOneFace) {
    FaceSet faces = trace_faces(inst.graph);
    OneFaceLabeling labels = face_labels(inst, faces);
    Pairing m0 = labels.input_pairing();
    diag["pairing"] = m0.to_string();
    if (is_noncrossing(m0)) {
      diag["telescope"] = telescope_json(telescope(m0));
    } else {
      diag["crossing_input"] = true;
    }
  } else {
    FaceSet faces = trace_faces(inst.graph);
    Axis axis = find_axis(inst, faces);
    TwoFaceLabeling labels = two_face_labels(inst, faces, axis);
    OffsetSpec offs = offset(labels);
    json steps = json::array();
    for (const AxisStep& s : axis.steps) {
      steps.push_back({{"edge", s.edge}, {"positive_dart", s.positive_dart}});
    }
    diag["axis"] = {{"faces", axis.face_path}, {"steps", std::move(steps)}};
    diag["pairing"] = labels.input_pairing().to_string();
    diag["offsets"] = offs.demand_offsets;
    if (offs.common) diag["offset"] = *offs.common;
    diag["offset_consistent"] = offs.consistent();
  }
  return diag;
}

int run_selftest(std::ostream& out, std::ostream& err) {
  Reporter rep("selftest");
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    err << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  // Telescoping on the worked k=4 example.
  Pairing m1(4, {{1, 8}, {2, 5}, {3, 4}, {6, 7}});
  Pairing m2(4, {{1, 8}, {2, 7}, {3, 4}, {5, 6}});
  Pairing m3(4, {{1, 8}, {2, 7}, {3, 6}, {4, 5}});
  TelescopeExpansion tel = telescope(m1);
  check("telescope yields three pairings", tel.entries.size() == 3);
  bool coeffs_ok = tel.entries.size() == 3;
  if (coeffs_ok) {
    coeffs_ok = tel.entries[0].pairing == m1 && tel.entries[0].coefficient == 1 &&
                tel.entries[1].pairing == m2 && tel.entries[1].coefficient == 1 &&
                tel.entries[2].pairing == m3 && tel.entries[2].coefficient == 1;
  }
  check("telescope coefficients are all +1", coeffs_ok);
  auto wit = compatible(m1, m2);
  check("c(M1,M2) = 3 giving sign -1", wit && wit->cycle_count == 3);

  // Serial square: unique two-path optimum of length 2.
  GenSpec square;
  square.family = "random-planar";
  square.n = 4;
  square.chords = 0;
  square.k = 2;
  square.order = TerminalOrder::kSerial;
  square.seed = 7;
  Instance inst = gen_instance(square);
  CountResult counted = count_instance(inst);
  Enumeration oracle = enum_disjoint_paths(inst);
  check("square count matches oracle",
        counted.exists() && oracle.exists() &&
            counted.min_length == oracle.min_length &&
            counted.count == oracle.count_at_min);

  // Circular ladder, straight spokes.
  GenSpec ladder;
  ladder.family = "annulus";
  ladder.rings = 2;
  ladder.spokes = 4;
  ladder.k = 2;
  ladder.shift = 0;
  ladder.seed = 3;
  Instance two = gen_instance(ladder);
  CountResult counted2 = count_instance(two);
  Enumeration oracle2 = enum_disjoint_paths(two);
  check("ladder count matches oracle",
        counted2.exists() && oracle2.exists() &&
            counted2.min_length == oracle2.min_length &&
            counted2.count == oracle2.count_at_min);

  rep.report["result"] = {{"failures", failures}};
  return rep.finish(out, err, failures == 0 ? 0 : 3,
                    failures == 0 ? "selftest passed" : "selftest FAILED");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact shortest disjoint-path solver for planar graphs"};
  app.require_subcommand(1);

  std::string instance_path, dump_path, out_path, method = "greedy";
  long long budget = 0;
  unsigned long long seed = 1;
  int jobs = default_jobs();
  bool include_tuples = true;

  auto add_common = [&](CLI::App* cmd, bool needs_instance) {
    if (needs_instance) {
      cmd->add_option("instance", instance_path, "instance JSON file")
          ->required();
    }
    cmd->add_option("--jobs,-j", jobs, "worker threads for evaluation points");
    cmd->add_option("--dump-graph", dump_path, "write a DOT dump and continue");
  };

  CLI::App* count_cmd = app.add_subcommand("count", "count shortest systems");
  add_common(count_cmd, true);
  CLI::App* decide_cmd = app.add_subcommand("decide", "decide length budget");
  add_common(decide_cmd, true);
  decide_cmd->add_option("--budget", budget, "length budget")->required();
  CLI::App* search_cmd = app.add_subcommand("search", "construct a system");
  add_common(search_cmd, true);
  search_cmd->add_option("--method", method, "greedy | isolation");
  search_cmd->add_option("--seed", seed, "random seed (isolation)");
  CLI::App* edpp_cmd = app.add_subcommand("edpp", "edge-disjoint via gadgets");
  add_common(edpp_cmd, true);
  std::string edpp_op = "search";
  edpp_cmd->add_option("--op", edpp_op, "decide | search");
  edpp_cmd->add_option("--budget", budget, "length budget (decide)");
  edpp_cmd->add_option("--method", method, "greedy | isolation");
  edpp_cmd->add_option("--seed", seed, "random seed (isolation)");
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force enumeration");
  add_common(oracle_cmd, true);
  bool no_tuples = false;
  oracle_cmd->add_flag("--no-tuples", no_tuples, "omit the tuple list");
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a seeded instance");
  GenSpec spec;
  std::string order = "parallel";
  gen_cmd->add_option("--family", spec.family, "grid | annulus | random-planar")
      ->required();
  gen_cmd->add_option("--seed", spec.seed, "seed");
  gen_cmd->add_option("--k", spec.k, "terminal pairs");
  gen_cmd->add_option("--rows", spec.rows, "grid rows");
  gen_cmd->add_option("--cols", spec.cols, "grid cols");
  gen_cmd->add_option("--rings", spec.rings, "annulus rings");
  gen_cmd->add_option("--spokes", spec.spokes, "annulus spokes");
  gen_cmd->add_option("--shift", spec.shift, "annulus pairing shift");
  gen_cmd->add_flag("--mismatch", spec.mismatch, "inconsistent offsets");
  gen_cmd->add_option("--n", spec.n, "random-planar vertices");
  gen_cmd->add_option("--chords", spec.chords, "random-planar chords");
  gen_cmd->add_option("--order", order, "parallel | serial | general");
  gen_cmd->add_option("--max-weight", spec.max_weight, "random weights in [1,w]");
  gen_cmd->add_flag("--edge-disjoint", spec.edge_disjoint, "EDPP mode");
  gen_cmd->add_option("--out", out_path, "write to file instead of stdout");
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "built-in checks");
  (void)selftest_cmd;

  std::vector<std::string> argv_copy = args;
  std::reverse(argv_copy.begin(), argv_copy.end());
  try {
    app.parse(argv_copy);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  DetOptions det;
  det.jobs = jobs;

  try {
    if (selftest_cmd->parsed()) return run_selftest(out, err);

    if (gen_cmd->parsed()) {
      if (order == "parallel") {
        spec.order = TerminalOrder::kParallel;
      } else if (order == "serial") {
        spec.order = TerminalOrder::kSerial;
      } else if (order == "general") {
        spec.order = TerminalOrder::kGeneral;
      } else {
        fail(ErrorCode::BadParams, "unknown order " + order);
      }
      Instance inst = gen_instance(spec);
      std::string text = instance_to_json(inst);
      if (out_path.empty()) {
        out << text << "\n";
      } else {
        std::ofstream f(out_path);
        if (!f) fail(ErrorCode::BadInstanceFile, "cannot open " + out_path);
        f << text << "\n";
      }
      err << "generated " << spec.family << " instance, digest "
          << instance_digest(inst) << "\n";
      return 0;
    }

    Instance inst = load_checked(instance_path);
    maybe_dump(inst, dump_path);

    if (count_cmd->parsed()) {
      Reporter rep("count");
      rep.attach_instance(inst);
      if (inst.edge_disjoint) {
        fail(ErrorCode::BadCaseTag,
             "counts are not preserved by the gadget reduction; "
             "count is unavailable in edge-disjoint mode");
      }
      CountResult r = count_instance(inst, {}, det);
      rep.report["result"] = count_json(r);
      rep.report["diagnostics"] = diagnostics_for(inst);
      return rep.finish(out, err, r.exists() ? 0 : 1,
                        r.exists()
                            ? "shortest length " + std::to_string(r.min_length) +
                                  ", count " + to_string(r.count)
                            : "no disjoint path system");
    }

    if (decide_cmd->parsed()) {
      Reporter rep("decide");
      rep.attach_instance(inst);
      bool feasible;
      if (inst.edge_disjoint) {
        GadgetMap gm = reduce_edpp(inst);
        CountResult r = count_instance(gm.reduced, {}, det);
        feasible = r.exists() && r.min_length <= budget;
      } else {
        CountResult r = count_instance(inst, {}, det);
        feasible = r.exists() && r.min_length <= budget;
      }
      rep.report["result"] = {{"budget", budget}, {"decision", feasible}};
      return rep.finish(out, err, feasible ? 0 : 1,
                        feasible ? "feasible within budget"
                                 : "not feasible within budget");
    }

    if (search_cmd->parsed()) {
      Reporter rep("search");
      rep.attach_instance(inst);
      if (inst.edge_disjoint) {
        fail(ErrorCode::BadCaseTag, "use the edpp subcommand for EDPP search");
      }
      rep.report["method"] = method;
      if (method == "greedy") {
        Solution sol = greedy_search(inst, det);
        rep.report["result"] = solution_json(sol);
        return rep.finish(out, err, 0,
                          "found system of length " +
                              std::to_string(sol.total_length));
      }
      if (method != "isolation") {
        fail(ErrorCode::BadParams, "unknown method " + method);
      }
      rep.report["seed"] = seed;
      IsolationOutcome outcome = isolation_search(inst, seed, det);
      if (outcome.solution) {
        rep.report["result"] = solution_json(*outcome.solution);
        rep.report["isolated"] = outcome.isolated;
        return rep.finish(out, err, 0,
                          "found system of length " +
                              std::to_string(outcome.solution->total_length));
      }
      rep.report["result"] = {{"status", "detected-failure"},
                              {"isolated", outcome.isolated}};
      return rep.finish(out, err, 1, "isolation trial failed (detected)");
    }

    if (edpp_cmd->parsed()) {
      Reporter rep("edpp");
      rep.attach_instance(inst);
      if (!inst.edge_disjoint) {
        fail(ErrorCode::BadCaseTag,
             "edpp expects an instance with mode edge-disjoint");
      }
      GadgetMap gm = reduce_edpp(inst);
      rep.report["reduced_digest"] = instance_digest(gm.reduced);
      if (edpp_op == "decide") {
        CountResult r = count_instance(gm.reduced, {}, det);
        bool feasible = r.exists() && r.min_length <= budget;
        rep.report["result"] = {{"budget", budget}, {"decision", feasible}};
        return rep.finish(out, err, feasible ? 0 : 1,
                          feasible ? "feasible within budget"
                                   : "not feasible within budget");
      }
      if (edpp_op != "search") {
        fail(ErrorCode::BadParams, "unknown edpp op " + edpp_op);
      }
      rep.report["method"] = method;
      Solution reduced_sol;
      if (method == "greedy") {
        reduced_sol = greedy_search(gm.reduced, det);
      } else if (method == "isolation") {
        rep.report["seed"] = seed;
        IsolationOutcome outcome = isolation_search(gm.reduced, seed, det);
        if (!outcome.solution) {
          rep.report["result"] = {{"status", "detected-failure"}};
          return rep.finish(out, err, 1, "isolation trial failed (detected)");
        }
        reduced_sol = *outcome.solution;
      } else {
        fail(ErrorCode::BadParams, "unknown method " + method);
      }
      Solution lifted = lift_solution(gm, reduced_sol);
      if (!validate_edge_disjoint(inst, lifted)) {
        fail(ErrorCode::InternalInconsistency,
             "lifted solution failed edge-disjoint validation");
      }
      rep.report["result"] = solution_json(lifted);
      return rep.finish(out, err, 0,
                        "found edge-disjoint system of length " +
                            std::to_string(lifted.total_length));
    }

    if (oracle_cmd->parsed()) {
      Reporter rep("oracle");
      rep.attach_instance(inst);
      include_tuples = !no_tuples;
      Enumeration e =
          inst.edge_disjoint
              ? enum_edge_disjoint_paths(inst, include_tuples)
              : enum_disjoint_paths(inst, include_tuples);
      json tuples = json::array();
      for (const Solution& sol : e.tuples) tuples.push_back(solution_json(sol));
      rep.report["result"] = {{"min_length", e.min_length},
                              {"count_at_min", to_string(e.count_at_min)},
                              {"total", to_string(e.total)},
                              {"tuples", std::move(tuples)}};
      return rep.finish(out, err, e.exists() ? 0 : 1,
                        e.exists() ? "minimum " + std::to_string(e.min_length) +
                                         " with " + to_string(e.count_at_min) +
                                         " systems"
                                   : "no disjoint path system");
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    out << json{{"error", e.what()},
                {"code", to_string(e.code())},
                {"exit", exit_code_for(e.code())}}
               .dump()
        << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace pdp::cli
