#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "fpd/analysis.hpp"
#include "fpd/closed_forms.hpp"
#include "fpd/errors.hpp"
#include "fpd/fragile.hpp"
#include "fpd/generators.hpp"
#include "fpd/graph.hpp"
#include "fpd/json_io.hpp"
#include "fpd/montecarlo.hpp"
#include "fpd/placement.hpp"
#include "fpd/poly.hpp"
#include "fpd/propagation.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
  std::string graph_file;
  std::string placement_str;
  bool as_json = false;
  bool as_csv = false;
  std::uint64_t seed = 0;
  int cap = -1;
  std::string tol = "1/1000000000";
  int precision = 9;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw fpd::ParameterError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fpd::Graph load_graph(const GlobalOpts& opts) {
  if (opts.graph_file.empty())
    throw fpd::ParameterError("--graph FILE is required");
  return fpd::parse_graph_auto(read_file(opts.graph_file));
}

fpd::Placement load_placement(const GlobalOpts& opts) {
  if (opts.placement_str.empty())
    throw fpd::ParameterError("--placement is required");
  return fpd::Placement::parse(opts.placement_str);
}

int subset_cap(const GlobalOpts& opts) {
  return opts.cap > 0 ? opts.cap : fpd::kDefaultSubsetCap;
}

int support_cap(const GlobalOpts& opts) {
  return opts.cap > 0 ? opts.cap : fpd::kDefaultSupportCap;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<fpd::Rational> parse_grid(const std::string& text) {
  std::vector<fpd::Rational> grid;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) grid.push_back(fpd::parse_rational(token));
  if (grid.empty()) throw fpd::ParameterError("empty grid");
  return grid;
}

// "family:p1,p2,..." e.g. "complete:3", "wheel:5", "complete_multipartite:2,2"
fpd::Graph parse_family_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::istringstream in(spec.substr(colon + 1));
    std::string tok;
    while (std::getline(in, tok, ',')) params.push_back(std::stoi(tok));
  }
  return fpd::gen_named(fpd::family_from_name(name), params);
}

json rational_json(const fpd::Rational& r, int precision) {
  return json{{"value", r.get_str()},
              {"decimal", fpd::format_rational_decimal(r, precision)}};
}

json placements_json(const std::vector<fpd::Placement>& members) {
  json arr = json::array();
  for (const auto& p : members) arr.push_back(p.to_string());
  return arr;
}

void write_output(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file);
  if (!out) throw fpd::ParameterError("cannot write file '" + out_file + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation for PMU observability under random sensor failure"};
  app.require_subcommand(1);
  app.fallthrough(true);

  GlobalOpts opts;
  app.add_option("--graph", opts.graph_file, "graph file (edge list or graph6; '-' for stdin)");
  app.add_option("--placement", opts.placement_str, "placement 'v[*m],v[*m],...'");
  app.add_flag("--json", opts.as_json, "JSON output");
  app.add_flag("--csv", opts.as_csv, "CSV output where applicable");
  app.add_option("--seed", opts.seed, "RNG seed");
  app.add_option("--cap", opts.cap, "enumeration cap override");
  app.add_option("--tol", opts.tol, "crossing tolerance (rational)");
  app.add_option("--precision", opts.precision, "decimal digits in output");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph, emitted as edge-list text");
  std::string gen_family;
  std::vector<int> gen_params;
  std::string gen_out, gen_subdiv, gen_g1, gen_g2;
  int gen_x1 = 0, gen_x2 = 0, gen_m = 0;
  gen->add_option("family", gen_family,
                  "path|cycle|complete|star|wheel|complete_multipartite|"
                  "cycle_complement|example|crossing|linear|barbell")
      ->required();
  gen->add_option("params", gen_params, "family parameters");
  gen->add_option("--out", gen_out, "output file");
  gen->add_option("--subdivide", gen_subdiv, "linear: 'apex:slot:count,...'");
  gen->add_option("--g1", gen_g1, "barbell: first side 'family:params'");
  gen->add_option("--g2", gen_g2, "barbell: second side 'family:params'");
  gen->add_option("--x1", gen_x1, "barbell: anchor in g1");
  gen->add_option("--x2", gen_x2, "barbell: anchor in g2");
  gen->add_option("--m", gen_m, "barbell: central path length");
  gen->callback([&] {
    std::ostringstream out;
    if (gen_family == "example") {
      out << fpd::to_edge_list(fpd::example_graph());
    } else if (gen_family == "crossing") {
      if (gen_params.size() != 2)
        throw fpd::ParameterError("crossing expects parameters a b");
      auto res = fpd::gen_crossing_family(gen_params[0], gen_params[1]);
      out << "# pds: " << res.pds[0] << " " << res.pds[1] << "\n";
      out << "# failed: " << res.failed[0] << " " << res.failed[1] << "\n";
      out << fpd::to_edge_list(res.graph);
    } else if (gen_family == "linear") {
      if (gen_params.size() < 2)
        throw fpd::ParameterError("linear expects part sizes");
      std::map<std::pair<int, int>, int> subdivisions;
      if (!gen_subdiv.empty()) {
        std::istringstream in(gen_subdiv);
        std::string tok;
        while (std::getline(in, tok, ',')) {
          int i, slot, count;
          char c1, c2;
          std::istringstream ts(tok);
          if (!(ts >> i >> c1 >> slot >> c2 >> count) || c1 != ':' || c2 != ':')
            throw fpd::ParameterError("invalid subdivision token '" + tok + "'");
          subdivisions[{i, slot}] += count;
        }
      }
      auto res = fpd::gen_linear_construct(gen_params, subdivisions);
      out << "# apexes:";
      for (int a : res.apexes) out << " " << a;
      out << "\n" << fpd::to_edge_list(res.graph);
    } else if (gen_family == "barbell") {
      if (gen_g1.empty() || gen_g2.empty())
        throw fpd::ParameterError("barbell requires --g1 and --g2");
      fpd::Graph g1 = parse_family_spec(gen_g1);
      fpd::Graph g2 = parse_family_spec(gen_g2);
      out << fpd::to_edge_list(
          fpd::gen_generalized_barbell(g1, gen_x1, g2, gen_x2, gen_m));
    } else {
      out << fpd::to_edge_list(
          fpd::gen_named(fpd::family_from_name(gen_family), gen_params));
    }
    write_output(out.str(), gen_out);
  });

  // obs
  auto* obs = app.add_subcommand("obs", "observed set of a placement");
  obs->callback([&] {
    fpd::Graph g = load_graph(opts);
    auto result = fpd::observed_set(g, load_placement(opts));
    emit(json{{"observed", result.observed},
              {"full", result.fully_observed},
              {"rounds", result.rounds}});
  });

  // gammap / gammapbar / pdpoly
  auto* gammap = app.add_subcommand("gammap", "power domination number");
  gammap->callback([&] {
    emit(json{{"gamma_p", fpd::power_domination_number(load_graph(opts), subset_cap(opts))}});
  });
  auto* gammapbar = app.add_subcommand("gammapbar", "failed power domination number");
  gammapbar->callback([&] {
    emit(json{{"gamma_p_bar",
               fpd::failed_power_domination_number(load_graph(opts), subset_cap(opts))}});
  });
  auto* pdpoly = app.add_subcommand("pdpoly", "power dominating set counts by size");
  pdpoly->callback([&] {
    auto counts = fpd::power_domination_polynomial(load_graph(opts), subset_cap(opts));
    json arr = json::array();
    for (const auto& c : counts) arr.push_back(c.get_str());
    emit(json{{"counts", arr}});
  });

  // expoly / probfull
  std::string eval_grid;
  auto* expoly = app.add_subcommand("expoly", "expected observed count polynomial");
  expoly->add_option("--eval", eval_grid, "rational grid for a q,value table");
  expoly->callback([&] {
    fpd::Graph g = load_graph(opts);
    fpd::Poly p = fpd::expected_value_poly(g, load_placement(opts), support_cap(opts));
    emit(poly_to_json(p));
    if (!eval_grid.empty()) {
      std::cout << "q,value\n";
      for (const auto& q : parse_grid(eval_grid))
        std::cout << fpd::format_rational_decimal(q, opts.precision) << ","
                  << fpd::format_rational_decimal(p.eval(q), opts.precision) << "\n";
    }
  });
  auto* probfull = app.add_subcommand("probfull", "full-observation probability polynomial");
  probfull->add_option("--eval", eval_grid, "rational grid for a q,value table");
  probfull->callback([&] {
    fpd::Graph g = load_graph(opts);
    fpd::Poly p = fpd::prob_all_observed_poly(g, load_placement(opts), support_cap(opts));
    emit(poly_to_json(p));
    if (!eval_grid.empty()) {
      std::cout << "q,value\n";
      for (const auto& q : parse_grid(eval_grid))
        std::cout << fpd::format_rational_decimal(q, opts.precision) << ","
                  << fpd::format_rational_decimal(p.eval(q), opts.precision) << "\n";
    }
  });

  // robust
  auto* robust = app.add_subcommand("robust", "robustness classification of a placement");
  robust->callback([&] {
    fpd::Graph g = load_graph(opts);
    auto report = fpd::robustness_report(g, load_placement(opts), support_cap(opts));
    json j{{"is_pds", report.is_pds},
           {"max_k_rpds", report.max_k_rpds},
           {"expected", poly_to_json(report.expected)}};
    if (report.max_k_fault_tolerant)
      j["max_k_fault_tolerant"] = *report.max_k_fault_tolerant;
    if (report.h_poly) j["h"] = poly_to_json(*report.h_poly);
    emit(j);
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form probability bounds");
  bounds->require_subcommand(1);
  int b_f = 0, b_s = 0, b_k = 0, b_n = 0;
  std::string b_q, b_eps;
  auto* b_min = bounds->add_subcommand("min-size", "smallest placement size for confidence");
  b_min->add_option("--gammapbar", b_f, "failed power domination number")->required();
  b_min->add_option("--q", b_q, "failure probability in (0,1)")->required();
  b_min->add_option("--eps", b_eps, "tolerated failure probability in (0,1)")->required();
  b_min->callback([&] {
    emit(json{{"size", fpd::min_size_for_confidence(b_f, fpd::parse_rational(b_q),
                                                    fpd::parse_rational(b_eps))}});
  });
  auto* b_rpds = bounds->add_subcommand("rpds", "full-observation bound for a k-robust placement");
  b_rpds->add_option("--s", b_s, "placement size")->required();
  b_rpds->add_option("--k", b_k, "robustness level")->required();
  b_rpds->add_option("--q", b_q, "failure probability in (0,1)")->required();
  b_rpds->callback([&] {
    emit(rational_json(
        fpd::rpds_observation_lower_bound(b_s, b_k, fpd::parse_rational(b_q)),
        opts.precision));
  });
  auto* b_conn = bounds->add_subcommand("connected", "full-observation bound for PMUs everywhere");
  b_conn->add_option("--n", b_n, "vertex count >= 3")->required();
  b_conn->add_option("--q", b_q, "failure probability in (0,1)")->required();
  b_conn->callback([&] {
    emit(rational_json(
        fpd::connected_full_observation_lower_bound(b_n, fpd::parse_rational(b_q)),
        opts.precision));
  });

  // closed-form
  auto* cform = app.add_subcommand("closed-form", "family formulas");
  cform->require_subcommand(1);
  int cf_n = 0, cf_s = 0, cf_m = 0, cf_r = 0, cf_path_s = 0, cf_t = 0;
  bool cf_center = false, cf_prob = false, cf_verify = false;
  std::vector<int> cf_parts, cf_counts;
  std::string cf_g1, cf_g2;
  int cf_x1 = 0, cf_x2 = 0;

  auto* cf_star = cform->add_subcommand("star", "star formulas");
  cf_star->add_option("--n", cf_n, "star order >= 3")->required();
  cf_star->add_option("--s", cf_s, "placement size")->required();
  cf_star->add_flag("--center", cf_center, "placement contains the universal vertex");
  cf_star->add_flag("--prob", cf_prob, "full-observation probability instead of E");
  cf_star->add_flag("--verify", cf_verify, "compare against enumeration");
  cf_star->callback([&] {
    fpd::Poly p = cf_prob ? fpd::star_prob_full(cf_n, cf_s, cf_center)
                          : fpd::star_expected(cf_n, cf_s, cf_center);
    json j = poly_to_json(p);
    if (cf_verify) {
      fpd::Graph g = fpd::star_graph(cf_n);
      fpd::Placement placement;
      int next_leaf = 1;
      if (cf_center) placement.add(0);
      for (int i = placement.size(); i < cf_s; ++i) placement.add(next_leaf++);
      fpd::Poly oracle = cf_prob ? fpd::prob_all_observed_poly(g, placement)
                                 : fpd::expected_value_poly(g, placement);
      j["match"] = oracle == p;
      j["enumeration"] = poly_to_json(oracle);
    }
    emit(j);
  });

  auto* cf_multi = cform->add_subcommand("multipartite", "complete multipartite formulas");
  cf_multi->add_option("--parts", cf_parts, "part sizes, each >= 2")->required();
  cf_multi->add_option("--counts", cf_counts, "PMUs per part")->required();
  cf_multi->add_flag("--prob", cf_prob, "two-distinct-parts survival probability");
  cf_multi->add_flag("--verify", cf_verify, "compare against enumeration");
  cf_multi->callback([&] {
    fpd::Poly p = cf_prob ? fpd::multipartite_two_parts_prob(cf_parts, cf_counts)
                          : fpd::multipartite_expected(cf_parts, cf_counts);
    json j = poly_to_json(p);
    if (cf_verify && !cf_prob) {
      fpd::Graph g = fpd::complete_multipartite_graph(cf_parts);
      fpd::Placement placement;
      int base = 0;
      for (std::size_t i = 0; i < cf_parts.size(); ++i) {
        for (int j2 = 0; j2 < cf_counts[i]; ++j2) placement.add(base + j2);
        base += cf_parts[i];
      }
      fpd::Poly oracle = fpd::expected_value_poly(g, placement);
      j["match"] = oracle == p;
      j["enumeration"] = poly_to_json(oracle);
    }
    emit(j);
  });

  auto* cf_barbell = cform->add_subcommand("barbell", "generalized barbell formula");
  cf_barbell->add_option("--g1", cf_g1, "first side 'family:params'")->required();
  cf_barbell->add_option("--g2", cf_g2, "second side 'family:params'")->required();
  cf_barbell->add_option("--x1", cf_x1, "anchor in g1");
  cf_barbell->add_option("--x2", cf_x2, "anchor in g2");
  cf_barbell->add_option("--m", cf_m, "central path length")->required();
  cf_barbell->add_option("--r", cf_r, "PMUs in g1")->required();
  cf_barbell->add_option("--s", cf_path_s, "PMUs on the central path")->required();
  cf_barbell->add_option("--t", cf_t, "PMUs in g2")->required();
  cf_barbell->add_flag("--verify", cf_verify, "compare against enumeration");
  cf_barbell->callback([&] {
    fpd::Graph g1 = parse_family_spec(cf_g1);
    fpd::Graph g2 = parse_family_spec(cf_g2);
    const int l = g1.vertex_count(), n2 = g2.vertex_count();
    fpd::Poly p = fpd::barbell_expected(l, n2, cf_m, cf_r, cf_path_s, cf_t);
    json j = poly_to_json(p);
    if (cf_verify) {
      fpd::Graph g = fpd::gen_generalized_barbell(g1, cf_x1, g2, cf_x2, cf_m);
      fpd::Placement placement;
      for (int i = 0; i < cf_r; ++i) placement.add(i);
      for (int i = 0; i < cf_path_s; ++i) placement.add(l + n2 + i);
      for (int i = 0; i < cf_t; ++i) placement.add(l + i);
      fpd::Poly oracle = fpd::expected_value_poly(g, placement);
      j["match"] = oracle == p;
      j["enumeration"] = poly_to_json(oracle);
    }
    emit(j);
  });

  // sim
  auto* sim = app.add_subcommand("sim", "seeded stochastic simulation");
  std::string sim_q = "0";
  long long sim_trials = 100000;
  sim->add_option("--q", sim_q, "failure probability in [0,1]")->required();
  sim->add_option("--trials", sim_trials, "number of trials");
  sim->callback([&] {
    fpd::Graph g = load_graph(opts);
    auto est = fpd::simulate(g, load_placement(opts),
                             fpd::parse_rational(sim_q).get_d(), sim_trials, opts.seed);
    emit(json{{"trials", est.trials},
              {"mean_observed", est.mean_observed},
              {"full_obs_frequency", est.full_obs_frequency},
              {"std_error", est.std_error},
              {"seed", est.seed},
              {"generator", est.generator}});
  });

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "group all size-k placements by polynomial");
  int spec_k = 0;
  bool spec_sets = false;
  spectrum->add_option("--k", spec_k, "placement size")->required();
  spectrum->add_flag("--sets", spec_sets, "enumerate sets instead of multisets");
  spectrum->callback([&] {
    fpd::Graph g = load_graph(opts);
    long long cap = opts.cap > 0 ? opts.cap : fpd::kDefaultSpectrumCap;
    auto report = fpd::placement_spectrum(g, spec_k, !spec_sets, cap);
    json classes = json::array();
    for (const auto& cls : report.classes)
      classes.push_back(json{{"poly", poly_to_json(cls.poly)},
                             {"pretty", cls.poly.to_string()},
                             {"members", placements_json(cls.members)}});
    emit(json{{"k", report.k},
              {"multisets", report.multiset_mode},
              {"class_count", report.classes.size()},
              {"classes", classes}});
  });

  // compare
  auto* compare = app.add_subcommand("compare", "dominance intervals of two placements");
  std::string cmp_a, cmp_b;
  compare->add_option("--a", cmp_a, "first placement")->required();
  compare->add_option("--b", cmp_b, "second placement")->required();
  compare->callback([&] {
    fpd::Graph g = load_graph(opts);
    auto report =
        fpd::compare_placements(g, fpd::Placement::parse(cmp_a),
                                fpd::Placement::parse(cmp_b), fpd::parse_rational(opts.tol));
    json crossings = json::array();
    for (const auto& c : report.crossings) crossings.push_back(rational_json(c, opts.precision));
    json intervals = json::array();
    for (const auto& iv : report.intervals) {
      const char* leader = iv.leader == fpd::IntervalLeader::a   ? "a"
                           : iv.leader == fpd::IntervalLeader::b ? "b"
                                                                 : "equal";
      intervals.push_back(json{{"lo", fpd::format_rational_decimal(iv.lo, opts.precision)},
                               {"hi", fpd::format_rational_decimal(iv.hi, opts.precision)},
                               {"leader", leader}});
    }
    emit(json{{"a", report.a.to_string()},
              {"b", report.b.to_string()},
              {"poly_a", poly_to_json(report.poly_a)},
              {"poly_b", poly_to_json(report.poly_b)},
              {"crossings", crossings},
              {"intervals", intervals}});
  });

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV table of exact values over a grid");
  std::string sweep_grid;
  bool sweep_sim = false;
  long long sweep_trials = 100000;
  sweep_cmd->add_option("--grid", sweep_grid, "comma-separated rational grid in [0,1]")->required();
  sweep_cmd->add_flag("--sim", sweep_sim, "append simulated columns");
  sweep_cmd->add_option("--trials", sweep_trials, "simulation trials per grid point");
  sweep_cmd->callback([&] {
    fpd::Graph g = load_graph(opts);
    fpd::SweepOptions sopts;
    sopts.with_sim = sweep_sim;
    sopts.sim_trials = sweep_trials;
    sopts.sim_seed = opts.seed;
    auto rows = fpd::sweep(g, load_placement(opts), parse_grid(sweep_grid), sopts);
    std::cout << fpd::sweep_to_csv(rows, opts.precision);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const fpd::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const fpd::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const fpd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
