#include "gpv/cli.hpp"

#include "gpv/edge_list.hpp"
#include "gpv/errors.hpp"
#include "gpv/generators.hpp"
#include "gpv/laws.hpp"
#include "gpv/metric.hpp"
#include "gpv/position.hpp"
#include "gpv/srg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

namespace gpv::cli {

namespace {

using json = nlohmann::ordered_json;

graph read_input(const std::string &path, std::istream &in) {
  if (path == "-")
    return read_edge_list(in);
  return load_edge_list(path);
}

// A factor for gen --product/--join: an existing edge-list file, else a family spec.
graph read_operand(const std::string &text, std::istream &in) {
  if (text == "-" || std::filesystem::is_regular_file(text))
    return read_input(text, in);
  return generate(family_spec::parse(text)).g;
}

void emit_graph(const graph &g, const std::string &path, std::ostream &out) {
  if (path.empty() || path == "-")
    write_edge_list(out, g);
  else
    save_edge_list(path, g);
}

json graph_json(const graph &g) { return json{{"n", g.order()}, {"m", g.size()}}; }

json certificate_json(const graph &g, const certificate &c, double elapsed_ms) {
  return json{{"graph", graph_json(g)},
              {"invariant", variant_name(c.kind)},
              {"value", c.value},
              {"witness", c.witness.members()},
              {"method", method_name(c.how)},
              {"elapsed_ms", elapsed_ms}};
}

std::string witness_text(const vertex_set &w) {
  std::string s;
  for (vertex v : w.members()) {
    if (!s.empty())
      s += ' ';
    s += std::to_string(v);
  }
  return s;
}

struct timed_certificate {
  certificate c;
  double elapsed_ms = 0;
};

template <class F> timed_certificate timed(F &&f) {
  auto t0 = std::chrono::steady_clock::now();
  certificate c = f();
  auto t1 = std::chrono::steady_clock::now();
  return {std::move(c), std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

void print_results(const graph &g, const std::vector<timed_certificate> &results, bool all,
                   bool as_json, bool quiet, std::ostream &out) {
  if (as_json) {
    json j;
    if (!all) {
      j = certificate_json(g, results.front().c, results.front().elapsed_ms);
    } else {
      j["graph"] = graph_json(g);
      json list = json::array();
      for (const auto &r : results) {
        j[std::string(variant_name(r.c.kind))] = r.c.value;
        list.push_back(certificate_json(g, r.c, r.elapsed_ms));
      }
      j["results"] = std::move(list);
    }
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto &r : results) {
    if (quiet)
      out << r.c.value << '\n';
    else
      out << variant_name(r.c.kind) << ' ' << r.c.value << " witness [" << witness_text(r.c.witness)
          << "] method " << method_name(r.c.how) << '\n';
  }
}

json payload_json(const law_payload &p) {
  json sets = json::object();
  for (const auto &[name, s] : p.sets)
    sets[name] = s.members();
  json edges = json::array();
  for (auto [u, v] : p.g.edges())
    edges.push_back({u, v});
  return json{{"graph", {{"n", p.g.order()}, {"m", p.g.size()}, {"edges", std::move(edges)}}},
              {"edge_list", format_edge_list(p.g)},
              {"sets", std::move(sets)}};
}

void print_payload(const law_payload &p, std::ostream &out) {
  for (const auto &[name, s] : p.sets)
    out << "    " << name << " = " << s.to_string() << '\n';
  out << "    graph (edge list):\n";
  std::istringstream lines(format_edge_list(p.g));
  for (std::string line; std::getline(lines, line);)
    out << "      " << line << '\n';
}

int print_reports(const std::vector<law_report> &reports, law_suite suite, std::uint64_t seed,
                  bool as_json, bool verbose, std::ostream &out) {
  const auto failed = std::count_if(reports.begin(), reports.end(),
                                    [](const law_report &r) { return !r.passed; });
  if (as_json) {
    json list = json::array();
    for (const auto &r : reports) {
      json j{{"law", r.law},
             {"instance", r.instance},
             {"passed", r.passed},
             {"expected", r.expected},
             {"actual", r.actual}};
      if (r.counterexample)
        j["counterexample"] = payload_json(*r.counterexample);
      if (r.evidence)
        j["evidence"] = payload_json(*r.evidence);
      list.push_back(std::move(j));
    }
    json j{{"suite", suite_name(suite)},
           {"seed", seed},
           {"checked", reports.size()},
           {"failed", failed},
           {"reports", std::move(list)}};
    out << j.dump(2) << '\n';
    return failed ? exit_law_failure : exit_ok;
  }
  // One line per law id, then details of every failure.
  std::map<std::string, std::pair<int, int>> per_law;
  for (const auto &r : reports) {
    auto &[pass, total] = per_law[r.law];
    pass += r.passed;
    ++total;
  }
  for (const auto &[law, counts] : per_law)
    out << (counts.first == counts.second ? "PASS " : "FAIL ") << law << " (" << counts.first << '/'
        << counts.second << ")\n";
  for (const auto &r : reports) {
    if (r.passed && !verbose && !r.evidence)
      continue;
    out << (r.passed ? "  ok   " : "  FAIL ") << r.law << " on " << r.instance << ": expected "
        << r.expected << ", got " << r.actual << '\n';
    if (r.counterexample)
      print_payload(*r.counterexample, out);
    if (r.evidence)
      print_payload(*r.evidence, out);
  }
  out << reports.size() - static_cast<std::size_t>(failed) << '/' << reports.size()
      << " checks passed\n";
  return failed ? exit_law_failure : exit_ok;
}

std::vector<variant> selected_variants(const std::string &name) {
  if (name == "all")
    return {std::begin(all_variants), std::end(all_variants)};
  return {parse_variant(name)};
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Exact general position invariants (gp, total, outer, dual) of graphs"};
  app.require_subcommand(1);

  auto *gen = app.add_subcommand("gen", "Write an edge list for a family, product or join");
  std::string family_text, product_text, a_text, b_text, gen_output;
  bool join_flag = false;
  gen->add_option("--family", family_text, "Family spec, e.g. theta:2,3,3");
  gen->add_option("--product", product_text, "cartesian, direct or strong");
  gen->add_flag("--join", join_flag, "Join of -a and -b");
  gen->add_option("-a", a_text, "First operand (edge-list file or family spec)");
  gen->add_option("-b", b_text, "Second operand (edge-list file or family spec)");
  gen->add_option("-o,--output", gen_output, "Output file (default stdout)");

  auto *compute = app.add_subcommand("compute", "Compute invariants with witnesses");
  std::string invariant = "all", input;
  bool as_json = false, quiet = false;
  compute->add_option("--invariant", invariant, "gp, total, outer, dual or all")
      ->check(CLI::IsMember({"gp", "total", "outer", "dual", "all"}));
  compute->add_option("-i,--input", input, "Edge-list file ('-' for stdin)")->required();
  compute->add_flag("--json", as_json, "JSON output");
  compute->add_flag("--quiet", quiet, "Values only");

  auto *srg = app.add_subcommand("srg", "Write the strong resolving graph as an edge list");
  std::string srg_output;
  srg->add_option("-i,--input", input, "Edge-list file ('-' for stdin)")->required();
  srg->add_option("-o,--output", srg_output, "Output file (default stdout)");

  auto *oracle = app.add_subcommand("oracle", "Exhaustive baseline straight from the definitions");
  int max_n = 18;
  oracle->add_option("--invariant", invariant, "gp, total, outer, dual or all")
      ->check(CLI::IsMember({"gp", "total", "outer", "dual", "all"}));
  oracle->add_option("-i,--input", input, "Edge-list file ('-' for stdin)")->required();
  oracle->add_option("--max-n", max_n, "Refuse graphs with more vertices");
  oracle->add_flag("--json", as_json, "JSON output");
  oracle->add_flag("--quiet", quiet, "Values only");

  auto *check = app.add_subcommand("check", "Check the general position laws on fixed instance grids");
  std::string suite_text = "all";
  std::uint64_t seed = 0;
  bool verbose = false;
  check->add_option("--suite", suite_text, "structural, sufficient, products, families or all")
      ->check(CLI::IsMember({"structural", "sufficient", "products", "families", "all"}));
  check->add_option("--seed", seed, "Seed for the random instances");
  check->add_flag("--json", as_json, "JSON output");
  check->add_flag("--verbose", verbose, "Print every check, not only failures");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (gen->parsed()) {
      const int modes = !family_text.empty() + !product_text.empty() + join_flag;
      if (modes != 1)
        throw spec_error("gen needs exactly one of --family, --product, --join");
      graph g;
      if (!family_text.empty()) {
        g = generate(family_spec::parse(family_text)).g;
      } else {
        if (a_text.empty() || b_text.empty())
          throw spec_error("--product and --join need both -a and -b");
        graph a = read_operand(a_text, in), b = read_operand(b_text, in);
        g = join_flag ? join(a, b) : product(a, b, parse_product_kind(product_text));
      }
      emit_graph(g, gen_output, out);
      return exit_ok;
    }
    if (compute->parsed() || oracle->parsed()) {
      const graph g = read_input(input, in);
      std::vector<timed_certificate> results;
      for (variant v : selected_variants(invariant)) {
        if (compute->parsed())
          results.push_back(timed([&] { return solve(g, v); }));
        else
          results.push_back(timed([&] { return brute_force(g, v, max_n); }));
      }
      print_results(g, results, invariant == "all", as_json, quiet, out);
      return exit_ok;
    }
    if (srg->parsed()) {
      emit_graph(strong_resolving_graph(read_input(input, in)), srg_output, out);
      return exit_ok;
    }
    if (check->parsed()) {
      const law_suite suite = parse_suite(suite_text);
      return print_reports(run_suite(suite, seed), suite, seed, as_json, verbose, out);
    }
  } catch (const disconnected_error &e) {
    err << "error: " << e.what() << '\n';
    return exit_disconnected;
  } catch (const size_error &e) {
    err << "error: " << e.what() << '\n';
    return exit_size;
  } catch (const error &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

} // namespace gpv::cli
