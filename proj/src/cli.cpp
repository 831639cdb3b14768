#include "vnum/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "vnum/catalog.hpp"
#include "vnum/classifiers.hpp"
#include "vnum/formats.hpp"
#include "vnum/monomial.hpp"

namespace vnum::cli {

namespace {

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> meaningful_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

// Runs fn(0..count-1) on `threads` workers; results keep index order.
template <class Fn>
auto parallel_map(std::size_t count, int threads, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  std::vector<decltype(fn(std::size_t{}))> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) results[i] = fn(i);
  };
  const auto n = static_cast<std::size_t>(std::max(1, threads));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(n, count); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

// Runs `body` and maps library exceptions to exit codes.
template <class Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << '\n';
    return kConsistencyError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

struct BatchItem {
  std::string text;
  bool consistency_failure = false;
};

}  // namespace

std::vector<Field> parse_fields(const std::string& spec) {
  if (spec == "q") return {Field::Rationals};
  if (spec == "f2") return {Field::GF2};
  if (spec == "both") return {Field::Rationals, Field::GF2};
  throw InputError("--field must be q, f2 or both");
}

int effective_threads(int requested) {
  if (const char* env = std::getenv("VNUM_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 1024L));
  }
  return std::max(1, requested);
}

int cmd_report(const std::string& path, const std::vector<Field>& fields, OutputFormat format, int oracle_cap,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = parse_input(read_text(path));
    const auto report = full_report(doc.clutter(), ReportOptions{fields, oracle_cap});
    const std::string name = path == "-" ? "stdin" : std::filesystem::path(path).filename().string();
    switch (format) {
      case OutputFormat::Json: out << report_json(report, name, 2) << '\n'; break;
      case OutputFormat::Tsv: out << report_tsv_header(fields) << '\n' << report_tsv_row(report, name, fields) << '\n'; break;
      case OutputFormat::Text: out << report_text(report, name); break;
    }
    return int{kOk};
  });
}

int cmd_symbolic_power(const std::string& path, int k, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto doc = parse_input(read_text(path));
    const auto ideal = edge_ideal(doc.clutter());
    if (ideal.is_zero()) throw ZeroIdealError();
    const auto power = symbolic_power(ideal, k);
    for (const auto& g : power.generators()) out << g << '\n';
    return int{kOk};
  });
}

int cmd_catalog_verify_cm36(int oracle_cap, int threads, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto& catalog = cm36_catalog();
    struct Row {
      bool sscm = false;
      bool critical = false;
      bool inconsistent = false;
      std::string error;
    };
    auto rows = parallel_map(catalog.size(), threads, [&](std::size_t i) {
      Row r;
      try {
        const Graph g = catalog[i].graph();
        r.sscm = symbolic_square_cm(g, Field::Rationals, oracle_cap);
        r.critical = is_edge_critical(g);
      } catch (const ConsistencyError& e) {
        r.inconsistent = true;
        r.error = e.what();
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      return r;
    });
    int passed = 0;
    int small = 0;
    int nine = 0;
    std::vector<std::string> failures;
    bool consistency = false;
    out << "label\tvertices\tsymbolic_square_cm_Q\tedge_critical\tstatus\n";
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      const auto& e = catalog[i];
      const auto& r = rows[i];
      const bool ok = r.error.empty() && r.sscm && r.critical;
      if (ok) ++passed; else failures.push_back(e.label);
      consistency = consistency || r.inconsistent;
      (e.vertex_count < 9 ? small : nine) += 1;
      out << e.label << '\t' << e.vertex_count << '\t' << (r.sscm ? "true" : "false") << '\t'
          << (r.critical ? "true" : "false") << '\t' << (ok ? "pass" : "FAIL" + (r.error.empty() ? "" : ": " + r.error))
          << '\n';
    }
    out << "passed: " << passed << "/" << catalog.size() << '\n'
        << "split: " << small << " with fewer than 9 vertices + " << nine << " with 9 vertices\n";
    if (consistency) return int{kConsistencyError};
    if (!failures.empty() || small != 19 || nine != 17) {
      err << "fixture failure:";
      for (const auto& f : failures) err << ' ' << f;
      err << '\n';
      return int{kFixtureFailure};
    }
    return int{kOk};
  });
}

int cmd_catalog_verify_edge_critical(const std::string& path, int threads, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto lines = meaningful_lines(read_text(path));
    struct Row {
      int n = 0;
      bool connected = false;
      bool critical = false;
      bool inconsistent = false;
      std::string error;
    };
    auto rows = parallel_map(lines.size(), threads, [&](std::size_t i) {
      Row r;
      try {
        const Graph g = parse_graph6(lines[i]).graph();
        r.n = g.vertex_count();
        r.connected = is_connected(g);
        if (r.connected) r.critical = is_edge_critical(g);
      } catch (const ConsistencyError& e) {
        r.inconsistent = true;
        r.error = e.what();
      } catch (const std::exception& e) {
        r.error = e.what();
      }
      return r;
    });
    std::map<int, std::pair<long, long>> per_n;
    long skipped = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      if (r.inconsistent) throw ConsistencyError("graph6 line " + std::to_string(i + 1) + ": " + r.error);
      if (!r.error.empty()) throw InputError("graph6 line " + std::to_string(i + 1) + ": " + r.error);
      if (!r.connected) {
        ++skipped;
        continue;
      }
      auto& [graphs, critical] = per_n[r.n];
      ++graphs;
      critical += r.critical ? 1 : 0;
    }
    long total = 0;
    out << "vertices\tconnected_graphs\tedge_critical\n";
    for (const auto& [n, counts] : per_n) {
      out << n << '\t' << counts.first << '\t' << counts.second << '\n';
      if (n >= 2) total += counts.second;
    }
    out << "edge_critical_total_at_least_2_vertices\t" << total << '\n'
        << "skipped_disconnected\t" << skipped << '\n';
    return int{kOk};
  });
}

int cmd_batch(const std::string& path, const std::vector<Field>& fields, OutputFormat format, int oracle_cap,
              int threads, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto lines = meaningful_lines(read_text(path));
    const auto base = path == "-" ? std::filesystem::path{} : std::filesystem::path(path).parent_path();
    const bool json = format == OutputFormat::Json;
    auto items = parallel_map(lines.size(), threads, [&](std::size_t i) {
      const std::string& name = lines[i];
      BatchItem item;
      try {
        std::filesystem::path file(name);
        if (!std::filesystem::exists(file) && file.is_relative() && std::filesystem::exists(base / file)) file = base / file;
        const auto doc = std::filesystem::is_regular_file(file) ? parse_input(read_text(file.string())) : parse_graph6(name);
        const auto report = full_report(doc.clutter(), ReportOptions{fields, oracle_cap});
        item.text = json ? report_json(report, name) : report_tsv_row(report, name, fields);
      } catch (const ConsistencyError& e) {
        item.consistency_failure = true;
        item.text = json ? error_json(name, e.what()) : error_tsv_row(name, e.what(), fields);
      } catch (const std::exception& e) {
        item.text = json ? error_json(name, e.what()) : error_tsv_row(name, e.what(), fields);
      }
      return item;
    });
    if (!json) out << report_tsv_header(fields) << '\n';
    bool consistency = false;
    for (const auto& item : items) {
      out << item.text << '\n';
      consistency = consistency || item.consistency_failure;
    }
    return int{consistency ? kConsistencyError : kOk};
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"v-number, regularity and Cohen-Macaulay classification of edge ideals", "vnum"};
  app.require_subcommand(1);

  std::string field = "q";
  bool as_json = false;
  bool as_tsv = false;
  int oracle_cap = kDefaultOracleCap;
  int parallel = 1;
  std::string input;
  int power = 2;
  std::string table;
  std::string edge_critical_file;

  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--field", field, "Coefficient field: q, f2 or both")
        ->check(CLI::IsMember({"q", "f2", "both"}))
        ->capture_default_str();
    auto* j = sub->add_flag("--json", as_json, "JSON output");
    auto* t = sub->add_flag("--tsv", as_tsv, "TSV output");
    j->excludes(t);
    sub->add_option("--oracle-cap", oracle_cap, "Largest vertex count for the polarization oracle")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  };

  auto* report = app.add_subcommand("report", "Invariants and classifications of one graph or clutter");
  report->add_option("file", input, "Edge-list or graph6 file ('-' for stdin)")->required();
  add_output_flags(report);

  auto* sp = app.add_subcommand("symbolic-power", "Minimal generators of a symbolic power of the edge ideal");
  sp->add_option("file", input, "Edge-list or graph6 file ('-' for stdin)")->required();
  sp->add_option("-k,--power", power, "Exponent")->check(CLI::PositiveNumber)->capture_default_str();

  auto* cv = app.add_subcommand("catalog-verify", "Check the embedded catalog or scan a graph6 catalog");
  auto* tab = cv->add_option("--table", table, "Embedded catalog to verify")->check(CLI::IsMember({"cm36"}));
  auto* ec = cv->add_option("--edge-critical", edge_critical_file, "graph6 file of connected graphs to scan");
  tab->excludes(ec);
  cv->add_option("--parallel", parallel, "Worker threads")->check(CLI::PositiveNumber);
  cv->add_option("--oracle-cap", oracle_cap, "Largest vertex count for the polarization oracle")
      ->check(CLI::NonNegativeNumber);

  auto* batch = app.add_subcommand("batch", "Reports for every file or graph6 line listed in a file");
  batch->add_option("file", input, "List of files and/or graph6 strings ('-' for stdin)")->required();
  batch->add_option("--parallel", parallel, "Worker threads")->check(CLI::PositiveNumber);
  add_output_flags(batch);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kInputError};
  }

  const auto fields = parse_fields(field);
  const auto format = as_json ? OutputFormat::Json : (as_tsv ? OutputFormat::Tsv : OutputFormat::Text);
  const int threads = effective_threads(parallel);

  if (report->parsed()) return cmd_report(input, fields, format, oracle_cap, out, err);
  if (sp->parsed()) return cmd_symbolic_power(input, power, out, err);
  if (cv->parsed()) {
    if (!table.empty()) return cmd_catalog_verify_cm36(oracle_cap, threads, out, err);
    if (!edge_critical_file.empty()) return cmd_catalog_verify_edge_critical(edge_critical_file, threads, out, err);
    err << "catalog-verify needs --table cm36 or --edge-critical <file>\n";
    return kInputError;
  }
  const auto batch_format = format == OutputFormat::Text ? OutputFormat::Tsv : format;
  return cmd_batch(input, fields, batch_format, oracle_cap, threads, out, err);
}

}  // namespace vnum::cli
