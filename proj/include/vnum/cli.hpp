#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vnum/exact_rank.hpp"

namespace vnum::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kConsistencyError = 2,
  kFixtureFailure = 3,
};

enum class OutputFormat { Text, Json, Tsv };

/// "q", "f2" or "both".
std::vector<Field> parse_fields(const std::string& spec);

/// Worker count: VNUM_THREADS when set to a positive integer, else `requested`
/// (at least 1).
int effective_threads(int requested);

int cmd_report(const std::string& path, const std::vector<Field>& fields, OutputFormat format, int oracle_cap,
               std::ostream& out, std::ostream& err);
int cmd_symbolic_power(const std::string& path, int k, std::ostream& out, std::ostream& err);
int cmd_catalog_verify_cm36(int oracle_cap, int threads, std::ostream& out, std::ostream& err);
/// Counts connected edge-critical graphs per vertex count in a graph6 stream.
int cmd_catalog_verify_edge_critical(const std::string& path, int threads, std::ostream& out, std::ostream& err);
/// Each line of `path` is a file name or a graph6 string.
int cmd_batch(const std::string& path, const std::vector<Field>& fields, OutputFormat format, int oracle_cap,
              int threads, std::ostream& out, std::ostream& err);

/// Full command line (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vnum::cli
