#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace coxnerve {

struct RunConfig {
  std::string command;       // nerve, subdivide, octahedralize, homology, roots, report, verify, example
  std::string input_path;    // "-" reads stdin; empty means none
  std::string output_path;   // empty means stdout
  bool assume_kpi1 = false;
  int max_generators = 16;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string subset;        // roots: comma-separated generator names
  std::string complex = "subdivision";  // octahedralize: nerve | subdivision
  int random = 0;            // verify: number of seeded random matrices
  int random_max_generators = 6;
  bool corpus = false;       // verify: include the builtin corpus
  std::string example;       // example: builtin name
};

/// Exit status: 0 success, 1 validation/input error, 2 a structural check
/// failed (which the theory says cannot happen).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and calls run().
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxnerve
