#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "minorforge/matrix.hpp"

namespace minorforge::cli {

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Verdicts of the Delta method and the hyperdeterminant-style conditions over F3
/// (pair values squares, orbit equations vanishing on all of P^1(F3)).
struct F3Comparison {
  std::size_t vectors = 0;
  std::size_t both_in = 0;
  std::size_t both_out = 0;
  std::size_t delta_only = 0;  // Delta method accepts, hyperdet-style rejects
  std::size_t hypdet_only = 0;
  std::vector<MinorVector> disagreements;  // first few
};

F3Comparison f3_compare(std::size_t n, std::size_t samples, std::uint64_t seed, bool exhaustive);

}  // namespace minorforge::cli
