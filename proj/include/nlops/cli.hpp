// Batch command-line front end: generation, verification, graph export,
// isomorphism and report commands with stable exit codes (0 success or
// positive verdict, 1 verification-negative, 2 usage/IO error).
#pragma once

#include <string>
#include <vector>

#include "nlops/certify.hpp"

namespace nlops {

int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);  // args without argv[0]

// Report serialization:
//   {"alice": {"dim": int, "verdict": "trivial_only"|"nontrivial_exists",
//              "max_residual": real}, "bob": {...},
//    "certified_nonlocal": bool}
// Witness matrices are attached as nested [re, im] grids when present.
std::string report_to_json(const NonlocalityReport& rep,
                           bool include_witness = true);

}  // namespace nlops
