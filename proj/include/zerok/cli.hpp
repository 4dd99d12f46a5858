#pragma once

// Command-line entry point.  Subcommands: graph, tiling, raam, nq (family
// K-theory), complex (homology of an explicit complex), check-covers (cover
// system checks).  Exit codes: 0 success, 1 invalid input, 2 mathematical
// refusal (reported on stderr).

namespace zerok {

int run_cli(int argc, const char* const* argv);

}  // namespace zerok
