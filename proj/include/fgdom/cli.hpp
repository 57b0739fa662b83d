/**
 * @file cli.hpp
 * @brief Command-line front end: monodromy evaluation, domination experiment
 *        batches, network export, and the module verification suites.
 *
 * Exit codes: 0 success, 1 verification/domination failure, 2 configuration
 * or parse error (malformed JSON reports line/column). Every flag can also be
 * supplied through an environment variable with the FGDOM_ prefix
 * (e.g. FGDOM_SEED for --seed).
 */

#pragma once

namespace fgdom {

/// Entry point shared by the binary and the tests; argv[0] is the program
/// name, the rest is parsed as `fgdom <subcommand> [options]`.
int run_cli(int argc, const char* const* argv);

}  // namespace fgdom
