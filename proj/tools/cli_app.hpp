#pragma once

#include <samelson/order.hpp>

#include <iosfwd>
#include <string>

namespace samelson::cli {

enum class Format { text, csv, json };

struct ComputeOptions {
    long m = 0;
    long n = 0;
    Format format = Format::text;
    bool verbose = false;
};

struct SweepOptions {
    long max_n = 0;
    Format format = Format::text;
    bool verbose = false;
};

struct ChernOptions {
    long j = 0;
    long k = 0;
    Format format = Format::text;
};

// Exit codes, kept distinct end to end:
//   0  everything verified
//   1  a mathematical mismatch / disagreement
//   2  usage error
inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

int run_compute(const ComputeOptions& options, std::ostream& out);

int run_sweep(const SweepOptions& options, std::ostream& out);
// Seam for fault-injection tests: sigma replaces the complexification table.
int run_sweep(const SweepOptions& options, std::ostream& out, const SigmaFn& sigma);

int run_chern(const ChernOptions& options, std::ostream& out);

/// Parses argv and dispatches to the subcommand. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Rational rendered for output records: "0", otherwise "p/q" with the
/// denominator always written ("1/1", "1/6", ...).
std::string fraction_str(const Rational& value);

}  // namespace samelson::cli
