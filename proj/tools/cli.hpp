#pragma once

#include "latenergy/lattice.hpp"
#include "latenergy/spectrum.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace latenergy::cli {

enum class Command { Lattice, Spectrum, Energy, Verify, Constant, Converge };
enum class OutputFormat { Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    Command command = Command::Lattice;
    std::optional<Family> family;
    std::size_t hypercubic_dim = 0;  // > 0 selects the hypercubic integrand for `constant`
    std::optional<Boundary> boundary;
    std::size_t rows = 0;
    std::size_t cols = 0;
    double tol = 1e-4;
    std::optional<OutputFormat> format;
    std::optional<std::string> output_path;
    std::size_t size_cap = kDefaultSizeCap;
    bool force_numeric = false;
    std::size_t max_n = 128;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws UsageError on invalid arguments. Returns nullopt when the parser
/// already handled the invocation (e.g. --help).
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Executes a validated config. Data goes to `out` (or the output file),
/// diagnostics to `err`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-status mapping.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace latenergy::cli
