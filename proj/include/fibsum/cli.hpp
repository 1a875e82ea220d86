#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fibsum/identities.hpp"
#include "fibsum/report.hpp"

namespace fibsum::cli {

enum class Command { Verify, Audit, Tables, Bench };

inline constexpr std::int64_t kNMaxCap = 4096;
inline constexpr std::int64_t kPMaxCap = 64;
inline constexpr std::int64_t kBenchNFloor = 256;

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;        // a suite, oracle or bench equality check failed
inline constexpr int kUsage = 2;          // invalid configuration
inline constexpr int kPrintedFormFail = 3;  // a printed formula disagrees with the oracle
inline constexpr int kIo = 4;             // report could not be written
}  // namespace exit_code

struct RunConfig {
    Command command = Command::Audit;
    std::vector<IdentityFamily> families;  // expanded; empty means the command default
    std::int64_t n_max = 16;
    std::int64_t p_max = 2;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::string> output_path;
    bool parallel = false;
    bool unsafe_no_caps = false;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts exact tags (T4_ODD, REMARK1_7) and the groups all, REMARK1, PROP1
// and T4. Result is sorted and free of duplicates. ConfigError on an unknown name.
std::vector<IdentityFamily> expand_families(std::span<const std::string> names);

// Validates caps and command-specific rules. ConfigError on violation.
void validate(const RunConfig& config);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_audit(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_tables(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full front end: parses args (without the program name), runs the command,
// writes the report to `out` or --out and diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fibsum::cli
