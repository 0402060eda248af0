#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <qseries/macdonald.hpp>
#include <qseries/rational.hpp>

namespace qseries::cli {

enum class Command { series, character, verify, suite };
enum class OutputFormat { text, structured };

struct RunConfig {
    Command command = Command::series;
    std::string name; // series name or identity name
    unsigned power = 1;
    int s = 0;
    int t = 0;
    int k = 0;
    int m = 0;
    int n = 0;
    std::string form = "double";
    Rational order = 20;
    bool order_given = false;
    OutputFormat format = OutputFormat::text;
    std::optional<std::string> output_path;
    std::optional<std::string> manifest_path;
    std::optional<int> max_st;
    bool window_audit = false;
};

// Parses argv into a config. Throws std::invalid_argument with a usage message on bad input;
// returns std::nullopt when help was requested (the help text goes to `out`).
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

// One expanded suite job.
struct SuiteJob {
    IdentitySpec spec;
    Rational order;
};

struct SuiteManifest {
    std::string version;
    std::vector<SuiteJob> jobs;
};

// Reads a manifest file; `max_st` and `order` override the grid bound and order of every entry.
SuiteManifest load_manifest(const std::string& path, std::optional<int> max_st, std::optional<Rational> order);

std::string default_manifest_path();

// 0 when every report matches; otherwise prints the first failing report to `err` and returns 1.
int report_status(const std::vector<VerificationReport>& reports, std::ostream& err);

// Exit status: 0 when every report matches (or a series was emitted), 1 on a mismatch,
// 2 on a usage or validation error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full entry point: parse then run.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qseries::cli
