#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "detscheme/graded.hpp"

namespace detscheme::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::uint64_t kDefaultSeed = 1;

struct Problem {
    std::string name;
    RingPtr ring;
    HomogeneousMatrix matrix;
    std::optional<std::uint64_t> seed;
    std::optional<int> d_max;
    /// Commands replayed by `examples` (the "examples" key, may be empty).
    json examples = json::array();
};

/// Throws InputError on any schema violation or inhomogeneous matrix.
Problem load_problem(const json& doc, const std::string& fallback_name = "problem");
Problem load_problem_file(const std::filesystem::path& path);

struct Options {
    std::string command;
    std::optional<std::uint64_t> seed;
    std::optional<int> max_degree;
    std::optional<int> size;
    std::optional<int> row;
    std::string kind = "en";
};

/// {"command": ..., "max_degree": ...} as stored in a fixture's "examples".
Options options_from_json(const json& j);
json options_to_json(const Options& o);

struct Report {
    std::string command;
    std::string problem;
    std::uint64_t seed = kDefaultSeed;
    int exit_code = 0;
    /// Names the failed invariant (exit 1) or the input problem (exit 2).
    std::string failure;
    json result = json::object();
    double timing_ms = 0;

    friend bool operator==(const Report&, const Report&) = default;
};

json to_json(const Report& r, bool with_timing = true);
Report report_from_json(const json& j);
std::string render_text(const Report& r);

/// Never throws for library errors: they become exit codes 1/2.
Report run(const Options& opts, const Problem& problem);

/// Replays every fixture in `dir` against dir/golden/<name>.json.
/// Returns 0 when all match (or after blessing), 1 otherwise.
int run_examples(const std::filesystem::path& dir, bool bless, bool as_json, std::ostream& out);

}  // namespace detscheme::cli
