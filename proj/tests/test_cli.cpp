#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "detscheme/errors.hpp"

using namespace detscheme;
using namespace detscheme::cli;
namespace fs = std::filesystem;

namespace {

using Grid = std::vector<std::vector<std::string>>;

json problem(const Grid& entries, json extra = json::object()) {
    json j = {{"schema", 1},
              {"ring", {{"vars", {"x0", "x1", "x2", "x3"}}, {"field", "QQ"}}},
              {"matrix", {{"entries", entries}}}};
    for (auto& [k, v] : extra.items()) j[k] = v;
    return j;
}

Problem nongood() { return load_problem(problem({{"x1", "x2", "x3", "0"}, {"0", "x1", "x2", "x3"}})); }
Problem curve() { return load_problem(problem({{"x0", "x1", "x2"}, {"0", "x0", "x3"}})); }

Report run_cmd(const Problem& p, const std::string& cmd, Options o = {}) {
    o.command = cmd;
    return run(o, p);
}

int shell(const std::string& args) {
    const int rc = std::system((std::string(DETSCHEME_BINARY) + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

}  // namespace

TEST(Problem, LoadsAndInfersTwists) {
    auto p = load_problem(problem({{"x0", "x1^2"}, {"x2", "x3^2"}}, {{"seed", 9}, {"d_max", 6}}));
    EXPECT_EQ(p.matrix.target(), GradedFreeModule({0, 0}));
    EXPECT_EQ(p.matrix.source(), GradedFreeModule({1, 2}));
    EXPECT_EQ(p.seed, std::optional<std::uint64_t>(9));
    EXPECT_EQ(p.d_max, std::optional<int>(6));

    auto q = load_problem(problem({{"x0", "x1"}}, {{"matrix", {{"entries", Grid{{"x0", "x1"}}}, {"row_twists", {1}}, {"col_twists", {2, 2}}}}}));
    EXPECT_EQ(q.matrix.target(), GradedFreeModule({1}));

    auto f = load_problem(problem({{"x0", "x1"}}, {{"ring", {{"vars", {"a", "b", "c"}}, {"field", "Fp:7"}, {"order", "lex"}}},
                                                   {"matrix", {{"entries", Grid{{"a", "8*b"}}}}}}));
    EXPECT_EQ(f.ring->field(), Field::prime(7));
    EXPECT_EQ(f.matrix.entry(0, 1).to_string(), "b");
}

TEST(Problem, SchemaViolations) {
    auto bad = [](json j) { EXPECT_THROW(load_problem(j), InputError) << j.dump(); };
    auto base = problem({{"x0", "x1"}});
    auto j = base;
    j.erase("schema");
    bad(j);
    j = base;
    j["schema"] = 2;
    bad(j);
    j = base;
    j["colour"] = "red";
    bad(j);
    bad(problem({{"x0", "x1"}, {"x2"}}));
    bad(problem({{"x0", "x1 +"}}));
    bad(problem({{"x0", "y7"}}));
    bad(problem({{"x0 + x1^2", "x1"}}));
    bad(problem({{"x0", "x1"}, {"x1", "x2^2"}}));
    j = base;
    j["ring"]["field"] = "Fp:8";
    bad(j);
    j = base;
    j["ring"]["order"] = "revlex";
    bad(j);
    j = base;
    j["matrix"]["row_twists"] = {0};
    bad(j);
    j = base;
    j["matrix"]["row_twists"] = {0};
    j["matrix"]["col_twists"] = {1, 2};
    bad(j);
    j = base;
    j["seed"] = -3;
    bad(j);
    j = base;
    j["d_max"] = 0;
    bad(j);
    j = base;
    j["examples"] = json::array({json{{"command", "frobnicate"}}});
    bad(j);
}

TEST(Run, ClassifyReport) {
    auto r = run_cmd(nongood(), "classify");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.result["standard"], true);
    EXPECT_EQ(r.result["good"], false);
    EXPECT_EQ(r.result["actual_height"], 3);
    EXPECT_EQ(r.result["submaximal_height"], 3);
    EXPECT_EQ(r.result["expected_codim"], 3);
    EXPECT_EQ(r.result["good_threshold"], 4);
}

TEST(Run, CommandsOnCurve) {
    auto p = curve();
    EXPECT_EQ(run_cmd(p, "cm-type").result["cm_type"], 2);
    Options o;
    o.kind = "br";
    EXPECT_EQ(run_cmd(p, "complex", o).result["ranks"], json({2, 3, 1}));
    o.max_degree = 4;
    auto h = run_cmd(p, "hilbert", o);
    EXPECT_EQ(h.result["quotient"], json({1, 4, 7, 10, 13}));
    auto s = run_cmd(p, "section");
    EXPECT_EQ(s.exit_code, 0);
    EXPECT_EQ(s.result["verified"], true);
    Options row;
    row.row = 1;
    EXPECT_EQ(run_cmd(p, "section", row).result["augmented"], false);
    auto m = run_cmd(nongood(), "minors", Options{.size = 1});
    EXPECT_EQ(m.result["size"], 1);
    EXPECT_EQ(m.result["count"], 6);
}

TEST(Run, ExitCodes) {
    auto deficient = load_problem(problem({{"x0", "x1", "0", "0"}, {"0", "x0", "x1", "0"}}));
    for (const char* cmd : {"cm-type", "annihilator", "canonical", "betti", "flag"}) {
        auto r = run_cmd(deficient, cmd);
        EXPECT_EQ(r.exit_code, 2) << cmd;
        EXPECT_FALSE(r.failure.empty());
    }
    EXPECT_EQ(run_cmd(nongood(), "canonical").exit_code, 2);
    EXPECT_EQ(run_cmd(nongood(), "flag").exit_code, 2);
    EXPECT_EQ(run_cmd(nongood(), "minors", Options{.size = 3}).exit_code, 2);
    EXPECT_EQ(run_cmd(nongood(), "section", Options{.row = 5}).exit_code, 2);
    EXPECT_EQ(run_cmd(nongood(), "nope").exit_code, 2);
    // every augmentation has all maximal minors divisible by x0
    auto stuck = load_problem(problem({{"x0", "x0", "x0"}}));
    auto r = run_cmd(stuck, "section");
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.failure.find("not good"), std::string::npos);
    // EN of the deficient matrix is a complex but not acyclic: a verdict, not a failure
    auto c = run_cmd(deficient, "complex");
    EXPECT_EQ(c.exit_code, 0);
    EXPECT_EQ(c.result["acyclicity"]["pass"], false);
    EXPECT_EQ(c.result["exactness"]["exact"], false);
}

TEST(Report, RoundTripAndDeterminism) {
    for (const char* cmd : {"classify", "complex", "betti", "section", "canonical", "flag"}) {
        auto a = run_cmd(curve(), cmd, Options{.seed = 17});
        auto back = report_from_json(json::parse(to_json(a).dump()));
        EXPECT_EQ(back, a) << cmd;
        auto b = run_cmd(curve(), cmd, Options{.seed = 17});
        EXPECT_EQ(to_json(a, false).dump(), to_json(b, false).dump()) << cmd;
        EXPECT_EQ(a.seed, 17u);
    }
    auto text = render_text(run_cmd(curve(), "classify"));
    EXPECT_NE(text.find("classify [problem, seed 1]: ok"), std::string::npos);
    EXPECT_NE(text.find("good: true"), std::string::npos);
}

TEST(Report, SeedPrecedence) {
    auto p = load_problem(problem({{"x0", "x1", "x2"}, {"0", "x0", "x3"}}, {{"seed", 42}}));
    EXPECT_EQ(run_cmd(p, "classify").seed, 42u);
    EXPECT_EQ(run_cmd(p, "classify", Options{.seed = 3}).seed, 3u);
}

TEST(Examples, GoldensMatch) {
    std::ostringstream out;
    EXPECT_EQ(run_examples(DETSCHEME_FIXTURE_DIR, false, false, out), 0) << out.str();
    EXPECT_EQ(out.str().find("FAIL"), std::string::npos);
}

TEST(Examples, DetectsTamperingAndBlesses) {
    const fs::path dir = fs::temp_directory_path() / "detscheme_examples_test";
    fs::remove_all(dir);
    fs::create_directories(dir / "golden");
    fs::copy_file(fs::path(DETSCHEME_FIXTURE_DIR) / "ci_line.json", dir / "ci_line.json");
    std::ostringstream out;
    EXPECT_EQ(run_examples(dir, false, false, out), 1);  // missing golden
    EXPECT_EQ(run_examples(dir, true, false, out), 0);
    EXPECT_EQ(run_examples(dir, false, false, out), 0);
    json g;
    {
        std::ifstream in(dir / "golden" / "ci_line.json");
        g = json::parse(in);
    }
    g[0]["result"]["good"] = false;
    std::ofstream(dir / "golden" / "ci_line.json") << g.dump(2);
    std::ostringstream out2;
    EXPECT_EQ(run_examples(dir, false, true, out2), 1);
    EXPECT_EQ(json::parse(out2.str())["fixtures"][0]["verdict"], "FAIL");
    fs::remove_all(dir);
}

TEST(Binary, ExitCodeContract) {
    const std::string fx = DETSCHEME_FIXTURE_DIR;
    EXPECT_EQ(shell("classify " + fx + "/double_point.json --json"), 0);
    EXPECT_EQ(shell("cm-type " + fx + "/hilbert_burch_curve.json"), 0);
    EXPECT_EQ(shell("canonical " + fx + "/double_point.json"), 2);
    EXPECT_EQ(shell("classify /nonexistent/problem.json"), 2);
    EXPECT_EQ(shell("classify"), 2);
    EXPECT_EQ(shell("frobnicate " + fx + "/ci_line.json"), 2);
    EXPECT_EQ(shell("complex " + fx + "/ci_line.json --kind xx"), 2);

    const fs::path stuck = fs::temp_directory_path() / "detscheme_stuck.json";
    std::ofstream(stuck) << problem({{"x0", "x0", "x0"}}).dump();
    EXPECT_EQ(shell("section " + stuck.string()), 1);
    fs::remove(stuck);
}
