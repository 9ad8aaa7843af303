#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "detscheme/complexes.hpp"
#include "detscheme/degree_piece.hpp"
#include "detscheme/determinantal.hpp"
#include "detscheme/errors.hpp"

namespace detscheme::cli {

namespace {

const std::vector<std::string> kCommands = {"classify", "minors",     "complex", "betti",     "cm-type",
                                            "annihilator", "flag",    "section", "canonical", "hilbert"};

void require(bool cond, const std::string& msg) {
    if (!cond) throw InputError(msg);
}

std::vector<int> int_list(const json& j, const std::string& key) {
    require(j.is_array(), key + " must be a list of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        require(v.is_number_integer(), key + " must be a list of integers");
        out.push_back(v.get<int>());
    }
    return out;
}

json height_json(const Height& h) {
    if (h.is_infinite()) return "inf";
    return h.value();
}

json poly_list(const std::vector<Polynomial>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

json scalars(const std::vector<FieldElement>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

json matrix_json(const HomogeneousMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) rows.push_back(poly_list(m.row(i)));
    return {{"entries", rows}, {"row_twists", m.target().twists()}, {"col_twists", m.source().twists()}};
}

json module_json(const GradedFreeModule& f) { return {{"rank", f.rank()}, {"twists", f.twists()}, {"text", f.to_string()}}; }

json witness_json(const std::optional<GeneralizedRowWitness>& w) {
    if (!w) return nullptr;
    json kept = json::array();
    for (const auto& k : w->deletion.kept) kept.push_back(scalars(k));
    return {{"literal_row", w->deletion.literal_row ? json(*w->deletion.literal_row) : json(nullptr)},
            {"deleted", scalars(w->deletion.deleted)},
            {"kept", kept},
            {"kept_height", height_json(w->kept_height)},
            {"attempts", w->attempts},
            {"verified", w->verified}};
}

json classification_json(const ClassificationReport& rep) {
    return {{"t", rep.t},
            {"r", rep.r},
            {"expected_codim", rep.expected_codim},
            {"good_threshold", rep.r + 2},
            {"actual_height", height_json(rep.actual_height)},
            {"submaximal_height", height_json(rep.submaximal_height)},
            {"standard", rep.is_standard},
            {"good", rep.is_good},
            {"empty_scheme", rep.empty_scheme}};
}

struct Context {
    const Problem& problem;
    const Options& opts;
    std::uint64_t seed;
    Report& report;

    int degree_bound(int fallback) const { return opts.max_degree.value_or(problem.d_max.value_or(fallback)); }
    DeterminantalPresentation presentation() const { return DeterminantalPresentation(problem.matrix); }
    void fail(const std::string& invariant) const {
        if (report.exit_code == 0) {
            report.exit_code = 1;
            report.failure = invariant;
        }
    }
};

json cmd_classify(Context& c) {
    const auto p = c.presentation();
    const auto rep = classify(p);
    json out = classification_json(rep);
    out["generalized_row"] = rep.is_good ? witness_json(find_generalized_row(p, c.seed)) : json(nullptr);
    return out;
}

json cmd_minors(Context& c) {
    const auto& m = c.problem.matrix;
    const int s = c.opts.size.value_or(m.rows());
    const auto I = minors(m, s);
    const auto gb = groebner_basis(I);
    json counts = json::object();
    for (auto [d, n] : minimal_generator_count(I)) counts[std::to_string(d)] = n;
    int total = 0;
    for (auto [d, n] : minimal_generator_count(I)) total += n;
    return {{"size", s},
            {"generators", poly_list(I.generators())},
            {"count", I.size()},
            {"groebner_basis", poly_list(gb.generators())},
            {"minimal_generators", counts},
            {"minimal_generator_total", total},
            {"height", height_json(height(I))}};
}

json acyclicity_json(const AcyclicityReport& be) {
    json entries = json::array();
    for (const auto& e : be.entries)
        entries.push_back({{"position", e.position},
                           {"expected_rank", e.expected_rank},
                           {"computed_rank", e.computed_rank},
                           {"minor_height", height_json(e.minor_height)},
                           {"pass", e.pass()}});
    return {{"pass", be.pass}, {"entries", entries},
            {"first_failure", be.first_failure ? json(*be.first_failure) : json(nullptr)}};
}

json cmd_complex(Context& c) {
    const auto& kind = c.opts.kind;
    require(kind == "en" || kind == "br", "--kind must be en or br");
    const auto cx = kind == "en" ? eagon_northcott(c.problem.matrix) : buchsbaum_rim(c.problem.matrix);
    const bool dd = verify_complex(cx);
    json modules = json::array(), diffs = json::array();
    for (int i = 0; i <= cx.length(); ++i) modules.push_back(module_json(cx.module(i)));
    for (int i = 1; i <= cx.length(); ++i) diffs.push_back(matrix_json(cx.differential(i)));
    json out = {{"kind", to_string(cx.kind())}, {"length", cx.length()}, {"ranks", cx.ranks()},
                {"modules", modules}, {"differentials", diffs}, {"d_squared_zero", dd}};
    if (!dd) {
        c.fail("d o d = 0");
        return out;
    }
    const auto be = buchsbaum_eisenbud(cx, c.seed);
    const int hi = c.degree_bound(default_d_max(c.problem.matrix));
    const auto ex = graded_exactness_check(cx, 0, hi);
    out["acyclicity"] = acyclicity_json(be);
    json first = nullptr;
    if (ex.first_failure) first = {{"position", ex.first_failure->first}, {"degree", ex.first_failure->second}};
    out["exactness"] = {{"lo", ex.lo}, {"hi", ex.hi}, {"exact", ex.exact}, {"first_failure", first}, {"h0", ex.h0}};
    if (ex.exact != be.pass) c.fail("degreewise exactness agrees with the Buchsbaum-Eisenbud verdict");
    return out;
}

json cmd_betti(Context& c) {
    const auto p = c.presentation();
    const auto en = eagon_northcott(p);
    const auto be = buchsbaum_eisenbud(en, c.seed);
    require(be.pass, "Eagon-Northcott complex is not acyclic at position " + std::to_string(be.first_failure.value_or(0)));
    const auto table = betti_table(en);
    json rows = json::array();
    for (const auto& [key, n] : table) rows.push_back({{"position", key.first}, {"degree", key.second}, {"count", n}});
    const int hi = c.degree_bound(default_d_max(p.matrix()));
    const std::size_t nv = p.ring()->nvars();
    const CokernelHilbert quotient(ideal_matrix(p.maximal_minors()));
    json hf = json::array();
    bool ok = true;
    for (int d = 0; d <= hi; ++d) {
        const long a = betti_hilbert(table, d, nv), b = quotient(d);
        hf.push_back({{"degree", d}, {"betti_sum", a}, {"hilbert", b}});
        ok = ok && a == b;
    }
    if (!ok) c.fail("Hilbert function equals the alternating Betti sum");
    return {{"table", rows}, {"ranks", betti_ranks(table)}, {"hilbert_check", hf}};
}

json cmd_cm_type(Context& c) {
    const auto p = c.presentation();
    return {{"t", p.t()}, {"r", p.r()}, {"cm_type", cm_type(p)}, {"binomial", binomial(p.r() + p.t() - 1, p.r())}};
}

json cmd_annihilator(Context& c) {
    const auto p = c.presentation();
    const int hi = c.degree_bound(8);
    const auto rep = verify_annihilator(p, hi);
    json dims = json::array();
    for (std::size_t d = 0; d < rep.dims.size(); ++d)
        dims.push_back({{"degree", d}, {"annihilator", rep.dims[d].first}, {"ideal", rep.dims[d].second}});
    if (!rep.pass()) c.fail("annihilator equals the ideal of maximal minors (" + rep.failed_direction + ")");
    return {{"max_degree", hi},
            {"contains_minors", rep.contains_minors},
            {"inside_minors", rep.inside_minors},
            {"failed_degree", rep.failed_degree ? json(*rep.failed_degree) : json(nullptr)},
            {"dims", dims}};
}

json cmd_flag(Context& c) {
    const auto f = build_flag(c.presentation(), c.seed);
    json stages = json::array();
    for (const auto& s : f.stages)
        stages.push_back({{"matrix", matrix_json(s.presentation.matrix())},
                          {"expected_codim", s.report.expected_codim},
                          {"actual_height", height_json(s.report.actual_height)},
                          {"good", s.report.is_good},
                          {"contained_in_previous", s.contained_in_previous}});
    if (!f.verified()) c.fail("flag stages good with codims descending and ideals nested");
    return {{"steps", f.steps()}, {"stages", stages}, {"verified", f.verified()}};
}

json cmd_section(Context& c) {
    const auto p = c.presentation();
    std::optional<DeterminantalPresentation> psi;
    RowDeletion del;
    if (c.opts.row) {
        require(*c.opts.row >= 0 && *c.opts.row < p.t(), "--row out of range");
        psi = p;
        del = RowDeletion::literal(p.t(), *c.opts.row, p.ring()->field());
    } else {
        psi = augment_general_row(p, std::nullopt, c.seed);
        del = RowDeletion::literal(psi->t(), psi->t() - 1, p.ring()->field());
    }
    const auto rep = classify(*psi);
    const int hi = c.degree_bound(10);
    const auto seq = section_sequence(*psi, del, hi);
    json degrees = json::array();
    for (const auto& d : seq.degrees)
        degrees.push_back({{"degree", d.degree}, {"hf_s", d.hf_s}, {"hf_quotient", d.hf_quotient}, {"hf_x", d.hf_x}});
    if (!seq.verified) c.fail("Hilbert functions add along the section sequence");
    return {{"augmented", !c.opts.row},
            {"psi", matrix_json(seq.psi)},
            {"psi_good", rep.is_good},
            {"psi_codim", rep.expected_codim},
            {"phi", matrix_json(seq.phi)},
            {"ideal_s", poly_list(seq.ideal_s.generators())},
            {"twist", seq.twist},
            {"degrees", degrees},
            {"verified", seq.verified},
            {"first_failure", seq.first_failure ? json(*seq.first_failure) : json(nullptr)}};
}

json cmd_canonical(Context& c) {
    const int hi = c.degree_bound(10);
    const auto w = canonical_module(c.presentation(), hi);
    if (!w.shift) c.fail("a unique aligning shift exists");
    return {{"presentation", matrix_json(w.presentation)},
            {"shift", w.shift ? json(*w.shift) : json(nullptr)},
            {"matching_shifts", w.matching_shifts},
            {"checked_up_to", w.checked_up_to},
            {"minimal_generators", w.minimal_generators},
            {"cyclic", w.cyclic()}};
}

json cmd_hilbert(Context& c) {
    const auto& m = c.problem.matrix;
    const int hi = c.degree_bound(default_d_max(m));
    const CokernelHilbert coker(m);
    json cok = json::array(), quot = json::array();
    for (int d = 0; d <= hi; ++d) cok.push_back(coker(d));
    if (m.rows() <= m.cols()) {
        const CokernelHilbert q(ideal_matrix(minors(m, m.rows())));
        for (int d = 0; d <= hi; ++d) quot.push_back(q(d));
    }
    return {{"max_degree", hi}, {"cokernel", cok}, {"quotient", quot}};
}

json dispatch(Context& c) {
    const auto& cmd = c.opts.command;
    if (cmd == "classify") return cmd_classify(c);
    if (cmd == "minors") return cmd_minors(c);
    if (cmd == "complex") return cmd_complex(c);
    if (cmd == "betti") return cmd_betti(c);
    if (cmd == "cm-type") return cmd_cm_type(c);
    if (cmd == "annihilator") return cmd_annihilator(c);
    if (cmd == "flag") return cmd_flag(c);
    if (cmd == "section") return cmd_section(c);
    if (cmd == "canonical") return cmd_canonical(c);
    if (cmd == "hilbert") return cmd_hilbert(c);
    throw InputError("unknown command '" + cmd + "'");
}

void render(std::ostream& os, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [k, v] : j.items()) {
        const bool nested = v.is_object() || (v.is_array() && !v.empty() && v.front().is_object());
        if (!nested) {
            os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        } else if (v.is_object()) {
            os << pad << k << ":\n";
            render(os, v, indent + 2);
        } else {
            os << pad << k << ":\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                os << pad << "  [" << i << "]\n";
                render(os, v[i], indent + 4);
            }
        }
    }
}

}  // namespace

Problem load_problem(const json& doc, const std::string& fallback_name) {
    try {
        require(doc.is_object(), "problem must be a JSON object");
        require(doc.contains("schema") && doc["schema"].is_number_integer() && doc["schema"].get<int>() == kSchemaVersion,
                "schema must be " + std::to_string(kSchemaVersion));
        for (const auto& [k, v] : doc.items())
            require(k == "schema" || k == "name" || k == "description" || k == "ring" || k == "matrix" || k == "seed" ||
                        k == "d_max" || k == "examples" || k == "generator",
                    "unknown key '" + k + "'");
        require(doc.contains("ring") && doc["ring"].is_object(), "missing ring block");
        require(doc.contains("matrix") && doc["matrix"].is_object(), "missing matrix block");
        const auto& rb = doc["ring"];
        require(rb.contains("vars") && rb["vars"].is_array(), "ring.vars must be a list");
        std::vector<std::string> vars;
        for (const auto& v : rb["vars"]) {
            require(v.is_string(), "ring.vars must be strings");
            vars.push_back(v.get<std::string>());
        }
        const Field field = Field::parse(rb.value("field", std::string("QQ")));
        const std::string order = rb.value("order", std::string("grevlex"));
        require(order == "grevlex" || order == "lex", "ring.order must be grevlex or lex");
        auto ring = PolyRing::create(vars, field, order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex());

        const auto& mb = doc["matrix"];
        require(mb.contains("entries") && mb["entries"].is_array() && !mb["entries"].empty(),
                "matrix.entries must be a nonempty list of rows");
        std::vector<std::vector<Polynomial>> rows;
        for (const auto& row : mb["entries"]) {
            require(row.is_array(), "matrix.entries rows must be lists");
            rows.emplace_back();
            for (const auto& e : row) {
                require(e.is_string(), "matrix entries must be polynomial strings");
                rows.back().push_back(parse_polynomial(e.get<std::string>(), ring));
            }
            require(rows.back().size() == rows.front().size(), "matrix.entries is not rectangular");
        }
        require(!rows.front().empty(), "matrix needs at least one column");
        const bool has_rt = mb.contains("row_twists"), has_ct = mb.contains("col_twists");
        require(has_rt == has_ct, "matrix.row_twists and matrix.col_twists must be given together");
        auto m = has_rt ? HomogeneousMatrix(ring, GradedFreeModule(int_list(mb["row_twists"], "matrix.row_twists")),
                                            GradedFreeModule(int_list(mb["col_twists"], "matrix.col_twists")), rows)
                        : HomogeneousMatrix::infer(ring, rows);

        Problem p{doc.value("name", fallback_name), ring, std::move(m), std::nullopt, std::nullopt, json::array()};
        if (doc.contains("seed")) {
            require(doc["seed"].is_number_integer() && doc["seed"].get<long long>() >= 0, "seed must be an unsigned integer");
            p.seed = doc["seed"].get<std::uint64_t>();
        }
        if (doc.contains("d_max")) {
            require(doc["d_max"].is_number_integer() && doc["d_max"].get<int>() > 0, "d_max must be a positive integer");
            p.d_max = doc["d_max"].get<int>();
        }
        if (doc.contains("examples")) {
            require(doc["examples"].is_array(), "examples must be a list");
            for (const auto& e : doc["examples"]) options_from_json(e);
            p.examples = doc["examples"];
        }
        return p;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed problem: ") + e.what());
    }
}

Problem load_problem_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
    return load_problem(doc, path.stem().string());
}

Options options_from_json(const json& j) {
    require(j.is_object() && j.contains("command") && j["command"].is_string(), "example entries need a command");
    Options o;
    o.command = j["command"].get<std::string>();
    require(std::find(kCommands.begin(), kCommands.end(), o.command) != kCommands.end(),
            "unknown command '" + o.command + "'");
    auto opt_int = [&](const char* key, std::optional<int>& dst) {
        if (!j.contains(key)) return;
        require(j[key].is_number_integer(), std::string(key) + " must be an integer");
        dst = j[key].get<int>();
    };
    opt_int("max_degree", o.max_degree);
    opt_int("size", o.size);
    opt_int("row", o.row);
    if (j.contains("seed")) {
        require(j["seed"].is_number_integer() && j["seed"].get<long long>() >= 0, "seed must be an unsigned integer");
        o.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("kind")) {
        require(j["kind"].is_string(), "kind must be a string");
        o.kind = j["kind"].get<std::string>();
    }
    return o;
}

json options_to_json(const Options& o) {
    json j = {{"command", o.command}};
    if (o.max_degree) j["max_degree"] = *o.max_degree;
    if (o.size) j["size"] = *o.size;
    if (o.row) j["row"] = *o.row;
    if (o.seed) j["seed"] = *o.seed;
    if (o.command == "complex") j["kind"] = o.kind;
    return j;
}

json to_json(const Report& r, bool with_timing) {
    json j = {{"command", r.command}, {"problem", r.problem}, {"seed", r.seed},
              {"exit_code", r.exit_code}, {"failure", r.failure}, {"result", r.result}};
    if (with_timing) j["timing_ms"] = r.timing_ms;
    return j;
}

Report report_from_json(const json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.problem = j.at("problem").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.exit_code = j.at("exit_code").get<int>();
    r.failure = j.at("failure").get<std::string>();
    r.result = j.at("result");
    r.timing_ms = j.value("timing_ms", 0.0);
    return r;
}

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << r.command << " [" << r.problem << ", seed " << r.seed << "]: ";
    if (r.exit_code == 0) os << "ok\n";
    else os << (r.exit_code == 1 ? "VERIFICATION FAILED: " : "INPUT ERROR: ") << r.failure << '\n';
    render(os, r.result, 2);
    return os.str();
}

Report run(const Options& opts, const Problem& problem) {
    Report rep;
    rep.command = opts.command;
    if (opts.command == "complex") rep.command += " --kind " + opts.kind;
    rep.problem = problem.name;
    rep.seed = opts.seed.value_or(problem.seed.value_or(kDefaultSeed));
    const auto start = std::chrono::steady_clock::now();
    Context ctx{problem, opts, rep.seed, rep};
    try {
        rep.result = dispatch(ctx);
    } catch (const InputError& e) {
        rep.exit_code = 2;
        rep.failure = e.what();
        rep.result = json::object();
    } catch (const VerificationError& e) {
        rep.exit_code = 1;
        rep.failure = e.what();
        rep.result = json::object();
    }
    rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

int run_examples(const std::filesystem::path& dir, bool bless, bool as_json, std::ostream& out) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw InputError("fixture directory " + dir.string() + " not found");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError("no fixtures in " + dir.string());
    const fs::path golden_dir = dir / "golden";
    if (bless) fs::create_directories(golden_dir);

    int status = 0;
    json summary = json::array();
    for (const auto& f : files) {
        const auto problem = load_problem_file(f);
        json reports = json::array();
        for (const auto& e : problem.examples) reports.push_back(to_json(run(options_from_json(e), problem), false));
        const fs::path golden = golden_dir / (problem.name + ".json");
        std::string verdict;
        if (bless) {
            std::ofstream(golden) << reports.dump(2) << '\n';
            verdict = "BLESSED";
        } else if (!fs::exists(golden)) {
            verdict = "MISSING";
        } else {
            std::ifstream in(golden);
            verdict = json::parse(in) == reports ? "PASS" : "FAIL";
        }
        if (verdict == "FAIL" || verdict == "MISSING") status = 1;
        summary.push_back({{"fixture", problem.name}, {"commands", reports.size()}, {"verdict", verdict}});
        if (!as_json) out << verdict << ' ' << problem.name << " (" << reports.size() << " commands)\n";
    }
    if (as_json) out << json{{"command", "examples"}, {"exit_code", status}, {"fixtures", summary}}.dump(2) << '\n';
    return status;
}

}  // namespace detscheme::cli
