// Command-line surface of the toolkit. Every invocation prints exactly one
// JSON document to stdout:
//   {"status":"ok","payload":...,"summary":"..."}   with exit code 0, or
//   {"status":"error","code":...,"message":...}     with exit code 1,
// and usage problems exit with code 2. Output is byte-identical for
// identical invocations; --verbose adds a human log on stderr only.

#include <array>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gint/error.hpp"
#include "gint/expr.hpp"
#include "gint/gadgets.hpp"
#include "gint/json_io.hpp"
#include "gint/lucas.hpp"
#include "gint/poly.hpp"
#include "gint/reduction.hpp"
#include "gint/suites.hpp"

namespace {

using gint::Json;

bool g_verbose = false;

void emit_ok(const Json& payload, const std::string& summary) {
    Json envelope{{"status", "ok"}, {"payload", payload}, {"summary", summary}};
    std::cout << envelope.dump(2) << "\n";
}

[[noreturn]] void emit_error_and_exit(const std::string& code, const std::string& message,
                                      int exit_code) {
    Json envelope{{"status", "error"}, {"code", code}, {"message", message}};
    std::cout << envelope.dump(2) << "\n";
    std::exit(exit_code);
}

gint::Int parse_cli_int(const std::string& text, const std::string& flag) {
    try {
        return gint::Int(text);
    } catch (const std::invalid_argument&) {
        emit_error_and_exit("UsageError", "not an integer for " + flag + ": \"" + text + "\"", 2);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) gint::raise(gint::ErrorCode::BadInput, "cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) gint::raise(gint::ErrorCode::BadInput, "cannot write file: " + path);
    out << content;
}

class Stopwatch {
  public:
    explicit Stopwatch(std::string label) : label_(std::move(label)) {}
    ~Stopwatch() {
        if (!g_verbose) return;
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        std::cerr << label_ << ": "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
                  << " ms\n";
    }

  private:
    std::string label_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ---- subcommand handlers ---------------------------------------------------

void cmd_lucas(const std::string& a_text, const std::string& b_text, std::uint64_t n,
               const std::string& mod_text) {
    const gint::LucasParams params{parse_cli_int(a_text, "--A"), parse_cli_int(b_text, "--B")};
    gint::LucasPair pair;
    Json payload;
    if (mod_text.empty()) {
        pair = gint::lucas_pair(params, n);
        payload = Json{{"A", gint::to_decimal(params.A)},
                       {"B", gint::to_decimal(params.B)},
                       {"n", n},
                       {"low", gint::to_decimal(pair.low)},
                       {"high", gint::to_decimal(pair.high)}};
    } else {
        const gint::Int modulus = parse_cli_int(mod_text, "--mod");
        pair = gint::lucas_pair_mod(params, n, modulus);
        payload = Json{{"A", gint::to_decimal(params.A)},
                       {"B", gint::to_decimal(params.B)},
                       {"n", n},
                       {"mod", gint::to_decimal(modulus)},
                       {"low", gint::to_decimal(pair.low)},
                       {"high", gint::to_decimal(pair.high)}};
    }
    emit_ok(payload, "u_n and u_{n+1} at n=" + std::to_string(n));
}

void cmd_lucas_index(const std::string& a_text, const std::string& b_text,
                     const std::string& mod_text, bool unit) {
    const gint::LucasParams params{parse_cli_int(a_text, "--A"), parse_cli_int(b_text, "--B")};
    const gint::Int modulus = parse_cli_int(mod_text, "--mod");
    const std::uint64_t index = gint::find_zero_index(params, modulus, unit);
    Json payload{{"A", gint::to_decimal(params.A)},
                 {"B", gint::to_decimal(params.B)},
                 {"mod", gint::to_decimal(modulus)},
                 {"unit", unit},
                 {"index", index}};
    emit_ok(payload, "smallest zero index is " + std::to_string(index));
}

void cmd_witness(const std::string& z_text) {
    const gint::Int z = parse_cli_int(z_text, "--z");
    const gint::IntegralityWitness witness = gint::make_integrality_witness(z);
    emit_ok(gint::witness_to_json(witness),
            "integrality witness for z=" + gint::to_decimal(z) + " with n=" +
                std::to_string(witness.diagnostics.n));
}

void cmd_verify(const std::string& path) {
    Json doc = gint::parse_json(read_file(path));
    // Accept either a bare witness object or a whole `gint witness` envelope.
    if (doc.is_object() && doc.contains("payload")) doc = doc["payload"];
    const gint::WitnessValues values = gint::witness_values_from_json(doc);
    const gint::Int z =
        gint::verify_integrality_witness(values.v, values.w, values.x, values.y, values.z);
    emit_ok(Json{{"z", gint::to_decimal(z)}},
            "witness verifies: z=" + gint::to_decimal(z) + " is a rational integer");
}

void cmd_nonzero(const std::string& m_text) {
    const gint::Int m = parse_cli_int(m_text, "--m");
    const auto [s, t] = gint::nonzero_witness(m);
    Json payload{{"m", gint::to_decimal(m)},
                 {"s", gint::to_decimal(s)},
                 {"t", gint::to_decimal(t)}};
    emit_ok(payload, "(2s+1)(3t+1) factorization of " + gint::to_decimal(m));
}

void cmd_pell(const std::string& a_text, const std::string& bound_text) {
    const gint::Int a = parse_cli_int(a_text, "--A");
    const gint::Int bound = parse_cli_int(bound_text, "--bound");
    Stopwatch timer("pell enumeration");
    const auto solutions = gint::enumerate_pell(a, bound);
    Json payload{{"A", gint::to_decimal(a)},
                 {"bound", gint::to_decimal(bound)},
                 {"count", solutions.size()},
                 {"solutions", gint::pell_solutions_to_json(solutions)}};
    emit_ok(payload, std::to_string(solutions.size()) + " solutions up to the bound");
}

void cmd_scan_pell_gaussian(std::uint64_t bound, unsigned workers) {
    Stopwatch timer("gaussian box scan");
    const auto pairs = gint::gaussian_pell_box_scan(bound, workers);
    bool all_real = true;
    Json list = Json::array();
    for (const auto& [x, y] : pairs) {
        all_real = all_real && x.im == 0 && y.im == 0;
        list.push_back(Json{{"x", gint::gaussian_to_json(x)}, {"y", gint::gaussian_to_json(y)}});
    }
    Json payload{{"bound", bound}, {"count", pairs.size()}, {"all_real", all_real},
                 {"pairs", list}};
    emit_ok(payload, std::to_string(pairs.size()) + " solutions in the box, all real: " +
                         (all_real ? "yes" : "no"));
}

void cmd_scan_counterexample(std::uint64_t bound, unsigned workers) {
    Stopwatch timer("counterexample scan");
    const auto hit = gint::integrality_counterexample_scan(bound, workers);
    if (!hit) {
        emit_ok(Json{{"bound", bound}, {"found", false}},
                "no counterexample in the box of size " + std::to_string(bound));
        return;
    }
    Json tuple{{"v", gint::gaussian_to_json(hit->v)}, {"w", gint::gaussian_to_json(hit->w)},
               {"x", gint::gaussian_to_json(hit->x)}, {"y", gint::gaussian_to_json(hit->y)},
               {"z", gint::gaussian_to_json(hit->z)}};
    emit_ok(Json{{"bound", bound}, {"found", true}, {"tuple", tuple}},
            "counterexample found (this falsifies the integrality form)");
}

void cmd_eval(const std::string& in_path, const std::string& assign_path) {
    const gint::Expr e = gint::parse(read_file(in_path));
    const gint::Assignment assignment =
        gint::assignment_from_json(gint::parse_json(read_file(assign_path)));
    const gint::GaussianInt value = gint::evaluate(e, assignment);
    emit_ok(Json{{"value", gint::gaussian_to_json(value)}}, "value is " + value.str());
}

void cmd_expand(const std::string& in_path, std::uint64_t limit) {
    const gint::Expr e = gint::parse(read_file(in_path));
    const gint::SparsePoly poly = gint::expand(e, limit);
    Json terms = Json::array();
    for (const auto& [exponents, coeff] : poly.terms())
        terms.push_back(Json{{"exponents", exponents},
                             {"coefficient", gint::gaussian_to_json(coeff)}});
    Json payload{{"variables", poly.variables()},
                 {"term_count", poly.term_count()},
                 {"terms", terms}};
    emit_ok(payload, std::to_string(poly.term_count()) + " terms after expansion");
}

void cmd_reduce(const std::string& in_path, const std::string& out_path,
                const std::string& manifest_path, bool per_k) {
    const gint::Expr f = gint::parse(read_file(in_path));
    const auto encoding =
        per_k ? gint::NonzeroEncoding::PerVariable : gint::NonzeroEncoding::Product;
    Stopwatch timer("reduction");
    const gint::ReductionOutput output = gint::reduce_to_gaussian(f, encoding);
    write_file(out_path, gint::render(output.P) + "\n");
    const Json manifest = gint::manifest_to_json(output);
    if (!manifest_path.empty()) write_file(manifest_path, manifest.dump(2) + "\n");
    emit_ok(manifest, "compiled to " + std::to_string(output.unknowns.size()) +
                          " unknowns; wrote " + out_path);
}

void cmd_lift(const std::string& in_path, const std::string& a_text, const std::string& z_text,
              bool per_k) {
    const gint::Expr f = gint::parse(read_file(in_path));
    const gint::Int a = parse_cli_int(a_text, "--a");

    std::array<gint::Int, 10> z_values;
    std::vector<std::string> parts;
    std::string current;
    for (char c : z_text) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else if (c != ' ') {
            current += c;
        }
    }
    parts.push_back(current);
    if (parts.size() != 10)
        emit_error_and_exit("UsageError",
                            "--z needs exactly 10 comma-separated integers, got " +
                                std::to_string(parts.size()),
                            2);
    for (std::size_t k = 0; k < 10; ++k) z_values[k] = parse_cli_int(parts[k], "--z");

    const auto encoding =
        per_k ? gint::NonzeroEncoding::PerVariable : gint::NonzeroEncoding::Product;
    Stopwatch timer("witness lifting");
    gint::Assignment assignment = gint::lift_witness(f, a, z_values, encoding);

    // Merge in the parameter so the output feeds `eval` on the compiled P
    // directly when f uses z0.
    const std::vector<std::string> fv = gint::free_vars(f);
    if (std::find(fv.begin(), fv.end(), "z0") != fv.end())
        assignment["z0"] = gint::GaussianInt(a);

    emit_ok(Json{{"assignment", gint::assignment_to_json(assignment)}},
            "lifted to " + std::to_string(assignment.size()) + " assigned variables");
}

void cmd_check(const std::string& suite, std::uint64_t scale) {
    Stopwatch timer("check " + suite);
    gint::SuiteReport report;
    if (suite == "identities") {
        report = gint::run_identities(scale);
    } else if (suite == "oracles") {
        report = gint::run_oracles(scale);
    } else {
        report = gint::run_roundtrip(scale);
    }
    if (!report.passed())
        gint::raise(gint::ErrorCode::SuiteFailed,
                    report.suite + " suite failed: " + *report.counterexample);
    Json payload{{"suite", report.suite}, {"scale", report.scale}, {"checks", report.checks}};
    emit_ok(payload, report.suite + " suite passed " + std::to_string(report.checks) + " checks");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit: Lucas sequences, Pell equations, the Gaussian\n"
                 "integrality form, and the 52-unknown Diophantine reduction compiler."};
    app.require_subcommand(1);
    app.add_flag("--verbose", g_verbose, "log timings to stderr (stdout stays deterministic)");

    // lucas
    std::string lucas_a, lucas_b, lucas_mod;
    std::uint64_t lucas_n = 0;
    auto* lucas = app.add_subcommand("lucas", "Exact or modular Lucas pair (u_n, u_{n+1})");
    lucas->add_option("--A", lucas_a, "parameter A")->required();
    lucas->add_option("--B", lucas_b, "parameter B")->required();
    lucas->add_option("--n", lucas_n, "index n")->required();
    lucas->add_option("--mod", lucas_mod, "reduce mod M (M >= 1)");
    lucas->callback([&] { cmd_lucas(lucas_a, lucas_b, lucas_n, lucas_mod); });

    // lucas-index
    std::string li_a, li_b, li_mod;
    bool li_unit = false;
    auto* li = app.add_subcommand("lucas-index",
                                  "Smallest j >= 1 with u_j = 0 (mod M), optionally u_{j+1} = 1");
    li->add_option("--A", li_a, "parameter A")->required();
    li->add_option("--B", li_b, "parameter B")->required();
    li->add_option("--mod", li_mod, "modulus M (M >= 2)")->required();
    li->add_flag("--unit", li_unit, "require u_{j+1} = 1 (mod M) as well");
    li->callback([&] { cmd_lucas_index(li_a, li_b, li_mod, li_unit); });

    // witness
    std::string witness_z;
    auto* witness = app.add_subcommand("witness", "Construct an integrality witness for z");
    witness->add_option("--z", witness_z, "rational integer z")->required();
    witness->callback([&] { cmd_witness(witness_z); });

    // verify
    std::string verify_file;
    auto* verify = app.add_subcommand("verify", "Verify a witness JSON file");
    verify->add_option("--file", verify_file, "witness JSON file")->required();
    verify->callback([&] { cmd_verify(verify_file); });

    // nonzero
    std::string nonzero_m;
    auto* nonzero = app.add_subcommand("nonzero", "(2s+1)(3t+1) factorization of a nonzero m");
    nonzero->add_option("--m", nonzero_m, "nonzero integer m")->required();
    nonzero->callback([&] { cmd_nonzero(nonzero_m); });

    // pell
    std::string pell_a, pell_bound;
    auto* pell = app.add_subcommand("pell",
                                    "Nonnegative solutions of x^2 - Axy + y^2 = 1 up to a bound");
    pell->add_option("--A", pell_a, "coefficient A >= 2")->required();
    pell->add_option("--bound", pell_bound, "inclusive bound on x")->required();
    pell->callback([&] { cmd_pell(pell_a, pell_bound); });

    // scan-pell-gaussian
    std::uint64_t spg_bound = 0;
    unsigned spg_workers = 1;
    auto* spg = app.add_subcommand("scan-pell-gaussian",
                                   "All Gaussian solutions of x^2 - 4xy + y^2 = 1 in a box");
    spg->add_option("--bound", spg_bound, "box bound on |re|, |im|")->required();
    spg->add_option("--workers", spg_workers, "worker threads (output is canonical regardless)");
    spg->callback([&] { cmd_scan_pell_gaussian(spg_bound, spg_workers); });

    // scan-counterexample
    std::uint64_t sc_bound = 0;
    unsigned sc_workers = 1;
    auto* sc = app.add_subcommand("scan-counterexample",
                                  "Search a box for a vanishing form with non-integer z");
    sc->add_option("--bound", sc_bound, "box bound on |re|, |im|")->required();
    sc->add_option("--workers", sc_workers, "worker threads (output is canonical regardless)");
    sc->callback([&] { cmd_scan_counterexample(sc_bound, sc_workers); });

    // eval
    std::string eval_in, eval_assign;
    auto* eval = app.add_subcommand("eval", "Evaluate a .poly expression under an assignment");
    eval->add_option("--in", eval_in, ".poly file")->required();
    eval->add_option("--assign", eval_assign, "assignment JSON file")->required();
    eval->callback([&] { cmd_eval(eval_in, eval_assign); });

    // expand
    std::string expand_in;
    std::uint64_t expand_limit = 0;
    auto* expand = app.add_subcommand("expand", "Expand a .poly expression to collected terms");
    expand->add_option("--in", expand_in, ".poly file")->required();
    expand->add_option("--limit", expand_limit, "term-count limit")->required();
    expand->callback([&] { cmd_expand(expand_in, expand_limit); });

    // reduce
    std::string reduce_in, reduce_out, reduce_manifest;
    bool reduce_per_k = false;
    auto* reduce = app.add_subcommand("reduce",
                                      "Compile f(z0..z10) to one polynomial over Z[i]");
    reduce->add_option("--in", reduce_in, "input .poly file for f")->required();
    reduce->add_option("--out", reduce_out, "output .poly file for P")->required();
    reduce->add_option("--manifest", reduce_manifest, "also write the manifest JSON here");
    reduce->add_flag("--per-k-nonzero", reduce_per_k,
                     "use one (2s+1)(3t+1) equation per v_k plus one for z10 (72 unknowns) "
                     "instead of the single product equation (52 unknowns)");
    reduce->callback([&] { cmd_reduce(reduce_in, reduce_out, reduce_manifest, reduce_per_k); });

    // lift
    std::string lift_in, lift_a, lift_z;
    bool lift_per_k = false;
    auto* lift = app.add_subcommand("lift",
                                    "Lift an integer solution of f to a full assignment for P");
    lift->add_option("--in", lift_in, "input .poly file for f")->required();
    lift->add_option("--a", lift_a, "parameter value (z0)")->required();
    lift->add_option("--z", lift_z, "10 comma-separated integers z1..z10, z10 nonzero")
        ->required();
    lift->add_flag("--per-k-nonzero", lift_per_k, "match a reduction built with --per-k-nonzero");
    lift->callback([&] { cmd_lift(lift_in, lift_a, lift_z, lift_per_k); });

    // check
    std::string check_suite;
    std::uint64_t check_scale = 1;
    auto* check = app.add_subcommand("check", "Run a named invariant suite");
    check->add_option("suite", check_suite, "identities | oracles | roundtrip")
        ->required()
        ->check(CLI::IsMember({"identities", "oracles", "roundtrip"}));
    check->add_option("--scale", check_scale, "suite scale")->required();
    check->callback([&] { cmd_check(check_suite, check_scale); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error_and_exit("UsageError", e.what(), 2);
    } catch (const gint::Error& e) {
        emit_error_and_exit(e.code_name(), e.what(), 1);
    } catch (const std::exception& e) {
        emit_error_and_exit("InternalInconsistency", e.what(), 1);
    }
    return 0;
}
