// Command-line front end: compute series, Betti tables, characters and
// decompositions, or run the verification battery.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <cycidx/cycidx.hpp>
#include <cycidx/serialize.hpp>
#include <cycidx/verify.hpp>

namespace {

using namespace cycidx;
using io::json;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_invalid = 2;

struct JobSpec {
    std::string command;
    int d = 2;
    int k = 3;
    int trunc = 6;
    int n = 3;
    int xorder = 8;
    bool refined = false;
    std::string method = "closed";
    std::string format = "text";
    std::optional<std::string> at_q, at_u, at_w;
    std::string output;
    bool grid_d = false, grid_k = false;

    json to_json() const
    {
        json j{{"command", command}, {"d", d}, {"k", k}, {"format", format}};
        if (command == "compute") {
            j["trunc"] = trunc;
            j["refined"] = refined;
            j["method"] = method;
        } else if (command == "betti") {
            j["xorder"] = xorder;
        } else if (command == "characters" || command == "decompose") {
            j["n"] = n;
            j["refined"] = refined;
        } else if (command == "verify") {
            j["trunc"] = trunc;
            if (!grid_d) {
                j["d"] = "grid";
            }
            if (!grid_k) {
                j["k"] = "grid";
            }
        }
        if (at_q) j["at_q"] = *at_q;
        if (at_u) j["at_u"] = *at_u;
        if (at_w) j["at_w"] = *at_w;
        return j;
    }
};

struct Output {
    json data = json::object();
    std::string text;
};

std::optional<Rational> parse_opt(const std::optional<std::string> &s)
{
    if (!s) {
        return std::nullopt;
    }
    return parse_rational(*s);
}

void text_header(const JobSpec &job, std::string &out)
{
    const json fields = job.to_json();
    for (const auto &[key, value] : fields.items()) {
        out += "# " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
}

void validate(const JobSpec &job)
{
    if (job.command == "verify") {
        if ((job.grid_d && job.d < 1) || (job.grid_k && job.k < 2) || job.trunc < 0) {
            throw Error(ErrorKind::InvalidParams, "need d >= 1, k >= 2, trunc >= 0");
        }
        return;
    }
    ModelParams{job.d, job.k, 0}.validate();
    if (job.command == "compute" && job.trunc < 0) {
        throw Error(ErrorKind::InvalidParams, "need trunc >= 0");
    }
    if (job.command == "compute" && job.method != "closed" && job.method != "pipeline" && job.method != "k2") {
        throw Error(ErrorKind::InvalidParams, "method must be closed, pipeline or k2");
    }
    if (job.command == "compute" && job.method == "k2" && (job.k != 2 || job.refined)) {
        throw Error(ErrorKind::InvalidParams, "method k2 needs k = 2 and no refinement");
    }
    if (job.command == "betti" && job.xorder < 0) {
        throw Error(ErrorKind::InvalidParams, "need xorder >= 0");
    }
    if ((job.command == "characters" || job.command == "decompose") && (job.n < 0 || job.n > 25)) {
        throw Error(ErrorKind::InvalidParams, "need 0 <= n <= 25");
    }
}

CycleIndexSeries model_series(const JobSpec &job, int trunc)
{
    const ModelParams p{job.d, job.k, trunc};
    if (job.method == "pipeline") {
        return pipeline(p, job.refined);
    }
    if (job.method == "k2") {
        return k2_product(job.d, trunc);
    }
    return job.refined ? theorem2_closed(p) : theorem1_closed(p);
}

Output cmd_compute(const JobSpec &job)
{
    const ModelParams p{job.d, job.k, job.trunc};
    auto series = model_series(job, job.trunc);
    series = substitute_gradings(series, parse_opt(job.at_q), parse_opt(job.at_u), parse_opt(job.at_w));

    Output out;
    out.data["graded_factor_only"] = p.graded_factor_only();
    if (job.refined) {
        out.data["note"] = p.refinement_note();
    }
    out.data["series"] = io::to_json(series);
    json arities = json::array();
    for (int n = 0; n <= job.trunc; ++n) {
        const LaurentCoeff dim = series.coeff(PMonomial::p(1, n)) * Rational(factorial(n));
        arities.push_back({{"n", n}, {"dimension", io::to_json(dim)}});
    }
    out.data["arities"] = arities;

    out.text += "# graded_factor_only: " + std::string(p.graded_factor_only() ? "true" : "false") + "\n";
    if (job.refined) {
        out.text += "# note: " + p.refinement_note() + "\n";
    }
    for (int n = 0; n <= job.trunc; ++n) {
        const auto dim = series.coeff(PMonomial::p(1, n)) * Rational(factorial(n));
        out.text += "arity " + std::to_string(n) + "  dimension " + to_string(dim) + "\n";
        const auto part = extract_arity(series, n);
        for (const auto &[m, c] : part.terms()) {
            out.text += "  " + m.to_string() + " : " + to_string(c) + "\n";
        }
    }
    return out;
}

Output cmd_betti(const JobSpec &job)
{
    const ModelParams p{job.d, job.k, job.xorder};
    const auto egf = egf_poincare(p, job.xorder);
    Output out;
    json rows = json::array();
    out.text += "n\tpoincare\tbetti\teuler\n";
    for (int n = 0; n <= job.xorder; ++n) {
        const LaurentCoeff poly = egf[n] * Rational(factorial(n));
        json betti = json::array();
        std::string betti_text;
        const auto [lo, hi] = poly.q_degree_range();
        for (int e = std::min(lo, 0); e <= hi; ++e) {
            const auto b = to_string(poly.coeff({e, 0, 0}));
            betti.push_back(b);
            betti_text += (betti_text.empty() ? "" : ",") + b;
        }
        const auto euler = to_string(evaluate_coeff(poly, -1, 1, 1));
        rows.push_back({{"n", n}, {"poincare", io::to_json(poly)}, {"poincare_text", io::q_polynomial_string(poly)},
                        {"betti", betti}, {"euler", euler}});
        out.text += std::to_string(n) + "\t" + io::q_polynomial_string(poly) + "\t(" + betti_text + ")\t" + euler
            + "\n";
    }
    out.data["rows"] = rows;
    return out;
}

oracle::GradedCharacter job_character(const JobSpec &job)
{
    return oracle::character_from_cycle_index(model_series(job, job.n), job.n);
}

Output cmd_characters(const JobSpec &job)
{
    const auto chi = job_character(job);
    Output out;
    out.data["character"] = io::to_json(chi);
    out.text += "class\tz\tvalue\n";
    for (const auto &[c, v] : chi.values) {
        out.text += c.to_string() + "\t" + c.z().get_str() + "\t" + to_string(v) + "\n";
    }
    return out;
}

Output cmd_decompose(const JobSpec &job)
{
    const auto dec = oracle::decompose(job_character(job), true);
    Output out;
    out.data["decomposition"] = io::to_json(dec);
    out.text += "shape\tq\tu\tw\tmultiplicity\n";
    for (const auto &[key, mult] : dec) {
        const auto &[shape, e] = key;
        out.text += shape.to_string() + "\t" + std::to_string(e[0]) + "\t" + std::to_string(e[1]) + "\t"
            + std::to_string(e[2]) + "\t" + mult.get_str() + "\n";
    }
    return out;
}

Output cmd_verify(const JobSpec &job, bool &all_passed)
{
    verify::Scope scope;
    scope.trunc = job.trunc;
    if (job.grid_d) {
        scope.ds = {job.d};
    }
    if (job.grid_k) {
        scope.ks = {job.k};
    }
    Output out;
    json checks = json::array();
    all_passed = true;
    for (const auto &r : verify::run_all(scope)) {
        all_passed = all_passed && r.passed;
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out.text += std::string(r.passed ? "[PASS] " : "[FAIL] ") + r.name
            + (r.passed ? "" : "\n       first discrepancy: " + r.detail) + "\n";
    }
    out.data["checks"] = checks;
    out.data["passed"] = all_passed;
    out.text += all_passed ? "all checks passed\n" : "verification FAILED\n";
    return out;
}

int run(const JobSpec &job)
{
    validate(job);
    bool passed = true;
    Output out;
    if (job.command == "compute") {
        out = cmd_compute(job);
    } else if (job.command == "betti") {
        out = cmd_betti(job);
    } else if (job.command == "characters") {
        out = cmd_characters(job);
    } else if (job.command == "decompose") {
        out = cmd_decompose(job);
    } else {
        out = cmd_verify(job, passed);
    }

    std::string rendered;
    if (job.format == "json") {
        out.data["job"] = job.to_json();
        rendered = out.data.dump(2) + "\n";
    } else {
        text_header(job, rendered);
        rendered += out.text;
    }
    if (job.output.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream f(job.output, std::ios::binary);
        if (!f) {
            throw Error(ErrorKind::InvalidParams, "cannot open output file " + job.output);
        }
        f << rendered;
    }
    return passed ? exit_ok : exit_verify_failed;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact cycle index sums for the homology of non-k-equal configuration spaces"};
    app.require_subcommand(1);
    JobSpec job;
    std::optional<int> trunc;

    auto add_common = [&job](CLI::App *sub) {
        sub->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--output,-o", job.output, "Write to this file instead of stdout");
    };
    auto add_model = [&job](CLI::App *sub) {
        sub->add_option("--d", job.d, "Ambient dimension (>= 1)");
        sub->add_option("--k", job.k, "Non-k-equal threshold (>= 2)");
    };

    auto *compute = app.add_subcommand("compute", "Cycle index sum truncated at a cardinality");
    add_model(compute);
    compute->add_option("--trunc", trunc, "Cardinality truncation");
    compute->add_flag("--refined", job.refined, "Track short (u) and long (w) brackets");
    compute->add_option("--method", job.method, "closed | pipeline | k2")
        ->check(CLI::IsMember({"closed", "pipeline", "k2"}));
    compute->add_option("--at-q", job.at_q, "Evaluate q at a rational");
    compute->add_option("--at-u", job.at_u, "Evaluate u at a rational");
    compute->add_option("--at-w", job.at_w, "Evaluate w at a rational");
    add_common(compute);

    auto *betti = app.add_subcommand("betti", "Poincare polynomials, Betti numbers and Euler characteristics");
    add_model(betti);
    betti->add_option("--xorder", job.xorder, "Largest arity");
    add_common(betti);

    auto *characters = app.add_subcommand("characters", "Graded character of one arity");
    add_model(characters);
    characters->add_option("--n", job.n, "Arity");
    characters->add_flag("--refined", job.refined, "Track short (u) and long (w) brackets");
    add_common(characters);

    auto *decompose = app.add_subcommand("decompose", "Irreducible multiplicities of one arity");
    add_model(decompose);
    decompose->add_option("--n", job.n, "Arity");
    decompose->add_flag("--refined", job.refined, "Track short (u) and long (w) brackets");
    add_common(decompose);

    auto *verify = app.add_subcommand("verify", "Run the cross-check battery");
    auto *vd = verify->add_option("--d", job.d, "Restrict to one d");
    auto *vk = verify->add_option("--k", job.k, "Restrict to one k");
    verify->add_option("--trunc", trunc, "Truncation for series checks");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_invalid;
    }
    for (auto *sub : {compute, betti, characters, decompose, verify}) {
        if (sub->parsed()) {
            job.command = sub->get_name();
        }
    }
    job.grid_d = vd->count() > 0;
    job.grid_k = vk->count() > 0;
    job.trunc = trunc.value_or(job.command == "verify" ? 8 : 6);

    try {
        return run(job);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
}
