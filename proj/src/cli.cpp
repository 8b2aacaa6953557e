#include "qqwalk/cli.hpp"

#include "qqwalk/complex_linalg.hpp"
#include "qqwalk/spectrum.hpp"
#include "qqwalk/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qqwalk::cli
{

namespace
{

using json = nlohmann::ordered_json;

constexpr double kSnap = 1e-12;
constexpr double kGroupTol = 1e-8;

double snap(double x) { return std::abs(x) < kSnap ? 0.0 : x; }

json complex_json(cx z) { return {{"re", snap(z.real())}, {"im", snap(z.imag())}}; }

std::string num(double x, bool snap_tiny = true)
{
    if (!std::isfinite(x))
        return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, snap_tiny ? snap(x) : x);
    return ec == std::errc{} ? std::string(buf, end) : "0";
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

struct Grouped
{
    cx value;
    int mult = 0;
};

// Collapse numerically equal eigenvalues into (value, multiplicity) rows, sorted by (re, im).
std::vector<Grouped> group(std::span<const cx> values)
{
    std::vector<Grouped> out;
    std::vector<cx> sums;
    for (cx z : values)
    {
        auto it = std::find_if(out.begin(), out.end(), [&](const Grouped& g) { return std::abs(g.value - z) <= kGroupTol; });
        if (it == out.end())
        {
            out.push_back({z, 1});
            sums.push_back(z);
            continue;
        }
        const auto k = static_cast<std::size_t>(it - out.begin());
        sums[k] += z;
        ++it->mult;
    }
    for (std::size_t k = 0; k < out.size(); ++k)
    {
        const cx mean = sums[k] / static_cast<double>(out[k].mult);
        out[k].value = {snap(mean.real()), snap(mean.imag())};
    }
    std::sort(out.begin(), out.end(), [](const Grouped& a, const Grouped& b) {
        return a.value.real() != b.value.real() ? a.value.real() < b.value.real() : a.value.imag() < b.value.imag();
    });
    return out;
}

json spectrum_json(const SpectrumReport& r)
{
    json out;
    out["method"] = std::string(to_string(r.method));
    auto rows = [](std::span<const cx> values) {
        json arr = json::array();
        for (const auto& g : group(values))
            arr.push_back({{"re", g.value.real()}, {"im", g.value.imag()}, {"mult", g.mult}});
        return arr;
    };
    out["psi_spectrum"] = rows(r.psi_spectrum);
    json reps = json::array();
    for (const auto& c : r.class_reps)
        reps.push_back({{"re", snap(c.rep.re)}, {"im", snap(c.rep.im)}, {"mult", c.multiplicity}});
    out["class_reps"] = reps;
    if (r.cross_check)
    {
        const auto& c = *r.cross_check;
        json cc{{"against", c.against},
                {"max_dist", finite_or_null(c.max_dist)},
                {"tolerance", c.tolerance},
                {"verdict", c.verdict}};
        if (c.size_mismatch)
            cc["size_mismatch"] = {{"size", c.size}, {"other_size", c.other_size}};
        if (!c.verdict && c.culprit)
            cc["culprit"] = {{"value", complex_json(c.culprit->first)}, {"matched", complex_json(c.culprit->second)}};
        out["cross_check"] = cc;
    }
    else
    {
        out["cross_check"] = nullptr;
    }
    if (!r.walk_spectrum.empty())
        out["walk_spectrum"] = rows(r.walk_spectrum);
    out["notes"] = r.notes;
    return out;
}

std::string spectrum_csv(const SpectrumReport& r)
{
    std::string out = "re,im,mult,method\n";
    for (const auto& g : group(r.psi_spectrum))
        out += num(g.value.real()) + "," + num(g.value.imag()) + "," + std::to_string(g.mult) + "," +
               std::string(to_string(r.method)) + "\n";
    return out;
}

json identity_json(const IdentityReport& r, std::string_view name)
{
    json samples = json::array();
    for (const auto& s : r.samples)
        samples.push_back({{"t", complex_json(s.t)},
                           {"lhs", complex_json(s.lhs)},
                           {"rhs", complex_json(s.rhs)},
                           {"rel_err", s.rel_err}});
    json checks = json::array();
    for (const auto& a : r.aux)
        checks.push_back({{"name", a.name}, {"value", a.value}, {"threshold", a.threshold}, {"ok", a.ok()}});
    json skipped = json::array();
    for (cx t : r.skipped)
        skipped.push_back(complex_json(t));
    return {{"identity", std::string(name)},
            {"samples", samples},
            {"max_rel_err", r.max_rel_err},
            {"tolerance", r.tolerance},
            {"verdict", r.verdict},
            {"checks", checks},
            {"skipped", skipped},
            {"warnings", r.warnings}};
}

std::string identity_csv(const IdentityReport& r)
{
    std::string out = "t_re,t_im,lhs_re,lhs_im,rhs_re,rhs_im,rel_err\n";
    for (const auto& s : r.samples)
        out += num(s.t.real()) + "," + num(s.t.imag()) + "," + num(s.lhs.real()) + "," + num(s.lhs.imag()) + "," +
               num(s.rhs.real()) + "," + num(s.rhs.imag()) + "," + num(s.rel_err, false) + "\n";
    return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int coin_sources(const RunConfig& c)
{
    return static_cast<int>(c.coin_path.has_value()) + static_cast<int>(c.alpha_literal.has_value()) +
           static_cast<int>(c.grover);
}

std::string read_file(const std::filesystem::path& path, const char* what)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, std::string("cannot open ") + what + " file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ArcWeights resolve_coin(const RunConfig& c, const Graph& g)
{
    if (coin_sources(c) != 1)
        throw ContractViolation(c.subcommand + ": give exactly one of --coin, --alpha, --grover");
    if (c.grover)
        return ArcWeights::grover(g);
    if (c.alpha_literal)
        return ArcWeights::alpha_coin(g, parse_quaternion(*c.alpha_literal));
    try
    {
        return parse_coin(read_file(*c.coin_path, "coin"), g);
    }
    catch (const ParseError& e)
    {
        throw ParseError(e.line(), c.coin_path->string() + ": " + std::string(e.what()));
    }
}

// α for the α-coin route: directly from --alpha/--grover, or recovered from a
// coin file that has the form q(e) = α/d_{o(e)}.
Quaternion resolve_alpha(const RunConfig& c, const Graph& g, const ArcWeights& q)
{
    if (c.grover)
        return 2.0;
    if (c.alpha_literal)
        return parse_quaternion(*c.alpha_literal);
    const auto cond = quat_cond_check(g, q, c.tol);
    if (!cond.holds)
        throw ContractViolation("theorem10: coin column sums differ between vertices (spread " + num(cond.spread) +
                                "); the route needs q(e) = alpha/d_o(e)");
    const auto expected = ArcWeights::alpha_coin(g, *cond.alpha);
    for (int e = 0; e < g.arc_count(); ++e)
        if ((q[e] - expected[e]).norm() > c.tol)
            throw ContractViolation("theorem10: arc " + std::to_string(e) + " does not carry alpha/d_o(e) with alpha = " +
                                    to_string(*cond.alpha));
    return *cond.alpha;
}

RunResult emit(const RunConfig& c, const json& j, const std::string& csv, int exit_code)
{
    return {exit_code, c.output == Output::json ? dump(j) : csv, {}};
}

RunResult run_spectrum(const RunConfig& c, const Graph& g)
{
    const Method method = parse_method(c.method);
    const ArcWeights q = resolve_coin(c, g);
    SpectrumReport report;
    switch (method)
    {
    case Method::direct: report = spectrum_direct(g, q); break;
    case Method::theorem8: report = spectrum_theorem8(g, q); break;
    case Method::theorem10: report = spectrum_theorem10(g, resolve_alpha(c, g, q)); break;
    case Method::grover:
    {
        const auto grover = ArcWeights::grover(g);
        for (int e = 0; e < g.arc_count(); ++e)
            if ((q[e] - grover[e]).norm() > c.tol)
                throw ContractViolation("grover: coin differs from 2/d_o(e) on arc " + std::to_string(e));
        report = spectrum_grover(g);
        break;
    }
    }
    const int code = report.cross_check && !report.cross_check->verdict ? 1 : 0;
    return emit(c, spectrum_json(report), spectrum_csv(report), code);
}

RunResult run_grover(const RunConfig& c, const Graph& g)
{
    if (coin_sources(c) != 0)
        throw ContractViolation("grover: the coin is fixed to 2/d_o(e); drop --coin/--alpha/--grover");
    const auto report = spectrum_grover(g);
    const int code = report.cross_check && !report.cross_check->verdict ? 1 : 0;
    return emit(c, spectrum_json(report), spectrum_csv(report), code);
}

RunResult run_unitarity(const RunConfig& c, const Graph& g)
{
    const ArcWeights q = resolve_coin(c, g);
    const auto check = unitarity_condition(g, q, c.tol);
    const ComplexMatrix u = psi(build_U(g, q));
    const double residual = max_abs_diff(u * conj_transpose(u), ComplexMatrix::identity(u.rows()));
    const bool numeric = is_unitary(u, std::max(c.tol, 1e-12));
    const bool agrees = numeric == check.holds;
    const auto cond = quat_cond_check(g, q, c.tol);

    json j{{"unitary", check.holds},
           {"quadratic_ok", check.quadratic_ok},
           {"origin_constant", check.origin_constant},
           {"quadratic_residual", check.quadratic_residual},
           {"origin_spread", check.origin_spread},
           {"numeric_unitary", numeric},
           {"numeric_residual", residual},
           {"agrees", agrees},
           {"quat_cond",
            {{"holds", cond.holds},
             {"alpha", cond.alpha ? json(to_string(*cond.alpha)) : json(nullptr)},
             {"spread", cond.spread},
             {"commutes", cond.commutes},
             {"commutator", cond.commutator}}}};
    std::string csv = "check,value\n";
    csv += std::string("unitary,") + (check.holds ? "true" : "false") + "\n";
    csv += std::string("quadratic_ok,") + (check.quadratic_ok ? "true" : "false") + "\n";
    csv += std::string("origin_constant,") + (check.origin_constant ? "true" : "false") + "\n";
    csv += "quadratic_residual," + num(check.quadratic_residual, false) + "\n";
    csv += "origin_spread," + num(check.origin_spread, false) + "\n";
    csv += std::string("numeric_unitary,") + (numeric ? "true" : "false") + "\n";
    csv += "numeric_residual," + num(residual, false) + "\n";
    csv += std::string("quat_cond,") + (cond.holds ? "true" : "false") + "\n";
    auto result = emit(c, j, csv, agrees ? 0 : 1);
    if (!agrees)
        result.err = "unitarity: closed-form condition and numerical check disagree\n";
    return result;
}

RunResult identity_result(const RunConfig& c, const IdentityReport& r, json j)
{
    RunResult result = emit(c, j, identity_csv(r), r.verdict ? 0 : 1);
    for (const auto& w : r.warnings)
        result.err += "warning: " + w + "\n";
    return result;
}

RunResult run_zeta(const RunConfig& c, const Graph& g)
{
    if (c.samples < 1)
        throw ContractViolation("--samples must be positive");
    const auto samples = default_samples(c.samples, c.seed);
    if (c.subcommand == "zeta-ihara")
    {
        if (coin_sources(c) != 0)
            throw ContractViolation("zeta-ihara takes no weights");
        const auto r = ihara_identity(g, samples, c.tol);
        return identity_result(c, r, identity_json(r, "ihara"));
    }
    const ArcWeights w = resolve_coin(c, g);
    if (c.subcommand == "zeta-weighted")
    {
        const auto r = weighted_zeta_identity(g, w, samples, c.tol);
        return identity_result(c, r, identity_json(r, "weighted"));
    }
    auto r = quaternionic_identity(g, w, samples, c.tol);
    const auto poly = quaternionic_polynomials(g, w);
    json j = identity_json(r, "quaternionic");
    j["polynomial"] = {{"lhs_degree", poly.lhs_degree},
                       {"rhs_degree", poly.rhs_degree},
                       {"max_coeff_diff", poly.max_coeff_diff},
                       {"agree", poly.agree}};
    r.verdict = r.verdict && poly.agree;
    j["verdict"] = r.verdict;
    return identity_result(c, r, j);
}

RunResult run_selftest(const RunConfig& c)
{
    const auto checks = selftest_checks(c.fixtures, c.seed);
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const Check& k) { return !k.passed; });
    RunResult result;
    result.exit_code = failed == 0 ? 0 : 1;
    if (c.output == Output::csv)
    {
        result.out = "check,status,detail\n";
        for (const auto& k : checks)
            result.out += k.name + "," + (k.passed ? "pass" : "fail") + "," + k.detail + "\n";
    }
    else
    {
        std::size_t width = 0;
        for (const auto& k : checks)
            width = std::max(width, k.name.size());
        for (const auto& k : checks)
        {
            result.out += (k.passed ? "PASS  " : "FAIL  ") + k.name;
            if (!k.detail.empty())
                result.out += std::string(width - k.name.size() + 2, ' ') + k.detail;
            result.out += "\n";
        }
        result.out += std::to_string(checks.size() - static_cast<std::size_t>(failed)) + "/" +
                      std::to_string(checks.size()) + " checks passed\n";
    }
    for (const auto& k : checks)
        if (!k.passed)
            result.err += "failed: " + k.name + "\n";
    return result;
}

std::optional<double> env_tolerance(std::string& error)
{
    const char* raw = std::getenv("QQWALK_TOL");
    if (raw == nullptr || *raw == '\0')
        return std::nullopt;
    const std::string_view text(raw);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !(value > 0.0))
    {
        error = "QQWALK_TOL must be a positive number, got '" + std::string(text) + "'";
        return std::nullopt;
    }
    return value;
}

} // namespace

RunResult execute(const RunConfig& config)
{
    try
    {
        if (config.subcommand == "selftest")
            return run_selftest(config);
        const Graph g = load_graph(config.graph_path);
        if (config.subcommand == "spectrum")
            return run_spectrum(config, g);
        if (config.subcommand == "grover")
            return run_grover(config, g);
        if (config.subcommand == "unitarity")
            return run_unitarity(config, g);
        if (config.subcommand.starts_with("zeta-"))
            return run_zeta(config, g);
        return {2, {}, "error: unknown subcommand '" + config.subcommand + "'\n"};
    }
    catch (const ParseError& e)
    {
        return {2, {}, std::string("error: ") + e.what() + "\n"};
    }
    catch (const ContractViolation& e)
    {
        return {2, {}, std::string("error: ") + e.what() + "\n"};
    }
    catch (const DomainError& e)
    {
        return {2, {}, std::string("error: ") + e.what() + "\n"};
    }
    catch (const NumericalError& e)
    {
        return {1, {}, std::string("error: ") + e.what() + "\n"};
    }
}

RunResult run(const std::vector<std::string>& args)
{
    RunConfig config;
    std::string env_error;
    if (const auto tol = env_tolerance(env_error))
        config.tol = *tol;
    if (!env_error.empty())
        return {2, {}, "error: " + env_error + "\n"};

    CLI::App app{"Spectra and zeta determinant identities for quaternionic quantum walks on graphs", "qqwalk"};
    app.require_subcommand(1);
    std::string output = "json";
    std::string graph;
    std::string coin;
    std::string alpha;
    std::string fixtures;

    auto add_graph = [&](CLI::App* sub) { sub->add_option("--graph", graph, "edge-list file")->required(); };
    auto add_coin = [&](CLI::App* sub) {
        sub->add_option("--coin", coin, "per-vertex or per-arc quaternion file");
        sub->add_option("--alpha", alpha, "use q(e) = alpha/d_o(e), e.g. 1+i+j+k");
        sub->add_flag("--grover", config.grover, "use the Grover coin 2/d_o(e)");
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_tol = [&](CLI::App* sub) {
        sub->add_option("--tol", config.tol, "tolerance for condition checks and identity verdicts")
            ->check(CLI::PositiveNumber);
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--samples", config.samples, "number of sample points t")->check(CLI::PositiveNumber);
        sub->add_option("--seed", config.seed, "seed for the sample points");
    };

    auto* spectrum = app.add_subcommand("spectrum", "right spectrum of U via psi");
    add_graph(spectrum);
    add_coin(spectrum);
    spectrum->add_option("--method", config.method, "direct, theorem8, theorem10 or grover")
        ->check(CLI::IsMember({"direct", "theorem8", "theorem10", "grover"}));
    add_tol(spectrum);
    add_output(spectrum);

    auto* grover = app.add_subcommand("grover", "Grover walk spectrum from Spec(T)");
    add_graph(grover);
    add_output(grover);

    auto* unitarity = app.add_subcommand("unitarity", "closed-form unitarity test for a coin");
    add_graph(unitarity);
    add_coin(unitarity);
    add_tol(unitarity);
    add_output(unitarity);

    auto* ihara = app.add_subcommand("zeta-ihara", "Hashimoto vs Bass determinant");
    add_graph(ihara);
    add_sampling(ihara);
    add_tol(ihara);
    add_output(ihara);

    for (const char* name : {"zeta-weighted", "zeta-quat"})
    {
        auto* sub = app.add_subcommand(name, std::string(name) == "zeta-weighted"
                                                 ? "complex-weighted determinant identity"
                                                 : "quaternion-weighted determinant identity via psi");
        add_graph(sub);
        add_coin(sub);
        add_sampling(sub);
        add_tol(sub);
        add_output(sub);
    }

    auto* selftest = app.add_subcommand("selftest", "golden examples and seeded route agreement");
    selftest->add_option("--fixtures", fixtures, "directory with k3.g, k13.g, ex5.w, k3_grover.w, k13_grover.w");
    selftest->add_option("--seed", config.seed, "seed for the random instances");
    add_output(selftest);

    std::ostringstream out;
    std::ostringstream err;
    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 2, out.str(), err.str()};
    }

    config.subcommand = app.get_subcommands().front()->get_name();
    config.graph_path = graph;
    if (!coin.empty())
        config.coin_path = coin;
    if (!alpha.empty())
        config.alpha_literal = alpha;
    if (!fixtures.empty())
        config.fixtures = fixtures;
    config.output = output == "csv" ? Output::csv : Output::json;
    return execute(config);
}

} // namespace qqwalk::cli
