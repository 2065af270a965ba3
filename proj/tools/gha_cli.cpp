#include "gha/hmodules.hpp"
#include "gha/hyper1d.hpp"
#include "gha/serialize.hpp"
#include "gha/suites.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace gha;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kConfig = 3, kNumeric = 4 };

int exit_code(ErrorCode c)
{
    switch (c) {
    case ErrorCode::BadConfig:
    case ErrorCode::IoError:
        return kConfig;
    case ErrorCode::UnknownSuite:
        return kUsage;
    case ErrorCode::StepUnstable:
    case ErrorCode::Resonant:
    case ErrorCode::NumericInstability:
    case ErrorCode::GridMismatch:
    case ErrorCode::SupportNotCompact:
    case ErrorCode::PoleAt:
        return kNumeric;
    default:
        return kFail;
    }
}

struct Args {
    std::string config, type, suite = "", lambda, c, k, word, input, out, format = "json";
    unsigned seed = 1;
    double tmax = 2.0, numax = 20.0, dnu = 0.05;
    size_t grid = 201;
    // transform grid on [-tmax, tmax]
    double tr_tmax = 3.0;
    size_t tr_grid = 601;
    bool timing = false;
};

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    return out;
}

std::vector<Scalar> scalars(const std::string& s, const char* flag)
{
    std::vector<Scalar> out;
    for (const auto& x : split(s)) {
        try {
            out.push_back(Scalar::parse(x));
        } catch (const Error&) {
            throw CLI::ValidationError(flag, "'" + x + "' is not an exact scalar (p/q or p/q+r/si)");
        }
    }
    return out;
}

double real_number(const std::string& s, const char* flag)
{
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty())
        throw CLI::ValidationError(flag, "'" + s + "' is not a number");
    return v;
}

// Exact scalars, or decimals "a", "a+bi", "a-bi", "bi" with exponents.
CDouble complex_number(const std::string& raw, const char* flag)
{
    try {
        return Scalar::parse(raw).to_complex();
    } catch (const Error&) {
    }
    std::string s = raw;
    if (s.empty() || s.back() != 'i')
        return {real_number(s, flag), 0.0};
    s.pop_back();
    size_t cut = std::string::npos;
    for (size_t j = s.size(); j-- > 1;)
        if ((s[j] == '+' || s[j] == '-') && s[j - 1] != 'e' && s[j - 1] != 'E') {
            cut = j;
            break;
        }
    std::string re = cut == std::string::npos ? "0" : s.substr(0, cut);
    std::string im = cut == std::string::npos ? s : s.substr(cut);
    if (im.empty() || im == "+")
        im = "1";
    else if (im == "-")
        im = "-1";
    return {real_number(re, flag), real_number(im, flag)};
}

Config resolve_config(const Args& a)
{
    Config c;
    if (!a.config.empty())
        c = load_config(a.config);
    else
        c.spec = preset_spec(a.type.empty() ? "A1" : a.type);
    if (!a.config.empty() && !a.type.empty() && a.type != c.spec.type)
        throw Error(ErrorCode::BadConfig, "--type " + a.type + " disagrees with the config type " + c.spec.type);
    if (!a.k.empty())
        c.k = scalars(a.k, "--k");
    return c;
}

RootDatum build(const Config& c)
{
    try {
        return build_root_datum(c.spec);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BadConfig)
            throw;
        throw Error(ErrorCode::BadConfig, std::string("invalid root datum: ") + e.what());
    }
}

MultFn k1_of(const RootDatum& rd, const Config& c)
{
    if (!c.k)
        return rd.mult_m1();
    if (c.k->size() != rd.n_orbits())
        throw Error(ErrorCode::BadConfig, "k needs " + std::to_string(rd.n_orbits()) + " orbit values");
    return rd.k1_from_k(rd.from_orbit_values(*c.k));
}

CVec lambda_of(const RootDatum& rd, const Args& a)
{
    if (a.lambda.empty())
        throw CLI::RequiredError("--lambda");
    auto v = scalars(a.lambda, "--lambda");
    if (v.size() != rd.rank())
        throw CLI::ValidationError("--lambda", "needs " + std::to_string(rd.rank()) + " coordinates");
    return CVec(v.begin(), v.end());
}

Rank1Params rank1_of(const Args& a)
{
    Rank1Params p;
    if (!a.config.empty() || !a.type.empty()) {
        Args b = a;
        b.k.clear();
        Config c = resolve_config(b);
        if (c.spec.rank != 1 || c.spec.sigma_plus.size() != 1)
            throw Error(ErrorCode::BadConfig, "rank-one numerics need a rank-one root datum");
        p = Rank1Params::from_dims(c.spec.sigma_plus[0].dim1, c.spec.sigma_plus[0].dim2);
        if (c.k) {
            p.k_b = (*c.k)[0].re().get_d();
            p.k_2b = c.k->size() > 1 ? (*c.k)[1].re().get_d() : 0.0;
        }
    } else {
        p = Rank1Params::from_dims(1, 0);
    }
    if (!a.k.empty()) {
        auto parts = split(a.k);
        if (parts.empty() || parts.size() > 2)
            throw CLI::ValidationError("--k", "expects k or k_b,k_2b");
        p.k_b = real_number(parts[0], "--k");
        p.k_2b = parts.size() > 1 ? real_number(parts[1], "--k") : 0.0;
    }
    return p;
}

void emit(const Args& a, const std::string& text)
{
    if (a.out.empty())
        std::cout << text;
    else
        write_file(a.out, text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json cvec_json(const CVec& v)
{
    Json j = Json::array();
    for (const auto& x : v)
        j.push_back(scalar_to_json(x));
    return j;
}

std::vector<double> t_grid(const Args& a)
{
    if (a.grid < 2 || !(a.tmax > 0))
        throw CLI::ValidationError("--grid", "needs at least 2 points and --tmax > 0");
    std::vector<double> ts;
    for (size_t i = 0; i < a.grid; ++i)
        ts.push_back(a.tmax * static_cast<double>(i) / static_cast<double>(a.grid - 1));
    return ts;
}

GridFunction transform_input(const Args& a)
{
    if (a.input.empty()) {
        // centered Gaussian bump, effectively supported in [-tmax, tmax]
        if (a.tr_grid % 2 == 0)
            throw Error(ErrorCode::GridMismatch, "--grid must be odd for a grid symmetric about 0");
        GridFunction f = symmetric_grid(a.tr_tmax, (a.tr_grid - 1) / 2);
        double width = a.tr_tmax / 7.5;
        for (size_t i = 0; i < f.size(); ++i) {
            double x = f.t(i) / width;
            f.v[i] = std::exp(-x * x / 2);
        }
        return f;
    }
    std::vector<double> t;
    std::vector<CDouble> v;
    parse_gfunc_csv(read_file(a.input), t, v);
    if (t.size() < 5)
        throw Error(ErrorCode::GridMismatch, "input needs at least five samples");
    GridFunction f;
    f.t0 = t.front();
    f.h = t[1] - t[0];
    f.v = v;
    for (size_t i = 0; i < t.size(); ++i)
        if (std::abs(f.t(i) - t[i]) > 1e-9 * std::max(1.0, std::abs(t[i])))
            throw Error(ErrorCode::GridMismatch, "input t column must be uniform");
    return f;
}

// Each command returns the text for stdout/--out and an exit code.
struct Output {
    std::string text;
    int code = kPass;
};

Output cmd_verify(const Args& a)
{
    if (a.suite.empty())
        throw CLI::RequiredError("--suite");
    SuiteOptions opt;
    opt.seed = a.seed;
    if (!a.config.empty() || !a.type.empty()) {
        Config c = resolve_config(a);
        build(c);
        opt.data.push_back(c.spec);
        opt.k = c.k;
    } else if (!a.k.empty()) {
        opt.k = scalars(a.k, "--k");
    }
    SuiteReport rep = run_suite(a.suite, opt);
    std::fprintf(stderr, "suite %s: %s in %.1f ms\n", rep.suite.c_str(), rep.ok() ? "pass" : "FAIL", rep.ms);
    for (const auto& c : rep.checks)
        std::fprintf(stderr, "  %-4s %s (%zu cases, %.1f ms)%s%s\n", c.pass ? "ok" : "FAIL", c.name.c_str(), c.cases,
                     c.ms, c.witness.empty() ? "" : ": ", c.witness.c_str());
    int code = rep.ok() ? kPass : rep.numeric_failure() ? kNumeric : kFail;
    return {dump(report_to_json(rep, a.timing)), code};
}

Output cmd_principal_series(const Args& a)
{
    Config c = resolve_config(a);
    RootDatum rd = build(c);
    return {dump(hmodule_to_json(principal_series(rd, k1_of(rd, c), lambda_of(rd, a))))};
}

Output cmd_intertwiner(const Args& a)
{
    Config c = resolve_config(a);
    RootDatum rd = build(c);
    MultFn k1 = k1_of(rd, c);
    CVec lambda = lambda_of(rd, a);
    size_t w = rd.longest();
    if (!a.word.empty()) {
        std::vector<int> word;
        for (const auto& x : split(a.word)) {
            int j = static_cast<int>(real_number(x, "--word"));
            if (j < 1 || j > static_cast<int>(rd.rank()))
                throw CLI::ValidationError("--word", "letters are simple reflection indices 1.." +
                                                         std::to_string(rd.rank()));
            word.push_back(j - 1);
        }
        w = rd.from_word(word);
    }
    std::vector<int> reduced;
    for (int j : rd.elt(w).word)
        reduced.push_back(j + 1);
    Json j{{"type", rd.type()},
           {"k1", mult_to_json(k1)},
           {"w", reduced},
           {"lambda", cvec_json(lambda)},
           {"target", cvec_json(rd.act(w, lambda))},
           {"matrix", matrix_to_json(intertwiner(rd, k1, w, lambda))}};
    return {dump(j)};
}

Output cmd_rho(const Args& a)
{
    Config c = resolve_config(a);
    RootDatum rd = build(c);
    MultFn k = rd.mult_m();
    std::string source = "geometric";
    if (!a.c.empty()) {
        Scalar v = Scalar::parse(a.c);
        k = rd.from_orbit_values(std::vector<Scalar>(rd.n_orbits(), v));
        source = "constant " + v.str();
    } else if (c.k) {
        if (c.k->size() != rd.n_orbits())
            throw Error(ErrorCode::BadConfig, "k needs " + std::to_string(rd.n_orbits()) + " orbit values");
        k = rd.from_orbit_values(*c.k);
        source = "k";
    }
    CVec rho = rho_k(rd, k);
    Json coroot = Json::array();
    for (size_t j = 0; j < rd.rank(); ++j)
        coroot.push_back(scalar_to_json(cdot(rd.coroot(rd.simple(j)), rho)));
    Json j{{"type", rd.type()}, {"multiplicity", source}, {"rho", cvec_json(rho)}, {"rho_on_simple_coroots", coroot}};
    return {dump(j)};
}

Output cmd_gfunc(const Args& a)
{
    Rank1Params p = rank1_of(a);
    CDouble nu = complex_number(a.lambda.empty() ? throw CLI::RequiredError("--lambda") : a.lambda, "--lambda");
    std::vector<double> ts = t_grid(a);
    std::vector<CDouble> g = gfunc_values(p, nu, ts);
    if (a.format == "csv")
        return {gfunc_csv(ts, g)};
    Json re = Json::array(), im = Json::array();
    for (const auto& z : g) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    Json j{{"k_b", p.k_b}, {"k_2b", p.k_2b}, {"lambda", {nu.real(), nu.imag()}}, {"t", ts}, {"re_G", re}, {"im_G", im}};
    return {dump(j)};
}

Output cmd_transform(const Args& a)
{
    Rank1Params p = rank1_of(a);
    GridFunction f = transform_input(a);
    Spectrum s = oc_forward(p, f, uniform_nu(a.numax, a.dnu));
    if (a.format == "csv")
        return {spectrum_csv(s)};
    GridFunction back = oc_inverse(p, s, f);
    double err = 0, peak = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        err = std::max(err, std::abs(back.v[i] - f.v[i]));
        peak = std::max(peak, std::abs(f.v[i]));
    }
    Json j{{"k_b", p.k_b},
           {"k_2b", p.k_2b},
           {"points", f.size()},
           {"quad_error", s.quad_error},
           {"norm2_a", norm2_a(p, f)},
           {"norm2_spectral", norm2_spectral(p, s)},
           {"roundtrip_error", err / peak}};
    return {dump(j)};
}

// Writes an artifact and checks that reading it back reproduces it exactly.
Output cmd_export(const std::string& what, const Args& a)
{
    if (a.out.empty())
        throw CLI::RequiredError("--out");
    std::string text;
    std::function<std::string(const std::string&)> reread;
    if (what == "module") {
        Config c = resolve_config(a);
        RootDatum rd = build(c);
        HModule x = principal_series(rd, k1_of(rd, c), lambda_of(rd, a));
        text = dump(hmodule_to_json(x));
        reread = [rd](const std::string& s) { return dump(hmodule_to_json(hmodule_from_json(Json::parse(s), rd))); };
    } else if (what == "gfunc") {
        Args b = a;
        b.format = "csv";
        b.out.clear();
        text = cmd_gfunc(b).text;
        reread = [](const std::string& s) {
            std::vector<double> t;
            std::vector<CDouble> g;
            parse_gfunc_csv(s, t, g);
            return gfunc_csv(t, g);
        };
    } else if (what == "transform") {
        Args b = a;
        b.format = "csv";
        text = cmd_transform(b).text;
        reread = [](const std::string& s) { return spectrum_csv(parse_spectrum_csv(s)); };
    } else if (what == "report") {
        Args b = a;
        Output o = cmd_verify(b);
        text = o.text;
        reread = [t = a.timing](const std::string& s) { return dump(report_to_json(report_from_json(Json::parse(s)), t)); };
    } else if (what == "config") {
        text = dump(config_to_json(resolve_config(a)));
        reread = [](const std::string& s) { return dump(config_to_json(config_from_json(Json::parse(s)))); };
    } else {
        throw CLI::ValidationError("export", "unknown artifact '" + what + "'");
    }
    write_file(a.out, text);
    if (reread(read_file(a.out)) != text)
        throw Error(ErrorCode::IoError, "round trip of " + a.out + " is not exact");
    std::fprintf(stderr, "wrote %s\n", a.out.c_str());
    return {"", kPass};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graded Hecke algebras, Cherednik operators and rank-one hypergeometric functions"};
    app.require_subcommand(1);
    Args a;

    auto common = [&](CLI::App* s) {
        s->add_option("--config", a.config, "root datum config (JSON)");
        s->add_option("--type", a.type, "preset type: A1, A2, B2, BC1 (default A1)");
        s->add_option("--k", a.k, "multiplicity orbit values, comma separated (exact, or reals for rank one numerics)");
        s->add_option("--out", a.out, "write output to this file instead of stdout");
        s->add_option("--format", a.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    };
    auto g_grid = [&](CLI::App* s) {
        s->add_option("--tmax", a.tmax, "G is sampled on [0, tmax] (default 2)");
        s->add_option("--grid", a.grid, "number of t samples (default 201)");
    };
    auto t_grid_opts = [&](CLI::App* s) {
        s->add_option("--tmax", a.tr_tmax, "transform grid [-tmax, tmax] (default 3)");
        s->add_option("--grid", a.tr_grid, "t samples, 4m+1 for some m (default 601)");
        s->add_option("--input", a.input, "CSV t,re,im on a symmetric uniform grid (default a Gaussian bump)");
        s->add_option("--numax", a.numax, "spectral grid [0, numax] (default 20)");
        s->add_option("--dnu", a.dnu, "spectral grid step (default 0.05)");
    };

    auto* verify = app.add_subcommand("verify", "run a property suite and print its report");
    common(verify);
    verify->add_option("--suite", a.suite, "dunkl, cherednik, hecke, modules, sl2, transform, rootdata")->required();
    verify->add_option("--seed", a.seed, "random seed (default 1)");
    verify->add_flag("--timing", a.timing, "include timings in the JSON report");

    auto* compute = app.add_subcommand("compute", "compute a module, intertwiner, rho, G or a transform");
    compute->require_subcommand(1);
    auto* ps = compute->add_subcommand("principal-series", "B(lambda) as module JSON");
    auto* itw = compute->add_subcommand("intertwiner", "normalized intertwiner B(lambda) -> B(w lambda)");
    auto* rho = compute->add_subcommand("rho", "rho_k and its values on simple coroots");
    auto* gf = compute->add_subcommand("gfunc", "rank one G(lambda, t) on [0, tmax]");
    auto* tr = compute->add_subcommand("transform", "rank one Opdam-Cherednik transform of a grid function");
    for (auto* s : {ps, itw, rho, gf, tr})
        common(s);
    for (auto* s : {ps, itw, gf})
        s->add_option("--lambda", a.lambda, "spectral parameter, comma separated coordinates");
    itw->add_option("--word", a.word, "w as simple reflection indices, e.g. 1,2 (default w0)");
    rho->add_option("--c", a.c, "constant multiplicity");
    g_grid(gf);
    t_grid_opts(tr);

    auto* exp = app.add_subcommand("export", "write an artifact to --out and verify that it reads back exactly");
    std::string what;
    exp->add_option("what", what, "module, gfunc, transform, report or config")->required();
    common(exp);
    g_grid(exp);
    exp->add_option("--lambda", a.lambda, "spectral parameter");
    exp->add_option("--suite", a.suite, "suite for report");
    exp->add_option("--seed", a.seed, "random seed");
    exp->add_flag("--timing", a.timing, "include timings in the report");

    if (argc <= 1) {
        std::cout << app.help();
        return kUsage;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        Output o;
        if (verify->parsed())
            o = cmd_verify(a);
        else if (exp->parsed())
            o = cmd_export(what, a);
        else if (ps->parsed())
            o = cmd_principal_series(a);
        else if (itw->parsed())
            o = cmd_intertwiner(a);
        else if (rho->parsed())
            o = cmd_rho(a);
        else if (gf->parsed())
            o = cmd_gfunc(a);
        else
            o = cmd_transform(a);
        if (!o.text.empty())
            emit(a, o.text);
        return o.code;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
