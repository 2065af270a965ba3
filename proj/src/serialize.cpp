#include "gha/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gha {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadConfig, what); }

std::string fmt(double x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s)
{
    double x = 0;
    const char* b = s.data();
    const char* e = b + s.size();
    while (b < e && *b == ' ')
        ++b;
    auto res = std::from_chars(b, e, x);
    if (res.ec != std::errc() || res.ptr != e)
        bad("not a number: '" + s + "'");
    return x;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    bad("expected a rational, got " + j.dump());
}

QVec qvec_from_json(const Json& j)
{
    if (!j.is_array())
        bad("expected an array, got " + j.dump());
    QVec v;
    for (const auto& x : j)
        v.push_back(rational_from_json(x));
    return v;
}

Json qvec_to_json(const QVec& v)
{
    Json j = Json::array();
    for (const auto& x : v)
        j.push_back(x.get_str());
    return j;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text, size_t ncols)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        if (cells.size() != ncols)
            bad("CSV row has " + std::to_string(cells.size()) + " columns, expected " + std::to_string(ncols));
        rows.push_back(std::move(cells));
    }
    return rows;
}

} // namespace

Json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Scalar(j.get<long>());
    if (!j.is_string())
        bad("expected a scalar string, got " + j.dump());
    try {
        return Scalar::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        bad(std::string("bad scalar '") + j.get<std::string>() + "': " + e.what());
    }
}

Json matrix_to_json(const CMat& m)
{
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); ++c)
            row.push_back(scalar_to_json(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

CMat matrix_from_json(const Json& j)
{
    if (!j.is_array())
        bad("matrix must be an array of rows");
    size_t r = j.size(), c = r ? j[0].size() : 0;
    CMat m(r, c);
    for (size_t i = 0; i < r; ++i) {
        if (!j[i].is_array() || j[i].size() != c)
            bad("matrix rows have unequal length");
        for (size_t k = 0; k < c; ++k)
            m(i, k) = scalar_from_json(j[i][k]);
    }
    return m;
}

Json poly_to_json(const Poly& p)
{
    Json out = Json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(Json::array({e, c.re().get_str(), c.im().get_str()}));
    return out;
}

Poly poly_from_json(const Json& j, size_t nvars, Space space)
{
    if (!j.is_array())
        bad("polynomial must be an array of terms");
    Poly p(nvars, space);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            bad("polynomial term must be [exponents, re, im]");
        auto e = t[0].get<Exps>();
        if (e.size() != nvars)
            bad("exponent vector has the wrong length");
        p.add_term(e, Scalar(rational_from_json(t[1]), rational_from_json(t[2])));
    }
    return p;
}

Json exppoly_to_json(const ExpPoly& f)
{
    Json out = Json::array();
    for (const auto& [e, c] : f.terms())
        out.push_back(Json::array({e, c.re().get_str(), c.im().get_str()}));
    return out;
}

ExpPoly exppoly_from_json(const Json& j, size_t rank)
{
    if (!j.is_array())
        bad("exponential polynomial must be an array of terms");
    ExpPoly f(rank);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            bad("term must be [exponents, re, im]");
        auto e = t[0].get<Exps>();
        if (e.size() != rank)
            bad("exponent vector has the wrong length");
        f.add_term(e, Scalar(rational_from_json(t[1]), rational_from_json(t[2])));
    }
    return f;
}

Json mult_to_json(const MultFn& k)
{
    Json out = Json::array();
    for (const auto& x : k.v)
        out.push_back(scalar_to_json(x));
    return out;
}

MultFn mult_from_json(const Json& j, const RootDatum& rd)
{
    if (!j.is_array() || j.size() != rd.n_pos())
        bad("multiplicity needs one value per positive root");
    MultFn k = rd.zero_mult();
    for (size_t i = 0; i < j.size(); ++i)
        k[i] = scalar_from_json(j[i]);
    return k;
}

Json helt_to_json(const HElt& h)
{
    Json terms = Json::array();
    for (const auto& [w, p] : h.terms())
        terms.push_back(Json{{"w", h.rd().elt(w).word}, {"poly", poly_to_json(p)}});
    return Json{{"k1", mult_to_json(h.k1())}, {"terms", terms}};
}

HElt helt_from_json(const Json& j, const RootDatum& rd)
{
    if (!j.is_object() || !j.contains("k1") || !j.contains("terms"))
        bad("Hecke element needs k1 and terms");
    HElt h(rd, mult_from_json(j["k1"], rd));
    for (const auto& t : j["terms"]) {
        auto word = t.at("w").get<std::vector<int>>();
        for (int x : word)
            if (x < 0 || static_cast<size_t>(x) >= rd.rank())
                bad("reduced word uses an unknown generator");
        h.add_term(rd.from_word(word), poly_from_json(t.at("poly"), rd.rank(), Space::ADual));
    }
    return h;
}

Json hmodule_to_json(const HModule& x)
{
    Json gens = Json::object();
    for (size_t i = 0; i < x.s.size(); ++i)
        gens["s_" + std::to_string(i + 1)] = matrix_to_json(x.s[i]);
    for (size_t i = 0; i < x.xi.size(); ++i)
        gens["xi_" + std::to_string(i + 1)] = matrix_to_json(x.xi[i]);
    Json param = Json::array();
    for (const auto& c : x.param)
        param.push_back(scalar_to_json(c));
    return Json{{"dim", x.dim},
                {"basis_labels", x.labels},
                {"gens", gens},
                {"type", x.rd ? x.rd->type() : std::string()},
                {"k1", mult_to_json(x.k1)},
                {"kind", x.kind},
                {"param", param}};
}

HModule hmodule_from_json(const Json& j, const RootDatum& rd)
{
    try {
        HModule x;
        x.rd = &rd;
        x.dim = j.at("dim").get<size_t>();
        x.labels = j.at("basis_labels").get<std::vector<std::string>>();
        const Json& gens = j.at("gens");
        for (size_t i = 0; i < rd.rank(); ++i) {
            x.s.push_back(matrix_from_json(gens.at("s_" + std::to_string(i + 1))));
            x.xi.push_back(matrix_from_json(gens.at("xi_" + std::to_string(i + 1))));
        }
        if (gens.size() != 2 * rd.rank())
            bad("module has generators for a different rank");
        for (const auto& m : x.s)
            if (m.rows() != x.dim || m.cols() != x.dim)
                bad("generator matrix does not match dim");
        for (const auto& m : x.xi)
            if (m.rows() != x.dim || m.cols() != x.dim)
                bad("generator matrix does not match dim");
        x.k1 = j.contains("k1") ? mult_from_json(j["k1"], rd) : rd.zero_mult();
        x.kind = j.value("kind", std::string());
        if (j.contains("param"))
            for (const auto& c : j["param"])
                x.param.push_back(scalar_from_json(c));
        return x;
    } catch (const Json::exception& e) {
        bad(std::string("malformed module JSON: ") + e.what());
    }
}

Config config_from_json(const Json& j)
{
    try {
        if (!j.is_object())
            bad("config must be a JSON object");
        Config c;
        std::string type = j.value("type", std::string("custom"));
        bool explicit_data = j.contains("gram") || j.contains("sigma_plus");
        if (type != "custom" && !explicit_data) {
            std::vector<int> dims;
            if (j.contains("dims"))
                dims = j["dims"].get<std::vector<int>>();
            c.spec = preset_spec(type, dims);
        } else {
            if (!j.contains("rank") || !j.contains("gram") || !j.contains("sigma_plus"))
                bad("custom root datum needs rank, gram and sigma_plus");
            c.spec.type = type;
            long rank = j["rank"].get<long>();
            if (rank <= 0)
                bad("rank must be positive");
            c.spec.rank = static_cast<size_t>(rank);
            const Json& g = j["gram"];
            if (!g.is_array() || g.size() != c.spec.rank)
                bad("gram must be rank x rank");
            c.spec.gram = QMat(c.spec.rank, c.spec.rank);
            for (size_t r = 0; r < c.spec.rank; ++r) {
                QVec row = qvec_from_json(g[r]);
                if (row.size() != c.spec.rank)
                    bad("gram must be rank x rank");
                for (size_t k = 0; k < c.spec.rank; ++k)
                    c.spec.gram(r, k) = row[k];
            }
            for (const auto& s : j["sigma_plus"]) {
                SigmaRoot root;
                root.coords = qvec_from_json(s.at("coords"));
                if (root.coords.size() != c.spec.rank)
                    bad("root coordinates have the wrong length");
                root.dim1 = s.value("dim1", 1);
                root.dim2 = s.value("dim2", 0);
                if (root.dim1 < 0 || root.dim2 < 0)
                    bad("root-space dimensions must be nonnegative");
                c.spec.sigma_plus.push_back(root);
            }
        }
        if (j.contains("k")) {
            const Json& k = j["k"];
            std::vector<Scalar> vals;
            if (k.is_array()) {
                for (const auto& v : k)
                    vals.push_back(scalar_from_json(v));
            } else if (k.is_object()) {
                vals.resize(k.size());
                for (const auto& [key, v] : k.items()) {
                    size_t idx = 0;
                    try {
                        idx = std::stoul(key);
                    } catch (const std::exception&) {
                        bad("k keys must be orbit indices");
                    }
                    if (idx >= vals.size())
                        bad("k orbit index out of range");
                    vals[idx] = scalar_from_json(v);
                }
            } else {
                bad("k must be an array or an object");
            }
            c.k = vals;
        }
        return c;
    } catch (const Json::exception& e) {
        bad(std::string("malformed config: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::BadConfig)
            throw;
        bad(e.what());
    }
}

Json config_to_json(const Config& c)
{
    Json gram = Json::array();
    for (size_t r = 0; r < c.spec.rank; ++r) {
        QVec row;
        for (size_t k = 0; k < c.spec.rank; ++k)
            row.push_back(c.spec.gram(r, k));
        gram.push_back(qvec_to_json(row));
    }
    Json sp = Json::array();
    for (const auto& s : c.spec.sigma_plus)
        sp.push_back(Json{{"coords", qvec_to_json(s.coords)}, {"dim1", s.dim1}, {"dim2", s.dim2}});
    Json j{{"type", c.spec.type}, {"rank", c.spec.rank}, {"gram", gram}, {"sigma_plus", sp}};
    if (c.k) {
        Json k = Json::array();
        for (const auto& v : *c.k)
            k.push_back(scalar_to_json(v));
        j["k"] = k;
    }
    return j;
}

Config load_config(const std::string& path)
{
    std::string text = read_file(path);
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        bad(std::string("config is not valid JSON: ") + e.what());
    }
    return config_from_json(j);
}

Json report_to_json(const SuiteReport& r, bool timing)
{
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj{{"name", c.name}, {"pass", c.pass}, {"cases", c.cases}};
        if (!c.witness.empty())
            cj["witness"] = c.witness;
        if (!c.error.empty())
            cj["error"] = c.error;
        if (timing)
            cj["ms"] = c.ms;
        checks.push_back(std::move(cj));
    }
    Json j{{"suite", r.suite}, {"seed", r.seed}, {"types", r.types}, {"pass", r.ok()}, {"checks", checks}};
    if (timing)
        j["ms"] = r.ms;
    return j;
}

SuiteReport report_from_json(const Json& j)
{
    try {
        SuiteReport r;
        r.suite = j.at("suite").get<std::string>();
        r.seed = j.at("seed").get<unsigned>();
        r.types = j.at("types").get<std::vector<std::string>>();
        for (const auto& cj : j.at("checks")) {
            CheckResult c;
            c.name = cj.at("name").get<std::string>();
            c.pass = cj.at("pass").get<bool>();
            c.cases = cj.at("cases").get<size_t>();
            c.witness = cj.value("witness", std::string());
            c.error = cj.value("error", std::string());
            c.ms = cj.value("ms", 0.0);
            r.checks.push_back(std::move(c));
        }
        r.ms = j.value("ms", 0.0);
        if (j.at("pass").get<bool>() != r.ok())
            bad("report pass flag disagrees with its checks");
        return r;
    } catch (const Json::exception& e) {
        bad(std::string("malformed suite report: ") + e.what());
    }
}

std::string gfunc_csv(const std::vector<double>& t, const std::vector<CDouble>& g)
{
    std::string out = "t,re_G,im_G\n";
    for (size_t i = 0; i < t.size(); ++i)
        out += fmt(t[i]) + "," + fmt(g[i].real()) + "," + fmt(g[i].imag()) + "\n";
    return out;
}

void parse_gfunc_csv(const std::string& text, std::vector<double>& t, std::vector<CDouble>& g)
{
    t.clear();
    g.clear();
    for (const auto& row : csv_rows(text, 3)) {
        t.push_back(parse_double(row[0]));
        g.emplace_back(parse_double(row[1]), parse_double(row[2]));
    }
}

std::string spectrum_csv(const Spectrum& s)
{
    std::string out = "lambda,re_F1,im_F1,re_Fs,im_Fs\n";
    for (size_t i = 0; i < s.nu.size(); ++i)
        out += fmt(s.nu[i]) + "," + fmt(s.f1[i].real()) + "," + fmt(s.f1[i].imag()) + "," + fmt(s.fs[i].real()) +
               "," + fmt(s.fs[i].imag()) + "\n";
    return out;
}

Spectrum parse_spectrum_csv(const std::string& text)
{
    Spectrum s;
    for (const auto& row : csv_rows(text, 5)) {
        s.nu.push_back(parse_double(row[0]));
        s.f1.emplace_back(parse_double(row[1]), parse_double(row[2]));
        s.fs.emplace_back(parse_double(row[3]), parse_double(row[4]));
    }
    return s;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw Error(ErrorCode::IoError, "cannot write " + path);
}

} // namespace gha
