#pragma once

#include "gha/hecke.hpp"
#include "gha/hmodules.hpp"
#include "gha/hyper1d.hpp"
#include "gha/suites.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gha {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
/// Accepts "p/q", "p/q+r/s i" or a JSON integer.
Scalar scalar_from_json(const Json& j);

/// Row-major array of Scalar strings.
Json matrix_to_json(const CMat& m);
CMat matrix_from_json(const Json& j);

/// [exponents, "re", "im"] triples in lexicographic exponent order.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, size_t nvars, Space space);
Json exppoly_to_json(const ExpPoly& f);
ExpPoly exppoly_from_json(const Json& j, size_t rank);

Json mult_to_json(const MultFn& k);
MultFn mult_from_json(const Json& j, const RootDatum& rd);

Json helt_to_json(const HElt& h);
HElt helt_from_json(const Json& j, const RootDatum& rd);

/// {"dim", "basis_labels", "gens": {"s_1", ..., "xi_1", ...}} plus "type", "k1", "kind", "param".
Json hmodule_to_json(const HModule& x);
HModule hmodule_from_json(const Json& j, const RootDatum& rd);

/// Root datum config file.
struct Config {
    RootDatumSpec spec;
    std::optional<std::vector<Scalar>> k; // orbit values
};

/// Throws BadConfig on malformed input.
Config config_from_json(const Json& j);
Json config_to_json(const Config& c);
/// Throws IoError if the file cannot be read, BadConfig if it does not parse.
Config load_config(const std::string& path);

Json report_to_json(const SuiteReport& r, bool timing);
SuiteReport report_from_json(const Json& j);

/// Columns t, Re G, Im G.
std::string gfunc_csv(const std::vector<double>& t, const std::vector<CDouble>& g);
void parse_gfunc_csv(const std::string& text, std::vector<double>& t, std::vector<CDouble>& g);
/// Columns lambda, Re F1, Im F1, Re Fs, Im Fs.
std::string spectrum_csv(const Spectrum& s);
Spectrum parse_spectrum_csv(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace gha
