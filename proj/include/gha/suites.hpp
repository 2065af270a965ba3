#pragma once

#include "gha/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gha {

struct CheckResult {
    std::string name;
    bool pass = true;
    size_t cases = 0;
    std::string witness; // first failing case
    std::string error;   // error name when a check aborted with an exception
    double ms = 0;
};

struct SuiteReport {
    std::string suite;
    unsigned seed = 0;
    std::vector<std::string> types;
    std::vector<CheckResult> checks;
    double ms = 0;

    bool ok() const;
    /// True when some check aborted with a numeric error (solver, quadrature grid or pole).
    bool numeric_failure() const;
};

struct SuiteOptions {
    unsigned seed = 1;
    /// Root data to run on; empty means the suite's default presets.
    std::vector<RootDatumSpec> data;
    /// Orbit values of k used instead of random draws, when set.
    std::optional<std::vector<Scalar>> k;
};

/// dunkl, cherednik, hecke, modules, sl2, transform, rootdata.
const std::vector<std::string>& suite_names();

/// Throws UnknownSuite for other names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

} // namespace gha
