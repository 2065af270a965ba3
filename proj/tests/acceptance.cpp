// Acceptance run: one line per criterion, nonzero exit if any fails.
#include "gha/suites.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Criterion {
    int id;
    const char* title;
    const char* suite;
    double limit_s;
};

const std::vector<Criterion> kCriteria{
    {1, "Dunkl operators", "dunkl", 60},
    {2, "Cherednik operators", "cherednik", 120},
    {3, "graded Hecke algebra", "hecke", 60},
    {4, "H-modules", "modules", 180},
    {5, "SL(2,R) battery", "sl2", 10},
    {6, "root-data product identity", "rootdata", 1},
    {7, "rank-one numerics", "transform", 120},
};

} // namespace

int main(int argc, char** argv)
{
    unsigned seed = argc > 1 ? static_cast<unsigned>(std::stoul(argv[1])) : 1;
    int failed = 0;
    for (const auto& c : kCriteria) {
        gha::SuiteOptions opt;
        opt.seed = seed;
        gha::SuiteReport rep;
        std::string detail;
        bool pass = false;
        try {
            rep = gha::run_suite(c.suite, opt);
            pass = rep.ok() && rep.ms <= c.limit_s * 1000;
            size_t cases = 0;
            for (const auto& ch : rep.checks) {
                cases += ch.cases;
                if (!ch.pass && detail.empty())
                    detail = ch.name + ": " + (ch.error.empty() ? "" : ch.error + " ") + ch.witness;
            }
            if (detail.empty() && !pass)
                detail = "over the time limit";
            char buf[160];
            std::snprintf(buf, sizeof buf, "%zu checks, %zu cases, %.2f s (limit %.0f s)", rep.checks.size(), cases,
                          rep.ms / 1000, c.limit_s);
            detail = detail.empty() ? buf : std::string(buf) + "; " + detail;
        } catch (const std::exception& e) {
            detail = e.what();
        }
        std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", c.id, c.title, detail.c_str());
        std::fflush(stdout);
        if (!pass)
            ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(kCriteria.size()) - failed, kCriteria.size());
    return failed == 0 ? 0 : 1;
}
