// Acceptance suite: runs every criterion at its pinned tolerance and prints
// one pass/fail line per criterion. Exit status is the number of failures.

#include <cstdio>
#include <string>
#include <vector>

#include "eisenzeta/parallel.hpp"
#include "eisenzeta/registry.hpp"

using namespace eisenzeta;

namespace {

struct Criterion {
    int number;
    const char* title;
    std::vector<const char*> targets;
};

const std::vector<Criterion> k_criteria = {
    {1, "Theorem 1 oracle equivalence (27-point grid, radius 1500)", {"thm1"}},
    {2, "Theorem 2 remainder scaling, slope J +/- 0.25", {"thm2-scaling"}},
    {3, "Theorem 3 exact remainder identity, rel 1e-7", {"thm3"}},
    {4, "Theorem 3 refined scaling, slope (sigma+J+K) +/- 0.3", {"thm3-scaling"}},
    {5, "Mellin-Barnes remainder cross-check, 1e-6", {"mellin-barnes"}},
    {6, "Ramanujan family ramanujan-2-31, 1e-9 with variant consistency", {"ramanujan-2-31"}},
    {7, "Euler euler-2-32, 1e-12 for k = 1..10", {"euler-2-32"}},
    {8, "Ramanujan odd zeta ramanujan-2-33", {"ramanujan-2-33"}},
    {9, "Lerch functional equation funceq-2-7, 1e-9 on 100 random points", {"funceq-2-7"}},
    {10, "Coefficient reciprocity laws and generating function", {"coeff-laws"}},
    {11,
     "Classical suite: quasi-modularity, E_2(i), invariants, Legendre, wp oracle, "
     "sigma forms, integration oracles",
     {"quasimodular-3-4", "e2-value", "e-sum-zero", "legendre", "wp-dual-route",
      "sigma-forms", "integration-oracles"}},
    {12, "Kummer layer: connection formula and U(a;a;Z) reduction",
     {"kummer-connection", "kummer-reduction"}},
};

} // namespace

int main() {
    const Truncation trunc{};
    const int workers = default_workers();
    int failures = 0;

    for (const Criterion& c : k_criteria) {
        bool passed = true;
        double worst = 0.0;
        std::string detail;
        for (const char* target : c.targets) {
            VerifyReport rep;
            try {
                rep = run_verify(target, {}, trunc, workers);
            } catch (const std::exception& e) {
                passed = false;
                detail += std::string(" [") + target + ": " + e.what() + "]";
                continue;
            }
            passed = passed && rep.passed;
            worst = std::max(worst, rep.max_residual);
            for (const VerifyRow& row : rep.rows) {
                if (!row.passed) {
                    detail += std::string(" [") + target + " " + row.params +
                              ": residual " + std::to_string(row.residual) + " > " +
                              std::to_string(row.threshold) + "]";
                }
                if (!row.note.empty() && std::string(target) == "thm2-scaling")
                    detail += std::string(" {") + row.note + "}";
            }
        }
        std::printf("%s criterion %2d: %s  (max residual %.3e)%s\n",
                    passed ? "PASS" : "FAIL", c.number, c.title, worst, detail.c_str());
        std::fflush(stdout);
        if (!passed) ++failures;
    }
    return failures;
}
