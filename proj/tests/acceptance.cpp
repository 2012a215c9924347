// Acceptance suite: one line per criterion, nonzero exit on any failure.
// A criterion passes when every mapped law reports zero violations and the
// wall-clock stays inside the stated budget.

#include "stab/laws.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

using namespace stab;

namespace {

struct LawRun {
    std::string id;
    LawConfig cfg;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::vector<LawRun> runs;
};

LawConfig cfg(std::optional<int> max_n, std::optional<int> samples,
    uint64_t seed = 1)
{
    LawConfig c;
    c.max_n = max_n;
    c.samples = samples;
    c.seed = seed;
    return c;
}

std::vector<Criterion> build_criteria()
{
    std::vector<Criterion> cs;
    cs.push_back({1,
        "observation suite: deltas, criticality propagation, unique-color "
        "characterization over all labeled graphs n <= 5",
        300,
        {{"obs1", cfg(5, {})}, {"obs2", cfg(5, {})}, {"obs3", cfg(5, {})},
            {"obs4", cfg(5, {})}}});
    cs.push_back({2,
        "alpha/beta/omega element-wise equalities and the "
        "stability/criticality flip (n <= 4 exhaustive + 500 random n <= 6)",
        300,
        {{"prop1.edgewise", cfg(4, 500)}, {"prop2", cfg(4, 500)}}});
    cs.push_back({3, "replication chi-invariance over all (G, v) with n <= 5",
        120, {{"lem6", cfg(5, {})}}});
    cs.push_back({4,
        "chi edge stabilization: +2 shift and exact edge classification "
        "(100 random (G,S), n <= 5)",
        600, {{"lem7", cfg(5, 100)}}});
    cs.push_back({5,
        "beta gadgets: +2 and +6 shifts with all element-class properties "
        "(100 random graphs each, n <= 5)",
        600, {{"lem9", cfg(5, 100)}, {"lem13", cfg(5, 100)}}});
    cs.push_back({6,
        "join AND combinators over all 2-/3-tuples from {K1, K2, P3, C4, "
        "C5, K3uK3}",
        600, {{"thm3", cfg({}, {})}, {"cor2", cfg({}, {})}}});
    cs.push_back({7,
        "formula suite: 3CNF conversion, the three stability "
        "constructions, and the or-product (>= 200 instances each)",
        300,
        {{"lem4", cfg({}, 200)}, {"thm4.conp", cfg({}, 200)},
            {"thm4.np", cfg({}, 200)}, {"thm4.or2", cfg({}, 200)}}});
    cs.push_back({8,
        "clause-tracking graph biconditionals (>= 50 instances plus the "
        "8-block)",
        900, {{"lem5", cfg({}, 50)}, {"thm5", cfg({}, 50)}}});
    cs.push_back({9,
        "end-to-end beta-stability comparison over all 64 pairs of <= "
        "3-vertex graphs",
        2700, {{"thm9.end2end", cfg({}, {})}}});
    cs.push_back({10,
        "end-to-end beta-unfrozenness comparison over the same 64 pairs",
        120, {{"thm11.end2end", cfg({}, {})}}});
    cs.push_back({11,
        "two-way stability reductions over all graphs n <= 4", 600,
        {{"thm14", cfg(4, {})}, {"thm15.end2end", cfg(4, {})}}});
    cs.push_back({12,
        "colorability count-comparison for k in {1,2} under the monotone "
        "premise",
        300, {{"thm13", cfg({}, {})}}});
    cs.push_back({13,
        "conditional unfrozenness machinery with the exact test unfreezer "
        "over all pairs n <= 4",
        900, {{"thm12", cfg(4, {})}}});
    cs.push_back({14,
        "closed-form vertex-addition verdicts agree with full enumeration "
        "(n <= 4)",
        120, {{"prop1.closedforms", cfg(4, {})}, {"thm10", cfg(4, {})}}});
    return cs;
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<int> only, skip;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc)
            only.push_back(std::atoi(argv[++i]));
        else if (!std::strcmp(argv[i], "--skip") && i + 1 < argc)
            skip.push_back(std::atoi(argv[++i]));
        else if (!std::strcmp(argv[i], "--list")) {
            for (const auto& c : build_criteria())
                std::printf("C%02d %s\n", c.id, c.title.c_str());
            return 0;
        } else {
            std::fprintf(stderr,
                "usage: acceptance [--criterion N]... [--skip N]... "
                "[--list]\n");
            return 2;
        }
    }

    const auto& registry = LawRegistry::instance();
    bool all_ok = true;
    for (const auto& c : build_criteria()) {
        bool wanted = only.empty()
            || std::find(only.begin(), only.end(), c.id) != only.end();
        if (std::find(skip.begin(), skip.end(), c.id) != skip.end())
            wanted = false;
        if (!wanted)
            continue;

        auto start = std::chrono::steady_clock::now();
        long instances = 0, violations = 0;
        std::string first_violation;
        for (const auto& run : c.runs) {
            LawReport r = registry.run(run.id, run.cfg);
            instances += r.instances;
            violations += long(r.violations.size());
            if (!r.violations.empty() && first_violation.empty())
                first_violation = run.id + ": " + r.violations[0].detail;
        }
        double elapsed = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start)
                             .count();
        bool in_budget = elapsed <= c.budget_seconds;
        bool pass = violations == 0 && in_budget;
        all_ok = all_ok && pass;
        std::printf("[%s] C%02d %s — %ld instances, %ld violations, %.1fs "
                    "(budget %.0fs)%s\n",
            pass ? "PASS" : "FAIL", c.id, c.title.c_str(), instances,
            violations, elapsed, c.budget_seconds,
            in_budget ? "" : " [time budget exceeded]");
        if (!first_violation.empty())
            std::printf("       first violation: %s\n",
                first_violation.c_str());
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
