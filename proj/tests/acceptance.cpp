// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Fixture checks run first, then the exhaustive batteries.

#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lcone/cone.hpp"
#include "lcone/crystal.hpp"
#include "lcone/rectangle.hpp"
#include "lcone/verify.hpp"
#include "lcone/wiring.hpp"

using namespace lcone;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok,
            const std::string& detail = "") {
    std::printf("%2d. %-34s %s%s%s\n", number, name.c_str(),
                ok ? "PASS" : "FAIL", detail.empty() ? "" : "  -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(number, name, ok, detail);
}

bool run_suite(const VerifyReport& r, std::string& detail) {
    detail = std::to_string(r.instances) + " instances, " +
             std::to_string(r.failures.size()) + " failures";
    if (!r.failures.empty())
        detail += "; first: " + r.failures[0].input + " expected " +
                  r.failures[0].expected + " got " + r.failures[0].got;
    return r.ok();
}

} // namespace

int main() {
    criterion(1, "chamber set fixture", [](std::string&) {
        std::multiset<ChamberSet> got;
        for (const Chamber& c :
             chamber_sets(make_reduced_word(3, {1, 3, 2, 1, 3, 2})))
            got.insert(c.label);
        return got == std::multiset<ChamberSet>{{1, 3, 4}, {3}, {1, 3}};
    });

    criterion(2, "reading sequence fixtures", [](std::string&) {
        RectangleDiagram d = diagram(parse_partial_quiver(5, "LRL-"));
        std::vector<std::pair<int, int>> monomial = {
            {4, 1}, {5, 1}, {2, 1}, {3, 2}, {4, 1}, {1, 1}, {2, 2}, {3, 1},
            {1, 1}};
        return mu(d) == std::vector<int>{4, 5, 2, 3, 3, 4, 1, 2, 2, 3, 1} &&
               monomial_word(d) == monomial;
    });

    criterion(3, "root set and operator fixtures", [](std::string&) {
        RectangleDiagram d = diagram(parse_partial_quiver(5, "LRL-"));
        std::set<PositiveRoot> s_want = {{1, 2}, {2, 3}, {3, 4},
                                         {4, 6}, {1, 4}, {2, 5}};
        std::vector<int> v_want = {0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, 1};
        bool ok = s_set(d) == s_want && v_vector(d) == v_want;
        ok = ok && d.box_rows.size() == 3 && d.box_rows[0].count == 1 &&
             d.box_rows[1].count == 3 && d.box_rows[2].count == 2;

        std::vector<long long> c(longest_length(5), 0);
        for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {4, 5}, {1, 4}})
            c[standard_root_position(5, i, j)] = 1;
        auto after = ftilde(5, c, 3);
        auto want = c;
        want[standard_root_position(5, 3, 5)] = 1;
        want[standard_root_position(5, 4, 5)] = 0;
        ok = ok && after == want;

        SymbolSequence abs = classify_symbols(1, "00++--+++0-0--+----00");
        return ok && abs.reduced == "0---" && abs.case_id == 2;
    });

    criterion(4, "root multiset battery (rank <= 4)", [](std::string& d) {
        return run_suite(verify_multiset(4), d);
    });
    criterion(5, "rectangle word battery (rank <= 5)", [](std::string& d) {
        return run_suite(verify_rectangle_word(5), d);
    });
    criterion(6, "string-to-Lusztig battery (rank <= 6)", [](std::string& d) {
        return run_suite(verify_theorem63(6), d);
    });
    criterion(7, "crossing-out battery", [](std::string& d) {
        return run_suite(verify_crossing_out(5, 10000, 1), d);
    });
    criterion(8, "transport battery", [](std::string& d) {
        return run_suite(verify_transport(4, 10000, 1), d);
    });
    criterion(9, "string cone inclusion battery", [](std::string& d) {
        return run_suite(verify_premat(4, 100, 1), d);
    });

    criterion(10, "enumeration oracles", [](std::string& d) {
        long long word_counts[] = {0, 1, 2, 16, 768};
        long long class_counts[] = {0, 1, 2, 8, 62};
        for (int n = 1; n <= 4; ++n) {
            auto words = enumerate_reduced_words(n);
            if ((long long)words.size() != word_counts[n]) {
                d = "word count mismatch at rank " + std::to_string(n);
                return false;
            }
            std::set<std::vector<int>> forms;
            for (const ReducedWord& w : words)
                forms.insert(commutation_normal_form(n, w.letters));
            if ((long long)forms.size() != class_counts[n] ||
                commutation_classes(n).classes.size() != forms.size()) {
                d = "class count mismatch at rank " + std::to_string(n);
                return false;
            }
        }
        return true;
    });

    criterion(11, "linearity explorer (rank <= 3)", [](std::string& d) {
        int violations = 0, dependent = 0;
        for (int n = 1; n <= 3; ++n) {
            ConjectureReport r = conjecture_explore(n, 100, 1);
            for (const ConjectureClassReport& c : r.classes) {
                if (!c.independent) ++dependent;
                violations += c.linearity_violations;
            }
        }
        d = std::to_string(dependent) + " dependent classes, " +
            std::to_string(violations) + " linearity violations";
        return dependent == 0 && violations == 0;
    });

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
