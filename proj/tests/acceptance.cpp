#include <cstdio>

#include "braidkit/suites.hpp"

int main() {
    int failed = 0;
    for (int n = 1; n <= 10; ++n) {
        braidkit::SuiteResult r;
        bool pass = false;
        std::string note;
        try {
            r = braidkit::criterion_suite(n, 0);
            pass = r.pass();
        } catch (const std::exception& e) {
            note = std::string(" error: ") + e.what();
        }
        if (!pass) ++failed;
        std::printf("criterion %d: %s %s (%zu checks, %zu failures)%s\n", n, pass ? "PASS" : "FAIL",
                    braidkit::criterion_title(n).c_str(), r.checks.size(), r.failures(), note.c_str());
        if (!pass)
            for (const auto& c : r.checks)
                if (!c.pass) std::printf("  failed %s: %s\n", c.id.c_str(), c.residual.c_str());
    }
    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
