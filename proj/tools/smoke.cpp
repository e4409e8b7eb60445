// Scratch driver used during bring-up; not installed.
#include <chrono>
#include <cstdio>

#include "jd/enumerate.hpp"
#include "jd/quotient.hpp"

using namespace jd;

int main()
{
    // chord class counts per degree
    for (int n = 0; n <= 5; ++n)
        std::printf("chord classes n=%d: %zu\n", n, enumerate_chord_classes(n).size());

    // tripod reduces to I^2 - X
    StuReducer red;
    auto lc = red.reduce(tripod_diagram());
    std::printf("tripod -> %zu terms:\n", lc.terms.size());
    for (auto& [k, v] : lc.terms)
        std::printf("  %s : %s\n", pairs_string(k).c_str(), rat_str(v).c_str());

    auto w2 = red.reduce(wheel_round(2));
    std::printf("w2 ->\n");
    for (auto& [k, v] : w2.terms)
        std::printf("  %s : %s\n", pairs_string(k).c_str(), rat_str(v).c_str());

    for (int n = 0; n <= 6; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        auto qa = build_quotient_basis(n, false, red);
        auto qf = build_quotient_basis(n, true, red);
        auto t1 = std::chrono::steady_clock::now();
        std::printf("n=%d dim A=%d dim fA=%d   (%lld ms)\n", n, qa.dim(), qf.dim(),
                    (long long)std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
    }

    // symmetrized enumeration: n=1,2,3
    for (int n = 1; n <= 3; ++n) {
        auto cls = enumerate_symmetrized(n, 2 * n);
        std::printf("symmetrized n=%d: %zu classes\n", n, cls.size());
    }
    return 0;
}
