// Evaluate, decompose and cross-check a few Wright functions.

#include <cstdio>

#include "wrightkit/wrightkit.hpp"

int main() {
    using namespace wrightkit;

    // W(-1/2, 1 | z) = erfc(-z/2)
    const double w = wright(rat(-1, 2), 1, 1.0);
    std::printf("W(-1/2, 1 | 1)       = %.16g\n", w);
    std::printf("erfc(-1/2)           = %.16g\n", wrightkit::erfc(-0.5));

    const SeriesResult s = wright_series_detailed(rat(-1, 2), 1, 1.0);
    std::printf("defining series      = %.16g (%zu terms, condition %.2f)\n", s.value, s.terms, s.condition);

    std::printf("\n%s", render_text(decompose(rat(-2, 3), rat(5, 2))).c_str());
    std::printf("\nW(-3, 4 | z) = %s\n", bell_reduce(-3, 4).str().c_str());
    std::printf("M_{1/3}(1)   = %.16g\n", mainardi(rat(1, 3), 1.0));
    return 0;
}
