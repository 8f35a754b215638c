#pragma once

#include "wrightkit/rational.hpp"
#include "wrightkit/series.hpp"

namespace wrightkit {

// d/dz W(a,b|z) = W(a,a+b|z) and W(a,b|z) = int_0^z W(a,a+b|x) dx + 1/Gamma(b).
// Both are pure parameter shifts; the result is reclassified.

inline WrightSpec d_dz(const WrightSpec& s) { return classify(s.a, s.a + s.b); }

inline WrightSpec d_dz(const WrightSpec& s, int times) {
    return classify(s.a, s.b + Rational(times) * s.a);
}

inline WrightSpec antiderivative(const WrightSpec& s) { return classify(s.a, s.b - s.a); }

}  // namespace wrightkit
