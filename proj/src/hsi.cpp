#include "tiger/hsi.hpp"

#include <algorithm>
#include <cmath>

namespace tiger {

HsiSample rgb_to_hsi(double r, double g, double b) {
    HsiSample out;
    out.i = (r + g + b) / 3.0;
    if (out.i <= 0.0) return out;  // black: H=0, S=0, I=0

    const double mn = std::min({r, g, b});
    out.s = 1.0 - mn / out.i;

    // arccos formulation; undefined hue (achromatic) maps to 0.
    const double num = 0.5 * ((r - g) + (r - b));
    const double den = std::sqrt((r - g) * (r - g) + (r - b) * (g - b));
    if (den <= 0.0) {
        out.h = 0.0;
        return out;
    }
    double ratio = num / den;
    ratio = std::clamp(ratio, -1.0, 1.0);
    double h = std::acos(ratio) * 180.0 / 3.141592653589793238462643383279502884;
    if (b > g) h = 360.0 - h;
    if (h >= 360.0) h -= 360.0;
    out.h = h;
    return out;
}

}  // namespace tiger
