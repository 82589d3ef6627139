#pragma once

#include "tiger/types.hpp"

namespace tiger {

// Hue in degrees [0, 360), saturation in [0, 1], intensity on the input
// channel scale. H is 0 for achromatic pixels.
struct HsiSample {
    double h = 0.0;
    double s = 0.0;
    double i = 0.0;
};

HsiSample rgb_to_hsi(double r, double g, double b);

inline HsiSample rgb_to_hsi(const ColorSample& c) {
    return rgb_to_hsi(static_cast<double>(c.r), static_cast<double>(c.g),
                      static_cast<double>(c.b));
}

}  // namespace tiger
