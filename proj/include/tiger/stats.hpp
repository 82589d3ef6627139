#pragma once

#include <span>
#include <vector>

namespace tiger::stats {

// The five window statistics shared by every feature stream. Percentiles
// use linear interpolation on the sorted series; variance is population
// variance (divide by n).
struct Stats5 {
    double mean = 0.0;
    double median = 0.0;
    double variance = 0.0;
    double p80_20 = 0.0;  // 80th minus 20th percentile
    double rms = 0.0;
};

Stats5 time_stats5(std::span<const double> series);

// p in [0, 100], linear interpolation between order statistics.
double percentile(std::span<const double> series, double p);

double pearson(std::span<const double> a, std::span<const double> b);

// Time- and frequency-domain summary of one series. Spectral quantities
// come from the exact n-point DFT of the mean-removed series; frequencies
// are in Hz given the sampling rate.
struct SpectralStats {
    double energy = 0.0;         // (1/n) * sum_k |X_k|^2 of the mean-removed series
    double entropy = 0.0;        // power-spectrum entropy over positive bins, normalized to [0,1]
    double dominant_freq_hz = 0.0;
    double dominant_amp = 0.0;   // 2|X_k|/n at the dominant bin
};

SpectralStats spectral_stats(std::span<const double> series, double rate_hz);

// Fraction of consecutive sample pairs that straddle the series mean.
double mean_crossing_rate(std::span<const double> series);

}  // namespace tiger::stats
