#include "tiger/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tiger/dft.hpp"

namespace tiger::stats {

double percentile(std::span<const double> series, double p) {
    if (series.empty()) throw std::invalid_argument("percentile: empty series");
    std::vector<double> sorted(series.begin(), series.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() == 1) return sorted[0];
    const double rank = p / 100.0 * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(rank));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = rank - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

Stats5 time_stats5(std::span<const double> series) {
    if (series.empty()) throw std::invalid_argument("time_stats5: empty series");
    const auto n = static_cast<double>(series.size());

    Stats5 out;
    double sum = 0.0, sumsq = 0.0;
    for (double v : series) {
        sum += v;
        sumsq += v * v;
    }
    out.mean = sum / n;
    double var = 0.0;
    for (double v : series) var += (v - out.mean) * (v - out.mean);
    out.variance = var / n;
    out.rms = std::sqrt(sumsq / n);
    out.median = percentile(series, 50.0);
    out.p80_20 = percentile(series, 80.0) - percentile(series, 20.0);
    return out;
}

double pearson(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || a.size() != b.size()) return 0.0;
    const auto n = static_cast<double>(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        cov += (a[i] - ma) * (b[i] - mb);
        va += (a[i] - ma) * (a[i] - ma);
        vb += (b[i] - mb) * (b[i] - mb);
    }
    if (va <= 0.0 || vb <= 0.0) return 0.0;  // degenerate axis
    return cov / std::sqrt(va * vb);
}

SpectralStats spectral_stats(std::span<const double> series, double rate_hz) {
    if (series.empty()) throw std::invalid_argument("spectral_stats: empty series");
    const std::size_t n = series.size();

    double mean = 0.0;
    for (double v : series) mean += v;
    mean /= static_cast<double>(n);
    std::vector<double> centered(n);
    for (std::size_t i = 0; i < n; ++i) centered[i] = series[i] - mean;

    const auto spectrum = tiger::dft::dft(centered);

    SpectralStats out;
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) total += std::norm(spectrum[k]);
    out.energy = total / static_cast<double>(n);

    // Positive-frequency bins only; bin 0 carries no power after centering.
    const std::size_t half = n / 2;
    if (half == 0) return out;

    double pos_total = 0.0;
    std::size_t best_k = 0;
    double best_mag = -1.0;
    for (std::size_t k = 1; k <= half; ++k) {
        const double p = std::norm(spectrum[k]);
        pos_total += p;
        if (std::abs(spectrum[k]) > best_mag) {
            best_mag = std::abs(spectrum[k]);
            best_k = k;
        }
    }
    if (pos_total <= 0.0) return out;  // constant series

    double h = 0.0;
    for (std::size_t k = 1; k <= half; ++k) {
        const double p = std::norm(spectrum[k]) / pos_total;
        if (p > 0.0) h -= p * std::log(p);
    }
    out.entropy = half > 1 ? h / std::log(static_cast<double>(half)) : 0.0;
    out.dominant_freq_hz = static_cast<double>(best_k) * rate_hz / static_cast<double>(n);
    out.dominant_amp = 2.0 * best_mag / static_cast<double>(n);
    return out;
}

double mean_crossing_rate(std::span<const double> series) {
    if (series.size() < 2) return 0.0;
    double mean = 0.0;
    for (double v : series) mean += v;
    mean /= static_cast<double>(series.size());
    std::size_t crossings = 0;
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        if ((series[i] - mean) * (series[i + 1] - mean) < 0.0) ++crossings;
    }
    return static_cast<double>(crossings) / static_cast<double>(series.size() - 1);
}

}  // namespace tiger::stats
