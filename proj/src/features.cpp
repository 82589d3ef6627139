#include "tiger/features.hpp"

#include <cmath>
#include <stdexcept>

#include "tiger/dft.hpp"
#include "tiger/hsi.hpp"
#include "tiger/stats.hpp"

namespace tiger::features {

namespace {

void append_stats5(std::vector<double>& out, std::span<const double> series) {
    const auto s = stats::time_stats5(series);
    out.push_back(s.mean);
    out.push_back(s.median);
    out.push_back(s.variance);
    out.push_back(s.p80_20);
    out.push_back(s.rms);
}

// The 13 base features shared by the IMU magnitude and lidar streams:
// the five window statistics, min/max/range, mean-crossing rate, and four
// spectral values from the mean-removed DFT.
void append_base13(std::vector<double>& out, std::span<const double> series, double rate_hz) {
    append_stats5(out, series);
    double mn = series[0], mx = series[0];
    for (double v : series) {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
    }
    out.push_back(mn);
    out.push_back(mx);
    out.push_back(mx - mn);
    out.push_back(stats::mean_crossing_rate(series));
    const auto sp = stats::spectral_stats(series, rate_hz);
    out.push_back(sp.energy);
    out.push_back(sp.entropy);
    out.push_back(sp.dominant_freq_hz);
    out.push_back(sp.dominant_amp);
}

Label majority_label(const SensorTrace& trace, int first_second, int count) {
    int screen = 0, nonscreen = 0;
    for (int s = first_second; s < first_second + count; ++s) {
        if (s < 0 || s >= static_cast<int>(trace.per_second_labels.size())) continue;
        (trace.per_second_labels[s] == Label::Screen ? screen : nonscreen)++;
    }
    return screen > nonscreen ? Label::Screen : Label::NonScreen;
}

}  // namespace

std::vector<Window> segment(const SensorTrace& trace) {
    const int windows = trace.duration_s() / kWindowSeconds;
    std::vector<Window> out;
    out.reserve(windows);

    std::size_t c = 0, m = 0, l = 0;
    for (int w = 0; w < windows; ++w) {
        const double t0 = static_cast<double>(w) * kWindowSeconds;
        const double t1 = t0 + kWindowSeconds;
        Window win;
        win.index = w;
        win.start_t = t0;

        win.color_begin = c;
        while (c < trace.color.size() && trace.color[c].t < t1) ++c;
        win.color_end = c;
        win.imu_begin = m;
        while (m < trace.imu.size() && trace.imu[m].t < t1) ++m;
        win.imu_end = m;
        win.lidar_begin = l;
        while (l < trace.lidar.size() && trace.lidar[l].t < t1) ++l;
        win.lidar_end = l;

        if (win.color_end == win.color_begin || win.imu_end == win.imu_begin ||
            win.lidar_end == win.lidar_begin)
            throw std::runtime_error("segment: empty stream slice in window " +
                                     std::to_string(w));
        win.truth = majority_label(trace, w * kWindowSeconds, kWindowSeconds);
        out.push_back(win);
    }
    return out;
}

std::vector<double> color_features(const SensorTrace& trace, const Window& w) {
    const std::size_t n = w.color_end - w.color_begin;
    if (n < 2) throw std::invalid_argument("color_features: need at least 2 samples");

    std::vector<double> h(n), s(n), i(n);
    std::vector<double> hs(n), ss(n), is(n);  // rescaled to [0,1] for distances
    for (std::size_t k = 0; k < n; ++k) {
        const HsiSample hsi = rgb_to_hsi(trace.color[w.color_begin + k]);
        h[k] = hsi.h;
        s[k] = hsi.s;
        i[k] = hsi.i;
        hs[k] = hsi.h / 360.0;
        ss[k] = hsi.s;
        is[k] = hsi.i / 255.0;
    }

    auto dist = [&](std::size_t a, std::size_t b) {
        const double dh = hs[a] - hs[b];
        const double ds = ss[a] - ss[b];
        const double di = is[a] - is[b];
        return std::sqrt(dh * dh + ds * ds + di * di);
    };

    std::vector<double> delta(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) delta[k] = dist(k, k + 1);

    std::vector<double> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) pairs.push_back(dist(a, b));

    std::vector<double> out;
    out.reserve(kColorFeatureCount);
    append_stats5(out, h);
    append_stats5(out, s);
    append_stats5(out, i);
    append_stats5(out, delta);
    append_stats5(out, pairs);
    return out;
}

std::vector<double> imu_features(const SensorTrace& trace, const Window& w) {
    const std::size_t n = w.imu_end - w.imu_begin;
    if (n < 8) throw std::invalid_argument("imu_features: need at least 8 samples");

    std::vector<double> out;
    out.reserve(kImuFeatureCount);

    for (int sensor = 0; sensor < 2; ++sensor) {
        std::vector<double> axes[3];
        for (auto& a : axes) a.resize(n);
        std::vector<double> mag(n);
        for (std::size_t k = 0; k < n; ++k) {
            const ImuSample& smp = trace.imu[w.imu_begin + k];
            const auto& v = sensor == 0 ? smp.accel : smp.gyro;
            axes[0][k] = v[0];
            axes[1][k] = v[1];
            axes[2][k] = v[2];
            mag[k] = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        }
        append_base13(out, mag, kImuRateHz);
        out.push_back(stats::pearson(axes[0], axes[1]));
        out.push_back(stats::pearson(axes[0], axes[2]));
        out.push_back(stats::pearson(axes[1], axes[2]));
        out.push_back(dft::normalized_xcorr_peak(axes[0], axes[1]));
        out.push_back(dft::normalized_xcorr_peak(axes[0], axes[2]));
        out.push_back(dft::normalized_xcorr_peak(axes[1], axes[2]));
    }
    return out;
}

std::vector<double> lidar_features(const SensorTrace& trace, const Window& w) {
    const std::size_t n = w.lidar_end - w.lidar_begin;
    if (n < 8) throw std::invalid_argument("lidar_features: need at least 8 samples");

    std::vector<double> dist(n);
    for (std::size_t k = 0; k < n; ++k) dist[k] = trace.lidar[w.lidar_begin + k].distance_cm;

    std::vector<double> out;
    out.reserve(kLidarFeatureCount);
    append_base13(out, dist, kLidarRateHz);
    return out;
}

WindowFeatures fuse(const SensorTrace& trace, const Window& w) {
    WindowFeatures f;
    f.color = color_features(trace, w);
    f.imu = imu_features(trace, w);
    f.lidar = lidar_features(trace, w);
    f.truth = w.truth;
    f.fused.reserve(kFusedFeatureCount);
    f.fused.insert(f.fused.end(), f.color.begin(), f.color.end());
    f.fused.insert(f.fused.end(), f.imu.begin(), f.imu.end());
    f.fused.insert(f.fused.end(), f.lidar.begin(), f.lidar.end());
    return f;
}

const std::vector<std::string>& feature_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        const char* stats5[] = {"mean", "median", "var", "p80_20", "rms"};
        const char* base13[] = {"mean", "median", "var", "p80_20", "rms", "min", "max",
                                "range", "mcr", "spec_energy", "spec_entropy", "dom_freq",
                                "dom_amp"};
        const char* pairs[] = {"xy", "xz", "yz"};
        for (const char* stream : {"h", "s", "i", "delta", "pairdist"})
            for (const char* st : stats5) v.push_back(std::string("color_") + stream + "_" + st);
        for (const char* sensor : {"accel", "gyro"}) {
            for (const char* st : base13) v.push_back(std::string("imu_") + sensor + "_" + st);
            for (const char* p : pairs) v.push_back(std::string("imu_") + sensor + "_corr_" + p);
            for (const char* p : pairs) v.push_back(std::string("imu_") + sensor + "_xcorr_" + p);
        }
        for (const char* st : base13) v.push_back(std::string("lidar_") + st);
        return v;
    }();
    return names;
}

FeatureDataset extract_features(const LabeledDataset& corpus) {
    FeatureDataset ds;
    for (std::size_t ti = 0; ti < corpus.traces.size(); ++ti) {
        const auto& trace = corpus.traces[ti];
        for (const auto& w : segment(trace)) {
            WindowFeatures f = fuse(trace, w);
            ds.rows.push_back(std::move(f.fused));
            ds.labels.push_back(f.truth.value_or(trace.label));
            ds.participant_ids.push_back(trace.participant_id);
            ds.trace_indices.push_back(static_cast<int>(ti));
            ds.window_indices.push_back(w.index);
            ds.start_times.push_back(w.start_t);
        }
    }
    return ds;
}

}  // namespace tiger::features
