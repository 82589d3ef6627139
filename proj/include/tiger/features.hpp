// Windowed feature extraction: 5-second tumbling windows are reduced to a
// 76-value fused vector (25 color + 38 IMU + 13 lidar) in a fixed,
// documented column order (see feature_names()).

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tiger/types.hpp"

namespace tiger::features {

constexpr int kWindowSeconds = 5;
constexpr std::size_t kColorFeatureCount = 25;
constexpr std::size_t kImuFeatureCount = 38;
constexpr std::size_t kLidarFeatureCount = 13;
constexpr std::size_t kFusedFeatureCount =
    kColorFeatureCount + kImuFeatureCount + kLidarFeatureCount;

// A non-overlapping 5 s slice of one trace, held as index ranges.
struct Window {
    int index = 0;
    double start_t = 0.0;
    std::size_t color_begin = 0, color_end = 0;
    std::size_t imu_begin = 0, imu_end = 0;
    std::size_t lidar_begin = 0, lidar_end = 0;
    std::optional<Label> truth;
};

// floor(duration / 5) tumbling windows; trailing partial data is dropped.
// Window truth comes from the per-second labels by majority, ties toward
// non-screen.
std::vector<Window> segment(const SensorTrace& trace);

struct WindowFeatures {
    std::vector<double> color;  // 25
    std::vector<double> imu;    // 38
    std::vector<double> lidar;  // 13
    std::vector<double> fused;  // 76, color ++ imu ++ lidar
    std::optional<Label> truth;
};

std::vector<double> color_features(const SensorTrace& trace, const Window& w);
std::vector<double> imu_features(const SensorTrace& trace, const Window& w);
std::vector<double> lidar_features(const SensorTrace& trace, const Window& w);
WindowFeatures fuse(const SensorTrace& trace, const Window& w);

// Column names for the fused vector, in output order.
const std::vector<std::string>& feature_names();

// Per-window rows for a whole corpus, with provenance for the evaluation
// protocols.
struct FeatureDataset {
    std::vector<std::vector<double>> rows;  // each kFusedFeatureCount wide
    std::vector<Label> labels;
    std::vector<int> participant_ids;
    std::vector<int> trace_indices;
    std::vector<int> window_indices;
    std::vector<double> start_times;

    std::size_t size() const { return rows.size(); }
};

FeatureDataset extract_features(const LabeledDataset& corpus);

}  // namespace tiger::features
