// Domain types for the sensing pipeline: collection scenarios, the three
// raw sample streams, participant profiles, and labeled traces.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tiger {

enum class Device { None, Smartphone, Laptop, Desktop };
enum class Content { None, Static, Dynamic };
enum class Activity { Screen, Reading, Resting };
enum class Ambient { Dark, Bright };  // ~100 lux vs ~300 lux
enum class Label { NonScreen = 0, Screen = 1 };

const char* to_string(Device d);
const char* to_string(Content c);
const char* to_string(Activity a);
const char* to_string(Ambient a);
const char* to_string(Label l);

Device device_from_string(const std::string& s);
Content content_from_string(const std::string& s);
Activity activity_from_string(const std::string& s);
Ambient ambient_from_string(const std::string& s);
Label label_from_string(const std::string& s);

struct ScenarioSpec {
    Device device = Device::None;
    Content content = Content::None;
    Activity activity = Activity::Resting;
    Ambient ambient = Ambient::Bright;
    int duration_s = 300;

    // Throws std::invalid_argument on inconsistent combinations:
    // screen activity requires a device and content, non-screen forbids both.
    void validate() const;

    Label label() const { return activity == Activity::Screen ? Label::Screen : Label::NonScreen; }

    // e.g. "smartphone_dynamic_bright", "reading_dark"
    std::string name() const;
};

// The collection protocol: 3 devices x 2 contents x 2 lights screen
// scenarios plus 2 non-screen activities x 2 lights.
std::vector<ScenarioSpec> protocol_scenarios(int duration_s = 300);

struct ColorSample {
    double t = 0.0;
    int r = 0, g = 0, b = 0;  // 0..255
    int clear = 0;            // 0..65535
};

struct ImuSample {
    double t = 0.0;
    std::array<double, 3> accel{};  // m/s^2
    std::array<double, 3> gyro{};   // rad/s
};

struct LidarSample {
    double t = 0.0;
    double distance_cm = 0.0;  // clamped to [10, 1200]
};

constexpr double kColorRateHz = 42.0;
constexpr double kImuRateHz = 86.0;
constexpr double kLidarRateHz = 66.0;
constexpr double kLidarMinCm = 10.0;
constexpr double kLidarMaxCm = 1200.0;

// Per-participant variation knobs; multipliers are strictly positive.
struct ParticipantProfile {
    int id = 0;
    double posture_noise_scale = 1.0;
    std::array<double, 3> preferred_distance_offsets_cm{};  // smartphone, laptop, desktop
    double head_motion_rate = 2.0;                          // events/min while reading
    double reading_distance_offset_cm = 0.0;
    double resting_motion_scale = 1.0;
    double scroll_rate_scale = 1.0;  // static-content scroll cadence multiplier

    void validate() const;
};

struct SensorTrace {
    ScenarioSpec scenario;
    int participant_id = 0;
    std::uint64_t seed = 0;
    std::vector<ColorSample> color;
    std::vector<ImuSample> imu;
    std::vector<LidarSample> lidar;
    Label label = Label::NonScreen;
    // One label per whole second; uniform for protocol traces, mixed for
    // composed sessions.
    std::vector<Label> per_second_labels;

    // Composed-session metadata; -1 for plain scenario traces.
    int break_start_s = -1;
    int break_duration_s = -1;

    int duration_s() const { return static_cast<int>(per_second_labels.size()); }
};

struct LabeledDataset {
    std::uint64_t seed = 0;
    std::vector<SensorTrace> traces;
};

}  // namespace tiger
