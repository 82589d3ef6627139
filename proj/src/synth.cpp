#include "tiger/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tiger/common.hpp"

namespace tiger::synth {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kGravity = 9.81;

double deg2rad(double d) { return d * kPi / 180.0; }

int clamp_channel(double v) {
    return static_cast<int>(std::clamp(std::lround(v), 0l, 255l));
}

// Lidar error magnitude vs distance, piecewise-linear through the bench
// calibration points (distance_cm, avg_error_cm).
double lidar_error_sigma(double d) {
    static constexpr double pts[][2] = {
        {29.6, 1.6},  {50.2, 1.8},  {60.8, 8.0},  {125.9, 1.5},
        {261.1, 16.9}, {540.5, 20.8}, {696.3, 15.4}, {838.5, 4.4},
    };
    constexpr std::size_t n = sizeof(pts) / sizeof(pts[0]);
    if (d <= pts[0][0]) return pts[0][1];
    if (d >= pts[n - 1][0]) return pts[n - 1][1];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d <= pts[i + 1][0]) {
            const double f = (d - pts[i][0]) / (pts[i + 1][0] - pts[i][0]);
            return pts[i][1] + f * (pts[i + 1][1] - pts[i][1]);
        }
    }
    return pts[n - 1][1];
}

struct DeviceBand {
    double lo, hi;
};

DeviceBand device_band(Device d) {
    switch (d) {
        case Device::Smartphone: return {18.0, 60.0};
        case Device::Laptop: return {40.0, 70.0};
        case Device::Desktop: return {50.0, 80.0};
        case Device::None: break;
    }
    throw std::invalid_argument("no viewing-distance band for device 'none'");
}

double device_offset(const ParticipantProfile& p, Device d) {
    switch (d) {
        case Device::Smartphone: return p.preferred_distance_offsets_cm[0];
        case Device::Laptop: return p.preferred_distance_offsets_cm[1];
        case Device::Desktop: return p.preferred_distance_offsets_cm[2];
        case Device::None: return 0.0;
    }
    return 0.0;
}

// ---------------------------------------------------------------- color --

std::vector<ColorSample> gen_color(const ScenarioSpec& spec, const ParticipantProfile& profile,
                                   Rng& rng) {
    const int n = spec.duration_s * static_cast<int>(kColorRateHz);
    const double dt = 1.0 / kColorRateHz;
    const double ambient_scale = spec.ambient == Ambient::Dark ? 0.55 : 1.0;

    std::vector<ColorSample> out;
    out.reserve(n);

    double cur[3];
    double target[3];
    double next_event = 0.0;
    double event_end = -1.0;
    double event_scale = 1.0;  // page-turn shadow multiplier

    // Trace-level bases.
    double base[3];
    switch (spec.activity) {
        case Activity::Screen:
            if (spec.content == Content::Dynamic) {
                for (auto& c : base) c = rng.uniform(15.0, 240.0);
            } else {
                base[0] = 205.0 + rng.normal(0.0, 6.0);
                base[1] = 205.0 + rng.normal(0.0, 6.0);
                base[2] = 210.0 + rng.normal(0.0, 6.0);
            }
            break;
        case Activity::Reading:
            base[0] = 228.0 + rng.normal(0.0, 4.0);
            base[1] = 218.0 + rng.normal(0.0, 4.0);
            base[2] = 196.0 + rng.normal(0.0, 4.0);
            break;
        case Activity::Resting:
            // Muted, participant-specific room palette.
            for (auto& c : base) c = rng.uniform(40.0, 170.0);
            break;
    }
    for (int k = 0; k < 3; ++k) cur[k] = target[k] = base[k];

    const double scroll_mean_s = 3.5 / profile.scroll_rate_scale;

    for (int i = 0; i < n; ++i) {
        const double t = i * dt;
        switch (spec.activity) {
            case Activity::Screen:
                if (spec.content == Content::Dynamic) {
                    if (t >= next_event) {  // scene cut
                        for (auto& c : cur) c = rng.uniform(15.0, 240.0);
                        next_event = t + rng.exponential(0.8);
                    }
                    for (auto& c : cur)
                        c = std::clamp(c + rng.normal(0.0, 3.0), 5.0, 250.0);
                } else {
                    if (t >= next_event) {  // scroll lands on new page region
                        for (auto& c : cur)
                            c = std::clamp(c + rng.normal(0.0, 15.0), 150.0, 245.0);
                        next_event = t + rng.exponential(scroll_mean_s);
                    }
                    for (auto& c : cur) c += rng.normal(0.0, 0.2);
                }
                break;
            case Activity::Reading:
                if (t >= next_event) {  // page turn: brief hand shadow
                    event_end = t + 0.4;
                    next_event = t + rng.exponential(45.0);
                }
                event_scale = (t < event_end) ? 0.55 : 1.0;
                for (auto& c : cur) c += rng.normal(0.0, 0.05);
                break;
            case Activity::Resting:
                if (t >= next_event) {  // gaze wanders to another part of the room
                    for (int k = 0; k < 3; ++k)
                        target[k] = std::clamp(base[k] + rng.normal(0.0, 35.0), 25.0, 190.0);
                    next_event = t + rng.exponential(6.0);
                }
                for (int k = 0; k < 3; ++k)
                    cur[k] += (target[k] - cur[k]) * 0.05 + rng.normal(0.0, 1.2);
                break;
        }

        ColorSample s;
        s.t = t;
        const double read_noise = spec.activity == Activity::Screen
                                      ? (spec.content == Content::Dynamic ? 1.5 : 1.0)
                                      : (spec.activity == Activity::Reading ? 0.8 : 1.2);
        double rgb[3];
        for (int k = 0; k < 3; ++k)
            rgb[k] = (cur[k] * event_scale) * ambient_scale + rng.normal(0.0, read_noise);
        s.r = clamp_channel(rgb[0]);
        s.g = clamp_channel(rgb[1]);
        s.b = clamp_channel(rgb[2]);
        const double lux = (spec.ambient == Ambient::Dark ? 100.0 : 300.0) * 18.0;
        s.clear = static_cast<int>(std::clamp(
            std::lround((rgb[0] + rgb[1] + rgb[2]) * 55.0 + lux + rng.normal(0.0, 200.0)), 0l,
            65535l));
        out.push_back(s);
    }
    return out;
}

// ------------------------------------------------------------------ imu --

struct HeadEvent {
    double t0 = 0.0;
    double dur = 0.0;
    double delta_deg = 0.0;
    int axis = 0;  // 0 pitch, 1 roll, 2 yaw
};

// Raised-cosine angular excursion; returns the offset at time t.
double event_angle(const HeadEvent& e, double t) {
    if (t < e.t0 || t > e.t0 + e.dur) return 0.0;
    return e.delta_deg * 0.5 * (1.0 - std::cos(2.0 * kPi * (t - e.t0) / e.dur));
}

std::vector<ImuSample> gen_imu(const ScenarioSpec& spec, const ParticipantProfile& profile,
                               Rng& rng) {
    const int n = spec.duration_s * static_cast<int>(kImuRateHz);
    const double dt = 1.0 / kImuRateHz;
    const double pns = profile.posture_noise_scale;

    double pitch_base;
    double accel_noise, gyro_noise;
    double event_mean_s = 0.0;  // 0 disables head events
    double event_amp_lo = 0.0, event_amp_hi = 0.0;
    switch (spec.activity) {
        case Activity::Screen:
            switch (spec.device) {
                case Device::Smartphone: pitch_base = 25.0; break;
                case Device::Laptop: pitch_base = 15.0; break;
                default: pitch_base = 5.0; break;
            }
            accel_noise = 0.025 * pns;
            gyro_noise = 0.008 * pns;
            event_mean_s = 25.0;  // rare posture micro-adjustments
            event_amp_lo = 1.0;
            event_amp_hi = 3.0;
            break;
        case Activity::Reading:
            pitch_base = 30.0;
            accel_noise = 0.032 * pns;
            gyro_noise = 0.010 * pns;
            event_mean_s = 60.0 / profile.head_motion_rate;  // nods and look-ups
            event_amp_lo = 5.0;
            event_amp_hi = 15.0;
            break;
        case Activity::Resting:
        default:
            pitch_base = 8.0;
            accel_noise = 0.15 * pns * profile.resting_motion_scale;
            gyro_noise = 0.05 * pns * profile.resting_motion_scale;
            event_mean_s = 7.0;  // frequent large head turns
            event_amp_lo = 15.0;
            event_amp_hi = 50.0;
            break;
    }
    pitch_base += rng.normal(0.0, 3.0);
    const double roll_base = rng.normal(0.0, 2.0);

    // Resting alternates idle and walking segments.
    bool walking = false;
    double segment_end = spec.activity == Activity::Resting ? rng.exponential(12.0) : 1e18;
    double gait_hz = 2.0, gait_amp = 0.0, gait_phase = 0.0;

    double next_event = rng.exponential(std::max(event_mean_s, 1e-6));
    HeadEvent ev;
    bool ev_active = false;

    double prev_pitch = pitch_base, prev_roll = roll_base, prev_yaw = 0.0;
    double wander_p = 0.0, wander_r = 0.0;

    const double motion_scale =
        spec.activity == Activity::Resting ? profile.resting_motion_scale : 1.0;

    std::vector<ImuSample> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = i * dt;

        if (spec.activity == Activity::Resting && t >= segment_end) {
            walking = !walking;
            segment_end = t + rng.exponential(walking ? 8.0 : 12.0);
            if (walking) {
                gait_hz = rng.uniform(1.7, 2.2);
                gait_amp = rng.uniform(1.5, 3.0) * motion_scale;
                gait_phase = rng.uniform(0.0, 2.0 * kPi);
            }
        }

        if (!ev_active && t >= next_event) {
            ev.t0 = t;
            ev.dur = rng.uniform(0.5, 1.4);
            ev.delta_deg = rng.uniform(event_amp_lo, event_amp_hi) *
                           (rng.uniform() < 0.5 ? -1.0 : 1.0) * motion_scale;
            ev.axis = spec.activity == Activity::Screen ? 0 : static_cast<int>(rng.below(3));
            ev_active = true;
        }
        if (ev_active && t > ev.t0 + ev.dur) {
            ev_active = false;
            next_event = t + rng.exponential(std::max(event_mean_s, 1e-6));
        }

        // Slow postural wander plus the active excursion.
        wander_p += -wander_p * 0.002 + rng.normal(0.0, 0.02 * pns);
        wander_r += -wander_r * 0.002 + rng.normal(0.0, 0.015 * pns);
        double pitch = pitch_base + wander_p;
        double roll = roll_base + wander_r;
        double yaw = 0.0;
        if (ev_active) {
            const double a = event_angle(ev, t);
            if (ev.axis == 0) pitch += a;
            else if (ev.axis == 1) roll += a;
            else yaw += a;
        }

        const double pr = deg2rad(pitch), rr = deg2rad(roll);
        ImuSample s;
        s.t = t;
        s.accel[0] = kGravity * std::cos(pr) * std::sin(rr) + rng.normal(0.0, accel_noise);
        s.accel[1] = kGravity * std::sin(pr) + rng.normal(0.0, accel_noise);
        s.accel[2] = kGravity * std::cos(pr) * std::cos(rr) + rng.normal(0.0, accel_noise);

        if (walking) {
            const double g1 = std::sin(2.0 * kPi * gait_hz * t + gait_phase);
            const double g2 = std::sin(4.0 * kPi * gait_hz * t + gait_phase);
            s.accel[2] += gait_amp * g1 + 0.3 * gait_amp * g2;
            s.accel[0] += 0.4 * gait_amp * std::sin(2.0 * kPi * gait_hz * t);
            s.accel[1] += 0.25 * gait_amp * g2;
        }

        // Gyro from orientation deltas; rotations barely move the
        // accelerometer magnitude, so this is where head motion shows up.
        s.gyro[0] = deg2rad(pitch - prev_pitch) / dt + rng.normal(0.0, gyro_noise);
        s.gyro[1] = deg2rad(roll - prev_roll) / dt + rng.normal(0.0, gyro_noise);
        s.gyro[2] = deg2rad(yaw - prev_yaw) / dt + rng.normal(0.0, gyro_noise);
        if (walking) {
            s.gyro[1] += 0.3 * motion_scale * std::sin(kPi * gait_hz * t + gait_phase);
            s.gyro[2] += rng.normal(0.0, 0.1 * motion_scale);
        }
        prev_pitch = pitch;
        prev_roll = roll;
        prev_yaw = yaw;

        out.push_back(s);
    }
    return out;
}

// ---------------------------------------------------------------- lidar --

std::vector<LidarSample> gen_lidar(const ScenarioSpec& spec, const ParticipantProfile& profile,
                                   Rng& rng) {
    const int n = spec.duration_s * static_cast<int>(kLidarRateHz);
    const double dt = 1.0 / kLidarRateHz;

    double mean = 0.0, bias = 0.0;
    double spike_mean_s = 0.0;
    switch (spec.activity) {
        case Activity::Screen: {
            const DeviceBand band = device_band(spec.device);
            mean = std::clamp(rng.uniform(band.lo, band.hi) + device_offset(profile, spec.device),
                              band.lo, band.hi);
            break;
        }
        case Activity::Reading:
            mean = std::clamp(rng.uniform(25.0, 45.0) + profile.reading_distance_offset_cm, 25.0,
                              45.0);
            spike_mean_s = 60.0 / (0.6 * profile.head_motion_rate);
            break;
        case Activity::Resting:
            mean = std::exp(rng.uniform(std::log(60.0), std::log(1000.0)));
            break;
    }
    const double sigma = lidar_error_sigma(mean);
    bias = std::clamp(rng.normal(0.0, sigma), -std::min(2.0 * sigma, 0.06 * mean),
                      std::min(2.0 * sigma, 0.06 * mean));

    double d = mean;
    double next_spike = spike_mean_s > 0.0 ? rng.exponential(spike_mean_s) : 1e18;
    double spike_end = -1.0, spike_target = 0.0;
    double next_target = spec.activity == Activity::Resting ? rng.exponential(8.0) : 1e18;
    double target = mean;

    std::vector<LidarSample> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = i * dt;
        double value;
        switch (spec.activity) {
            case Activity::Screen:
                d += (mean - d) * 0.01 + rng.normal(0.0, 0.35);
                d = std::clamp(d, mean - 5.0, mean + 5.0);
                value = d + bias + std::clamp(rng.normal(0.0, 1.2), -3.6, 3.6);
                break;
            case Activity::Reading:
                if (t >= next_spike) {  // head tilt: glasses point past the book
                    spike_end = t + rng.uniform(0.5, 2.0);
                    spike_target = rng.uniform(100.0, 280.0);
                    next_spike = spike_end + rng.exponential(spike_mean_s);
                }
                if (t < spike_end) {
                    d += (spike_target - d) * 0.3;
                } else {
                    d += (mean - d) * 0.15 + rng.normal(0.0, 0.25);
                }
                value = d + bias + std::clamp(rng.normal(0.0, 1.2), -3.6, 3.6);
                break;
            case Activity::Resting:
            default:
                if (t >= next_target) {  // look somewhere else in the room
                    target = std::exp(rng.uniform(std::log(60.0), std::log(1000.0)));
                    next_target = t + rng.exponential(8.0);
                }
                d += (target - d) * 0.04 + rng.normal(0.0, 2.0);
                value = d + rng.normal(0.0, 0.5 + lidar_error_sigma(d) * 0.25);
                break;
        }
        out.push_back({t, std::clamp(value, kLidarMinCm, kLidarMaxCm)});
    }
    return out;
}

}  // namespace

SensorTrace gen_trace(const ScenarioSpec& spec, const ParticipantProfile& profile,
                      std::uint64_t seed) {
    spec.validate();
    profile.validate();

    SensorTrace trace;
    trace.scenario = spec;
    trace.participant_id = profile.id;
    trace.seed = seed;
    trace.label = spec.label();
    trace.per_second_labels.assign(spec.duration_s, trace.label);

    // Independent sub-streams so the three models never perturb each other.
    Rng color_rng(derive_seed(seed, 1));
    Rng imu_rng(derive_seed(seed, 2));
    Rng lidar_rng(derive_seed(seed, 3));
    trace.color = gen_color(spec, profile, color_rng);
    trace.imu = gen_imu(spec, profile, imu_rng);
    trace.lidar = gen_lidar(spec, profile, lidar_rng);
    return trace;
}

LabeledDataset gen_corpus(const std::vector<ParticipantProfile>& profiles, std::uint64_t seed,
                          int duration_s) {
    if (profiles.empty()) throw std::invalid_argument("gen_corpus: need at least one profile");
    LabeledDataset ds;
    ds.seed = seed;
    const auto scenarios = protocol_scenarios(duration_s);
    for (const auto& profile : profiles) {
        for (std::size_t si = 0; si < scenarios.size(); ++si) {
            const std::uint64_t trace_seed =
                derive_seed(seed, static_cast<std::uint64_t>(profile.id) + 1, si + 1);
            ds.traces.push_back(gen_trace(scenarios[si], profile, trace_seed));
        }
    }
    return ds;
}

std::vector<ParticipantProfile> default_profiles(std::size_t count, std::uint64_t seed) {
    std::vector<ParticipantProfile> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng(derive_seed(seed, 0xfeed, i));
        ParticipantProfile p;
        p.id = static_cast<int>(i);
        p.posture_noise_scale = std::exp(rng.uniform(std::log(0.6), std::log(1.8)));
        for (auto& off : p.preferred_distance_offsets_cm) off = rng.uniform(-6.0, 6.0);
        p.head_motion_rate = rng.uniform(1.0, 4.0);
        p.reading_distance_offset_cm = rng.uniform(-5.0, 5.0);
        p.resting_motion_scale = std::exp(rng.uniform(std::log(0.5), std::log(2.2)));
        p.scroll_rate_scale = std::exp(rng.uniform(std::log(0.5), std::log(2.0)));
        out.push_back(p);
    }
    return out;
}

namespace {

// Appends source-trace seconds [src_s, src_s + len) to dst, rebasing times.
void splice_seconds(SensorTrace& dst, int dst_s, const SensorTrace& src, int src_s, int len) {
    const int cr = static_cast<int>(kColorRateHz);
    const int ir = static_cast<int>(kImuRateHz);
    const int lr = static_cast<int>(kLidarRateHz);
    for (int s = 0; s < len; ++s) {
        const int from = src_s + s;
        const double shift = static_cast<double>(dst_s + s - from);
        for (int i = from * cr; i < (from + 1) * cr; ++i) {
            ColorSample c = src.color[i];
            c.t += shift;
            dst.color.push_back(c);
        }
        for (int i = from * ir; i < (from + 1) * ir; ++i) {
            ImuSample m = src.imu[i];
            m.t += shift;
            dst.imu.push_back(m);
        }
        for (int i = from * lr; i < (from + 1) * lr; ++i) {
            LidarSample l = src.lidar[i];
            l.t += shift;
            dst.lidar.push_back(l);
        }
    }
}

}  // namespace

SensorTrace compose_session(const LabeledDataset& corpus, int participant_id, int break_s,
                            std::uint64_t seed, bool align_to_windows) {
    if (break_s < 5 || break_s > 35 || break_s % 5 != 0)
        throw std::invalid_argument("break_s must be one of 5,10,...,35 seconds");

    std::vector<const SensorTrace*> screen, nonscreen;
    for (const auto& tr : corpus.traces) {
        if (tr.participant_id != participant_id) continue;
        if (tr.break_start_s >= 0) continue;  // never compose from compositions
        (tr.label == Label::Screen ? screen : nonscreen).push_back(&tr);
    }
    if (screen.empty() || nonscreen.empty())
        throw std::invalid_argument("corpus lacks traces for participant " +
                                    std::to_string(participant_id));

    constexpr int kScreenTotal = 1200;  // 20 minutes of screen content
    Rng rng(derive_seed(seed, 0xc0de, static_cast<std::uint64_t>(participant_id),
                        static_cast<std::uint64_t>(break_s)));

    // Break insertion point within the screen content, both parts nonempty.
    int d1;
    if (align_to_windows) {
        d1 = 5 * (1 + static_cast<int>(rng.index(kScreenTotal / 5 - 1)));
    } else {
        d1 = 1 + static_cast<int>(rng.index(kScreenTotal - 1));
    }

    SensorTrace out;
    out.participant_id = participant_id;
    out.seed = seed;
    out.label = Label::Screen;
    out.scenario.device = Device::None;
    out.scenario.content = Content::None;
    out.scenario.activity = Activity::Screen;  // marker only; not a valid protocol spec
    out.scenario.duration_s = kScreenTotal + break_s;
    out.break_start_s = d1;
    out.break_duration_s = break_s;

    const std::size_t approx = static_cast<std::size_t>(kScreenTotal + break_s);
    out.color.reserve(approx * 42);
    out.imu.reserve(approx * 86);
    out.lidar.reserve(approx * 66);

    // Screen content: contiguous chunks sampled across the 12 screen traces.
    auto emit_screen = [&](int dst_start, int need) {
        int written = 0;
        while (written < need) {
            const SensorTrace& src = *screen[rng.index(screen.size())];
            const int src_dur = src.duration_s();
            int len, off;
            if (align_to_windows) {
                const int max_len = std::min(need - written, std::min(src_dur, 120));
                len = 5 * (1 + static_cast<int>(rng.index(max_len / 5)));
                off = 5 * static_cast<int>(rng.index((src_dur - len) / 5 + 1));
            } else {
                len = std::min(need - written,
                               5 + static_cast<int>(rng.index(std::min(src_dur, 116))));
                off = static_cast<int>(rng.index(src_dur - len + 1));
            }
            splice_seconds(out, dst_start + written, src, off, len);
            written += len;
        }
    };

    emit_screen(0, d1);
    {
        const SensorTrace& src = *nonscreen[rng.index(nonscreen.size())];
        const int src_dur = src.duration_s();
        if (src_dur < break_s)
            throw std::invalid_argument("non-screen trace shorter than the requested break");
        int off;
        if (align_to_windows) {
            off = 5 * static_cast<int>(rng.index((src_dur - break_s) / 5 + 1));
        } else {
            off = static_cast<int>(rng.index(src_dur - break_s + 1));
        }
        splice_seconds(out, d1, src, off, break_s);
    }
    emit_screen(d1 + break_s, kScreenTotal - d1);

    out.per_second_labels.assign(kScreenTotal + break_s, Label::Screen);
    for (int s = d1; s < d1 + break_s; ++s) out.per_second_labels[s] = Label::NonScreen;
    return out;
}

}  // namespace tiger::synth
