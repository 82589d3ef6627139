// Synthetic multi-sensor trace generation. Emulates the 16-scenario desk
// collection protocol (color @42 Hz, IMU @86 Hz, lidar @66 Hz) and splices
// corpus traces into long screen sessions with controlled breaks.

#pragma once

#include <cstdint>
#include <vector>

#include "tiger/types.hpp"

namespace tiger::synth {

// Deterministic for a given (spec, profile, seed); throws on invalid specs.
SensorTrace gen_trace(const ScenarioSpec& spec, const ParticipantProfile& profile,
                      std::uint64_t seed);

// One trace per protocol scenario per profile (16 each).
LabeledDataset gen_corpus(const std::vector<ParticipantProfile>& profiles,
                          std::uint64_t seed, int duration_s = 300);

// Default heterogeneous participant pool, deterministic in the seed.
std::vector<ParticipantProfile> default_profiles(std::size_t count, std::uint64_t seed);

// Splices [screen, break, screen] from one participant's corpus traces.
// The two screen parts total exactly 20 minutes of screen content, so the
// composed trace lasts 1200 + break_s seconds. Splice boundaries land on
// whole seconds; when align_to_windows is set they land on whole 5-second
// windows. Per-second ground-truth labels are attached.
SensorTrace compose_session(const LabeledDataset& corpus, int participant_id, int break_s,
                            std::uint64_t seed, bool align_to_windows = false);

}  // namespace tiger::synth
