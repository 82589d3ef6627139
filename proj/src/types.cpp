#include "tiger/types.hpp"

#include <stdexcept>

namespace tiger {

const char* to_string(Device d) {
    switch (d) {
        case Device::None: return "none";
        case Device::Smartphone: return "smartphone";
        case Device::Laptop: return "laptop";
        case Device::Desktop: return "desktop";
    }
    return "none";
}

const char* to_string(Content c) {
    switch (c) {
        case Content::None: return "none";
        case Content::Static: return "static";
        case Content::Dynamic: return "dynamic";
    }
    return "none";
}

const char* to_string(Activity a) {
    switch (a) {
        case Activity::Screen: return "screen";
        case Activity::Reading: return "reading";
        case Activity::Resting: return "resting";
    }
    return "resting";
}

const char* to_string(Ambient a) { return a == Ambient::Dark ? "dark" : "bright"; }

const char* to_string(Label l) { return l == Label::Screen ? "screen" : "non_screen"; }

namespace {
[[noreturn]] void bad_enum(const std::string& kind, const std::string& s) {
    throw std::invalid_argument("unknown " + kind + ": '" + s + "'");
}
}  // namespace

Device device_from_string(const std::string& s) {
    if (s == "none") return Device::None;
    if (s == "smartphone") return Device::Smartphone;
    if (s == "laptop") return Device::Laptop;
    if (s == "desktop") return Device::Desktop;
    bad_enum("device", s);
}

Content content_from_string(const std::string& s) {
    if (s == "none") return Content::None;
    if (s == "static") return Content::Static;
    if (s == "dynamic") return Content::Dynamic;
    bad_enum("content", s);
}

Activity activity_from_string(const std::string& s) {
    if (s == "screen") return Activity::Screen;
    if (s == "reading") return Activity::Reading;
    if (s == "resting") return Activity::Resting;
    bad_enum("activity", s);
}

Ambient ambient_from_string(const std::string& s) {
    if (s == "dark") return Ambient::Dark;
    if (s == "bright") return Ambient::Bright;
    bad_enum("ambient", s);
}

Label label_from_string(const std::string& s) {
    if (s == "screen") return Label::Screen;
    if (s == "non_screen") return Label::NonScreen;
    bad_enum("label", s);
}

void ScenarioSpec::validate() const {
    if (duration_s <= 0) throw std::invalid_argument("scenario duration must be positive");
    const bool has_device = device != Device::None;
    const bool has_content = content != Content::None;
    if (activity == Activity::Screen) {
        if (!has_device || !has_content)
            throw std::invalid_argument(
                "screen scenario requires a device and a content type; got device=" +
                std::string(to_string(device)) + " content=" + to_string(content));
    } else {
        if (has_device || has_content)
            throw std::invalid_argument(
                std::string(to_string(activity)) +
                " scenario must not name a device or content; got device=" +
                to_string(device) + " content=" + to_string(content));
    }
}

std::string ScenarioSpec::name() const {
    std::string out;
    if (activity == Activity::Screen) {
        out = std::string(to_string(device)) + "_" + to_string(content);
    } else {
        out = to_string(activity);
    }
    out += "_";
    out += to_string(ambient);
    return out;
}

std::vector<ScenarioSpec> protocol_scenarios(int duration_s) {
    std::vector<ScenarioSpec> out;
    const Device devices[] = {Device::Smartphone, Device::Laptop, Device::Desktop};
    const Content contents[] = {Content::Static, Content::Dynamic};
    const Ambient lights[] = {Ambient::Dark, Ambient::Bright};
    for (Device d : devices)
        for (Content c : contents)
            for (Ambient a : lights)
                out.push_back({d, c, Activity::Screen, a, duration_s});
    for (Activity act : {Activity::Reading, Activity::Resting})
        for (Ambient a : lights)
            out.push_back({Device::None, Content::None, act, a, duration_s});
    return out;
}

void ParticipantProfile::validate() const {
    if (posture_noise_scale <= 0.0 || resting_motion_scale <= 0.0 || scroll_rate_scale <= 0.0)
        throw std::invalid_argument("profile multipliers must be positive");
    if (head_motion_rate <= 0.0)
        throw std::invalid_argument("head_motion_rate must be positive");
}

}  // namespace tiger
