#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace echotrail {

using json = nlohmann::ordered_json;

/// Raised for contract violations and malformed inputs across the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Actions
// ---------------------------------------------------------------------------

enum class ActionType { Click, Type, Scroll, Back, Home, Finish };

enum class ScrollDirection { Up, Down };

/// One discrete device action. Click/Type carry a widget id, Type carries the
/// text to enter, Scroll carries a direction; Back/Home/Finish have no payload.
struct Action {
    ActionType type = ActionType::Back;
    std::string widget_id;
    std::string text;
    ScrollDirection direction = ScrollDirection::Down;

    static Action click(std::string widget);
    static Action type_text(std::string widget, std::string value);
    static Action scroll(ScrollDirection dir);
    static Action back();
    static Action home();
    static Action finish();

    bool operator==(const Action& other) const;

    /// Compact human-readable form, e.g. `click(wifi_toggle)` or `type(note_title, "Ideas")`.
    std::string to_string() const;
};

json action_to_json(const Action& a);
Action action_from_json(const json& j);

// ---------------------------------------------------------------------------
// Observations
// ---------------------------------------------------------------------------

enum class WidgetKind { Button, Field, ListItem, Toggle };

std::string widget_kind_name(WidgetKind kind);
WidgetKind widget_kind_from_name(const std::string& name);

struct Widget {
    std::string widget_id;
    WidgetKind kind = WidgetKind::Button;
    std::string label;
    bool enabled = true;

    bool operator==(const Widget&) const = default;
};

/// A structured screen description: the agent-visible projection of device state.
/// Widget order is deterministic (authoring order) and ids are unique per screen.
struct Observation {
    std::string app_id;
    std::string screen_id;
    std::vector<Widget> widgets;

    bool operator==(const Observation&) const = default;

    const Widget* find_widget(const std::string& widget_id) const;
};

json observation_to_json(const Observation& o);
Observation observation_from_json(const json& j);

/// Canonical textual screen summary used both when abstracting trajectories and
/// as the default observation summarizer at inference time:
///   App <app> screen <screen>: widgets [<kind>:<label>, ...]
std::string summarize_observation(const Observation& obs);

// ---------------------------------------------------------------------------
// Tasks and trajectories
// ---------------------------------------------------------------------------

struct TaskInstruction {
    std::string id;
    std::string text;
    std::string app_hint;  // optional, empty when absent

    bool operator==(const TaskInstruction&) const = default;
};

struct RawStep {
    Observation observation;
    Action action;

    bool operator==(const RawStep&) const = default;
};

/// 1-5 quality verdict produced by the critic.
struct CriticScore {
    int value = 1;

    bool operator==(const CriticScore&) const = default;
};

struct Trajectory {
    std::string id;
    std::string task_hint;  // optional; exploration uses "<app>/<template>"
    std::vector<RawStep> steps;
    std::string final_intent;
    std::int64_t episode_seed = 0;
    std::optional<CriticScore> critic_score;

    bool operator==(const Trajectory&) const = default;
};

json trajectory_to_json(const Trajectory& t);
Trajectory trajectory_from_json(const json& j);

struct AbstractedStep {
    std::string interface_description;
    std::string intent;
    Action action;

    bool operator==(const AbstractedStep&) const = default;
};

struct AbstractedTrajectory {
    std::string id;
    std::string final_intent;
    std::vector<AbstractedStep> steps;
    CriticScore score;

    bool operator==(const AbstractedTrajectory&) const = default;
};

json abstracted_to_json(const AbstractedTrajectory& t);
AbstractedTrajectory abstracted_from_json(const json& j);

struct ActionHistory {
    std::vector<Action> entries;
};

using ObservationSummarizer = std::function<std::string(const Observation&)>;

/// Converts a raw trajectory into its stored, modality-agnostic form. One
/// abstracted step per raw step; interface descriptions come from `summarizer`.
/// `step_intents` carries the explorer's per-step intent log; when empty every
/// step is labeled "explore". Throws Error on an empty trajectory, a missing
/// critic score, or an intent list of mismatched length.
AbstractedTrajectory abstract_trajectory(const Trajectory& raw,
                                         const ObservationSummarizer& summarizer,
                                         std::span<const std::string> step_intents = {});

/// True iff `a` is navigation (Back/Home/Scroll/Finish) or references an
/// enabled widget present in `obs`.
bool validate_action(const Observation& obs, const Action& a);

}  // namespace echotrail
