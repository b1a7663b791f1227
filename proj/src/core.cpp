#include "echotrail/core.hpp"

#include <sstream>

namespace echotrail {

Action Action::click(std::string widget) {
    Action a;
    a.type = ActionType::Click;
    a.widget_id = std::move(widget);
    return a;
}

Action Action::type_text(std::string widget, std::string value) {
    Action a;
    a.type = ActionType::Type;
    a.widget_id = std::move(widget);
    a.text = std::move(value);
    return a;
}

Action Action::scroll(ScrollDirection dir) {
    Action a;
    a.type = ActionType::Scroll;
    a.direction = dir;
    return a;
}

Action Action::back() {
    Action a;
    a.type = ActionType::Back;
    return a;
}

Action Action::home() {
    Action a;
    a.type = ActionType::Home;
    return a;
}

Action Action::finish() {
    Action a;
    a.type = ActionType::Finish;
    return a;
}

bool Action::operator==(const Action& other) const {
    if (type != other.type) return false;
    switch (type) {
        case ActionType::Click: return widget_id == other.widget_id;
        case ActionType::Type: return widget_id == other.widget_id && text == other.text;
        case ActionType::Scroll: return direction == other.direction;
        default: return true;
    }
}

std::string Action::to_string() const {
    switch (type) {
        case ActionType::Click: return "click(" + widget_id + ")";
        case ActionType::Type: return "type(" + widget_id + ", \"" + text + "\")";
        case ActionType::Scroll:
            return direction == ScrollDirection::Up ? "scroll(up)" : "scroll(down)";
        case ActionType::Back: return "back";
        case ActionType::Home: return "home";
        case ActionType::Finish: return "finish";
    }
    return "?";
}

json action_to_json(const Action& a) {
    json j;
    switch (a.type) {
        case ActionType::Click:
            j["type"] = "click";
            j["widget"] = a.widget_id;
            break;
        case ActionType::Type:
            j["type"] = "type";
            j["widget"] = a.widget_id;
            j["text"] = a.text;
            break;
        case ActionType::Scroll:
            j["type"] = "scroll";
            j["direction"] = a.direction == ScrollDirection::Up ? "up" : "down";
            break;
        case ActionType::Back: j["type"] = "back"; break;
        case ActionType::Home: j["type"] = "home"; break;
        case ActionType::Finish: j["type"] = "finish"; break;
    }
    return j;
}

Action action_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "click") return Action::click(j.at("widget").get<std::string>());
    if (type == "type")
        return Action::type_text(j.at("widget").get<std::string>(), j.at("text").get<std::string>());
    if (type == "scroll") {
        const std::string dir = j.at("direction").get<std::string>();
        if (dir == "up") return Action::scroll(ScrollDirection::Up);
        if (dir == "down") return Action::scroll(ScrollDirection::Down);
        throw Error("unknown scroll direction: " + dir);
    }
    if (type == "back") return Action::back();
    if (type == "home") return Action::home();
    if (type == "finish") return Action::finish();
    throw Error("unknown action type: " + type);
}

std::string widget_kind_name(WidgetKind kind) {
    switch (kind) {
        case WidgetKind::Button: return "button";
        case WidgetKind::Field: return "field";
        case WidgetKind::ListItem: return "list_item";
        case WidgetKind::Toggle: return "toggle";
    }
    return "?";
}

WidgetKind widget_kind_from_name(const std::string& name) {
    if (name == "button") return WidgetKind::Button;
    if (name == "field") return WidgetKind::Field;
    if (name == "list_item") return WidgetKind::ListItem;
    if (name == "toggle") return WidgetKind::Toggle;
    throw Error("unknown widget kind: " + name);
}

const Widget* Observation::find_widget(const std::string& widget_id) const {
    for (const auto& w : widgets) {
        if (w.widget_id == widget_id) return &w;
    }
    return nullptr;
}

json observation_to_json(const Observation& o) {
    json widgets = json::array();
    for (const auto& w : o.widgets) {
        json jw;
        jw["widget_id"] = w.widget_id;
        jw["kind"] = widget_kind_name(w.kind);
        jw["label"] = w.label;
        jw["enabled"] = w.enabled;
        widgets.push_back(std::move(jw));
    }
    json j;
    j["app_id"] = o.app_id;
    j["screen_id"] = o.screen_id;
    j["widgets"] = std::move(widgets);
    return j;
}

Observation observation_from_json(const json& j) {
    Observation o;
    o.app_id = j.at("app_id").get<std::string>();
    o.screen_id = j.at("screen_id").get<std::string>();
    for (const auto& jw : j.at("widgets")) {
        Widget w;
        w.widget_id = jw.at("widget_id").get<std::string>();
        w.kind = widget_kind_from_name(jw.at("kind").get<std::string>());
        w.label = jw.at("label").get<std::string>();
        w.enabled = jw.at("enabled").get<bool>();
        o.widgets.push_back(std::move(w));
    }
    return o;
}

std::string summarize_observation(const Observation& obs) {
    std::ostringstream out;
    out << "App " << obs.app_id << " screen " << obs.screen_id << ": widgets [";
    bool first = true;
    for (const auto& w : obs.widgets) {
        if (!first) out << ", ";
        first = false;
        out << widget_kind_name(w.kind) << ":" << w.label;
        if (!w.enabled) out << " (disabled)";
    }
    out << "]";
    return out.str();
}

json trajectory_to_json(const Trajectory& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        json js;
        js["observation"] = observation_to_json(s.observation);
        js["action"] = action_to_json(s.action);
        steps.push_back(std::move(js));
    }
    json j;
    j["id"] = t.id;
    j["task_hint"] = t.task_hint;
    j["steps"] = std::move(steps);
    j["final_intent"] = t.final_intent;
    j["episode_seed"] = t.episode_seed;
    if (t.critic_score) j["critic_score"] = t.critic_score->value;
    return j;
}

Trajectory trajectory_from_json(const json& j) {
    Trajectory t;
    t.id = j.at("id").get<std::string>();
    t.task_hint = j.at("task_hint").get<std::string>();
    for (const auto& js : j.at("steps")) {
        RawStep s;
        s.observation = observation_from_json(js.at("observation"));
        s.action = action_from_json(js.at("action"));
        t.steps.push_back(std::move(s));
    }
    t.final_intent = j.at("final_intent").get<std::string>();
    t.episode_seed = j.at("episode_seed").get<std::int64_t>();
    if (j.contains("critic_score")) t.critic_score = CriticScore{j.at("critic_score").get<int>()};
    return t;
}

json abstracted_to_json(const AbstractedTrajectory& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        json js;
        js["interface_description"] = s.interface_description;
        js["intent"] = s.intent;
        js["action"] = action_to_json(s.action);
        steps.push_back(std::move(js));
    }
    json j;
    j["id"] = t.id;
    j["final_intent"] = t.final_intent;
    j["steps"] = std::move(steps);
    j["score"] = t.score.value;
    return j;
}

AbstractedTrajectory abstracted_from_json(const json& j) {
    AbstractedTrajectory t;
    t.id = j.at("id").get<std::string>();
    t.final_intent = j.at("final_intent").get<std::string>();
    for (const auto& js : j.at("steps")) {
        AbstractedStep s;
        s.interface_description = js.at("interface_description").get<std::string>();
        s.intent = js.at("intent").get<std::string>();
        s.action = action_from_json(js.at("action"));
        t.steps.push_back(std::move(s));
    }
    t.score = CriticScore{j.at("score").get<int>()};
    return t;
}

AbstractedTrajectory abstract_trajectory(const Trajectory& raw,
                                         const ObservationSummarizer& summarizer,
                                         std::span<const std::string> step_intents) {
    if (raw.steps.empty()) throw Error("abstract_trajectory: trajectory has no steps");
    if (!raw.critic_score) throw Error("abstract_trajectory: trajectory has no critic score");
    if (!step_intents.empty() && step_intents.size() != raw.steps.size())
        throw Error("abstract_trajectory: intent log length does not match step count");

    AbstractedTrajectory out;
    out.id = raw.id;
    out.final_intent = raw.final_intent;
    out.score = *raw.critic_score;
    out.steps.reserve(raw.steps.size());
    for (std::size_t i = 0; i < raw.steps.size(); ++i) {
        AbstractedStep s;
        s.interface_description = summarizer(raw.steps[i].observation);
        s.intent = step_intents.empty() ? std::string("explore") : step_intents[i];
        s.action = raw.steps[i].action;
        out.steps.push_back(std::move(s));
    }
    return out;
}

bool validate_action(const Observation& obs, const Action& a) {
    switch (a.type) {
        case ActionType::Back:
        case ActionType::Home:
        case ActionType::Scroll:
        case ActionType::Finish:
            return true;
        case ActionType::Click:
        case ActionType::Type: {
            const Widget* w = obs.find_widget(a.widget_id);
            return w != nullptr && w->enabled;
        }
    }
    return false;
}

}  // namespace echotrail
