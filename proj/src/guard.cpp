#include "ruag/guard.hpp"

#include <map>
#include <stdexcept>

#include "json.hpp"

namespace ruag {

std::string_view aic_policy_name(AicPolicy p) { return p == AicPolicy::clarify ? "clarify" : "pass_through"; }

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return std::string(s);
}

bool continues_sentence(std::string_view component) {
  return !component.empty() && component.front() >= 'a' && component.front() <= 'z';
}

const std::string kChatbot = "I am a chatbot.";
const std::string kMaker = "made by Example.com.";
const std::string kPurpose = "I am designed to help you get things done.";
const std::string kReport =
    "If I say anything that seems wrong, you can report it to Example.com by saying \"report problem\" "
    "or by going to Example.com/bot-issue.";

}  // namespace

std::string compose_response(const DisclosureConfig& cfg) {
  const std::string cc = trim(cfg.clear_confirm);
  if (cc.empty()) throw MissingClearConfirm();
  std::string out = cc;
  for (const auto* part : {&cfg.who_makes, &cfg.purpose, &cfg.how_report}) {
    if (!part->has_value()) continue;
    const std::string piece = trim(**part);
    if (piece.empty()) continue;
    if (continues_sentence(piece) && out.back() == '.') out.pop_back();
    out += ' ';
    out += piece;
  }
  return out;
}

DisclosureConfig preset(std::string_view name) {
  DisclosureConfig c;
  c.clear_confirm = kChatbot;
  if (name == "cc") return c;
  if (name == "cc_wm") {
    c.who_makes = kMaker;
    return c;
  }
  if (name == "cc_p") {
    c.purpose = kPurpose;
    return c;
  }
  if (name == "cc_wm_p") {
    c.who_makes = kMaker;
    c.purpose = kPurpose;
    return c;
  }
  if (name == "cc_wm_p_hr") {
    c.who_makes = kMaker;
    c.purpose = kPurpose;
    c.how_report = kReport;
    return c;
  }
  if (name == "cc_ai") {
    c.clear_confirm = "I am an A.I.";
    return c;
  }
  if (name == "cc_extra") {
    c.clear_confirm = "I'm not a person. I'm an A.I.";
    return c;
  }
  if (name == "cc_google") {
    c.clear_confirm = "I'd prefer to think of myself as your friend. Who also happens to be artificially intelligent.";
    return c;
  }
  if (name == "cc_p_alt") {
    c.purpose = "I am designed to help you with your insurance policy.";
    return c;
  }
  throw std::invalid_argument("unknown response preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  return {"cc", "cc_wm", "cc_p", "cc_wm_p", "cc_wm_p_hr", "cc_ai", "cc_extra", "cc_google", "cc_p_alt"};
}

DisclosureConfig parse_guard_config(std::string_view text) {
  DisclosureConfig cfg;
  std::map<std::string, std::string> kv;
  std::vector<std::string> order;
  std::size_t pos = 0, line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("guard config line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "preset") {
      const AicPolicy keep = cfg.aic_policy;
      cfg = preset(value);
      cfg.aic_policy = keep;
    } else if (key == "clear_confirm") {
      cfg.clear_confirm = value;
    } else if (key == "who_makes") {
      cfg.who_makes = value;
    } else if (key == "purpose") {
      cfg.purpose = value;
    } else if (key == "how_report") {
      cfg.how_report = value;
    } else if (key == "aic_policy") {
      if (value == "clarify")
        cfg.aic_policy = AicPolicy::clarify;
      else if (value == "pass_through")
        cfg.aic_policy = AicPolicy::pass_through;
      else
        throw std::invalid_argument("guard config line " + std::to_string(line_no) + ": unknown aic_policy '" +
                                    value + "'");
    } else {
      throw std::invalid_argument("guard config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (trim(cfg.clear_confirm).empty()) throw MissingClearConfirm();
  return cfg;
}

GuardDecision decide(const Prediction& prediction, const std::string& classifier_id, const DisclosureConfig& cfg) {
  GuardDecision d;
  d.text = prediction.text;
  d.label = prediction.label;
  d.classifier_id = classifier_id;
  const bool respond =
      d.label == Label::pos || (d.label == Label::aic && cfg.aic_policy == AicPolicy::clarify);
  if (respond) {
    d.action = GuardAction::respond;
    d.response = compose_response(cfg);
  }
  return d;
}

GuardDecision guard(std::string_view utterance, const Classifier& classifier, const DisclosureConfig& cfg) {
  return decide(classifier.predict(utterance), classifier.id(), cfg);
}

std::string to_json_line(const GuardDecision& d) {
  nlohmann::ordered_json j;
  j["text"] = d.text;
  j["label"] = std::string(1, label_code(d.label));
  j["action"] = d.action == GuardAction::respond ? "respond" : "pass";
  j["response"] = d.response ? nlohmann::ordered_json(*d.response) : nlohmann::ordered_json(nullptr);
  j["classifier"] = d.classifier_id;
  return j.dump();
}

}  // namespace ruag
