#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ruag/classifier.hpp"

namespace ruag {

enum class AicPolicy : std::uint8_t { clarify, pass_through };

std::string_view aic_policy_name(AicPolicy p);

/// Response components: clear confirmation (required), who makes the system,
/// its purpose, and how to report a problem.
struct DisclosureConfig {
  std::string clear_confirm;
  std::optional<std::string> who_makes;
  std::optional<std::string> purpose;
  std::optional<std::string> how_report;
  AicPolicy aic_policy = AicPolicy::pass_through;
};

class MissingClearConfirm : public Error {
 public:
  MissingClearConfirm() : Error("disclosure config needs a non-empty clear_confirm") {}
};

/// Joins the present components in the order CC, WM, P, HR with single
/// spaces. A component that starts with a lower-case letter continues the
/// previous sentence, which then loses its final period:
///   "I am a chatbot." + "made by Example.com." -> "I am a chatbot made by Example.com."
std::string compose_response(const DisclosureConfig& cfg);

/// Named response configurations. Unknown names throw std::invalid_argument.
DisclosureConfig preset(std::string_view name);
std::vector<std::string> preset_names();

/// Parses `key=value` lines (clear_confirm, who_makes, purpose, how_report,
/// aic_policy, preset); `#` starts a comment line. A preset line seeds the
/// config and later keys override it.
DisclosureConfig parse_guard_config(std::string_view text);

enum class GuardAction : std::uint8_t { respond, pass };

struct GuardDecision {
  std::string text;
  Label label = Label::neg;
  GuardAction action = GuardAction::pass;
  std::optional<std::string> response;
  std::string classifier_id;
};

/// POS responds with the composed disclosure; AIC responds only under the
/// clarify policy; NEG always passes.
GuardDecision guard(std::string_view utterance, const Classifier& classifier, const DisclosureConfig& cfg);
GuardDecision decide(const Prediction& prediction, const std::string& classifier_id, const DisclosureConfig& cfg);

/// One JSON object: text, label (p/a/n), action, response (or null),
/// classifier.
std::string to_json_line(const GuardDecision& d);

}  // namespace ruag
