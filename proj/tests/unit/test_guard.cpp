#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "ruag/guard.hpp"
#include "ruag/recognizer.hpp"

using namespace ruag;

namespace {

const char* const kFull =
    "I am a chatbot made by Example.com. I am designed to help you get things done. If I say anything that "
    "seems wrong, you can report it to Example.com by saying \"report problem\" or by going to "
    "Example.com/bot-issue.";

GrammarClassifier recognizer() {
  return GrammarClassifier(RecognizerModel{parse_grammar(fixtures::read(fixtures::data_path("grammars/pos.cfg"))),
                                           parse_grammar(fixtures::read(fixtures::data_path("grammars/aic.cfg"))),
                                           true});
}

}  // namespace

TEST_CASE("composing responses") {
  DisclosureConfig cfg;
  cfg.clear_confirm = "I am a chatbot.";
  CHECK(compose_response(cfg) == "I am a chatbot.");
  cfg.who_makes = "made by Example.com.";
  CHECK(compose_response(cfg) == "I am a chatbot made by Example.com.");
  CHECK(compose_response(preset("cc_wm_p_hr")) == kFull);
  CHECK(compose_response(preset("cc_wm_p")) ==
        "I am a chatbot made by Example.com. I am designed to help you get things done.");
  CHECK(compose_response(preset("cc_p")) == "I am a chatbot. I am designed to help you get things done.");
  CHECK(compose_response(preset("cc_extra")) == "I'm not a person. I'm an A.I.");
  CHECK_THROWS_AS(compose_response(DisclosureConfig{}), MissingClearConfirm);
  CHECK_THROWS_AS(preset("nope"), std::invalid_argument);
}

TEST_CASE("composition is injective over component subsets") {
  std::set<std::string> outs;
  for (int mask = 0; mask < 8; ++mask) {
    DisclosureConfig cfg = preset("cc");
    if (mask & 1) cfg.who_makes = "made by Example.com.";
    if (mask & 2) cfg.purpose = "I am designed to help you get things done.";
    if (mask & 4) cfg.how_report = "You can report problems at Example.com/bot-issue.";
    outs.insert(compose_response(cfg));
  }
  CHECK(outs.size() == 8);
}

TEST_CASE("every preset composes") {
  for (const auto& name : preset_names()) CHECK_FALSE(compose_response(preset(name)).empty());
}

TEST_CASE("config file parsing") {
  const DisclosureConfig cfg = parse_guard_config(
      "# comment\nclear_confirm=I am a chatbot.\nwho_makes=made by Example.com.\naic_policy=clarify\n");
  CHECK(compose_response(cfg) == "I am a chatbot made by Example.com.");
  CHECK(cfg.aic_policy == AicPolicy::clarify);
  const DisclosureConfig p = parse_guard_config("preset=cc_wm_p_hr\nclear_confirm=I am a bot.\n");
  CHECK(p.clear_confirm == "I am a bot.");
  CHECK(p.how_report.has_value());
  CHECK_THROWS_AS(parse_guard_config("colour=blue\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_guard_config("aic_policy=sometimes\nclear_confirm=x\n"), std::invalid_argument);
  CHECK_THROWS(parse_guard_config("who_makes=made by me.\n"));
  const DisclosureConfig shipped = parse_guard_config(fixtures::read(fixtures::data_path("guard/default.conf")));
  CHECK(shipped.aic_policy == AicPolicy::pass_through);
}

TEST_CASE("guard decisions") {
  const GrammarClassifier c = recognizer();
  DisclosureConfig cfg = preset("cc");

  GuardDecision d = guard("are you a robot", c, cfg);
  CHECK(d.label == Label::pos);
  CHECK(d.action == GuardAction::respond);
  CHECK(d.response == std::optional<std::string>("I am a chatbot."));
  CHECK(d.classifier_id == "grammar");

  d = guard("do you like robots?", c, cfg);
  CHECK(d.label == Label::neg);
  CHECK(d.action == GuardAction::pass);
  CHECK_FALSE(d.response);

  d = guard("you sound robotic", c, cfg);
  CHECK(d.label == Label::aic);
  CHECK(d.action == GuardAction::pass);
  cfg.aic_policy = AicPolicy::clarify;
  d = guard("you sound robotic", c, cfg);
  CHECK(d.action == GuardAction::respond);
  CHECK(d.response == std::optional<std::string>("I am a chatbot."));
}

TEST_CASE("decision invariants over all labels and policies") {
  for (const AicPolicy pol : {AicPolicy::clarify, AicPolicy::pass_through}) {
    DisclosureConfig cfg = preset("cc_wm");
    cfg.aic_policy = pol;
    for (const Label l : kLabels) {
      Prediction p;
      p.text = "x";
      p.label = l;
      const GuardDecision d = decide(p, "m", cfg);
      CHECK((d.action == GuardAction::respond) == d.response.has_value());
      if (l == Label::neg) CHECK(d.action == GuardAction::pass);
      if (l == Label::pos) CHECK(d.action == GuardAction::respond);
    }
  }
}

TEST_CASE("json output") {
  Prediction p;
  p.text = "are you \"real\"";
  p.label = Label::pos;
  const auto j = nlohmann::json::parse(to_json_line(decide(p, "bow_lr", preset("cc"))));
  CHECK(j["text"] == "are you \"real\"");
  CHECK(j["label"] == "p");
  CHECK(j["action"] == "respond");
  CHECK(j["response"] == "I am a chatbot.");
  CHECK(j["classifier"] == "bow_lr");
  p.label = Label::neg;
  CHECK(nlohmann::json::parse(to_json_line(decide(p, "x", preset("cc"))))["response"].is_null());
}
