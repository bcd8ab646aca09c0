#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef RUAG_TEST_DATA_DIR
#define RUAG_TEST_DATA_DIR "data"
#endif

namespace fixtures {

inline const char* const kToyGrammar = R"(S -> "are you a " RobotOrHuman |
     "am i talking to a " RobotOrHuman
RobotOrHuman -> Robot | Human
Robot -> "robot" | "chatbot" | "computer"
Human -> "human" | "person" | "real person"
)";

inline std::filesystem::path data_path(const std::string& rel) {
  return std::filesystem::path(RUAG_TEST_DATA_DIR) / rel;
}

inline std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fixtures
