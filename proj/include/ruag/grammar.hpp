#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ruag/error.hpp"

namespace ruag {

class GrammarSyntaxError : public Error {
 public:
  GrammarSyntaxError(std::size_t line, std::size_t col, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

class UndefinedNonTerminal : public Error {
 public:
  explicit UndefinedNonTerminal(std::string name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DuplicateRule : public Error {
 public:
  explicit DuplicateRule(std::string name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class CycleDetected : public Error {
 public:
  explicit CycleDetected(std::vector<std::string> path);
  /// Rule names along the cycle; the first name is repeated at the end.
  const std::vector<std::string>& path() const { return path_; }

 private:
  std::vector<std::string> path_;
};

/// Thrown for structurally invalid grammars that are not covered by the more
/// specific errors (no rules, empty alternative list, non-positive weight).
class InvalidGrammar : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kUnresolved = std::numeric_limits<std::size_t>::max();

struct Symbol {
  enum class Kind : std::uint8_t { terminal, nonterminal };

  Kind kind = Kind::terminal;
  /// Literal text for terminals, rule name for non-terminals.
  std::string value;
  /// Index of the referenced rule; filled in when a Grammar is constructed.
  std::size_t rule = kUnresolved;

  static Symbol terminal(std::string text) { return {Kind::terminal, std::move(text), kUnresolved}; }
  static Symbol nonterminal(std::string name) {
    return {Kind::nonterminal, std::move(name), kUnresolved};
  }

  bool is_terminal() const { return kind == Kind::terminal; }

  bool operator==(const Symbol& o) const { return kind == o.kind && value == o.value; }
};

struct Production {
  std::vector<Symbol> symbols;
  bool operator==(const Production&) const = default;
};

struct Alternative {
  Production production;
  double weight = 1.0;
  bool operator==(const Alternative&) const = default;
};

enum class SplitMode : std::uint8_t { automatic, always, never };

struct Rule {
  std::string name;
  std::vector<Alternative> alternatives;
  SplitMode split = SplitMode::automatic;

  double total_weight() const;
  /// Weight of alternative i divided by the rule's total weight.
  double probability(std::size_t i) const;

  bool operator==(const Rule&) const = default;
};

/// A validated, acyclic, weighted context-free grammar. Immutable once built:
/// construction resolves every non-terminal reference and rejects undefined
/// names, duplicate rules, cycles, empty rules and non-positive weights.
class Grammar {
 public:
  /// An empty start symbol selects the first rule.
  explicit Grammar(std::vector<Rule> rules, std::string start_symbol = {});

  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(std::size_t i) const { return rules_[i]; }
  const Rule& rule(std::string_view name) const;
  const Rule* find(std::string_view name) const;
  std::size_t start() const { return start_; }
  const std::string& start_symbol() const { return rules_[start_].name; }

  /// Rule indices ordered so that every rule appears after all rules it
  /// references.
  const std::vector<std::size_t>& topological_order() const { return topo_; }

 private:
  std::vector<Rule> rules_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t start_ = 0;
  std::vector<std::size_t> topo_;
};

/// Parses the grammar DSL:
///
///   # comment
///   S -> "are you a " RobotOrHuman | "am i talking to a " RobotOrHuman
///   Robot @split -> 3: "robot" | "chatbot" | 0.5: "computer"
///
/// Rules may span several lines; a new rule starts wherever a name is
/// followed by `->` (optionally with `@split` / `@nosplit` in between).
/// Terminals are double-quoted with backslash escapes and concatenate with no
/// implicit space. Omitted weights default to 1. The first rule is the start
/// symbol.
Grammar parse_grammar(std::string_view source);

/// Inverse of parse_grammar(); weights are written in shortest round-trip
/// form so that parse_grammar(serialize(g)) reproduces them exactly.
std::string serialize(const Grammar& g);

/// Escapes a terminal for the DSL, including the surrounding quotes.
std::string quote_terminal(std::string_view text);

/// Number of distinct derivations from the start symbol. Saturates at
/// UINT64_MAX for very large languages.
std::uint64_t count_derivations(const Grammar& g);

/// Per-rule derivation counts, indexed like g.rules().
std::vector<std::uint64_t> count_rule_derivations(const Grammar& g);

struct GrammarStats {
  std::uint64_t derivation_count = 0;
  std::uint64_t estimated_unique_strings = 0;
  std::uint64_t sample_size = 0;
};

}  // namespace ruag
