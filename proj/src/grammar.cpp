#include "ruag/grammar.hpp"

#include <charconv>
#include <cmath>

namespace ruag {

namespace {

std::string join_path(const std::vector<std::string>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += " -> ";
    out += path[i];
  }
  return out;
}

}  // namespace

GrammarSyntaxError::GrammarSyntaxError(std::size_t line, std::size_t col, const std::string& what)
    : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what),
      line_(line),
      col_(col) {}

UndefinedNonTerminal::UndefinedNonTerminal(std::string name)
    : Error("undefined non-terminal '" + name + "'"), name_(std::move(name)) {}

DuplicateRule::DuplicateRule(std::string name)
    : Error("rule '" + name + "' is defined more than once"), name_(std::move(name)) {}

CycleDetected::CycleDetected(std::vector<std::string> path)
    : Error("grammar is cyclic: " + join_path(path)), path_(std::move(path)) {}

double Rule::total_weight() const {
  double total = 0.0;
  for (const auto& alt : alternatives) total += alt.weight;
  return total;
}

double Rule::probability(std::size_t i) const { return alternatives[i].weight / total_weight(); }

Grammar::Grammar(std::vector<Rule> rules, std::string start_symbol) : rules_(std::move(rules)) {
  if (rules_.empty()) throw InvalidGrammar("grammar has no rules");
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    if (!index_.emplace(r.name, i).second) throw DuplicateRule(r.name);
    if (r.alternatives.empty()) throw InvalidGrammar("rule '" + r.name + "' has no alternatives");
    for (const auto& alt : r.alternatives) {
      if (!(alt.weight > 0.0) || !std::isfinite(alt.weight))
        throw InvalidGrammar("rule '" + r.name + "' has a non-positive or non-finite weight");
      if (alt.production.symbols.empty())
        throw InvalidGrammar("rule '" + r.name + "' has an empty production; write \"\" for epsilon");
    }
  }
  if (start_symbol.empty()) {
    start_ = 0;
  } else {
    auto it = index_.find(start_symbol);
    if (it == index_.end()) throw UndefinedNonTerminal(start_symbol);
    start_ = it->second;
  }

  for (auto& r : rules_) {
    for (auto& alt : r.alternatives) {
      for (auto& sym : alt.production.symbols) {
        if (sym.is_terminal()) {
          sym.rule = kUnresolved;
          continue;
        }
        auto it = index_.find(sym.value);
        if (it == index_.end()) throw UndefinedNonTerminal(sym.value);
        sym.rule = it->second;
      }
    }
  }

  // Depth-first search with an explicit stack; a grey node reached again is a
  // back edge and therefore a cycle.
  enum class Mark : std::uint8_t { white, grey, black };
  std::vector<Mark> mark(rules_.size(), Mark::white);
  topo_.reserve(rules_.size());
  struct Frame {
    std::size_t rule;
    std::size_t alt = 0;
    std::size_t sym = 0;
  };
  for (std::size_t root = 0; root < rules_.size(); ++root) {
    if (mark[root] != Mark::white) continue;
    std::vector<Frame> stack{{root}};
    mark[root] = Mark::grey;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const Rule& r = rules_[f.rule];
      if (f.alt == r.alternatives.size()) {
        mark[f.rule] = Mark::black;
        topo_.push_back(f.rule);
        stack.pop_back();
        continue;
      }
      const auto& syms = r.alternatives[f.alt].production.symbols;
      if (f.sym == syms.size()) {
        ++f.alt;
        f.sym = 0;
        continue;
      }
      const Symbol& s = syms[f.sym++];
      if (s.is_terminal()) continue;
      if (mark[s.rule] == Mark::grey) {
        std::vector<std::string> path;
        bool on_cycle = false;
        for (const auto& fr : stack) {
          if (fr.rule == s.rule) on_cycle = true;
          if (on_cycle) path.push_back(rules_[fr.rule].name);
        }
        path.push_back(rules_[s.rule].name);
        throw CycleDetected(std::move(path));
      }
      if (mark[s.rule] == Mark::white) {
        mark[s.rule] = Mark::grey;
        stack.push_back({s.rule});
      }
    }
  }
}

const Rule* Grammar::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &rules_[it->second];
}

const Rule& Grammar::rule(std::string_view name) const {
  const Rule* r = find(name);
  if (!r) throw UndefinedNonTerminal(std::string(name));
  return *r;
}

// ---------------------------------------------------------------------------
// DSL parsing

namespace {

enum class Tok { ident, string, weight, arrow, pipe, annotation, end };

struct Token {
  Tok kind;
  std::string text;
  double number = 0.0;
  std::size_t line;
  std::size_t col;
};

bool ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_blank();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::end, {}, 0.0, line_, col_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  char peek(std::size_t off = 0) const {
    return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  Token next() {
    const std::size_t line = line_, col = col_;
    const char c = peek();
    if (c == '-' && peek(1) == '>') {
      advance();
      advance();
      return {Tok::arrow, "->", 0.0, line, col};
    }
    if (c == '|') {
      advance();
      return {Tok::pipe, "|", 0.0, line, col};
    }
    if (c == '@') {
      advance();
      std::string word;
      while (ident_char(peek())) {
        word.push_back(peek());
        advance();
      }
      if (word != "split" && word != "nosplit")
        throw GrammarSyntaxError(line, col, "unknown annotation '@" + word + "'");
      return {Tok::annotation, word, 0.0, line, col};
    }
    if (c == '"') return string_literal(line, col);
    if (ident_start(c)) {
      std::string word;
      while (ident_char(peek())) {
        word.push_back(peek());
        advance();
      }
      return {Tok::ident, word, 0.0, line, col};
    }
    if (digit(c) || c == '.') return weight(line, col);
    throw GrammarSyntaxError(line, col, std::string("unexpected character '") + c + "'");
  }

  Token string_literal(std::size_t line, std::size_t col) {
    advance();  // opening quote
    std::string text;
    while (true) {
      if (pos_ >= src_.size() || peek() == '\n')
        throw GrammarSyntaxError(line, col, "unterminated string literal");
      char c = peek();
      if (c == '"') {
        advance();
        return {Tok::string, text, 0.0, line, col};
      }
      if (c == '\\') {
        const std::size_t esc_line = line_, esc_col = col_;
        advance();
        if (pos_ >= src_.size()) throw GrammarSyntaxError(esc_line, esc_col, "dangling escape");
        switch (peek()) {
          case '"': text.push_back('"'); break;
          case '\\': text.push_back('\\'); break;
          case 'n': text.push_back('\n'); break;
          case 't': text.push_back('\t'); break;
          default:
            throw GrammarSyntaxError(esc_line, esc_col,
                                     std::string("unknown escape '\\") + peek() + "'");
        }
        advance();
        continue;
      }
      text.push_back(c);
      advance();
    }
  }

  Token weight(std::size_t line, std::size_t col) {
    const std::size_t begin = pos_;
    while (digit(peek()) || peek() == '.' || peek() == 'e' || peek() == 'E' ||
           ((peek() == '+' || peek() == '-') && (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E')))
      advance();
    const std::string_view num = src_.substr(begin, pos_ - begin);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc() || ptr != num.data() + num.size())
      throw GrammarSyntaxError(line, col, "malformed weight '" + std::string(num) + "'");
    while (peek() == ' ' || peek() == '\t') advance();
    if (peek() != ':') throw GrammarSyntaxError(line_, col_, "expected ':' after weight");
    advance();
    if (!(value > 0.0) || !std::isfinite(value))
      throw GrammarSyntaxError(line, col, "weight must be positive and finite");
    return {Tok::weight, std::string(num), value, line, col};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<Rule> run() {
    std::vector<Rule> rules;
    while (cur().kind != Tok::end) {
      if (!at_rule_head()) throw error(cur(), "expected a rule of the form 'Name -> ...'");
      rules.push_back(rule());
    }
    return rules;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  const Token& at(std::size_t k) const { return toks_[std::min(k, toks_.size() - 1)]; }

  static GrammarSyntaxError error(const Token& t, const std::string& what) {
    return GrammarSyntaxError(t.line, t.col, what);
  }

  bool at_rule_head() const {
    if (cur().kind != Tok::ident) return false;
    if (at(i_ + 1).kind == Tok::arrow) return true;
    return at(i_ + 1).kind == Tok::annotation && at(i_ + 2).kind == Tok::arrow;
  }

  Rule rule() {
    Rule r;
    r.name = cur().text;
    ++i_;
    if (cur().kind == Tok::annotation) {
      r.split = cur().text == "split" ? SplitMode::always : SplitMode::never;
      ++i_;
    }
    ++i_;  // arrow
    r.alternatives.push_back(alternative());
    while (cur().kind == Tok::pipe) {
      ++i_;
      r.alternatives.push_back(alternative());
    }
    return r;
  }

  Alternative alternative() {
    Alternative alt;
    const Token& first = cur();
    if (cur().kind == Tok::weight) {
      alt.weight = cur().number;
      ++i_;
    }
    while (true) {
      if (cur().kind == Tok::string) {
        alt.production.symbols.push_back(Symbol::terminal(cur().text));
        ++i_;
      } else if (cur().kind == Tok::ident && !at_rule_head()) {
        alt.production.symbols.push_back(Symbol::nonterminal(cur().text));
        ++i_;
      } else {
        break;
      }
    }
    if (alt.production.symbols.empty())
      throw error(cur().kind == Tok::end ? first : cur(),
                  "empty alternative; write \"\" for the empty string");
    if (cur().kind == Tok::arrow || cur().kind == Tok::annotation || cur().kind == Tok::weight)
      throw error(cur(), "unexpected '" + cur().text + "'");
    return alt;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Grammar parse_grammar(std::string_view source) {
  Parser parser(Lexer(source).run());
  std::vector<Rule> rules = parser.run();
  if (rules.empty()) throw GrammarSyntaxError(1, 1, "grammar contains no rules");
  return Grammar(std::move(rules));
}

std::string quote_terminal(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string serialize(const Grammar& g) {
  std::string out;
  for (const Rule& r : g.rules()) {
    out += r.name;
    if (r.split == SplitMode::always) out += " @split";
    if (r.split == SplitMode::never) out += " @nosplit";
    out += " ->";
    for (std::size_t a = 0; a < r.alternatives.size(); ++a) {
      const Alternative& alt = r.alternatives[a];
      if (a) out += " |";
      if (alt.weight != 1.0) {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof buf, alt.weight);
        out += ' ';
        out.append(buf, res.ptr);
        out += ':';
      }
      for (const Symbol& s : alt.production.symbols) {
        out += ' ';
        out += s.is_terminal() ? quote_terminal(s.value) : s.value;
      }
    }
    out += '\n';
  }
  return out;
}

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

std::vector<std::uint64_t> count_rule_derivations(const Grammar& g) {
  std::vector<std::uint64_t> count(g.rules().size(), 0);
  for (std::size_t r : g.topological_order()) {
    std::uint64_t total = 0;
    for (const auto& alt : g.rule(r).alternatives) {
      std::uint64_t prod = 1;
      for (const auto& s : alt.production.symbols)
        if (!s.is_terminal()) prod = sat_mul(prod, count[s.rule]);
      total = sat_add(total, prod);
    }
    count[r] = total;
  }
  return count;
}

std::uint64_t count_derivations(const Grammar& g) { return count_rule_derivations(g)[g.start()]; }

}  // namespace ruag
