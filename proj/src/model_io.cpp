#include "ruag/model_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace ruag {

ModelFormatError::ModelFormatError(std::size_t line, const std::string& what)
    : Error("model file line " + std::to_string(line) + ": " + what) {}

namespace {

constexpr std::string_view kMagic = "ruag-model";
constexpr int kVersion = 1;

std::string hex(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::hex);
  return std::string(buf, r.ptr);
}

class Writer {
 public:
  template <typename... Fields>
  void row(std::string_view key, const Fields&... fields) {
    out_ += key;
    ((out_ += '\t', append(fields)), ...);
    out_ += '\n';
  }
  std::string str() && { return std::move(out_); }

 private:
  void append(std::string_view s) { out_ += s; }
  void append(const std::string& s) { out_ += s; }
  void append(const char* s) { out_ += s; }
  void append(double v) { out_ += hex(v); }
  void append(std::uint64_t v) { out_ += std::to_string(v); }
  void append(std::uint32_t v) { out_ += std::to_string(v); }
  void append(int v) { out_ += std::to_string(v); }

  std::string out_;
};

void check_text_field(std::string_view s) {
  if (s.find_first_of("\t\n\r") != std::string_view::npos)
    throw std::invalid_argument("model text fields cannot contain tabs or newlines");
}

void write_hp(Writer& w, const Hyperparams& hp) {
  w.row("hp", "ngram_max", std::uint64_t{hp.ngram_max});
  w.row("hp", "hash_buckets", std::uint64_t{hp.hash_buckets});
  w.row("hp", "dim", std::uint64_t{hp.dim});
  w.row("hp", "epochs", std::uint64_t{hp.epochs});
  w.row("hp", "learning_rate", hp.learning_rate);
  w.row("hp", "l2", hp.l2);
  w.row("hp", "batch_size", std::uint64_t{hp.batch_size});
  w.row("hp", "shuffle", std::uint64_t{hp.shuffle ? 1u : 0u});
}

void write_linear(Writer& w, const LinearModel& m) {
  w.row("kind", linear_kind_name(m.kind));
  w.row("classes", "POS", "AIC", "NEG");
  write_hp(w, m.hp);
  w.row("features", std::uint64_t{m.features});
  if (m.kind == LinearKind::bow_lr) {
    w.row("documents", std::uint64_t{m.vocab.document_count()});
    for (std::uint32_t i = 0; i < m.vocab.size(); ++i) {
      check_text_field(m.vocab.token(i));
      w.row("token", m.vocab.token(i), m.vocab.document_frequency(i));
    }
  }
  for (std::size_t c = 0; c < kNumLabels; ++c) w.row("bias", label_name(kLabels[c]), m.biases[c]);
  for (std::size_t c = 0; c < kNumLabels; ++c)
    for (std::size_t f = 0; f < m.features; ++f)
      if (m.weight(c, f) != 0.0 || std::signbit(m.weight(c, f)))
        w.row("weight", label_name(kLabels[c]), std::uint64_t{f}, m.weight(c, f));
  std::vector<std::uint64_t> buckets;
  buckets.reserve(m.embeddings.size());
  for (const auto& [b, row] : m.embeddings) buckets.push_back(b);
  std::sort(buckets.begin(), buckets.end());
  for (std::uint64_t b : buckets) {
    std::string line = std::to_string(b);
    for (double x : m.embeddings.at(b)) {
      line += '\t';
      line += hex(x);
    }
    w.row("embedding", line);
  }
}

// ---------------------------------------------------------------------------

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0, number = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view l = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++number;
    if (l.empty()) continue;
    Line line{number, {}};
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = l.find('\t', start);
      line.fields.push_back(l.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

class Reader {
 public:
  explicit Reader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return i_ >= lines_.size(); }
  const Line& peek() const {
    if (done()) throw ModelFormatError(last_line(), "unexpected end of file");
    return lines_[i_];
  }
  const Line& next() {
    const Line& l = peek();
    ++i_;
    return l;
  }
  bool at(std::string_view key) const { return !done() && lines_[i_].fields[0] == key; }

  const Line& expect(std::string_view key, std::size_t arity) {
    const Line& l = next();
    if (l.fields[0] != key) fail(l, "expected '" + std::string(key) + "'");
    if (l.fields.size() != arity + 1) fail(l, "'" + std::string(key) + "' needs " + std::to_string(arity) + " fields");
    return l;
  }

  [[noreturn]] static void fail(const Line& l, const std::string& what) { throw ModelFormatError(l.number, what); }

  static std::uint64_t integer(const Line& l, std::string_view s) {
    std::uint64_t v = 0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) fail(l, "bad integer '" + std::string(s) + "'");
    return v;
  }

  static double real(const Line& l, std::string_view s) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    bool neg = false;
    if (b != e && *b == '-') {
      neg = true;
      ++b;
    }
    auto r = std::from_chars(b, e, v, std::chars_format::hex);
    if (r.ec != std::errc() || r.ptr != e) fail(l, "bad real '" + std::string(s) + "'");
    return neg ? -v : v;
  }

  std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

 private:
  std::vector<Line> lines_;
  std::size_t i_ = 0;
};

Label class_field(const Line& l, std::string_view s) {
  for (Label c : kLabels)
    if (label_name(c) == s) return c;
  Reader::fail(l, "unknown class '" + std::string(s) + "'");
}

Hyperparams read_hp(Reader& r) {
  Hyperparams hp;
  const std::unordered_map<std::string_view, int> keys = {
      {"ngram_max", 0}, {"hash_buckets", 1}, {"dim", 2}, {"epochs", 3},
      {"learning_rate", 4}, {"l2", 5}, {"batch_size", 6}, {"shuffle", 7}};
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const Line& l = r.expect("hp", 2);
    auto it = keys.find(l.fields[1]);
    if (it == keys.end()) Reader::fail(l, "unknown hyperparameter '" + std::string(l.fields[1]) + "'");
    const std::string_view v = l.fields[2];
    switch (it->second) {
      case 0: hp.ngram_max = Reader::integer(l, v); break;
      case 1: hp.hash_buckets = Reader::integer(l, v); break;
      case 2: hp.dim = Reader::integer(l, v); break;
      case 3: hp.epochs = Reader::integer(l, v); break;
      case 4: hp.learning_rate = Reader::real(l, v); break;
      case 5: hp.l2 = Reader::real(l, v); break;
      case 6: hp.batch_size = Reader::integer(l, v); break;
      case 7: hp.shuffle = Reader::integer(l, v) != 0; break;
    }
  }
  return hp;
}

LinearModel read_linear(Reader& r, LinearKind kind) {
  LinearModel m;
  m.kind = kind;
  const Line& cls = r.expect("classes", 3);
  if (cls.fields[1] != "POS" || cls.fields[2] != "AIC" || cls.fields[3] != "NEG")
    Reader::fail(cls, "class order must be POS AIC NEG");
  m.hp = read_hp(r);
  const Line& feat = r.expect("features", 1);
  m.features = Reader::integer(feat, feat.fields[1]);
  if (kind == LinearKind::bow_lr) {
    const Line& docs = r.expect("documents", 1);
    const std::size_t n_docs = Reader::integer(docs, docs.fields[1]);
    std::vector<std::pair<std::string, std::uint32_t>> tokens;
    while (r.at("token")) {
      const Line& l = r.expect("token", 2);
      tokens.emplace_back(std::string(l.fields[1]), static_cast<std::uint32_t>(Reader::integer(l, l.fields[2])));
    }
    m.vocab = Vocabulary::from_counts(std::move(tokens), n_docs);
    if (m.vocab.size() != m.features) Reader::fail(feat, "feature count does not match the vocabulary");
  } else if (m.features != m.hp.dim) {
    Reader::fail(feat, "feature count does not match dim");
  }
  m.weights.assign(kNumLabels * m.features, 0.0);
  for (std::size_t c = 0; c < kNumLabels; ++c) {
    const Line& l = r.expect("bias", 2);
    m.biases[index_of(class_field(l, l.fields[1]))] = Reader::real(l, l.fields[2]);
  }
  while (r.at("weight")) {
    const Line& l = r.expect("weight", 3);
    const std::size_t c = index_of(class_field(l, l.fields[1]));
    const std::size_t f = Reader::integer(l, l.fields[2]);
    if (f >= m.features) Reader::fail(l, "feature index out of range");
    m.weights[c * m.features + f] = Reader::real(l, l.fields[3]);
  }
  while (r.at("embedding")) {
    const Line& l = r.next();
    if (l.fields.size() != m.features + 2) Reader::fail(l, "embedding row has the wrong width");
    std::vector<double> row;
    row.reserve(m.features);
    for (std::size_t d = 0; d < m.features; ++d) row.push_back(Reader::real(l, l.fields[d + 2]));
    m.embeddings.emplace(Reader::integer(l, l.fields[1]), std::move(row));
  }
  return m;
}

}  // namespace

std::string save_model(const AnyModel& model) {
  Writer w;
  w.row(kMagic, kVersion);
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LinearModel>) {
          write_linear(w, m);
        } else if constexpr (std::is_same_v<T, IrModel>) {
          w.row("kind", "ir");
          for (std::size_t i = 0; i < m.texts.size(); ++i) {
            check_text_field(m.texts[i]);
            w.row("example", std::string(1, label_code(m.labels[i])), m.texts[i]);
          }
        } else {
          w.row("kind", "random");
          w.row("distribution", m.distribution[0], m.distribution[1], m.distribution[2]);
          w.row("seed", std::uint64_t{m.seed});
        }
      },
      model);
  w.row("end");
  return std::move(w).str();
}

AnyModel load_model(std::string_view text) {
  Reader r(split_lines(text));
  const Line& magic = r.expect(kMagic, 1);
  if (Reader::integer(magic, magic.fields[1]) != kVersion) Reader::fail(magic, "unsupported model version");
  const Line& kind = r.expect("kind", 1);
  AnyModel out;
  if (kind.fields[1] == "bow_lr") {
    out = read_linear(r, LinearKind::bow_lr);
  } else if (kind.fields[1] == "ngram_linear") {
    out = read_linear(r, LinearKind::ngram_linear);
  } else if (kind.fields[1] == "ir") {
    std::vector<LabeledUtterance> examples;
    while (r.at("example")) {
      const Line& l = r.expect("example", 2);
      auto label = parse_label(l.fields[1]);
      if (!label) Reader::fail(l, "bad label");
      examples.push_back({std::string(l.fields[2]), *label, SplitTag::train, {}, {}});
    }
    out = train_ir(examples);
  } else if (kind.fields[1] == "random") {
    RandomGuessModel m;
    const Line& d = r.expect("distribution", 3);
    for (std::size_t c = 0; c < kNumLabels; ++c) m.distribution[c] = Reader::real(d, d.fields[c + 1]);
    const Line& s = r.expect("seed", 1);
    m.seed = Reader::integer(s, s.fields[1]);
    out = m;
  } else {
    Reader::fail(kind, "unknown model kind '" + std::string(kind.fields[1]) + "'");
  }
  const Line& end = r.expect("end", 0);
  if (!r.done()) Reader::fail(end, "trailing content after 'end'");
  return out;
}

void save_model_file(const AnyModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write model file " + path.string());
  out << save_model(model);
  if (!out) throw Error("failed writing model file " + path.string());
}

AnyModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read model file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_model(ss.str());
}

std::unique_ptr<Classifier> make_classifier(AnyModel model) {
  return std::visit(
      [](auto&& m) -> std::unique_ptr<Classifier> {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, LinearModel>)
          return std::make_unique<LinearClassifier>(std::move(m));
        else if constexpr (std::is_same_v<T, IrModel>)
          return std::make_unique<IrClassifier>(std::move(m));
        else
          return std::make_unique<RandomGuessClassifier>(m);
      },
      std::move(model));
}

}  // namespace ruag
