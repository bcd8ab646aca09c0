#include "ruag/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ruag {

DatasetFormatError::DatasetFormatError(std::size_t line, const std::string& what)
    : Error("dataset line " + std::to_string(line) + ": " + what), line_(line) {}

std::vector<LabeledUtterance> Dataset::with_split(SplitTag split) const {
  std::vector<LabeledUtterance> out;
  for (const auto& r : rows)
    if (r.split == split) out.push_back(r);
  return out;
}

namespace {

const char* const kStandardColumns[] = {"text", "label", "split", "source"};

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

void check_field(std::string_view f, std::size_t row) {
  if (f.find_first_of("\t\n\r") != std::string_view::npos)
    throw DatasetFormatError(row, "field contains a tab or line break");
}

}  // namespace

Dataset parse_dataset(std::string_view tsv) {
  Dataset ds;
  std::size_t pos = 0, line_no = 0;
  std::size_t width = 0;
  while (pos < tsv.size()) {
    auto eol = tsv.find('\n', pos);
    if (eol == std::string_view::npos) eol = tsv.size();
    std::string_view line = tsv.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.find('\r') != std::string_view::npos) throw DatasetFormatError(line_no, "carriage return in line");
    const auto fields = split_tabs(line);
    if (line_no == 1) {
      if (fields.size() < 4) throw DatasetFormatError(1, "header needs text, label, split, source");
      for (std::size_t i = 0; i < 4; ++i)
        if (fields[i] != kStandardColumns[i])
          throw DatasetFormatError(1, "header column " + std::to_string(i + 1) + " must be '" +
                                          kStandardColumns[i] + "'");
      for (std::size_t i = 4; i < fields.size(); ++i) ds.extra_columns.emplace_back(fields[i]);
      width = fields.size();
      continue;
    }
    if (fields.size() != width)
      throw DatasetFormatError(line_no, "expected " + std::to_string(width) + " fields, got " +
                                            std::to_string(fields.size()));
    LabeledUtterance u;
    u.text = std::string(fields[0]);
    if (fields[1].size() != 1) throw DatasetFormatError(line_no, "label must be p, a or n");
    const auto label = parse_label(fields[1]);
    if (!label || fields[1] != std::string(1, label_code(*label)))
      throw DatasetFormatError(line_no, "label must be p, a or n");
    u.label = *label;
    const auto split = parse_split(fields[2]);
    if (!split) throw DatasetFormatError(line_no, "unknown split '" + std::string(fields[2]) + "'");
    u.split = *split;
    u.source = std::string(fields[3]);
    for (std::size_t i = 4; i < fields.size(); ++i) u.extra.emplace_back(fields[i]);
    ds.rows.push_back(std::move(u));
  }
  if (line_no == 0) throw DatasetFormatError(1, "missing header");
  return ds;
}

std::string write_dataset(const Dataset& ds) {
  std::string out = "text\tlabel\tsplit\tsource";
  for (const auto& c : ds.extra_columns) {
    check_field(c, 1);
    out += '\t';
    out += c;
  }
  out += '\n';
  std::size_t row = 1;
  for (const auto& u : ds.rows) {
    ++row;
    if (u.extra.size() != ds.extra_columns.size())
      throw DatasetFormatError(row, "row has " + std::to_string(u.extra.size()) + " extra fields, header has " +
                                        std::to_string(ds.extra_columns.size()));
    check_field(u.text, row);
    check_field(u.source, row);
    out += u.text;
    out += '\t';
    out += label_code(u.label);
    out += '\t';
    out += split_name(u.split);
    out += '\t';
    out += u.source;
    for (const auto& e : u.extra) {
      check_field(e, row);
      out += '\t';
      out += e;
    }
    out += '\n';
  }
  return out;
}

Dataset read_dataset_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dataset '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_dataset(ss.str());
  } catch (const DatasetFormatError& e) {
    throw DatasetFormatError(e.line(), path.string() + ": " + e.what());
  }
}

void write_dataset_file(const std::filesystem::path& path, const Dataset& ds) {
  const std::string body = write_dataset(ds);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write dataset '" + path.string() + "'");
  out << body;
}

namespace {

std::vector<std::vector<std::string>> parse_delimited(std::string_view s, char delim) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  std::size_t line = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < s.size() && s[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      quoted = true;
      any = true;
    } else if (c == delim) {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < s.size() && s[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
      ++line;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw DatasetFormatError(line, "unterminated quoted field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string flatten(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return s;
}

}  // namespace

Dataset import_table(std::string_view content, const ImportOptions& opts) {
  const auto table = parse_delimited(content, opts.delimiter);
  if (table.empty()) throw DatasetFormatError(1, "missing header");
  const auto& header = table.front();
  auto column = [&](const std::string& name) -> std::optional<std::size_t> {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) return std::nullopt;
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto text_col = column(opts.text_column);
  const auto label_col = column(opts.label_column);
  if (!text_col) throw DatasetFormatError(1, "no column named '" + opts.text_column + "'");
  if (!label_col) throw DatasetFormatError(1, "no column named '" + opts.label_column + "'");
  const auto split_col = opts.split_column ? column(*opts.split_column) : std::nullopt;
  const auto source_col = opts.source_column ? column(*opts.source_column) : std::nullopt;

  Dataset ds;
  std::vector<std::size_t> extras;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i == text_col || i == label_col || i == split_col || i == source_col) continue;
    extras.push_back(i);
    ds.extra_columns.push_back(flatten(header[i]));
  }
  for (std::size_t r = 1; r < table.size(); ++r) {
    const auto& row = table[r];
    const std::size_t line = r + 1;
    if (row.size() != header.size())
      throw DatasetFormatError(line, "expected " + std::to_string(header.size()) + " fields, got " +
                                         std::to_string(row.size()));
    LabeledUtterance u;
    u.text = flatten(row[*text_col]);
    const auto label = parse_label(row[*label_col]);
    if (!label) throw DatasetFormatError(line, "unknown label '" + row[*label_col] + "'");
    u.label = *label;
    u.split = opts.default_split;
    if (split_col) {
      const auto split = parse_split(row[*split_col]);
      if (!split) throw DatasetFormatError(line, "unknown split '" + row[*split_col] + "'");
      u.split = *split;
    }
    u.source = source_col ? flatten(row[*source_col]) : opts.default_source;
    for (const auto i : extras) u.extra.push_back(flatten(row[i]));
    ds.rows.push_back(std::move(u));
  }
  return ds;
}

}  // namespace ruag
