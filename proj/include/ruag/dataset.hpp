#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ruag/error.hpp"
#include "ruag/labels.hpp"

namespace ruag {

class DatasetFormatError : public Error {
 public:
  DatasetFormatError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Rows plus the names of any columns after `source`.
struct Dataset {
  std::vector<std::string> extra_columns;
  std::vector<LabeledUtterance> rows;

  std::vector<LabeledUtterance> with_split(SplitTag split) const;
  bool operator==(const Dataset&) const = default;
};

/// Header `text<TAB>label<TAB>split<TAB>source[<TAB>extra...]`, then one row
/// per utterance with labels written p/a/n. Every row must have exactly as
/// many fields as the header.
Dataset parse_dataset(std::string_view tsv);
std::string write_dataset(const Dataset& ds);

Dataset read_dataset_file(const std::filesystem::path& path);
void write_dataset_file(const std::filesystem::path& path, const Dataset& ds);

struct ImportOptions {
  char delimiter = ',';
  std::string text_column = "text";
  std::string label_column = "label";
  // When absent or missing from the header, every row gets default_split.
  std::optional<std::string> split_column = std::string("split");
  SplitTag default_split = SplitTag::none;
  std::optional<std::string> source_column;
  std::string default_source = "import";
};

/// Reads a delimited table with a header row (RFC 4180 quoting). Columns not
/// mapped to text/label/split/source are kept as extra columns in their
/// original order.
Dataset import_table(std::string_view content, const ImportOptions& opts);

}  // namespace ruag
