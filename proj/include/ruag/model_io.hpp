#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "ruag/classifier.hpp"
#include "ruag/ir_model.hpp"
#include "ruag/linear_model.hpp"
#include "ruag/random_guess.hpp"

namespace ruag {

using AnyModel = std::variant<LinearModel, IrModel, RandomGuessModel>;

class ModelFormatError : public Error {
 public:
  ModelFormatError(std::size_t line, const std::string& what);
};

/// Versioned, tab-separated text. Reals are written as hex floats, so
/// load_model(save_model(m)) restores every parameter bit for bit.
///
///   ruag-model  1
///   kind        bow_lr | ngram_linear | ir | random
///   ...         kind-specific records
///   end
std::string save_model(const AnyModel& model);
AnyModel load_model(std::string_view text);

void save_model_file(const AnyModel& model, const std::filesystem::path& path);
AnyModel load_model_file(const std::filesystem::path& path);

std::unique_ptr<Classifier> make_classifier(AnyModel model);

}  // namespace ruag
