#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "coword/periods.hpp"
#include "coword/render.hpp"
#include "coword/report.hpp"
#include "coword/themes.hpp"

namespace coword {

/// Which keyword sets feed the period-to-period overlap statistics.
enum class OverlapStage { PreFilter, PostFilter };

struct PipelineConfig {
  std::vector<std::filesystem::path> input_paths;
  KeywordField keyword_field = KeywordField::AuthorKeywords;
  PeriodScheme periods = PeriodScheme::default_scheme();
  int min_frequency = 2;
  ClusterParams cluster_params;
  AssociationMode association_mode = AssociationMode::Core;
  OverlapStage overlap_vocabulary_stage = OverlapStage::PreFilter;
  double category_threshold = 0.70;
  std::size_t top_k = 20;
  ShareDenominator share_denominator = ShareDenominator::TopK;
  std::optional<std::filesystem::path> thesaurus_path;
  RenderStyle render_style;
  std::filesystem::path workspace = "workspace";

  /// Throws InvalidArgument / InvalidScheme.
  void validate() const;
};

/// Parses a JSON configuration. Missing fields keep their defaults; unknown
/// fields are rejected. Throws InvalidArgument.
PipelineConfig config_from_json(const std::string& text);

/// Pretty-printed JSON with every field.
std::string config_to_json(const PipelineConfig& config);

}  // namespace coword
