#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coword/config.hpp"
#include "coword/evolution.hpp"
#include "coword/summary.hpp"

namespace coword {

/// No period produced a theme.
class EmptyAnalysis : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::filesystem::path& path);
/// Writes atomically enough for a single-writer workspace: temp file + rename.
void write_file(const std::filesystem::path& path, const std::string& contents);

/// File-name-safe form of a period or theme label.
std::string file_stem(const std::string& label);

/// Everything computed for one period.
struct PeriodAnalysis {
  CorpusSlice slice;           // after frequency filtering
  std::set<std::string> raw_vocabulary;  // before frequency filtering
  CoWordNetwork network;
  StrategicDiagram diagram;
};

struct Analysis {
  std::vector<PeriodAnalysis> periods;
  std::size_t dropped_out_of_range = 0;
  std::size_t dropped_without_year = 0;
  std::vector<OverlapStats> overlaps;  // adjacent pairs
  std::optional<EvolutionMap> evolution;  // present with >= 2 periods
};

/// normalize -> thesaurus -> slice -> filter -> network -> themes, then
/// overlap and evolution. Periods are analysed concurrently.
Analysis analyze(const Corpus& corpus, const Thesaurus& thesaurus, const PipelineConfig& config);

Thesaurus load_thesaurus(const PipelineConfig& config);

// Workspace stages. Each reads what it needs from, and writes into,
// config.workspace.
Corpus stage_ingest(const PipelineConfig& config, std::ostream& log);
Analysis stage_analyze(const PipelineConfig& config, std::ostream& log, bool color = false);
void stage_report(const PipelineConfig& config, std::ostream& log);
void stage_render(const PipelineConfig& config, std::ostream& log);

/// Full pipeline. Throws EmptyAnalysis when no period has a theme.
void run_pipeline(const PipelineConfig& config, std::ostream& log, bool color = false);

/// Per-period table: theme, documents, centrality, density, quadrant.
std::string format_theme_table(const StrategicDiagram& diagram, bool color);

}  // namespace coword
