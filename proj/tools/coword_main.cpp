// coword: co-word science mapping from Web of Science plain-text exports.
//
//   coword ingest savedrecs*.txt -w ws
//   coword suggest-merges -w ws > thesaurus.txt
//   coword analyze -w ws --thesaurus thesaurus.txt
//   coword report -w ws
//   coword render -w ws
//   coword run savedrecs*.txt -w ws        (all of the above)

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "coword/pipeline.hpp"
#include "coword/serialize.hpp"
#include "coword/text.hpp"
#include "coword/wos_parser.hpp"

namespace {

using namespace coword;

constexpr int kConfigError = 1;
constexpr int kParseError = 2;
constexpr int kEmptyAnalysis = 3;

struct Overrides {
  std::optional<std::string> config_file;
  std::optional<std::string> workspace;
  std::optional<std::string> keyword_field;
  std::optional<std::string> periods;
  std::optional<int> min_frequency;
  std::optional<int> min_keyword_frequency;
  std::optional<int> min_cooccurrence;
  std::optional<int> max_network_size;
  std::optional<int> min_network_size;
  std::optional<std::string> association;
  std::optional<std::string> overlap_stage;
  std::optional<double> category_threshold;
  std::optional<std::size_t> top_k;
  std::optional<std::string> share_denominator;
  std::optional<std::string> thesaurus;
  std::optional<int> width;
  std::optional<int> height;
  std::optional<int> margin;
  std::optional<std::string> font_family;
  std::optional<double> min_radius;
  std::optional<double> max_radius;
  std::optional<std::string> quadrant_colors;
  std::optional<double> min_stroke;
  std::optional<double> max_stroke;
  std::optional<std::string> dash_pattern;
  std::vector<std::string> inputs;
};

/// "2005-2010,2011-2016" -> periods labelled by their year span.
PeriodScheme parse_periods(const std::string& spec) {
  std::vector<Period> periods;
  for (const auto& item : text::split_trimmed(spec, ',')) {
    const auto dash = item.find('-', 1);
    try {
      if (dash == std::string::npos) {
        const int y = std::stoi(item);
        periods.push_back({item, y, y});
      } else {
        periods.push_back({item, std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
      }
    } catch (const std::logic_error&) {
      throw InvalidArgument("cannot read period '" + item + "'; expected START-END");
    }
  }
  return PeriodScheme(std::move(periods));
}

PipelineConfig resolve(const Overrides& o) {
  PipelineConfig c = o.config_file ? config_from_json(read_file(*o.config_file)) : PipelineConfig{};
  if (o.workspace) c.workspace = *o.workspace;
  if (o.keyword_field) {
    auto f = keyword_field_from_string(*o.keyword_field);
    if (!f) throw InvalidArgument("--keyword-field must be author_keywords or keywords_plus");
    c.keyword_field = *f;
  }
  if (o.periods) c.periods = parse_periods(*o.periods);
  if (o.min_frequency) c.min_frequency = *o.min_frequency;
  if (o.min_keyword_frequency) c.cluster_params.min_keyword_frequency = *o.min_keyword_frequency;
  if (o.min_cooccurrence) c.cluster_params.min_cooccurrence = *o.min_cooccurrence;
  if (o.max_network_size) c.cluster_params.max_network_size = *o.max_network_size;
  if (o.min_network_size) c.cluster_params.min_network_size = *o.min_network_size;
  if (o.association) {
    auto m = association_mode_from_string(*o.association);
    if (!m) throw InvalidArgument("--association must be core or loose");
    c.association_mode = *m;
  }
  if (o.overlap_stage) {
    if (*o.overlap_stage == "pre_filter") c.overlap_vocabulary_stage = OverlapStage::PreFilter;
    else if (*o.overlap_stage == "post_filter") c.overlap_vocabulary_stage = OverlapStage::PostFilter;
    else throw InvalidArgument("--overlap-stage must be pre_filter or post_filter");
  }
  if (o.category_threshold) c.category_threshold = *o.category_threshold;
  if (o.top_k) c.top_k = *o.top_k;
  if (o.share_denominator) {
    if (*o.share_denominator == "top_k") c.share_denominator = ShareDenominator::TopK;
    else if (*o.share_denominator == "corpus") c.share_denominator = ShareDenominator::Corpus;
    else throw InvalidArgument("--share-denominator must be top_k or corpus");
  }
  if (o.thesaurus) c.thesaurus_path = *o.thesaurus;
  auto& s = c.render_style;
  if (o.width) s.width = *o.width;
  if (o.height) s.height = *o.height;
  if (o.margin) s.margin = *o.margin;
  if (o.font_family) s.font_family = *o.font_family;
  if (o.min_radius) s.min_radius = *o.min_radius;
  if (o.max_radius) s.max_radius = *o.max_radius;
  if (o.quadrant_colors) {
    const auto colors = text::split_trimmed(*o.quadrant_colors, ',');
    if (colors.size() != 4) throw InvalidArgument("--quadrant-colors needs four comma-separated colors");
    std::copy(colors.begin(), colors.end(), s.quadrant_colors.begin());
  }
  if (o.min_stroke) s.min_stroke = *o.min_stroke;
  if (o.max_stroke) s.max_stroke = *o.max_stroke;
  if (o.dash_pattern) s.dash_pattern = *o.dash_pattern;
  if (!o.inputs.empty()) c.input_paths.assign(o.inputs.begin(), o.inputs.end());
  c.validate();
  return c;
}

void add_shared_options(CLI::App& app, Overrides& o) {
  app.add_option("--config", o.config_file, "JSON configuration file");
  app.add_option("-w,--workspace", o.workspace, "Workspace directory");
  app.add_option("--keyword-field", o.keyword_field, "author_keywords (default) or keywords_plus");
  app.add_option("--periods", o.periods, "Comma-separated START-END periods");
  app.add_option("--min-frequency", o.min_frequency, "Minimum keyword document frequency per period");
  app.add_option("--min-keyword-frequency", o.min_keyword_frequency, "Clustering: minimum keyword frequency");
  app.add_option("--min-cooccurrence", o.min_cooccurrence, "Clustering: minimum co-occurrence");
  app.add_option("--max-network-size", o.max_network_size, "Clustering: maximum theme size");
  app.add_option("--min-network-size", o.min_network_size, "Clustering: minimum theme size");
  app.add_option("--association", o.association, "Document association: core or loose");
  app.add_option("--overlap-stage", o.overlap_stage, "Overlap vocabulary: pre_filter or post_filter");
  app.add_option("--category-threshold", o.category_threshold, "Share of themes on a bisector");
  app.add_option("--top-k", o.top_k, "Number of top keywords in the report");
  app.add_option("--share-denominator", o.share_denominator, "Treemap share base: top_k or corpus");
  app.add_option("--thesaurus", o.thesaurus, "Thesaurus file (CANONICAL = VARIANT | ...)");
  app.add_option("--width", o.width, "SVG canvas width");
  app.add_option("--height", o.height, "SVG canvas height");
  app.add_option("--margin", o.margin, "SVG margin");
  app.add_option("--font-family", o.font_family, "SVG font family");
  app.add_option("--min-radius", o.min_radius, "Smallest sphere radius");
  app.add_option("--max-radius", o.max_radius, "Largest sphere radius");
  app.add_option("--quadrant-colors", o.quadrant_colors, "Four comma-separated quadrant colors");
  app.add_option("--min-stroke", o.min_stroke, "Evolution link width at inclusion 0");
  app.add_option("--max-stroke", o.max_stroke, "Evolution link width at inclusion 1");
  app.add_option("--dash-pattern", o.dash_pattern, "stroke-dasharray for dashed links");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Co-word science mapping: keyword networks, strategic diagrams and thematic evolution"};
  app.set_version_flag("--version", std::string("coword ") + COWORD_VERSION);
  app.fallthrough();

  Overrides o;
  bool print_config = false;
  add_shared_options(app, o);
  app.add_flag("--print-config", print_config, "Print the effective configuration and exit");

  auto* ingest = app.add_subcommand("ingest", "Parse WoS plain-text exports into corpus.json");
  ingest->add_option("files", o.inputs, "WoS plain-text export files");
  auto* suggest = app.add_subcommand("suggest-merges", "Print near-duplicate keywords as thesaurus lines");
  suggest->add_option("files", o.inputs, "Export files (default: the workspace corpus)");
  std::optional<std::string> suggest_out;
  suggest->add_option("-o,--output", suggest_out, "Write suggestions to a file");
  auto* analyze = app.add_subcommand("analyze", "Build period networks, themes, overlap and evolution");
  auto* report = app.add_subcommand("report", "Descriptive statistics and top keywords");
  auto* render = app.add_subcommand("render", "Render SVG diagrams and DOT theme networks");
  auto* run = app.add_subcommand("run", "Full pipeline: ingest, analyze, report, render");
  run->add_option("files", o.inputs, "WoS plain-text export files");
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  const bool color = ::isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr;
  try {
    const PipelineConfig config = resolve(o);
    if (print_config) {
      std::cout << config_to_json(config);
      return 0;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return kConfigError;
    }
    if (*ingest) {
      stage_ingest(config, std::cout);
    } else if (*suggest) {
      const Corpus corpus = config.input_paths.empty()
                                ? json::parse(read_file(config.workspace / "corpus.json")).get<Corpus>()
                                : load_wos_files(config.input_paths);
      const auto text = format_merge_suggestions(suggest_merges(corpus, config.keyword_field));
      if (suggest_out) write_file(*suggest_out, text);
      else std::cout << text;
    } else if (*analyze) {
      stage_analyze(config, std::cout, color);
    } else if (*report) {
      stage_report(config, std::cout);
    } else if (*render) {
      stage_render(config, std::cout);
    } else if (*run) {
      run_pipeline(config, std::cout, color);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const EmptyAnalysis& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kEmptyAnalysis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  }
  return 0;
}
