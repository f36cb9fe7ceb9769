#include "coword/pipeline.hpp"

#include <exception>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "coword/serialize.hpp"
#include "coword/text.hpp"
#include "coword/wos_parser.hpp"

namespace coword {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& contents) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << contents;
    if (!out) throw IoError("failed writing " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

std::string file_stem(const std::string& label) {
  std::string out;
  for (unsigned char c : label) {
    const bool safe = std::isalnum(c) || c == '-' || c == '_' || c == '.';
    out += safe ? static_cast<char>(c) : '_';
  }
  if (out.empty() || out.front() == '.') out.insert(out.begin(), '_');
  return out;
}

Thesaurus load_thesaurus(const PipelineConfig& config) {
  if (!config.thesaurus_path) return {};
  return parse_thesaurus(read_file(*config.thesaurus_path));
}

Analysis analyze(const Corpus& corpus, const Thesaurus& thesaurus, const PipelineConfig& config) {
  config.validate();
  const KeywordCorpus keywords = apply_thesaurus(corpus, thesaurus, config.keyword_field);
  SliceResult sliced = slice_periods(keywords, config.periods);

  Analysis analysis;
  analysis.dropped_out_of_range = sliced.dropped_out_of_range;
  analysis.dropped_without_year = sliced.dropped_without_year;
  analysis.periods.resize(sliced.slices.size());

  const DiagramParams params{config.cluster_params, config.association_mode, config.category_threshold};
  const auto n = static_cast<std::ptrdiff_t>(sliced.slices.size());
  std::vector<std::exception_ptr> errors(sliced.slices.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      auto& p = analysis.periods[i];
      p.raw_vocabulary = sliced.slices[i].vocabulary();
      p.slice = filter_keywords(sliced.slices[i], config.min_frequency);
      p.network = build_network(p.slice);
      p.diagram = build_strategic_diagram(p.network, p.slice, params);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  const auto vocabulary = [&](const PeriodAnalysis& p) {
    return config.overlap_vocabulary_stage == OverlapStage::PreFilter ? p.raw_vocabulary : p.slice.vocabulary();
  };
  bool chain_complete = true;
  for (const auto& p : analysis.periods) chain_complete = chain_complete && !vocabulary(p).empty();
  if (chain_complete) {
    for (std::size_t i = 0; i + 1 < analysis.periods.size(); ++i) {
      analysis.overlaps.push_back(keyword_overlap(vocabulary(analysis.periods[i]), vocabulary(analysis.periods[i + 1])));
    }
  }
  if (analysis.periods.size() >= 2) {
    std::vector<StrategicDiagram> diagrams;
    for (const auto& p : analysis.periods) diagrams.push_back(p.diagram);
    analysis.evolution = build_evolution_map(diagrams);
  }
  return analysis;
}

std::string format_theme_table(const StrategicDiagram& diagram, bool color) {
  const char* bold = color ? "\x1b[1m" : "";
  const char* reset = color ? "\x1b[0m" : "";
  std::ostringstream out;
  out << bold << "Period " << diagram.period_label;
  if (diagram.category) out << "  [" << to_string(*diagram.category) << ']';
  out << reset << '\n';
  std::size_t width = 5;
  for (const auto& t : diagram.themes) width = std::max(width, t.label.size());
  out << bold << std::left << std::setw(static_cast<int>(width) + 2) << "Theme" << std::right << std::setw(10)
      << "Documents" << std::setw(12) << "Centrality" << std::setw(10) << "Density"
      << "  Quadrant" << reset << '\n';
  for (const auto& t : diagram.themes) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << t.label << std::right << std::setw(10)
        << t.documents.size() << std::setw(12) << text::fixed(t.centrality, 2) << std::setw(10)
        << text::fixed(t.density, 2) << "  " << to_string(t.quadrant) << '\n';
  }
  if (diagram.themes.empty()) out << "(no themes)\n";
  return out.str();
}

namespace {

fs::path ws(const PipelineConfig& c, const fs::path& rel) { return c.workspace / rel; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Corpus load_corpus(const PipelineConfig& config) {
  const auto path = ws(config, "corpus.json");
  if (!fs::exists(path)) throw IoError(path.string() + " not found; run 'ingest' first");
  try {
    return json::parse(read_file(path)).get<Corpus>();
  } catch (const json::exception& e) {
    throw IoError(path.string() + " is not a valid corpus: " + e.what());
  }
}

void log_summary(const SummaryStats& s, std::ostream& log) {
  log << "documents: " << s.n_documents << '\n';
  for (const auto& [t, n] : s.counts_by_doc_type) {
    if (n > 0) log << "  " << to_string(t) << ": " << n << '\n';
  }
  log << "distinct author keywords: " << s.n_distinct_author_keywords << '\n'
      << "distinct keywords plus: " << s.n_distinct_keywords_plus << '\n'
      << "authors: " << s.n_authors << ", single-authored documents: " << s.n_single_authored_docs << '\n';
  if (s.year_range) log << "years: " << s.year_range->first << '-' << s.year_range->second << '\n';
}

void write_corpus(const Corpus& corpus, const PipelineConfig& config, std::ostream& log) {
  write_file(ws(config, "corpus.json"), dump(corpus));
  log_summary(corpus_summary(corpus, config.keyword_field), log);
}

Corpus ingest(const PipelineConfig& config) {
  if (config.input_paths.empty()) throw InvalidArgument("no input files given");
  return load_wos_files(config.input_paths);
}

std::vector<PeriodVocabulary> overlap_periods(const Analysis& analysis, const PipelineConfig& config) {
  std::vector<PeriodVocabulary> out;
  for (const auto& p : analysis.periods) {
    const auto size = config.overlap_vocabulary_stage == OverlapStage::PreFilter ? p.raw_vocabulary.size()
                                                                                 : p.slice.vocabulary().size();
    out.push_back({p.slice.period.label, size});
  }
  return out;
}

bool write_analysis(const Analysis& analysis, const PipelineConfig& config, std::ostream& log, bool color) {
  json periods = json::array();
  bool any_theme = false;
  for (const auto& p : analysis.periods) {
    const auto stem = file_stem(p.slice.period.label);
    json slice = p.slice;
    slice["min_frequency"] = config.min_frequency;
    slice["vocabulary_before_filter"] = p.raw_vocabulary;
    write_file(ws(config, "slices/" + stem + ".json"), dump(slice));
    write_file(ws(config, "networks/" + stem + ".json"), dump(p.network));
    write_file(ws(config, "diagrams/" + stem + ".json"), dump(p.diagram));
    write_file(ws(config, "diagrams/" + stem + ".csv"), diagram_csv(p.diagram));
    periods.push_back({{"period", p.slice.period},
                       {"documents", p.slice.documents.size()},
                       {"keywords", p.network.node_count()},
                       {"edges", p.network.edges.size()},
                       {"themes", p.diagram.themes.size()}});
    any_theme = any_theme || !p.diagram.themes.empty();
    log << format_theme_table(p.diagram, color) << '\n';
  }
  write_file(ws(config, "analysis.json"),
             dump({{"periods", periods},
                   {"dropped_out_of_range", analysis.dropped_out_of_range},
                   {"dropped_without_year", analysis.dropped_without_year}}));
  if (analysis.dropped_out_of_range + analysis.dropped_without_year > 0) {
    log << "dropped documents: " << analysis.dropped_out_of_range << " outside every period, "
        << analysis.dropped_without_year << " without a publication year\n";
  }

  json vocab = json::array();
  for (const auto& p : overlap_periods(analysis, config)) vocab.push_back({{"label", p.label}, {"size", p.size}});
  write_file(ws(config, "overlap.json"), dump({{"periods", vocab}, {"stats", analysis.overlaps}}));
  for (std::size_t i = 0; i < analysis.overlaps.size(); ++i) {
    const auto& s = analysis.overlaps[i];
    log << "overlap " << analysis.periods[i].slice.period.label << " -> "
        << analysis.periods[i + 1].slice.period.label << ": " << s.shared << " shared ("
        << s.stability.to_fixed(2) << "), " << s.dropped << " dropped, " << s.introduced << " introduced\n";
  }
  if (analysis.evolution) write_file(ws(config, "evolution.json"), dump(*analysis.evolution));
  return any_theme;
}

void report(const Corpus& corpus, const Thesaurus& thesaurus, const PipelineConfig& config, std::ostream& log) {
  const auto summary = corpus_summary(corpus, config.keyword_field);
  const auto per_year = docs_per_year(corpus);
  const auto top = top_keywords(apply_thesaurus(corpus, thesaurus, config.keyword_field), config.top_k,
                                config.share_denominator);

  json years = json::object();
  for (const auto& [y, n] : per_year) years[std::to_string(y)] = n;
  json keywords = json::array();
  json treemap = json::array();
  std::ostringstream csv;
  csv << "keyword,frequency,share\n";
  for (const auto& k : top) {
    json growth = json::object();
    for (const auto& [y, n] : k.per_year) growth[std::to_string(y)] = n;
    keywords.push_back({{"keyword", k.keyword}, {"total_frequency", k.total_frequency}, {"share", k.share},
                        {"per_year", growth}});
    treemap.push_back({{"keyword", k.keyword}, {"frequency", k.total_frequency}, {"share", k.share}});
    csv << k.keyword << ',' << k.total_frequency << ',' << text::fixed(k.share, 4) << '\n';
  }
  write_file(ws(config, "report.json"), dump({{"summary", summary},
                                              {"docs_per_year", years},
                                              {"top_keywords", keywords},
                                              {"treemap", treemap}}));
  write_file(ws(config, "report.csv"), csv.str());
  log << "top keywords:";
  for (std::size_t i = 0; i < top.size() && i < 5; ++i) {
    log << ' ' << top[i].keyword << " (" << text::fixed(100.0 * top[i].share, 0) << "%)";
  }
  log << '\n';
}

void render_period(const PipelineConfig& config, const StrategicDiagram& diagram, const CoWordNetwork* network,
                   std::ostream& log, std::size_t& written) {
  if (diagram.themes.empty()) {
    log << "skipping " << diagram.period_label << ": no themes\n";
    return;
  }
  const auto stem = file_stem(diagram.period_label);
  write_file(ws(config, "diagrams/" + stem + ".svg"), render_strategic_svg(diagram, config.render_style));
  ++written;
  if (!network) return;
  for (const auto& t : diagram.themes) {
    write_file(ws(config, "networks/" + stem + "/" + file_stem(t.label) + ".dot"), render_network_dot(t, *network));
  }
}

void render_chain(const PipelineConfig& config, std::span<const PeriodVocabulary> periods,
                  std::span<const OverlapStats> stats, std::size_t& written) {
  if (!periods.empty() && stats.size() + 1 == periods.size()) {
    write_file(ws(config, "overlap.svg"), render_overlap_svg(periods, stats, config.render_style));
    ++written;
  }
}

// Renders from the analysis held in memory.
void render(const Analysis& analysis, const PipelineConfig& config, std::ostream& log) {
  std::size_t written = 0;
  for (const auto& p : analysis.periods) render_period(config, p.diagram, &p.network, log, written);
  if (analysis.evolution) {
    write_file(ws(config, "evolution.svg"), render_evolution_svg(*analysis.evolution, config.render_style));
    ++written;
  }
  render_chain(config, overlap_periods(analysis, config), analysis.overlaps, written);
  log << "rendered " << written << " SVG file(s) into " << config.workspace.string() << '\n';
}

// Renders from the workspace files written by the analyze stage.
void render(const PipelineConfig& config, std::ostream& log) {
  std::size_t written = 0;
  for (const auto& period : config.periods.periods()) {
    const auto stem = file_stem(period.label);
    const auto diagram_path = ws(config, "diagrams/" + stem + ".json");
    if (!fs::exists(diagram_path)) continue;
    const auto diagram = json::parse(read_file(diagram_path)).get<StrategicDiagram>();
    std::optional<CoWordNetwork> network;
    if (const auto path = ws(config, "networks/" + stem + ".json"); fs::exists(path) && !diagram.themes.empty()) {
      network = json::parse(read_file(path)).get<CoWordNetwork>();
    }
    render_period(config, diagram, network ? &*network : nullptr, log, written);
  }
  if (const auto path = ws(config, "evolution.json"); fs::exists(path)) {
    const auto map = json::parse(read_file(path)).get<EvolutionMap>();
    write_file(ws(config, "evolution.svg"), render_evolution_svg(map, config.render_style));
    ++written;
  }
  if (const auto path = ws(config, "overlap.json"); fs::exists(path)) {
    const auto j = json::parse(read_file(path));
    std::vector<PeriodVocabulary> periods;
    for (const auto& p : j.at("periods")) periods.push_back({p.at("label"), p.at("size")});
    render_chain(config, periods, j.at("stats").get<std::vector<OverlapStats>>(), written);
  }
  log << "rendered " << written << " SVG file(s) into " << config.workspace.string() << '\n';
}

}  // namespace

Corpus stage_ingest(const PipelineConfig& config, std::ostream& log) {
  config.validate();
  Corpus corpus = ingest(config);
  write_corpus(corpus, config, log);
  return corpus;
}

Analysis stage_analyze(const PipelineConfig& config, std::ostream& log, bool color) {
  config.validate();
  const Corpus corpus = load_corpus(config);
  Analysis analysis = analyze(corpus, load_thesaurus(config), config);
  if (!write_analysis(analysis, config, log, color)) {
    throw EmptyAnalysis("no themes in any period; try a lower min_frequency (now " +
                        std::to_string(config.min_frequency) + ") or cluster thresholds");
  }
  return analysis;
}

void stage_report(const PipelineConfig& config, std::ostream& log) {
  config.validate();
  report(load_corpus(config), load_thesaurus(config), config, log);
}

void stage_render(const PipelineConfig& config, std::ostream& log) {
  config.validate();
  render(config, log);
}

void run_pipeline(const PipelineConfig& config, std::ostream& log, bool color) {
  config.validate();
  const Thesaurus thesaurus = load_thesaurus(config);
  const Corpus corpus = ingest(config);
  write_corpus(corpus, config, log);
  const Analysis analysis = analyze(corpus, thesaurus, config);
  const bool any_theme = write_analysis(analysis, config, log, color);
  report(corpus, thesaurus, config, log);
  if (!any_theme) {
    throw EmptyAnalysis("no themes in any period; try a lower min_frequency (now " +
                        std::to_string(config.min_frequency) + ") or cluster thresholds");
  }
  render(analysis, config, log);
}

}  // namespace coword
