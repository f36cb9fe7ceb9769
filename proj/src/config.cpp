#include "coword/config.hpp"

#include "coword/serialize.hpp"

namespace coword {

void PipelineConfig::validate() const {
  if (periods.size() == 0) throw InvalidScheme("no analysis periods configured");
  if (min_frequency < 1) throw InvalidArgument("min_frequency must be at least 1");
  cluster_params.validate();
  if (!(category_threshold > 0.0 && category_threshold <= 1.0)) {
    throw InvalidArgument("category_threshold must lie in (0, 1]");
  }
  if (top_k < 1) throw InvalidArgument("top_k must be at least 1");
  render_style.validate();
}

namespace {

const char* to_string(OverlapStage s) { return s == OverlapStage::PreFilter ? "pre_filter" : "post_filter"; }
const char* to_string(ShareDenominator d) { return d == ShareDenominator::TopK ? "top_k" : "corpus"; }

template <typename T>
T get(const json& j, const std::string& key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw InvalidArgument("config field '" + key + "' has the wrong type");
  }
}

void apply_style(const json& j, RenderStyle& s) {
  if (!j.is_object()) throw InvalidArgument("config field 'render_style' must be an object");
  for (const auto& [key, v] : j.items()) {
    const std::string k = "render_style." + key;
    if (key == "width") s.width = get<int>(v, k);
    else if (key == "height") s.height = get<int>(v, k);
    else if (key == "margin") s.margin = get<int>(v, k);
    else if (key == "font_family") s.font_family = get<std::string>(v, k);
    else if (key == "min_radius") s.min_radius = get<double>(v, k);
    else if (key == "max_radius") s.max_radius = get<double>(v, k);
    else if (key == "quadrant_colors") s.quadrant_colors = get<std::array<std::string, 4>>(v, k);
    else if (key == "min_stroke") s.min_stroke = get<double>(v, k);
    else if (key == "max_stroke") s.max_stroke = get<double>(v, k);
    else if (key == "dash_pattern") s.dash_pattern = get<std::string>(v, k);
    else throw InvalidArgument("unknown config field '" + k + "'");
  }
}

void apply_cluster(const json& j, ClusterParams& p) {
  if (!j.is_object()) throw InvalidArgument("config field 'cluster_params' must be an object");
  for (const auto& [key, v] : j.items()) {
    const std::string k = "cluster_params." + key;
    if (key == "min_keyword_frequency") p.min_keyword_frequency = get<int>(v, k);
    else if (key == "min_cooccurrence") p.min_cooccurrence = get<int>(v, k);
    else if (key == "max_network_size") p.max_network_size = get<int>(v, k);
    else if (key == "min_network_size") p.min_network_size = get<int>(v, k);
    else throw InvalidArgument("unknown config field '" + k + "'");
  }
}

}  // namespace

PipelineConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");

  PipelineConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "input_paths") {
      c.input_paths.clear();
      for (const auto& p : get<std::vector<std::string>>(v, key)) c.input_paths.emplace_back(p);
    } else if (key == "keyword_field") {
      auto f = keyword_field_from_string(get<std::string>(v, key));
      if (!f) throw InvalidArgument("keyword_field must be 'author_keywords' or 'keywords_plus'");
      c.keyword_field = *f;
    } else if (key == "periods") {
      std::vector<Period> periods;
      try {
        periods = v.get<std::vector<Period>>();
      } catch (const json::exception&) {
        throw InvalidArgument("periods must be a list of {label, start_year, end_year}");
      }
      c.periods = PeriodScheme(std::move(periods));
    } else if (key == "min_frequency") {
      c.min_frequency = get<int>(v, key);
    } else if (key == "cluster_params") {
      apply_cluster(v, c.cluster_params);
    } else if (key == "association_mode") {
      auto m = association_mode_from_string(get<std::string>(v, key));
      if (!m) throw InvalidArgument("association_mode must be 'core' or 'loose'");
      c.association_mode = *m;
    } else if (key == "overlap_vocabulary_stage") {
      const auto s = get<std::string>(v, key);
      if (s == "pre_filter") c.overlap_vocabulary_stage = OverlapStage::PreFilter;
      else if (s == "post_filter") c.overlap_vocabulary_stage = OverlapStage::PostFilter;
      else throw InvalidArgument("overlap_vocabulary_stage must be 'pre_filter' or 'post_filter'");
    } else if (key == "category_threshold") {
      c.category_threshold = get<double>(v, key);
    } else if (key == "top_k") {
      const auto k = get<long long>(v, key);
      if (k < 1) throw InvalidArgument("top_k must be at least 1");
      c.top_k = static_cast<std::size_t>(k);
    } else if (key == "share_denominator") {
      const auto s = get<std::string>(v, key);
      if (s == "top_k") c.share_denominator = ShareDenominator::TopK;
      else if (s == "corpus") c.share_denominator = ShareDenominator::Corpus;
      else throw InvalidArgument("share_denominator must be 'top_k' or 'corpus'");
    } else if (key == "thesaurus_path") {
      if (v.is_null()) c.thesaurus_path.reset();
      else c.thesaurus_path = get<std::string>(v, key);
    } else if (key == "render_style") {
      apply_style(v, c.render_style);
    } else if (key == "workspace") {
      c.workspace = get<std::string>(v, key);
    } else {
      throw InvalidArgument("unknown config field '" + key + "'");
    }
  }
  c.validate();
  return c;
}

std::string config_to_json(const PipelineConfig& c) {
  json inputs = json::array();
  for (const auto& p : c.input_paths) inputs.push_back(p.generic_string());
  const auto& s = c.render_style;
  json j = {
      {"input_paths", inputs},
      {"keyword_field", to_string(c.keyword_field)},
      {"periods", c.periods.periods()},
      {"min_frequency", c.min_frequency},
      {"cluster_params",
       {{"min_keyword_frequency", c.cluster_params.min_keyword_frequency},
        {"min_cooccurrence", c.cluster_params.min_cooccurrence},
        {"max_network_size", c.cluster_params.max_network_size},
        {"min_network_size", c.cluster_params.min_network_size}}},
      {"association_mode", to_string(c.association_mode)},
      {"overlap_vocabulary_stage", to_string(c.overlap_vocabulary_stage)},
      {"category_threshold", c.category_threshold},
      {"top_k", c.top_k},
      {"share_denominator", to_string(c.share_denominator)},
      {"thesaurus_path", c.thesaurus_path ? json(c.thesaurus_path->generic_string()) : json(nullptr)},
      {"render_style",
       {{"width", s.width},
        {"height", s.height},
        {"margin", s.margin},
        {"font_family", s.font_family},
        {"min_radius", s.min_radius},
        {"max_radius", s.max_radius},
        {"quadrant_colors", s.quadrant_colors},
        {"min_stroke", s.min_stroke},
        {"max_stroke", s.max_stroke},
        {"dash_pattern", s.dash_pattern}}},
      {"workspace", c.workspace.generic_string()},
  };
  return j.dump(2) + "\n";
}

}  // namespace coword
