#include "coword/serialize.hpp"

#include <sstream>

#include "coword/text.hpp"

namespace coword {

namespace {

template <typename E, typename F>
E enum_from(const json& j, F parse, const char* what) {
  const auto s = j.get<std::string>();
  if (auto v = parse(s)) return *v;
  throw InvalidArgument(std::string("unknown ") + what + " '" + s + "'");
}

json edge_json(const std::string& a, const std::string& b, std::uint32_t cooccurrence, const Rational& e) {
  return {{"i", a}, {"j", b}, {"cooccurrence", cooccurrence}, {"equivalence", e}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void to_json(json& j, const Rational& r) {
  j = {{"numerator", r.num()}, {"denominator", r.den()}, {"decimal", r.value()}};
}

void from_json(const json& j, Rational& r) {
  r = Rational(j.at("numerator").get<std::uint64_t>(), j.at("denominator").get<std::uint64_t>());
}

void to_json(json& j, const Document& d) {
  j = json::object();
  j["id"] = d.id;
  j["year"] = d.year ? json(*d.year) : json(nullptr);
  j["doc_type"] = to_string(d.doc_type);
  j["title"] = d.title;
  j["source"] = d.source;
  j["authors"] = d.authors;
  j["author_keywords"] = d.author_keywords;
  j["keywords_plus"] = d.keywords_plus;
  j["extra_tags"] = d.extra_tags;
}

void from_json(const json& j, Document& d) {
  d.id = j.at("id").get<std::string>();
  d.year = j.at("year").is_null() ? std::nullopt : std::optional<int>(j.at("year").get<int>());
  d.doc_type = enum_from<DocType>(j.at("doc_type"), doc_type_from_string, "doc_type");
  d.title = j.at("title").get<std::string>();
  d.source = j.at("source").get<std::string>();
  d.authors = j.at("authors").get<std::vector<std::string>>();
  d.author_keywords = j.at("author_keywords").get<std::vector<std::string>>();
  d.keywords_plus = j.at("keywords_plus").get<std::vector<std::string>>();
  d.extra_tags = j.value("extra_tags", std::map<std::string, std::vector<std::string>>{});
}

void to_json(json& j, const Corpus& c) {
  j = {{"provenance", {{"source_files", c.provenance.source_files}, {"parsed_at", c.provenance.parsed_at}}},
       {"documents", c.documents}};
}

void from_json(const json& j, Corpus& c) {
  const auto& p = j.at("provenance");
  c.provenance.source_files = p.at("source_files").get<std::vector<std::string>>();
  c.provenance.parsed_at = p.at("parsed_at").get<std::string>();
  c.documents = j.at("documents").get<std::vector<Document>>();
}

void to_json(json& j, const SummaryStats& s) {
  json by_type = json::object();
  for (const auto& [t, n] : s.counts_by_doc_type) by_type[to_string(t)] = n;
  j = {{"keyword_field", to_string(s.keyword_field)},
       {"n_documents", s.n_documents},
       {"counts_by_doc_type", by_type},
       {"n_distinct_author_keywords", s.n_distinct_author_keywords},
       {"n_distinct_keywords_plus", s.n_distinct_keywords_plus},
       {"n_authors", s.n_authors},
       {"n_single_authored_docs", s.n_single_authored_docs},
       {"year_range", s.year_range ? json::array({s.year_range->first, s.year_range->second}) : json(nullptr)}};
}

void to_json(json& j, const Period& p) {
  j = {{"label", p.label}, {"start_year", p.start_year}, {"end_year", p.end_year}};
}

void from_json(const json& j, Period& p) {
  p.label = j.at("label").get<std::string>();
  p.start_year = j.at("start_year").get<int>();
  p.end_year = j.at("end_year").get<int>();
}

void to_json(json& j, const CorpusSlice& s) {
  json docs = json::array();
  for (const auto& d : s.documents) {
    docs.push_back({{"id", d.id}, {"year", d.year ? json(*d.year) : json(nullptr)}, {"keywords", d.keywords}});
  }
  j = {{"period", s.period}, {"keyword_field", to_string(s.field)}, {"documents", docs}};
}

void from_json(const json& j, CorpusSlice& s) {
  s.period = j.at("period").get<Period>();
  s.field = enum_from<KeywordField>(j.at("keyword_field"), keyword_field_from_string, "keyword_field");
  s.documents.clear();
  for (const auto& d : j.at("documents")) {
    s.documents.push_back({d.at("id").get<std::string>(),
                           d.at("year").is_null() ? std::nullopt : std::optional<int>(d.at("year").get<int>()),
                           d.at("keywords").get<std::vector<std::string>>()});
  }
}

void to_json(json& j, const CoWordNetwork& n) {
  j = json::object();
  j["period"] = n.period_label;
  j["nodes"] = json::array();
  auto& nodes = j["nodes"].get_ref<json::array_t&>();
  nodes.reserve(n.keywords.size());
  for (std::size_t i = 0; i < n.keywords.size(); ++i) {
    json node = json::object();
    node["keyword"] = n.keywords[i];
    node["count"] = n.counts[i];
    nodes.push_back(std::move(node));
  }
  j["edges"] = json::array();
  auto& edges = j["edges"].get_ref<json::array_t&>();
  edges.reserve(n.edges.size());
  for (const auto& e : n.edges) edges.push_back(edge_json(n.keywords[e.u], n.keywords[e.v], e.cooccurrence, e.equivalence));
}

void from_json(const json& j, CoWordNetwork& n) {
  n = CoWordNetwork{};
  n.period_label = j.at("period").get<std::string>();
  for (const auto& node : j.at("nodes")) {
    n.keywords.push_back(node.at("keyword").get<std::string>());
    n.counts.push_back(node.at("count").get<std::uint32_t>());
  }
  for (const auto& e : j.at("edges")) {
    const auto u = n.find(e.at("i").get<std::string>());
    const auto v = n.find(e.at("j").get<std::string>());
    if (!u || !v || *u >= *v) throw InvalidArgument("network edge refers to unknown or unordered keywords");
    n.edges.push_back({*u, *v, e.at("cooccurrence").get<std::uint32_t>(), e.at("equivalence").get<Rational>()});
  }
}

void to_json(json& j, const Theme& t) {
  json edges = json::array();
  for (const auto& e : t.internal_edges) edges.push_back(edge_json(e.a, e.b, e.cooccurrence, e.equivalence));
  j = {{"label", t.label},
       {"members", t.members},
       {"internal_edges", edges},
       {"centrality", t.centrality},
       {"density", t.density},
       {"n_documents", t.documents.size()},
       {"documents", t.documents},
       {"quadrant", to_string(t.quadrant)}};
}

void from_json(const json& j, Theme& t) {
  t.label = j.at("label").get<std::string>();
  t.members = j.at("members").get<std::vector<std::string>>();
  t.internal_edges.clear();
  for (const auto& e : j.at("internal_edges")) {
    t.internal_edges.push_back({e.at("i").get<std::string>(), e.at("j").get<std::string>(),
                                e.at("cooccurrence").get<std::uint32_t>(), e.at("equivalence").get<Rational>()});
  }
  t.centrality = j.at("centrality").get<double>();
  t.density = j.at("density").get<double>();
  t.documents = j.at("documents").get<std::vector<std::string>>();
  t.quadrant = enum_from<Quadrant>(j.at("quadrant"), quadrant_from_string, "quadrant");
}

void to_json(json& j, const StrategicDiagram& d) {
  j = {{"period", d.period_label},
       {"median_centrality", d.median_centrality},
       {"median_density", d.median_density},
       {"category", d.category ? json(to_string(*d.category)) : json(nullptr)},
       {"themes", d.themes}};
}

void from_json(const json& j, StrategicDiagram& d) {
  d.period_label = j.at("period").get<std::string>();
  d.median_centrality = j.at("median_centrality").get<double>();
  d.median_density = j.at("median_density").get<double>();
  d.category = j.at("category").is_null()
                   ? std::nullopt
                   : std::optional<Category>(enum_from<Category>(j.at("category"), category_from_string, "category"));
  d.themes = j.at("themes").get<std::vector<Theme>>();
}

void to_json(json& j, const OverlapStats& s) {
  j = {{"prev_count", s.prev_count}, {"next_count", s.next_count}, {"shared", s.shared},
       {"dropped", s.dropped},       {"introduced", s.introduced}, {"stability", s.stability}};
}

void from_json(const json& j, OverlapStats& s) {
  s = overlap_from_counts(j.at("prev_count").get<std::size_t>(), j.at("next_count").get<std::size_t>(),
                          j.at("shared").get<std::size_t>());
}

void to_json(json& j, const EvolutionMap& m) {
  json columns = json::array();
  for (const auto& c : m.columns) {
    json themes = json::array();
    for (const auto& t : c.themes) {
      themes.push_back({{"label", t.label}, {"members", t.members}, {"documents", t.documents}});
    }
    columns.push_back({{"period", c.period_label}, {"themes", themes}});
  }
  json links = json::array();
  for (const auto& l : m.links) {
    links.push_back({{"column", l.column},
                     {"from_period", m.columns.at(l.column).period_label},
                     {"to_period", m.columns.at(l.column + 1).period_label},
                     {"from", l.from},
                     {"to", l.to},
                     {"shared_keywords", l.shared_keywords},
                     {"inclusion", l.inclusion},
                     {"solid", l.solid}});
  }
  j = {{"columns", columns}, {"links", links}};
}

void from_json(const json& j, EvolutionMap& m) {
  m = EvolutionMap{};
  for (const auto& c : j.at("columns")) {
    EvolutionColumn col{c.at("period").get<std::string>(), {}};
    for (const auto& t : c.at("themes")) {
      col.themes.push_back({t.at("label").get<std::string>(), t.at("members").get<std::vector<std::string>>(),
                            t.at("documents").get<std::size_t>()});
    }
    m.columns.push_back(std::move(col));
  }
  for (const auto& l : j.at("links")) {
    m.links.push_back({l.at("column").get<std::size_t>(), l.at("from").get<std::string>(),
                       l.at("to").get<std::string>(), l.at("shared_keywords").get<std::vector<std::string>>(),
                       l.at("inclusion").get<Rational>(), l.at("solid").get<bool>()});
  }
}

std::string diagram_csv(const StrategicDiagram& diagram) {
  std::ostringstream out;
  out << "theme,documents,centrality,density,quadrant\n";
  for (const auto& t : diagram.themes) {
    out << csv_field(t.label) << ',' << t.documents.size() << ',' << text::fixed(t.centrality, 2) << ','
        << text::fixed(t.density, 2) << ',' << to_string(t.quadrant) << '\n';
  }
  return out.str();
}

}  // namespace coword
