#pragma once

#include "json.hpp"

#include "coword/config.hpp"
#include "coword/evolution.hpp"
#include "coword/summary.hpp"

// JSON mappings for every workspace artifact. Field names are lower_snake_case.
namespace coword {

using nlohmann::json;

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);

void to_json(json& j, const Document& d);
void from_json(const json& j, Document& d);
void to_json(json& j, const Corpus& c);
void from_json(const json& j, Corpus& c);

void to_json(json& j, const SummaryStats& s);

void to_json(json& j, const Period& p);
void from_json(const json& j, Period& p);
void to_json(json& j, const CorpusSlice& s);
void from_json(const json& j, CorpusSlice& s);

void to_json(json& j, const CoWordNetwork& n);
void from_json(const json& j, CoWordNetwork& n);

void to_json(json& j, const Theme& t);
void from_json(const json& j, Theme& t);
void to_json(json& j, const StrategicDiagram& d);
void from_json(const json& j, StrategicDiagram& d);

void to_json(json& j, const OverlapStats& s);
void from_json(const json& j, OverlapStats& s);
void to_json(json& j, const EvolutionMap& m);
void from_json(const json& j, EvolutionMap& m);

/// Tables-style CSV: theme, documents, centrality, density, quadrant.
std::string diagram_csv(const StrategicDiagram& diagram);

}  // namespace coword
