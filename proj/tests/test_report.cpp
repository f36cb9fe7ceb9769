#include <algorithm>
#include <random>

#include "coword/error.hpp"
#include "coword/report.hpp"
#include "coword/serialize.hpp"
#include "doctest.h"

using namespace coword;

namespace {

Corpus dated(std::vector<std::optional<int>> years) {
  Corpus c;
  for (std::size_t i = 0; i < years.size(); ++i) {
    Document d;
    d.id = std::to_string(i);
    d.year = years[i];
    c.documents.push_back(d);
  }
  return c;
}

KeywordCorpus keyword_corpus(std::vector<std::pair<int, std::vector<std::string>>> docs) {
  KeywordCorpus kc;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    kc.documents.push_back({std::to_string(i), docs[i].first, docs[i].second});
  }
  return kc;
}

}  // namespace

TEST_CASE("docs per year") {
  CHECK(docs_per_year(dated({2005, 2005, 2007})) == std::map<int, std::size_t>{{2005, 2}, {2006, 0}, {2007, 1}});
  CHECK(docs_per_year({}).empty());
  CHECK(docs_per_year(dated({2019})) == std::map<int, std::size_t>{{2019, 1}});
  CHECK(docs_per_year(dated({std::nullopt, 2010})) == std::map<int, std::size_t>{{2010, 1}});

  std::mt19937 rng(1);
  std::uniform_int_distribution<int> year(1990, 2030), coin(0, 5);
  std::vector<std::optional<int>> years;
  std::size_t with_year = 0;
  for (int i = 0; i < 500; ++i) {
    if (coin(rng) == 0) {
      years.push_back(std::nullopt);
    } else {
      years.push_back(year(rng));
      ++with_year;
    }
  }
  std::size_t sum = 0;
  for (const auto& [y, n] : docs_per_year(dated(years))) sum += n;
  CHECK(sum == with_year);
}

TEST_CASE("top keywords") {
  const auto kc = keyword_corpus({{2005, {"A", "B"}}, {2006, {"A", "B"}}, {2007, {"A", "C"}}});
  SUBCASE("hand-counted shares within the top k") {
    const auto top = top_keywords(kc, 2);
    REQUIRE(top.size() == 2);
    CHECK(top[0].keyword == "A");
    CHECK(top[0].share == doctest::Approx(3.0 / 5.0));
    CHECK(top[1].keyword == "B");
    CHECK(top[1].share == doctest::Approx(2.0 / 5.0));
  }
  SUBCASE("corpus denominator") {
    const auto top = top_keywords(kc, 2, ShareDenominator::Corpus);
    CHECK(top[0].share == doctest::Approx(3.0 / 6.0));
  }
  SUBCASE("k larger than the vocabulary") {
    const auto top = top_keywords(kc, 50);
    CHECK(top.size() == 3);
    double total = 0;
    for (const auto& s : top) total += s.share;
    CHECK(total == doctest::Approx(1.0));
  }
  SUBCASE("growth curves") {
    const auto top = top_keywords(kc, 3);
    CHECK(top[0].per_year == std::map<int, std::size_t>{{2005, 1}, {2006, 2}, {2007, 3}});
    CHECK(top[2].per_year == std::map<int, std::size_t>{{2005, 0}, {2006, 0}, {2007, 1}});
  }
  SUBCASE("ties are lexicographic") {
    const auto top = top_keywords(keyword_corpus({{2005, {"Z", "M", "B"}}}), 3);
    CHECK(top[0].keyword == "B");
    CHECK(top[1].keyword == "M");
    CHECK(top[2].keyword == "Z");
  }
  SUBCASE("invalid k") { CHECK_THROWS_AS(top_keywords(kc, 0), InvalidArgument); }
}

TEST_CASE("top keywords is stable under reordering and curves end at the total") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> year(2005, 2012), kw(0, 30), n(0, 5), coin(0, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::pair<int, std::vector<std::string>>> docs;
    for (int d = 0; d < 80; ++d) {
      std::vector<std::string> k;
      for (int i = n(rng); i > 0; --i) {
        const auto w = "K" + std::to_string(kw(rng));
        if (std::find(k.begin(), k.end(), w) == k.end()) k.push_back(w);
      }
      docs.emplace_back(year(rng), k);
    }
    auto kc = keyword_corpus(docs);
    kc.documents.push_back({"undated", std::nullopt, {"K1"}});
    const auto a = top_keywords(kc, 10);
    std::shuffle(kc.documents.begin(), kc.documents.end(), rng);
    CHECK(top_keywords(kc, 10) == a);
    for (const auto& s : a) {
      REQUIRE_FALSE(s.per_year.empty());
      CHECK(s.per_year.rbegin()->second == s.total_frequency);
    }
  }
}

TEST_CASE("diagram table has the expected columns") {
  StrategicDiagram d;
  d.period_label = "2005-2010";
  Theme t;
  t.label = "SPAIN";
  t.members = {"SPAIN"};
  t.documents = {"a", "b"};
  t.centrality = 12.3456;
  t.density = 7.0;
  t.quadrant = Quadrant::Q2_Basic;
  d.themes.push_back(t);
  const auto csv = diagram_csv(d);
  CHECK(csv == "theme,documents,centrality,density,quadrant\nSPAIN,2,12.35,7.00,Q2_Basic\n");
}

TEST_CASE("summary JSON carries every document type") {
  Corpus c = dated({2005});
  c.documents[0].doc_type = DocType::Review;
  const json j = corpus_summary(c, KeywordField::AuthorKeywords);
  CHECK(j.dump().find("Review") != std::string::npos);
  CHECK(j.dump().find("BookReview") != std::string::npos);
}
