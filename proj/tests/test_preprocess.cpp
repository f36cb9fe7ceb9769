#include <random>

#include "coword/error.hpp"
#include "coword/keywords.hpp"
#include "coword/text.hpp"
#include "coword/periods.hpp"
#include "coword/serialize.hpp"
#include "coword/thesaurus.hpp"
#include "doctest.h"

using namespace coword;

namespace {

Corpus corpus_of(std::vector<std::vector<std::string>> docs, std::vector<int> years = {}) {
  Corpus c;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    Document d;
    d.id = "d" + std::to_string(i + 1);
    d.year = i < years.size() ? years[i] : 2010;
    d.author_keywords = std::move(docs[i]);
    c.documents.push_back(std::move(d));
  }
  return c;
}

CorpusSlice slice_of(std::vector<std::vector<std::string>> docs) {
  CorpusSlice s{{"P", 2000, 2010}, KeywordField::AuthorKeywords, {}};
  for (std::size_t i = 0; i < docs.size(); ++i) {
    s.documents.push_back({"D" + std::to_string(i + 1), 2005, std::move(docs[i])});
  }
  return s;
}

}  // namespace

TEST_CASE("canonical form") {
  CHECK(canonical_form("  Public Libraries ") == "PUBLIC-LIBRARIES");
  CHECK(canonical_form("spanish\t civil   war") == "SPANISH-CIVIL-WAR");
  CHECK(canonical_form("Open-Access") == "OPEN-ACCESS");
  CHECK(canonical_form("información") == "INFORMACIÓN");
  CHECK_THROWS_AS(canonical_form("   "), EmptyKeyword);
  CHECK_THROWS_AS(canonical_form(""), EmptyKeyword);
}

TEST_CASE("normalize_keyword folds plurals only when the singular exists") {
  const Vocabulary with_singular{"ARCHIVE", "ARCHIVES"};
  const Vocabulary without{"ARCHIVES", "PARIS"};
  CHECK(normalize_keyword("  Public Libraries ", {}) == "PUBLIC-LIBRARIES");
  CHECK(normalize_keyword("ARCHIVES", with_singular) == "ARCHIVE");
  CHECK(normalize_keyword("archives", without) == "ARCHIVES");
  CHECK(normalize_keyword("Paris", without) == "PARIS");
  CHECK(normalize_keyword("Libraries", {"LIBRARY"}) == "LIBRARY");
  // Stem shorter than three characters is never folded.
  CHECK(normalize_keyword("ABS", {"AB"}) == "ABS");
  CHECK_THROWS_AS(normalize_keyword(" ", {}), EmptyKeyword);
}

TEST_CASE("normalize_keyword is idempotent") {
  const Vocabulary vocab{"ARCHIVE", "LIBRARY", "BOOK", "BOOKS", "STUDIES", "STUDY", "CLASS", "CLAS"};
  const std::vector<std::string> raws{"Archives", " books ", "Studies", "Classes", "CLASS",
                                      "library", "Paris", "open  access", "a b c", "ÉTUDES"};
  for (const auto& raw : raws) {
    const auto once = normalize_keyword(raw, vocab);
    CHECK(normalize_keyword(once, vocab) == once);
  }
  std::mt19937 rng(7);
  const std::string alphabet = "ABSIE -s";
  std::uniform_int_distribution<std::size_t> len(1, 9), ch(0, alphabet.size() - 1);
  Vocabulary random_vocab;
  std::vector<std::string> inputs;
  for (int i = 0; i < 400; ++i) {
    std::string s;
    for (std::size_t n = len(rng); n > 0; --n) s += alphabet[ch(rng)];
    if (text::trim(s).empty()) continue;
    inputs.push_back(s);
    random_vocab.insert(canonical_form(s));
  }
  for (const auto& s : inputs) {
    const auto once = normalize_keyword(s, random_vocab);
    CHECK(normalize_keyword(once, random_vocab) == once);
  }
}

TEST_CASE("suggest_merges") {
  SUBCASE("plural") {
    const auto m = suggest_merges(corpus_of({{"LIBRARY"}, {"LIBRARIES"}}));
    REQUIRE(m.size() == 1);
    CHECK(m[0].variant == "LIBRARIES");
    CHECK(m[0].target == "LIBRARY");
    CHECK(m[0].reason == MergeReason::Plural);
    CHECK(m[0].combined_frequency == 2);
  }
  SUBCASE("hyphen versus space") {
    const auto m = suggest_merges(corpus_of({{"OPEN ACCESS"}, {"OPEN-ACCESS"}}));
    REQUIRE(m.size() == 1);
    CHECK(m[0].reason == MergeReason::HyphenSpace);
  }
  SUBCASE("case only") {
    const auto m = suggest_merges(corpus_of({{"Archives"}, {"ARCHIVES"}, {"archives"}}));
    REQUIRE(m.size() == 2);
    CHECK(m[0].reason == MergeReason::CaseOnly);
    CHECK(m[1].reason == MergeReason::CaseOnly);
  }
  SUBCASE("no near duplicates") {
    CHECK(suggest_merges(corpus_of({{"SPAIN", "ARCHIVE"}, {"LIBRARY"}})).empty());
  }
  SUBCASE("ordered by combined frequency, then lexicographically") {
    const auto m = suggest_merges(corpus_of(
        {{"BOOK"}, {"BOOKS"}, {"LIBRARY"}, {"LIBRARY"}, {"LIBRARIES"}, {"ARCHIVE"}, {"ARCHIVES"}}));
    REQUIRE(m.size() == 3);
    CHECK(m[0].target == "LIBRARY");
    CHECK(m[1].target == "ARCHIVE");
    CHECK(m[2].target == "BOOK");
  }
  SUBCASE("nothing is merged by suggesting") {
    const auto corpus = corpus_of({{"LIBRARY"}, {"LIBRARIES"}});
    const auto before = corpus;
    suggest_merges(corpus);
    CHECK(corpus == before);
  }
}

TEST_CASE("thesaurus invariants") {
  CHECK_THROWS_AS(Thesaurus(std::vector<ThesaurusGroup>{{"A", {"X"}}, {"B", {"X"}}}), ThesaurusConflict);
  CHECK_THROWS_AS(Thesaurus(std::vector<ThesaurusGroup>{{"A", {"B"}}, {"B", {"C"}}}), ThesaurusConflict);
  CHECK_THROWS_AS(Thesaurus(std::vector<ThesaurusGroup>{{"A", {"X"}}, {"A", {"Y"}}}), ThesaurusConflict);
  const Thesaurus t(std::vector<ThesaurusGroup>{{"INTERNET", {"WEB"}}});
  CHECK(t.resolve("WEB") == "INTERNET");
  CHECK(t.resolve("INTERNET") == "INTERNET");
  CHECK(t.resolve("OTHER") == "OTHER");
}

TEST_CASE("thesaurus text format") {
  const auto t = parse_thesaurus(
      "# reviewed merges\n"
      "internet = Web | World Wide Web\n"
      "\n"
      "LIBRARY = LIBRARIES\n");
  REQUIRE(t.groups().size() == 2);
  CHECK(t.resolve("WORLD-WIDE-WEB") == "INTERNET");
  CHECK(t.resolve("LIBRARIES") == "LIBRARY");
  const auto text = format_thesaurus(t);
  CHECK(text == "INTERNET = WEB | WORLD-WIDE-WEB\nLIBRARY = LIBRARIES\n");
  CHECK(format_thesaurus(parse_thesaurus(text)) == text);
  CHECK(parse_thesaurus(text) == t);

  SUBCASE("conflicts report the line") {
    try {
      parse_thesaurus("A = X\n\nB = X\n");
      FAIL("expected ThesaurusConflict");
    } catch (const ThesaurusConflict& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("line without separator") {
    CHECK_THROWS_AS(parse_thesaurus("A X\n"), ThesaurusConflict);
  }
  SUBCASE("suggestions are the same format, commented out") {
    const auto m = suggest_merges(corpus_of({{"LIBRARY"}, {"LIBRARIES"}}));
    const auto suggestions = format_merge_suggestions(m);
    CHECK(suggestions.find("# LIBRARY = LIBRARIES") != std::string::npos);
    CHECK(parse_thesaurus(suggestions).empty());
  }
}

TEST_CASE("apply_thesaurus") {
  SUBCASE("merge then dedup") {
    const auto kc = apply_thesaurus(corpus_of({{"WEB", "INTERNET"}}), Thesaurus(std::vector<ThesaurusGroup>{{"INTERNET", {"WEB"}}}));
    CHECK(kc.documents.at(0).keywords == std::vector<std::string>{"INTERNET"});
  }
  SUBCASE("empty thesaurus only normalizes") {
    const auto kc = apply_thesaurus(corpus_of({{"Archives", " public  libraries"}, {"ARCHIVE"}}), {});
    CHECK(kc.documents.at(0).keywords == std::vector<std::string>{"ARCHIVE", "PUBLIC-LIBRARIES"});
    CHECK(kc.documents.at(1).keywords == std::vector<std::string>{"ARCHIVE"});
  }
  SUBCASE("variant in two groups") {
    CHECK_THROWS_AS(apply_thesaurus(corpus_of({{"X"}}), Thesaurus(std::vector<ThesaurusGroup>{{"A", {"X"}}, {"B", {"X"}}})),
                    ThesaurusConflict);
  }
  SUBCASE("thesaurus singular enables plural folding") {
    const auto kc = apply_thesaurus(corpus_of({{"MANUSCRIPTS"}}), Thesaurus(std::vector<ThesaurusGroup>{{"MANUSCRIPT", {"CODEX"}}}));
    CHECK(kc.documents.at(0).keywords == std::vector<std::string>{"MANUSCRIPT"});
  }
  SUBCASE("replacement is a fixed point") {
    const Thesaurus t({{"INTERNET", {"WEB", "NET"}}, {"LIBRARY", {"BIBLIOTECA"}}});
    const auto once = apply_thesaurus(corpus_of({{"web", "Biblioteca", "net", "SPAIN"}}), t);
    Corpus again;
    for (const auto& d : once.documents) again.documents.push_back({.id = d.id, .year = d.year, .author_keywords = d.keywords});
    CHECK(apply_thesaurus(again, t).documents == once.documents);
  }
}

TEST_CASE("period scheme validation") {
  CHECK(PeriodScheme::default_scheme().size() == 3);
  CHECK_THROWS_AS(PeriodScheme(std::vector<Period>{{"a", 2005, 2010}, {"b", 2010, 2016}}), InvalidScheme);
  CHECK_THROWS_AS(PeriodScheme(std::vector<Period>{{"a", 2011, 2005}}), InvalidScheme);
  CHECK_THROWS_AS(PeriodScheme(std::vector<Period>{{"b", 2011, 2016}, {"a", 2005, 2010}}), InvalidScheme);
  CHECK_THROWS_AS(PeriodScheme(std::vector<Period>{}), InvalidScheme);
  CHECK_THROWS_AS(PeriodScheme(std::vector<Period>{{"a", 2005, 2006}, {"a", 2007, 2008}}), InvalidScheme);
  try {
    PeriodScheme(std::vector<Period>{{"2005-2010", 2005, 2010}, {"2009-2016", 2009, 2016}});
  } catch (const InvalidScheme& e) {
    const std::string msg = e.what();
    CHECK(msg.find("2005-2010") != std::string::npos);
    CHECK(msg.find("2009-2016") != std::string::npos);
  }
}

TEST_CASE("slice_periods") {
  const auto kc = apply_thesaurus(corpus_of({{"A"}, {"B"}, {"C"}, {"D"}}, {2005, 2010, 2011, 2004}), {});
  auto with_missing = kc;
  with_missing.documents.push_back({"nope", std::nullopt, {"E"}});
  const auto r = slice_periods(with_missing, PeriodScheme::default_scheme());
  REQUIRE(r.slices.size() == 3);
  CHECK(r.slices[0].documents.size() == 2);
  CHECK(r.slices[0].documents[0].id == "d1");
  CHECK(r.slices[0].documents[1].id == "d2");
  CHECK(r.slices[1].documents.size() == 1);
  CHECK(r.slices[2].documents.empty());
  CHECK(r.dropped_out_of_range == 1);
  CHECK(r.dropped_without_year == 1);
  for (const auto& s : r.slices) {
    for (const auto& d : s.documents) CHECK(s.period.contains(*d.year));
  }
}

TEST_CASE("filter_keywords") {
  const auto toy = slice_of({{"A", "B"}, {"A", "B"}, {"A", "C"}});
  SUBCASE("hand-counted toy") {
    const auto f = filter_keywords(toy, 2);
    CHECK(f.documents[2].keywords == std::vector<std::string>{"A"});
    CHECK(f.documents[0].keywords == std::vector<std::string>{"A", "B"});
  }
  SUBCASE("identity at 1") { CHECK(filter_keywords(toy, 1) == toy); }
  SUBCASE("empty documents are kept") {
    const auto f = filter_keywords(slice_of({{"A"}, {"A"}, {"C"}}), 2);
    REQUIRE(f.documents.size() == 3);
    CHECK(f.documents[2].keywords.empty());
  }
  SUBCASE("invalid threshold") { CHECK_THROWS_AS(filter_keywords(toy, 0), InvalidArgument); }
  SUBCASE("monotone, and survivors meet the threshold on recount") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> kw(0, 14), n(0, 6);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::vector<std::string>> docs(40);
      for (auto& d : docs) {
        for (int k = n(rng); k > 0; --k) {
          const auto w = "K" + std::to_string(kw(rng));
          if (std::find(d.begin(), d.end(), w) == d.end()) d.push_back(w);
        }
      }
      const auto s = slice_of(docs);
      std::set<std::string> prev = s.vocabulary();
      for (int m = 1; m <= 6; ++m) {
        const auto f = filter_keywords(s, m);
        const auto v = f.vocabulary();
        CHECK(std::includes(prev.begin(), prev.end(), v.begin(), v.end()));
        for (const auto& k : v) {
          int df = 0;
          for (const auto& d : f.documents) df += std::count(d.keywords.begin(), d.keywords.end(), k);
          CHECK(df >= m);
        }
        prev = v;
      }
    }
  }
}

TEST_CASE("slice JSON round trip") {
  const auto s = slice_of({{"A", "B"}, {}});
  const json j = s;
  CHECK(j.get<CorpusSlice>() == s);
}
