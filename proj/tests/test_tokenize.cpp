#include "onto/tokenize.hpp"

#include "label_cases.hpp"
#include "onto/wsdl.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>

using namespace onto;

TEST_CASE("split_label golden cases") {
    for (const auto& c : label_cases()) {
        CAPTURE(c.raw);
        CHECK(split_label(c.raw) == c.expected);
    }
}

TEST_CASE("split_label conserves alphabetic characters") {
    // rejoined output == lowercased alphabetic characters of the input
    const std::string alphabet =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-. /#";
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<size_t> len_dist(0, 24);
    std::uniform_int_distribution<size_t> char_dist(0, alphabet.size() - 1);
    for (int i = 0; i < 1000; ++i) {
        std::string label;
        size_t len = len_dist(rng);
        for (size_t k = 0; k < len; ++k) label += alphabet[char_dist(rng)];

        std::string expected;
        for (char c : label) {
            if (c >= 'a' && c <= 'z') expected += c;
            else if (c >= 'A' && c <= 'Z') expected += static_cast<char>(c - 'A' + 'a');
        }
        std::string joined;
        for (const auto& token : split_label(label)) joined += token;
        CAPTURE(label);
        CHECK(joined == expected);
    }
}

TEST_CASE("filter_tokens removes stop words and short tokens") {
    StopWordList stoplist(std::set<std::string>{"get", "by"});
    auto out = filter_tokens({"get", "weather", "by", "zip", "code"}, stoplist, 2);
    CHECK(out == std::vector<std::string>{"weather", "zip", "code"});

    CHECK(filter_tokens({"the", "a", "of"}, StopWordList::builtin(), 2).empty());
    CHECK(filter_tokens({"forecast", "forecast"}, StopWordList::empty(), 1) ==
          std::vector<std::string>{"forecast", "forecast"});
}

TEST_CASE("filter_tokens is idempotent") {
    const auto& stoplist = StopWordList::builtin();
    std::vector<std::string> tokens = {"get", "weather", "a", "zip", "x", "code", "code"};
    auto once = filter_tokens(tokens, stoplist, 2);
    auto twice = filter_tokens(once, stoplist, 2);
    CHECK(once == twice);
}

TEST_CASE("builtin stop list carries the boilerplate terms") {
    const auto& stoplist = StopWordList::builtin();
    for (const char* w : {"the", "a", "of", "by", "get", "set", "request",
                          "response", "soap", "http", "input", "output", "type",
                          "array"}) {
        CAPTURE(w);
        CHECK(stoplist.contains(w));
    }
    CHECK_FALSE(stoplist.contains("service"));
    CHECK_FALSE(stoplist.contains("weather"));
}

TEST_CASE("tokenize_service aggregates counts") {
    WsdlDocument doc;
    doc.service_id = "svc";
    doc.labels = {{"WeatherService", SourceKind::Service},
                  {"GetCityForecast", SourceKind::Operation}};
    TokenBag bag = tokenize_service(doc, StopWordList::builtin(), {});
    CHECK(bag.total == 4); // get filtered
    CHECK(bag.counts.at("weather") == 1);
    CHECK(bag.counts.at("service") == 1);
    CHECK(bag.counts.at("city") == 1);
    CHECK(bag.counts.at("forecast") == 1);

    WsdlDocument empty_doc;
    empty_doc.service_id = "empty";
    CHECK(tokenize_service(empty_doc, StopWordList::builtin(), {}).total == 0);

    WsdlDocument dup;
    dup.service_id = "dup";
    dup.labels = {{"Stock", SourceKind::Message}, {"Stock", SourceKind::Message}};
    TokenBag dup_bag = tokenize_service(dup, StopWordList::builtin(), {});
    CHECK(dup_bag.counts.at("stock") == 2);
    CHECK(dup_bag.total == 2);
}

TEST_CASE("tokenize_service is label-order invariant at the bag level") {
    WsdlDocument a;
    a.service_id = "svc";
    a.labels = {{"GetQuote", SourceKind::Operation},
                {"StockPrice", SourceKind::Message},
                {"TickerSymbol", SourceKind::Part}};
    WsdlDocument b = a;
    std::reverse(b.labels.begin(), b.labels.end());
    auto bag_a = tokenize_service(a, StopWordList::builtin(), {});
    auto bag_b = tokenize_service(b, StopWordList::builtin(), {});
    CHECK(bag_a.counts == bag_b.counts);
    CHECK(bag_a.total == bag_b.total);
}

TEST_CASE("plural stemming is off by default and conservative when on") {
    CHECK(stem_plural("forecasts") == "forecast");
    CHECK(stem_plural("quotes") == "quote");
    CHECK(stem_plural("class") == "class");  // double s kept
    CHECK(stem_plural("gas") == "gas");      // too short
    CHECK(stem_plural("weather") == "weather");

    TokenizerOptions stemmed{2, true};
    CHECK(tokenize_text("StockQuotes", StopWordList::builtin(), stemmed) ==
          std::vector<std::string>{"stock", "quote"});
    CHECK(tokenize_text("StockQuotes", StopWordList::builtin(), {}) ==
          std::vector<std::string>{"stock", "quotes"});
}

TEST_CASE("stop-word file extends or replaces the builtin list") {
    auto dir = std::filesystem::temp_directory_path() / "onto_stopwords_test";
    std::filesystem::create_directories(dir);
    auto file = dir / "extra.txt";
    {
        std::ofstream out(file);
        out << "# comment line\n"
            << "weather\n"
            << "  Forecast  # inline comment\n"
            << "\n";
    }
    StopWordList extended = StopWordList::load(file, false);
    CHECK(extended.contains("weather"));
    CHECK(extended.contains("forecast")); // lowercased
    CHECK(extended.contains("the"));      // builtin retained

    StopWordList replaced = StopWordList::load(file, true);
    CHECK(replaced.contains("weather"));
    CHECK_FALSE(replaced.contains("the"));
    std::filesystem::remove_all(dir);
}
