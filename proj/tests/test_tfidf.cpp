#include "onto/tfidf.hpp"

#include "onto/error.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace onto;

namespace {

TokenBag make_bag(const std::string& id,
                  std::initializer_list<std::pair<const char*, long>> counts) {
    TokenBag bag;
    bag.service_id = id;
    for (const auto& [token, count] : counts) {
        bag.counts[token] = count;
        bag.total += count;
    }
    return bag;
}

// Independent recomputation straight from the bags: recount, recount df,
// evaluate tf * ln(N/df). Kept free of CorpusStats on purpose.
double oracle_weight(const std::string& term, const TokenBag& bag,
                     const std::vector<TokenBag>& all) {
    long count = 0;
    for (const auto& [t, c] : bag.counts) {
        if (t == term) count = c;
    }
    long df = 0;
    for (const auto& other : all) {
        for (const auto& [t, c] : other.counts) {
            if (t == term && c > 0) {
                ++df;
                break;
            }
        }
    }
    double tf = static_cast<double>(count) / static_cast<double>(bag.total);
    double idf = std::log(static_cast<double>(all.size()) / static_cast<double>(df));
    return tf * idf;
}

bool close_rel(double a, double b, double rel = 1e-9) {
    if (a == b) return true;
    return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}

} // namespace

TEST_CASE("build_corpus_stats counts document frequencies") {
    std::vector<TokenBag> bags = {
        make_bag("a", {{"weather", 2}}),
        make_bag("b", {{"stock", 1}}),
        make_bag("c", {{"weather", 1}, {"stock", 1}}),
    };
    CorpusStats stats = build_corpus_stats(bags);
    CHECK(stats.n_docs == 3);
    CHECK(stats.doc_freq.at("weather") == 2);
    CHECK(stats.doc_freq.at("stock") == 2);

    std::vector<TokenBag> one = {make_bag("a", {{"x", 1}})};
    CHECK_THROWS_AS((void)build_corpus_stats(one), Error);

    std::vector<TokenBag> dup = {make_bag("a", {{"x", 1}}), make_bag("a", {{"x", 1}})};
    try {
        (void)build_corpus_stats(dup);
        FAIL("expected DuplicateServiceId");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DuplicateServiceId);
    }

    std::vector<TokenBag> twins = {make_bag("a", {{"x", 1}, {"y", 2}}),
                                   make_bag("b", {{"x", 1}, {"y", 2}})};
    CorpusStats twin_stats = build_corpus_stats(twins);
    CHECK(twin_stats.doc_freq.at("x") == 2);
    CHECK(twin_stats.doc_freq.at("y") == 2);
}

TEST_CASE("tfidf_weight matches the worked scalar example") {
    // N=4, df(weather)=1, counts 2 of 10 -> 0.2 * ln 4
    std::vector<TokenBag> bags = {
        make_bag("a", {{"weather", 2}, {"noise", 8}}),
        make_bag("b", {{"noise", 1}}),
        make_bag("c", {{"noise", 1}}),
        make_bag("d", {{"noise", 1}}),
    };
    CorpusStats stats = build_corpus_stats(bags);
    TermWeight tw = tfidf_weight("weather", bags[0], stats);
    CHECK(tw.tf == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(tw.idf == doctest::Approx(1.3862943611198906).epsilon(1e-12));
    CHECK(tw.weight == doctest::Approx(0.27725887222397810).epsilon(1e-12));

    // a term in every document scores zero
    TermWeight everywhere = tfidf_weight("noise", bags[0], stats);
    CHECK(everywhere.idf == 0.0);
    CHECK(everywhere.weight == 0.0);

    // absent from this bag: tf = 0
    TermWeight absent = tfidf_weight("weather", bags[1], stats);
    CHECK(absent.tf == 0.0);
    CHECK(absent.weight == 0.0);

    CHECK_THROWS_AS((void)tfidf_weight("nonexistent", bags[0], stats), Error);
}

TEST_CASE("tfidf_weight equals the brute-force oracle on random corpora") {
    std::mt19937 rng(991);
    const std::vector<std::string> vocab = {"alpha", "beta",  "gamma", "delta",
                                            "eps",   "zeta",  "eta",   "theta",
                                            "iota",  "kappa"};
    std::uniform_int_distribution<int> n_docs_dist(2, 8);
    std::uniform_int_distribution<int> n_terms_dist(1, 6);
    std::uniform_int_distribution<int> count_dist(1, 9);
    std::uniform_int_distribution<size_t> term_dist(0, vocab.size() - 1);

    for (int round = 0; round < 50; ++round) {
        int n = n_docs_dist(rng);
        std::vector<TokenBag> bags;
        for (int d = 0; d < n; ++d) {
            TokenBag bag;
            bag.service_id = "doc" + std::to_string(d);
            int terms = n_terms_dist(rng);
            for (int t = 0; t < terms; ++t) {
                long c = count_dist(rng);
                bag.counts[vocab[term_dist(rng)]] += c;
            }
            for (const auto& [term, c] : bag.counts) bag.total += c;
            bags.push_back(std::move(bag));
        }
        CorpusStats stats = build_corpus_stats(bags);
        for (const auto& bag : bags) {
            for (const auto& [term, df] : stats.doc_freq) {
                double got = tfidf_weight(term, bag, stats).weight;
                double want = oracle_weight(term, bag, bags);
                CAPTURE(term);
                CHECK(close_rel(got, want));
            }
        }
    }
}

TEST_CASE("weight decreases as df grows, tf fixed") {
    // same tf in doc "a"; df of x rises from 1 to 3 across corpora
    auto weight_with_df = [](long df) {
        std::vector<TokenBag> bags;
        bags.push_back(make_bag("a", {{"x", 1}, {"pad", 1}}));
        for (int i = 0; i < 3; ++i) {
            TokenBag b;
            b.service_id = "b" + std::to_string(i);
            if (i < df - 1) b.counts["x"] = 1;
            b.counts["other"] = 1;
            b.total = 0;
            for (const auto& [t, c] : b.counts) b.total += c;
            bags.push_back(std::move(b));
        }
        CorpusStats stats = build_corpus_stats(bags);
        return tfidf_weight("x", bags[0], stats).weight;
    };
    double w1 = weight_with_df(1);
    double w2 = weight_with_df(2);
    double w3 = weight_with_df(3);
    CHECK(w1 > w2);
    CHECK(w2 > w3);
}

TEST_CASE("top_descriptors ordering, ties and cutoffs") {
    std::vector<TokenBag> bags = {
        make_bag("a", {{"weather", 2}, {"zip", 1}, {"common", 7}}),
        make_bag("b", {{"common", 3}}),
    };
    CorpusStats stats = build_corpus_stats(bags);

    DescriptorSet top = top_descriptors(bags[0], stats, 5, 0.0);
    REQUIRE(top.descriptors.size() == 2); // "common" has idf 0
    CHECK(top.descriptors[0].term == "weather");
    CHECK(top.descriptors[1].term == "zip");
    CHECK(top.descriptors[0].weight > top.descriptors[1].weight);

    // lexicographic tie-break at k=1
    std::vector<TokenBag> tie_bags = {
        make_bag("a", {{"beta", 1}, {"alpha", 1}}),
        make_bag("b", {{"other", 1}}),
    };
    CorpusStats tie_stats = build_corpus_stats(tie_bags);
    DescriptorSet tie = top_descriptors(tie_bags[0], tie_stats, 1, 0.0);
    REQUIRE(tie.descriptors.size() == 1);
    CHECK(tie.descriptors[0].term == "alpha");

    // all weights zero -> empty (strict inequality)
    std::vector<TokenBag> flat = {make_bag("a", {{"x", 1}}), make_bag("b", {{"x", 2}})};
    CorpusStats flat_stats = build_corpus_stats(flat);
    CHECK(top_descriptors(flat[0], flat_stats, 5, 0.0).descriptors.empty());

    TokenBag empty_bag;
    empty_bag.service_id = "empty";
    CHECK_THROWS_AS((void)top_descriptors(empty_bag, stats, 3, 0.0), Error);
}

TEST_CASE("scaling all counts in a bag leaves descriptors unchanged") {
    std::vector<TokenBag> bags = {
        make_bag("a", {{"weather", 2}, {"zip", 1}}),
        make_bag("b", {{"stock", 3}}),
    };
    CorpusStats stats = build_corpus_stats(bags);
    DescriptorSet base = top_descriptors(bags[0], stats, 5, 0.0);

    std::vector<TokenBag> scaled_bags = {
        make_bag("a", {{"weather", 6}, {"zip", 3}}),
        make_bag("b", {{"stock", 3}}),
    };
    CorpusStats scaled_stats = build_corpus_stats(scaled_bags);
    DescriptorSet scaled = top_descriptors(scaled_bags[0], scaled_stats, 5, 0.0);

    REQUIRE(base.descriptors.size() == scaled.descriptors.size());
    for (size_t i = 0; i < base.descriptors.size(); ++i) {
        CHECK(base.descriptors[i].term == scaled.descriptors[i].term);
        CHECK(base.descriptors[i].weight ==
              doctest::Approx(scaled.descriptors[i].weight).epsilon(1e-12));
    }
}
