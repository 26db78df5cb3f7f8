#pragma once

#include "onto/tfidf.hpp"
#include "onto/tokenize.hpp"

#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace onto {

struct ContextOptions {
    long results = 10;            // n: results per query
    long result_descriptors = 10; // j: descriptors per result
    long context_descriptors = 10; // m: descriptors per context
    double theta = 0.3;           // Jaccard edge threshold
};

// Local stand-in for a web search engine: a directory of text documents,
// tokenized with the same rules as the WSDL labels.
struct ContextIndex {
    std::map<std::string, TokenBag> docs; // doc_id -> bag
    CorpusStats stats;
};

struct SearchResult {
    std::string doc_id;
    double score = 0.0;                // sum over query tokens of tf.idf
    std::vector<TermWeight> descriptors; // top-j, descriptor order
};

struct DescriptorCluster {
    std::set<std::string> member_ids;
    std::map<std::string, double> aggregate; // token -> summed descriptor weight
    double mass = 0.0;                       // summed member scores
};

struct WebContext {
    std::string service_id;
    std::vector<std::pair<std::string, double>> descriptors; // (-weight, token) order

    std::set<std::string> token_set() const {
        std::set<std::string> s;
        for (const auto& [token, weight] : descriptors) s.insert(token);
        return s;
    }
};

// Pluggable search surface; the inverted-index implementation below is the
// only one shipped.
class SearchProvider {
public:
    virtual ~SearchProvider() = default;
    virtual std::vector<SearchResult> search(std::span<const std::string> query,
                                             long n, long j) const = 0;
};

// One document per UTF-8 text file. Unreadable files are skipped with a
// warning callback; fewer than two readable files is CorpusTooSmall.
ContextIndex build_context_index(const std::filesystem::path& dir,
                                 const StopWordList& stoplist,
                                 const TokenizerOptions& opts,
                                 std::vector<std::string>* warnings = nullptr);

// Scores every indexed document against the query (unknown tokens count 0,
// duplicates count per occurrence) and returns the top-n positive-score
// documents ordered by (-score, doc_id), each with its top-j descriptors.
std::vector<SearchResult> search(const ContextIndex& index,
                                 std::span<const std::string> query,
                                 long n, long j);

class LocalSearchProvider final : public SearchProvider {
public:
    explicit LocalSearchProvider(const ContextIndex& index) : index_(index) {}
    std::vector<SearchResult> search(std::span<const std::string> query,
                                     long n, long j) const override {
        return onto::search(index_, query, n, j);
    }

private:
    const ContextIndex& index_;
};

// Single-link connected components over the Jaccard >= theta graph on
// descriptor token sets. Deterministic: clusters ordered by smallest member.
std::vector<DescriptorCluster> cluster_results(std::span<const SearchResult> results,
                                               double theta);

// Largest-mass cluster (ties to the one with the smallest member doc_id),
// reduced to its top-m aggregate tokens.
WebContext extract_web_context(const std::string& service_id,
                               std::span<const SearchResult> results,
                               double theta, long m);

} // namespace onto
