#pragma once

#include "onto/ontology.hpp"
#include "onto/tfidf.hpp"
#include "onto/tokenize.hpp"

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace onto {

struct RankWeights {
    double alpha = 0.5; // concept overlap
    double beta = 0.3;  // tf.idf cosine
    double gamma = 0.2; // visit priority

    // scales to alpha + beta + gamma == 1; all-zero or negative is a config error
    RankWeights normalized() const;
};

struct ServiceRecord {
    std::string service_id;
    TokenBag bag;
    std::set<std::string> concepts; // accepted concepts from bootstrap
    long visits = 0;
};

struct RankedEntry {
    std::string service_id;
    double score = 0.0;
    double concept_score = 0.0;  // Jaccard of query concepts vs record concepts
    double text_score = 0.0;     // tf.idf cosine
    double priority_score = 0.0; // ln(1+visits) / ln(1+max visits)
};

// Immutable snapshot at query time; record_visit is the single writer.
struct Registry {
    std::map<std::string, ServiceRecord> records;
    CorpusStats stats; // rebuilt from the records' bags, never persisted
    std::set<std::string> concept_names;
    RankWeights weights;

    void rebuild_stats();
    long max_visits() const;
};

// Splits and stop-word-filters raw query terms; empty result means the whole
// query was noise (callers raise EmptyQuery).
std::vector<std::string> prepare_query(std::span<const std::string> raw_terms,
                                       const StopWordList& stoplist,
                                       const TokenizerOptions& opts);

RankedEntry score_service(std::span<const std::string> query,
                          const ServiceRecord& record, const Registry& registry,
                          const RankWeights& weights);

// (-score, service_id) order applied in place.
void rank_order(std::vector<RankedEntry>& entries);

std::vector<RankedEntry> rank_query(std::span<const std::string> query,
                                    const Registry& registry,
                                    const RankWeights& weights, long top_k);

// Throws UnknownService; persistence is the caller's concern.
void record_visit(Registry& registry, const std::string& service_id);

} // namespace onto
