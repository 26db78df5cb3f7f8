#include "onto/ranking.hpp"

#include "onto/error.hpp"

#include <algorithm>
#include <cmath>

namespace onto {

RankWeights RankWeights::normalized() const {
    if (alpha < 0 || beta < 0 || gamma < 0)
        raise(Errc::Config, "ranking weights must be non-negative");
    double sum = alpha + beta + gamma;
    if (sum <= 0) raise(Errc::Config, "ranking weights must not all be zero");
    return {alpha / sum, beta / sum, gamma / sum};
}

void Registry::rebuild_stats() {
    std::vector<TokenBag> bags;
    bags.reserve(records.size());
    for (const auto& [id, record] : records) bags.push_back(record.bag);
    stats = corpus_stats_unchecked(bags);
}

long Registry::max_visits() const {
    long max = 0;
    for (const auto& [id, record] : records) max = std::max(max, record.visits);
    return max;
}

std::vector<std::string> prepare_query(std::span<const std::string> raw_terms,
                                       const StopWordList& stoplist,
                                       const TokenizerOptions& opts) {
    std::vector<std::string> tokens;
    for (const auto& term : raw_terms) {
        for (auto& token : tokenize_text(term, stoplist, opts))
            tokens.push_back(std::move(token));
    }
    return tokens;
}

namespace {

double jaccard_score(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) return 0.0;
    size_t inter = 0;
    for (const auto& t : a) inter += b.count(t);
    return static_cast<double>(inter) /
           static_cast<double>(a.size() + b.size() - inter);
}

// cosine between the query vector (tf = count/|query|, idf from the registry)
// and the record's tf.idf vector; 0 whenever either side is all zero
double cosine_score(const std::map<std::string, long>& query_counts, long query_len,
                    const ServiceRecord& record, const CorpusStats& stats) {
    if (record.bag.total <= 0) return 0.0;

    auto idf = [&](const std::string& term) {
        auto it = stats.doc_freq.find(term);
        if (it == stats.doc_freq.end()) return 0.0;
        return std::log(static_cast<double>(stats.n_docs) /
                        static_cast<double>(it->second));
    };

    double dot = 0.0;
    double query_norm2 = 0.0;
    for (const auto& [term, count] : query_counts) {
        double q = (static_cast<double>(count) / static_cast<double>(query_len)) * idf(term);
        query_norm2 += q * q;
        auto it = record.bag.counts.find(term);
        if (it == record.bag.counts.end()) continue;
        double d = (static_cast<double>(it->second) /
                    static_cast<double>(record.bag.total)) *
                   idf(term);
        dot += q * d;
    }
    double record_norm2 = 0.0;
    for (const auto& [term, count] : record.bag.counts) {
        double d = (static_cast<double>(count) /
                    static_cast<double>(record.bag.total)) *
                   idf(term);
        record_norm2 += d * d;
    }
    if (query_norm2 <= 0.0 || record_norm2 <= 0.0) return 0.0;
    return dot / (std::sqrt(query_norm2) * std::sqrt(record_norm2));
}

} // namespace

RankedEntry score_service(std::span<const std::string> query,
                          const ServiceRecord& record, const Registry& registry,
                          const RankWeights& weights) {
    if (query.empty())
        raise(Errc::EmptyQuery, "query is empty after stop-word filtering");
    RankWeights w = weights.normalized();

    std::set<std::string> query_concepts;
    std::map<std::string, long> query_counts;
    for (const auto& token : query) {
        ++query_counts[token];
        if (registry.concept_names.count(token)) query_concepts.insert(token);
    }

    RankedEntry entry;
    entry.service_id = record.service_id;
    entry.concept_score = jaccard_score(query_concepts, record.concepts);
    entry.text_score = cosine_score(query_counts, static_cast<long>(query.size()),
                                    record, registry.stats);
    long max_visits = registry.max_visits();
    entry.priority_score =
        max_visits == 0 ? 0.0
                        : std::log1p(static_cast<double>(record.visits)) /
                              std::log1p(static_cast<double>(max_visits));
    entry.score = w.alpha * entry.concept_score + w.beta * entry.text_score +
                  w.gamma * entry.priority_score;
    return entry;
}

void rank_order(std::vector<RankedEntry>& entries) {
    std::sort(entries.begin(), entries.end(),
              [](const RankedEntry& a, const RankedEntry& b) {
                  if (a.score != b.score) return a.score > b.score;
                  return a.service_id < b.service_id;
              });
}

std::vector<RankedEntry> rank_query(std::span<const std::string> query,
                                    const Registry& registry,
                                    const RankWeights& weights, long top_k) {
    if (top_k < 1) raise(Errc::Usage, "rank_query: top_k must be >= 1");
    if (query.empty())
        raise(Errc::EmptyQuery, "query is empty after stop-word filtering");

    std::vector<RankedEntry> entries;
    entries.reserve(registry.records.size());
    for (const auto& [id, record] : registry.records)
        entries.push_back(score_service(query, record, registry, weights));
    rank_order(entries);
    if (entries.size() > static_cast<size_t>(top_k))
        entries.resize(static_cast<size_t>(top_k));
    return entries;
}

void record_visit(Registry& registry, const std::string& service_id) {
    auto it = registry.records.find(service_id);
    if (it == registry.records.end())
        raise(Errc::UnknownService, "unknown service id: '" + service_id + "'");
    it->second.visits += 1;
}

} // namespace onto
