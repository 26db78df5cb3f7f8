#pragma once

#include "onto/tokenize.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace onto {

// Document counts for one corpus: N and per-term document frequency.
// Built in one synchronization pass, immutable afterwards.
struct CorpusStats {
    long n_docs = 0;
    std::map<std::string, long> doc_freq;

    bool knows(const std::string& term) const { return doc_freq.count(term) != 0; }
};

struct TermWeight {
    std::string term;
    double tf = 0.0;     // counts[term] / total
    double idf = 0.0;    // ln(N / df)
    double weight = 0.0; // tf * idf
};

// Descending weight, ties by ascending term; no duplicate terms.
struct DescriptorSet {
    std::string service_id;
    std::vector<TermWeight> descriptors;
};

// Exact (-weight, term) comparison, no epsilon.
bool descriptor_order(const TermWeight& a, const TermWeight& b);

// Throws CorpusTooSmall for fewer than two bags and DuplicateServiceId on a
// repeated id.
CorpusStats build_corpus_stats(std::span<const TokenBag> bags);

// Same counting without the N >= 2 gate, for registries rebuilt from disk.
CorpusStats corpus_stats_unchecked(std::span<const TokenBag> bags);

// Throws UnknownTerm when the term never occurs in the corpus; a term absent
// from this bag only gets tf = 0.
TermWeight tfidf_weight(const std::string& term, const TokenBag& bag,
                        const CorpusStats& stats);

// The at-most-k highest-weight terms with weight strictly above min_weight.
// Throws EmptyBag when the bag has no tokens at all.
DescriptorSet top_descriptors(const TokenBag& bag, const CorpusStats& stats,
                              long k, double min_weight);

} // namespace onto
