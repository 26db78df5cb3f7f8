#include "onto/tfidf.hpp"

#include "onto/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace onto {

CorpusStats corpus_stats_unchecked(std::span<const TokenBag> bags) {
    std::set<std::string> ids;
    for (const auto& bag : bags) {
        if (!ids.insert(bag.service_id).second)
            raise(Errc::DuplicateServiceId,
                  "duplicate service id in corpus: '" + bag.service_id + "'");
    }
    CorpusStats stats;
    stats.n_docs = static_cast<long>(bags.size());
    for (const auto& bag : bags) {
        for (const auto& [term, count] : bag.counts) ++stats.doc_freq[term];
    }
    return stats;
}

CorpusStats build_corpus_stats(std::span<const TokenBag> bags) {
    if (bags.size() < 2)
        raise(Errc::CorpusTooSmall, "corpus has " + std::to_string(bags.size()) +
                                        " document(s); at least 2 are required");
    return corpus_stats_unchecked(bags);
}

TermWeight tfidf_weight(const std::string& term, const TokenBag& bag,
                        const CorpusStats& stats) {
    auto df_it = stats.doc_freq.find(term);
    if (df_it == stats.doc_freq.end())
        raise(Errc::UnknownTerm, "term not in corpus vocabulary: '" + term + "'");
    if (bag.total <= 0)
        raise(Errc::EmptyBag, "bag '" + bag.service_id + "' has no tokens");

    TermWeight tw;
    tw.term = term;
    auto count_it = bag.counts.find(term);
    long count = count_it == bag.counts.end() ? 0 : count_it->second;
    tw.tf = static_cast<double>(count) / static_cast<double>(bag.total);
    tw.idf = std::log(static_cast<double>(stats.n_docs) /
                      static_cast<double>(df_it->second));
    tw.weight = tw.tf * tw.idf;
    return tw;
}

bool descriptor_order(const TermWeight& a, const TermWeight& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.term < b.term;
}

DescriptorSet top_descriptors(const TokenBag& bag, const CorpusStats& stats,
                              long k, double min_weight) {
    if (k < 1) raise(Errc::Usage, "top_descriptors: k must be >= 1");
    if (min_weight < 0) raise(Errc::Usage, "top_descriptors: min_weight must be >= 0");
    if (bag.total <= 0)
        raise(Errc::EmptyBag, "bag '" + bag.service_id + "' has no tokens");

    DescriptorSet set;
    set.service_id = bag.service_id;
    for (const auto& [term, count] : bag.counts) {
        TermWeight tw = tfidf_weight(term, bag, stats);
        if (tw.weight > min_weight) set.descriptors.push_back(std::move(tw));
    }
    std::sort(set.descriptors.begin(), set.descriptors.end(), descriptor_order);
    if (set.descriptors.size() > static_cast<size_t>(k))
        set.descriptors.resize(static_cast<size_t>(k));
    return set;
}

} // namespace onto
