#include "onto/context.hpp"

#include "onto/error.hpp"
#include "util.hpp"

#include <algorithm>
#include <numeric>

namespace onto {

ContextIndex build_context_index(const std::filesystem::path& dir,
                                 const StopWordList& stoplist,
                                 const TokenizerOptions& opts,
                                 std::vector<std::string>* warnings) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec))
        raise(Errc::Io, "not a directory: " + dir.string());

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (to_lower_ascii(entry.path().extension().string()) == ".txt")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    ContextIndex index;
    std::vector<TokenBag> bags;
    for (const auto& path : files) {
        std::string text;
        try {
            text = read_file(path);
        } catch (const Error& e) {
            if (warnings) warnings->push_back(e.what());
            continue;
        }
        TokenBag bag;
        bag.service_id = to_lower_ascii(path.stem().string());
        for (const auto& token : tokenize_text(text, stoplist, opts)) bag.add(token);
        bags.push_back(std::move(bag));
    }
    if (bags.size() < 2)
        raise(Errc::CorpusTooSmall, "context corpus " + dir.string() + " has " +
                                        std::to_string(bags.size()) +
                                        " readable document(s); at least 2 are required");
    index.stats = corpus_stats_unchecked(bags);
    for (auto& bag : bags) {
        std::string id = bag.service_id;
        index.docs.emplace(std::move(id), std::move(bag));
    }
    return index;
}

std::vector<SearchResult> search(const ContextIndex& index,
                                 std::span<const std::string> query,
                                 long n, long j) {
    if (query.empty()) raise(Errc::Usage, "search: query must be non-empty");
    if (n < 1) raise(Errc::Usage, "search: n must be >= 1");

    // canonical (token, multiplicity) form so summation order is fixed
    std::map<std::string, long> query_counts;
    for (const auto& token : query) ++query_counts[token];

    std::vector<SearchResult> results;
    for (const auto& [doc_id, bag] : index.docs) {
        if (bag.total == 0) continue; // all-stopword document, never matches
        double score = 0.0;
        for (const auto& [token, multiplicity] : query_counts) {
            if (!index.stats.knows(token)) continue;
            if (bag.counts.find(token) == bag.counts.end()) continue;
            score += static_cast<double>(multiplicity) *
                     tfidf_weight(token, bag, index.stats).weight;
        }
        if (score <= 0.0) continue;
        SearchResult result;
        result.doc_id = doc_id;
        result.score = score;
        result.descriptors = top_descriptors(bag, index.stats, j, 0.0).descriptors;
        results.push_back(std::move(result));
    }
    std::sort(results.begin(), results.end(), [](const SearchResult& a, const SearchResult& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.doc_id < b.doc_id;
    });
    if (results.size() > static_cast<size_t>(n)) results.resize(static_cast<size_t>(n));
    return results;
}

namespace {

std::set<std::string> descriptor_tokens(const SearchResult& result) {
    std::set<std::string> tokens;
    for (const auto& tw : result.descriptors) tokens.insert(tw.term);
    return tokens;
}

// Two empty sets count as identical.
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() && b.empty()) return 1.0;
    size_t inter = 0;
    for (const auto& t : a) inter += b.count(t);
    size_t uni = a.size() + b.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

} // namespace

std::vector<DescriptorCluster> cluster_results(std::span<const SearchResult> results,
                                               double theta) {
    if (theta < 0.0 || theta > 1.0)
        raise(Errc::Usage, "cluster_results: theta must be in [0,1]");

    // order members by doc_id so aggregation is permutation-invariant
    std::vector<size_t> order(results.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return results[a].doc_id < results[b].doc_id;
    });

    std::vector<std::set<std::string>> tokens;
    tokens.reserve(order.size());
    for (size_t idx : order) tokens.push_back(descriptor_tokens(results[idx]));

    // single-link components via union-find
    std::vector<size_t> parent(order.size());
    std::iota(parent.begin(), parent.end(), size_t{0});
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < order.size(); ++i) {
        for (size_t k = i + 1; k < order.size(); ++k) {
            if (jaccard(tokens[i], tokens[k]) >= theta) parent[find(i)] = find(k);
        }
    }

    std::map<size_t, DescriptorCluster> by_root;
    for (size_t i = 0; i < order.size(); ++i) {
        const SearchResult& r = results[order[i]];
        DescriptorCluster& cluster = by_root[find(i)];
        cluster.member_ids.insert(r.doc_id);
        cluster.mass += r.score;
        for (const auto& tw : r.descriptors) cluster.aggregate[tw.term] += tw.weight;
    }

    std::vector<DescriptorCluster> clusters;
    clusters.reserve(by_root.size());
    for (auto& [root, cluster] : by_root) clusters.push_back(std::move(cluster));
    std::sort(clusters.begin(), clusters.end(),
              [](const DescriptorCluster& a, const DescriptorCluster& b) {
                  return *a.member_ids.begin() < *b.member_ids.begin();
              });
    return clusters;
}

WebContext extract_web_context(const std::string& service_id,
                               std::span<const SearchResult> results,
                               double theta, long m) {
    if (m < 1) raise(Errc::Usage, "extract_web_context: m must be >= 1");

    WebContext context;
    context.service_id = service_id;
    if (results.empty()) return context; // context-less service

    std::vector<DescriptorCluster> clusters = cluster_results(results, theta);
    const DescriptorCluster* winner = &clusters.front();
    for (const auto& cluster : clusters) {
        if (cluster.mass > winner->mass) winner = &cluster;
        // equal mass keeps the earlier cluster: already ordered by smallest member
    }

    std::vector<std::pair<std::string, double>> ranked;
    for (const auto& entry : winner->aggregate) {
        if (entry.second > 0.0) ranked.push_back(entry);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > static_cast<size_t>(m)) ranked.resize(static_cast<size_t>(m));
    context.descriptors = std::move(ranked);
    return context;
}

} // namespace onto
