#include "onto/pipeline.hpp"

#include "onto/error.hpp"

#include <algorithm>
#include <random>

namespace onto {

namespace {

std::vector<size_t> processing_order(size_t count, const std::string& order) {
    std::vector<size_t> indices(count);
    for (size_t i = 0; i < count; ++i) indices[i] = i;
    if (order == "asc" || order.empty()) return indices; // corpus is already ascending
    if (order == "desc") {
        std::reverse(indices.begin(), indices.end());
        return indices;
    }
    if (order.rfind("shuffle:", 0) == 0) {
        unsigned long seed = std::stoul(order.substr(8));
        std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
        std::shuffle(indices.begin(), indices.end(), rng);
        return indices;
    }
    raise(Errc::Config, "unknown processing order '" + order + "'");
}

WebContext without_tokens(const WebContext& context, const std::set<std::string>& drop) {
    if (drop.empty()) return context;
    WebContext pruned;
    pruned.service_id = context.service_id;
    for (const auto& entry : context.descriptors) {
        if (!drop.count(entry.first)) pruned.descriptors.push_back(entry);
    }
    return pruned;
}

} // namespace

BootstrapResult bootstrap(const WsdlCorpus& corpus, const ContextIndex& index,
                          const Config& config) {
    config.validate();
    const StopWordList stoplist = config.load_stopwords();
    const TokenizerOptions opts = config.tokenizer();

    BootstrapResult result;
    for (const auto& warning : corpus.skipped) {
        ServiceOutcome outcome;
        outcome.service_id =
            std::filesystem::path(warning.path).stem().string();
        outcome.source_path = warning.path;
        outcome.skipped = true;
        outcome.skip_reason = warning.reason;
        result.report.services.push_back(std::move(outcome));
        result.report.warnings.push_back("skipped " + warning.path + ": " + warning.reason);
    }

    // pass 1: token bags for the whole corpus, then corpus statistics
    std::vector<TokenBag> bags;
    bags.reserve(corpus.documents.size());
    for (const auto& doc : corpus.documents)
        bags.push_back(tokenize_service(doc, stoplist, opts));
    CorpusStats stats = build_corpus_stats(bags);

    // pass 2: per service, in the configured order
    std::vector<ServiceOutcome> outcomes(corpus.documents.size());
    for (size_t i : processing_order(corpus.documents.size(), config.order)) {
        const WsdlDocument& doc = corpus.documents[i];
        const FreeTextDescriptor& free_text = corpus.free_text[i];
        const TokenBag& bag = bags[i];

        ServiceOutcome& outcome = outcomes[i];
        outcome.service_id = doc.service_id;
        outcome.source_path = doc.source_path;
        outcome.token_count = bag.total;

        DescriptorSet descriptors;
        WebContext context;
        context.service_id = doc.service_id;
        std::vector<CandidateConcept> candidates;

        if (bag.total == 0) {
            outcome.unresolvable = true;
        } else {
            descriptors = top_descriptors(bag, stats, config.tfidf_k,
                                          config.tfidf_min_weight);
            outcome.descriptor_count = static_cast<long>(descriptors.descriptors.size());

            std::vector<std::string> query;
            for (const auto& [token, count] : bag.counts)
                query.insert(query.end(), static_cast<size_t>(count), token);
            auto results = search(index, query, config.context.results,
                                  config.context.result_descriptors);
            context = extract_web_context(doc.service_id, results,
                                          config.context.theta,
                                          config.context.context_descriptors);
            outcome.context_size = static_cast<long>(context.descriptors.size());
            if (context.descriptors.empty()) outcome.contextless = true;

            candidates = evoke_concepts(descriptors, context);
            for (const auto& candidate : candidates)
                outcome.candidates.push_back(candidate.name);
        }

        const std::set<std::string> context_tokens = context.token_set();
        std::vector<CandidateConcept> accepted;
        std::set<std::string> quarantined_names;
        for (const auto& candidate : candidates) {
            std::set<std::string> candidate_contexts = context_tokens;
            candidate_contexts.erase(candidate.name);

            auto existing = result.ontology.concepts.find(candidate.name);
            bool conflict = false;
            if (existing != result.ontology.concepts.end()) {
                conflict = std::none_of(
                    candidate_contexts.begin(), candidate_contexts.end(),
                    [&](const std::string& t) { return existing->second.contexts.count(t); });
            }

            if (conflict) {
                Moderation moderation = resolve_conflict(
                    result.ontology, candidate, candidate_contexts,
                    doc.service_id, free_text, stoplist, opts);
                if (moderation == Moderation::Merge) {
                    outcome.merged.push_back(candidate.name);
                } else {
                    outcome.quarantined.push_back(candidate.name);
                    quarantined_names.insert(candidate.name);
                }
                continue;
            }

            Verification verdict = verify_concept(candidate, free_text, stoplist, opts);
            if (verdict == Verification::Accepted) {
                outcome.accepted.push_back(candidate.name);
                accepted.push_back(candidate);
            } else if (free_text.empty()) {
                // verification impossible is not a contradiction; admit, flagged
                outcome.accepted.push_back(candidate.name);
                outcome.unverified_admitted.push_back(candidate.name);
                accepted.push_back(candidate);
            } else {
                outcome.rejected_unverified.push_back(candidate.name);
            }
        }

        // a quarantined name must not link this service into the graph
        WebContext evolve_context = without_tokens(context, quarantined_names);
        evolve_with_service(result.ontology, doc.service_id, accepted, evolve_context);
        for (const auto& name : outcome.unverified_admitted) {
            result.ontology.events.push_back({result.ontology.version, doc.service_id,
                                              EventKind::ConceptualizationChange,
                                              "unverified admission: " + name});
        }

        ServiceRecord record;
        record.service_id = doc.service_id;
        record.bag = bag;
        record.visits = 0;
        for (const auto& name : outcome.accepted) record.concepts.insert(name);
        for (const auto& name : outcome.merged) record.concepts.insert(name);
        result.registry.records.emplace(doc.service_id, std::move(record));
    }

    for (auto& outcome : outcomes)
        result.report.services.push_back(std::move(outcome));
    std::sort(result.report.services.begin(), result.report.services.end(),
              [](const ServiceOutcome& a, const ServiceOutcome& b) {
                  if (a.service_id != b.service_id) return a.service_id < b.service_id;
                  return a.source_path < b.source_path;
              });

    result.registry.weights = config.weights.normalized();
    result.registry.rebuild_stats();
    for (const auto& [name, node] : result.ontology.concepts)
        result.registry.concept_names.insert(name);
    return result;
}

BootstrapResult run_bootstrap(const Config& config) {
    config.validate();
    if (config.wsdl_dir.empty()) raise(Errc::Config, "paths.wsdl_dir is required");
    if (config.context_dir.empty()) raise(Errc::Config, "paths.context_dir is required");

    WsdlCorpus corpus = load_wsdl_corpus(config.wsdl_dir);
    std::vector<std::string> warnings;
    ContextIndex index = build_context_index(config.context_dir, config.load_stopwords(),
                                             config.tokenizer(), &warnings);
    BootstrapResult result = bootstrap(corpus, index, config);
    for (auto& warning : warnings) result.report.warnings.push_back(std::move(warning));
    return result;
}

} // namespace onto
