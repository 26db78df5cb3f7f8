#include "onto/ontology.hpp"

#include "onto/error.hpp"

#include <algorithm>

namespace onto {

const char* relation_kind_name(RelationKind kind) {
    switch (kind) {
    case RelationKind::CoOccurrence: return "CoOccurrence";
    case RelationKind::ContextOf: return "ContextOf";
    }
    return "?";
}

const char* event_kind_name(EventKind kind) {
    switch (kind) {
    case EventKind::DomainChange: return "DomainChange";
    case EventKind::ConceptualizationChange: return "ConceptualizationChange";
    case EventKind::SpecificationChange: return "SpecificationChange";
    }
    return "?";
}

std::vector<CandidateConcept> evoke_concepts(const DescriptorSet& tfidf,
                                             const WebContext& context) {
    std::map<std::string, double> context_weights;
    for (const auto& [token, weight] : context.descriptors) context_weights[token] = weight;

    std::vector<CandidateConcept> candidates;
    for (const auto& tw : tfidf.descriptors) {
        auto it = context_weights.find(tw.term);
        if (it == context_weights.end()) continue;
        candidates.push_back({tw.term, tw.weight, it->second});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const CandidateConcept& a, const CandidateConcept& b) {
                  double wa = a.tfidf_weight + a.context_weight;
                  double wb = b.tfidf_weight + b.context_weight;
                  if (wa != wb) return wa > wb;
                  return a.name < b.name;
              });
    return candidates;
}

Verification verify_concept(const CandidateConcept& candidate,
                            const FreeTextDescriptor& free_text,
                            const StopWordList& stoplist,
                            const TokenizerOptions& opts) {
    if (free_text.empty()) return Verification::Unverified;
    for (const auto& token : tokenize_text(free_text.text, stoplist, opts)) {
        if (token == candidate.name) return Verification::Accepted;
    }
    return Verification::Unverified;
}

namespace {

void log_event(Ontology& ontology, const std::string& service_id, EventKind kind,
               std::string detail) {
    ontology.events.push_back(
        {ontology.version + 1, service_id, kind, std::move(detail)});
}

void bump_relation(Ontology& ontology, const std::string& service_id,
                   RelationKey key) {
    long& weight = ontology.relations[key];
    ++weight;
    const char* joiner = key.kind == RelationKind::CoOccurrence ? ", " : " -> ";
    std::string label = std::string(relation_kind_name(key.kind)) + "(" + key.from +
                        joiner + key.to + ")";
    if (weight == 1)
        log_event(ontology, service_id, EventKind::ConceptualizationChange,
                  "relation added: " + label);
    else
        log_event(ontology, service_id, EventKind::ConceptualizationChange,
                  "relation reweighted: " + label + " -> " + std::to_string(weight));
}

} // namespace

Moderation resolve_conflict(Ontology& ontology, const CandidateConcept& candidate,
                            const std::set<std::string>& candidate_contexts,
                            const std::string& service_id,
                            const FreeTextDescriptor& free_text,
                            const StopWordList& stoplist,
                            const TokenizerOptions& opts) {
    auto it = ontology.concepts.find(candidate.name);
    if (it == ontology.concepts.end())
        raise(Errc::NotAConflict,
              "no existing concept named '" + candidate.name + "'");
    for (const auto& token : candidate_contexts) {
        if (token != candidate.name && it->second.contexts.count(token))
            raise(Errc::NotAConflict, "candidate '" + candidate.name +
                                          "' shares context token '" + token +
                                          "' with the existing concept");
    }

    if (verify_concept(candidate, free_text, stoplist, opts) == Verification::Accepted) {
        Concept& existing = it->second;
        existing.support += 1;
        for (const auto& token : candidate_contexts) {
            if (token != existing.name) existing.contexts.insert(token);
        }
        log_event(ontology, service_id, EventKind::SpecificationChange,
                  "concept merged: " + candidate.name);
        return Moderation::Merge;
    }

    ontology.quarantine.push_back({service_id, candidate.name});
    log_event(ontology, service_id, EventKind::SpecificationChange,
              "concept quarantined: " + candidate.name);
    return Moderation::Quarantine;
}

void evolve_with_service(Ontology& ontology, const std::string& service_id,
                         std::span<const CandidateConcept> accepted,
                         const WebContext& context) {
    size_t events_before = ontology.events.size();
    std::set<std::string> context_tokens = context.token_set();

    std::set<std::string> accepted_names;
    std::vector<std::string> newly_added;
    for (const auto& candidate : accepted) {
        accepted_names.insert(candidate.name);
        auto [it, inserted] = ontology.concepts.try_emplace(candidate.name);
        Concept& node = it->second;
        if (inserted) {
            node.name = candidate.name;
            node.support = 1;
            newly_added.push_back(candidate.name);
            log_event(ontology, service_id, EventKind::DomainChange,
                      "concept added: " + candidate.name);
        } else {
            node.support += 1;
            log_event(ontology, service_id, EventKind::ConceptualizationChange,
                      "concept reinforced: " + candidate.name);
        }
        for (const auto& token : context_tokens) {
            if (token != node.name) node.contexts.insert(token);
        }
    }

    // co-occurrence between every unordered pair of this service's concepts
    for (auto a = accepted_names.begin(); a != accepted_names.end(); ++a) {
        for (auto b = std::next(a); b != accepted_names.end(); ++b) {
            bump_relation(ontology, service_id,
                          {RelationKind::CoOccurrence, *a, *b});
        }
    }

    // context tokens that are concepts point at this service's concepts
    for (const auto& token : context_tokens) {
        if (!ontology.has_concept(token)) continue;
        for (const auto& name : accepted_names) {
            if (token == name) continue;
            bump_relation(ontology, service_id,
                          {RelationKind::ContextOf, token, name});
        }
    }

    // a concept arriving late picks up the ContextOf links earlier services
    // would have formed had it existed; keeps bootstrap order-independent
    for (const auto& name : newly_added) {
        for (const auto& trace : ontology.history) {
            if (!trace.context_tokens.count(name)) continue;
            for (const auto& past_concept : trace.accepted) {
                if (past_concept == name) continue;
                bump_relation(ontology, service_id,
                              {RelationKind::ContextOf, name, past_concept});
            }
        }
    }

    ontology.history.push_back({service_id, accepted_names, context_tokens});
    if (ontology.events.size() == events_before)
        log_event(ontology, service_id, EventKind::ConceptualizationChange, "no-op");
    ontology.version += 1;
}

} // namespace onto
