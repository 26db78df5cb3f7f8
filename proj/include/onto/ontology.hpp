#pragma once

#include "onto/context.hpp"
#include "onto/tfidf.hpp"
#include "onto/wsdl.hpp"

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace onto {

struct Concept {
    std::string name;
    long support = 0;                // services that evoked it
    std::set<std::string> contexts;  // context tokens seen alongside, never the name itself
};

enum class RelationKind { CoOccurrence, ContextOf };

const char* relation_kind_name(RelationKind kind);

// CoOccurrence is undirected and stored with from < to; ContextOf runs from a
// context token that is itself a concept to an evoked concept.
struct RelationKey {
    RelationKind kind;
    std::string from;
    std::string to;

    auto operator<=>(const RelationKey&) const = default;
};

enum class EventKind { DomainChange, ConceptualizationChange, SpecificationChange };

const char* event_kind_name(EventKind kind);

struct EvolutionEvent {
    long version = 0;
    std::string service_id;
    EventKind kind;
    std::string detail;
};

struct QuarantineEntry {
    std::string service_id;
    std::string name;

    auto operator<=>(const QuarantineEntry&) const = default;
};

// Versioned concept/relation graph with an append-only event log. Single
// writer during bootstrap; free to share once evolution is finished.
struct Ontology {
    std::map<std::string, Concept> concepts;
    std::map<RelationKey, long> relations;
    std::vector<EvolutionEvent> events;
    std::vector<QuarantineEntry> quarantine;
    long version = 0;

    // Per processed service: accepted concept names and context tokens.
    // Lets a late-arriving concept pick up ContextOf relations from earlier
    // services, which keeps bootstrap order-independent. Not exported.
    struct ServiceTrace {
        std::string service_id;
        std::set<std::string> accepted;
        std::set<std::string> context_tokens;
    };
    std::vector<ServiceTrace> history;

    bool has_concept(const std::string& name) const { return concepts.count(name) != 0; }
};

struct CandidateConcept {
    std::string name;
    double tfidf_weight = 0.0;
    double context_weight = 0.0;
};

enum class Verification { Accepted, Unverified };
enum class Moderation { Merge, Quarantine };

// One candidate per token present in both descriptor lists, carrying both
// weights, ordered by (-(tfidf + context), token).
std::vector<CandidateConcept> evoke_concepts(const DescriptorSet& tfidf,
                                             const WebContext& context);

// Accepted iff the candidate name occurs in the tokenization of the free
// text; an empty free text cannot verify anything.
Verification verify_concept(const CandidateConcept& candidate,
                            const FreeTextDescriptor& free_text,
                            const StopWordList& stoplist,
                            const TokenizerOptions& opts);

// Moderates a name collision whose context sets are disjoint (the conflict
// condition; anything else is NotAConflict). The free text is the moderator:
// verified candidates merge into the existing concept, the rest are
// quarantined and leave the ontology untouched apart from the logged event.
Moderation resolve_conflict(Ontology& ontology, const CandidateConcept& candidate,
                            const std::set<std::string>& candidate_contexts,
                            const std::string& service_id,
                            const FreeTextDescriptor& free_text,
                            const StopWordList& stoplist,
                            const TokenizerOptions& opts);

// Applies one service's accepted candidates: concept insert/reinforce,
// CoOccurrence for every accepted pair, ContextOf from context tokens that
// are concepts (both directions in time, see Ontology::history). Always
// bumps the version and logs at least one event.
void evolve_with_service(Ontology& ontology, const std::string& service_id,
                         std::span<const CandidateConcept> accepted,
                         const WebContext& context);

} // namespace onto
