#pragma once

#include "onto/config.hpp"
#include "onto/context.hpp"
#include "onto/ontology.hpp"
#include "onto/ranking.hpp"

#include <string>
#include <vector>

namespace onto {

// One line per ingested file, including the skipped ones.
struct ServiceOutcome {
    std::string service_id;
    std::string source_path;
    bool skipped = false;
    std::string skip_reason;
    bool unresolvable = false; // every token filtered away
    bool contextless = false;  // no search hits / empty context
    long token_count = 0;
    long descriptor_count = 0;
    long context_size = 0;
    std::vector<std::string> candidates;
    std::vector<std::string> accepted;
    std::vector<std::string> merged;
    std::vector<std::string> quarantined;
    std::vector<std::string> rejected_unverified; // failed the free-text check
    std::vector<std::string> unverified_admitted; // no free text to check against
};

struct RunReport {
    std::vector<ServiceOutcome> services; // ascending service_id
    std::vector<std::string> warnings;
};

struct BootstrapResult {
    Ontology ontology;
    Registry registry;
    RunReport report;
};

// The full pipeline over a WSDL corpus and a context index: per service in
// the configured order, tokenize, select TF/IDF descriptors, search and
// extract the web context, evoke candidates from the intersection, verify or
// moderate them against the free text, and evolve the ontology.
BootstrapResult bootstrap(const WsdlCorpus& corpus, const ContextIndex& index,
                          const Config& config);

// Convenience wrapper: loads the corpus and index from config.wsdl_dir /
// config.context_dir and runs bootstrap.
BootstrapResult run_bootstrap(const Config& config);

} // namespace onto
