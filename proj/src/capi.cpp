#include "ontoboot.h"

#include "onto/error.hpp"
#include "onto/pipeline.hpp"
#include "onto/ranking.hpp"
#include "onto/storage.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <memory>
#include <new>
#include <string>

struct onto_engine {
    onto::Ontology ontology;
    onto::Registry registry;
    std::filesystem::path output_dir;
};

namespace {

thread_local std::string g_last_error;

onto_status fail(onto_status status, const std::string& message) {
    g_last_error = message;
    return status;
}

onto_status from_error(const onto::Error& e) {
    using onto::Errc;
    switch (e.code()) {
    case Errc::Usage:
    case Errc::Config:
    case Errc::EmptyQuery:
        return fail(ONTO_E_USAGE, e.what());
    case Errc::Io:
        return fail(ONTO_E_IO, e.what());
    case Errc::UnknownService:
        return fail(ONTO_E_NOT_FOUND, e.what());
    default:
        return fail(ONTO_E_DATA, e.what());
    }
}

template <typename Fn>
onto_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const onto::Error& e) {
        return from_error(e);
    } catch (const std::bad_alloc&) {
        return fail(ONTO_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(ONTO_E_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

onto::Config config_from_params(const onto_params* p) {
    onto::Config config;
    if (!p) return config;
    config.tfidf_k = p->tfidf_k;
    config.tfidf_min_weight = p->tfidf_min_weight;
    config.context.results = p->context_n;
    config.context.result_descriptors = p->context_j;
    config.context.context_descriptors = p->context_m;
    config.context.theta = p->context_theta;
    config.weights = {p->rank_alpha, p->rank_beta, p->rank_gamma};
    config.top_k = p->rank_top_k;
    config.stemming = p->stem_plurals != 0;
    config.stopwords_replace = p->stopwords_replace != 0;
    if (p->stopwords_path) config.stopwords_file = p->stopwords_path;
    if (p->order) config.order = p->order;
    return config;
}

} // namespace

extern "C" {

void onto_params_init(onto_params* params) {
    if (!params) return;
    onto::Config defaults;
    params->tfidf_k = defaults.tfidf_k;
    params->tfidf_min_weight = defaults.tfidf_min_weight;
    params->context_n = defaults.context.results;
    params->context_j = defaults.context.result_descriptors;
    params->context_m = defaults.context.context_descriptors;
    params->context_theta = defaults.context.theta;
    params->rank_alpha = defaults.weights.alpha;
    params->rank_beta = defaults.weights.beta;
    params->rank_gamma = defaults.weights.gamma;
    params->rank_top_k = defaults.top_k;
    params->stem_plurals = defaults.stemming ? 1 : 0;
    params->stopwords_replace = defaults.stopwords_replace ? 1 : 0;
    params->stopwords_path = nullptr;
    params->order = nullptr;
}

onto_status onto_load_config(const char* path, onto_params* params, char** wsdl_dir,
                             char** context_dir, char** stopwords_file,
                             char** output_dir) {
    if (!path || !params) return fail(ONTO_E_USAGE, "onto_load_config: null argument");
    return guarded([&] {
        onto::Config config = config_from_params(params);
        onto::load_config_file(config, path);
        const char* stopwords_keep = params->stopwords_path;
        const char* order_keep = params->order;
        onto_params merged;
        merged.tfidf_k = config.tfidf_k;
        merged.tfidf_min_weight = config.tfidf_min_weight;
        merged.context_n = config.context.results;
        merged.context_j = config.context.result_descriptors;
        merged.context_m = config.context.context_descriptors;
        merged.context_theta = config.context.theta;
        merged.rank_alpha = config.weights.alpha;
        merged.rank_beta = config.weights.beta;
        merged.rank_gamma = config.weights.gamma;
        merged.rank_top_k = config.top_k;
        merged.stem_plurals = config.stemming ? 1 : 0;
        merged.stopwords_replace = config.stopwords_replace ? 1 : 0;
        merged.stopwords_path = stopwords_keep;
        merged.order = order_keep;
        *params = merged;
        if (wsdl_dir && !config.wsdl_dir.empty()) *wsdl_dir = dup_string(config.wsdl_dir);
        if (context_dir && !config.context_dir.empty())
            *context_dir = dup_string(config.context_dir);
        if (stopwords_file && !config.stopwords_file.empty())
            *stopwords_file = dup_string(config.stopwords_file);
        if (output_dir && !config.output_dir.empty() && config.output_dir != "out")
            *output_dir = dup_string(config.output_dir);
        return ONTO_OK;
    });
}

onto_status onto_bootstrap(const char* wsdl_dir, const char* context_dir,
                           const char* output_dir, const onto_params* params,
                           onto_engine** out) {
    if (!wsdl_dir || !context_dir || !output_dir || !out)
        return fail(ONTO_E_USAGE, "onto_bootstrap: null argument");
    *out = nullptr;
    return guarded([&] {
        onto::Config config = config_from_params(params);
        config.wsdl_dir = wsdl_dir;
        config.context_dir = context_dir;
        config.output_dir = output_dir;
        onto::BootstrapResult result = onto::run_bootstrap(config);
        onto::write_artifacts(result, config);
        auto engine = std::make_unique<onto_engine>();
        engine->ontology = std::move(result.ontology);
        engine->registry = std::move(result.registry);
        engine->output_dir = output_dir;
        *out = engine.release();
        return ONTO_OK;
    });
}

onto_status onto_open(const char* output_dir, onto_engine** out) {
    if (!output_dir || !out) return fail(ONTO_E_USAGE, "onto_open: null argument");
    *out = nullptr;
    return guarded([&] {
        std::filesystem::path dir = output_dir;
        auto engine = std::make_unique<onto_engine>();
        engine->ontology = onto::load_ontology(dir / "ontology.json");
        engine->registry = onto::load_registry(dir / "registry.json");
        for (const auto& [name, node] : engine->ontology.concepts)
            engine->registry.concept_names.insert(name);
        engine->output_dir = std::move(dir);
        *out = engine.release();
        return ONTO_OK;
    });
}

void onto_close(onto_engine* engine) {
    delete engine;
}

onto_status onto_query(onto_engine* engine, const char* const* terms, size_t n_terms,
                       long top_k, onto_hit** hits, size_t* n_hits) {
    if (!engine || !hits || !n_hits || (!terms && n_terms > 0))
        return fail(ONTO_E_USAGE, "onto_query: null argument");
    if (n_terms == 0) return fail(ONTO_E_USAGE, "onto_query: no query terms");
    *hits = nullptr;
    *n_hits = 0;
    return guarded([&] {
        std::vector<std::string> raw(terms, terms + n_terms);
        auto query = onto::prepare_query(raw, onto::StopWordList::builtin(), {});
        if (query.empty())
            onto::raise(onto::Errc::EmptyQuery,
                        "query is empty after stop-word filtering");
        long k = top_k > 0 ? top_k : static_cast<long>(engine->registry.records.size());
        if (k < 1) k = 1;
        auto ranked = onto::rank_query(query, engine->registry,
                                       engine->registry.weights, k);
        auto* arr = static_cast<onto_hit*>(std::calloc(ranked.size(), sizeof(onto_hit)));
        if (!arr && !ranked.empty()) throw std::bad_alloc();
        for (size_t i = 0; i < ranked.size(); ++i) {
            arr[i].service_id = dup_string(ranked[i].service_id);
            arr[i].score = ranked[i].score;
            arr[i].concept_score = ranked[i].concept_score;
            arr[i].text_score = ranked[i].text_score;
            arr[i].priority_score = ranked[i].priority_score;
        }
        *hits = arr;
        *n_hits = ranked.size();
        return ONTO_OK;
    });
}

void onto_hits_free(onto_hit* hits, size_t n_hits) {
    if (!hits) return;
    for (size_t i = 0; i < n_hits; ++i) std::free(hits[i].service_id);
    std::free(hits);
}

onto_status onto_visit(onto_engine* engine, const char* service_id) {
    if (!engine || !service_id) return fail(ONTO_E_USAGE, "onto_visit: null argument");
    return guarded([&] {
        onto::record_visit(engine->registry, service_id);
        onto::save_registry(engine->registry, engine->output_dir / "registry.json");
        return ONTO_OK;
    });
}

onto_status onto_export_ontology(onto_engine* engine, char** json) {
    if (!engine || !json) return fail(ONTO_E_USAGE, "onto_export_ontology: null argument");
    *json = nullptr;
    return guarded([&] {
        *json = dup_string(onto::ontology_to_json(engine->ontology));
        return ONTO_OK;
    });
}

onto_status onto_stats(onto_engine* engine, char** json) {
    if (!engine || !json) return fail(ONTO_E_USAGE, "onto_stats: null argument");
    *json = nullptr;
    return guarded([&] {
        long total_visits = 0;
        long tokens = 0;
        for (const auto& [id, record] : engine->registry.records) {
            total_visits += record.visits;
            tokens += record.bag.total;
        }
        nlohmann::json doc;
        doc["services"] = engine->registry.records.size();
        doc["vocabulary"] = engine->registry.stats.doc_freq.size();
        doc["tokens"] = tokens;
        doc["concepts"] = engine->ontology.concepts.size();
        doc["relations"] = engine->ontology.relations.size();
        doc["events"] = engine->ontology.events.size();
        doc["quarantined"] = engine->ontology.quarantine.size();
        doc["version"] = engine->ontology.version;
        doc["total_visits"] = total_visits;
        *json = dup_string(doc.dump(2) + "\n");
        return ONTO_OK;
    });
}

void onto_string_free(char* s) {
    std::free(s);
}

const char* onto_last_error(void) {
    return g_last_error.c_str();
}

const char* onto_version(void) {
    return "ontoboot 0.1.0";
}

} // extern "C"
