// onto - command-line front end for the ontoboot library.
//
// Subcommands: bootstrap, query, visit, export, stats. Exit codes: 0 on
// success, 1 on usage/config errors, 2 on data errors.

#include <ontoboot.h>

#include <CLI11.hpp>

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace {

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { onto_string_free(s); }
};

struct EngineGuard {
    onto_engine* engine = nullptr;
    ~EngineGuard() { onto_close(engine); }
};

int exit_code(onto_status status) {
    switch (status) {
    case ONTO_OK: return 0;
    case ONTO_E_USAGE: return 1;
    default: return 2;
    }
}

int report_failure(onto_status status) {
    std::fprintf(stderr, "error: %s\n", onto_last_error());
    return exit_code(status);
}

int open_engine(const std::string& output_dir, EngineGuard& guard) {
    onto_status status = onto_open(output_dir.c_str(), &guard.engine);
    if (status != ONTO_OK) return report_failure(status);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ontology bootstrapping and service ranking toolkit"};
    app.require_subcommand(1);

    std::string config_file;
    app.add_option("--config", config_file, "TOML config file")
        ->envname("ONTO_CONFIG");

    onto_params params;
    onto_params_init(&params);
    std::string wsdl_dir;
    std::string context_dir;
    std::string stopwords_file;
    std::string output_dir = "out";
    std::string order = "asc";

    auto* boot = app.add_subcommand("bootstrap", "run the full pipeline and write artifacts");
    auto* opt_wsdl = boot->add_option("--wsdl-dir", wsdl_dir, "directory of .wsdl/.xml descriptors");
    auto* opt_ctx = boot->add_option("--context-dir", context_dir, "directory of context .txt documents");
    auto* opt_out_b = boot->add_option("--output-dir", output_dir, "artifact directory (default: out)");
    auto* opt_stop = boot->add_option("--stopwords", stopwords_file, "extra stop-word file");
    auto* opt_k = boot->add_option("--tfidf-k", params.tfidf_k, "descriptors per service");
    auto* opt_minw = boot->add_option("--tfidf-min-weight", params.tfidf_min_weight, "weight cutoff");
    auto* opt_n = boot->add_option("--context-n", params.context_n, "search results per query");
    auto* opt_j = boot->add_option("--context-j", params.context_j, "descriptors per result");
    auto* opt_m = boot->add_option("--context-m", params.context_m, "descriptors per context");
    auto* opt_theta = boot->add_option("--context-theta", params.context_theta, "clustering threshold");
    auto* opt_a = boot->add_option("--alpha", params.rank_alpha, "concept weight");
    auto* opt_be = boot->add_option("--beta", params.rank_beta, "text weight");
    auto* opt_g = boot->add_option("--gamma", params.rank_gamma, "priority weight");
    auto* opt_stem = boot->add_flag("--stemming", "strip plural 's' while tokenizing");
    auto* opt_repl = boot->add_flag("--stopwords-replace", "stop-word file replaces the builtin list");
    boot->add_option("--order", order, "debug: processing order (asc|desc|shuffle:<seed>)");

    std::vector<std::string> terms;
    long top_k = 0;
    auto* query = app.add_subcommand("query", "rank services for query terms");
    query->add_option("terms", terms, "query terms")->required();
    query->add_option("--top-k", top_k, "result count (default: registry weight file)");
    auto* opt_out_q = query->add_option("--output-dir", output_dir, "artifact directory");

    std::string service_id;
    auto* visit = app.add_subcommand("visit", "record a service visit");
    visit->add_option("service_id", service_id, "service to mark visited")->required();
    auto* opt_out_v = visit->add_option("--output-dir", output_dir, "artifact directory");

    std::string format = "json";
    auto* exp = app.add_subcommand("export", "re-emit the ontology in pinned order");
    exp->add_option("--format", format, "output format (json)");
    auto* opt_out_e = exp->add_option("--output-dir", output_dir, "artifact directory");

    auto* stats = app.add_subcommand("stats", "corpus and ontology summary");
    auto* opt_out_s = stats->add_option("--output-dir", output_dir, "artifact directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    // defaults, then config file, then explicit flags
    if (!config_file.empty()) {
        onto_params file_params;
        onto_params_init(&file_params);
        StringGuard cfg_wsdl, cfg_ctx, cfg_stop, cfg_out;
        onto_status status = onto_load_config(config_file.c_str(), &file_params,
                                              &cfg_wsdl.s, &cfg_ctx.s, &cfg_stop.s,
                                              &cfg_out.s);
        if (status != ONTO_OK) return report_failure(status);
        if (!*opt_k) params.tfidf_k = file_params.tfidf_k;
        if (!*opt_minw) params.tfidf_min_weight = file_params.tfidf_min_weight;
        if (!*opt_n) params.context_n = file_params.context_n;
        if (!*opt_j) params.context_j = file_params.context_j;
        if (!*opt_m) params.context_m = file_params.context_m;
        if (!*opt_theta) params.context_theta = file_params.context_theta;
        if (!*opt_a) params.rank_alpha = file_params.rank_alpha;
        if (!*opt_be) params.rank_beta = file_params.rank_beta;
        if (!*opt_g) params.rank_gamma = file_params.rank_gamma;
        if (!*opt_stem) params.stem_plurals = file_params.stem_plurals;
        if (!*opt_repl) params.stopwords_replace = file_params.stopwords_replace;
        if (!*opt_wsdl && cfg_wsdl.s) wsdl_dir = cfg_wsdl.s;
        if (!*opt_ctx && cfg_ctx.s) context_dir = cfg_ctx.s;
        if (!*opt_stop && cfg_stop.s) stopwords_file = cfg_stop.s;
        bool output_flag_used = *opt_out_b || *opt_out_q || *opt_out_v || *opt_out_e || *opt_out_s;
        if (!output_flag_used && cfg_out.s) output_dir = cfg_out.s;
    }
    if (*opt_stem) params.stem_plurals = 1;
    if (*opt_repl) params.stopwords_replace = 1;
    if (!stopwords_file.empty()) params.stopwords_path = stopwords_file.c_str();
    params.order = order.c_str();

    if (boot->parsed()) {
        if (wsdl_dir.empty() || context_dir.empty()) {
            std::fprintf(stderr, "error: bootstrap needs --wsdl-dir and --context-dir "
                                 "(flags or [paths] in the config file)\n");
            return 1;
        }
        EngineGuard guard;
        onto_status status = onto_bootstrap(wsdl_dir.c_str(), context_dir.c_str(),
                                            output_dir.c_str(), &params, &guard.engine);
        if (status != ONTO_OK) return report_failure(status);
        StringGuard summary;
        if (onto_stats(guard.engine, &summary.s) == ONTO_OK)
            std::fputs(summary.s, stdout);
        std::printf("wrote %s/ontology.json, registry.json, report.json\n",
                    output_dir.c_str());
        return 0;
    }

    if (query->parsed()) {
        EngineGuard guard;
        if (int rc = open_engine(output_dir, guard)) return rc;
        std::vector<const char*> term_ptrs;
        term_ptrs.reserve(terms.size());
        for (const auto& t : terms) term_ptrs.push_back(t.c_str());
        onto_hit* hits = nullptr;
        size_t n_hits = 0;
        onto_status status = onto_query(guard.engine, term_ptrs.data(), term_ptrs.size(),
                                        top_k, &hits, &n_hits);
        if (status != ONTO_OK) return report_failure(status);
        std::printf("%4s  %-8s  %-8s  %-8s  %-8s  %s\n", "rank", "score", "concept",
                    "text", "priority", "service");
        for (size_t i = 0; i < n_hits; ++i) {
            std::printf("%4zu  %.6f  %.6f  %.6f  %.6f  %s\n", i + 1, hits[i].score,
                        hits[i].concept_score, hits[i].text_score,
                        hits[i].priority_score, hits[i].service_id);
        }
        onto_hits_free(hits, n_hits);
        return 0;
    }

    if (visit->parsed()) {
        EngineGuard guard;
        if (int rc = open_engine(output_dir, guard)) return rc;
        onto_status status = onto_visit(guard.engine, service_id.c_str());
        if (status != ONTO_OK) return report_failure(status);
        std::printf("visit recorded: %s\n", service_id.c_str());
        return 0;
    }

    if (exp->parsed()) {
        if (format != "json") {
            std::fprintf(stderr, "error: unsupported export format '%s'\n", format.c_str());
            return 1;
        }
        EngineGuard guard;
        if (int rc = open_engine(output_dir, guard)) return rc;
        StringGuard out;
        onto_status status = onto_export_ontology(guard.engine, &out.s);
        if (status != ONTO_OK) return report_failure(status);
        std::fputs(out.s, stdout);
        return 0;
    }

    if (stats->parsed()) {
        EngineGuard guard;
        if (int rc = open_engine(output_dir, guard)) return rc;
        StringGuard out;
        onto_status status = onto_stats(guard.engine, &out.s);
        if (status != ONTO_OK) return report_failure(status);
        std::fputs(out.s, stdout);
        return 0;
    }

    return 1;
}
