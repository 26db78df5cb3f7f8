#pragma once

#include "onto/context.hpp"
#include "onto/ranking.hpp"
#include "onto/tokenize.hpp"

#include <filesystem>
#include <string>

namespace onto {

// Everything the pipeline can be told from outside: a TOML config file
// provides defaults, command-line flags win.
struct Config {
    // [paths]
    std::string wsdl_dir;
    std::string context_dir;
    std::string stopwords_file; // empty = builtin list only
    std::string output_dir = "out";

    // [tfidf]
    long tfidf_k = 10;
    double tfidf_min_weight = 0.0;

    // [context]
    ContextOptions context;

    // [ranking]
    RankWeights weights;
    long top_k = 10;

    // [flags]
    bool stemming = false;
    bool stopwords_replace = false;

    // debug only: service processing order (asc | desc | shuffle:<seed>)
    std::string order = "asc";

    TokenizerOptions tokenizer() const { return {2, stemming}; }
    StopWordList load_stopwords() const;

    // Throws Error{Config} when a numeric parameter is out of range.
    void validate() const;
};

// Merges `path` into `config`. Accepts the TOML subset the README documents:
// [section] headers, key = value with strings, integers, floats and booleans,
// and '#' comments. Unknown keys are an error naming file, line and key.
void load_config_file(Config& config, const std::filesystem::path& path);

} // namespace onto
