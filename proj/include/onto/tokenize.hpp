#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace onto {

struct WsdlDocument;

// Lowercase ASCII-alphabetic word set; immutable once loaded.
class StopWordList {
public:
    StopWordList() = default;
    explicit StopWordList(std::set<std::string> words) : words_(std::move(words)) {}

    // ~120 English function words plus WSDL boilerplate (get, set, request, ...).
    static const StopWordList& builtin();
    static StopWordList empty() { return StopWordList{}; }

    // One lowercase word per line, '#' starts a comment. Extends the builtin
    // list unless `replace` is set.
    static StopWordList load(const std::filesystem::path& file, bool replace);

    bool contains(std::string_view word) const {
        return words_.find(std::string(word)) != words_.end();
    }
    size_t size() const { return words_.size(); }
    const std::set<std::string>& words() const { return words_; }

private:
    std::set<std::string> words_;
};

struct TokenizerOptions {
    size_t min_len = 2;
    bool stem_plurals = false; // strip a trailing 's' (never "ss"), off by default
};

// Per-document term counts; total is the sum of counts.
struct TokenBag {
    std::string service_id;
    std::map<std::string, long> counts;
    long total = 0;

    void add(const std::string& token) {
        ++counts[token];
        ++total;
    }
};

// Splits an identifier-style label into lowercase alphabetic tokens:
// camelCase and acronym boundaries, digits and punctuation as separators,
// pure-digit fragments dropped. "XMLHttpRequest2" -> {xml, http, request}.
std::vector<std::string> split_label(std::string_view raw);

// Drops stop words and tokens shorter than min_len; keeps order and duplicates.
std::vector<std::string> filter_tokens(std::vector<std::string> tokens,
                                       const StopWordList& stoplist,
                                       size_t min_len);

// strip a plural 's' where it is safely droppable
std::string stem_plural(std::string token);

// split + filter (+ optional stemming) over free-running text.
std::vector<std::string> tokenize_text(std::string_view text,
                                       const StopWordList& stoplist,
                                       const TokenizerOptions& opts);

// Token bag over all of a document's name labels. An all-filtered document
// yields total == 0; callers flag those services unresolvable.
TokenBag tokenize_service(const WsdlDocument& doc,
                          const StopWordList& stoplist,
                          const TokenizerOptions& opts);

} // namespace onto
