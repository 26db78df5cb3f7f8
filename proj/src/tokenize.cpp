#include "onto/tokenize.hpp"

#include "onto/error.hpp"
#include "onto/wsdl.hpp"
#include "util.hpp"

#include <fstream>

namespace onto {

namespace {

// English function words plus WSDL boilerplate that would otherwise dominate
// every descriptor set.
const char* kBuiltinStopWords[] = {
    "a", "about", "above", "after", "again", "all", "also", "am", "an", "and",
    "any", "are", "as", "at", "be", "because", "been", "before", "being",
    "below", "between", "both", "but", "by", "can", "cannot", "could", "did",
    "do", "does", "doing", "down", "during", "each", "few", "for", "from",
    "further", "had", "has", "have", "having", "he", "her", "here", "hers",
    "him", "his", "how", "i", "if", "in", "into", "is", "it", "its", "itself",
    "just", "me", "more", "most", "my", "no", "nor", "not", "now", "of", "off",
    "on", "once", "only", "or", "other", "our", "ours", "out", "over", "own",
    "same", "she", "should", "so", "some", "such", "than", "that", "the",
    "their", "theirs", "them", "then", "there", "these", "they", "this",
    "those", "through", "to", "too", "under", "until", "up", "very", "was",
    "we", "were", "what", "when", "where", "which", "while", "who", "whom",
    "why", "will", "with", "would", "you", "your", "yours",
    // WSDL boilerplate
    "get", "set", "request", "response", "soap", "http", "input", "output",
    "type", "array",
};

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_alpha(char c) { return is_lower(c) || is_upper(c); }

} // namespace

const StopWordList& StopWordList::builtin() {
    static const StopWordList list = [] {
        std::set<std::string> words;
        for (const char* w : kBuiltinStopWords) words.insert(w);
        return StopWordList(std::move(words));
    }();
    return list;
}

StopWordList StopWordList::load(const std::filesystem::path& file, bool replace) {
    std::ifstream in(file);
    if (!in) raise(Errc::Io, "cannot read stop-word file: " + file.string());
    std::set<std::string> words = replace ? std::set<std::string>{} : builtin().words();
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string word = to_lower_ascii(trim(line));
        if (!word.empty()) words.insert(std::move(word));
    }
    return StopWordList(std::move(words));
}

std::vector<std::string> split_label(std::string_view raw) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.push_back(current);
            current.clear();
        }
    };

    for (size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (!is_alpha(c)) {
            // digits and punctuation separate; pure-digit fragments vanish
            flush();
            continue;
        }
        if (!current.empty()) {
            char prev = raw[i - 1];
            if (is_lower(prev) && is_upper(c)) {
                flush(); // getWeather -> get | Weather
            } else if (is_upper(prev) && is_upper(c) && i + 1 < raw.size() &&
                       is_lower(raw[i + 1])) {
                flush(); // XMLParser -> XML | Parser
            }
        }
        current += is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c;
    }
    flush();
    return tokens;
}

std::vector<std::string> filter_tokens(std::vector<std::string> tokens,
                                       const StopWordList& stoplist,
                                       size_t min_len) {
    if (min_len < 1) raise(Errc::Usage, "filter_tokens: min_len must be >= 1");
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (auto& token : tokens) {
        if (token.size() < min_len) continue;
        if (stoplist.contains(token)) continue;
        out.push_back(std::move(token));
    }
    return out;
}

std::string stem_plural(std::string token) {
    if (token.size() > 3 && token.back() == 's' && token[token.size() - 2] != 's')
        token.pop_back();
    return token;
}

static void tokenize_into(std::vector<std::string>& out, std::string_view text,
                          const StopWordList& stoplist, const TokenizerOptions& opts) {
    std::vector<std::string> split = split_label(text);
    if (opts.stem_plurals) {
        for (auto& t : split) t = stem_plural(std::move(t));
    }
    for (auto& t : filter_tokens(std::move(split), stoplist, opts.min_len))
        out.push_back(std::move(t));
}

std::vector<std::string> tokenize_text(std::string_view text,
                                       const StopWordList& stoplist,
                                       const TokenizerOptions& opts) {
    std::vector<std::string> out;
    tokenize_into(out, text, stoplist, opts);
    return out;
}

TokenBag tokenize_service(const WsdlDocument& doc,
                          const StopWordList& stoplist,
                          const TokenizerOptions& opts) {
    TokenBag bag;
    bag.service_id = doc.service_id;
    std::vector<std::string> tokens;
    for (const auto& label : doc.labels) tokenize_into(tokens, label.raw, stoplist, opts);
    for (const auto& token : tokens) bag.add(token);
    return bag;
}

} // namespace onto
