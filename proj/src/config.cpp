#include "onto/config.hpp"

#include "onto/error.hpp"
#include "util.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>

namespace onto {

StopWordList Config::load_stopwords() const {
    if (stopwords_file.empty()) return StopWordList::builtin();
    return StopWordList::load(stopwords_file, stopwords_replace);
}

void Config::validate() const {
    auto fail = [](const std::string& what) { raise(Errc::Config, what); };
    if (tfidf_k < 1) fail("tfidf.k must be >= 1");
    if (tfidf_min_weight < 0) fail("tfidf.min_weight must be >= 0");
    if (context.results < 1) fail("context.n must be >= 1");
    if (context.result_descriptors < 1) fail("context.j must be >= 1");
    if (context.context_descriptors < 1) fail("context.m must be >= 1");
    if (context.theta < 0 || context.theta > 1) fail("context.theta must be in [0,1]");
    if (top_k < 1) fail("ranking.top_k must be >= 1");
    weights.normalized(); // throws on bad weights
    if (order != "asc" && order != "desc" && order.rfind("shuffle:", 0) != 0)
        fail("order must be asc, desc or shuffle:<seed>");
}

namespace {

struct Setter {
    std::function<void(const std::string&)> apply;
};

long parse_long(const std::string& where, const std::string& value) {
    long out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        raise(Errc::Config, where + ": expected an integer, got '" + value + "'");
    return out;
}

double parse_double(const std::string& where, const std::string& value) {
    try {
        size_t used = 0;
        double out = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return out;
    } catch (const std::exception&) {
        raise(Errc::Config, where + ": expected a number, got '" + value + "'");
    }
}

bool parse_bool(const std::string& where, const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    raise(Errc::Config, where + ": expected true or false, got '" + value + "'");
}

// Strips quotes from strings and trailing comments from bare values.
std::string parse_scalar(const std::string& where, std::string value) {
    value = trim(value);
    if (!value.empty() && (value.front() == '"' || value.front() == '\'')) {
        char quote = value.front();
        auto end = value.find(quote, 1);
        if (end == std::string::npos)
            raise(Errc::Config, where + ": unterminated string");
        if (!trim(value.substr(end + 1)).empty() && trim(value.substr(end + 1))[0] != '#')
            raise(Errc::Config, where + ": trailing characters after string");
        return value.substr(1, end - 1);
    }
    auto hash = value.find('#');
    if (hash != std::string::npos) value = trim(value.substr(0, hash));
    if (value.empty()) raise(Errc::Config, where + ": missing value");
    return value;
}

} // namespace

void load_config_file(Config& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::Io, "cannot read config file: " + path.string());

    const std::map<std::string, Setter> setters = {
        {"paths.wsdl_dir", {[&](const std::string& v) { config.wsdl_dir = v; }}},
        {"paths.context_dir", {[&](const std::string& v) { config.context_dir = v; }}},
        {"paths.stopwords_file", {[&](const std::string& v) { config.stopwords_file = v; }}},
        {"paths.output_dir", {[&](const std::string& v) { config.output_dir = v; }}},
        {"tfidf.k", {[&](const std::string& v) { config.tfidf_k = parse_long("tfidf.k", v); }}},
        {"tfidf.min_weight",
         {[&](const std::string& v) { config.tfidf_min_weight = parse_double("tfidf.min_weight", v); }}},
        {"context.n", {[&](const std::string& v) { config.context.results = parse_long("context.n", v); }}},
        {"context.j",
         {[&](const std::string& v) { config.context.result_descriptors = parse_long("context.j", v); }}},
        {"context.m",
         {[&](const std::string& v) { config.context.context_descriptors = parse_long("context.m", v); }}},
        {"context.theta",
         {[&](const std::string& v) { config.context.theta = parse_double("context.theta", v); }}},
        {"ranking.alpha", {[&](const std::string& v) { config.weights.alpha = parse_double("ranking.alpha", v); }}},
        {"ranking.beta", {[&](const std::string& v) { config.weights.beta = parse_double("ranking.beta", v); }}},
        {"ranking.gamma", {[&](const std::string& v) { config.weights.gamma = parse_double("ranking.gamma", v); }}},
        {"ranking.top_k", {[&](const std::string& v) { config.top_k = parse_long("ranking.top_k", v); }}},
        {"flags.stemming", {[&](const std::string& v) { config.stemming = parse_bool("flags.stemming", v); }}},
        {"flags.stopwords_replace",
         {[&](const std::string& v) { config.stopwords_replace = parse_bool("flags.stopwords_replace", v); }}},
    };

    std::string section;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        std::string where = path.string() + ":" + std::to_string(line_no);
        if (stripped.front() == '[') {
            if (stripped.back() != ']')
                raise(Errc::Config, where + ": malformed section header");
            section = trim(stripped.substr(1, stripped.size() - 2));
            if (section.empty()) raise(Errc::Config, where + ": empty section name");
            continue;
        }
        auto eq = stripped.find('=');
        if (eq == std::string::npos)
            raise(Errc::Config, where + ": expected key = value");
        std::string key = trim(stripped.substr(0, eq));
        if (key.empty()) raise(Errc::Config, where + ": empty key");
        std::string full = section.empty() ? key : section + "." + key;
        auto it = setters.find(full);
        if (it == setters.end())
            raise(Errc::Config, where + ": unknown key '" + full + "'");
        it->second.apply(parse_scalar(where + " (" + full + ")", stripped.substr(eq + 1)));
    }
}

} // namespace onto
