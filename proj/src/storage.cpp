#include "onto/storage.hpp"

#include "onto/error.hpp"
#include "util.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>

namespace onto {

using nlohmann::json;

namespace {

json concepts_to_json(const Ontology& ontology) {
    json arr = json::array();
    for (const auto& [name, node] : ontology.concepts) { // map: ascending name
        json c;
        c["name"] = node.name;
        c["support"] = node.support;
        c["contexts"] = node.contexts; // std::set: ascending
        arr.push_back(std::move(c));
    }
    return arr;
}

json relations_to_json(const Ontology& ontology) {
    json arr = json::array();
    for (const auto& [key, weight] : ontology.relations) { // (kind, from, to)
        json r;
        r["kind"] = relation_kind_name(key.kind);
        r["from"] = key.from;
        r["to"] = key.to;
        r["weight"] = weight;
        arr.push_back(std::move(r));
    }
    return arr;
}

json events_to_json(const Ontology& ontology) {
    json arr = json::array();
    for (const auto& event : ontology.events) { // chronological
        json e;
        e["version"] = event.version;
        e["service_id"] = event.service_id;
        e["kind"] = event_kind_name(event.kind);
        e["detail"] = event.detail;
        arr.push_back(std::move(e));
    }
    return arr;
}

json quarantine_to_json(const Ontology& ontology) {
    auto entries = ontology.quarantine;
    std::sort(entries.begin(), entries.end());
    json arr = json::array();
    for (const auto& entry : entries) {
        json q;
        q["service_id"] = entry.service_id;
        q["name"] = entry.name;
        arr.push_back(std::move(q));
    }
    return arr;
}

std::string dump(const json& value) { return value.dump(2) + "\n"; }

[[noreturn]] void schema_error(const std::string& file, const std::string& key,
                               const std::string& what) {
    raise(Errc::Schema, file + ": key '" + key + "': " + what);
}

// json::parse with an Error{Schema} instead of nlohmann's exception
json parse_json(const std::string& text, const std::string& file) {
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded()) raise(Errc::Schema, file + ": not valid JSON");
    if (!value.is_object()) raise(Errc::Schema, file + ": top level must be an object");
    return value;
}

const json& require(const json& obj, const std::string& file, const std::string& key,
                    json::value_t type) {
    auto it = obj.find(key);
    if (it == obj.end()) schema_error(file, key, "missing");
    bool ok = it->type() == type ||
              (type == json::value_t::number_integer && it->is_number_integer()) ||
              (type == json::value_t::number_float && it->is_number());
    if (!ok) schema_error(file, key, "unexpected type");
    return *it;
}

void warn_unknown_keys(const json& obj, const std::string& file,
                       std::initializer_list<const char*> known,
                       std::vector<std::string>* warnings) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find_if(known.begin(), known.end(), [&](const char* k) {
                return it.key() == k;
            }) == known.end()) {
            if (warnings)
                warnings->push_back(file + ": ignoring unknown key '" + it.key() + "'");
        }
    }
}

RelationKind relation_kind_from(const std::string& file, const std::string& name) {
    if (name == "CoOccurrence") return RelationKind::CoOccurrence;
    if (name == "ContextOf") return RelationKind::ContextOf;
    schema_error(file, "kind", "unknown relation kind '" + name + "'");
}

EventKind event_kind_from(const std::string& file, const std::string& name) {
    if (name == "DomainChange") return EventKind::DomainChange;
    if (name == "ConceptualizationChange") return EventKind::ConceptualizationChange;
    if (name == "SpecificationChange") return EventKind::SpecificationChange;
    schema_error(file, "kind", "unknown event kind '" + name + "'");
}

} // namespace

std::string ontology_to_json(const Ontology& ontology) {
    json doc;
    doc["concepts"] = concepts_to_json(ontology);
    doc["relations"] = relations_to_json(ontology);
    doc["events"] = events_to_json(ontology);
    doc["quarantine"] = quarantine_to_json(ontology);
    doc["version"] = ontology.version;
    return dump(doc);
}

Ontology ontology_from_json(const std::string& text, std::vector<std::string>* warnings) {
    const std::string file = "ontology";
    json doc = parse_json(text, file);
    warn_unknown_keys(doc, file, {"concepts", "relations", "events", "quarantine", "version"},
                      warnings);

    Ontology ontology;
    ontology.version = require(doc, file, "version", json::value_t::number_integer).get<long>();
    if (ontology.version < 0) schema_error(file, "version", "must be >= 0");

    for (const auto& c : require(doc, file, "concepts", json::value_t::array)) {
        if (!c.is_object()) schema_error(file, "concepts", "entries must be objects");
        Concept node;
        node.name = require(c, file, "name", json::value_t::string).get<std::string>();
        node.support = require(c, file, "support", json::value_t::number_integer).get<long>();
        if (node.support < 1) schema_error(file, "support", "must be >= 1");
        for (const auto& token : require(c, file, "contexts", json::value_t::array)) {
            if (!token.is_string()) schema_error(file, "contexts", "entries must be strings");
            node.contexts.insert(token.get<std::string>());
        }
        node.contexts.erase(node.name);
        if (!ontology.concepts.emplace(node.name, node).second)
            schema_error(file, "concepts", "duplicate concept '" + node.name + "'");
    }

    for (const auto& r : require(doc, file, "relations", json::value_t::array)) {
        if (!r.is_object()) schema_error(file, "relations", "entries must be objects");
        RelationKey key;
        key.kind = relation_kind_from(file, require(r, file, "kind", json::value_t::string));
        key.from = require(r, file, "from", json::value_t::string).get<std::string>();
        key.to = require(r, file, "to", json::value_t::string).get<std::string>();
        long weight = require(r, file, "weight", json::value_t::number_integer).get<long>();
        if (key.from == key.to) schema_error(file, "relations", "self relation on '" + key.from + "'");
        if (weight < 1) schema_error(file, "weight", "must be >= 1");
        ontology.relations[key] = weight;
    }

    for (const auto& e : require(doc, file, "events", json::value_t::array)) {
        if (!e.is_object()) schema_error(file, "events", "entries must be objects");
        EvolutionEvent event;
        event.version = require(e, file, "version", json::value_t::number_integer).get<long>();
        event.service_id = require(e, file, "service_id", json::value_t::string).get<std::string>();
        event.kind = event_kind_from(file, require(e, file, "kind", json::value_t::string));
        event.detail = require(e, file, "detail", json::value_t::string).get<std::string>();
        if (event.version > ontology.version)
            schema_error(file, "version", "event version " + std::to_string(event.version) +
                                              " exceeds ontology version");
        ontology.events.push_back(std::move(event));
    }

    for (const auto& q : require(doc, file, "quarantine", json::value_t::array)) {
        if (!q.is_object()) schema_error(file, "quarantine", "entries must be objects");
        ontology.quarantine.push_back(
            {require(q, file, "service_id", json::value_t::string).get<std::string>(),
             require(q, file, "name", json::value_t::string).get<std::string>()});
    }
    return ontology;
}

std::string registry_to_json(const Registry& registry) {
    json doc;
    json records = json::array();
    for (const auto& [id, record] : registry.records) { // ascending service_id
        json r;
        r["service_id"] = record.service_id;
        json tokens = json::object();
        for (const auto& [token, count] : record.bag.counts) tokens[token] = count;
        r["tokens"] = std::move(tokens);
        r["concepts"] = record.concepts;
        r["visits"] = record.visits;
        records.push_back(std::move(r));
    }
    doc["records"] = std::move(records);
    doc["weights"] = {{"alpha", registry.weights.alpha},
                      {"beta", registry.weights.beta},
                      {"gamma", registry.weights.gamma}};
    return dump(doc);
}

Registry registry_from_json(const std::string& text, std::vector<std::string>* warnings) {
    const std::string file = "registry";
    json doc = parse_json(text, file);
    warn_unknown_keys(doc, file, {"records", "weights"}, warnings);

    Registry registry;
    const json& weights = require(doc, file, "weights", json::value_t::object);
    registry.weights.alpha = require(weights, file, "alpha", json::value_t::number_float).get<double>();
    registry.weights.beta = require(weights, file, "beta", json::value_t::number_float).get<double>();
    registry.weights.gamma = require(weights, file, "gamma", json::value_t::number_float).get<double>();

    for (const auto& r : require(doc, file, "records", json::value_t::array)) {
        if (!r.is_object()) schema_error(file, "records", "entries must be objects");
        ServiceRecord record;
        record.service_id = require(r, file, "service_id", json::value_t::string).get<std::string>();
        record.visits = require(r, file, "visits", json::value_t::number_integer).get<long>();
        if (record.visits < 0) schema_error(file, "visits", "must be >= 0");
        record.bag.service_id = record.service_id;
        for (const auto& [token, count] : require(r, file, "tokens", json::value_t::object).items()) {
            if (!count.is_number_integer() || count.get<long>() < 1)
                schema_error(file, "tokens", "counts must be positive integers");
            record.bag.counts[token] = count.get<long>();
            record.bag.total += count.get<long>();
        }
        for (const auto& name : require(r, file, "concepts", json::value_t::array)) {
            if (!name.is_string()) schema_error(file, "concepts", "entries must be strings");
            record.concepts.insert(name.get<std::string>());
        }
        if (!registry.records.emplace(record.service_id, std::move(record)).second)
            schema_error(file, "records", "duplicate service id");
    }
    registry.rebuild_stats();
    return registry;
}

std::string report_to_json(const RunReport& report, const Config& config) {
    json doc;
    // config echo: everything that shapes the result; output_dir deliberately
    // left out so identical runs into different directories stay comparable
    doc["config"] = {
        {"paths",
         {{"wsdl_dir", config.wsdl_dir},
          {"context_dir", config.context_dir},
          {"stopwords_file", config.stopwords_file}}},
        {"tfidf", {{"k", config.tfidf_k}, {"min_weight", config.tfidf_min_weight}}},
        {"context",
         {{"n", config.context.results},
          {"j", config.context.result_descriptors},
          {"m", config.context.context_descriptors},
          {"theta", config.context.theta}}},
        {"ranking",
         {{"alpha", config.weights.alpha},
          {"beta", config.weights.beta},
          {"gamma", config.weights.gamma},
          {"top_k", config.top_k}}},
        {"flags", {{"stemming", config.stemming}, {"stopwords_replace", config.stopwords_replace}}},
        {"order", config.order},
    };

    json services = json::array();
    long skipped = 0;
    for (const auto& outcome : report.services) {
        json s;
        s["service_id"] = outcome.service_id;
        s["source"] = outcome.source_path;
        s["skipped"] = outcome.skipped;
        if (outcome.skipped) {
            ++skipped;
            s["skip_reason"] = outcome.skip_reason;
        } else {
            s["unresolvable"] = outcome.unresolvable;
            s["contextless"] = outcome.contextless;
            s["token_count"] = outcome.token_count;
            s["descriptor_count"] = outcome.descriptor_count;
            s["context_size"] = outcome.context_size;
            s["candidates"] = outcome.candidates;
            s["accepted"] = outcome.accepted;
            s["merged"] = outcome.merged;
            s["quarantined"] = outcome.quarantined;
            s["rejected_unverified"] = outcome.rejected_unverified;
            s["unverified_admitted"] = outcome.unverified_admitted;
        }
        services.push_back(std::move(s));
    }
    doc["services"] = std::move(services);
    doc["summary"] = {{"ingested", report.services.size()}, {"skipped", skipped}};
    doc["warnings"] = report.warnings;
    return dump(doc);
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) raise(Errc::Io, "cannot write file: " + tmp.string());
        out << content;
        out.flush();
        if (!out) raise(Errc::Io, "write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) raise(Errc::Io, "rename failed: " + tmp.string() + " -> " + path.string() +
                                " (" + ec.message() + ")");
}

void save_ontology(const Ontology& ontology, const std::filesystem::path& path) {
    atomic_write(path, ontology_to_json(ontology));
}

Ontology load_ontology(const std::filesystem::path& path, std::vector<std::string>* warnings) {
    try {
        return ontology_from_json(read_file(path), warnings);
    } catch (const Error& e) {
        if (e.code() == Errc::Schema)
            raise(Errc::Schema, path.string() + ": " + e.what());
        throw;
    }
}

void save_registry(const Registry& registry, const std::filesystem::path& path) {
    atomic_write(path, registry_to_json(registry));
}

Registry load_registry(const std::filesystem::path& path, std::vector<std::string>* warnings) {
    try {
        return registry_from_json(read_file(path), warnings);
    } catch (const Error& e) {
        if (e.code() == Errc::Schema)
            raise(Errc::Schema, path.string() + ": " + e.what());
        throw;
    }
}

void write_artifacts(const BootstrapResult& result, const Config& config) {
    std::filesystem::path dir = config.output_dir;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) raise(Errc::Io, "cannot create output directory: " + dir.string());
    save_ontology(result.ontology, dir / "ontology.json");
    save_registry(result.registry, dir / "registry.json");
    atomic_write(dir / "report.json", report_to_json(result.report, config));
}

} // namespace onto
