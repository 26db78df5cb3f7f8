#pragma once

#include "onto/config.hpp"
#include "onto/ontology.hpp"
#include "onto/pipeline.hpp"
#include "onto/ranking.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace onto {

// Canonical JSON renderings: object keys sorted, array orders pinned, so two
// equal values serialize to identical bytes.
std::string ontology_to_json(const Ontology& ontology);
std::string registry_to_json(const Registry& registry);
std::string report_to_json(const RunReport& report, const Config& config);

// Tolerant readers: unknown keys produce warnings, missing or mistyped keys
// raise Error{Schema} naming the first offending key.
Ontology ontology_from_json(const std::string& text,
                            std::vector<std::string>* warnings = nullptr);
Registry registry_from_json(const std::string& text,
                            std::vector<std::string>* warnings = nullptr);

// write-temp-then-rename
void atomic_write(const std::filesystem::path& path, const std::string& content);

void save_ontology(const Ontology& ontology, const std::filesystem::path& path);
Ontology load_ontology(const std::filesystem::path& path,
                       std::vector<std::string>* warnings = nullptr);

void save_registry(const Registry& registry, const std::filesystem::path& path);
Registry load_registry(const std::filesystem::path& path,
                       std::vector<std::string>* warnings = nullptr);

// ontology.json, registry.json and report.json under output_dir.
void write_artifacts(const BootstrapResult& result, const Config& config);

} // namespace onto
