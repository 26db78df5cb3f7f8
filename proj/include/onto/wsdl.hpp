#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace onto {

enum class SourceKind {
    Service,
    Port,
    PortType,
    Binding,
    Operation,
    Message,
    Part,
    SchemaElement,
};

const char* source_kind_name(SourceKind kind);

struct NameLabel {
    std::string raw; // as written, non-empty after trimming
    SourceKind kind;

    bool operator==(const NameLabel&) const = default;
};

// Parsed WSDL descriptor. Labels keep document order; duplicates are
// frequency signal, not an error. Immutable after construction.
struct WsdlDocument {
    std::string service_id; // file stem, lowercased
    std::vector<NameLabel> labels;
    std::vector<std::string> documentation; // raw text blocks, trimmed
    std::string source_path;
};

struct FreeTextDescriptor {
    std::string service_id;
    std::string text; // may be empty; emptiness is recorded, not an error
    bool empty() const { return text.empty(); }
};

// Extracts the name labels and documentation blocks of a WSDL 1.1 document.
// Throws Error{MalformedXml} on unparseable input and Error{NotWsdl} when the
// root element is not a WSDL `definitions` (callers skip those with a warning).
WsdlDocument parse_wsdl(std::string_view bytes, const std::string& source_path);

// Sidecar text (if any) followed by the embedded documentation blocks,
// newline-separated, whitespace-trimmed.
FreeTextDescriptor extract_free_text(const WsdlDocument& doc,
                                     const std::optional<std::string>& sidecar_text);

struct CorpusWarning {
    std::string path;
    std::string reason;
};

struct WsdlCorpus {
    std::vector<WsdlDocument> documents;      // ascending service_id
    std::vector<FreeTextDescriptor> free_text; // parallel to documents
    std::vector<CorpusWarning> skipped;        // malformed / non-WSDL files
};

// Scans a directory for .wsdl/.xml files (plus optional <stem>.txt sidecars).
// Unparseable or non-WSDL files are skipped and recorded. Duplicate service
// ids are a corpus-level error.
WsdlCorpus load_wsdl_corpus(const std::filesystem::path& dir);

} // namespace onto
