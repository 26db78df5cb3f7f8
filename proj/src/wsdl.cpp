#include "onto/wsdl.hpp"

#include "onto/error.hpp"
#include "util.hpp"
#include "xml.hpp"

#include <algorithm>
#include <map>

namespace onto {

const char* source_kind_name(SourceKind kind) {
    switch (kind) {
    case SourceKind::Service: return "service";
    case SourceKind::Port: return "port";
    case SourceKind::PortType: return "portType";
    case SourceKind::Binding: return "binding";
    case SourceKind::Operation: return "operation";
    case SourceKind::Message: return "message";
    case SourceKind::Part: return "part";
    case SourceKind::SchemaElement: return "schemaElement";
    }
    return "?";
}

namespace {

std::string strip_prefix(std::string_view qname) {
    return std::string(xml::local_name(qname));
}

void add_label(WsdlDocument& doc, const std::string& raw, SourceKind kind) {
    std::string trimmed = trim(raw);
    if (!trimmed.empty()) doc.labels.push_back({std::move(trimmed), kind});
}

// Preorder walk; labels come out in document order. Documentation subtrees
// contribute their text and are not descended for labels.
void collect(const xml::Element& elem, WsdlDocument& doc) {
    for (const auto& child : elem.children) {
        std::string_view local = xml::local_name(child.name);
        if (local == "documentation") {
            doc.documentation.push_back(child.deep_text());
            continue;
        }
        const std::string* name = child.attribute("name");
        if (local == "service") {
            if (name) add_label(doc, *name, SourceKind::Service);
        } else if (local == "port") {
            if (name) add_label(doc, *name, SourceKind::Port);
        } else if (local == "portType") {
            if (name) add_label(doc, *name, SourceKind::PortType);
        } else if (local == "binding") {
            if (name) add_label(doc, *name, SourceKind::Binding);
        } else if (local == "operation") {
            if (name) add_label(doc, *name, SourceKind::Operation);
        } else if (local == "message") {
            if (name) add_label(doc, *name, SourceKind::Message);
        } else if (local == "part") {
            if (name) add_label(doc, *name, SourceKind::Part);
            if (const std::string* element = child.attribute("element"))
                add_label(doc, strip_prefix(*element), SourceKind::Part);
        } else if (local == "element" || local == "attribute") {
            if (name) add_label(doc, *name, SourceKind::SchemaElement);
        }
        collect(child, doc);
    }
}

} // namespace

WsdlDocument parse_wsdl(std::string_view bytes, const std::string& source_path) {
    if (source_path.empty()) raise(Errc::Usage, "parse_wsdl: source_path must be non-empty");
    xml::Element root = xml::parse(bytes);
    if (xml::local_name(root.name) != "definitions")
        raise(Errc::NotWsdl, source_path + ": root element '" + root.name +
                                 "' is not a WSDL 1.1 'definitions'");

    WsdlDocument doc;
    doc.source_path = source_path;
    doc.service_id =
        to_lower_ascii(std::filesystem::path(source_path).stem().string());
    // imports are not chased; ingestion stays hermetic
    collect(root, doc);
    return doc;
}

FreeTextDescriptor extract_free_text(const WsdlDocument& doc,
                                     const std::optional<std::string>& sidecar_text) {
    std::string text;
    auto append_block = [&text](std::string_view block) {
        std::string trimmed = trim(block);
        if (trimmed.empty()) return;
        if (!text.empty()) text += '\n';
        text += trimmed;
    };
    if (sidecar_text) append_block(*sidecar_text);
    for (const auto& block : doc.documentation) append_block(block);
    return {doc.service_id, std::move(text)};
}

WsdlCorpus load_wsdl_corpus(const std::filesystem::path& dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec))
        raise(Errc::Io, "not a directory: " + dir.string());

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = to_lower_ascii(entry.path().extension().string());
        if (ext == ".wsdl" || ext == ".xml") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    WsdlCorpus corpus;
    std::map<std::string, std::string> seen; // service_id -> path
    for (const auto& path : files) {
        std::string bytes = read_file(path);
        WsdlDocument doc;
        try {
            doc = parse_wsdl(bytes, path.string());
        } catch (const Error& e) {
            if (e.code() == Errc::MalformedXml || e.code() == Errc::NotWsdl) {
                corpus.skipped.push_back({path.string(), e.what()});
                continue;
            }
            throw;
        }
        auto [it, inserted] = seen.emplace(doc.service_id, path.string());
        if (!inserted)
            raise(Errc::DuplicateServiceId, "duplicate service id '" + doc.service_id +
                                                "' (" + it->second + ", " + path.string() + ")");

        std::optional<std::string> sidecar;
        std::filesystem::path sidecar_path = path;
        sidecar_path.replace_extension(".txt");
        if (std::filesystem::exists(sidecar_path)) sidecar = read_file(sidecar_path);

        corpus.free_text.push_back(extract_free_text(doc, sidecar));
        corpus.documents.push_back(std::move(doc));
    }

    // ascending service_id, keeping free_text parallel
    std::vector<size_t> order(corpus.documents.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return corpus.documents[a].service_id < corpus.documents[b].service_id;
    });
    WsdlCorpus sorted;
    sorted.skipped = std::move(corpus.skipped);
    for (size_t i : order) {
        sorted.documents.push_back(std::move(corpus.documents[i]));
        sorted.free_text.push_back(std::move(corpus.free_text[i]));
    }
    return sorted;
}

} // namespace onto
