#pragma once

// Minimal non-validating XML reader, just enough DOM for WSDL ingestion:
// elements, attributes, character data (entities, CDATA), comments and
// processing instructions skipped. UTF-8 in, UTF-8 out, no DTD expansion.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace onto::xml {

struct Element {
    std::string name; // qualified name as written
    std::vector<std::pair<std::string, std::string>> attributes; // document order
    std::vector<Element> children;
    std::string text; // concatenated direct character data
    // direct text split around child elements: runs[i] precedes children[i]
    std::vector<std::string> text_runs;

    const std::string* attribute(std::string_view attr_name) const;
    // Direct + descendant character data in document order.
    std::string deep_text() const;
};

// Throws Error{MalformedXml} on anything that is not a well-formed document.
Element parse(std::string_view bytes);

// "wsdl:portType" -> "portType"
std::string_view local_name(std::string_view qualified);

} // namespace onto::xml
