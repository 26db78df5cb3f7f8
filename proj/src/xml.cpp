#include "xml.hpp"

#include "onto/error.hpp"

#include <cctype>
#include <cstdint>

namespace onto::xml {

const std::string* Element::attribute(std::string_view attr_name) const {
    for (const auto& [name, value] : attributes) {
        if (name == attr_name) return &value;
    }
    return nullptr;
}

std::string Element::deep_text() const {
    if (text_runs.empty()) return text;
    std::string out;
    for (size_t i = 0; i < children.size(); ++i) {
        out += text_runs[i];
        out += children[i].deep_text();
    }
    out += text_runs.back();
    return out;
}

std::string_view local_name(std::string_view qualified) {
    auto pos = qualified.rfind(':');
    return pos == std::string_view::npos ? qualified : qualified.substr(pos + 1);
}

namespace {

[[noreturn]] void malformed(const std::string& what, size_t offset) {
    raise(Errc::MalformedXml, "malformed xml at byte " + std::to_string(offset) + ": " + what);
}

bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':';
}

bool is_name_char(char c) {
    return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.';
}

class Parser {
public:
    explicit Parser(std::string_view input) : in_(input) {}

    Element run() {
        skip_bom();
        skip_misc();
        if (eof() || peek() != '<') malformed("expected root element", pos_);
        Element root = parse_element();
        skip_misc();
        if (!eof()) malformed("content after root element", pos_);
        return root;
    }

private:
    std::string_view in_;
    size_t pos_ = 0;

    bool eof() const { return pos_ >= in_.size(); }
    char peek() const { return in_[pos_]; }
    bool starts_with(std::string_view s) const { return in_.substr(pos_, s.size()) == s; }

    void skip_bom() {
        if (starts_with("\xEF\xBB\xBF")) pos_ += 3;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // Whitespace, comments, PIs and the doctype between markup.
    void skip_misc() {
        for (;;) {
            skip_ws();
            if (starts_with("<!--")) {
                skip_comment();
            } else if (starts_with("<?")) {
                skip_pi();
            } else if (starts_with("<!DOCTYPE")) {
                skip_doctype();
            } else {
                return;
            }
        }
    }

    void skip_comment() {
        size_t start = pos_;
        pos_ += 4;
        auto end = in_.find("-->", pos_);
        if (end == std::string_view::npos) malformed("unterminated comment", start);
        pos_ = end + 3;
    }

    void skip_pi() {
        size_t start = pos_;
        pos_ += 2;
        auto end = in_.find("?>", pos_);
        if (end == std::string_view::npos) malformed("unterminated processing instruction", start);
        pos_ = end + 2;
    }

    void skip_doctype() {
        size_t start = pos_;
        pos_ += 9;
        int brackets = 0;
        while (!eof()) {
            char c = in_[pos_++];
            if (c == '[') ++brackets;
            else if (c == ']') --brackets;
            else if (c == '>' && brackets == 0) return;
        }
        malformed("unterminated doctype", start);
    }

    std::string parse_name() {
        if (eof() || !is_name_start(peek())) malformed("expected name", pos_);
        size_t start = pos_;
        while (!eof() && is_name_char(peek())) ++pos_;
        return std::string(in_.substr(start, pos_ - start));
    }

    void append_char_ref(std::string& out, size_t start) {
        // pos_ is just past "&#"
        bool hex = !eof() && (peek() == 'x' || peek() == 'X');
        if (hex) ++pos_;
        uint32_t cp = 0;
        size_t digits = 0;
        while (!eof() && peek() != ';') {
            char c = in_[pos_++];
            uint32_t d;
            if (c >= '0' && c <= '9') d = static_cast<uint32_t>(c - '0');
            else if (hex && c >= 'a' && c <= 'f') d = static_cast<uint32_t>(c - 'a' + 10);
            else if (hex && c >= 'A' && c <= 'F') d = static_cast<uint32_t>(c - 'A' + 10);
            else malformed("bad character reference", start);
            cp = cp * (hex ? 16 : 10) + d;
            if (++digits > 7) malformed("character reference out of range", start);
        }
        if (eof() || digits == 0) malformed("unterminated character reference", start);
        ++pos_; // ';'
        if (cp == 0 || cp > 0x10FFFF) malformed("character reference out of range", start);
        // encode as UTF-8
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
    }

    void append_entity(std::string& out) {
        size_t start = pos_;
        ++pos_; // '&'
        if (starts_with("#")) {
            ++pos_;
            append_char_ref(out, start);
            return;
        }
        auto end = in_.find(';', pos_);
        if (end == std::string_view::npos || end - pos_ > 8) malformed("unterminated entity", start);
        std::string_view name = in_.substr(pos_, end - pos_);
        pos_ = end + 1;
        if (name == "lt") out += '<';
        else if (name == "gt") out += '>';
        else if (name == "amp") out += '&';
        else if (name == "apos") out += '\'';
        else if (name == "quot") out += '"';
        else malformed("unknown entity '&" + std::string(name) + ";'", start);
    }

    std::string parse_attr_value() {
        if (eof() || (peek() != '"' && peek() != '\'')) malformed("expected attribute value", pos_);
        char quote = in_[pos_++];
        std::string value;
        while (!eof() && peek() != quote) {
            if (peek() == '<') malformed("'<' in attribute value", pos_);
            if (peek() == '&') append_entity(value);
            else value += in_[pos_++];
        }
        if (eof()) malformed("unterminated attribute value", pos_);
        ++pos_;
        return value;
    }

    Element parse_element() {
        size_t start = pos_;
        ++pos_; // '<'
        Element elem;
        elem.name = parse_name();
        for (;;) {
            skip_ws();
            if (eof()) malformed("unterminated start tag", start);
            if (peek() == '>') {
                ++pos_;
                parse_content(elem, start);
                return elem;
            }
            if (starts_with("/>")) {
                pos_ += 2;
                return elem;
            }
            std::string attr_name = parse_name();
            if (elem.attribute(attr_name)) malformed("duplicate attribute '" + attr_name + "'", pos_);
            skip_ws();
            if (eof() || peek() != '=') malformed("expected '=' after attribute name", pos_);
            ++pos_;
            skip_ws();
            elem.attributes.emplace_back(std::move(attr_name), parse_attr_value());
        }
    }

    void parse_content(Element& elem, size_t open_offset) {
        elem.text_runs.emplace_back();
        auto add_text = [&elem](std::string_view chunk) {
            elem.text.append(chunk);
            elem.text_runs.back().append(chunk);
        };
        for (;;) {
            if (eof()) malformed("unterminated element '" + elem.name + "'", open_offset);
            if (starts_with("</")) {
                pos_ += 2;
                std::string close = parse_name();
                if (close != elem.name)
                    malformed("mismatched close tag '" + close + "' for '" + elem.name + "'", pos_);
                skip_ws();
                if (eof() || peek() != '>') malformed("unterminated close tag", pos_);
                ++pos_;
                return;
            }
            if (starts_with("<!--")) {
                skip_comment();
            } else if (starts_with("<![CDATA[")) {
                size_t start = pos_;
                pos_ += 9;
                auto end = in_.find("]]>", pos_);
                if (end == std::string_view::npos) malformed("unterminated CDATA", start);
                add_text(in_.substr(pos_, end - pos_));
                pos_ = end + 3;
            } else if (starts_with("<?")) {
                skip_pi();
            } else if (peek() == '<') {
                elem.children.push_back(parse_element());
                elem.text_runs.emplace_back();
            } else if (peek() == '&') {
                std::string decoded;
                append_entity(decoded);
                add_text(decoded);
            } else {
                add_text(in_.substr(pos_, 1));
                ++pos_;
            }
        }
    }
};

} // namespace

Element parse(std::string_view bytes) {
    return Parser(bytes).run();
}

} // namespace onto::xml
