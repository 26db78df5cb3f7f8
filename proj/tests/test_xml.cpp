#include "../src/xml.hpp"

#include "onto/error.hpp"

#include <doctest.h>

using onto::Errc;
using onto::Error;

namespace {

bool throws_code(const char* input, Errc code) {
    try {
        onto::xml::parse(input);
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

} // namespace

TEST_CASE("elements, attributes and text") {
    auto root = onto::xml::parse(
        "<?xml version=\"1.0\"?>\n"
        "<a x=\"1\" y='two'><b>hi</b><c/> tail </a>");
    CHECK(root.name == "a");
    REQUIRE(root.attributes.size() == 2);
    CHECK(*root.attribute("x") == "1");
    CHECK(*root.attribute("y") == "two");
    CHECK(root.attribute("z") == nullptr);
    REQUIRE(root.children.size() == 2);
    CHECK(root.children[0].name == "b");
    CHECK(root.children[0].text == "hi");
    CHECK(root.children[1].name == "c");
    CHECK(root.text == " tail ");
}

TEST_CASE("entities and CDATA decode into text") {
    auto root = onto::xml::parse(
        "<t a=\"&lt;&amp;&gt;\">&quot;x&apos; &#65;&#x42;<![CDATA[<raw>]]></t>");
    CHECK(*root.attribute("a") == "<&>");
    CHECK(root.text == "\"x' AB<raw>");
}

TEST_CASE("comments, PIs and doctype are skipped") {
    auto root = onto::xml::parse(
        "<!-- lead --><!DOCTYPE x [<!ENTITY y \"z\">]><?pi data?>"
        "<r><!-- inner --><?skip?><v/></r>");
    CHECK(root.name == "r");
    REQUIRE(root.children.size() == 1);
    CHECK(root.children[0].name == "v");
}

TEST_CASE("deep_text gathers nested character data in order") {
    auto root = onto::xml::parse("<d>one <em>two</em> three</d>");
    CHECK(root.deep_text() == "one two three");
}

TEST_CASE("malformed documents are rejected") {
    CHECK(throws_code("<definitions", Errc::MalformedXml)); // truncated
    CHECK(throws_code("", Errc::MalformedXml));
    CHECK(throws_code("not xml at all", Errc::MalformedXml));
    CHECK(throws_code("<a><b></a></b>", Errc::MalformedXml)); // mismatched
    CHECK(throws_code("<a>&bogus;</a>", Errc::MalformedXml)); // unknown entity
    CHECK(throws_code("<a x=\"1\" x=\"2\"/>", Errc::MalformedXml)); // dup attr
    CHECK(throws_code("<a/><b/>", Errc::MalformedXml)); // two roots
    CHECK(throws_code("<a>text", Errc::MalformedXml)); // unterminated
}

TEST_CASE("local_name strips the prefix") {
    CHECK(onto::xml::local_name("wsdl:portType") == "portType");
    CHECK(onto::xml::local_name("definitions") == "definitions");
    CHECK(onto::xml::local_name("a:b:c") == "c");
}
