#pragma once

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <optional>
#include <sstream>
#include <string>

namespace tiltcert::testing {

/// Parses an SVG document; nullopt if it is not well-formed XML.
inline std::optional<boost::property_tree::ptree> parse_xml(const std::string& text) {
    boost::property_tree::ptree tree;
    std::istringstream in(text);
    try {
        boost::property_tree::read_xml(in, tree);
    } catch (const boost::property_tree::xml_parser_error&) {
        return std::nullopt;
    }
    return tree;
}

/// Number of direct <line> children of <svg> whose class attribute is `cls`.
inline std::size_t count_lines(const boost::property_tree::ptree& doc, const std::string& cls) {
    std::size_t n = 0;
    const auto svg = doc.get_child_optional("svg");
    if (!svg) return 0;
    for (const auto& [tag, node] : *svg) {
        if (tag == "line" && node.get<std::string>("<xmlattr>.class", "") == cls) ++n;
    }
    return n;
}

}  // namespace tiltcert::testing
