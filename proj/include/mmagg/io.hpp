#pragma once

#include <istream>
#include <string>
#include <vector>

#include "mmagg/rankings.hpp"

namespace mmagg {

/// An instance read from text, with the element and class names it used.
struct ParsedInstance {
    Instance instance;
    /// element_names[x-1] is the token for element x.
    std::vector<std::string> element_names;
    std::vector<std::string> class_labels;

    std::string name_of(Element x) const { return element_names.at(x - 1); }
};

/// Instance file: one ranking per line,
///     class=<label> lambda=<weight> : a b { c d } e
/// where braces enclose ties and '#' starts a comment line. Element tokens
/// are numbered 1..n in order of first appearance. Throws ParseError.
ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance_string(const std::string& text);

/// Gene order file: "<genome>\t<signed block ids>" per line. Signs are
/// dropped and each genome becomes its own singleton class of weight 1.
ParsedInstance parse_gene_orders(std::istream& in);

/// Reads either format from a path, sniffing for "class=" when `format` is "auto".
ParsedInstance read_instance_file(const std::string& path, const std::string& format = "auto");

std::string format_ranking(const PartialRanking& r, const std::vector<std::string>& names);

/// Inverse of parse_instance (up to the first-seen numbering of elements).
std::string write_instance(const ParsedInstance& parsed);

}  // namespace mmagg
