#include "mmagg/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "mmagg/error.hpp"

namespace mmagg {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool parse_double(const std::string& s, double& out) {
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end;
}

bool parse_int(const std::string& s, long& out) {
    const char* begin = s.data();
    if (!s.empty() && s[0] == '+') ++begin;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && begin != end;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

struct RawRanking {
    int line;
    std::string label;
    std::vector<std::vector<int>> buckets;
};

}  // namespace

ParsedInstance parse_instance(std::istream& in) {
    ParsedInstance out;
    std::unordered_map<std::string, int> ids;
    std::map<std::string, int> class_index;
    std::vector<double> class_weight;
    std::vector<RawRanking> raw;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const auto colon = text.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "expected 'class=<k> lambda=<w> : <ranking>'");

        std::string label;
        double weight = 0.0;
        bool have_class = false, have_lambda = false;
        for (const auto& tok : split_ws(text.substr(0, colon))) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) throw ParseError(lineno, "unexpected token '" + tok + "' before ':'");
            const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
            if (key == "class") {
                if (value.empty()) throw ParseError(lineno, "empty class label");
                label = value;
                have_class = true;
            } else if (key == "lambda") {
                if (!parse_double(value, weight) || !(weight > 0.0))
                    throw ParseError(lineno, "lambda must be a positive number, got '" + value + "'");
                have_lambda = true;
            } else {
                throw ParseError(lineno, "unknown key '" + key + "'");
            }
        }
        if (!have_class || !have_lambda) throw ParseError(lineno, "both class= and lambda= are required");

        if (auto it = class_index.find(label); it == class_index.end()) {
            class_index.emplace(label, static_cast<int>(out.class_labels.size()));
            out.class_labels.push_back(label);
            class_weight.push_back(weight);
        } else if (class_weight[it->second] != weight) {
            throw ParseError(lineno, "class " + label + " was given a different lambda earlier");
        }

        // Braces may touch element names; split them into their own tokens.
        std::string body;
        for (char c : text.substr(colon + 1)) {
            if (c == '{' || c == '}') {
                body += ' ';
                body += c;
                body += ' ';
            } else {
                body += c;
            }
        }
        RawRanking r{lineno, label, {}};
        bool in_group = false;
        for (const auto& tok : split_ws(body)) {
            if (tok == "{") {
                if (in_group) throw ParseError(lineno, "nested '{'");
                in_group = true;
                r.buckets.emplace_back();
            } else if (tok == "}") {
                if (!in_group) throw ParseError(lineno, "unmatched '}'");
                if (r.buckets.back().empty()) throw ParseError(lineno, "empty tie group");
                in_group = false;
            } else {
                auto [it, inserted] = ids.emplace(tok, static_cast<int>(out.element_names.size()) + 1);
                if (inserted) out.element_names.push_back(tok);
                if (in_group)
                    r.buckets.back().push_back(it->second);
                else
                    r.buckets.push_back({it->second});
            }
        }
        if (in_group) throw ParseError(lineno, "unterminated '{'");
        if (r.buckets.empty()) throw ParseError(lineno, "empty ranking");
        raw.push_back(std::move(r));
    }
    if (raw.empty()) throw ParseError(lineno, "no rankings found");

    const int n = static_cast<int>(out.element_names.size());
    out.instance.n = n;
    out.instance.classes.resize(out.class_labels.size());
    for (std::size_t k = 0; k < class_weight.size(); ++k) out.instance.classes[k].weight = class_weight[k];
    for (auto& r : raw) {
        std::vector<bool> seen(n + 1, false);
        int count = 0;
        for (const auto& b : r.buckets)
            for (int x : b) {
                if (seen[x]) throw ParseError(r.line, "element '" + out.name_of(x) + "' listed twice");
                seen[x] = true;
                ++count;
            }
        if (count != n) {
            for (int x = 1; x <= n; ++x)
                if (!seen[x]) throw ParseError(r.line, "ranking is missing element '" + out.name_of(x) + "'");
        }
        out.instance.classes[class_index.at(r.label)].members.push_back(
            PartialRanking::from_buckets(std::move(r.buckets)));
    }
    out.instance.validate();
    return out;
}

ParsedInstance parse_instance_string(const std::string& text) {
    std::istringstream is(text);
    return parse_instance(is);
}

ParsedInstance parse_gene_orders(std::istream& in) {
    ParsedInstance out;
    std::string line;
    int lineno = 0;
    int n = -1;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        auto sep = text.find('\t');
        if (sep == std::string::npos) sep = text.find_first_of(" ");
        if (sep == std::string::npos) throw ParseError(lineno, "expected '<genome>\\t<gene order>'");
        const std::string name = trim(text.substr(0, sep));
        const auto tokens = split_ws(text.substr(sep + 1));
        if (n < 0) n = static_cast<int>(tokens.size());
        if (static_cast<int>(tokens.size()) != n)
            throw ParseError(lineno, "expected " + std::to_string(n) + " gene blocks, found " +
                                         std::to_string(tokens.size()));
        std::vector<int> order;
        std::vector<bool> seen(n + 1, false);
        for (const auto& tok : tokens) {
            long v = 0;
            if (!parse_int(tok, v)) throw ParseError(lineno, "not a signed integer: '" + tok + "'");
            const long block = std::labs(v);
            if (block < 1 || block > n) throw ParseError(lineno, "gene block " + tok + " outside 1.." + std::to_string(n));
            if (seen[block]) throw ParseError(lineno, "gene block " + std::to_string(block) + " repeated");
            seen[block] = true;
            order.push_back(static_cast<int>(block));
        }
        RankingClass cls;
        cls.weight = 1.0;
        cls.members.push_back(PartialRanking::from_permutation(Permutation::from_order(order)));
        out.instance.classes.push_back(std::move(cls));
        out.class_labels.push_back(name);
    }
    if (n <= 0) throw ParseError(lineno, "no genomes found");
    out.instance.n = n;
    for (int x = 1; x <= n; ++x) out.element_names.push_back(std::to_string(x));
    out.instance.validate();
    return out;
}

ParsedInstance read_instance_file(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    std::string fmt = format;
    if (fmt == "auto") fmt = text.find("class=") != std::string::npos ? "instance" : "gene";
    std::istringstream is(text);
    if (fmt == "instance") return parse_instance(is);
    if (fmt == "gene") return parse_gene_orders(is);
    throw ParseError(0, "unknown format '" + format + "'");
}

std::string format_ranking(const PartialRanking& r, const std::vector<std::string>& names) {
    std::string out;
    for (const auto& b : r.buckets()) {
        if (!out.empty()) out += ' ';
        if (b.size() == 1) {
            out += names.at(b.front() - 1);
            continue;
        }
        out += '{';
        for (int x : b) out += ' ' + names.at(x - 1);
        out += " }";
    }
    return out;
}

std::string write_instance(const ParsedInstance& parsed) {
    std::string out = "# elements:";
    for (const auto& name : parsed.element_names) out += ' ' + name;
    out += '\n';
    const auto& classes = parsed.instance.classes;
    for (std::size_t k = 0; k < classes.size(); ++k) {
        const std::string label = k < parsed.class_labels.size() ? parsed.class_labels[k] : std::to_string(k + 1);
        for (const auto& m : classes[k].members)
            out += "class=" + label + " lambda=" + format_double(classes[k].weight) + " : " +
                   format_ranking(m, parsed.element_names) + '\n';
    }
    return out;
}

}  // namespace mmagg
