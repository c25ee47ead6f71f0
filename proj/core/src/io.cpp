// SPDX-License-Identifier: Apache-2.0
#include "fsmcov/io.hpp"

#include <cctype>
#include <optional>

#include "json.hpp"

namespace fsmcov {

using nlohmann::json;

namespace {

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
        throw SchemaError("document is not well-formed JSON");
    }
    return doc;
}

std::vector<std::string> string_array(const json& doc, const std::string& key) {
    if (!doc.contains(key) || !doc[key].is_array()) {
        throw SchemaError("missing or non-array key '" + key + "'");
    }
    std::vector<std::string> out;
    for (const auto& item : doc[key]) {
        if (!item.is_string()) {
            throw SchemaError("'" + key + "' must contain only strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::string string_field(const json& doc, const std::string& key) {
    if (!doc.contains(key) || !doc[key].is_string()) {
        throw SchemaError("missing or non-string key '" + key + "'");
    }
    return doc[key].get<std::string>();
}

}  // namespace

FsmGraph parse_graph_json(const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object()) {
        throw SchemaError("graph document must be a JSON object");
    }
    auto vertices = string_array(doc, "vertices");
    auto ends = string_array(doc, "ends");
    auto start = string_field(doc, "start");

    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw SchemaError("missing or non-array key 'edges'");
    }
    std::vector<Edge> edges;
    for (const auto& item : doc["edges"]) {
        if (!item.is_object()) {
            throw SchemaError("every edge must be a JSON object");
        }
        Edge e;
        e.id = string_field(item, "id");
        e.source = string_field(item, "from");
        e.target = string_field(item, "to");
        bool has_input = item.contains("input");
        bool has_output = item.contains("output");
        if (has_input != has_output) {
            throw ModelError("edge '" + e.id + "' carries only half of an input/output pair");
        }
        if (has_input) {
            e.input = string_field(item, "input");
            e.output = string_field(item, "output");
        }
        edges.push_back(std::move(e));
    }
    return FsmGraph::create(std::move(vertices), std::move(edges), std::move(start),
                            std::move(ends));
}

std::string graph_to_json(const FsmGraph& g, int indent) {
    json doc;
    doc["vertices"] = g.vertices();
    doc["start"] = g.start();
    doc["ends"] = g.ends();
    json edges = json::array();
    for (const Edge& e : g.edges()) {
        json item;
        item["id"] = e.id;
        item["from"] = e.source;
        item["to"] = e.target;
        if (e.labeled()) {
            item["input"] = *e.input;
            item["output"] = *e.output;
        }
        edges.push_back(std::move(item));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(indent);
}

// --- DOT subset ------------------------------------------------------------

namespace {

struct DotToken {
    enum Kind { Id, Symbol, End } kind = End;
    std::string text;
};

class DotLexer {
public:
    explicit DotLexer(const std::string& text) : text_(text) {}

    DotToken next() {
        skip_space();
        if (pos_ >= text_.size()) return {DotToken::End, ""};
        char c = text_[pos_];
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            pos_ += 2;
            return {DotToken::Symbol, "->"};
        }
        if (c == '{' || c == '}' || c == '[' || c == ']' || c == '=' || c == ';' || c == ',') {
            ++pos_;
            return {DotToken::Symbol, std::string(1, c)};
        }
        if (c == '"') {
            ++pos_;
            std::string value;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
                value += text_[pos_++];
            }
            if (pos_ >= text_.size()) throw SchemaError("unterminated string literal");
            ++pos_;
            return {DotToken::Id, value};
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
            std::string value;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.') {
                    value += d;
                    ++pos_;
                } else {
                    break;
                }
            }
            return {DotToken::Id, value};
        }
        throw SchemaError(std::string("unexpected character '") + c + "' in DOT input");
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
};

using AttrList = std::vector<std::pair<std::string, std::string>>;

AttrList parse_attrs(DotLexer& lex, DotToken& tok) {
    AttrList attrs;
    if (tok.kind != DotToken::Symbol || tok.text != "[") return attrs;
    tok = lex.next();
    while (!(tok.kind == DotToken::Symbol && tok.text == "]")) {
        if (tok.kind != DotToken::Id) throw SchemaError("expected attribute name");
        std::string key = tok.text;
        tok = lex.next();
        if (tok.kind != DotToken::Symbol || tok.text != "=") {
            throw SchemaError("expected '=' after attribute '" + key + "'");
        }
        tok = lex.next();
        if (tok.kind != DotToken::Id) throw SchemaError("expected attribute value");
        attrs.emplace_back(key, tok.text);
        tok = lex.next();
        if (tok.kind == DotToken::Symbol && tok.text == ",") tok = lex.next();
    }
    tok = lex.next();  // consume ']'
    return attrs;
}

}  // namespace

FsmGraph parse_graph_dot(const std::string& text) {
    DotLexer lex(text);
    DotToken tok = lex.next();
    if (tok.kind != DotToken::Id || tok.text != "digraph") {
        throw SchemaError("expected 'digraph'");
    }
    tok = lex.next();
    if (tok.kind == DotToken::Id) tok = lex.next();  // optional graph name
    if (tok.kind != DotToken::Symbol || tok.text != "{") {
        throw SchemaError("expected '{'");
    }

    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::optional<std::string> start;
    std::vector<std::string> ends;
    auto note_vertex = [&](const std::string& v) { vertices.push_back(v); };

    tok = lex.next();
    while (!(tok.kind == DotToken::Symbol && tok.text == "}")) {
        if (tok.kind == DotToken::Symbol && tok.text == ";") {
            tok = lex.next();
            continue;
        }
        if (tok.kind != DotToken::Id) {
            throw SchemaError("expected node or edge statement");
        }
        std::string lhs = tok.text;
        note_vertex(lhs);
        tok = lex.next();
        if (tok.kind == DotToken::Symbol && tok.text == "->") {
            tok = lex.next();
            if (tok.kind != DotToken::Id) throw SchemaError("expected edge target");
            std::string rhs = tok.text;
            note_vertex(rhs);
            tok = lex.next();
            if (tok.kind == DotToken::Symbol && tok.text == "->") {
                throw SchemaError("chained edge statements are not supported");
            }
            AttrList attrs = parse_attrs(lex, tok);
            Edge e;
            e.source = lhs;
            e.target = rhs;
            for (const auto& [key, value] : attrs) {
                if (key == "id") {
                    e.id = value;
                } else if (key == "label") {
                    auto slash = value.find('/');
                    if (slash == std::string::npos) {
                        throw SchemaError("edge label '" + value + "' is not an input/output pair");
                    }
                    e.input = value.substr(0, slash);
                    e.output = value.substr(slash + 1);
                }
            }
            if (e.id.empty()) {
                throw SchemaError("edge " + lhs + " -> " + rhs + " has no id attribute");
            }
            edges.push_back(std::move(e));
        } else {
            AttrList attrs = parse_attrs(lex, tok);
            for (const auto& [key, value] : attrs) {
                if (key == "start" && value == "true") {
                    if (start.has_value()) {
                        throw ModelError("more than one vertex is annotated start=true");
                    }
                    start = lhs;
                } else if (key == "end" && value == "true") {
                    ends.push_back(lhs);
                }
            }
        }
        if (tok.kind == DotToken::Symbol && tok.text == ";") tok = lex.next();
    }
    if (!start.has_value()) {
        throw ModelError("no vertex is annotated start=true");
    }
    return FsmGraph::create(std::move(vertices), std::move(edges), *start, std::move(ends));
}

// --- Suites ----------------------------------------------------------------

TestSuite parse_suite_json(const FsmGraph& g, const std::string& text) {
    json doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("paths") || !doc["paths"].is_array()) {
        throw SchemaError("suite document must be an object with a 'paths' array");
    }
    TestSuite suite;
    for (const auto& item : doc["paths"]) {
        if (!item.is_array()) {
            throw SchemaError("every suite path must be an array of edge ids");
        }
        Path p;
        for (const auto& id : item) {
            if (!id.is_string()) {
                throw SchemaError("edge ids must be strings");
            }
            p.edges.push_back(id.get<std::string>());
        }
        require_valid_path(g, p);
        suite.paths.push_back(std::move(p));
    }
    return suite;
}

std::string suite_to_json(const TestSuite& suite, int indent) {
    TestSuite canon = suite.canonical();
    json doc;
    json paths = json::array();
    for (const Path& p : canon.paths) paths.push_back(p.edges);
    doc["paths"] = std::move(paths);
    return doc.dump(indent);
}

}  // namespace fsmcov
