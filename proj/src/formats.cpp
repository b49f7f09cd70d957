#include "bimax/formats.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace bimax {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

GraphFormat parse_format_name(std::string_view name) {
    if (name == "edge-list") return GraphFormat::edge_list;
    if (name == "biadjacency") return GraphFormat::biadjacency;
    if (name == "dot") return GraphFormat::dot;
    throw std::invalid_argument("unknown graph format: " + std::string(name));
}

std::string format_name(GraphFormat f) {
    switch (f) {
        case GraphFormat::edge_list: return "edge-list";
        case GraphFormat::biadjacency: return "biadjacency";
        case GraphFormat::dot: return "dot";
    }
    return "?";
}

namespace {

std::string header_line(const BipartiteGraph& g) {
    return "n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m()) +
           " k=" + std::to_string(g.x_size());
}

std::string serialize_edge_list(const BipartiteGraph& g) {
    std::string out = header_line(g);
    out += '\n';
    for (int x = 0; x < g.x_size(); ++x) {
        for (int y = 0; y < g.y_size(); ++y) {
            if (g.edge(x, y)) {
                out += std::to_string(x);
                out += ' ';
                out += std::to_string(g.x_size() + y);
                out += '\n';
            }
        }
    }
    return out;
}

std::string serialize_biadjacency(const BipartiteGraph& g) {
    std::string out = header_line(g);
    out += '\n';
    for (int y = 0; y < g.y_size(); ++y) {
        for (int x = 0; x < g.x_size(); ++x) out += g.edge(x, y) ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string serialize_dot(const BipartiteGraph& g) {
    std::string out = "graph G {\n";
    out += "  subgraph cluster_X {\n    label=\"X\";\n";
    for (int x = 0; x < g.x_size(); ++x) out += "    x" + std::to_string(x) + ";\n";
    out += "  }\n";
    out += "  subgraph cluster_Y {\n    label=\"Y\";\n";
    for (int y = 0; y < g.y_size(); ++y) out += "    y" + std::to_string(y) + ";\n";
    out += "  }\n";
    for (int x = 0; x < g.x_size(); ++x) {
        for (int y = 0; y < g.y_size(); ++y) {
            if (g.edge(x, y)) out += "  x" + std::to_string(x) + " -- y" + std::to_string(y) + ";\n";
        }
    }
    out += "}\n";
    return out;
}

// Line-oriented scanning for the header formats.
struct Lines {
    std::vector<std::string_view> rows;

    explicit Lines(std::string_view text) {
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t nl = text.find('\n', pos);
            if (nl == std::string_view::npos) {
                rows.push_back(text.substr(pos));
                break;
            }
            rows.push_back(text.substr(pos, nl - pos));
            pos = nl + 1;
        }
        // ignore trailing blank lines
        while (!rows.empty() && rows.back().find_first_not_of(" \t\r") == std::string_view::npos)
            rows.pop_back();
    }
};

long long parse_int(std::string_view s, int line, int col) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(line, col, "expected an integer, got '" + std::string(s) + "'");
    return value;
}

struct Header {
    long long n, m, k;
};

Header parse_header(std::string_view row, int line) {
    std::vector<std::pair<std::string_view, int>> fields;
    std::size_t pos = 0;
    while (pos < row.size()) {
        while (pos < row.size() && (row[pos] == ' ' || row[pos] == '\r')) ++pos;
        if (pos >= row.size()) break;
        std::size_t end = row.find(' ', pos);
        if (end == std::string_view::npos) end = row.size();
        fields.emplace_back(row.substr(pos, end - pos), static_cast<int>(pos) + 1);
        pos = end;
    }
    const char* names[3] = {"n=", "m=", "k="};
    if (fields.size() != 3)
        throw ParseError(line, 1, "header must be 'n=<n> m=<m> k=<k>'");
    long long vals[3];
    for (int i = 0; i < 3; ++i) {
        auto [field, col] = fields[i];
        if (field.substr(0, 2) != names[i])
            throw ParseError(line, col, std::string("expected '") + names[i] + "...' in header");
        vals[i] = parse_int(field.substr(2), line, col + 2);
    }
    Header h{vals[0], vals[1], vals[2]};
    if (h.n < 2) throw ParseError(line, 1, "header requires n >= 2");
    if (h.k < 1 || h.k > h.n - 1)
        throw ParseError(line, 1, "header requires 1 <= k <= n-1");
    if (h.m < 0 || h.m > h.k * (h.n - h.k))
        throw ParseError(line, 1, "header edge count exceeds k*(n-k)");
    return h;
}

BipartiteGraph parse_edge_list(std::string_view text) {
    Lines lines(text);
    if (lines.rows.empty()) throw ParseError(1, 1, "empty input");
    Header h = parse_header(lines.rows[0], 1);
    BipartiteGraph g(static_cast<int>(h.k), static_cast<int>(h.n - h.k));
    for (std::size_t i = 1; i < lines.rows.size(); ++i) {
        int line = static_cast<int>(i) + 1;
        std::string_view row = lines.rows[i];
        while (!row.empty() && (row.back() == '\r' || row.back() == ' ')) row.remove_suffix(1);
        std::size_t sp = row.find(' ');
        if (sp == std::string_view::npos)
            throw ParseError(line, 1, "edge line must be '<u> <v>'");
        long long u = parse_int(row.substr(0, sp), line, 1);
        long long v = parse_int(row.substr(sp + 1), line, static_cast<int>(sp) + 2);
        if (u < 0 || u >= h.k)
            throw ParseError(line, 1, "edge endpoint " + std::to_string(u) + " outside X (0.." +
                                          std::to_string(h.k - 1) + ")");
        if (v < h.k || v >= h.n)
            throw ParseError(line, static_cast<int>(sp) + 2,
                             "edge endpoint " + std::to_string(v) + " outside Y (" +
                                 std::to_string(h.k) + ".." + std::to_string(h.n - 1) + ")");
        int x = static_cast<int>(u), y = static_cast<int>(v - h.k);
        if (g.edge(x, y)) throw ParseError(line, 1, "duplicate edge");
        g.set_edge(x, y, true);
    }
    if (g.m() != h.m)
        throw ParseError(static_cast<int>(lines.rows.size()), 1,
                         "header declares m=" + std::to_string(h.m) + " but " +
                             std::to_string(g.m()) + " edge lines are present");
    return g;
}

BipartiteGraph parse_biadjacency(std::string_view text) {
    Lines lines(text);
    if (lines.rows.empty()) throw ParseError(1, 1, "empty input");
    Header h = parse_header(lines.rows[0], 1);
    int k = static_cast<int>(h.k), ny = static_cast<int>(h.n - h.k);
    if (static_cast<int>(lines.rows.size()) - 1 != ny)
        throw ParseError(static_cast<int>(lines.rows.size()), 1,
                         "expected " + std::to_string(ny) + " biadjacency rows, got " +
                             std::to_string(lines.rows.size() - 1));
    BipartiteGraph g(k, ny);
    for (int y = 0; y < ny; ++y) {
        int line = y + 2;
        std::string_view row = lines.rows[y + 1];
        while (!row.empty() && row.back() == '\r') row.remove_suffix(1);
        if (static_cast<int>(row.size()) != k)
            throw ParseError(line, 1, "row must have exactly " + std::to_string(k) + " characters");
        for (int x = 0; x < k; ++x) {
            if (row[x] == '1')
                g.set_edge(x, y, true);
            else if (row[x] != '0')
                throw ParseError(line, x + 1, "biadjacency rows may contain only '0' and '1'");
        }
    }
    if (g.m() != h.m)
        throw ParseError(1, 1, "header declares m=" + std::to_string(h.m) + " but rows contain " +
                                   std::to_string(g.m()) + " ones");
    return g;
}

// Minimal tokenizer for the DOT subset emitted by serialize().
struct DotToken {
    enum Kind { ident, string, punct, edge_op, eof } kind;
    std::string text;
    int line, col;
};

class DotLexer {
public:
    explicit DotLexer(std::string_view text) : text_(text) {}

    DotToken next() {
        skip_space();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {DotToken::eof, "", line, col};
        char c = text_[pos_];
        if (c == '{' || c == '}' || c == ';' || c == '=') {
            advance();
            return {DotToken::punct, std::string(1, c), line, col};
        }
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
            advance();
            advance();
            return {DotToken::edge_op, "--", line, col};
        }
        if (c == '"') {
            advance();
            std::string s;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                s += text_[pos_];
                advance();
            }
            if (pos_ >= text_.size()) throw ParseError(line, col, "unterminated string");
            advance();
            return {DotToken::string, s, line, col};
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                s += text_[pos_];
                advance();
            }
            return {DotToken::ident, s, line, col};
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }

private:
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class DotParser {
public:
    explicit DotParser(std::string_view text) : lexer_(text) { tok_ = lexer_.next(); }

    BipartiteGraph parse() {
        expect_ident("graph");
        if (tok_.kind == DotToken::ident) consume();  // optional graph name
        expect_punct("{");
        std::vector<int> xs, ys;
        std::vector<std::pair<int, int>> edges;
        while (!(tok_.kind == DotToken::punct && tok_.text == "}")) {
            if (tok_.kind == DotToken::ident && tok_.text == "subgraph") {
                consume();
                DotToken name = tok_;
                if (tok_.kind != DotToken::ident ||
                    (name.text != "cluster_X" && name.text != "cluster_Y"))
                    throw ParseError(name.line, name.col, "expected cluster_X or cluster_Y");
                consume();
                parse_cluster(name.text == "cluster_X" ? xs : ys,
                              name.text == "cluster_X" ? 'x' : 'y');
            } else if (tok_.kind == DotToken::ident) {
                DotToken lhs = tok_;
                int u = node_index(lhs, 'x');
                consume();
                if (tok_.kind != DotToken::edge_op)
                    throw ParseError(tok_.line, tok_.col, "expected '--'");
                consume();
                DotToken rhs = tok_;
                int v = node_index(rhs, 'y');
                consume();
                expect_punct(";");
                edges.emplace_back(u, v);
            } else {
                throw ParseError(tok_.line, tok_.col, "expected a subgraph, an edge, or '}'");
            }
        }
        consume();  // final '}'
        if (tok_.kind != DotToken::eof)
            throw ParseError(tok_.line, tok_.col, "trailing content after closing '}'");
        return build(xs, ys, edges);
    }

private:
    void parse_cluster(std::vector<int>& nodes, char prefix) {
        expect_punct("{");
        while (!(tok_.kind == DotToken::punct && tok_.text == "}")) {
            if (tok_.kind != DotToken::ident)
                throw ParseError(tok_.line, tok_.col, "expected a node or attribute");
            DotToken head = tok_;
            consume();
            if (tok_.kind == DotToken::punct && tok_.text == "=") {
                consume();  // attribute like label="X"
                if (tok_.kind != DotToken::string && tok_.kind != DotToken::ident)
                    throw ParseError(tok_.line, tok_.col, "expected an attribute value");
                consume();
            } else {
                nodes.push_back(node_index(head, prefix));
            }
            expect_punct(";");
        }
        consume();  // '}'
    }

    int node_index(const DotToken& t, char prefix) {
        if (t.kind != DotToken::ident || t.text.size() < 2 || t.text[0] != prefix)
            throw ParseError(t.line, t.col,
                             std::string("expected a node named ") + prefix + "<index>");
        return static_cast<int>(parse_int(std::string_view(t.text).substr(1), t.line, t.col + 1));
    }

    BipartiteGraph build(const std::vector<int>& xs, const std::vector<int>& ys,
                         const std::vector<std::pair<int, int>>& edges) {
        auto contiguous = [](const std::vector<int>& v) {
            std::vector<bool> seen(v.size(), false);
            for (int i : v) {
                if (i < 0 || i >= static_cast<int>(v.size()) || seen[i]) return false;
                seen[i] = true;
            }
            return true;
        };
        if (xs.empty() || !contiguous(xs))
            throw ParseError(1, 1, "cluster_X must declare nodes x0..x<k-1> exactly once each");
        if (ys.empty() || !contiguous(ys))
            throw ParseError(1, 1, "cluster_Y must declare nodes y0..y<j-1> exactly once each");
        BipartiteGraph g(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
        for (auto [u, v] : edges) {
            if (u >= g.x_size()) throw ParseError(1, 1, "edge references undeclared x" + std::to_string(u));
            if (v >= g.y_size()) throw ParseError(1, 1, "edge references undeclared y" + std::to_string(v));
            if (g.edge(u, v)) throw ParseError(1, 1, "duplicate edge");
            g.set_edge(u, v, true);
        }
        return g;
    }

    void expect_ident(const std::string& s) {
        if (tok_.kind != DotToken::ident || tok_.text != s)
            throw ParseError(tok_.line, tok_.col, "expected '" + s + "'");
        consume();
    }
    void expect_punct(const std::string& s) {
        if (tok_.kind != DotToken::punct || tok_.text != s)
            throw ParseError(tok_.line, tok_.col, "expected '" + s + "'");
        consume();
    }
    void consume() { tok_ = lexer_.next(); }

    DotLexer lexer_;
    DotToken tok_;
};

}  // namespace

std::string serialize(const BipartiteGraph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::edge_list: return serialize_edge_list(g);
        case GraphFormat::biadjacency: return serialize_biadjacency(g);
        case GraphFormat::dot: return serialize_dot(g);
    }
    throw std::invalid_argument("unknown graph format");
}

BipartiteGraph parse(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::edge_list: return parse_edge_list(text);
        case GraphFormat::biadjacency: return parse_biadjacency(text);
        case GraphFormat::dot: return DotParser(text).parse();
    }
    throw std::invalid_argument("unknown graph format");
}

}  // namespace bimax
