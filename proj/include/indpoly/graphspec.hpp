#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "indpoly/graph.hpp"
#include "indpoly/graph6.hpp"

namespace indpoly {

// GraphSpec mini-language:
//
//   expr    := INT '*' primary | primary
//   primary := FAMILY '(' INT ')'
//            | 'union'  '(' expr ',' expr ')'
//            | 'corona' '(' expr ',' expr ')'
//            | '(' expr ')'
//            | '@' PATH
//   FAMILY  := 'C' | 'K' | 'P' | 'Star' | 'Empty'
//
// m*a builds the disjoint union of m copies of a; corona(a,b) is the
// uniform corona a∘b; @PATH loads a graph file (edge list or graph6, see
// read_graph_file). PATH extends to the next ',', ')' or whitespace.
class GraphSpecParser {
  public:
    explicit GraphSpecParser(std::string_view text) : text_(text) {}

    Graph parse() {
        Graph g = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return g;
    }

  private:
    Graph expr() {
        skip_space();
        if (pos_ < text_.size() && std::isdigit(peek())) {
            std::size_t save = pos_;
            long long m = integer();
            skip_space();
            if (pos_ < text_.size() && peek() == '*') {
                ++pos_;
                if (m < 0 || m > Graph::max_vertices) fail("copy count out of range");
                Graph base = primary();
                Graph out = empty_graph(0);
                for (long long i = 0; i < m; ++i) out = disjoint_union(out, base);
                return out;
            }
            pos_ = save;  // bare integer is not a graph
            fail("expected '*' after integer");
        }
        return primary();
    }

    Graph primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of spec");
        char c = peek();
        if (c == '(') {
            ++pos_;
            Graph g = expr();
            expect(')');
            return g;
        }
        if (c == '@') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < text_.size() && peek() != ',' && peek() != ')' &&
                   !std::isspace(static_cast<unsigned char>(peek())))
                ++pos_;
            if (pos_ == start) fail("empty file path after '@'");
            return read_graph_file(std::string(text_.substr(start, pos_ - start)));
        }
        std::string name = identifier();
        if (name == "union" || name == "corona") {
            expect('(');
            Graph a = expr();
            expect(',');
            Graph b = expr();
            expect(')');
            return name == "union" ? disjoint_union(a, b) : corona(a, b);
        }
        expect('(');
        long long n = integer();
        expect(')');
        if (n > Graph::max_vertices) fail("order exceeds the 64-vertex limit");
        int k = static_cast<int>(n);
        if (name == "C") return cycle(k);
        if (name == "K") return complete(k);
        if (name == "P") return path(k);
        if (name == "Star") return star(k);
        if (name == "Empty") return empty_graph(k);
        fail("unknown family '" + name + "'");
    }

    char peek() const { return text_[pos_]; }

    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string identifier() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
            ++pos_;
        if (pos_ == start) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    long long integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == start) fail("expected an integer");
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("graph spec: " + why + " at position " +
                                    std::to_string(pos_) + " in '" +
                                    std::string(text_) + "'");
    }

    std::string_view text_;
    std::size_t pos_{0};
};

inline Graph parse_graph_spec(std::string_view text) {
    return GraphSpecParser(text).parse();
}

// CLI-facing graph argument: "g6:<line>" is raw graph6, "@path" loads a
// file, anything else is a GraphSpec expression.
inline Graph parse_graph_argument(const std::string& arg) {
    if (arg.rfind("g6:", 0) == 0) return parse_graph6(std::string_view(arg).substr(3));
    if (!arg.empty() && arg[0] == '@') return read_graph_file(arg.substr(1));
    return parse_graph_spec(arg);
}

}  // namespace indpoly
