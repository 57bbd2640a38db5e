#include <cctype>

#include "mantra/formats.hpp"

namespace mantra {

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char take() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek())))
            take();
    }

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
};

long long parse_int(Cursor& in) {
    in.skip_ws();
    bool neg = false;
    if (!in.done() && (in.peek() == '-' || in.peek() == '+')) {
        neg = in.peek() == '-';
        in.take();
    }
    if (in.done() || !std::isdigit(static_cast<unsigned char>(in.peek())))
        throw NonIntegerVertexError(in.line(), in.col());
    long long value = 0;
    while (!in.done() && std::isdigit(static_cast<unsigned char>(in.peek())))
        value = value * 10 + (in.take() - '0');
    return neg ? -value : value;
}

std::vector<int> parse_facet(Cursor& in) {
    in.skip_ws();
    if (in.done() || in.peek() != '[')
        throw LexSyntaxError(in.line(), in.col(), "expected '['");
    in.take();
    std::vector<int> facet;
    for (;;) {
        long long v = parse_int(in);
        facet.push_back(static_cast<int>(v));
        in.skip_ws();
        if (in.done()) throw UnbalancedBracketsError(in.line(), in.col());
        char c = in.take();
        if (c == ']') return facet;
        if (c != ',')
            throw LexSyntaxError(in.line(), in.col(), "expected ',' or ']'");
    }
}

std::vector<std::vector<int>> parse_facet_list(Cursor& in) {
    in.skip_ws();
    if (in.done() || in.peek() != '[')
        throw LexSyntaxError(in.line(), in.col(), "expected '[' after '='");
    in.take();
    std::vector<std::vector<int>> facets;
    in.skip_ws();
    if (!in.done() && in.peek() == ']') {
        in.take();
        return facets;
    }
    for (;;) {
        facets.push_back(parse_facet(in));
        in.skip_ws();
        if (in.done()) throw UnbalancedBracketsError(in.line(), in.col());
        char c = in.take();
        if (c == ']') return facets;
        if (c != ',')
            throw LexSyntaxError(in.line(), in.col(), "expected ',' or ']'");
    }
}

}  // namespace

std::vector<std::pair<std::string, std::vector<std::vector<int>>>>
parse_lexicographical(const std::string& text) {
    std::vector<std::pair<std::string, std::vector<std::vector<int>>>> out;
    Cursor in(text);
    for (;;) {
        in.skip_ws();
        if (in.done()) break;

        std::string id;
        while (!in.done() && in.peek() != '=' && in.peek() != '\n')
            id += in.take();
        if (in.done() || in.peek() != '=')
            throw LexSyntaxError(in.line(), in.col(), "expected '=' after id");
        in.take();
        // Ids are preserved verbatim up to surrounding whitespace.
        while (!id.empty() && std::isspace(static_cast<unsigned char>(id.back())))
            id.pop_back();
        if (id.empty())
            throw LexSyntaxError(in.line(), in.col(), "empty id before '='");

        out.emplace_back(std::move(id), parse_facet_list(in));
    }
    return out;
}

}  // namespace mantra
