#include "lpa/term_parser.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lpa {

namespace {

struct Token {
    enum Kind { Ident, Number, Plus, Minus, Star, Slash, Hash, LParen, RParen, End } kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ >= text_.size()) return {Token::End, ""};
        char c = text_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Plus, "+"};
            case '-': ++pos_; return {Token::Minus, "-"};
            case '*': ++pos_; return {Token::Star, "*"};
            case '/': ++pos_; return {Token::Slash, "/"};
            case '#': ++pos_; return {Token::Hash, "#"};
            case '(': ++pos_; return {Token::LParen, "("};
            case ')': ++pos_; return {Token::RParen, ")"};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return {Token::Number, text_.substr(start, pos_ - start)};
        }
        auto is_ident_char = [](char ch) {
            return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'' ||
                   ch == '[' || ch == ']' || ch == '.';
        };
        if (is_ident_char(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            return {Token::Ident, text_.substr(start, pos_ - start)};
        }
        throw std::invalid_argument(std::string("element syntax: unexpected character '") + c +
                                    "'");
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(const Graph& g, const std::string& text) : graph_(g), lexer_(text) { advance(); }

    LinearCombination parse() {
        LinearCombination result = parse_expr();
        expect(Token::End, "end of input");
        return result;
    }

private:
    void advance() { current_ = lexer_.next(); }
    void expect(Token::Kind kind, const char* what) {
        if (current_.kind != kind)
            throw std::invalid_argument("element syntax: expected " + std::string(what) +
                                        ", got '" + current_.text + "'");
        advance();
    }

    LinearCombination parse_expr() {
        bool negative = false;
        if (current_.kind == Token::Minus) {
            negative = true;
            advance();
        }
        LinearCombination acc = parse_term();
        if (negative) acc = acc.scaled(-1);
        while (current_.kind == Token::Plus || current_.kind == Token::Minus) {
            bool minus = current_.kind == Token::Minus;
            advance();
            LinearCombination term = parse_term();
            acc = minus ? acc - term : acc + term;
        }
        return acc;
    }

    // A term is a juxtaposed product of rational literals and factors.
    LinearCombination parse_term() {
        Rational coeff = 1;
        std::optional<LinearCombination> product;
        bool any = false;
        while (true) {
            if (current_.kind == Token::Number) {
                coeff *= parse_rational();
                any = true;
                continue;
            }
            if (current_.kind == Token::Ident || current_.kind == Token::LParen) {
                LinearCombination factor = parse_factor();
                product = product ? multiply(*product, factor) : factor;
                any = true;
                continue;
            }
            break;
        }
        if (!any)
            throw std::invalid_argument("element syntax: expected a factor, got '" +
                                        current_.text + "'");
        if (!product) {
            if (coeff.is_zero()) return LinearCombination::zero(graph_); // the literal "0"
            throw std::invalid_argument(
                "element syntax: a bare scalar is not an element; multiply it by a vertex "
                "or edge");
        }
        return product->scaled(coeff);
    }

    Rational parse_rational() {
        std::int64_t num = std::stoll(current_.text);
        advance();
        if (current_.kind == Token::Slash) {
            advance();
            if (current_.kind != Token::Number)
                throw std::invalid_argument("element syntax: expected a denominator");
            std::int64_t den = std::stoll(current_.text);
            advance();
            return Rational(num, den);
        }
        return Rational(num);
    }

    LinearCombination parse_factor() {
        LinearCombination base = parse_atom();
        if (current_.kind == Token::Star) {
            advance();
            return involution(base);
        }
        return base;
    }

    LinearCombination parse_atom() {
        if (current_.kind == Token::LParen) {
            advance();
            LinearCombination inner = parse_expr();
            expect(Token::RParen, "')'");
            return inner;
        }
        if (current_.kind != Token::Ident)
            throw std::invalid_argument("element syntax: expected an identifier, got '" +
                                        current_.text + "'");
        std::string name = current_.text;
        advance();
        std::optional<std::uint32_t> index;
        if (current_.kind == Token::Hash) {
            advance();
            if (current_.kind != Token::Number)
                throw std::invalid_argument("element syntax: expected an instance index after #");
            index = static_cast<std::uint32_t>(std::stoul(current_.text));
            advance();
        }

        auto vertex = graph_.find_vertex(name);
        auto cls = graph_.find_class(name);
        if (index) {
            if (!cls)
                throw std::invalid_argument("element syntax: '" + name + "' is not an edge class");
            return LinearCombination::path(graph_, Path::edges(graph_, {{*cls, *index}}));
        }
        if (vertex && cls)
            throw std::invalid_argument("element syntax: '" + name +
                                        "' names both a vertex and an edge; disambiguate with #");
        if (vertex) return LinearCombination::vertex(graph_, *vertex);
        if (cls) return LinearCombination::path(graph_, Path::edges(graph_, {{*cls, 1}}));
        throw std::invalid_argument("element syntax: unknown id '" + name + "'");
    }

    const Graph& graph_;
    Lexer lexer_;
    Token current_;
};

} // namespace

LinearCombination parse_element(const Graph& g, const std::string& text) {
    return Parser(g, text).parse();
}

} // namespace lpa
