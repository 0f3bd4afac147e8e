#include <cctype>
#include <string>
#include <vector>

#include "gint/error.hpp"
#include "gint/expr.hpp"

namespace gint {

namespace {

enum class Tok { Integer, Ident, Imag, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_blanks_and_comments();
            if (pos_ >= src_.size()) {
                out.push_back(Token{Tok::End, "", line_, col_});
                return out;
            }
            const std::size_t line = line_;
            const std::size_t col = col_;
            const char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string digits;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    digits += take();
                out.push_back(Token{Tok::Integer, std::move(digits), line, col});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string name;
                while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                              src_[pos_] == '_'))
                    name += take();
                out.push_back(Token{name == "i" ? Tok::Imag : Tok::Ident, std::move(name), line, col});
                continue;
            }
            switch (c) {
                case '+': out.push_back(Token{Tok::Plus, "+", line, col}); break;
                case '-': out.push_back(Token{Tok::Minus, "-", line, col}); break;
                case '*': out.push_back(Token{Tok::Star, "*", line, col}); break;
                case '^': out.push_back(Token{Tok::Caret, "^", line, col}); break;
                case '(': out.push_back(Token{Tok::LParen, "(", line, col}); break;
                case ')': out.push_back(Token{Tok::RParen, ")", line, col}); break;
                default:
                    throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
            }
            take();
        }
    }

  private:
    char take() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_blanks_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') take();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                take();
            } else {
                return;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Expr run() {
        Expr e = parse_expr();
        expect(Tok::End, "end of input");
        return e;
    }

  private:
    const Token& peek() const { return tokens_[pos_]; }

    Token advance() { return tokens_[pos_++]; }

    bool match(Tok kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    void expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) fail("expected " + what);
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& message) const {
        const Token& t = peek();
        std::string got = t.kind == Tok::End ? "end of input" : "\"" + t.text + "\"";
        throw SyntaxError(t.line, t.column, message + ", got " + got);
    }

    // expr := term (('+'|'-') term)*
    Expr parse_expr() {
        std::vector<Expr> children;
        children.push_back(parse_term());
        while (true) {
            if (match(Tok::Plus)) {
                children.push_back(parse_term());
            } else if (match(Tok::Minus)) {
                children.push_back(Expr::negate(parse_term()));
            } else {
                break;
            }
        }
        return Expr::sum(std::move(children));
    }

    // term := factor ('*' factor)*
    Expr parse_term() {
        std::vector<Expr> children;
        children.push_back(parse_factor());
        while (match(Tok::Star)) children.push_back(parse_factor());
        return Expr::product(std::move(children));
    }

    // factor := atom ('^' nat)?
    Expr parse_factor() {
        Expr base = parse_atom();
        if (!match(Tok::Caret)) return base;
        if (peek().kind != Tok::Integer) fail("expected a natural number exponent after '^'");
        const Token t = advance();
        std::uint64_t e = 0;
        for (char c : t.text) {
            if (e > (UINT64_MAX - 9) / 10)
                throw SyntaxError(t.line, t.column, "exponent does not fit in 64 bits");
            e = e * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return Expr::power(std::move(base), e);
    }

    // atom := int | 'i' | ident | '(' expr ')' | '-' atom
    Expr parse_atom() {
        if (match(Tok::Minus)) return Expr::negate(parse_atom());
        switch (peek().kind) {
            case Tok::Integer:
                return Expr::constant(GaussianInt(Int(advance().text)));
            case Tok::Imag:
                advance();
                return Expr::constant(GaussianInt::unit_i());
            case Tok::Ident:
                return Expr::variable(advance().text);
            case Tok::LParen: {
                advance();
                Expr e = parse_expr();
                expect(Tok::RParen, "')'");
                return e;
            }
            default:
                fail("expected an integer, 'i', an identifier, '(' or '-'");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(Lexer(text).run()).run(); }

}  // namespace gint
