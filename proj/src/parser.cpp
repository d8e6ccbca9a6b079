#include "nambu/parser.hpp"

#include <cctype>
#include <cstdint>
#include <limits>

namespace nambu {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

enum class TokenKind { integer, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t pos;  // 1-based position in the input
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        current_.pos = i_ + 1;
        if (i_ >= text_.size()) {
            current_.kind = TokenKind::end;
            current_.text.clear();
            return;
        }
        const char ch = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = i_;
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
            current_.kind = TokenKind::integer;
            current_.text = std::string(text_.substr(start, i_ - start));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = i_;
            while (i_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
                ++i_;
            }
            current_.kind = TokenKind::ident;
            current_.text = std::string(text_.substr(start, i_ - start));
            return;
        }
        switch (ch) {
            case '+': current_.kind = TokenKind::plus; break;
            case '-': current_.kind = TokenKind::minus; break;
            case '*': current_.kind = TokenKind::star; break;
            case '/': current_.kind = TokenKind::slash; break;
            case '^': current_.kind = TokenKind::caret; break;
            case '(': current_.kind = TokenKind::lparen; break;
            case ')': current_.kind = TokenKind::rparen; break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'", i_ + 1);
        }
        current_.text = std::string(1, ch);
        ++i_;
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Token current_;
};

class Parser {
  public:
    Parser(std::string_view text, const SpacePtr& space,
           const std::map<std::string, Polynomial>& bindings)
        : lex_(text), space_(space), bindings_(bindings) {}

    Polynomial run() {
        Polynomial p = parse_expr();
        const Token& t = lex_.peek();
        if (t.kind != TokenKind::end) {
            throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
        return p;
    }

  private:
    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        while (true) {
            const TokenKind k = lex_.peek().kind;
            if (k == TokenKind::plus) {
                lex_.take();
                acc += parse_term();
            } else if (k == TokenKind::minus) {
                lex_.take();
                acc -= parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (true) {
            const TokenKind k = lex_.peek().kind;
            if (k == TokenKind::star) {
                lex_.take();
                acc = acc * parse_factor();
            } else if (k == TokenKind::slash) {
                const Token op = lex_.take();
                Polynomial divisor = parse_factor();
                if (divisor.is_zero()) throw ParseError("division by zero", op.pos);
                if (!divisor.is_invertible()) {
                    throw ParseError("division by a non-constant expression", op.pos);
                }
                acc = acc * divisor.inverse();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (lex_.peek().kind != TokenKind::caret) return base;
        lex_.take();
        bool negative = false;
        if (lex_.peek().kind == TokenKind::minus) {
            lex_.take();
            negative = true;
        }
        const Token t = lex_.peek();
        if (t.kind != TokenKind::integer) {
            throw ParseError("expected integer exponent", t.pos);
        }
        lex_.take();
        std::int64_t e = 0;
        for (char ch : t.text) {
            e = e * 10 + (ch - '0');
            if (e > std::numeric_limits<std::int32_t>::max()) {
                throw ParseError("exponent too large", t.pos);
            }
        }
        if (negative) {
            if (base.is_zero()) throw ParseError("zero raised to a negative power", t.pos);
            if (!base.is_invertible()) {
                throw ParseError("negative exponent on a non-invertible expression", t.pos);
            }
            return base.inverse().pow(static_cast<std::int32_t>(e));
        }
        return base.pow(static_cast<std::int32_t>(e));
    }

    Polynomial parse_base() {
        const Token t = lex_.take();
        switch (t.kind) {
            case TokenKind::integer:
                return Polynomial::constant(space_, rational_from_string(t.text));
            case TokenKind::ident: {
                if (auto sym = space_->find(t.text)) {
                    return Polynomial::from_symbol(space_, *sym);
                }
                if (auto it = bindings_.find(t.text); it != bindings_.end()) {
                    return it->second;
                }
                throw ParseError("undeclared identifier '" + t.text + "'", t.pos);
            }
            case TokenKind::lparen: {
                Polynomial inner = parse_expr();
                const Token close = lex_.take();
                if (close.kind != TokenKind::rparen) {
                    throw ParseError("expected ')'", close.pos);
                }
                return inner;
            }
            case TokenKind::minus:
                // Unary minus binds looser than '^': -x^2 = -(x^2).
                return -parse_factor();
            default:
                throw ParseError("unexpected '" + (t.kind == TokenKind::end ? std::string("end of input") : t.text) + "'", t.pos);
        }
    }

    Lexer lex_;
    const SpacePtr& space_;
    const std::map<std::string, Polynomial>& bindings_;
};

}  // namespace

Polynomial parse(std::string_view text, const SpacePtr& space,
                 const std::map<std::string, Polynomial>& bindings) {
    return Parser(text, space, bindings).run();
}

}  // namespace nambu
