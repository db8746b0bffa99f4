#include "wedgelab/parser.hpp"

#include <cctype>

namespace wedgelab {

namespace {

struct Token {
    enum class Type { number, variable, plus, minus, times, caret, slash, lparen, rparen, end };
    Type type = Type::end;
    std::size_t position = 0;  // 1-based
    Integer value;             // number
    Variable var;              // variable
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
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_ = Token{};
        current_.position = pos_ + 1;
        if (pos_ >= text_.size()) {
            current_.type = Token::Type::end;
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            current_.type = Token::Type::number;
            current_.value = Integer(std::string(text_.substr(start, pos_ - start)), 10);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            std::string base(text_.substr(start, pos_ - start));
            current_.type = Token::Type::variable;
            if (pos_ + 1 < text_.size() && text_[pos_] == '_' && text_[pos_ + 1] == '(') {
                pos_ += 2;
                int first = lex_superscript();
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    int second = lex_superscript();
                    expect_char(')');
                    current_.var = Variable::wedge(std::move(base), first, second);
                } else {
                    expect_char(')');
                    current_.var = Variable::jet(std::move(base), first);
                }
            } else {
                current_.var = Variable::plain(std::move(base));
            }
            return;
        }
        switch (c) {
            case '+': current_.type = Token::Type::plus; break;
            case '-': current_.type = Token::Type::minus; break;
            case '*': current_.type = Token::Type::times; break;
            case '^': current_.type = Token::Type::caret; break;
            case '/': current_.type = Token::Type::slash; break;
            case '(': current_.type = Token::Type::lparen; break;
            case ')': current_.type = Token::Type::rparen; break;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", pos_ + 1);
        }
        ++pos_;
    }

    int lex_superscript() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected a superscript index", pos_ + 1);
        long n = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            n = n * 10 + (text_[pos_] - '0');
            if (n > 1'000'000) throw parse_error("superscript index too large", pos_ + 1);
            ++pos_;
        }
        return static_cast<int>(n);
    }

    void expect_char(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw parse_error(std::string("expected '") + c + "'", pos_ + 1);
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
  public:
    Parser(std::string_view text, const VariableTable& table) : lexer_(text), table_(table) {}

    Polynomial run() {
        Polynomial p = expression();
        if (lexer_.peek().type != Token::Type::end)
            throw parse_error("unexpected trailing input", lexer_.peek().position);
        return p;
    }

  private:
    Polynomial expression() {
        bool negate = false;
        if (lexer_.peek().type == Token::Type::plus) {
            lexer_.take();
        } else if (lexer_.peek().type == Token::Type::minus) {
            lexer_.take();
            negate = true;
        }
        Polynomial p = term();
        if (negate) p = -p;
        while (lexer_.peek().type == Token::Type::plus ||
               lexer_.peek().type == Token::Type::minus) {
            const bool minus = lexer_.take().type == Token::Type::minus;
            Polynomial q = term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (lexer_.peek().type == Token::Type::times) {
            lexer_.take();
            p *= factor();
        }
        return p;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (lexer_.peek().type == Token::Type::caret) {
            lexer_.take();
            Token t = lexer_.peek();
            if (t.type != Token::Type::number)
                throw parse_error("expected a nonnegative integer exponent", t.position);
            lexer_.take();
            if (t.value < 0 || t.value > 10'000)
                throw parse_error("exponent out of range", t.position);
            base = base.pow(static_cast<int>(t.value.get_si()));
        }
        return base;
    }

    Polynomial atom() {
        Token t = lexer_.peek();
        switch (t.type) {
            case Token::Type::number: {
                lexer_.take();
                Rational c(t.value);
                if (lexer_.peek().type == Token::Type::slash) {
                    lexer_.take();
                    Token d = lexer_.peek();
                    if (d.type != Token::Type::number)
                        throw parse_error("expected an integer denominator", d.position);
                    lexer_.take();
                    if (d.value == 0) throw parse_error("zero denominator", d.position);
                    c = Rational(t.value, d.value);
                    c.canonicalize();
                }
                return Polynomial::constant(c);
            }
            case Token::Type::variable: {
                lexer_.take();
                if (!table_.contains(t.var))
                    throw parse_error("unknown variable '" + t.var.name() + "'", t.position);
                return Polynomial::variable(t.var);
            }
            case Token::Type::lparen: {
                lexer_.take();
                Polynomial p = expression();
                if (lexer_.peek().type != Token::Type::rparen)
                    throw parse_error("expected ')'", lexer_.peek().position);
                lexer_.take();
                return p;
            }
            default:
                throw parse_error("expected a number, variable, or '('", t.position);
        }
    }

    Lexer lexer_;
    const VariableTable& table_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableTable& table) {
    return Parser(text, table).run();
}

}  // namespace wedgelab
