#include "twistlab/expr.hpp"

#include <cctype>
#include <utility>

namespace twistlab {

namespace {

enum class Tok {
    lbracket,
    rbracket,
    lparen,
    rparen,
    pipe,
    semi,
    star,
    at,
    inv,
    plus,
    minus,
    slash,
    number,
    ident,
    end,
};

struct Token {
    Tok kind = Tok::end;
    std::string text;
    Int value;
    std::size_t line = 1;
    std::size_t col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError(tok_.line, tok_.col, expected,
                          "expected " + expected + " at line " +
                              std::to_string(tok_.line) + ", column " +
                              std::to_string(tok_.col) +
                              (tok_.kind == Tok::end
                                   ? ", got end of input"
                                   : ", got '" + tok_.text + "'"));
    }

    Token expect(Tok kind, const std::string& expected) {
        if (tok_.kind != kind) fail(expected);
        return take();
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            step();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) return;

        char c = text_[pos_];
        switch (c) {
        case '[': single(Tok::lbracket, c); return;
        case ']': single(Tok::rbracket, c); return;
        case '(': single(Tok::lparen, c); return;
        case ')': single(Tok::rparen, c); return;
        case '|': single(Tok::pipe, c); return;
        case ';': single(Tok::semi, c); return;
        case '*': single(Tok::star, c); return;
        case '@': single(Tok::at, c); return;
        case '+': single(Tok::plus, c); return;
        case '-': single(Tok::minus, c); return;
        case '/': single(Tok::slash, c); return;
        case '^':
            if (text_.compare(pos_, 3, "^-1") == 0) {
                tok_.kind = Tok::inv;
                tok_.text = "^-1";
                step();
                step();
                step();
                return;
            }
            throw SyntaxError(line_, col_, "'^-1'",
                              "expected '^-1' at line " + std::to_string(line_) +
                                  ", column " + std::to_string(col_));
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                digits += text_[pos_];
                step();
            }
            tok_.kind = Tok::number;
            tok_.text = digits;
            tok_.value = Int(digits);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                word += text_[pos_];
                step();
            }
            tok_.kind = Tok::ident;
            tok_.text = word;
            return;
        }
        throw SyntaxError(line_, col_, "a token",
                          "stray character '" + std::string(1, c) + "' at line " +
                              std::to_string(line_) + ", column " +
                              std::to_string(col_));
    }

    void single(Tok kind, char c) {
        tok_.kind = kind;
        tok_.text = std::string(1, c);
        step();
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    Token tok_;
};

Int parse_integer(Lexer& lx) {
    bool negative = false;
    if (lx.peek().kind == Tok::minus) {
        lx.take();
        negative = true;
    } else if (lx.peek().kind == Tok::plus) {
        lx.take();
    }
    Token n = lx.expect(Tok::number, "an integer");
    return negative ? Int(-n.value) : n.value;
}

Rational parse_rational(Lexer& lx) {
    Int num = parse_integer(lx);
    if (lx.peek().kind != Tok::slash) return Rational(num);
    lx.take();
    Token d = lx.expect(Tok::number, "a denominator");
    if (d.value == 0)
        throw SyntaxError(d.line, d.col, "a nonzero denominator",
                          "zero denominator at line " + std::to_string(d.line) +
                              ", column " + std::to_string(d.col));
    return Rational(num, d.value);
}

Angle parse_angle_tail(Lexer& lx) {
    Rational q = parse_rational(lx);
    if (lx.peek().kind != Tok::plus && lx.peek().kind != Tok::minus)
        return Angle(q);
    bool negative = lx.take().kind == Tok::minus;
    Token n = lx.expect(Tok::number, "an integer coefficient");
    lx.expect(Tok::star, "'*'");
    Token t = lx.expect(Tok::ident, "'theta'");
    if (t.text != "theta")
        throw SyntaxError(t.line, t.col, "'theta'",
                          "expected 'theta' at line " + std::to_string(t.line) +
                              ", column " + std::to_string(t.col) + ", got '" +
                              t.text + "'");
    return Angle(q, negative ? Int(-n.value) : n.value);
}

Word parse_word(Lexer& lx) {
    Token w = lx.expect(Tok::ident, "a word over a, A, b, B or e");
    if (auto parsed = Word::parse(w.text)) return *parsed;
    throw SyntaxError(w.line, w.col, "a word over a, A, b, B or e",
                      "'" + w.text + "' is not a word at line " +
                          std::to_string(w.line) + ", column " +
                          std::to_string(w.col));
}

std::unique_ptr<Expression> parse_expr(Lexer& lx);

std::unique_ptr<Expression> make_node(Expression::Kind kind, const Token& at) {
    auto node = std::make_unique<Expression>();
    node->kind = kind;
    node->line = at.line;
    node->col = at.col;
    return node;
}

std::unique_ptr<Expression> parse_literal(Lexer& lx) {
    Token open = lx.expect(Tok::lbracket, "'['");
    Word word = parse_word(lx);
    lx.expect(Tok::pipe, "'|'");
    Angle x = parse_angle_tail(lx);
    lx.expect(Tok::semi, "';'");
    Rational y = parse_rational(lx);
    lx.expect(Tok::pipe, "'|'");
    Angle phase = parse_angle_tail(lx);
    lx.expect(Tok::rbracket, "']'");
    auto node = make_node(Expression::Kind::literal, open);
    node->element = TwistElement{ClassRep{word, BasePoint(x, y), phase}};
    return node;
}

std::unique_ptr<Expression> parse_factor(Lexer& lx) {
    const Token& head = lx.peek();
    if (head.kind == Tok::number || head.kind == Tok::minus) {
        Token at = head;
        Angle z = parse_angle_tail(lx);
        lx.expect(Tok::at, "'@'");
        auto node = make_node(Expression::Kind::action, at);
        node->rotation = z;
        node->left = parse_factor(lx);
        return node;
    }

    std::unique_ptr<Expression> atom;
    if (head.kind == Tok::lparen) {
        lx.take();
        atom = parse_expr(lx);
        lx.expect(Tok::rparen, "')'");
    } else if (head.kind == Tok::lbracket) {
        atom = parse_literal(lx);
    } else {
        lx.fail("an element literal, '(' or an angle");
    }

    while (lx.peek().kind == Tok::inv) {
        Token at = lx.take();
        auto node = make_node(Expression::Kind::inverse, at);
        node->left = std::move(atom);
        atom = std::move(node);
    }
    return atom;
}

std::unique_ptr<Expression> parse_expr(Lexer& lx) {
    auto lhs = parse_factor(lx);
    while (lx.peek().kind == Tok::star) {
        Token at = lx.take();
        auto node = make_node(Expression::Kind::product, at);
        node->left = std::move(lhs);
        node->right = parse_factor(lx);
        lhs = std::move(node);
    }
    return lhs;
}

std::string at_suffix(const Expression& e) {
    return " (at line " + std::to_string(e.line) + ", column " +
           std::to_string(e.col) + ")";
}

} // namespace

std::unique_ptr<Expression> parse(const std::string& text) {
    Lexer lx(text);
    auto expr = parse_expr(lx);
    if (lx.peek().kind != Tok::end) lx.fail("end of input");
    return expr;
}

TwistElement eval(const Expression& expr) {
    switch (expr.kind) {
    case Expression::Kind::literal: return expr.element;
    case Expression::Kind::inverse: return inverse(eval(*expr.left));
    case Expression::Kind::action: return act(expr.rotation, eval(*expr.left));
    case Expression::Kind::product: break;
    }
    try {
        return eval(*expr.left) * eval(*expr.right);
    } catch (const NotComposable& err) {
        throw NotComposable(err.what() + at_suffix(expr));
    } catch (const ChainMismatch& err) {
        throw ChainMismatch(err.index, err.what() + at_suffix(expr));
    }
}

TwistElement eval_string(const std::string& text) { return eval(*parse(text)); }

Angle parse_angle(const std::string& text) {
    Lexer lx(text);
    Angle z = parse_angle_tail(lx);
    if (lx.peek().kind != Tok::end) lx.fail("end of input");
    return z;
}

TwistElement parse_element(const std::string& text) {
    Lexer lx(text);
    auto node = parse_literal(lx);
    if (lx.peek().kind != Tok::end) lx.fail("end of input");
    return node->element;
}

} // namespace twistlab
