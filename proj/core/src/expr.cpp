#include "symfun/expr.hpp"

#include <cctype>
#include <sstream>

#include "symfun/plethysm.hpp"

namespace symfun {

namespace {

struct Token {
    enum class Kind { number, basis, lparen, rparen, lbracket, rbracket, comma,
                      plus, minus, star, slash, at, langle, rangle, perp, end };
    Kind kind;
    std::string text;
    size_t column; // 1-based
};

class Lexer {
public:
    explicit Lexer(const std::string& input) : in_(input) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_])))
            ++pos_;
        size_t col = pos_ + 1;
        if (pos_ >= in_.size()) {
            tok_ = {Token::Kind::end, "", col};
            return;
        }
        char c = in_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_])))
                ++pos_;
            tok_ = {Token::Kind::number, in_.substr(start, pos_ - start), col};
            return;
        }
        if (c == 's' || c == 'h' || c == 'e' || c == 'p' || c == 'm') {
            // basis atom only when immediately followed by '['
            if (pos_ + 1 < in_.size() && in_[pos_ + 1] == '[') {
                ++pos_;
                tok_ = {Token::Kind::basis, std::string(1, c), col};
                return;
            }
            if (in_.compare(pos_, 5, "perp(") == 0) {
                pos_ += 4; // leave '(' for the parser
                tok_ = {Token::Kind::perp, "perp", col};
                return;
            }
            throw ParseError("unexpected identifier at column " + std::to_string(col), col);
        }
        if (in_.compare(pos_, 3, "\xE2\x8A\xA5") == 0) { // UTF-8 perp sign
            pos_ += 3;
            tok_ = {Token::Kind::perp, "\xE2\x8A\xA5", col};
            return;
        }
        if (in_.compare(pos_, 3, "_|_") == 0) {
            pos_ += 3;
            tok_ = {Token::Kind::perp, "_|_", col};
            return;
        }
        ++pos_;
        switch (c) {
        case '(': tok_ = {Token::Kind::lparen, "(", col}; return;
        case ')': tok_ = {Token::Kind::rparen, ")", col}; return;
        case '[': tok_ = {Token::Kind::lbracket, "[", col}; return;
        case ']': tok_ = {Token::Kind::rbracket, "]", col}; return;
        case ',': tok_ = {Token::Kind::comma, ",", col}; return;
        case '+': tok_ = {Token::Kind::plus, "+", col}; return;
        case '-': tok_ = {Token::Kind::minus, "-", col}; return;
        case '*': tok_ = {Token::Kind::star, "*", col}; return;
        case '/': tok_ = {Token::Kind::slash, "/", col}; return;
        case '@': tok_ = {Token::Kind::at, "@", col}; return;
        case '<': tok_ = {Token::Kind::langle, "<", col}; return;
        case '>': tok_ = {Token::Kind::rangle, ">", col}; return;
        default:
            throw ParseError(std::string("unexpected character '") + c + "' at column " +
                                 std::to_string(col),
                             col);
        }
    }

    const std::string& in_;
    size_t pos_ = 0;
    Token tok_{Token::Kind::end, "", 1};
};

ExprPtr make(Expr::Kind kind, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = std::move(args);
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& input) : lex_(input) {}

    ExprPtr parse_full() {
        ExprPtr e = parse_sum();
        expect(Token::Kind::end, "end of input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        const Token& t = lex_.peek();
        std::string got = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
        throw ParseError("expected " + expected + ", got " + got + " at column " +
                             std::to_string(t.column),
                         t.column);
    }

    Token expect(Token::Kind k, const std::string& what) {
        if (lex_.peek().kind != k)
            fail(what);
        return lex_.take();
    }

    // subexpressions are parsed into locals before the argument lists are
    // formed: g++ 11 fails to destroy initializer_list elements when a later
    // element's construction throws, which would leak nodes on parse errors
    ExprPtr parse_sum() {
        ExprPtr e = parse_product();
        while (true) {
            auto k = lex_.peek().kind;
            if (k == Token::Kind::plus || k == Token::Kind::minus) {
                lex_.take();
                ExprPtr rhs = parse_product();
                e = make(k == Token::Kind::plus ? Expr::Kind::add : Expr::Kind::sub, {e, rhs});
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_product() {
        ExprPtr e = parse_unary();
        while (true) {
            auto k = lex_.peek().kind;
            if (k == Token::Kind::star || k == Token::Kind::slash) {
                lex_.take();
                ExprPtr rhs = parse_unary();
                e = make(k == Token::Kind::star ? Expr::Kind::mul : Expr::Kind::div, {e, rhs});
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_unary() {
        if (lex_.peek().kind == Token::Kind::minus) {
            lex_.take();
            ExprPtr inner = parse_unary();
            return make(Expr::Kind::neg, {inner});
        }
        return parse_tight();
    }

    // plethysm '@' and the infix perp sign bind tighter than '*'
    ExprPtr parse_tight() {
        ExprPtr e = parse_primary();
        while (true) {
            auto k = lex_.peek().kind;
            if (k == Token::Kind::at || k == Token::Kind::perp) {
                lex_.take();
                ExprPtr rhs = parse_primary();
                e = make(k == Token::Kind::at ? Expr::Kind::pleth : Expr::Kind::perp, {e, rhs});
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_primary() {
        const Token& t = lex_.peek();
        switch (t.kind) {
        case Token::Kind::number: {
            Token n = lex_.take();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::scalar;
            e->scalar = Rational(Integer(n.text));
            return e;
        }
        case Token::Kind::basis: {
            Token b = lex_.take();
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::atom;
            e->basis = basis_from_letter(b.text[0]);
            e->part = parse_partition();
            return e;
        }
        case Token::Kind::lparen: {
            lex_.take();
            ExprPtr e = parse_sum();
            expect(Token::Kind::rparen, "')'");
            return e;
        }
        case Token::Kind::langle: {
            lex_.take();
            ExprPtr a = parse_sum();
            expect(Token::Kind::comma, "','");
            ExprPtr b = parse_sum();
            expect(Token::Kind::rangle, "'>'");
            return make(Expr::Kind::dot, {a, b});
        }
        case Token::Kind::perp: {
            lex_.take();
            expect(Token::Kind::lparen, "'('");
            ExprPtr a = parse_sum();
            expect(Token::Kind::comma, "','");
            ExprPtr b = parse_sum();
            expect(Token::Kind::rparen, "')'");
            return make(Expr::Kind::perp, {a, b});
        }
        default:
            fail("expression");
        }
    }

    Partition parse_partition() {
        expect(Token::Kind::lbracket, "'['");
        std::vector<int> parts;
        if (lex_.peek().kind == Token::Kind::rbracket) {
            lex_.take();
            return Partition{};
        }
        while (true) {
            Token n = expect(Token::Kind::number, "part");
            if (n.text.size() > 6)
                throw ParseError("partition part out of range at column " +
                                     std::to_string(n.column),
                                 n.column);
            parts.push_back(std::stoi(n.text));
            if (lex_.peek().kind == Token::Kind::comma) {
                lex_.take();
                continue;
            }
            expect(Token::Kind::rbracket, "',' or ']'");
            break;
        }
        try {
            return Partition(std::move(parts));
        } catch (const DomainError& err) {
            const Token& t = lex_.peek();
            throw ParseError(err.what(), t.column);
        }
    }

    Lexer lex_;
};

SymFn as_symfn(const Value& v) {
    if (std::holds_alternative<SymFn>(v))
        return std::get<SymFn>(v);
    return SymFn::monomial(Basis::s, {}, std::get<Rational>(v));
}

} // namespace

ExprPtr parse(const std::string& input) {
    Parser p(input);
    return p.parse_full();
}

Value eval(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::scalar:
        return e.scalar;
    case Expr::Kind::atom:
        return SymFn::monomial(e.basis, e.part);
    case Expr::Kind::neg: {
        Value v = eval(*e.args[0]);
        if (std::holds_alternative<Rational>(v))
            return -std::get<Rational>(v);
        return -std::get<SymFn>(v);
    }
    case Expr::Kind::add:
    case Expr::Kind::sub: {
        Value a = eval(*e.args[0]), b = eval(*e.args[1]);
        if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b)) {
            const auto& x = std::get<Rational>(a);
            const auto& y = std::get<Rational>(b);
            return e.kind == Expr::Kind::add ? x + y : x - y;
        }
        SymFn x = as_symfn(a), y = as_symfn(b);
        return e.kind == Expr::Kind::add ? x + y : x - y;
    }
    case Expr::Kind::mul: {
        Value a = eval(*e.args[0]), b = eval(*e.args[1]);
        if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b))
            return std::get<Rational>(a) * std::get<Rational>(b);
        if (std::holds_alternative<Rational>(a))
            return std::get<Rational>(a) * std::get<SymFn>(b);
        if (std::holds_alternative<Rational>(b))
            return std::get<Rational>(b) * std::get<SymFn>(a);
        return outer_mul(std::get<SymFn>(a), std::get<SymFn>(b));
    }
    case Expr::Kind::div: {
        Value a = eval(*e.args[0]), b = eval(*e.args[1]);
        if (std::holds_alternative<Rational>(b)) {
            const auto& d = std::get<Rational>(b);
            if (d.is_zero())
                throw DomainError("division by zero");
            if (std::holds_alternative<Rational>(a))
                return std::get<Rational>(a) / d;
            return (Rational(1) / d) * std::get<SymFn>(a);
        }
        if (std::holds_alternative<Rational>(a))
            throw DomainError("cannot divide a scalar by a symmetric function");
        // f / g is the skew g^perp(f)
        return perp(std::get<SymFn>(b), std::get<SymFn>(a));
    }
    case Expr::Kind::pleth: {
        Value a = eval(*e.args[0]), b = eval(*e.args[1]);
        return pleth(as_symfn(a), as_symfn(b));
    }
    case Expr::Kind::dot: {
        Value a = eval(*e.args[0]), b = eval(*e.args[1]);
        return scalar_product(as_symfn(a), as_symfn(b));
    }
    case Expr::Kind::perp: {
        Value a = eval(*e.args[0]), b = eval(*e.args[1]);
        return perp(as_symfn(a), as_symfn(b));
    }
    }
    throw DomainError("unreachable expression kind");
}

Value eval(const std::string& input) {
    return eval(*parse(input));
}

std::string print_value(const Value& v) {
    if (std::holds_alternative<Rational>(v))
        return std::get<Rational>(v).to_string();
    return std::get<SymFn>(v).to_string();
}

std::string print_value_json(const Value& v) {
    std::ostringstream os;
    if (std::holds_alternative<Rational>(v)) {
        const auto& r = std::get<Rational>(v);
        os << "{\"scalar\":{\"numerator\":\"" << r.numerator().get_str()
           << "\",\"denominator\":\"" << r.denominator().get_str() << "\"}}";
        return os.str();
    }
    const SymFn& f = std::get<SymFn>(v);
    os << "{\"basis\":\"" << basis_letter(f.basis()) << "\",\"terms\":[";
    bool first = true;
    for (const auto& [part, c] : f.terms()) {
        if (!first)
            os << ",";
        first = false;
        os << "{\"partition\":[";
        for (size_t i = 0; i < part.parts().size(); ++i) {
            if (i)
                os << ",";
            os << part.parts()[i];
        }
        os << "],\"numerator\":\"" << c.numerator().get_str() << "\",\"denominator\":\""
           << c.denominator().get_str() << "\"}";
    }
    os << "]}";
    return os.str();
}

} // namespace symfun
