#include "algser/parser.hpp"

#include <cctype>

#include "algser/errors.hpp"

namespace algser {

namespace {

struct Token {
    enum class Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

    Kind kind = Kind::end;
    Rational value;
    bool fraction_form = false;  // literal written as a/b; not a valid exponent
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& current() const { return tok_; }

    void advance() {
        skip_space();
        tok_ = Token{};
        tok_.line = line_;
        tok_.column = column_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::Kind::end;
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                take();
            tok_.kind = Token::Kind::ident;
            tok_.text = text_.substr(start_, pos_ - start_);
            return;
        }
        switch (c) {
            case '+': tok_.kind = Token::Kind::plus; break;
            case '-': tok_.kind = Token::Kind::minus; break;
            case '*': tok_.kind = Token::Kind::star; break;
            case '/': tok_.kind = Token::Kind::slash; break;
            case '^': tok_.kind = Token::Kind::caret; break;
            case '(': tok_.kind = Token::Kind::lparen; break;
            case ')': tok_.kind = Token::Kind::rparen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
        }
        take();
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                column_ = 1;
                ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++column_;
                ++pos_;
            } else {
                break;
            }
        }
        start_ = pos_;
    }

    void take() {
        ++pos_;
        ++column_;
    }

    void lex_number() {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) take();
        std::string num = text_.substr(start_, pos_ - start_);
        tok_.kind = Token::Kind::number;
        // A tight "a/b" with digits on both sides is one rational literal.
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            take();  // '/'
            const std::size_t den_start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                take();
            const std::string den = text_.substr(den_start, pos_ - den_start);
            if (Rational::from_string(den).is_zero())
                throw ZeroDenominator("rational literal with zero denominator", tok_.line,
                                      tok_.column);
            tok_.value = Rational::from_strings(num, den);
            tok_.fraction_form = true;
        } else {
            tok_.value = Rational::from_string(num);
        }
        tok_.text = text_.substr(start_, pos_ - start_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t start_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    AstPtr parse() {
        AstPtr ast = expr();
        if (lex_.current().kind != Token::Kind::end)
            throw ParseError("trailing input after expression", lex_.current().line,
                             lex_.current().column);
        return ast;
    }

private:
    AstPtr node(ExprAst::Kind kind, const Token& at) {
        auto n = std::make_unique<ExprAst>();
        n->kind = kind;
        n->line = at.line;
        n->column = at.column;
        return n;
    }

    AstPtr expr() {
        AstPtr lhs = term();
        while (true) {
            const Token op = lex_.current();
            if (op.kind != Token::Kind::plus && op.kind != Token::Kind::minus) return lhs;
            lex_.advance();
            AstPtr n = node(op.kind == Token::Kind::plus ? ExprAst::Kind::add : ExprAst::Kind::sub,
                            op);
            n->lhs = std::move(lhs);
            n->rhs = term();
            lhs = std::move(n);
        }
    }

    AstPtr term() {
        AstPtr lhs = unary();
        while (true) {
            const Token op = lex_.current();
            if (op.kind != Token::Kind::star && op.kind != Token::Kind::slash) return lhs;
            lex_.advance();
            AstPtr n = node(op.kind == Token::Kind::star ? ExprAst::Kind::mul : ExprAst::Kind::div,
                            op);
            n->lhs = std::move(lhs);
            n->rhs = unary();
            lhs = std::move(n);
        }
    }

    AstPtr unary() {
        const Token op = lex_.current();
        if (op.kind == Token::Kind::minus) {
            lex_.advance();
            AstPtr n = node(ExprAst::Kind::negate, op);
            n->lhs = factor();
            return n;
        }
        return factor();
    }

    AstPtr factor() {
        AstPtr b = base();
        const Token op = lex_.current();
        if (op.kind != Token::Kind::caret) return b;
        lex_.advance();
        const Token e = lex_.current();
        if (e.kind != Token::Kind::number || e.fraction_form || !e.value.is_integer() ||
            e.value.sign() < 0)
            throw ParseError("exponent must be a literal nonnegative integer", e.line, e.column);
        if (e.value.numerator() > 10000)
            throw ParseError("exponent too large", e.line, e.column);
        lex_.advance();
        AstPtr n = node(ExprAst::Kind::pow, op);
        n->lhs = std::move(b);
        n->exponent = static_cast<unsigned>(e.value.numerator().get_ui());
        return n;
    }

    AstPtr base() {
        const Token t = lex_.current();
        switch (t.kind) {
            case Token::Kind::number: {
                lex_.advance();
                AstPtr n = node(ExprAst::Kind::rational, t);
                n->value = t.value;
                return n;
            }
            case Token::Kind::ident: {
                lex_.advance();
                AstPtr n = node(ExprAst::Kind::variable, t);
                n->name = t.text;
                return n;
            }
            case Token::Kind::lparen: {
                lex_.advance();
                AstPtr inner = expr();
                if (lex_.current().kind != Token::Kind::rparen)
                    throw ParseError("expected ')'", lex_.current().line, lex_.current().column);
                lex_.advance();
                AstPtr n = node(ExprAst::Kind::paren, t);
                n->lhs = std::move(inner);
                return n;
            }
            default:
                throw ParseError("expected a number, variable, or '('", t.line, t.column);
        }
    }

    Lexer lex_;
};

}  // namespace

AstPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string render(const ExprAst& ast) {
    switch (ast.kind) {
        case ExprAst::Kind::rational: return ast.value.str();
        case ExprAst::Kind::variable: return ast.name;
        case ExprAst::Kind::add: return "(" + render(*ast.lhs) + " + " + render(*ast.rhs) + ")";
        case ExprAst::Kind::sub: return "(" + render(*ast.lhs) + " - " + render(*ast.rhs) + ")";
        case ExprAst::Kind::mul: return "(" + render(*ast.lhs) + ")*(" + render(*ast.rhs) + ")";
        case ExprAst::Kind::div: return "(" + render(*ast.lhs) + ")/(" + render(*ast.rhs) + ")";
        case ExprAst::Kind::pow:
            return "(" + render(*ast.lhs) + ")^" + std::to_string(ast.exponent);
        case ExprAst::Kind::negate: return "-(" + render(*ast.lhs) + ")";
        case ExprAst::Kind::paren: return "(" + render(*ast.lhs) + ")";
    }
    return {};
}

MultiPoly eval_poly(const ExprAst& ast, const VarSet& vars) {
    switch (ast.kind) {
        case ExprAst::Kind::rational: return MultiPoly::constant(vars, ast.value);
        case ExprAst::Kind::variable:
            if (!vars.contains(ast.name))
                throw ParseError("unknown identifier '" + ast.name + "'", ast.line, ast.column);
            return MultiPoly::variable(vars, ast.name);
        case ExprAst::Kind::add: return eval_poly(*ast.lhs, vars) + eval_poly(*ast.rhs, vars);
        case ExprAst::Kind::sub: return eval_poly(*ast.lhs, vars) - eval_poly(*ast.rhs, vars);
        case ExprAst::Kind::mul: return eval_poly(*ast.lhs, vars) * eval_poly(*ast.rhs, vars);
        case ExprAst::Kind::div:
            throw NotAPolynomial("division is not allowed in a polynomial", ast.line, ast.column);
        case ExprAst::Kind::pow: return eval_poly(*ast.lhs, vars).pow(ast.exponent);
        case ExprAst::Kind::negate: return -eval_poly(*ast.lhs, vars);
        case ExprAst::Kind::paren: return eval_poly(*ast.lhs, vars);
    }
    throw UsageError("corrupt expression tree");
}

RationalFunction eval_ratfun(const ExprAst& ast, const VarSet& vars) {
    switch (ast.kind) {
        case ExprAst::Kind::rational:
            return RationalFunction::from_poly(MultiPoly::constant(vars, ast.value));
        case ExprAst::Kind::variable:
            if (!vars.contains(ast.name))
                throw ParseError("unknown identifier '" + ast.name + "'", ast.line, ast.column);
            return RationalFunction::from_poly(MultiPoly::variable(vars, ast.name));
        case ExprAst::Kind::add: return eval_ratfun(*ast.lhs, vars) + eval_ratfun(*ast.rhs, vars);
        case ExprAst::Kind::sub: return eval_ratfun(*ast.lhs, vars) - eval_ratfun(*ast.rhs, vars);
        case ExprAst::Kind::mul: return eval_ratfun(*ast.lhs, vars) * eval_ratfun(*ast.rhs, vars);
        case ExprAst::Kind::div: {
            RationalFunction denom = eval_ratfun(*ast.rhs, vars);
            if (denom.num().is_zero())
                throw ZeroDenominator("division by zero", ast.line, ast.column);
            return eval_ratfun(*ast.lhs, vars) / denom;
        }
        case ExprAst::Kind::pow: return eval_ratfun(*ast.lhs, vars).pow(ast.exponent);
        case ExprAst::Kind::negate: return -eval_ratfun(*ast.lhs, vars);
        case ExprAst::Kind::paren: return eval_ratfun(*ast.lhs, vars);
    }
    throw UsageError("corrupt expression tree");
}

MultiPoly parse_poly(const std::string& text, const VarSet& vars) {
    return eval_poly(*parse_expression(text), vars);
}

RationalFunction parse_ratfun(const std::string& text, const VarSet& vars) {
    return eval_ratfun(*parse_expression(text), vars);
}

}  // namespace algser
