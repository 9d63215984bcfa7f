#include "rittkit/textio.hpp"

#include <cassert>
#include <cctype>
#include <vector>

namespace rittkit {

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const DiffVar& v, const RingConfig& ring) {
    std::string name = ring.base_name(v);
    if (v.order() == 0) return name;
    if (ring.n_derivations() == 1) return name + std::string(v.exps[0], '\'');
    // d1^e1(d2^e2(...(name)...)), lowest derivation outermost.
    std::string s = name;
    for (int i = ring.n_derivations() - 1; i >= 0; --i) {
        int e = v.exps[i];
        if (e == 0) continue;
        std::string op = "d" + std::to_string(i + 1);
        if (e > 1) op += "^" + std::to_string(e);
        s = op + "(" + s + ")";
    }
    return s;
}

std::string to_string(const Monomial& m, const RingConfig& ring) {
    std::string out;
    const auto& fs = m.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
        if (!out.empty()) out += "*";
        std::string vs = to_string(it->first, ring);
        if (it->second > 1) {
            if (!vs.empty() && vs.back() == '\'') vs = "(" + vs + ")";
            vs += "^" + std::to_string(it->second);
        }
        out += vs;
    }
    return out;
}

namespace {

std::string mpoly_term_string(const MPoly::Exps& e, const Rat& c,
                              const std::vector<std::string>& params, bool with_coeff_one) {
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += params[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) return rat_to_string(c);
    if (c == 1 && !with_coeff_one) return mono;
    return rat_to_string(c) + "*" + mono;
}

}  // namespace

std::string to_string(const MPoly& p, const std::vector<std::string>& params) {
    if (p.is_zero()) return "0";
    std::string out;
    // Descending graded lex.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Rat c = it->second;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        out += mpoly_term_string(it->first, c, params, false);
    }
    return out;
}

namespace {

// True when `den` can stand unparenthesized after '/': a bare variable or
// variable power with coefficient 1.
bool atomic_denominator(const MPoly& den) {
    if (den.terms().size() != 1) return false;
    const auto& [e, c] = *den.terms().begin();
    if (c != 1) return false;
    int nonzero = 0;
    for (int x : e) nonzero += x > 0 ? 1 : 0;
    return nonzero == 1;
}

}  // namespace

std::string to_string(const RatFun& f, const std::vector<std::string>& params) {
    std::string num = to_string(f.num(), params);
    if (f.den().is_constant()) return num;
    if (f.num().terms().size() > 1) num = "(" + num + ")";
    std::string den = to_string(f.den(), params);
    if (!atomic_denominator(f.den())) den = "(" + den + ")";
    return num + "/" + den;
}

namespace {

// Sign/magnitude split for display.  ModP residues and multi-term rational
// functions are shown as-is.
struct CoeffDisplay {
    bool negative = false;
    std::string text;
};

CoeffDisplay coeff_display(const Coeff& c, const CoeffField& field) {
    CoeffDisplay d;
    if (c.holds_rat()) {
        const Rat& r = c.as_rat();
        d.negative = r < 0;
        d.text = rat_to_string(d.negative ? Rat(-r) : r);
        return d;
    }
    if (c.holds_modp()) {
        d.text = std::to_string(c.as_modp().value);
        return d;
    }
    const RatFun& f = c.as_ratfun();
    if (f.num().terms().size() == 1 && f.num().leading_coeff() < 0) {
        d.negative = true;
        d.text = to_string(-f, field.params);
    } else {
        d.text = to_string(f, field.params);
    }
    return d;
}

bool coeff_needs_parens(const Coeff& c) {
    if (!c.holds_ratfun()) return false;
    const RatFun& f = c.as_ratfun();
    return f.den().is_constant() && f.num().terms().size() > 1;
}

}  // namespace

std::string to_string(const Coeff& c, const CoeffField& field) {
    if (c.holds_rat()) return rat_to_string(c.as_rat());
    if (c.holds_modp()) return std::to_string(c.as_modp().value);
    return to_string(c.as_ratfun(), field.params);
}

std::string to_string(const DiffPoly& p) {
    if (p.is_zero()) return "0";
    const RingConfig& ring = *p.ring();
    std::string out;
    for (const auto& [m, c] : p.sorted_terms_for_print()) {
        CoeffDisplay cd = coeff_display(c, ring.field());
        std::string piece;
        if (m.is_one()) {
            piece = cd.text;
        } else {
            std::string mono = to_string(m, ring);
            if (cd.text == "1") {
                piece = mono;
            } else {
                std::string cs = cd.text;
                if (coeff_needs_parens(c)) cs = "(" + cs + ")";
                piece = cs + "*" + mono;
            }
        }
        if (out.empty())
            out = (cd.negative ? "-" : "") + piece;
        else
            out += (cd.negative ? " - " : " + ") + piece;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, Prime, LParen, RParen, End };
    Kind kind;
    std::string text;
    int line, col;
};

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto push = [&](Token::Kind k, std::string text) {
        out.push_back(Token{k, std::move(text), line, col});
    };
    while (i < src.size()) {
        char ch = src[i];
        if (ch == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++col;
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            push(Token::Int, src.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            push(Token::Ident, src.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        switch (ch) {
            case '+': push(Token::Plus, "+"); break;
            case '-': push(Token::Minus, "-"); break;
            case '*': push(Token::Star, "*"); break;
            case '/': push(Token::Slash, "/"); break;
            case '^': push(Token::Caret, "^"); break;
            case '\'': push(Token::Prime, "'"); break;
            case '(': push(Token::LParen, "("); break;
            case ')': push(Token::RParen, ")"); break;
            default:
                throw SyntaxError(std::string("unexpected character '") + ch + "'", line, col);
        }
        ++col;
        ++i;
    }
    out.push_back(Token{Token::End, "", line, col});
    return out;
}

bool is_derivation_ident(const std::string& s) {
    if (s.size() < 2 || s[0] != 'd') return false;
    for (size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

class ExprParser {
public:
    ExprParser(std::vector<Token> tokens, RingPtr ring)
        : tokens_(std::move(tokens)), ring_(std::move(ring)) {}

    DiffPoly parse() {
        DiffPoly p = parse_expr();
        expect(Token::End, "end of input");
        return p;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }
    bool accept(Token::Kind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            throw SyntaxError("expected " + what + ", found '" + describe(peek()) + "'", peek().line,
                              peek().col);
        ++pos_;
    }
    static std::string describe(const Token& t) {
        return t.kind == Token::End ? std::string("end of input") : t.text;
    }

    DiffPoly parse_expr() {
        bool neg = false;
        if (accept(Token::Minus))
            neg = true;
        else
            accept(Token::Plus);
        DiffPoly p = parse_term();
        if (neg) p = -p;
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = advance().kind == Token::Minus;
            DiffPoly q = parse_term();
            if (minus)
                p -= q;
            else
                p += q;
        }
        return p;
    }

    DiffPoly parse_term() {
        DiffPoly p = parse_factor();
        while (peek().kind == Token::Star || peek().kind == Token::Slash) {
            const Token& op = advance();
            DiffPoly q = parse_factor();
            if (op.kind == Token::Star) {
                p = p * q;
            } else {
                if (!q.is_field_constant())
                    throw SyntaxError("division by a non-constant polynomial", op.line, op.col);
                Coeff d = q.constant_value();
                if (d.is_zero()) throw DivisionByZeroError("division by zero");
                p = p.scaled(Coeff::one(ring_->field()) / d);
            }
        }
        return p;
    }

    DiffPoly parse_factor() {
        if (accept(Token::Minus)) return -parse_factor();
        DiffPoly p = parse_primary();
        p = parse_primes(p);
        if (peek().kind == Token::Caret) {
            advance();
            long e = parse_int_literal("exponent");
            if (e > 512) throw SyntaxError("exponent too large", peek().line, peek().col);
            p = p.pow(static_cast<unsigned>(e));
        }
        return p;
    }

    DiffPoly parse_primes(DiffPoly p) {
        if (peek().kind != Token::Prime) return p;
        if (ring_->n_derivations() != 1)
            throw SyntaxError("prime shorthand requires N = 1", peek().line, peek().col);
        while (accept(Token::Prime)) p = p.derive(1);
        return p;
    }

    long parse_int_literal(const std::string& what) {
        if (peek().kind != Token::Int)
            throw SyntaxError("expected " + what, peek().line, peek().col);
        const Token& t = advance();
        if (t.text.size() > 9) throw SyntaxError(what + " too large", t.line, t.col);
        return std::stol(t.text);
    }

    DiffPoly parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Int: {
                advance();
                return DiffPoly::from_rat(ring_, Rat(t.text));
            }
            case Token::LParen: {
                advance();
                DiffPoly p = parse_expr();
                expect(Token::RParen, "')'");
                return p;
            }
            case Token::Ident:
                return parse_ident();
            default:
                throw SyntaxError("expected a term, found '" + describe(t) + "'", t.line, t.col);
        }
    }

    DiffPoly parse_ident() {
        const Token& t = advance();
        if (is_derivation_ident(t.text)) {
            long index = std::stol(t.text.substr(1));
            if (index < 1 || index > ring_->n_derivations())
                throw DerivationIndexError("derivation index " + std::to_string(index) +
                                               " out of range (N = " +
                                               std::to_string(ring_->n_derivations()) + ")",
                                           t.line, t.col);
            long e = 1;
            if (accept(Token::Caret)) e = parse_int_literal("derivation order");
            if (e > 64) throw SyntaxError("derivation order too large", t.line, t.col);
            expect(Token::LParen, "'('");
            DiffPoly arg = parse_expr();
            expect(Token::RParen, "')'");
            for (long k = 0; k < e; ++k) arg = arg.derive(static_cast<int>(index));
            return arg;
        }
        if (auto v = ring_->find_var(t.text)) return DiffPoly::variable(ring_, *v);
        if (auto pi = ring_->field().param_index(t.text))
            return DiffPoly::constant(ring_, Coeff::parameter(ring_->field(), *pi));
        throw UnknownVariableError("unknown variable '" + t.text + "'", t.line, t.col);
    }

    std::vector<Token> tokens_;
    RingPtr ring_;
    size_t pos_ = 0;
};

}  // namespace

DiffPoly parse_poly(const std::string& src, const RingPtr& ring) {
    return ExprParser(tokenize(src), ring).parse();
}

RatFun parse_ratfun(const std::string& src, const CoeffField& field) {
    assert(field.kind == FieldKind::RationalFunctions);
    RingPtr ring = RingConfig::make(0, {}, field);
    DiffPoly p = parse_poly(src, ring);
    assert(p.is_field_constant());
    Coeff c = p.constant_value();
    return c.holds_ratfun() ? c.as_ratfun() : RatFun::constant(field.n_params(), c.as_rat());
}

Rat parse_rat(const std::string& src) {
    RingPtr ring = RingConfig::make(0, {}, CoeffField::rationals());
    DiffPoly p = parse_poly(src, ring);
    if (!p.is_field_constant()) throw SyntaxError("expected a rational number", 1, 1);
    return p.constant_value().as_rat();
}

}  // namespace rittkit
