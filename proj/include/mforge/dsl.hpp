#pragma once

// Text syntax for expressions (grammar id "mforge-dsl/1"):
//
//   expr     := ["-"] term { ("+"|"-") term }
//   term     := [rational] factor { "." factor }
//   factor   := atom ["^" nat]
//   atom     := "dA" | "dT" | "L" | "Lam" | "pi(" int ",A)" | "piT(" int ")"
//             | "G" | "tG" | "mul(" int ")" | "p" | "piP" | "(" expr ")"
//   rational := nat ["/" nat]
//
// "." is composition with the right factor applied first.  piT, p and piP
// expand to their defining combinations.  The surface syntax is ASCII only;
// parse errors carry 1-based character positions.

#include "mforge/algebra.hpp"
#include "mforge/named.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mforge::dsl {

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " at position " + std::to_string(position)), pos(position) {}
    std::size_t pos;
};

namespace detail {

enum class Tok { Ident, Number, Plus, Minus, Dot, Caret, Slash, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;  // 1-based position of the first character
};

inline std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    std::size_t last_pos = s.empty() ? 1 : 1;
    while (i < s.size()) {
        const char c = s[i];
        const std::size_t pos = i + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        last_pos = pos;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), pos});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j - i > 18) throw ParseError("number too large", pos);
            out.push_back({Tok::Number, std::string(s.substr(i, j - i)), pos});
            i = j;
            continue;
        }
        switch (c) {
            case '+': out.push_back({Tok::Plus, "+", pos}); break;
            case '-': out.push_back({Tok::Minus, "-", pos}); break;
            case '.': out.push_back({Tok::Dot, ".", pos}); break;
            case '^': out.push_back({Tok::Caret, "^", pos}); break;
            case '/': out.push_back({Tok::Slash, "/", pos}); break;
            case '(': out.push_back({Tok::LParen, "(", pos}); break;
            case ')': out.push_back({Tok::RParen, ")", pos}); break;
            case ',': out.push_back({Tok::Comma, ",", pos}); break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        ++i;
    }
    out.push_back({Tok::End, "", last_pos});
    return out;
}

// Caps keep hostile inputs (deeply nested powers, repeated multi-term
// projector products) from exhausting memory; exceeding them is a ParseError.
inline constexpr std::size_t kMaxParseTerms = 4096;
inline constexpr std::size_t kMaxParseWordLen = 4096;

class Parser {
public:
    Parser(std::string_view text, int g) : toks_(tokenize(text)), g_(g) {
        if (g < 2) throw DomainError("parse: g must be >= 2");
    }

    Expression parse_expression() {
        Expression e = parse_signed_term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token op = next();
            Expression t = parse_term();
            try {
                e = op.kind == Tok::Plus ? e + t : e - t;
            } catch (const HomogeneityError& err) {
                throw ParseError(err.what(), op.pos);
            }
        }
        expect(Tok::End, "trailing input");
        return e;
    }

private:
    Expression parse_signed_term() {
        if (peek().kind == Tok::Minus) {
            next();
            return -parse_term();
        }
        return parse_term();
    }

    static std::size_t longest_word(const Expression& e) {
        std::size_t n = 0;
        for (const auto& [w, c] : e.terms()) n = std::max(n, w.factors.size());
        return n;
    }

    Expression checked_compose(const Expression& e, const Expression& f, std::size_t pos) {
        if (e.term_count() * f.term_count() > kMaxParseTerms)
            throw ParseError("expression too large", pos);
        if (longest_word(e) + longest_word(f) > kMaxParseWordLen)
            throw ParseError("expression too large", pos);
        try {
            return compose(e, f);
        } catch (const CompositionError& err) {
            throw ParseError(err.what(), pos);
        }
    }

    Expression parse_term() {
        std::optional<Rational> coeff;
        if (peek().kind == Tok::Number) coeff = parse_rational();
        Expression e = parse_factor();
        while (peek().kind == Tok::Dot) {
            const Token dot = next();
            Expression f = parse_factor();
            e = checked_compose(e, f, dot.pos);
        }
        return coeff ? (*coeff) * e : e;
    }

    Expression parse_factor() {
        Expression atom = parse_atom();
        if (peek().kind == Tok::Caret) {
            const Token caret = next();
            const Token n = expect(Tok::Number, "exponent");
            const long long e = to_int(n);
            if (e > 4096) throw ParseError("exponent too large", n.pos);
            if (e == 0) {
                if (atom.source() != atom.target())
                    throw ParseError("zero power of a non-endomorphism", caret.pos);
                return Expression::identity(atom.source());
            }
            Expression acc = atom;
            for (long long i = 1; i < e; ++i) acc = checked_compose(acc, atom, caret.pos);
            return acc;
        }
        return atom;
    }

    Expression parse_atom() {
        const Token t = next();
        if (t.kind == Tok::LParen) {
            Expression e = parse_inner_expression();
            expect(Tok::RParen, "')'");
            return e;
        }
        if (t.kind != Tok::Ident) throw unexpected(t, "atom");
        const std::string& id = t.text;
        if (id == "dA") return Expression::generator(gen_delta_A(), g_);
        if (id == "dT") return Expression::generator(gen_delta_T(), g_);
        if (id == "L") return Expression::generator(gen_L(), g_);
        if (id == "Lam") return Expression::generator(gen_lam(), g_);
        if (id == "G") return Expression::generator(gen_gamma(), g_);
        if (id == "tG") return Expression::generator(gen_tgamma(), g_);
        if (id == "p") return complementary_projectors(g_).second;
        if (id == "piP") return complementary_projectors(g_).first;
        if (id == "pi") {
            expect(Tok::LParen, "'('");
            const long long j = parse_int();
            expect(Tok::Comma, "','");
            const Token a = expect(Tok::Ident, "'A'");
            if (a.text != "A") throw ParseError("expected 'A'", a.pos);
            expect(Tok::RParen, "')'");
            return Expression::generator(gen_pi(static_cast<int>(j)), g_);
        }
        if (id == "piT") {
            expect(Tok::LParen, "'('");
            const Token n = peek();
            const long long j = parse_int();
            expect(Tok::RParen, "')'");
            try {
                return theta_projector(static_cast<int>(j), g_);
            } catch (const IndexError& err) {
                throw ParseError(err.what(), n.pos);
            }
        }
        if (id == "mul") {
            expect(Tok::LParen, "'('");
            const long long n = parse_int();
            expect(Tok::RParen, "')'");
            return Expression::generator(gen_mul(static_cast<int>(n)), g_);
        }
        throw ParseError("unknown atom '" + id + "'", t.pos);
    }

    Expression parse_inner_expression() {
        Expression e = parse_signed_term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token op = next();
            Expression t = parse_term();
            try {
                e = op.kind == Tok::Plus ? e + t : e - t;
            } catch (const HomogeneityError& err) {
                throw ParseError(err.what(), op.pos);
            }
        }
        return e;
    }

    Rational parse_rational() {
        const Token num = expect(Tok::Number, "number");
        Rational q(to_int(num));
        if (peek().kind == Tok::Slash) {
            next();
            const Token den = expect(Tok::Number, "denominator");
            const long long d = to_int(den);
            if (d == 0) throw ParseError("zero denominator", den.pos);
            q /= d;
        }
        return q;
    }

    long long parse_int() {
        bool neg = false;
        if (peek().kind == Tok::Minus) {
            next();
            neg = true;
        }
        const Token n = expect(Tok::Number, "integer");
        const long long v = to_int(n);
        return neg ? -v : v;
    }

    static long long to_int(const Token& t) { return std::stoll(t.text); }

    const Token& peek() const { return toks_[idx_]; }
    const Token& next() { return toks_[idx_++]; }

    Token expect(Tok kind, const std::string& what) {
        const Token& t = peek();
        if (t.kind != kind) throw unexpected(t, what);
        return next();
    }

    ParseError unexpected(const Token& t, const std::string& what) const {
        if (t.kind == Tok::End) {
            // anchor end-of-input errors at the last real token
            const std::size_t pos = idx_ > 0 ? toks_[idx_ - 1].pos : t.pos;
            return ParseError("expected " + what + ", found end of input", pos);
        }
        return ParseError("expected " + what + ", found '" + t.text + "'", t.pos);
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
    int g_;
};

}  // namespace detail

/// Parses an expression; endpoints, degree homogeneity and index ranges are
/// validated during construction.
inline Expression parse(std::string_view text, int g) {
    return detail::Parser(text, g).parse_expression();
}

namespace detail {

inline std::string render_word(const Word& w) {
    std::string out;
    const auto& fs = w.factors;
    for (std::size_t i = 0; i < fs.size();) {
        std::size_t j = i;
        while (j < fs.size() && fs[j] == fs[i]) ++j;
        if (!out.empty()) out += " . ";
        out += gen_name(fs[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace detail

/// Canonical rendering: terms in the fixed word order, coefficient 1
/// suppressed, repeated factors collapsed into powers.  Inverse of parse on
/// its image.
inline std::string format(const Expression& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1) out += to_compact_string(mag) + " ";
        out += detail::render_word(w);
    }
    return out;
}

}  // namespace mforge::dsl
