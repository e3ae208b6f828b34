#pragma once

// Formal algebra of correspondences between an abelian variety A of dimension
// g and a smooth ample divisor T inside it (dimension g-1).
//
// A correspondence of degree r from X to Y lives in CH^{dim X + r}(X x Y);
// degrees are additive under composition.  Expressions are exact rational
// linear combinations of composable generator words; composition is written
// right-to-left (the rightmost factor acts first).

#include "mforge/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace mforge {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
struct CompositionError : Error {
    using Error::Error;
};
struct HomogeneityError : Error {
    using Error::Error;
};
struct IndexError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Objects
// ---------------------------------------------------------------------------

enum class ObjTag : std::uint8_t { A, Theta, Point };

struct Obj {
    ObjTag tag = ObjTag::A;
    int g = 2;  // ambient abelian dimension, g >= 2

    int dim() const {
        switch (tag) {
            case ObjTag::A: return g;
            case ObjTag::Theta: return g - 1;
            case ObjTag::Point: return 0;
        }
        return 0;
    }

    std::string name() const {
        switch (tag) {
            case ObjTag::A: return "A";
            case ObjTag::Theta: return "Theta";
            case ObjTag::Point: return "Point";
        }
        return "?";
    }

    friend bool operator==(const Obj&, const Obj&) = default;
    friend auto operator<=>(const Obj&, const Obj&) = default;
};

inline Obj make_obj(ObjTag tag, int g) {
    if (g < 2) throw DomainError("Obj: ambient dimension g must be >= 2, got " + std::to_string(g));
    return Obj{tag, g};
}
inline Obj obj_A(int g) { return make_obj(ObjTag::A, g); }
inline Obj obj_Theta(int g) { return make_obj(ObjTag::Theta, g); }
inline Obj obj_Point(int g) { return make_obj(ObjTag::Point, g); }

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

// Fixed generator alphabet.  Endpoints and degrees:
//   DeltaA     : A -> A,  0   (diagonal / identity)
//   DeltaTheta : T -> T,  0
//   GammaI     : T -> A, +1   (graph of the inclusion, acts as the Gysin map)
//   TGammaI    : A -> T,  0   (transpose graph, acts as restriction)
//   L          : A -> A, +1   (Lefschetz operator, cup with the divisor class)
//   Lam        : A -> A, -1   (lowering operator inverse to L on primitive layers)
//   PiA(j)     : A -> A,  0   (canonical projector; the zero element when j is
//                              outside 0..2g)
//   TGammaN(n) : A -> A,  0   (pullback along multiplication by n)
enum class GenKind : std::uint8_t {
    DeltaA,
    DeltaTheta,
    GammaI,
    TGammaI,
    L,
    Lam,
    PiA,
    TGammaN,
};

struct Generator {
    GenKind kind = GenKind::DeltaA;
    int param = 0;  // j for PiA, n for TGammaN, unused otherwise

    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

inline Generator gen_delta_A() { return {GenKind::DeltaA, 0}; }
inline Generator gen_delta_T() { return {GenKind::DeltaTheta, 0}; }
inline Generator gen_gamma() { return {GenKind::GammaI, 0}; }
inline Generator gen_tgamma() { return {GenKind::TGammaI, 0}; }
inline Generator gen_L() { return {GenKind::L, 0}; }
inline Generator gen_lam() { return {GenKind::Lam, 0}; }
inline Generator gen_pi(int j) { return {GenKind::PiA, j}; }
inline Generator gen_mul(int n) { return {GenKind::TGammaN, n}; }

inline Obj gen_source(const Generator& f, int g) {
    switch (f.kind) {
        case GenKind::DeltaTheta: return obj_Theta(g);
        case GenKind::GammaI: return obj_Theta(g);
        case GenKind::TGammaI: return obj_A(g);
        default: return obj_A(g);
    }
}

inline Obj gen_target(const Generator& f, int g) {
    switch (f.kind) {
        case GenKind::DeltaTheta: return obj_Theta(g);
        case GenKind::GammaI: return obj_A(g);
        case GenKind::TGammaI: return obj_Theta(g);
        default: return obj_A(g);
    }
}

inline int gen_degree(const Generator& f) {
    switch (f.kind) {
        case GenKind::GammaI: return 1;
        case GenKind::L: return 1;
        case GenKind::Lam: return -1;
        default: return 0;
    }
}

inline std::string gen_name(const Generator& f) {
    switch (f.kind) {
        case GenKind::DeltaA: return "dA";
        case GenKind::DeltaTheta: return "dT";
        case GenKind::GammaI: return "G";
        case GenKind::TGammaI: return "tG";
        case GenKind::L: return "L";
        case GenKind::Lam: return "Lam";
        case GenKind::PiA: return "pi(" + std::to_string(f.param) + ",A)";
        case GenKind::TGammaN: return "mul(" + std::to_string(f.param) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

// A nonempty sequence of composable generators; factors[0] acts last.
struct Word {
    std::vector<Generator> factors;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

    int degree() const {
        int d = 0;
        for (const auto& f : factors) d += gen_degree(f);
        return d;
    }
};

inline Word make_word(std::vector<Generator> fs, int g) {
    if (fs.empty()) throw CompositionError("Word: empty factor sequence (use a Delta generator)");
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
        if (gen_target(fs[i + 1], g) != gen_source(fs[i], g)) {
            throw CompositionError("Word: factor " + gen_name(fs[i + 1]) + " has target " +
                                   gen_target(fs[i + 1], g).name() + " but " + gen_name(fs[i]) +
                                   " expects source " + gen_source(fs[i], g).name());
        }
    }
    return Word{std::move(fs)};
}

inline Obj word_source(const Word& w, int g) { return gen_source(w.factors.back(), g); }
inline Obj word_target(const Word& w, int g) { return gen_target(w.factors.front(), g); }

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

// Homogeneous rational combination of words sharing source, target and degree.
// The zero expression is the empty term map (endpoints and degree retained).
class Expression {
public:
    Expression() = default;

    static Expression zero(Obj source, Obj target, int degree) {
        Expression e;
        e.source_ = source;
        e.target_ = target;
        e.degree_ = degree;
        return e;
    }

    static Expression from_word(Word w, int g, const Rational& coeff = 1) {
        Expression e;
        e.source_ = word_source(w, g);
        e.target_ = word_target(w, g);
        e.degree_ = w.degree();
        if (coeff != 0) e.terms_[std::move(w)] = coeff;
        return e;
    }

    static Expression generator(const Generator& f, int g) {
        return from_word(make_word({f}, g), g);
    }

    static Expression identity(const Obj& obj) {
        switch (obj.tag) {
            case ObjTag::A: return generator(gen_delta_A(), obj.g);
            case ObjTag::Theta: return generator(gen_delta_T(), obj.g);
            default: throw DomainError("identity: no generator for object " + obj.name());
        }
    }

    const Obj& source() const { return source_; }
    const Obj& target() const { return target_; }
    int degree() const { return degree_; }
    int g() const { return source_.g; }
    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds coeff * w, dropping the term if the coefficient cancels.
    void add_term(const Word& w, const Rational& coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const Expression&, const Expression&) = default;

    Expression operator-() const {
        Expression r = *this;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }

    friend Expression operator*(const Rational& c, const Expression& e) {
        Expression r = Expression::zero(e.source_, e.target_, e.degree_);
        if (c == 0) return r;
        r.terms_ = e.terms_;
        for (auto& [w, q] : r.terms_) q *= c;
        return r;
    }

    friend Expression operator+(const Expression& a, const Expression& b) {
        a.check_compatible(b, "+");
        Expression r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }

    friend Expression operator-(const Expression& a, const Expression& b) {
        a.check_compatible(b, "-");
        Expression r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
        return r;
    }

    void check_compatible(const Expression& other, const std::string& what) const {
        if (source_ != other.source_ || target_ != other.target_ || degree_ != other.degree_) {
            throw HomogeneityError("expression " + what + ": operands are not homogeneous (" +
                                   source_.name() + "->" + target_.name() + " deg " +
                                   std::to_string(degree_) + " vs " + other.source_.name() + "->" +
                                   other.target_.name() + " deg " + std::to_string(other.degree_) +
                                   ")");
        }
    }

private:
    Obj source_{};
    Obj target_{};
    int degree_ = 0;
    std::map<Word, Rational> terms_;
};

/// f after h.  Requires h.target == f.source; degrees add; coefficients
/// multiply exactly and like words are collected.
inline Expression compose(const Expression& f, const Expression& h) {
    if (h.target() != f.source()) {
        throw CompositionError("compose: cannot compose " + f.source().name() + "->" +
                               f.target().name() + " after " + h.source().name() + "->" +
                               h.target().name() + " (endpoint mismatch at " + h.target().name() +
                               " vs " + f.source().name() + ")");
    }
    Expression r = Expression::zero(h.source(), f.target(), f.degree() + h.degree());
    for (const auto& [wf, cf] : f.terms()) {
        for (const auto& [wh, ch] : h.terms()) {
            Word w = wf;
            w.factors.insert(w.factors.end(), wh.factors.begin(), wh.factors.end());
            r.add_term(w, cf * ch);
        }
    }
    return r;
}

/// Exact rational combination of homogeneous expressions.
inline Expression linear_combine(const std::vector<Rational>& coeffs,
                                 const std::vector<Expression>& exprs) {
    if (coeffs.size() != exprs.size())
        throw HomogeneityError("linear_combine: coefficient/expression count mismatch");
    if (exprs.empty()) throw HomogeneityError("linear_combine: empty combination");
    Expression r = Expression::zero(exprs[0].source(), exprs[0].target(), exprs[0].degree());
    for (std::size_t i = 0; i < exprs.size(); ++i) {
        exprs[0].check_compatible(exprs[i], "linear_combine");
        for (const auto& [w, c] : exprs[i].terms()) r.add_term(w, coeffs[i] * c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Motives
// ---------------------------------------------------------------------------

// Triple (object, idempotent, twist).  Idempotency of the cut is checked by
// callers, not assumed here.
struct Motive {
    Obj obj;
    Expression idempotent;  // degree-0 endomorphism of obj
    int twist = 0;
};

inline Motive make_motive(Obj obj, Expression idempotent, int twist) {
    if (idempotent.source() != obj || idempotent.target() != obj || idempotent.degree() != 0) {
        throw HomogeneityError("Motive: cut must be a degree-0 endomorphism of " + obj.name());
    }
    return Motive{obj, std::move(idempotent), twist};
}

/// Degree-r morphisms map (X, pi, m) -> (Y, rho, m + r); returns false on any
/// endpoint or twist mismatch.
inline bool hom_typecheck(const Expression& f, const Motive& M, const Motive& N) {
    return f.source() == M.obj && f.target() == N.obj && f.degree() == N.twist - M.twist;
}

}  // namespace mforge
