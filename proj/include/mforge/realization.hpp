#pragma once

// Exact matrix model of the cohomology of A and of the divisor T.
//
// H^j(A) is the j-th exterior power of a 2g-dimensional rational space with
// basis e_1..e_{2g}; degree-j basis vectors are the size-j subsets of
// {1..2g} in lexicographic order.  L wedges with theta = sum_i e_i ^ e_{g+i}.
// Lam is the coefficient-free lowering operator of the primitive layer
// decomposition H^m = (+)_r L^r Prim^{m-2r}: it shifts each layer down one
// step and kills the primitive layer, which makes the hard Lefschetz
// contraction relations hold on the nose.
//
// The divisor side is the hyperplane-section profile: H^j(T) = H^j(A) below
// the middle, H^{j+2}(A) above it, and H^{g-1}(A) (+) K in the middle with
// dim K = k.  Restriction and Gysin maps are identity/L blocks accordingly,
// so that Gamma o tGamma = L exactly and ker(Gysin) in the middle is 0 (+) K.

#include "mforge/algebra.hpp"
#include "mforge/hodge.hpp"
#include "mforge/linalg.hpp"
#include "mforge/named.hpp"
#include "mforge/normalize.hpp"
#include "mforge/report.hpp"
#include "mforge/rules.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mforge::real {

// ---------------------------------------------------------------------------
// Graded spaces and maps
// ---------------------------------------------------------------------------

struct GradedSpace {
    Obj obj;
    std::vector<int> dims;                          // dims[j] = dim H^j, j = 0..top
    std::vector<std::vector<std::string>> labels;   // per-degree basis labels

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    int dim(int j) const {
        return (j >= 0 && j <= top_degree()) ? dims[static_cast<std::size_t>(j)] : 0;
    }
    int total_dim() const {
        int n = 0;
        for (int d : dims) n += d;
        return n;
    }
};

class GradedMap {
public:
    GradedMap() = default;
    GradedMap(const GradedSpace& src, const GradedSpace& dst, int shift)
        : shift_(shift), src_dims_(src.dims), dst_dims_(dst.dims) {
        for (int d = 0; d <= src.top_degree(); ++d)
            blocks_.emplace(d, Matrix(dst_dim(d + shift), src_dim(d)));
    }

    int shift() const { return shift_; }
    const std::vector<int>& src_dims() const { return src_dims_; }
    const std::vector<int>& dst_dims() const { return dst_dims_; }

    int src_dim(int d) const {
        return (d >= 0 && d < static_cast<int>(src_dims_.size())) ? src_dims_[static_cast<std::size_t>(d)] : 0;
    }
    int dst_dim(int d) const {
        return (d >= 0 && d < static_cast<int>(dst_dims_.size())) ? dst_dims_[static_cast<std::size_t>(d)] : 0;
    }

    Matrix& block(int d) { return blocks_.at(d); }
    const Matrix& block(int d) const { return blocks_.at(d); }
    bool has_block(int d) const { return blocks_.contains(d); }

    friend bool operator==(const GradedMap&, const GradedMap&) = default;

    bool is_zero() const {
        for (const auto& [d, b] : blocks_)
            if (!b.is_zero()) return false;
        return true;
    }

    bool is_identity() const {
        if (shift_ != 0 || src_dims_ != dst_dims_) return false;
        for (const auto& [d, b] : blocks_)
            if (!b.is_identity()) return false;
        return true;
    }

    GradedMap compose_after(const GradedMap& inner) const {
        // this o inner
        if (inner.dst_dims_ != src_dims_)
            throw DomainError("GradedMap compose: target/source space mismatch");
        GradedMap r;
        r.shift_ = shift_ + inner.shift_;
        r.src_dims_ = inner.src_dims_;
        r.dst_dims_ = dst_dims_;
        for (const auto& [d, b] : inner.blocks_) {
            const int mid = d + inner.shift_;
            Matrix outer = (mid >= 0 && static_cast<std::size_t>(mid) < src_dims_.size() && blocks_.contains(mid))
                               ? blocks_.at(mid)
                               : Matrix(dst_dim(mid + shift_), src_dim(mid));
            r.blocks_.emplace(d, outer * b);
        }
        return r;
    }

    GradedMap operator+(const GradedMap& o) const {
        if (shift_ != o.shift_ || src_dims_ != o.src_dims_ || dst_dims_ != o.dst_dims_)
            throw DomainError("GradedMap add: shape mismatch");
        GradedMap r = *this;
        for (auto& [d, b] : r.blocks_) b = b + o.blocks_.at(d);
        return r;
    }

    GradedMap scaled(const Rational& c) const {
        GradedMap r = *this;
        for (auto& [d, b] : r.blocks_) b = b.scaled(c);
        return r;
    }

private:
    int shift_ = 0;
    std::vector<int> src_dims_;
    std::vector<int> dst_dims_;
    std::map<int, Matrix> blocks_;
};

// ---------------------------------------------------------------------------
// Subset basis utilities
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < k; ++t)
            cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
    }
    if (k == 0) out = {{}};
    return out;
}

inline std::string subset_label(const std::vector<int>& s) {
    std::string out = "e{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    out += "}";
    return out;
}

/// e_a wedge e_S: sign (-1)^{#{s in S : s < a}}, zero if a already occurs.
inline std::optional<std::pair<int, std::vector<int>>> wedge_insert(int a,
                                                                    const std::vector<int>& S) {
    int below = 0;
    for (int s : S) {
        if (s == a) return std::nullopt;
        if (s < a) ++below;
    }
    std::vector<int> out = S;
    out.insert(out.begin() + below, a);
    return std::make_pair((below % 2 == 0) ? 1 : -1, std::move(out));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Abelian model
// ---------------------------------------------------------------------------

struct PrimitiveLayer {
    int prim_degree = 0;  // p with the layer L^r Prim^p, r = (m - p) / 2
    int first_col = 0;    // column offset inside the layered basis matrix
    int ncols = 0;
};

struct PrimitiveDecomposition {
    std::vector<Matrix> prim;                        // prim[j]: H^j basis of Prim^j, j = 0..g
    std::vector<std::vector<PrimitiveLayer>> layers; // per degree m = 0..2g
    std::vector<Matrix> basis;                       // layered basis B_m (columns)
    std::vector<Matrix> basis_inv;                   // exact inverses
};

struct AbelianModel {
    int g = 0;
    GradedSpace space;
    GradedMap L;  // shift +2
    std::vector<std::map<std::vector<int>, int>> index;  // subset -> column, per degree
};

inline AbelianModel abelian_model(int g) {
    if (g < 2 || g > 6)
        throw DomainError("abelian_model: g must be in 2..6, got " + std::to_string(g));
    AbelianModel m;
    m.g = g;
    m.space.obj = obj_A(g);
    const int n = 2 * g;
    m.space.dims.resize(static_cast<std::size_t>(n) + 1);
    m.space.labels.resize(static_cast<std::size_t>(n) + 1);
    m.index.resize(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<std::vector<int>>> bases(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        bases[static_cast<std::size_t>(j)] = detail::subsets_lex(n, j);
        auto& basis = bases[static_cast<std::size_t>(j)];
        m.space.dims[static_cast<std::size_t>(j)] = static_cast<int>(basis.size());
        for (int c = 0; c < static_cast<int>(basis.size()); ++c) {
            m.space.labels[static_cast<std::size_t>(j)].push_back(
                detail::subset_label(basis[static_cast<std::size_t>(c)]));
            m.index[static_cast<std::size_t>(j)].emplace(basis[static_cast<std::size_t>(c)], c);
        }
    }
    m.L = GradedMap(m.space, m.space, 2);
    for (int j = 0; j + 2 <= n; ++j) {
        Matrix& blk = m.L.block(j);
        const auto& src = bases[static_cast<std::size_t>(j)];
        for (int c = 0; c < static_cast<int>(src.size()); ++c) {
            for (int i = 1; i <= g; ++i) {
                auto w1 = detail::wedge_insert(g + i, src[static_cast<std::size_t>(c)]);
                if (!w1) continue;
                auto w2 = detail::wedge_insert(i, w1->second);
                if (!w2)
                    continue;
                const int sign = w1->first * w2->first;
                const int row = m.index[static_cast<std::size_t>(j) + 2].at(w2->second);
                blk(row, c) += sign;
            }
        }
    }
    return m;
}

/// Prim^j = ker(L^{g-j+1} : H^j -> H^{2g-j+2}) with the layered decomposition
/// H^m = (+)_r L^r Prim^{m-2r} and its transition matrices.
inline PrimitiveDecomposition primitive_decomposition(const AbelianModel& m) {
    const int g = m.g;
    PrimitiveDecomposition d;
    d.prim.resize(static_cast<std::size_t>(g) + 1);
    for (int j = 0; j <= g; ++j) {
        Matrix power = Matrix::identity(m.space.dim(j));
        for (int t = 0; t < g - j + 1; ++t) power = m.L.block(j + 2 * t) * power;
        d.prim[static_cast<std::size_t>(j)] = kernel_basis(power);
        const int expect = binomial(2 * g, j) - binomial(2 * g, j - 2);
        if (d.prim[static_cast<std::size_t>(j)].cols() != expect)
            throw DomainError("primitive_decomposition: unexpected kernel dimension in degree " +
                              std::to_string(j));
    }
    d.layers.resize(static_cast<std::size_t>(2 * g) + 1);
    d.basis.resize(static_cast<std::size_t>(2 * g) + 1);
    d.basis_inv.resize(static_cast<std::size_t>(2 * g) + 1);
    for (int deg = 0; deg <= 2 * g; ++deg) {
        const int dim = m.space.dim(deg);
        Matrix B(dim, dim);
        int col = 0;
        for (int r = std::max(0, deg - g); 2 * r <= deg; ++r) {
            const int p = deg - 2 * r;
            Matrix cols = d.prim[static_cast<std::size_t>(p)];
            for (int t = 0; t < r; ++t) cols = m.L.block(p + 2 * t) * cols;
            PrimitiveLayer layer{p, col, cols.cols()};
            for (int c = 0; c < cols.cols(); ++c) {
                for (int row = 0; row < dim; ++row) B(row, col + c) = cols(row, c);
            }
            col += cols.cols();
            d.layers[static_cast<std::size_t>(deg)].push_back(layer);
        }
        if (col != dim)
            throw DomainError("primitive_decomposition: layered basis incomplete in degree " +
                              std::to_string(deg));
        d.basis[static_cast<std::size_t>(deg)] = B;
        d.basis_inv[static_cast<std::size_t>(deg)] = inverse(B);
    }
    return d;
}

/// The lowering operator: Lam(L^r x) = L^{r-1} x for r >= 1, Lam(x) = 0 for
/// primitive x.  Shift -2; satisfies the contraction and commutation rules
/// exactly.
inline GradedMap lambda_matrix(const AbelianModel& m, const PrimitiveDecomposition& d) {
    const int g = m.g;
    GradedMap lam(m.space, m.space, -2);
    for (int deg = 2; deg <= 2 * g; ++deg) {
        const auto& src_layers = d.layers[static_cast<std::size_t>(deg)];
        const auto& dst_layers = d.layers[static_cast<std::size_t>(deg) - 2];
        const int sdim = m.space.dim(deg);
        const int ddim = m.space.dim(deg - 2);
        Matrix S(ddim, sdim);  // layered coords -> layered coords, shift down
        for (const auto& sl : src_layers) {
            const int r = (deg - sl.prim_degree) / 2;
            if (r == 0) continue;  // primitive layer dies
            for (const auto& dl : dst_layers) {
                if (dl.prim_degree != sl.prim_degree) continue;
                for (int c = 0; c < sl.ncols; ++c) S(dl.first_col + c, sl.first_col + c) = 1;
            }
        }
        lam.block(deg) = d.basis[static_cast<std::size_t>(deg) - 2] * S *
                         d.basis_inv[static_cast<std::size_t>(deg)];
    }
    return lam;
}

// ---------------------------------------------------------------------------
// Divisor model
// ---------------------------------------------------------------------------

struct CohomologyModel {
    int g = 0;
    int k = 0;  // dim of the middle primitive part K
    GradedSpace spaceA;
    GradedSpace spaceTheta;
    GradedMap L;       // A -> A, shift +2
    GradedMap Lam;     // A -> A, shift -2
    GradedMap Gamma;   // T -> A, shift +2 (Gysin)
    GradedMap TGamma;  // A -> T, shift 0  (restriction)
    PrimitiveDecomposition prim;

    const GradedSpace& space(const Obj& obj) const {
        return obj.tag == ObjTag::Theta ? spaceTheta : spaceA;
    }

    GradedMap identity_map(const Obj& obj) const {
        const GradedSpace& s = space(obj);
        GradedMap id(s, s, 0);
        for (int d = 0; d <= s.top_degree(); ++d) id.block(d) = Matrix::identity(s.dim(d));
        return id;
    }

    GradedMap projector_A(int j) const {
        GradedMap p(spaceA, spaceA, 0);
        if (j >= 0 && j <= spaceA.top_degree()) p.block(j) = Matrix::identity(spaceA.dim(j));
        return p;
    }

    GradedMap mul_map(int n) const {
        GradedMap p(spaceA, spaceA, 0);
        for (int d = 0; d <= spaceA.top_degree(); ++d)
            p.block(d) = Matrix::identity(spaceA.dim(d)).scaled(int_pow(n, d));
        return p;
    }

    /// Graded projector onto degree j of the divisor cohomology.
    GradedMap projector_Theta(int j) const {
        GradedMap p(spaceTheta, spaceTheta, 0);
        if (j >= 0 && j <= spaceTheta.top_degree()) p.block(j) = Matrix::identity(spaceTheta.dim(j));
        return p;
    }

    GradedMap generator_map(const Generator& f) const {
        switch (f.kind) {
            case GenKind::DeltaA: return identity_map(obj_A(g));
            case GenKind::DeltaTheta: return identity_map(obj_Theta(g));
            case GenKind::L: return L;
            case GenKind::Lam: return Lam;
            case GenKind::GammaI: return Gamma;
            case GenKind::TGammaI: return TGamma;
            case GenKind::PiA: return projector_A(f.param);
            case GenKind::TGammaN: return mul_map(f.param);
        }
        throw DomainError("generator_map: unknown generator");
    }
};

/// Full model with the divisor side; k defaults to the middle primitive
/// dimension of the principally polarized case.
inline CohomologyModel theta_model(int g, std::optional<int> k_opt = std::nullopt) {
    AbelianModel am = abelian_model(g);
    const int k = k_opt.value_or(static_cast<int>(hodge::primitive_middle_dim(g, 1)));
    if (k < 0) throw DomainError("theta_model: negative k");

    CohomologyModel m;
    m.g = g;
    m.k = k;
    m.spaceA = am.space;
    m.L = am.L;
    m.prim = primitive_decomposition(am);
    m.Lam = lambda_matrix(am, m.prim);

    m.spaceTheta.obj = obj_Theta(g);
    m.spaceTheta.dims.resize(static_cast<std::size_t>(2 * g) - 1);
    m.spaceTheta.labels.resize(static_cast<std::size_t>(2 * g) - 1);
    for (int j = 0; j <= 2 * g - 2; ++j) {
        auto& dim = m.spaceTheta.dims[static_cast<std::size_t>(j)];
        auto& lab = m.spaceTheta.labels[static_cast<std::size_t>(j)];
        if (j < g - 1) {
            dim = m.spaceA.dim(j);
            lab = m.spaceA.labels[static_cast<std::size_t>(j)];
        } else if (j > g - 1) {
            dim = m.spaceA.dim(j + 2);
            lab = m.spaceA.labels[static_cast<std::size_t>(j) + 2];
        } else {
            dim = m.spaceA.dim(g - 1) + k;
            lab = m.spaceA.labels[static_cast<std::size_t>(g) - 1];
            for (int t = 1; t <= k; ++t) lab.push_back("k" + std::to_string(t));
        }
    }

    // restriction: identity below the middle, inclusion in the middle, L above
    m.TGamma = GradedMap(m.spaceA, m.spaceTheta, 0);
    for (int d = 0; d <= 2 * g; ++d) {
        if (d > 2 * g - 2) break;
        Matrix& blk = m.TGamma.block(d);
        if (d < g - 1) {
            blk = Matrix::identity(m.spaceA.dim(d));
        } else if (d == g - 1) {
            for (int c = 0; c < m.spaceA.dim(d); ++c) blk(c, c) = 1;
        } else {
            blk = m.L.block(d);
        }
    }

    // Gysin: L below the middle, kill K in the middle, identity above
    m.Gamma = GradedMap(m.spaceTheta, m.spaceA, 2);
    for (int d = 0; d <= 2 * g - 2; ++d) {
        Matrix& blk = m.Gamma.block(d);
        if (d < g - 1) {
            blk = m.L.block(d);
        } else if (d == g - 1) {
            const Matrix& Lmid = m.L.block(g - 1);
            for (int r = 0; r < Lmid.rows(); ++r)
                for (int c = 0; c < Lmid.cols(); ++c) blk(r, c) = Lmid(r, c);
        } else {
            blk = Matrix::identity(m.spaceA.dim(d + 2));
        }
    }

    // construction sanity: Gysin o restriction = L
    if (!(m.Gamma.compose_after(m.TGamma) == m.L))
        throw DomainError("theta_model: Gysin/restriction factorization failed");
    return m;
}

// ---------------------------------------------------------------------------
// Realization of expressions
// ---------------------------------------------------------------------------

inline GradedMap realize(const Expression& e, const CohomologyModel& model) {
    if (e.g() != model.g)
        throw DomainError("realize: expression has g = " + std::to_string(e.g()) +
                          " but the model has g = " + std::to_string(model.g));
    const GradedSpace& src = model.space(e.source());
    const GradedSpace& dst = model.space(e.target());
    GradedMap acc(src, dst, 2 * e.degree());  // zero map
    for (const auto& [w, c] : e.terms()) {
        GradedMap wm = model.generator_map(w.factors.back());
        for (int i = static_cast<int>(w.factors.size()) - 2; i >= 0; --i)
            wm = model.generator_map(w.factors[static_cast<std::size_t>(i)]).compose_after(wm);
        acc = acc + wm.scaled(c);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Semantic checks
// ---------------------------------------------------------------------------

/// Every rule of R, instantiated and compared as exact matrices on the model.
inline verify::VerificationReport soundness_check(const RewriteSystem& R,
                                                  const CohomologyModel& model) {
    verify::VerificationReport report;
    report.g = model.g;
    for (const auto& rule : R.rules) {
        for (const auto& inst : rule_instances(rule, model.g)) {
            verify::ReportEntry e;
            e.id = "axiom." + inst.id;
            e.paper_ref = rule.name;
            const GradedMap lhs = realize(inst.lhs, model);
            const GradedMap rhs = realize(inst.rhs, model);
            e.status = (lhs == rhs) ? verify::Status::Proved : verify::Status::Failed;
            report.statements.push_back(std::move(e));
        }
    }
    return report;
}

/// Kunneth-type conditions on the divisor side: realized projectors equal the
/// graded projectors, the realized complement has the primitive rank, and the
/// comparison morphisms are isomorphisms off the middle degree.
inline verify::VerificationReport kunneth_check(int g, std::optional<int> k_opt = std::nullopt) {
    const CohomologyModel model = theta_model(g, k_opt);
    verify::VerificationReport report;
    report.g = g;
    auto add = [&](const std::string& id, bool ok, const std::string& ref) {
        verify::ReportEntry e;
        e.id = id;
        e.paper_ref = ref;
        e.status = ok ? verify::Status::Proved : verify::Status::Failed;
        report.statements.push_back(std::move(e));
    };

    GradedMap sum(model.spaceTheta, model.spaceTheta, 0);
    for (int j = 0; j <= 2 * (g - 1); ++j) {
        const GradedMap pj = realize(theta_projector(j, g), model);
        add("kunneth.proj.j=" + std::to_string(j), pj == model.projector_Theta(j),
            "divisor projector realizes the graded projector");
        sum = sum + pj;
    }
    add("kunneth.sum", sum.is_identity(), "projectors sum to the identity");

    auto [pi_prime, p] = complementary_projectors(g);
    const GradedMap rp = realize(p, model);
    Matrix expected(model.spaceTheta.dim(g - 1), model.spaceTheta.dim(g - 1));
    const int c = model.spaceA.dim(g - 1);
    for (int t = 0; t < model.k; ++t) expected(c + t, c + t) = 1;
    bool p_ok = rp.block(g - 1) == expected;
    for (int d = 0; d <= 2 * (g - 1); ++d) {
        if (d == g - 1) continue;
        p_ok = p_ok && rp.block(d).is_zero();
    }
    add("kunneth.p.projects-K", p_ok, "complement projects onto the middle primitive part");
    add("kunneth.p.rank", rank(rp.block(g - 1)) == model.k,
        "complement rank equals the primitive dimension");
    const GradedMap rp2 = rp.compose_after(rp);
    add("kunneth.p.idempotent-matrix", rp2 == rp, "realized complement is a projector");

    for (int j = 0; j <= 2 * (g - 1); ++j) {
        if (j < g - 1) {
            const GradedMap h = realize(lefschetz_morphism(j, g, LefschetzDirection::Pullback), model);
            add("kunneth.h.iso.j=" + std::to_string(j),
                rank(h.block(j)) == model.spaceA.dim(j), "restriction comparison is invertible");
        } else if (j > g - 1) {
            const GradedMap th =
                realize(lefschetz_morphism(j, g, LefschetzDirection::Pushforward), model);
            add("kunneth.th.iso.j=" + std::to_string(j),
                rank(th.block(j)) == model.spaceTheta.dim(j), "Gysin comparison is invertible");
        }
    }
    const GradedMap hmid = realize(lefschetz_morphism(g - 1, g, LefschetzDirection::Pullback), model);
    add("kunneth.h.injective.mid", rank(hmid.block(g - 1)) == model.spaceA.dim(g - 1),
        "middle restriction comparison is injective");
    const GradedMap thmid =
        realize(lefschetz_morphism(g - 1, g, LefschetzDirection::Pushforward), model);
    add("kunneth.th.surjective.mid", rank(thmid.block(g - 1)) == model.spaceA.dim(g + 1),
        "middle Gysin comparison is surjective");
    return report;
}

// ---------------------------------------------------------------------------
// JSON dump
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::ordered_json matrix_to_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_fraction_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline nlohmann::ordered_json space_to_json(const GradedSpace& s) {
    nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
    for (int j = 0; j <= s.top_degree(); ++j) {
        degrees.push_back({{"degree", j},
                           {"dim", s.dim(j)},
                           {"labels", s.labels[static_cast<std::size_t>(j)]}});
    }
    return degrees;
}

inline nlohmann::ordered_json map_to_json(const GradedMap& m) {
    nlohmann::ordered_json j;
    j["shift"] = m.shift();
    j["blocks"] = nlohmann::ordered_json::object();
    for (int d = 0; d < static_cast<int>(m.src_dims().size()); ++d) {
        if (m.src_dim(d) == 0 || m.dst_dim(d + m.shift()) == 0) continue;
        j["blocks"][std::to_string(d)] = matrix_to_json(m.block(d));
    }
    return j;
}

}  // namespace detail

/// Degree-blocked dump of the model; matrix entries as "num/den" strings.
inline nlohmann::ordered_json model_dump_json(const CohomologyModel& m) {
    nlohmann::ordered_json j;
    j["engine_version"] = kEngineVersion;
    j["g"] = m.g;
    j["k"] = m.k;
    j["spaces"] = {{"A", detail::space_to_json(m.spaceA)},
                   {"Theta", detail::space_to_json(m.spaceTheta)}};
    j["generators"] = {{"L", detail::map_to_json(m.L)},
                       {"Lam", detail::map_to_json(m.Lam)},
                       {"G", detail::map_to_json(m.Gamma)},
                       {"tG", detail::map_to_json(m.TGamma)}};
    return j;
}

}  // namespace mforge::real
