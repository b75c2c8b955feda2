#pragma once

// Independent linear-algebra oracle. Interval modules are materialised as
// representations of the bound quiver over F_p; Hom spaces are solution spaces
// of the intertwining equations, Ext^1 is a cokernel built from an explicit
// projective cover, injectivity is the lifting property against inclusions of
// indecomposables, and tau is D Tr of an explicit minimal presentation.
//
// Nothing here uses the combinatorial formulas from modules.hpp / homology.hpp.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nakayama/errors.hpp>
#include <nakayama/kupisch.hpp>
#include <nakayama/oracle/fp_matrix.hpp>

namespace nakayama::oracle
{

// A representation: one space per vertex (0-based) and one matrix per arrow a -> a+1.
struct matrix_rep {
    std::uint32_t p = 2;
    int v = 1;
    bool cyclic = false;
    std::vector<int> dims;
    std::vector<fp_matrix> arrows;

    int arrow_count() const { return cyclic ? v : v - 1; }
    int head(int a) const { return (a + 1) % v; }

    // Index of the arrow ending at vertex a, or -1.
    int incoming(int a) const
    {
        if (cyclic) {
            return (a - 1 + v) % v;
        }
        return a > 0 ? a - 1 : -1;
    }

    int dimension() const
    {
        int d = 0;
        for (int x : dims) {
            d += x;
        }
        return d;
    }
};

// A morphism of representations, one matrix per vertex.
struct rep_hom {
    std::vector<fp_matrix> maps;
};

inline matrix_rep empty_rep(const kupisch_series &alg, std::uint32_t p)
{
    matrix_rep r;
    r.p = p;
    r.v = alg.vertices();
    r.cyclic = alg.cyclic();
    r.dims.assign(r.v, 0);
    for (int a = 0; a < r.arrow_count(); ++a) {
        r.arrows.emplace_back(0, 0, p);
    }
    return r;
}

// Basis indexed by the positions of the composition window; arrows push each
// basis vector one step toward the socle.
inline matrix_rep realize(const kupisch_series &alg, const interval_module &m, std::uint32_t p = 2)
{
    matrix_rep r = empty_rep(alg, p);
    const int v = r.v;
    std::vector<int> vertex_of(m.length), slot(m.length);
    for (int t = 0; t < m.length; ++t) {
        vertex_of[t] = (m.start - 1 + t) % v;
        slot[t] = r.dims[vertex_of[t]]++;
    }
    for (int a = 0; a < r.arrow_count(); ++a) {
        r.arrows[a] = fp_matrix(r.dims[r.head(a)], r.dims[a], p);
    }
    for (int t = 0; t + 1 < m.length; ++t) {
        const int a = vertex_of[t];
        r.arrows[a](slot[t + 1], slot[t]) = 1;
    }
    return r;
}

inline matrix_rep direct_sum(const kupisch_series &alg, const std::vector<matrix_rep> &parts, std::uint32_t p)
{
    matrix_rep r = empty_rep(alg, p);
    for (const auto &x : parts) {
        for (int a = 0; a < r.v; ++a) {
            r.dims[a] += x.dims[a];
        }
    }
    for (int a = 0; a < r.arrow_count(); ++a) {
        fp_matrix m(r.dims[r.head(a)], r.dims[a], p);
        int ro = 0, co = 0;
        for (const auto &x : parts) {
            const fp_matrix &b = x.arrows[a];
            for (int i = 0; i < b.rows(); ++i) {
                for (int j = 0; j < b.cols(); ++j) {
                    m(ro + i, co + j) = b(i, j);
                }
            }
            ro += b.rows();
            co += b.cols();
        }
        r.arrows[a] = std::move(m);
    }
    return r;
}

// Path of c_i arrows from every vertex i acts as zero.
inline bool satisfies_relations(const kupisch_series &alg, const matrix_rep &r)
{
    for (int i = 0; i < r.v; ++i) {
        if (!r.cyclic && alg.length(i + 1) > r.v - i - 1) {
            // The path would leave the quiver; it is zero by construction.
            continue;
        }
        fp_matrix acc = fp_matrix::identity(r.dims[i], r.p);
        int cur = i;
        for (int k = 0; k < alg.length(i + 1); ++k) {
            acc = r.arrows[cur] * acc;
            cur = r.head(cur);
        }
        if (!acc.is_zero()) {
            return false;
        }
    }
    return true;
}

// Basis of Hom(x, y), each element a rep_hom.
inline std::vector<rep_hom> hom_space(const matrix_rep &x, const matrix_rep &y)
{
    const std::uint32_t p = x.p;
    std::vector<int> off(x.v + 1, 0);
    for (int a = 0; a < x.v; ++a) {
        off[a + 1] = off[a] + y.dims[a] * x.dims[a];
    }
    const int unknowns = off[x.v];
    int eqs = 0;
    for (int a = 0; a < x.arrow_count(); ++a) {
        eqs += y.dims[x.head(a)] * x.dims[a];
    }
    fp_matrix sys(eqs, unknowns, p);
    int row = 0;
    for (int a = 0; a < x.arrow_count(); ++a) {
        const int s = a, t = x.head(a);
        const fp_matrix &xa = x.arrows[a];
        const fp_matrix &ya = y.arrows[a];
        // f_t * X_a - Y_a * f_s = 0, entry (r, c)
        for (int r = 0; r < y.dims[t]; ++r) {
            for (int c = 0; c < x.dims[s]; ++c, ++row) {
                for (int k = 0; k < x.dims[t]; ++k) {
                    const int col = off[t] + r * x.dims[t] + k;
                    sys(row, col) = (sys(row, col) + xa(k, c)) % p;
                }
                for (int k = 0; k < y.dims[s]; ++k) {
                    const int col = off[s] + k * x.dims[s] + c;
                    sys(row, col) = (sys(row, col) + p - ya(r, k)) % p;
                }
            }
        }
    }
    const fp_matrix ns = sys.nullspace();
    std::vector<rep_hom> out;
    for (int j = 0; j < ns.cols(); ++j) {
        rep_hom h;
        for (int a = 0; a < x.v; ++a) {
            fp_matrix m(y.dims[a], x.dims[a], p);
            for (int r = 0; r < y.dims[a]; ++r) {
                for (int c = 0; c < x.dims[a]; ++c) {
                    m(r, c) = ns(off[a] + r * x.dims[a] + c, j);
                }
            }
            h.maps.push_back(std::move(m));
        }
        out.push_back(std::move(h));
    }
    return out;
}

inline rep_hom compose(const rep_hom &g, const rep_hom &f)
{
    rep_hom h;
    for (std::size_t a = 0; a < g.maps.size(); ++a) {
        h.maps.push_back(g.maps[a] * f.maps[a]);
    }
    return h;
}

// Coordinates of a hom in the ambient space of per-vertex matrices, as a column.
inline fp_matrix flatten(const rep_hom &h, std::uint32_t p)
{
    int n = 0;
    for (const auto &m : h.maps) {
        n += m.rows() * m.cols();
    }
    fp_matrix col(n, 1, p);
    int k = 0;
    for (const auto &m : h.maps) {
        for (int r = 0; r < m.rows(); ++r) {
            for (int c = 0; c < m.cols(); ++c) {
                col(k++, 0) = m(r, c);
            }
        }
    }
    return col;
}

// Columns are flatten(hs[i]); ambient_size is used when hs is empty.
inline fp_matrix flatten_all(const std::vector<rep_hom> &hs, int ambient_size, std::uint32_t p)
{
    fp_matrix m(ambient_size, static_cast<int>(hs.size()), p);
    for (std::size_t j = 0; j < hs.size(); ++j) {
        const fp_matrix c = flatten(hs[j], p);
        for (int i = 0; i < ambient_size; ++i) {
            m(i, int(j)) = c(i, 0);
        }
    }
    return m;
}

inline int ambient_size(const matrix_rep &x, const matrix_rep &y)
{
    int n = 0;
    for (int a = 0; a < x.v; ++a) {
        n += x.dims[a] * y.dims[a];
    }
    return n;
}

inline bool is_mono(const rep_hom &h)
{
    for (const auto &m : h.maps) {
        if (m.rank() != m.cols()) {
            return false;
        }
    }
    return true;
}

// The hom P -> x sending the top generator of P = realize(P_b) to w in x_b.
inline rep_hom hom_from_projective(const kupisch_series &alg, int b, const matrix_rep &x, const fp_matrix &w)
{
    const matrix_rep pr = realize(alg, interval_module{b, alg.length(b)}, x.p);
    rep_hom h;
    for (int a = 0; a < x.v; ++a) {
        h.maps.emplace_back(x.dims[a], pr.dims[a], x.p);
    }
    std::vector<int> next_slot(x.v, 0);
    fp_matrix cur = w;
    int vert = b - 1;
    for (int t = 0; t < alg.length(b); ++t) {
        const int s = next_slot[vert]++;
        for (int i = 0; i < x.dims[vert]; ++i) {
            h.maps[vert](i, s) = cur(i, 0);
        }
        if (t + 1 < alg.length(b)) {
            cur = x.arrows[vert] * cur;
            vert = x.head(vert);
        }
    }
    return h;
}

// A projective cover P -> x built from a complement of rad x, and its kernel.
struct presentation_step {
    std::vector<int> tops; // 1-based vertices of the projective summands, in order
    matrix_rep cover;
    rep_hom cover_map;  // cover -> x
    matrix_rep kernel;
    rep_hom inclusion;  // kernel -> cover
};

inline presentation_step projective_cover_of(const kupisch_series &alg, const matrix_rep &x)
{
    const std::uint32_t p = x.p;
    presentation_step st;
    std::vector<rep_hom> pieces;
    std::vector<matrix_rep> parts;
    for (int a = 0; a < x.v; ++a) {
        const int in = x.incoming(a);
        fp_matrix span = in >= 0 ? x.arrows[in] : fp_matrix(x.dims[a], 0, p);
        int rank = span.rank();
        for (int k = 0; k < x.dims[a]; ++k) {
            fp_matrix e(x.dims[a], 1, p);
            e(k, 0) = 1;
            fp_matrix trial = span.hconcat(e);
            if (trial.rank() > rank) {
                span = std::move(trial);
                ++rank;
                st.tops.push_back(a + 1);
                pieces.push_back(hom_from_projective(alg, a + 1, x, e));
                parts.push_back(realize(alg, interval_module{a + 1, alg.length(a + 1)}, p));
            }
        }
    }
    st.cover = direct_sum(alg, parts, p);
    st.cover_map.maps.resize(x.v);
    for (int a = 0; a < x.v; ++a) {
        fp_matrix m(x.dims[a], 0, p);
        for (const auto &h : pieces) {
            m = m.hconcat(h.maps[a]);
        }
        st.cover_map.maps[a] = std::move(m);
    }

    st.kernel = empty_rep(alg, p);
    std::vector<fp_matrix> basis(x.v);
    for (int a = 0; a < x.v; ++a) {
        basis[a] = st.cover_map.maps[a].nullspace();
        st.kernel.dims[a] = basis[a].cols();
    }
    for (int a = 0; a < x.arrow_count(); ++a) {
        const fp_matrix image = st.cover.arrows[a] * basis[a];
        st.kernel.arrows[a] = fp_matrix::coordinates(basis[x.head(a)], image);
    }
    st.inclusion.maps = basis;
    return st;
}

// Recognises a representation with simple top as M(top, dim); nullopt for zero.
inline std::optional<interval_module> identify(const matrix_rep &x)
{
    if (x.dimension() == 0) {
        return std::nullopt;
    }
    int top_dim = 0, top = -1;
    for (int a = 0; a < x.v; ++a) {
        const int in = x.incoming(a);
        const int rad = in >= 0 ? x.arrows[in].rank() : 0;
        if (x.dims[a] - rad > 0) {
            top_dim += x.dims[a] - rad;
            top = a + 1;
        }
    }
    if (top_dim != 1) {
        throw internal_inconsistency("oracle: representation is not local (top dimension " + std::to_string(top_dim)
                                     + ")");
    }
    return interval_module{top, x.dimension()};
}

struct oracle_options {
    std::uint32_t p = 2;
    int max_algebra_dimension = 256;
    int max_enumeration = 4096; // cap on p^dim Hom(A,B) when searching monomorphisms
};

class matrix_oracle
{
public:
    explicit matrix_oracle(kupisch_series alg, oracle_options opt = {}) : alg_(std::move(alg)), opt_(opt)
    {
        if (alg_.dimension() > opt_.max_algebra_dimension) {
            throw dimension_cap_exceeded("oracle: algebra dimension " + std::to_string(alg_.dimension()) + " exceeds cap "
                                         + std::to_string(opt_.max_algebra_dimension));
        }
        for (const auto &m : indecomposables(alg_)) {
            inds_.push_back(m);
            reps_.push_back(realize(alg_, m, opt_.p));
        }
        find_inclusions();
    }

    const kupisch_series &algebra() const noexcept { return alg_; }
    std::uint32_t prime() const noexcept { return opt_.p; }

    matrix_rep rep(const interval_module &m) const { return realize(alg_, m, opt_.p); }

    int hom_dim(const interval_module &x, const interval_module &y) const
    {
        return static_cast<int>(hom_space(rep(x), rep(y)).size());
    }

    // dim coker(Hom(P_0, y) -> Hom(Omega x, y)).
    int ext1_dim(const interval_module &x, const interval_module &y) const
    {
        const matrix_rep ry = rep(y);
        const presentation_step st = projective_cover_of(alg_, rep(x));
        const auto h_omega = hom_space(st.kernel, ry);
        if (h_omega.empty()) {
            return 0;
        }
        std::vector<rep_hom> restricted;
        for (const auto &g : hom_space(st.cover, ry)) {
            restricted.push_back(compose(g, st.inclusion));
        }
        const int rank = flatten_all(restricted, ambient_size(st.kernel, ry), opt_.p).rank();
        return static_cast<int>(h_omega.size()) - rank;
    }

    // Every f: A -> m along an inclusion A -> B of indecomposables extends to B.
    bool is_injective(const interval_module &m) const
    {
        const matrix_rep rm = rep(m);
        std::vector<std::optional<std::vector<rep_hom>>> hom_to_m(inds_.size());
        auto homs = [&](std::size_t i) -> const std::vector<rep_hom> & {
            if (!hom_to_m[i]) {
                hom_to_m[i] = hom_space(reps_[i], rm);
            }
            return *hom_to_m[i];
        };
        for (const auto &inc : inclusions_) {
            const auto &from_a = homs(inc.sub);
            if (from_a.empty()) {
                continue;
            }
            std::vector<rep_hom> restricted;
            for (const auto &g : homs(inc.big)) {
                restricted.push_back(compose(g, inc.map));
            }
            const int rank = flatten_all(restricted, ambient_size(reps_[inc.sub], rm), opt_.p).rank();
            if (rank != static_cast<int>(from_a.size())) {
                return false;
            }
        }
        return true;
    }

    // D Tr x from a minimal presentation P_1 -> P_0 -> x -> 0; nullopt when x is projective.
    std::optional<interval_module> tau(const interval_module &x) const
    {
        const std::uint32_t p = opt_.p;
        const int v = alg_.vertices();
        const presentation_step s0 = projective_cover_of(alg_, rep(x));
        if (s0.kernel.dimension() == 0) {
            return std::nullopt;
        }
        const presentation_step s1 = projective_cover_of(alg_, s0.kernel);
        const rep_hom f = compose(s0.inclusion, s1.cover_map); // P_1 -> P_0

        std::vector<matrix_rep> proj(v);
        for (int a = 0; a < v; ++a) {
            proj[a] = realize(alg_, interval_module{a + 1, alg_.length(a + 1)}, p);
        }

        // U_a = Hom(P_1, e_a L), with im_a the image of Hom(P_0, e_a L) under - o f.
        std::vector<std::vector<rep_hom>> u(v);
        std::vector<fp_matrix> u_basis(v), annihilator(v);
        for (int a = 0; a < v; ++a) {
            u[a] = hom_space(s1.cover, proj[a]);
            const int amb = ambient_size(s1.cover, proj[a]);
            u_basis[a] = flatten_all(u[a], amb, p);
            std::vector<rep_hom> im;
            for (const auto &g : hom_space(s0.cover, proj[a])) {
                im.push_back(compose(g, f));
            }
            const fp_matrix im_coords = fp_matrix::coordinates(u_basis[a], flatten_all(im, amb, p));
            annihilator[a] = im_coords.transpose().nullspace();
        }

        matrix_rep out = empty_rep(alg_, p);
        for (int a = 0; a < v; ++a) {
            out.dims[a] = annihilator[a].cols();
        }
        for (int a = 0; a < out.arrow_count(); ++a) {
            const int b = out.head(a);
            // Left multiplication by the arrow a -> b is the hom P_b -> P_a hitting the path of length one.
            // On a loop (v = 1) slot 0 of the vertex is the top, so the path of length one is slot 1.
            fp_matrix w(proj[a].dims[b], 1, p);
            w(b == a ? 1 : 0, 0) = 1;
            const rep_hom left = hom_from_projective(alg_, b + 1, proj[a], w);
            std::vector<rep_hom> moved;
            for (const auto &g : u[b]) {
                moved.push_back(compose(left, g));
            }
            const fp_matrix act = fp_matrix::coordinates(
                u_basis[a], flatten_all(moved, ambient_size(s1.cover, proj[a]), p)); // U_b -> U_a
            out.arrows[a] = fp_matrix::coordinates(annihilator[b], act.transpose() * annihilator[a]);
        }
        return identify(out);
    }

private:
    struct inclusion {
        std::size_t sub;
        std::size_t big;
        rep_hom map;
    };

    void find_inclusions()
    {
        const std::uint32_t p = opt_.p;
        for (std::size_t i = 0; i < inds_.size(); ++i) {
            for (std::size_t j = 0; j < inds_.size(); ++j) {
                if (inds_[i].length > inds_[j].length) {
                    continue;
                }
                const auto basis = hom_space(reps_[i], reps_[j]);
                if (basis.empty()) {
                    continue;
                }
                std::uint64_t total = 1;
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    total *= p;
                    if (total > static_cast<std::uint64_t>(opt_.max_enumeration)) {
                        throw dimension_cap_exceeded("oracle: Hom space too large to enumerate");
                    }
                }
                std::vector<std::uint32_t> coef(basis.size(), 0);
                for (std::uint64_t n = 1; n < total; ++n) {
                    std::uint64_t q = n;
                    for (auto &c : coef) {
                        c = static_cast<std::uint32_t>(q % p);
                        q /= p;
                    }
                    rep_hom h = basis[0];
                    for (std::size_t a = 0; a < h.maps.size(); ++a) {
                        for (int r = 0; r < h.maps[a].rows(); ++r) {
                            for (int c = 0; c < h.maps[a].cols(); ++c) {
                                std::uint32_t s = 0;
                                for (std::size_t k = 0; k < basis.size(); ++k) {
                                    s = (s + coef[k] * basis[k].maps[a](r, c)) % p;
                                }
                                h.maps[a](r, c) = s;
                            }
                        }
                    }
                    if (is_mono(h)) {
                        inclusions_.push_back({i, j, std::move(h)});
                    }
                }
            }
        }
    }

    kupisch_series alg_;
    oracle_options opt_;
    std::vector<interval_module> inds_;
    std::vector<matrix_rep> reps_;
    std::vector<inclusion> inclusions_;
};

} // namespace nakayama::oracle
