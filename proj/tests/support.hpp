#pragma once

// Test helpers: seeded random admissible series and homological invariants
// recomputed from the matrix oracle alone (kernels of explicit projective
// covers, Ext^1 as a cokernel, injectivity by lifting).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <nakayama/nakayama.hpp>

namespace test_support
{

using namespace nakayama;

// Uniform over a simple rejection scheme; deterministic for a given seed.
inline kupisch_series random_series(std::mt19937_64 &rng, int max_vertices = 6, int max_length = 8)
{
    std::uniform_int_distribution<int> shape(0, 1), verts(1, max_vertices), len(2, std::max(2, max_length));
    for (;;) {
        const bool cyclic = shape(rng) == 1;
        const int v = verts(rng);
        std::vector<int> c(v);
        for (auto &x : c) {
            x = len(rng);
        }
        if (!cyclic) {
            c.back() = 1;
        }
        try {
            return kupisch_series::validate(c, cyclic);
        } catch (const not_admissible &) {
        }
    }
}

// Every admissible canonical series within the bounds, by brute force over all tuples.
inline std::vector<kupisch_series> brute_force_algebras(int max_vertices, int max_length)
{
    std::vector<kupisch_series> out;
    for (int cyclic = 0; cyclic <= 1; ++cyclic) {
        for (int v = 1; v <= max_vertices; ++v) {
            std::set<std::vector<int>> seen;
            std::vector<int> c(v, 1);
            for (;;) {
                try {
                    const auto alg = kupisch_series::validate(c, cyclic == 1);
                    if (seen.insert(alg.canonical().lengths()).second) {
                        out.push_back(alg.canonical());
                    }
                } catch (const nakayama::error &) {
                }
                int k = 0;
                while (k < v && c[k] == max_length) {
                    c[k++] = 1;
                }
                if (k == v) {
                    break;
                }
                ++c[k];
            }
        }
    }
    return out;
}

// Invariants from the matrix oracle only.
class oracle_invariants
{
public:
    explicit oracle_invariants(const kupisch_series &alg, std::uint32_t p = 2)
        : alg_(alg), o_(alg, oracle::oracle_options{p, 256, 4096})
    {
        bound_ = alg.dimension() + 2;
        for (const auto &m : indecomposables(alg)) {
            if (o_.is_injective(m)) {
                injectives_[socle_vertex(m)] = m;
            }
        }
    }

    const oracle::matrix_oracle &oracle() const { return o_; }

    static int socle_of(const interval_module &m) { return m.start + m.length - 1; }

    int socle_vertex(const interval_module &m) const { return alg_.vertex(socle_of(m)); }

    // Kernel of an explicit projective cover.
    std::optional<interval_module> syzygy(const interval_module &m) const
    {
        auto it = syz_.find(m);
        if (it == syz_.end()) {
            const auto st = oracle::projective_cover_of(alg_, o_.rep(m));
            it = syz_.emplace(m, oracle::identify(st.kernel)).first;
        }
        return it->second;
    }

    int ext1(const interval_module &x, const interval_module &y) const
    {
        auto it = ext1_.find({x, y});
        if (it == ext1_.end()) {
            it = ext1_.emplace(std::pair{x, y}, o_.ext1_dim(x, y)).first;
        }
        return it->second;
    }

    bool is_projective(const interval_module &m) const
    {
        for (const auto &y : indecomposables(alg_)) {
            if (ext1(m, y) != 0) {
                return false;
            }
        }
        return true;
    }

    // The indecomposable injective with socle S_j, found by lifting.
    interval_module injective(int j) const { return injectives_.at(alg_.vertex(j)); }

    std::size_t injective_count() const { return injectives_.size(); }

    // Projective lengths of the opposite algebra: injective lengths read backwards.
    std::vector<int> opposite_lengths() const
    {
        const int v = alg_.vertices();
        std::vector<int> out(v);
        for (int k = 1; k <= v; ++k) {
            out[k - 1] = injective(v + 1 - k).length;
        }
        return out;
    }

    extended_nat pd(const interval_module &m) const
    {
        std::set<interval_module> seen;
        std::optional<interval_module> cur = m;
        int k = 0;
        while (true) {
            auto next = syzygy(*cur);
            if (!next) {
                return k;
            }
            if (!seen.insert(*cur).second) {
                return extended_nat::infinity();
            }
            cur = next;
            ++k;
        }
    }

    // dim Ext^k(x, y) via Ext^1(Omega^{k-1} x, y).
    int ext(const interval_module &x, const interval_module &y, int k) const
    {
        if (k == 0) {
            return o_.hom_dim(x, y);
        }
        std::optional<interval_module> cur = x;
        for (int i = 1; i < k && cur; ++i) {
            cur = syzygy(*cur);
        }
        return cur ? ext1(*cur, y) : 0;
    }

    // Largest k with Ext^k(S, m) != 0 for a simple S. Syzygies of simples are
    // eventually periodic within bound_ steps, so a nonzero Ext past bound_ means infinity.
    extended_nat id(const interval_module &m) const
    {
        int last = 0;
        for (int k = 1; k <= 2 * bound_; ++k) {
            for (int j = 1; j <= alg_.vertices(); ++j) {
                if (ext(interval_module{j, 1}, m, k) != 0) {
                    last = k;
                }
            }
        }
        if (last > bound_) {
            return extended_nat::infinity();
        }
        return last;
    }

    extended_nat regular_id() const
    {
        extended_nat r = 0;
        for (int i = 1; i <= alg_.vertices(); ++i) {
            r = max(r, id(interval_module{i, alg_.length(i)}));
        }
        return r;
    }

    extended_nat gldim() const
    {
        extended_nat r = 0;
        for (int j = 1; j <= alg_.vertices(); ++j) {
            r = max(r, pd(interval_module{j, 1}));
        }
        return r;
    }

    // Bass numbers: I^k(P) contains I(S_j) iff Ext^k(S_j, P) != 0.
    extended_nat domdim() const
    {
        std::vector<bool> inj_proj(alg_.vertices() + 1);
        for (int j = 1; j <= alg_.vertices(); ++j) {
            inj_proj[j] = is_projective(injective(j));
        }
        extended_nat r = extended_nat::infinity();
        for (int i = 1; i <= alg_.vertices(); ++i) {
            const interval_module p{i, alg_.length(i)};
            for (int k = 0; k <= 2 * bound_; ++k) {
                bool ok = true;
                for (int j = 1; j <= alg_.vertices(); ++j) {
                    if (ext(interval_module{j, 1}, p, k) != 0 && !inj_proj[j]) {
                        ok = false;
                    }
                }
                if (!ok) {
                    r = min(r, extended_nat(k));
                    break;
                }
            }
        }
        return r;
    }

    // Largest k <= g with Ext^k(m, L) != 0.
    int gpd(const interval_module &m, int g) const
    {
        for (int k = g; k >= 1; --k) {
            for (int i = 1; i <= alg_.vertices(); ++i) {
                if (ext(m, interval_module{i, alg_.length(i)}, k) != 0) {
                    return k;
                }
            }
        }
        return 0;
    }

private:
    kupisch_series alg_;
    oracle::matrix_oracle o_;
    std::map<int, interval_module> injectives_;
    int bound_ = 0;
    mutable std::map<interval_module, std::optional<interval_module>> syz_;
    mutable std::map<std::pair<interval_module, interval_module>, int> ext1_;
};

} // namespace test_support
