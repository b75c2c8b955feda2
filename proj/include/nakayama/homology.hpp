#pragma once

// Syzygies, resolutions, homological dimensions and Ext.
//
// A non-projective indecomposable has exactly one indecomposable syzygy, so
// the syzygy orbit of an interval module is deterministic and lives in a
// finite set: it either reaches zero or becomes periodic. Infinite
// dimensions are detected as cycles in that orbit.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nakayama/errors.hpp>
#include <nakayama/extended_nat.hpp>
#include <nakayama/kupisch.hpp>
#include <nakayama/modules.hpp>

namespace nakayama
{

inline std::optional<interval_module> syzygy(const kupisch_series &alg, const interval_module &m)
{
    const int c = alg.length(m.start);
    if (m.length == c) {
        return std::nullopt;
    }
    return interval_module{alg.vertex(m.start + m.length), c - m.length};
}

inline std::optional<interval_module> cosyzygy(const kupisch_series &alg, const interval_module &m)
{
    const interval_module env = injective(alg, socle_vertex(alg, m));
    if (env.length == m.length) {
        return std::nullopt;
    }
    return interval_module{env.start, env.length - m.length};
}

inline module_sum syzygy(const kupisch_series &alg, const module_sum &m)
{
    return detail::map_summands(m, [&](const interval_module &x) { return syzygy(alg, x); });
}

inline module_sum cosyzygy(const kupisch_series &alg, const module_sum &m)
{
    return detail::map_summands(m, [&](const interval_module &x) { return cosyzygy(alg, x); });
}

inline module_sum syzygy(const kupisch_series &alg, const module_sum &m, int k)
{
    module_sum cur = m;
    for (int i = 0; i < k && !cur.is_zero(); ++i) {
        cur = syzygy(alg, cur);
    }
    return cur;
}

inline module_sum cosyzygy(const kupisch_series &alg, const module_sum &m, int k)
{
    module_sum cur = m;
    for (int i = 0; i < k && !cur.is_zero(); ++i) {
        cur = cosyzygy(alg, cur);
    }
    return cur;
}

enum class resolution_kind { projective, injective };

// Minimal projective resolution (terms P_k, kernels Omega^{k+1} m) or minimal
// injective coresolution (terms I^k, kernels Omega^{-(k+1)} m).
struct resolution {
    resolution_kind kind = resolution_kind::projective;
    std::vector<module_sum> terms;
    std::vector<module_sum> kernels;
    bool terminated = false;
    // First kernel index that recurs later; set iff the resolution is infinite.
    std::optional<std::size_t> periodic_from;
};

namespace detail
{

template <typename Term, typename Step>
resolution build_resolution(resolution_kind kind, const module_sum &m, Term &&term, Step &&step)
{
    resolution r;
    r.kind = kind;
    module_sum cur = m;
    while (true) {
        r.terms.push_back(term(cur));
        module_sum next = step(cur);
        r.kernels.push_back(next);
        if (next.is_zero()) {
            r.terminated = true;
            return r;
        }
        // Kernels are sums of at most size(m) summands drawn from a finite set.
        for (std::size_t k = 0; k + 1 < r.kernels.size(); ++k) {
            if (r.kernels[k] == next) {
                r.periodic_from = k;
                return r;
            }
        }
        cur = std::move(next);
    }
}

// Steps until the orbit of x under step hits zero, or infinity on a cycle.
template <typename Step>
extended_nat orbit_length(const interval_module &x, Step &&step)
{
    std::set<interval_module> seen;
    std::optional<interval_module> cur = x;
    int k = 0;
    while (true) {
        std::optional<interval_module> next = step(*cur);
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

} // namespace detail

inline resolution projective_resolution(const kupisch_series &alg, const module_sum &m)
{
    return detail::build_resolution(
        resolution_kind::projective, m, [&](const module_sum &x) { return projective_cover(alg, x); },
        [&](const module_sum &x) { return syzygy(alg, x); });
}

inline resolution injective_coresolution(const kupisch_series &alg, const module_sum &m)
{
    return detail::build_resolution(
        resolution_kind::injective, m, [&](const module_sum &x) { return injective_envelope(alg, x); },
        [&](const module_sum &x) { return cosyzygy(alg, x); });
}

// pd of the zero module is reported as 0.
inline extended_nat pd(const kupisch_series &alg, const module_sum &m)
{
    extended_nat r = 0;
    for (const auto &x : m) {
        r = max(r, detail::orbit_length(x, [&](const interval_module &y) { return syzygy(alg, y); }));
    }
    return r;
}

inline extended_nat id(const kupisch_series &alg, const module_sum &m)
{
    extended_nat r = 0;
    for (const auto &x : m) {
        r = max(r, detail::orbit_length(x, [&](const interval_module &y) { return cosyzygy(alg, y); }));
    }
    return r;
}

inline extended_nat gldim(const kupisch_series &alg)
{
    extended_nat r = 0;
    for (int i = 1; i <= alg.vertices(); ++i) {
        r = max(r, pd(alg, simple(alg, i)));
    }
    return r;
}

inline extended_nat regular_id(const kupisch_series &alg) { return id(alg, regular_module(alg)); }

inline extended_nat regular_id_left(const kupisch_series &alg) { return regular_id(opposite(alg)); }

// Number of leading projective terms in the minimal injective coresolution of m;
// infinity if every term is projective.
inline extended_nat dominant_dimension(const kupisch_series &alg, const interval_module &m)
{
    std::set<interval_module> seen;
    interval_module cur = m;
    int k = 0;
    while (true) {
        if (!is_projective(alg, injective(alg, socle_vertex(alg, cur)))) {
            return k;
        }
        std::optional<interval_module> next = cosyzygy(alg, cur);
        if (!next || !seen.insert(cur).second) {
            return extended_nat::infinity();
        }
        cur = *next;
        ++k;
    }
}

inline extended_nat domdim(const kupisch_series &alg)
{
    extended_nat r = extended_nat::infinity();
    for (int i = 1; i <= alg.vertices(); ++i) {
        r = min(r, dominant_dimension(alg, projective(alg, i)));
    }
    return r;
}

// dim Ext^1(z, y) for indecomposable z, from 0 -> Omega z -> P(z) -> z -> 0.
inline int ext1_dim(const kupisch_series &alg, const interval_module &z, const module_sum &y)
{
    const std::optional<interval_module> omega = syzygy(alg, z);
    if (!omega) {
        return 0;
    }
    return hom_dim(alg, module_sum(*omega), y) - hom_dim(alg, module_sum(projective(alg, z.start)), y)
           + hom_dim(alg, module_sum(z), y);
}

inline int ext_dim(const kupisch_series &alg, const module_sum &x, const module_sum &y, int k)
{
    if (k < 0) {
        throw precondition_failed("Ext degree must be non-negative");
    }
    if (k == 0) {
        return hom_dim(alg, x, y);
    }
    int total = 0;
    for (const auto &s : x) {
        const module_sum shifted = syzygy(alg, module_sum(s), k - 1);
        for (const auto &z : shifted) {
            total += ext1_dim(alg, z, y);
        }
    }
    return total;
}

// Common value of the left and right injective dimensions of the regular module.
inline extended_nat gorenstein_degree(const kupisch_series &alg)
{
    const extended_nat right = regular_id(alg);
    const extended_nat left = regular_id_left(alg);
    if (right.is_finite() != left.is_finite() || right != left) {
        throw gorenstein_asymmetry("id of the regular module is " + right.to_string() + " on the right but "
                                   + left.to_string() + " on the left for " + alg.to_string());
    }
    return right;
}

// Gpd via the largest degree with Ext^k(m, L) != 0, with g the Gorenstein degree.
// Degrees above g vanish, so the search stops there.
inline int gpd(const kupisch_series &alg, const module_sum &m, int g)
{
    const module_sum lambda = regular_module(alg);
    for (int k = g; k >= 1; --k) {
        if (ext_dim(alg, m, lambda, k) != 0) {
            return k;
        }
    }
    return 0;
}

inline int gpd(const kupisch_series &alg, const module_sum &m)
{
    const extended_nat g = gorenstein_degree(alg);
    if (g.is_infinite()) {
        throw not_gorenstein(alg.to_string() + " is not Gorenstein; Gpd is not computed");
    }
    return gpd(alg, m, g.value());
}

inline bool is_gorenstein_projective(const kupisch_series &alg, const module_sum &m) { return gpd(alg, m) == 0; }

// Indecomposable Gorenstein projective modules.
inline std::vector<interval_module> gp_census(const kupisch_series &alg)
{
    const extended_nat g = gorenstein_degree(alg);
    if (g.is_infinite()) {
        throw not_gorenstein(alg.to_string() + " is not Gorenstein");
    }
    std::vector<interval_module> out;
    for (const auto &m : indecomposables(alg)) {
        if (gpd(alg, m, g.value()) == 0) {
            out.push_back(m);
        }
    }
    return out;
}

} // namespace nakayama
