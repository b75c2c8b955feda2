#pragma once

// Auslander-Reiten translations, higher translations and the n-precluster
// tilting conditions for additive subcategories of a Nakayama module category.
//
// Higher translations are taken on modules, not stable classes: when an
// intermediate (co)syzygy is zero, or the final argument of tau (tau^-) is
// projective (injective), the image is the zero module.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nakayama/errors.hpp>
#include <nakayama/homology.hpp>
#include <nakayama/kupisch.hpp>
#include <nakayama/modules.hpp>

namespace nakayama
{

// tau M(i,l) = M(i+1,l) for non-projective M(i,l). The shift was calibrated against
// the transpose-dual computed by the matrix oracle.
inline std::optional<interval_module> ar_translate(const kupisch_series &alg, const interval_module &m)
{
    if (is_projective(alg, m)) {
        return std::nullopt;
    }
    return interval_module{alg.vertex(m.start + 1), m.length};
}

inline std::optional<interval_module> ar_translate_inv(const kupisch_series &alg, const interval_module &m)
{
    if (is_injective(alg, m)) {
        return std::nullopt;
    }
    return interval_module{alg.vertex(m.start - 1), m.length};
}

inline module_sum ar_translate(const kupisch_series &alg, const module_sum &m)
{
    return detail::map_summands(m, [&](const interval_module &x) { return ar_translate(alg, x); });
}

inline module_sum ar_translate_inv(const kupisch_series &alg, const module_sum &m)
{
    return detail::map_summands(m, [&](const interval_module &x) { return ar_translate_inv(alg, x); });
}

// tau_n = tau Omega^{n-1}.
inline module_sum tau_n(const kupisch_series &alg, const module_sum &m, int n)
{
    if (n < 1) {
        throw precondition_failed("tau_n requires n >= 1");
    }
    return ar_translate(alg, syzygy(alg, m, n - 1));
}

// tau_n^- = tau^- Omega^{-(n-1)}.
inline module_sum tau_n_inv(const kupisch_series &alg, const module_sum &m, int n)
{
    if (n < 1) {
        throw precondition_failed("tau_n^- requires n >= 1");
    }
    return ar_translate_inv(alg, cosyzygy(alg, m, n - 1));
}

// The indecomposable summands of an additive generator M, add M = C.
struct precluster_candidate {
    std::vector<interval_module> members; // sorted, duplicate free

    precluster_candidate() = default;
    explicit precluster_candidate(std::vector<interval_module> ms) : members(std::move(ms))
    {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }

    bool contains(const interval_module &m) const { return std::binary_search(members.begin(), members.end(), m); }
};

struct precluster_violation {
    int condition = 0; // 1..3
    std::string witness;
};

struct precluster_verdict {
    bool passed = true;
    std::vector<precluster_violation> violations;
    // Condition (4) is automatic: every additive subcategory of a representation-finite
    // module category is functorially finite.
    std::string functorial_finiteness = "automatic (representation-finite)";
};

namespace detail
{

inline std::string module_label(const interval_module &m)
{
    return "M(" + std::to_string(m.start) + "," + std::to_string(m.length) + ")";
}

} // namespace detail

inline precluster_candidate all_indecomposables(const kupisch_series &alg)
{
    return precluster_candidate(indecomposables(alg));
}

inline precluster_candidate projectives_only(const kupisch_series &alg)
{
    const module_sum reg = regular_module(alg);
    return precluster_candidate(reg.summands());
}

inline precluster_verdict is_precluster(const kupisch_series &alg, const precluster_candidate &cand, int n)
{
    if (n < 1) {
        throw precondition_failed("precluster check requires n >= 1");
    }
    precluster_verdict v;
    auto fail = [&](int condition, std::string witness) {
        v.passed = false;
        v.violations.push_back({condition, std::move(witness)});
    };

    for (int i = 1; i <= alg.vertices(); ++i) {
        if (!cand.contains(projective(alg, i))) {
            fail(1, "missing projective P(" + std::to_string(i) + ") = " + detail::module_label(projective(alg, i)));
        }
        if (!cand.contains(injective(alg, i))) {
            fail(1, "missing injective I(" + std::to_string(i) + ") = " + detail::module_label(injective(alg, i)));
        }
    }

    for (const auto &m : cand.members) {
        for (const auto &x : tau_n(alg, m, n)) {
            if (!cand.contains(x)) {
                fail(2, "tau_" + std::to_string(n) + " " + detail::module_label(m) + " = " + detail::module_label(x));
            }
        }
        for (const auto &x : tau_n_inv(alg, m, n)) {
            if (!cand.contains(x)) {
                fail(2, "tau_" + std::to_string(n) + "^- " + detail::module_label(m) + " = " + detail::module_label(x));
            }
        }
    }

    for (int k = 1; k < n; ++k) {
        for (const auto &x : cand.members) {
            for (const auto &y : cand.members) {
                if (ext_dim(alg, x, y, k) != 0) {
                    fail(3, "Ext^" + std::to_string(k) + "(" + detail::module_label(x) + ", " + detail::module_label(y)
                                + ") != 0");
                }
            }
        }
    }
    return v;
}

// All passing candidates containing every projective and injective plus at most
// max_extra further indecomposables, ordered by number of extras then lexicographically.
inline std::vector<precluster_candidate> search_precluster(const kupisch_series &alg, int n, int max_extra,
                                                           std::uint64_t max_subsets = 1u << 20)
{
    std::set<interval_module> seed;
    for (int i = 1; i <= alg.vertices(); ++i) {
        seed.insert(projective(alg, i));
        seed.insert(injective(alg, i));
    }
    std::vector<interval_module> rest;
    for (const auto &m : indecomposables(alg)) {
        if (!seed.count(m)) {
            rest.push_back(m);
        }
    }
    const int r = static_cast<int>(rest.size());
    const int kmax = std::clamp(max_extra, 0, r);

    std::uint64_t total = 0;
    std::uint64_t binom = 1;
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) {
            binom = binom * static_cast<std::uint64_t>(r - k + 1) / static_cast<std::uint64_t>(k);
        }
        total += binom;
        if (total > max_subsets) {
            throw search_space_too_large("precluster search over " + alg.to_string() + " exceeds "
                                         + std::to_string(max_subsets) + " subsets");
        }
    }

    std::vector<precluster_candidate> out;
    std::vector<int> idx;
    for (int k = 0; k <= kmax; ++k) {
        idx.resize(k);
        for (int i = 0; i < k; ++i) {
            idx[i] = i;
        }
        while (true) {
            std::vector<interval_module> members(seed.begin(), seed.end());
            for (int i : idx) {
                members.push_back(rest[i]);
            }
            precluster_candidate cand(std::move(members));
            if (is_precluster(alg, cand, n).passed) {
                out.push_back(std::move(cand));
            }
            // next combination in lexicographic order
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == r - k + pos) {
                --pos;
            }
            if (pos < 0) {
                break;
            }
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i) {
                idx[i] = idx[i - 1] + 1;
            }
        }
    }
    return out;
}

} // namespace nakayama
