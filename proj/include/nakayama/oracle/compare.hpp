#pragma once

// Combinatorial engine vs matrix oracle on every indecomposable (pair).

#include <optional>
#include <string>
#include <vector>

#include <nakayama/homology.hpp>
#include <nakayama/kupisch.hpp>
#include <nakayama/modules.hpp>
#include <nakayama/oracle/matrix_oracle.hpp>
#include <nakayama/precluster.hpp>

namespace nakayama::oracle
{

struct mismatch {
    std::string quantity; // "hom", "ext1", "injective" or "tau"
    interval_module x;
    std::optional<interval_module> y;
    std::string engine;
    std::string oracle;
};

struct comparison {
    std::size_t pairs = 0;
    std::size_t modules = 0;
    std::vector<mismatch> mismatches;

    bool agrees() const noexcept { return mismatches.empty(); }
};

namespace detail
{

inline std::string text(const std::optional<interval_module> &m)
{
    if (!m) {
        return "0";
    }
    return "M(" + std::to_string(m->start) + "," + std::to_string(m->length) + ")";
}

} // namespace detail

inline comparison compare_with_oracle(const kupisch_series &alg, oracle_options opt = {})
{
    const matrix_oracle o(alg, opt);
    comparison c;
    const auto inds = indecomposables(alg);
    for (const auto &x : inds) {
        ++c.modules;
        const bool inj_e = is_injective(alg, x);
        const bool inj_o = o.is_injective(x);
        if (inj_e != inj_o) {
            c.mismatches.push_back({"injective", x, std::nullopt, inj_e ? "true" : "false", inj_o ? "true" : "false"});
        }
        const auto tau_e = ar_translate(alg, x);
        const auto tau_o = o.tau(x);
        if (tau_e != tau_o) {
            c.mismatches.push_back({"tau", x, std::nullopt, detail::text(tau_e), detail::text(tau_o)});
        }
        for (const auto &y : inds) {
            ++c.pairs;
            const int he = hom_dim(alg, x, y);
            const int ho = o.hom_dim(x, y);
            if (he != ho) {
                c.mismatches.push_back({"hom", x, y, std::to_string(he), std::to_string(ho)});
            }
            const int ee = ext_dim(alg, x, y, 1);
            const int eo = o.ext1_dim(x, y);
            if (ee != eo) {
                c.mismatches.push_back({"ext1", x, y, std::to_string(ee), std::to_string(eo)});
            }
        }
    }
    return c;
}

} // namespace nakayama::oracle
