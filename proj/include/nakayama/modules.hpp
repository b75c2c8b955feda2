#pragma once

// Finitely generated modules as multisets of interval modules, and their
// structure maps. Everything here works on isomorphism classes only.

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include <nakayama/errors.hpp>
#include <nakayama/kupisch.hpp>

namespace nakayama
{

// A direct sum of interval modules, kept sorted. The empty sum is the zero module.
class module_sum
{
public:
    module_sum() = default;
    module_sum(interval_module m) : summands_{m} {}
    module_sum(std::initializer_list<interval_module> ms) : summands_(ms) { normalise(); }
    explicit module_sum(std::vector<interval_module> ms) : summands_(std::move(ms)) { normalise(); }

    const std::vector<interval_module> &summands() const noexcept { return summands_; }
    bool is_zero() const noexcept { return summands_.empty(); }
    std::size_t size() const noexcept { return summands_.size(); }

    auto begin() const noexcept { return summands_.begin(); }
    auto end() const noexcept { return summands_.end(); }

    int dimension() const
    {
        int d = 0;
        for (const auto &m : summands_) {
            d += m.length;
        }
        return d;
    }

    module_sum &operator+=(const module_sum &other)
    {
        summands_.insert(summands_.end(), other.summands_.begin(), other.summands_.end());
        normalise();
        return *this;
    }

    friend module_sum operator+(module_sum a, const module_sum &b) { return a += b; }

    friend bool operator==(const module_sum &, const module_sum &) = default;
    friend auto operator<=>(const module_sum &, const module_sum &) = default;

private:
    void normalise() { std::sort(summands_.begin(), summands_.end()); }

    std::vector<interval_module> summands_;
};

namespace detail
{

// Applies an indecomposable-valued (or zero) map to every summand.
template <typename F>
module_sum map_summands(const module_sum &m, F &&f)
{
    std::vector<interval_module> out;
    out.reserve(m.size());
    for (const auto &s : m) {
        if (std::optional<interval_module> r = f(s)) {
            out.push_back(*r);
        }
    }
    return module_sum(std::move(out));
}

} // namespace detail

// Direct sum of all indecomposable projectives.
inline module_sum regular_module(const kupisch_series &alg)
{
    std::vector<interval_module> ps;
    for (int i = 1; i <= alg.vertices(); ++i) {
        ps.push_back(projective(alg, i));
    }
    return module_sum(std::move(ps));
}

inline module_sum socle(const kupisch_series &alg, const module_sum &m)
{
    return detail::map_summands(m, [&](const interval_module &s) {
        return std::optional(interval_module{socle_vertex(alg, s), 1});
    });
}

inline module_sum top(const kupisch_series &, const module_sum &m)
{
    return detail::map_summands(m, [](const interval_module &s) { return std::optional(interval_module{s.start, 1}); });
}

// J^s M. Zero once s reaches the length of a summand.
inline module_sum radical_power(const kupisch_series &alg, const module_sum &m, int s)
{
    return detail::map_summands(m, [&](const interval_module &x) -> std::optional<interval_module> {
        if (s <= 0) {
            return x;
        }
        if (s >= x.length) {
            return std::nullopt;
        }
        return interval_module{alg.vertex(x.start + s), x.length - s};
    });
}

inline module_sum radical(const kupisch_series &alg, const module_sum &m) { return radical_power(alg, m, 1); }

// The unique submodule of length s of each summand (the whole summand if s exceeds its length).
inline module_sum socle_part(const kupisch_series &alg, const module_sum &m, int s)
{
    return detail::map_summands(m, [&](const interval_module &x) -> std::optional<interval_module> {
        if (s <= 0) {
            return std::nullopt;
        }
        if (s >= x.length) {
            return x;
        }
        return interval_module{alg.vertex(x.start + x.length - s), s};
    });
}

// M / J^s M.
inline module_sum radical_quotient(const kupisch_series &, const module_sum &m, int s)
{
    return detail::map_summands(m, [&](const interval_module &x) -> std::optional<interval_module> {
        if (s <= 0) {
            return std::nullopt;
        }
        return interval_module{x.start, std::min(s, x.length)};
    });
}

inline module_sum projective_cover(const kupisch_series &alg, const module_sum &m)
{
    return detail::map_summands(m, [&](const interval_module &x) { return std::optional(projective(alg, x.start)); });
}

inline module_sum injective_envelope(const kupisch_series &alg, const module_sum &m)
{
    return detail::map_summands(m, [&](const interval_module &x) {
        return std::optional(injective(alg, socle_vertex(alg, x)));
    });
}

inline bool is_projective(const kupisch_series &alg, const module_sum &m)
{
    return std::all_of(m.begin(), m.end(), [&](const interval_module &x) { return is_projective(alg, x); });
}

inline bool is_injective(const kupisch_series &alg, const module_sum &m)
{
    return std::all_of(m.begin(), m.end(), [&](const interval_module &x) { return is_injective(alg, x); });
}

// sub is isomorphic to a submodule of big.
inline bool embeds_in(const kupisch_series &alg, const interval_module &sub, const interval_module &big)
{
    return socle_vertex(alg, sub) == socle_vertex(alg, big) && sub.length <= big.length;
}

// Every summand embeds into an indecomposable projective. Both characterisations
// (embedding into some P_i, and projectivity of the injective envelope) are
// evaluated and must agree.
inline bool in_sub_lambda(const kupisch_series &alg, const module_sum &m)
{
    bool by_embedding = true;
    for (const auto &x : m) {
        bool found = false;
        for (int i = 1; i <= alg.vertices() && !found; ++i) {
            found = embeds_in(alg, x, projective(alg, i));
        }
        by_embedding = by_embedding && found;
    }
    const bool by_envelope = is_projective(alg, injective_envelope(alg, m));
    if (by_embedding != by_envelope) {
        throw internal_inconsistency("subL criteria disagree on a module over " + alg.to_string());
    }
    return by_embedding;
}

// dim Hom(M(i,l), M(j,m)): one dimension for every submodule of the target
// whose top is S_i and whose length is at most l.
inline int hom_dim(const kupisch_series &alg, const interval_module &x, const interval_module &y)
{
    int count = 0;
    const int bound = std::min(x.length, y.length);
    for (int t = 1; t <= bound; ++t) {
        if (alg.vertex(y.start + y.length - t) == x.start) {
            ++count;
        }
    }
    return count;
}

inline int hom_dim(const kupisch_series &alg, const module_sum &x, const module_sum &y)
{
    int total = 0;
    for (const auto &a : x) {
        for (const auto &b : y) {
            total += hom_dim(alg, a, b);
        }
    }
    return total;
}

} // namespace nakayama
