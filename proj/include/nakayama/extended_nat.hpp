#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <optional>
#include <ostream>
#include <string>

namespace nakayama
{

// A homological dimension: a finite non-negative integer or infinity.
class extended_nat
{
public:
    constexpr extended_nat() noexcept = default;
    constexpr extended_nat(int value) noexcept : value_(value) { assert(value >= 0); }

    static constexpr extended_nat infinity() noexcept
    {
        extended_nat r;
        r.value_.reset();
        return r;
    }

    constexpr bool is_finite() const noexcept { return value_.has_value(); }
    constexpr bool is_infinite() const noexcept { return !value_.has_value(); }

    // Precondition: is_finite().
    constexpr int value() const
    {
        assert(is_finite());
        return *value_;
    }

    friend constexpr bool operator==(const extended_nat &, const extended_nat &) = default;

    friend constexpr std::strong_ordering operator<=>(const extended_nat &a, const extended_nat &b) noexcept
    {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() <=> b.is_infinite();
        }
        return *a.value_ <=> *b.value_;
    }

    friend constexpr extended_nat max(const extended_nat &a, const extended_nat &b) noexcept
    {
        return a < b ? b : a;
    }

    friend constexpr extended_nat min(const extended_nat &a, const extended_nat &b) noexcept
    {
        return b < a ? b : a;
    }

    std::string to_string() const { return is_finite() ? std::to_string(*value_) : std::string("infinity"); }

    friend std::ostream &operator<<(std::ostream &os, const extended_nat &x) { return os << x.to_string(); }

private:
    std::optional<int> value_ = 0;
};

inline constexpr extended_nat infinity = extended_nat::infinity();

} // namespace nakayama
