#pragma once

// Connected Nakayama algebras given by their Kupisch series.
//
// Vertices are numbered 1..v. The quiver has an arrow i -> i+1 for every
// vertex (indices mod v) in the cyclic case and for i < v in the linear case,
// so rad P_i is a quotient of P_{i+1}. Modules are right modules; the
// indecomposable M(i,l) = e_i L / e_i J^l has composition factors
// S_i, S_{i+1}, ..., S_{i+l-1} from top to socle.

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nakayama/errors.hpp>

namespace nakayama
{

// The indecomposable M(start, length). Start is a vertex in 1..v.
struct interval_module {
    int start = 1;
    int length = 1;

    friend constexpr auto operator<=>(const interval_module &, const interval_module &) = default;
};

class kupisch_series
{
public:
    // Checks admissibility. Throws empty_series or not_admissible.
    static kupisch_series validate(std::vector<int> lengths, bool cyclic)
    {
        if (lengths.empty()) {
            throw empty_series();
        }
        const int v = static_cast<int>(lengths.size());
        for (int i = 0; i < v; ++i) {
            if (lengths[i] < 1) {
                throw not_admissible(i + 1, "c_i >= 1");
            }
        }
        if (cyclic) {
            for (int i = 0; i < v; ++i) {
                if (lengths[i] < 2) {
                    throw not_admissible(i + 1, "cyclic series requires c_i >= 2");
                }
            }
            for (int i = 0; i < v; ++i) {
                const int next = (i + 1) % v;
                if (lengths[next] < lengths[i] - 1) {
                    throw not_admissible(next + 1, "c_{i+1} >= c_i - 1");
                }
            }
        } else {
            if (lengths[v - 1] != 1) {
                throw not_admissible(v, "linear series requires c_v = 1");
            }
            for (int i = 0; i + 1 < v; ++i) {
                if (lengths[i] < 2) {
                    throw not_admissible(i + 1, "linear series requires c_i >= 2 for i < v");
                }
                if (lengths[i + 1] < lengths[i] - 1) {
                    throw not_admissible(i + 2, "c_{i+1} >= c_i - 1");
                }
            }
        }
        return kupisch_series(std::move(lengths), cyclic);
    }

    int vertices() const noexcept { return static_cast<int>(lengths_.size()); }
    bool cyclic() const noexcept { return cyclic_; }
    const std::vector<int> &lengths() const noexcept { return lengths_; }

    // Normalises an arbitrary integer to a vertex in 1..v (mod v when cyclic).
    int vertex(int k) const
    {
        const int v = vertices();
        if (cyclic_) {
            return ((k - 1) % v + v) % v + 1;
        }
        if (k < 1 || k > v) {
            throw invalid_module("vertex " + std::to_string(k) + " outside 1.." + std::to_string(v));
        }
        return k;
    }

    // Loewy length c_i of P_i.
    int length(int i) const { return lengths_[vertex(i) - 1]; }

    int dimension() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0); }

    // Linear with v = 1, the only semisimple connected Nakayama algebra.
    bool is_semisimple() const noexcept { return !cyclic_ && vertices() == 1; }

    // Whether M(start, len) exists over this algebra.
    bool admits(int start, int len) const
    {
        if (len < 1) {
            return false;
        }
        if (!cyclic_ && (start < 1 || start > vertices())) {
            return false;
        }
        return len <= length(start);
    }

    bool admits(const interval_module &m) const { return admits(m.start, m.length); }

    // Lexicographically minimal rotation for cyclic series; linear series are unchanged.
    kupisch_series canonical() const
    {
        if (!cyclic_) {
            return *this;
        }
        std::vector<int> best = lengths_;
        std::vector<int> rot = lengths_;
        for (int r = 1; r < vertices(); ++r) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            best = std::min(best, rot);
        }
        return kupisch_series(std::move(best), true);
    }

    // Vertex k of the canonical form corresponds to vertex vertex(k + canonical_offset()) here.
    int canonical_offset() const
    {
        if (!cyclic_) {
            return 0;
        }
        const auto target = canonical().lengths_;
        std::vector<int> rot = lengths_;
        for (int r = 0; r < vertices(); ++r) {
            if (rot == target) {
                return r;
            }
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        }
        return 0;
    }

    // Equality of algebras: equality of canonical forms.
    friend bool operator==(const kupisch_series &a, const kupisch_series &b)
    {
        if (a.cyclic_ != b.cyclic_) {
            return false;
        }
        return a.canonical().lengths_ == b.canonical().lengths_;
    }

    // Total order on canonical forms: linear before cyclic, then by size, then lexicographic.
    friend bool canonical_less(const kupisch_series &a, const kupisch_series &b)
    {
        const auto ca = a.canonical();
        const auto cb = b.canonical();
        return std::tuple(ca.cyclic_, ca.vertices(), ca.lengths_) < std::tuple(cb.cyclic_, cb.vertices(), cb.lengths_);
    }

    // "[3,3,4]c" or "[3,3,3,3,2,1]l".
    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < lengths_.size(); ++i) {
            if (i) {
                s += ',';
            }
            s += std::to_string(lengths_[i]);
        }
        s += ']';
        s += cyclic_ ? 'c' : 'l';
        return s;
    }

private:
    kupisch_series(std::vector<int> lengths, bool cyclic) : lengths_(std::move(lengths)), cyclic_(cyclic) {}

    std::vector<int> lengths_;
    bool cyclic_;
};

// Normalises the start vertex and checks the module exists.
inline interval_module make_module(const kupisch_series &alg, int start, int length)
{
    if (!alg.admits(start, length)) {
        throw invalid_module("M(" + std::to_string(start) + "," + std::to_string(length) + ") does not exist over "
                             + alg.to_string());
    }
    return interval_module{alg.vertex(start), length};
}

inline int socle_vertex(const kupisch_series &alg, const interval_module &m)
{
    return alg.vertex(m.start + m.length - 1);
}

inline interval_module projective(const kupisch_series &alg, int i)
{
    return interval_module{alg.vertex(i), alg.length(i)};
}

inline interval_module simple(const kupisch_series &alg, int i) { return interval_module{alg.vertex(i), 1}; }

// The indecomposable injective with socle S_j: the longest M(j-m+1, m) that exists.
inline interval_module injective(const kupisch_series &alg, int j)
{
    j = alg.vertex(j);
    int d = 1;
    for (;;) {
        const int m = d + 1;
        const int start = j - m + 1;
        if (!alg.cyclic() && start < 1) {
            break;
        }
        if (!alg.admits(alg.cyclic() ? alg.vertex(start) : start, m)) {
            break;
        }
        d = m;
    }
    return interval_module{alg.vertex(j - d + 1), d};
}

inline bool is_projective(const kupisch_series &alg, const interval_module &m) { return m.length == alg.length(m.start); }

inline bool is_injective(const kupisch_series &alg, const interval_module &m)
{
    return injective(alg, socle_vertex(alg, m)) == m;
}

// Kupisch series of the opposite algebra. Vertex j here becomes vertex v+1-j there,
// and the projective there has the length of the injective I_j here.
inline kupisch_series opposite(const kupisch_series &alg)
{
    const int v = alg.vertices();
    std::vector<int> lengths(v);
    for (int k = 1; k <= v; ++k) {
        lengths[k - 1] = injective(alg, v + 1 - k).length;
    }
    return kupisch_series::validate(std::move(lengths), alg.cyclic());
}

// All indecomposable modules, ordered by (start, length).
inline std::vector<interval_module> indecomposables(const kupisch_series &alg)
{
    std::vector<interval_module> out;
    out.reserve(alg.dimension());
    for (int i = 1; i <= alg.vertices(); ++i) {
        for (int l = 1; l <= alg.length(i); ++l) {
            out.push_back({i, l});
        }
    }
    return out;
}

} // namespace nakayama
