#pragma once

// Text notation for series and modules.
//
//   series  := int ("," int)*
//   module  := term ("+" term)*
//   term    := "0" | "M(" int "," int ")" | "S(" int ")" | "P(" int ")" | "I(" int ")"
//
// Whitespace is ignored. Output uses S(i) for simples and M(i,l) otherwise.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include <nakayama/errors.hpp>
#include <nakayama/kupisch.hpp>
#include <nakayama/modules.hpp>

namespace nakayama::io
{

namespace detail
{

inline std::string strip_spaces(std::string_view s)
{
    std::string out;
    for (char ch : s) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            out += ch;
        }
    }
    return out;
}

class cursor
{
public:
    explicit cursor(std::string text) : s_(std::move(text)) {}

    bool done() const noexcept { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }

    bool accept(char ch)
    {
        if (peek() == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char ch)
    {
        if (!accept(ch)) {
            fail(std::string("expected '") + ch + "'");
        }
    }

    int integer()
    {
        int value = 0;
        const char *first = s_.data() + pos_;
        const char *last = s_.data() + s_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first) {
            fail("expected an integer");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    [[noreturn]] void fail(const std::string &what) const
    {
        throw parse_error(what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

private:
    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline std::vector<int> parse_lengths(std::string_view text)
{
    detail::cursor c(detail::strip_spaces(text));
    std::vector<int> out;
    if (c.done()) {
        throw parse_error("empty Kupisch series");
    }
    do {
        out.push_back(c.integer());
    } while (c.accept(','));
    if (!c.done()) {
        c.fail("unexpected character");
    }
    return out;
}

inline kupisch_series parse_kupisch(std::string_view text, bool cyclic)
{
    return kupisch_series::validate(parse_lengths(text), cyclic);
}

inline std::string format_module(const interval_module &m)
{
    if (m.length == 1) {
        return "S(" + std::to_string(m.start) + ")";
    }
    return "M(" + std::to_string(m.start) + "," + std::to_string(m.length) + ")";
}

inline std::string format_module(const module_sum &m)
{
    if (m.is_zero()) {
        return "0";
    }
    std::string s;
    for (const auto &x : m) {
        if (!s.empty()) {
            s += " + ";
        }
        s += format_module(x);
    }
    return s;
}

inline std::string format_lengths(const kupisch_series &alg)
{
    std::string s;
    for (int c : alg.lengths()) {
        if (!s.empty()) {
            s += ',';
        }
        s += std::to_string(c);
    }
    return s;
}

// Vertex arguments are reduced mod v on cyclic algebras.
inline module_sum parse_module(const kupisch_series &alg, std::string_view text)
{
    detail::cursor c(detail::strip_spaces(text));
    if (c.done()) {
        throw parse_error("empty module expression");
    }
    std::vector<interval_module> parts;
    auto vertex_arg = [&]() {
        const int i = c.integer();
        if (!alg.cyclic() && (i < 1 || i > alg.vertices())) {
            throw invalid_module("vertex " + std::to_string(i) + " out of range for " + alg.to_string());
        }
        return i;
    };
    do {
        const char head = c.peek();
        if (c.accept('0')) {
            continue;
        }
        if (head != 'M' && head != 'S' && head != 'P' && head != 'I') {
            c.fail("expected 0, M, S, P or I");
        }
        c.accept(head);
        c.expect('(');
        const int i = vertex_arg();
        if (head == 'M') {
            c.expect(',');
            const int l = c.integer();
            parts.push_back(make_module(alg, i, l));
        } else if (head == 'S') {
            parts.push_back(simple(alg, i));
        } else if (head == 'P') {
            parts.push_back(projective(alg, i));
        } else {
            parts.push_back(injective(alg, i));
        }
        c.expect(')');
    } while (c.accept('+'));
    if (!c.done()) {
        c.fail("unexpected character");
    }
    return module_sum(std::move(parts));
}

} // namespace nakayama::io
