#pragma once

// Exhaustive enumeration of admissible series and the JSONL sweep driver.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <nakayama/classifier.hpp>
#include <nakayama/errors.hpp>
#include <nakayama/io/report.hpp>
#include <nakayama/kupisch.hpp>

namespace nakayama::io
{

enum class sweep_shape { linear, cyclic, both };

inline sweep_shape parse_shape(const std::string &s)
{
    if (s == "linear") {
        return sweep_shape::linear;
    }
    if (s == "cyclic") {
        return sweep_shape::cyclic;
    }
    if (s == "both") {
        return sweep_shape::both;
    }
    throw parse_error("shape must be linear, cyclic or both, got \"" + s + "\"");
}

struct sweep_spec {
    int max_vertices = 3;
    int max_length = 4;
    sweep_shape shape = sweep_shape::both;
    int n_min = 0;
    int n_max = 64;
    std::uint64_t seed = 0;
    int samples = 64;
    int jobs = 1;
    std::size_t chunk = 256;
    bool resume = false;
    std::string output;
};

inline void check_spec(const sweep_spec &s)
{
    if (s.max_vertices < 1 || s.max_length < 1) {
        throw precondition_failed("sweep bounds must be >= 1");
    }
    if (s.n_min < 0 || s.n_max < s.n_min) {
        throw precondition_failed("sweep n range must satisfy 0 <= n_min <= n_max");
    }
    if (s.jobs < 1 || s.chunk < 1) {
        throw precondition_failed("jobs and chunk size must be >= 1");
    }
}

namespace detail
{

// Admissible sequences of length v with entries in [lo, hi], depth first in lexicographic order.
inline void enumerate_sequences(int v, int lo, int hi, bool cyclic, std::vector<int> &cur,
                                const std::function<void(const std::vector<int> &)> &emit)
{
    if (static_cast<int>(cur.size()) == v) {
        if (cyclic && cur.front() < cur.back() - 1) {
            return;
        }
        emit(cur);
        return;
    }
    const int floor = cur.empty() ? lo : std::max(lo, cur.back() - 1);
    for (int c = floor; c <= hi; ++c) {
        cur.push_back(c);
        enumerate_sequences(v, lo, hi, cyclic, cur, emit);
        cur.pop_back();
    }
}

} // namespace detail

// Canonical forms within the bounds: linear before cyclic, then by vertex count, then lexicographic.
inline std::vector<kupisch_series> enumerate_algebras(const sweep_spec &s)
{
    std::vector<kupisch_series> out;
    std::vector<int> cur;
    if (s.shape != sweep_shape::cyclic) {
        for (int v = 1; v <= s.max_vertices; ++v) {
            if (v > 1 && s.max_length < 2) {
                break;
            }
            detail::enumerate_sequences(v - 1, 2, s.max_length, false, cur, [&](const std::vector<int> &head) {
                if (!head.empty() && head.back() > 2) {
                    return; // c_v = 1 forces c_{v-1} <= 2
                }
                std::vector<int> c = head;
                c.push_back(1);
                out.push_back(kupisch_series::validate(std::move(c), false));
            });
        }
    }
    if (s.shape != sweep_shape::linear && s.max_length >= 2) {
        for (int v = 1; v <= s.max_vertices; ++v) {
            detail::enumerate_sequences(v, 2, s.max_length, true, cur, [&](const std::vector<int> &c) {
                kupisch_series alg = kupisch_series::validate(c, true);
                if (alg.canonical().lengths() == c) {
                    out.push_back(std::move(alg));
                }
            });
        }
    }
    return out;
}

// Resume key of a sweep line.
inline std::string sweep_key(const kupisch_series &alg) { return alg.canonical().to_string(); }

inline std::string sweep_key(const json &line)
{
    return kupisch_series::validate(line.at("kupisch").get<std::vector<int>>(), line.at("cyclic").get<bool>())
        .canonical()
        .to_string();
}

// One compact JSON line per algebra. Errors from the library are recorded instead of a report.
inline std::string sweep_line(const kupisch_series &alg, const sweep_spec &s)
{
    classify_options opt;
    opt.n_min = s.n_min;
    opt.n_max = s.n_max;
    opt.seed = s.seed;
    opt.samples = s.samples;
    try {
        return to_json(classify(alg, opt)).dump();
    } catch (const error &e) {
        json j;
        j["kupisch"] = alg.canonical().lengths();
        j["cyclic"] = alg.cyclic();
        j["error"] = e.what();
        return j.dump();
    }
}

struct sweep_summary {
    std::size_t algebras = 0;
    std::size_t processed = 0;
    std::size_t skipped = 0;
    std::size_t gorenstein = 0;
    std::size_t self_injective = 0;
    std::size_t errors = 0;
    std::map<int, std::size_t> minimal_ag;   // by least n
    std::map<int, std::size_t> n_auslander;  // by least n
    std::map<std::string, std::map<std::string, std::size_t>> verdicts; // theorem -> status -> count
    std::vector<std::string> failures;       // "key theorem: witness"

    void add(const json &line)
    {
        ++algebras;
        if (line.contains("error")) {
            ++errors;
            failures.push_back(sweep_key(line) + " error: " + line.at("error").get<std::string>());
            return;
        }
        if (line.at("gorenstein_degree") != "infinity") {
            ++gorenstein;
        }
        if (line.at("self_injective").get<bool>()) {
            ++self_injective;
        }
        if (!line.at("minimal_ag_n").is_null()) {
            ++minimal_ag[line.at("minimal_ag_n").get<int>()];
        }
        if (!line.at("n_auslander_n").is_null()) {
            ++n_auslander[line.at("n_auslander_n").get<int>()];
        }
        for (const auto &[name, v] : line.at("theorem_verdicts").items()) {
            const std::string status = v.at("status").get<std::string>();
            ++verdicts[name][status];
            if (status == "fail" || status == "error") {
                failures.push_back(sweep_key(line) + " " + name + ": " + v.at("witness").get<std::string>());
            }
        }
    }

    json to_json() const
    {
        json j;
        j["algebras"] = algebras;
        j["processed"] = processed;
        j["skipped"] = skipped;
        j["gorenstein"] = gorenstein;
        j["self_injective"] = self_injective;
        j["errors"] = errors;
        json mag = json::object(), aus = json::object();
        for (const auto &[n, k] : minimal_ag) {
            mag[std::to_string(n)] = k;
        }
        for (const auto &[n, k] : n_auslander) {
            aus[std::to_string(n)] = k;
        }
        j["minimal_ag_by_n"] = std::move(mag);
        j["n_auslander_by_n"] = std::move(aus);
        json vs = json::object();
        for (const auto &[name, counts] : verdicts) {
            for (const auto &[status, k] : counts) {
                vs[name][status] = k;
            }
        }
        j["verdicts"] = std::move(vs);
        j["failures"] = failures;
        return j;
    }
};

// Classifies every enumerated algebra with `jobs` threads. Lines are written in
// enumeration order one chunk at a time, so the file does not depend on jobs.
// With resume, lines already present in the output are kept and their keys skipped.
inline sweep_summary run_sweep(const sweep_spec &s, std::ostream *progress = nullptr)
{
    check_spec(s);
    sweep_summary summary;
    std::set<std::string> done;

    // Lines already present are kept once each; a torn final line is dropped.
    std::vector<std::string> kept;
    if (s.resume) {
        std::ifstream in(s.output);
        std::string text;
        while (std::getline(in, text)) {
            json line;
            try {
                line = json::parse(text);
            } catch (const json::exception &) {
                continue;
            }
            if (done.insert(sweep_key(line)).second) {
                summary.add(line);
                ++summary.skipped;
                kept.push_back(text);
            }
        }
    }
    std::ofstream out(s.output, std::ios::trunc);
    if (!out) {
        throw error("cannot open sweep output " + s.output);
    }
    for (const auto &k : kept) {
        out << k << '\n';
    }

    std::vector<kupisch_series> todo;
    for (auto &alg : enumerate_algebras(s)) {
        if (!done.count(sweep_key(alg))) {
            todo.push_back(std::move(alg));
        }
    }

    for (std::size_t base = 0; base < todo.size(); base += s.chunk) {
        const std::size_t end = std::min(todo.size(), base + s.chunk);
        std::vector<std::string> lines(end - base);
        std::atomic<std::size_t> next{base};
        auto work = [&]() {
            for (std::size_t i = next++; i < end; i = next++) {
                lines[i - base] = sweep_line(todo[i], s);
            }
        };
        const int n_threads = static_cast<int>(std::min<std::size_t>(s.jobs, end - base));
        std::vector<std::thread> pool;
        for (int t = 1; t < n_threads; ++t) {
            pool.emplace_back(work);
        }
        work();
        for (auto &th : pool) {
            th.join();
        }
        for (const auto &l : lines) {
            out << l << '\n';
            summary.add(json::parse(l));
            ++summary.processed;
        }
        out.flush();
        if (progress) {
            *progress << "sweep: " << end << "/" << todo.size() << "\n" << std::flush;
        }
    }
    if (!out) {
        throw error("write to " + s.output + " failed");
    }
    return summary;
}

} // namespace nakayama::io
