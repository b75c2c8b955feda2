// Acceptance run: one line per criterion, exit status 0 iff all pass.
//
// The sweep range is v <= 6, c_i <= 8, linear and cyclic.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <nakayama/io/notation.hpp>
#include <nakayama/io/sweep.hpp>
#include <nakayama/nakayama.hpp>

using namespace nakayama;

namespace
{

struct outcome {
    bool pass = false;
    std::string detail;
};

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

io::sweep_spec full_spec()
{
    io::sweep_spec s;
    s.max_vertices = 6;
    s.max_length = 8;
    s.shape = io::sweep_shape::both;
    return s;
}

const std::vector<kupisch_series> &sweep_algebras()
{
    static const std::vector<kupisch_series> algs = io::enumerate_algebras(full_spec());
    return algs;
}

std::optional<int> finite_g(const kupisch_series &alg)
{
    const extended_nat g = gorenstein_degree(alg);
    if (g.is_infinite()) {
        return std::nullopt;
    }
    return g.value();
}

std::string first_or(const std::vector<std::string> &v, const std::string &fallback)
{
    return v.empty() ? fallback : v.front();
}

outcome ac1()
{
    const auto t0 = clock_type::now();
    const auto a = kupisch_series::validate({3, 3, 4}, true);
    const auto r = classify(a);
    const interval_module m{1, 2};
    const bool ok = r.minimal_ag_n == 1 && is_minimal_ag(a, 1) && r.gldim.is_infinite() && pd(a, m) == 2
                    && pd(a, socle(a, module_sum(m))).is_infinite();
    const double dt = seconds_since(t0);
    std::ostringstream d;
    d << "[3,3,4]c minimal_ag_n=" << (r.minimal_ag_n ? std::to_string(*r.minimal_ag_n) : "none")
      << " gldim=" << r.gldim << " pd M(1,2)=" << pd(a, m) << " pd soc=" << pd(a, socle(a, module_sum(m)))
      << " time=" << dt << "s";
    return {ok && dt < 1.0, d.str()};
}

outcome ac2()
{
    const auto t0 = clock_type::now();
    const auto a = kupisch_series::validate({3, 3, 3, 3, 2, 1}, false);
    const auto r = classify(a);
    const interval_module m{3, 2};
    const bool ok = r.n_auslander_n == 2 && is_n_auslander(a, 2) && pd(a, m) == 2
                    && pd(a, socle(a, module_sum(m))) == 1;
    const double dt = seconds_since(t0);
    std::ostringstream d;
    d << "[3,3,3,3,2,1]l n_auslander_n=" << (r.n_auslander_n ? std::to_string(*r.n_auslander_n) : "none")
      << " pd M(3,2)=" << pd(a, m) << " pd soc=" << pd(a, socle(a, module_sum(m))) << " time=" << dt << "s";
    return {ok && dt < 1.0, d.str()};
}

outcome ac3()
{
    std::size_t checked = 0, minimal = 0;
    std::vector<std::string> bad;
    for (const auto &alg : sweep_algebras()) {
        const auto g = finite_g(alg);
        if (!g || *g < 1) {
            continue;
        }
        const int n = *g - 1;
        ++checked;
        const bool expected = is_minimal_ag(alg, n);
        minimal += expected ? 1 : 0;
        if (verify_thm_prinj(alg, n).passed != expected) {
            bad.push_back(alg.to_string() + " n=" + std::to_string(n));
        }
    }
    std::ostringstream d;
    d << checked << " algebras with g=n+1 >= 1, " << minimal << " minimal AG, " << bad.size()
      << " exceptions, first: " << first_or(bad, "none");
    return {bad.empty() && checked > 0, d.str()};
}

outcome ac4()
{
    std::size_t pairs = 0, forced = 0;
    std::vector<std::string> bad;
    for (const auto &alg : sweep_algebras()) {
        const auto g = finite_g(alg);
        if (!g) {
            continue;
        }
        for (int n = 0; n <= *g - 1; ++n) {
            ++pairs;
            const bool expected = is_minimal_ag(alg, n);
            forced += (expected && n == *g - 1) ? 1 : 0;
            const verdict v = verify_thm_gp_socle_sub(alg, n);
            if (v.passed != expected) {
                bad.push_back(alg.to_string() + " n=" + std::to_string(n) + " " + v.witness);
            }
        }
    }
    std::ostringstream d;
    d << pairs << " (algebra, n) pairs, " << forced << " at n=g-1 minimal AG, " << bad.size()
      << " exceptions, first: " << first_or(bad, "none");
    return {bad.empty() && pairs > 0, d.str()};
}

outcome ac5()
{
    std::size_t checked = 0, sequences = 0;
    std::vector<std::string> bad;
    for (const auto &alg : sweep_algebras()) {
        if (!finite_g(alg)) {
            continue;
        }
        ++checked;
        for (const auto &m : indecomposables(alg)) {
            sequences += m.length - 1;
        }
        const verdict v = verify_lemma22(alg);
        if (!v.passed) {
            bad.push_back(alg.to_string() + " " + v.witness);
        }
    }
    std::ostringstream d;
    d << checked << " Gorenstein algebras, " << sequences << " sequences, " << bad.size()
      << " exceptions, first: " << first_or(bad, "none");
    return {bad.empty() && checked > 0, d.str()};
}

outcome ac6()
{
    std::size_t modules = 0;
    std::vector<std::string> bad;
    for (const auto &alg : sweep_algebras()) {
        if (!finite_g(alg)) {
            continue;
        }
        modules += indecomposables(alg).size();
        const verdict v = verify_gpd_bounds(alg);
        if (!v.passed) {
            bad.push_back(alg.to_string() + " " + v.witness + " " + v.detail);
        }
    }
    std::ostringstream d;
    d << modules << " indecomposables over Gorenstein algebras, " << bad.size()
      << " exceptions, first: " << first_or(bad, "none");
    return {bad.empty() && modules > 0, d.str()};
}

outcome ac7()
{
    const auto &all = sweep_algebras();
    std::mt19937_64 rng(20261016);
    std::vector<std::size_t> idx(all.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
    }
    std::shuffle(idx.begin(), idx.end(), rng);
    const std::size_t sample = std::min<std::size_t>(60, idx.size());
    std::size_t pairs = 0, modules = 0;
    std::vector<std::string> bad;
    for (std::size_t k = 0; k < sample; ++k) {
        const auto &alg = all[idx[k]];
        const auto c = oracle::compare_with_oracle(alg);
        pairs += c.pairs;
        modules += c.modules;
        for (const auto &m : c.mismatches) {
            bad.push_back(alg.to_string() + " " + m.quantity + " " + io::format_module(m.x) + " engine=" + m.engine
                          + " oracle=" + m.oracle);
        }
    }
    std::ostringstream d;
    d << sample << " sampled algebras, " << modules << " modules, " << pairs << " pairs (hom, ext1), " << bad.size()
      << " mismatches, first: " << first_or(bad, "none");
    return {bad.empty() && sample >= 50, d.str()};
}

outcome ac8()
{
    std::size_t checked = 0;
    std::vector<std::string> bad;
    for (const auto &alg : sweep_algebras()) {
        if (alg.is_semisimple()) {
            continue;
        }
        for (int n = 0; n <= 16; ++n) {
            if (!is_minimal_ag(alg, n)) {
                continue;
            }
            ++checked;
            const verdict v = verify_thm31_count(alg, n);
            if (!v.passed) {
                bad.push_back(alg.to_string() + " n=" + std::to_string(n) + " " + v.witness);
            }
        }
    }
    const auto a = verify_thm31_count(kupisch_series::validate({3, 3, 4}, true), 1);
    const auto b = verify_thm31_count(kupisch_series::validate({3, 3, 3, 3, 2, 1}, false), 2);
    const bool examples = a.passed && b.passed && a.detail.rfind("2 simples", 0) == 0
                          && a.detail.find(", 2 projective") != std::string::npos && b.detail.rfind("4 simples", 0) == 0
                          && b.detail.find(", 4 projective") != std::string::npos;
    std::ostringstream d;
    d << checked << " (minimal n-AG algebra, n) pairs, " << bad.size() << " failures, first: " << first_or(bad, "none")
      << "; [3,3,4]c: " << a.detail << "; [3,3,3,3,2,1]l: " << b.detail;
    return {bad.empty() && examples && checked > 0, d.str()};
}

outcome ac9()
{
    std::size_t full = 0, selfinj = 0;
    std::vector<std::string> bad;
    for (const auto &alg : sweep_algebras()) {
        ++full;
        const auto v = is_precluster(alg, all_indecomposables(alg), 1);
        if (!v.passed) {
            bad.push_back(alg.to_string() + " full n=1: " + v.violations.front().witness);
        }
        if (is_self_injective(alg)) {
            ++selfinj;
            for (int n = 1; n <= 4; ++n) {
                const auto w = is_precluster(alg, projectives_only(alg), n);
                if (!w.passed) {
                    bad.push_back(alg.to_string() + " projectives n=" + std::to_string(n) + ": "
                                  + w.violations.front().witness);
                }
            }
        }
    }
    std::ostringstream d;
    d << full << " algebras (full, n=1), " << selfinj << " self-injective (projectives, n<=4), " << bad.size()
      << " failures, first: " << first_or(bad, "none");
    return {bad.empty(), d.str()};
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

outcome ac10()
{
    const auto dir = std::filesystem::temp_directory_path();
    const std::string tag = std::to_string(::getpid());
    io::sweep_spec s = full_spec();
    std::vector<std::string> outputs;
    double first_time = 0;
    for (int jobs : {1, 4}) {
        s.jobs = jobs;
        s.output = (dir / ("nakayama_acceptance_" + tag + "_" + std::to_string(jobs) + ".jsonl")).string();
        const auto t0 = clock_type::now();
        io::run_sweep(s);
        if (jobs == 1) {
            first_time = seconds_since(t0);
        }
        outputs.push_back(slurp(s.output));
        std::filesystem::remove(s.output);
    }
    std::size_t lines = 0;
    for (char ch : outputs[0]) {
        lines += ch == '\n' ? 1 : 0;
    }
    std::ostringstream d;
    d << lines << " JSONL lines, 1 vs 4 workers " << (outputs[0] == outputs[1] ? "byte-identical" : "DIFFER")
      << ", single-worker sweep " << first_time << "s";
    return {outputs[0] == outputs[1] && lines == sweep_algebras().size(), d.str()};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<outcome()>>> criteria = {
        {"AC1 cyclic [3,3,4] example", ac1},
        {"AC2 linear [3,3,3,3,2,1] example", ac2},
        {"AC3 prinj biconditional over sweep", ac3},
        {"AC4 socle/subL biconditional over sweep", ac4},
        {"AC5 radical filtration inequalities", ac5},
        {"AC6 Gpd bounded by g, equal to finite pd", ac6},
        {"AC7 matrix oracle equivalence", ac7},
        {"AC8 counting consequence", ac8},
        {"AC9 precluster sanity", ac9},
        {"AC10 sweep determinism", ac10},
    };
    std::cout << "sweep range: v <= 6, c <= 8, linear and cyclic, " << sweep_algebras().size() << " algebras\n";
    bool all = true;
    for (const auto &[name, run] : criteria) {
        const auto t0 = clock_type::now();
        outcome o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " [" << seconds_since(t0) << "s]\n";
    }
    std::cout << (all ? "ALL PASS" : "SOME FAILED") << "\n";
    return all ? 0 : 1;
}
