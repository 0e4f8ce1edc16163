#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include <json.hpp>

#include "ga/qubo.hpp"

namespace ga {

struct AnnealSchedule {
    std::size_t sweeps = 1000;
    double beta_start = 0.1;
    double beta_end = 10.0;
    std::size_t restarts = 10;
    std::uint64_t base_seed = 0;
};

struct Sample {
    std::vector<int> assignment;
    Rat energy;
    std::size_t count = 1;
};

struct SampleSet {
    std::vector<Sample> samples; // sorted by (energy, assignment)
    Rat best_energy;
};

// splitmix64: small, portable, and completely specified, so runs reproduce
// across platforms. Restart r uses seed base_seed ^ r.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform01() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

private:
    std::uint64_t state_;
};

namespace solverdetail {

inline void sort_and_merge(std::vector<Sample>& samples) {
    std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.assignment < b.assignment;
    });
    std::vector<Sample> merged;
    for (auto& s : samples) {
        if (!merged.empty() && merged.back().assignment == s.assignment &&
            merged.back().energy == s.energy)
            merged.back().count += s.count;
        else
            merged.push_back(std::move(s));
    }
    samples = std::move(merged);
}

} // namespace solverdetail

// Exact enumeration of all 2^n assignments; returns the complete minimizer
// set.
inline SampleSet solve_exhaustive(const Qubo& q) {
    if (q.n > 24) fail(errc::resource_limit, "exhaustive solve limited to 24 variables");
    SampleSet out;
    bool first = true;
    for (std::uint64_t mask = 0; mask < (1ull << q.n); ++mask) {
        std::vector<int> x(q.n);
        for (std::size_t v = 0; v < q.n; ++v) x[v] = static_cast<int>((mask >> v) & 1);
        Rat e = q.energy(x);
        if (first || e < out.best_energy) {
            out.best_energy = e;
            out.samples.clear();
            first = false;
        }
        if (e == out.best_energy) out.samples.push_back({std::move(x), e, 1});
    }
    solverdetail::sort_and_merge(out.samples);
    return out;
}

// Metropolis single-bit-flip annealing under a geometric inverse-temperature
// ramp. The proposal loop runs in doubles for speed; all reported energies
// are recomputed exactly at read-out. Restarts are independent (seeded
// base_seed ^ index) and may run on `jobs` threads; the merged result is
// identical either way.
inline SampleSet simulated_anneal(const Qubo& q, const AnnealSchedule& sched,
                                  std::size_t jobs = 1) {
    if (sched.sweeps < 1 || sched.restarts < 1 || sched.beta_start >= sched.beta_end)
        fail(errc::domain, "invalid anneal schedule");
    SampleSet out;
    if (q.n == 0) {
        out.best_energy = q.offset;
        out.samples.push_back({{}, q.offset, sched.restarts});
        return out;
    }

    std::vector<double> lin(q.n);
    for (std::size_t i = 0; i < q.n; ++i) lin[i] = rat_double(q.linear[i]);
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(q.n);
    for (const auto& [ij, c] : q.quadratic) {
        double w = rat_double(c);
        adj[ij.first].push_back({ij.second, w});
        adj[ij.second].push_back({ij.first, w});
    }

    const double ratio = std::pow(sched.beta_end / sched.beta_start,
                                  1.0 / static_cast<double>(std::max<std::size_t>(1, sched.sweeps - 1)));

    auto run_restart = [&](std::size_t r) {
        SplitMix64 rng(sched.base_seed ^ static_cast<std::uint64_t>(r));
        std::vector<int> x(q.n);
        for (auto& b : x) b = static_cast<int>(rng.below(2));

        double beta = sched.beta_start;
        for (std::size_t sweep = 0; sweep < sched.sweeps; ++sweep) {
            for (std::size_t step = 0; step < q.n; ++step) {
                std::size_t i = rng.below(q.n);
                double delta = lin[i];
                for (const auto& [j, w] : adj[i])
                    if (x[j]) delta += w;
                if (x[i]) delta = -delta;
                if (delta <= 0.0 || rng.uniform01() < std::exp(-beta * delta)) x[i] ^= 1;
            }
            beta *= ratio;
        }
        return x;
    };

    std::vector<std::vector<int>> finals(sched.restarts);
    if (jobs <= 1) {
        for (std::size_t r = 0; r < sched.restarts; ++r) finals[r] = run_restart(r);
    } else {
        std::vector<std::thread> pool;
        std::size_t nthreads = std::min(jobs, sched.restarts);
        for (std::size_t t = 0; t < nthreads; ++t)
            pool.emplace_back([&, t]() {
                for (std::size_t r = t; r < sched.restarts; r += nthreads)
                    finals[r] = run_restart(r);
            });
        for (auto& th : pool) th.join();
    }
    for (auto& x : finals) {
        Rat e = q.energy(x);
        out.samples.push_back({std::move(x), std::move(e), 1});
    }
    solverdetail::sort_and_merge(out.samples);
    out.best_energy = out.samples.front().energy;
    return out;
}

// Linear repulsion from known assignments: each known point is raised by
// exactly `penalty` while any other point moves by strictly less. Keeps the
// problem quadratic; downstream verification restores exactness.
inline Qubo exclude_solutions(const Qubo& q, const std::vector<std::vector<int>>& known,
                              const Rat& penalty) {
    if (sign(penalty) <= 0) fail(errc::domain, "exclusion penalty must be positive");
    Qubo out = q;
    if (out.n == 0) return out;
    Rat unit = penalty / Rat(static_cast<long>(out.n));
    for (const auto& a : known) {
        if (a.size() != out.n) fail(errc::domain, "assignment has wrong length");
        // penalty * (1 - Hamming(x, a)/n), linear in x
        long ones = 0;
        for (auto b : a) ones += b;
        out.offset += penalty - unit * Rat(ones);
        for (std::size_t i = 0; i < out.n; ++i) out.linear[i] -= unit * Rat(1 - 2 * a[i]);
    }
    return out;
}

inline nlohmann::json sampleset_to_json(const SampleSet& s) {
    nlohmann::json j;
    j["samples"] = nlohmann::json::array();
    for (const auto& smp : s.samples) {
        nlohmann::json e;
        e["x"] = smp.assignment;
        e["energy"] = rat_str(smp.energy);
        e["count"] = smp.count;
        j["samples"].push_back(std::move(e));
    }
    j["best"] = rat_str(s.best_energy);
    return j;
}

} // namespace ga
