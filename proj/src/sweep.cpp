#include "wkit/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "wkit/weitzenboeck.hpp"

namespace wkit {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t index, std::uint64_t stream) {
    return std::mt19937_64(splitmix64(splitmix64(seed ^ stream) + index));
}

bool is_stress(std::size_t index) { return index % 100 == 99; }

std::vector<double> uniform_coords(std::mt19937_64& rng, std::size_t dim, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> out(dim);
    for (auto& x : out) x = dist(rng);
    return out;
}

// Runs body(begin, end, partial) over contiguous blocks and merges partials.
template <class Partial, class Body, class Merge>
Partial parallel_reduce(std::size_t count, unsigned jobs, Body body, Merge merge) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    std::vector<Partial> partials(jobs);
    std::vector<std::thread> workers;
    const std::size_t block = (count + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        const std::size_t begin = std::min(count, w * block);
        const std::size_t end = std::min(count, begin + block);
        if (jobs == 1)
            body(begin, end, partials[w]);
        else
            workers.emplace_back([&, begin, end, w] { body(begin, end, partials[w]); });
    }
    for (auto& t : workers) t.join();
    Partial total{};
    for (const auto& p : partials) merge(total, p);
    return total;
}

} // namespace

std::pair<Vector, Vector> sweep_pair(std::uint64_t seed, std::size_t index) {
    auto rng = sample_rng(seed, index, 0x5eed);
    const std::size_t dim = 2 + index % 7;
    Vector u(uniform_coords(rng, dim, -10.0, 10.0));
    if (!is_stress(index)) return {u, Vector(uniform_coords(rng, dim, -10.0, 10.0))};

    const double eps = (index / 100) % 2 == 0 ? 1e-6 : 1e-9;
    std::uniform_real_distribution<double> lambda_dist(0.1, 3.0);
    const double sign = (rng() & 1) ? 1.0 : -1.0;
    const double lambda = sign * lambda_dist(rng);
    Vector noise(uniform_coords(rng, dim, -10.0, 10.0));
    return {u, lambda * u + eps * noise};
}

std::pair<RationalVector, RationalVector> exact_pair(std::uint64_t seed, std::size_t index, long bound) {
    auto rng = sample_rng(seed, index, 0xe7ac7);
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    auto draw = [&] {
        const long n = num(rng);
        return Rational(n, den(rng));
    };
    RationalVector u{draw(), draw()};
    RationalVector v{draw(), draw()};
    return {u, v};
}

SweepSummary run_sweep(const SweepConfig& cfg) {
    auto body = [&cfg](std::size_t begin, std::size_t end, SweepSummary& s) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto [u, v] = sweep_pair(cfg.seed, i);
            const IdentityReport r = verify_identity(u, v, cfg.tol);
            const double scale = std::max(1.0, r.lhs);
            const double residual = std::abs(r.residual) / scale;
            const double gap = std::abs(r.defect_intrinsic - r.defect_explicit) / scale;
            const double negative = std::max(0.0, -r.defect_intrinsic / scale);
            s.max_residual = std::max(s.max_residual, residual);
            s.max_oracle_gap = std::max(s.max_oracle_gap, gap);
            s.max_negative_defect = std::max(s.max_negative_defect, negative);
            if (!(residual < cfg.tol && gap < cfg.tol && negative <= cfg.tol)) ++s.failures;
            if (is_stress(i)) ++s.stress_pairs;
            ++s.count;
        }
    };
    auto merge = [](SweepSummary& total, const SweepSummary& p) {
        total.count += p.count;
        total.stress_pairs += p.stress_pairs;
        total.failures += p.failures;
        total.max_residual = std::max(total.max_residual, p.max_residual);
        total.max_oracle_gap = std::max(total.max_oracle_gap, p.max_oracle_gap);
        total.max_negative_defect = std::max(total.max_negative_defect, p.max_negative_defect);
    };
    SweepSummary total = parallel_reduce<SweepSummary>(cfg.count, cfg.jobs, body, merge);
    total.pass = total.failures == 0;
    return total;
}

ExactSweepSummary run_exact_sweep(const SweepConfig& cfg, long bound) {
    auto body = [&](std::size_t begin, std::size_t end, ExactSweepSummary& s) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto [u, v] = exact_pair(cfg.seed, i, bound);
            if (!verify_exact(u, v).is_zero()) ++s.nonzero;
            ++s.count;
        }
    };
    auto merge = [](ExactSweepSummary& total, const ExactSweepSummary& p) {
        total.count += p.count;
        total.nonzero += p.nonzero;
    };
    ExactSweepSummary total = parallel_reduce<ExactSweepSummary>(cfg.count, cfg.jobs, body, merge);
    total.pass = total.nonzero == 0;
    return total;
}

} // namespace wkit
