#include "doctest.h"

#include "wkit/euclid.hpp"
#include "wkit/sweep.hpp"

using namespace wkit;

TEST_CASE("samples are a pure function of (seed, index)") {
    CHECK(sweep_pair(0, 17) == sweep_pair(0, 17));
    CHECK_FALSE(sweep_pair(0, 17) == sweep_pair(1, 17));
    CHECK(sweep_pair(0, 3).first.dim() == 5);
    CHECK(exact_pair(4, 9).first == exact_pair(4, 9).first);
}

TEST_CASE("stress pairs are near collinear") {
    const auto [u, v] = sweep_pair(0, 199);
    const double rel = wedge(u, v) / (norm(u) * norm(v));
    CHECK(rel > 0.0);
    CHECK(rel < 1e-7);
}

TEST_CASE("sweep result is independent of the worker count") {
    SweepConfig cfg;
    cfg.count = 3000;
    cfg.seed = 42;
    const SweepSummary one = run_sweep(cfg);
    cfg.jobs = 3;
    const SweepSummary three = run_sweep(cfg);
    CHECK(one.count == 3000);
    CHECK(one.stress_pairs == 30);
    CHECK(one.max_residual == three.max_residual);
    CHECK(one.max_oracle_gap == three.max_oracle_gap);
    CHECK(one.max_negative_defect == three.max_negative_defect);
    CHECK(one.pass);
    CHECK(one.max_residual < 1e-9);
}

TEST_CASE("single-sample sweep") {
    SweepConfig cfg;
    const SweepSummary s = run_sweep(cfg);
    CHECK(s.count == 1);
    CHECK(s.pass);
}

TEST_CASE("exact sweep") {
    SweepConfig cfg;
    cfg.count = 200;
    cfg.jobs = 2;
    const ExactSweepSummary s = run_exact_sweep(cfg);
    CHECK(s.count == 200);
    CHECK(s.nonzero == 0);
    CHECK(s.pass);
}
