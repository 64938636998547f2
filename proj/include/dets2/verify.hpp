#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dets2/geometry.hpp"
#include "dets2/io.hpp"
#include "dets2/linalg.hpp"
#include "dets2/oracle.hpp"
#include "dets2/partition.hpp"

// Randomized property drivers. Each one runs a fixed number of seeded trials
// and reports the first counterexample as replayable JSON. Trials execute in
// a fixed order, so a (command line, seed) pair always produces the same
// report bytes.

namespace dets2 {

struct SuiteResult {
    std::string name;
    long long trials = 0;
    long long failures = 0;
    std::string counterexample; // JSON text of the first failing instance, if any

    bool passed() const { return failures == 0; }
};

namespace detail {

template <class S>
void record_failure(SuiteResult& r, const EdgeTensor<S>& t, const std::string& note) {
    ++r.failures;
    if (r.counterexample.empty()) {
        json j = instance_json(t);
        j["note"] = note;
        r.counterexample = j.dump();
    }
}

} // namespace detail

// sum_k (-1)^{k-1} M_k == 0, entrywise and exactly
template <class F>
SuiteResult check_block_dependence(int d, const F& field, int trials, SeededRng& rng) {
    SuiteResult r{"block_dependence", trials};
    for (int i = 0; i < trials; ++i) {
        auto t = random_tensor(rng, d, field);
        MatrixX<typename F::Scalar> acc(d, edge_count(d));
        acc.fill(field.zero());
        for (int k = 1; k <= vertex_count(d); ++k) {
            const auto mk = equation_matrix(t, k);
            if (k % 2 == 1)
                acc += mk.m;
            else
                acc -= mk.m;
        }
        if (!is_zero_matrix(acc))
            detail::record_failure(r, t, "signed block sum is nonzero");
    }
    return r;
}

// the reduced-system determinant must not depend on the omitted equation
template <class F>
SuiteResult check_invariance(int d, const F& field, int trials, SeededRng& rng) {
    SuiteResult r{"omitted_equation_invariance", trials};
    for (int i = 0; i < trials; ++i) {
        auto t = random_tensor(rng, d, field);
        auto rep = invariance_check(t);
        if (!rep.all_equal)
            detail::record_failure(r, t, "reduced determinants differ across omitted equations");
    }
    return r;
}

// three equal slots on a vertex triple force the invariant to vanish;
// every triple (x,y,z) gets `trials_per_triple` random tensors
template <class F>
SuiteResult check_vanishing(int d, const F& field, int trials_per_triple, SeededRng& rng) {
    SuiteResult r{"vanishing_on_equal_triples", 0};
    const int n = vertex_count(d);
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            for (int z = y + 1; z <= n; ++z)
                for (int i = 0; i < trials_per_triple; ++i) {
                    ++r.trials;
                    auto t = random_tensor(rng, d, field);
                    const auto shared = random_vector(rng, d, field);
                    t.set_vec(Edge{x, y}, shared);
                    t.set_vec(Edge{x, z}, shared);
                    t.set_vec(Edge{y, z}, shared);
                    if (!is_zero(det_s2(t)))
                        detail::record_failure(r, t, "equal triple (" + std::to_string(x) + "," +
                                                         std::to_string(y) + "," + std::to_string(z) +
                                                         ") but nonzero invariant");
                }
    return r;
}

template <class F>
SuiteResult check_multilinearity(int d, const F& field, int trials, SeededRng& rng) {
    SuiteResult r{"multilinearity", trials};
    for (int i = 0; i < trials; ++i) {
        auto t = random_tensor(rng, d, field);
        const auto all = edges(d);
        const Edge e = all[static_cast<std::size_t>(rng.below(all.size()))];
        const auto u = random_vector(rng, d, field);
        const auto v = random_vector(rng, d, field);
        const auto a = random_scalar(rng, field);
        const auto b = random_scalar(rng, field);
        const auto rep = multilinearity_check(t, e, u, v, a, b);
        if (!rep.holds)
            detail::record_failure(r, t, "slot identity fails at edge " + edge_key(e));
    }
    return r;
}

struct GeometrySuiteResult {
    SuiteResult suite;
    long long case_one = 0;
    long long case_two = 0;
    long long degenerate = 0;
};

// difference tensors of point configurations: invariant vanishes and the
// explicit witness solves every vertex equation. Every eighth configuration
// duplicates one point, steering the witness into its second branch.
template <class F>
GeometrySuiteResult check_geometry(int d, const F& field, int trials, SeededRng& rng) {
    GeometrySuiteResult g;
    g.suite = SuiteResult{"geometric_vanishing", trials};
    for (int i = 0; i < trials; ++i) {
        auto c = random_points(rng, d, field);
        if (i % 8 == 3) c.points.col(2) = c.points.col(1); // p3 := p2
        try {
            const auto rep = assert_vanishing(c);
            switch (rep.witness.branch) {
                case WitnessCase::case_one: ++g.case_one; break;
                case WitnessCase::case_two: ++g.case_two; break;
                case WitnessCase::degenerate: ++g.degenerate; break;
            }
        } catch (const InvariantViolation& err) {
            ++g.suite.failures;
            if (g.suite.counterexample.empty()) {
                json j = points_json(c);
                j["note"] = err.what();
                g.suite.counterexample = j.dump();
            }
        }
    }
    return g;
}

struct SurveyTable {
    // cells[cf][nz]: cf = cycle-free, nz = invariant nonzero
    long long cells[2][2] = {{0, 0}, {0, 0}};
    long long samples = 0;

    long long disagreements() const { return cells[0][1] + cells[1][0]; }
};

template <class F>
void survey_tally(SurveyTable& table, const Partition& p, const F& field) {
    const bool cf = is_cycle_free(p);
    const bool nz = !is_zero(det_s2(partition_to_tensor(p, field)));
    ++table.cells[cf ? 1 : 0][nz ? 1 : 0];
    ++table.samples;
}

// seeded random colorings: cycle-free must coincide with a nonzero invariant
template <class F>
SurveyTable partition_survey(int d, const F& field, long long samples, std::uint64_t seed) {
    SurveyTable table;
    PartitionSampler sampler(d, seed);
    for (long long i = 0; i < samples; ++i) survey_tally(table, sampler.next(), field);
    return table;
}

// every coloring, d=2 always allowed, d=3 behind the override
template <class F>
SurveyTable partition_survey_exhaustive(int d, const F& field, bool allow_large = false,
                                        const std::function<void(long long, long long)>& progress = {}) {
    SurveyTable table;
    PartitionEnumerator en(d, allow_large);
    const auto total = static_cast<long long>(en.total());
    while (auto p = en.next()) {
        survey_tally(table, *p, field);
        if (progress && table.samples % 1000000 == 0) progress(table.samples, total);
    }
    return table;
}

// partitions with a planted monochromatic cycle must always vanish
template <class F>
SuiteResult check_planted_cycles(int d, const F& field, int per_length, SeededRng& rng) {
    SuiteResult r{"planted_cycle_vanishing", 0};
    for (int length = 3; length <= std::min(vertex_count(d), 5); ++length)
        for (int i = 0; i < per_length; ++i) {
            ++r.trials;
            const Partition p = planted_cycle_partition(rng, d, length);
            const auto t = partition_to_tensor(p, field);
            if (!is_zero(det_s2(t)))
                detail::record_failure(r, t, "planted " + std::to_string(length) +
                                                 "-cycle but nonzero invariant");
        }
    return r;
}

// triple flips on homogeneous cycle-free partitions: existence, uniqueness,
// involutivity, and the sign flip of the invariant (over the rationals)
inline SuiteResult check_flip_antisymmetry(int d, int partitions, int triples_each, SeededRng& rng) {
    SuiteResult r{"triple_flip_antisymmetry", 0};
    RationalField field;
    const int n = vertex_count(d);
    std::vector<Partition> pool;
    pool.push_back(tensor_to_partition(canonical_tensor(d, field)));
    for (int i = 1; i < partitions; ++i) pool.push_back(random_homogeneous_cycle_free(rng, d));
    for (const Partition& p : pool) {
        const Rational base = det_s2(partition_to_tensor(p, field));
        for (int i = 0; i < triples_each; ++i) {
            ++r.trials;
            int x = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            int y = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            int z = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            if (x == y || y == z || x == z) {
                --r.trials;
                --i;
                continue;
            }
            if (x > y) std::swap(x, y);
            if (y > z) std::swap(y, z);
            if (x > y) std::swap(x, y);
            try {
                const Partition flipped = triple_flip(p, x, y, z);
                if (triple_flip(flipped, x, y, z) != p)
                    throw InvariantViolation("triple_flip is not an involution");
                const Rational value = det_s2(partition_to_tensor(flipped, field));
                if (value != -base) throw InvariantViolation("flip does not negate the invariant");
            } catch (const InvariantViolation& err) {
                ++r.failures;
                if (r.counterexample.empty()) {
                    json j = partition_json(p);
                    j["triple"] = {x, y, z};
                    j["note"] = err.what();
                    r.counterexample = j.dump();
                }
            }
        }
    }
    return r;
}

} // namespace dets2
