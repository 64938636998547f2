#include <doctest.h>

#include "dets2/linalg.hpp"
#include "dets2/partition.hpp"

using namespace dets2;

namespace {

// colex edge colors of the canonical partitions
const std::vector<int> kCanonicalColorsD2 = {1, 2, 1, 1, 2, 2};
const std::vector<int> kCanonicalColorsD3 = {1, 2, 1, 1, 2, 2, 3, 1, 3, 2, 1, 3, 2, 3, 3};

Partition canonical_partition(int d) {
    return tensor_to_partition(canonical_tensor(d, RationalField{}));
}

} // namespace

TEST_SUITE("partitions") {

TEST_CASE("partition construction validates") {
    CHECK_THROWS_AS(Partition(2, {1, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(2, {1, 2, 1, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(2, {1, 2, 1, 1, 2, 0}), std::invalid_argument);
}

TEST_CASE("tensor/partition bijection on the canonical tensors") {
    CHECK(canonical_partition(2).colors() == kCanonicalColorsD2);
    CHECK(canonical_partition(3).colors() == kCanonicalColorsD3);

    RationalField f;
    CHECK(partition_to_tensor(Partition(3, kCanonicalColorsD3), f) == canonical_tensor(3, f));

    PrimeField fp(32003);
    CHECK(partition_to_tensor(Partition(2, kCanonicalColorsD2), fp) == canonical_tensor(2, fp));
}

TEST_CASE("round-trip is the identity on random partitions") {
    SeededRng rng(61);
    RationalField f;
    for (int d : {2, 3}) {
        for (int i = 0; i < 25; ++i) {
            const Partition p = random_partition(rng, d);
            CHECK(tensor_to_partition(partition_to_tensor(p, f)) == p);
        }
    }
}

TEST_CASE("tensor_to_partition rejects non-basis tensors") {
    RationalField f;
    auto t = canonical_tensor(2, f);
    VectorX<Rational> v(2);
    v(0) = Rational(1);
    v(1) = Rational(1);
    t.set_vec(Edge{2, 3}, v);
    CHECK_THROWS_AS(tensor_to_partition(t), InputError);
}

TEST_CASE("constant partition maps to a constant tensor") {
    RationalField f;
    const auto t = partition_to_tensor(Partition::constant(2, 1), f);
    for (Edge e : edges(2)) CHECK(t.vec(e)(0) == Rational(1));
}

TEST_CASE("cycle-freeness") {
    CHECK(is_cycle_free(canonical_partition(3)));

    // monochromatic triangle (1,2),(1,3),(2,3) in color 1
    Partition triangle(2, {1, 1, 1, 2, 2, 2});
    const auto rep = cycle_free_report(triangle);
    CHECK_FALSE(rep.cycle_free);
    CHECK_FALSE(rep.per_color[0]);
    CHECK(rep.per_color[1]);
}

TEST_CASE("homogeneity") {
    CHECK(is_homogeneous(canonical_partition(3)));
    CHECK_FALSE(is_homogeneous(Partition::constant(2, 1)));
    for (int d = 2; d <= 6; ++d) CHECK(is_homogeneous(canonical_partition(d)));
}

TEST_CASE("homogeneous cycle-free classes are spanning trees") {
    SeededRng rng(67);
    for (int d : {2, 3}) {
        for (int i = 0; i < 10; ++i) {
            const Partition p = random_homogeneous_cycle_free(rng, d);
            for (int c = 1; c <= d; ++c) {
                DisjointSets dsu(vertex_count(d));
                int components = vertex_count(d);
                for (Edge e : edges(d))
                    if (p.color(e) == c && dsu.unite(e.i - 1, e.j - 1)) --components;
                CHECK(components == 1);
            }
        }
    }
}

TEST_CASE("triple flip via exhaustive d=2 enumeration") {
    const Partition p = canonical_partition(2);
    const Partition flip = triple_flip(p, 1, 2, 3);

    // search all 64 partitions for valid replacements
    const Edge exy{1, 2}, exz{1, 3}, eyz{2, 3};
    std::vector<Partition> matches;
    PartitionEnumerator en(2);
    while (auto q = en.next()) {
        if (!is_homogeneous(*q) || !is_cycle_free(*q)) continue;
        bool agrees_off_triangle = true;
        for (Edge e : edges(2)) {
            if (e == exy || e == exz || e == eyz) continue;
            if (q->color(e) != p.color(e)) agrees_off_triangle = false;
        }
        if (!agrees_off_triangle) continue;
        const int differs = (q->color(exy) != p.color(exy)) + (q->color(exz) != p.color(exz)) +
                            (q->color(eyz) != p.color(eyz));
        if (differs >= 2) matches.push_back(*q);
    }
    REQUIRE(matches.size() == 1);
    CHECK(matches.front() == flip);
}

TEST_CASE("triple flip is an involution and preserves structure") {
    SeededRng rng(71);
    for (int d : {2, 3}) {
        const Partition base = canonical_partition(d);
        std::vector<Partition> pool{base};
        for (int i = 0; i < 5; ++i) pool.push_back(random_homogeneous_cycle_free(rng, d));
        for (const Partition& p : pool) {
            for (int trial = 0; trial < 5; ++trial) {
                int x = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(vertex_count(d))));
                int y = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(vertex_count(d))));
                int z = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(vertex_count(d))));
                if (x == y || y == z || x == z) continue;
                if (x > y) std::swap(x, y);
                if (y > z) std::swap(y, z);
                if (x > y) std::swap(x, y);
                const Partition f = triple_flip(p, x, y, z);
                CHECK(is_homogeneous(f));
                CHECK(is_cycle_free(f));
                int differs = 0;
                for (Edge e : edges(d))
                    if (f.color(e) != p.color(e)) ++differs;
                CHECK(differs >= 2);
                CHECK(differs <= 3);
                CHECK(triple_flip(f, x, y, z) == p);
            }
        }
    }
}

TEST_CASE("flip of the canonical d=3 partition at (1,2,3)") {
    const Partition p = canonical_partition(3);
    const Partition f = triple_flip(p, 1, 2, 3);
    CHECK(is_homogeneous(f));
    CHECK(is_cycle_free(f));
    int differs = 0;
    for (Edge e : {Edge{1, 2}, Edge{1, 3}, Edge{2, 3}})
        if (f.color(e) != p.color(e)) ++differs;
    CHECK(differs >= 2);
    for (Edge e : edges(3)) {
        if (e == Edge{1, 2} || e == Edge{1, 3} || e == Edge{2, 3}) continue;
        CHECK(f.color(e) == p.color(e));
    }
}

TEST_CASE("the two-flip neighborhood of the canonical d=3 partition") {
    // every partition reachable by at most two triple flips stays
    // homogeneous cycle-free and keeps a nonzero invariant
    PrimeField field(32003);
    const Partition base = canonical_partition(3);
    std::vector<Partition> frontier{base};
    std::vector<Partition> seen{base};
    for (int depth = 0; depth < 2; ++depth) {
        std::vector<Partition> next;
        for (const Partition& p : frontier)
            for (int x = 1; x <= 6; ++x)
                for (int y = x + 1; y <= 6; ++y)
                    for (int z = y + 1; z <= 6; ++z) {
                        const Partition f = triple_flip(p, x, y, z);
                        if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
                        seen.push_back(f);
                        next.push_back(f);
                    }
        frontier = std::move(next);
    }
    CHECK(seen.size() > 20);
    for (const Partition& p : seen) {
        CHECK(is_cycle_free(p));
        CHECK_FALSE(is_zero(det_s2(partition_to_tensor(p, field))));
    }
}

TEST_CASE("triple flip rejects bad inputs") {
    CHECK_THROWS_AS(triple_flip(canonical_partition(2), 2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(triple_flip(Partition::constant(2, 1), 1, 2, 3), std::invalid_argument);
}

TEST_CASE("enumeration at d=2") {
    PartitionEnumerator en(2);
    CHECK(en.total() == 64);
    int count = 0;
    bool saw_canonical = false;
    const Partition canonical = canonical_partition(2);
    while (auto p = en.next()) {
        ++count;
        if (*p == canonical) saw_canonical = true;
    }
    CHECK(count == 64);
    CHECK(saw_canonical);
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(PartitionEnumerator(3), InputError);
    CHECK_THROWS_AS(PartitionEnumerator(4, true), InputError);
    CHECK_NOTHROW(PartitionEnumerator(3, true));
}

TEST_CASE("enumeration at d=3 under override visits 3^15 partitions") {
    PartitionEnumerator en(3, true);
    CHECK(en.total() == 14348907ULL);
    std::uint64_t count = 0;
    while (auto p = en.next()) ++count;
    CHECK(count == 14348907ULL);
}

TEST_CASE("sampling is seed-deterministic") {
    const auto a = sample_partitions(3, 10, 42);
    const auto b = sample_partitions(3, 10, 42);
    CHECK(a == b);
    const auto c = sample_partitions(3, 10, 43);
    CHECK(a != c);
    CHECK(sample_partitions(3, 0, 42).empty());
}

TEST_CASE("cycle-free fraction at d=3 is strictly between 0 and 1") {
    PartitionSampler s(3, 7);
    int cycle_free = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i)
        if (is_cycle_free(s.next())) ++cycle_free;
    CHECK(cycle_free > 0);
    CHECK(cycle_free < n);
}

TEST_CASE("d=2 theorem, exhaustive over both fields") {
    RationalField fq;
    PrimeField fp(32003);
    PartitionEnumerator en(2);
    while (auto p = en.next()) {
        const bool cf = is_cycle_free(*p);
        CHECK(cf == !is_zero(det_s2(partition_to_tensor(*p, fq))));
        CHECK(cf == !is_zero(det_s2(partition_to_tensor(*p, fp))));
    }
}

TEST_CASE("planted monochromatic cycles kill the invariant") {
    SeededRng rng(73);
    PrimeField f(32003);
    for (int length : {3, 4, 5}) {
        for (int i = 0; i < 10; ++i) {
            const Partition p = planted_cycle_partition(rng, 3, length);
            CHECK_FALSE(is_cycle_free(p));
            CHECK(is_zero(det_s2(partition_to_tensor(p, f))));
        }
    }
}

} // TEST_SUITE
