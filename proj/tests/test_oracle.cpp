#include <doctest.h>

#include <fstream>

#include "dets2/io.hpp"
#include "dets2/oracle.hpp"
#include "dets2/random.hpp"

using namespace dets2;

TEST_SUITE("oracle") {

TEST_CASE("cofactor determinant basics") {
    MatrixX<Rational> id(5, 5);
    id.fill(Rational(0));
    for (int i = 0; i < 5; ++i) id(i, i) = Rational(1);
    CHECK(det_cofactor(id) == Rational(1));

    MatrixX<Rational> empty(0, 0);
    CHECK(det_cofactor(empty) == Rational(1));

    MatrixX<Rational> big(9, 9);
    big.fill(Rational(0));
    CHECK_THROWS_AS(det_cofactor(big), std::invalid_argument);
    CHECK_NOTHROW(det_cofactor(big, /*allow_large=*/true));
    MatrixX<Rational> huge(16, 16);
    huge.fill(Rational(0));
    CHECK_THROWS_AS(det_cofactor(huge, /*allow_large=*/true), std::invalid_argument);
}

TEST_CASE("canonical reduced determinant at d=2, via the oracle") {
    const auto t = canonical_tensor(2, RationalField{});
    const Rational raw = det_cofactor(reduced_matrix(t, 1));
    CHECK(raw * raw == Rational(1));
    CHECK(Rational(canonical_orientation(2)) * raw == Rational(1));
    CHECK(raw == det_exact(reduced_matrix(t, 1)));
}

TEST_CASE("oracle vs production determinants on random matrices") {
    SeededRng rng(101);
    RationalField fq;
    PrimeField fp(32003);
    for (int n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            MatrixX<Rational> mq(n, n);
            MatrixX<Fp> mp(n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    mq(r, c) = random_scalar(rng, fq);
                    mp(r, c) = random_scalar(rng, fp);
                }
            CHECK(det_cofactor(mq) == det_exact(mq));
            CHECK(det_cofactor(mp) == det_exact(mp));
        }
    }
}

TEST_CASE("DFS cycle check") {
    const auto canonical = tensor_to_partition(canonical_tensor(3, RationalField{}));
    const auto rep = dfs_cycle_check(canonical);
    CHECK(rep.cycle_free);
    for (bool ok : rep.per_color) CHECK(ok);

    // planted 4-cycle 1-2-3-4-1 in color 1
    SeededRng rng(103);
    const Partition p = planted_cycle_partition(rng, 3, 4);
    const auto rep2 = dfs_cycle_check(p);
    CHECK_FALSE(rep2.per_color[0]);
}

TEST_CASE("DFS agrees with union-find on random partitions") {
    SeededRng rng(107);
    for (int i = 0; i < 2000; ++i) {
        const int d = 2 + static_cast<int>(rng.below(2));
        const Partition p = random_partition(rng, d);
        const auto a = cycle_free_report(p);
        const auto b = dfs_cycle_check(p);
        REQUIRE(a.per_color == b.per_color);
    }
}

TEST_CASE("exhaustive d=2 tabulation") {
    const D2Report rep = exhaustive_d2_report();
    CHECK(rep.total == 64);
    CHECK(rep.off_diagonal_zero());
    CHECK(rep.cycle_free == rep.table[1][1]);
    CHECK(rep.cycle_free + rep.table[0][0] == 64);
}

TEST_CASE("golden values match the committed file") {
    const GoldenValues fresh = regenerate_golden();
    std::ifstream in(DETS2_GOLDEN_PATH);
    REQUIRE_MESSAGE(in.good(), "missing golden file; run: dets2 oracle regen");
    const GoldenValues committed = parse_golden(load_json_file(DETS2_GOLDEN_PATH));
    CHECK(committed.canonical_det == fresh.canonical_det);
    CHECK(committed.d2_cycle_free == fresh.d2_cycle_free);
}

} // TEST_SUITE
