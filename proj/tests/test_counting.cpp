#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "magiccount/cache.hpp"
#include "magiccount/counting.hpp"
#include "oracle.hpp"

#include <cstdio>
#include <set>

using namespace magiccount;
using magiccount::testing::oracle_count;
using magiccount::testing::oracle_enumerate;

TEST_CASE("spot values") {
    CHECK(count({SquareKind::SemiMagic, 3}, 1) == 6);  // the 3x3 permutation matrices
    CHECK(count({SquareKind::SemiMagic, 3}, 2) == 21);
    CHECK(count({SquareKind::Magic, 3}, 3) == 5);
    CHECK(count({SquareKind::Magic, 3}, 1) == 0);
    CHECK(count({SquareKind::Magic, 3}, 2) == 0);
    CHECK(count({SquareKind::Hypercube, 3, 3}, 1) == 12);  // order-3 Latin squares

    for (long long t = 0; t <= 7; ++t) {
        CHECK(count({SquareKind::Magic, 2}, t) == (t % 2 == 0 ? 1 : 0));
        CHECK(count({SquareKind::SemiMagic, 2}, t) == t + 1);
    }
}

TEST_CASE("t = 0 counts the zero array, once") {
    for (SquareClass cls : {SquareClass{SquareKind::SemiMagic, 4},
                            SquareClass{SquareKind::Magic, 3},
                            SquareClass{SquareKind::SymmetricMagic, 4},
                            SquareClass{SquareKind::Pandiagonal, 5},
                            SquareClass{SquareKind::Hypercube, 2, 4}}) {
        CHECK(count(cls, 0) == 1);
        CHECK(count(cls, 0, true) == 0);
    }
}

TEST_CASE("strict counts vanish below t = n") {
    for (long long t = 1; t < 4; ++t) CHECK(count({SquareKind::SemiMagic, 4}, t, true) == 0);
    for (long long t = 1; t < 3; ++t) CHECK(count({SquareKind::Magic, 3}, t, true) == 0);
}

TEST_CASE("count_batch") {
    const auto magic3 = count_batch({SquareKind::Magic, 3}, {0, 3, 6});
    REQUIRE(magic3.size() == 3);
    CHECK(magic3[0].count == 1);
    CHECK(magic3[1].count == 5);
    CHECK(magic3[2].count == 13);

    const auto semi2 = count_batch({SquareKind::SemiMagic, 2}, {0, 1, 2, 3, 4, 5});
    for (std::size_t i = 0; i < semi2.size(); ++i) CHECK(semi2[i].count == i + 1);

    const auto sym3 = count_batch({SquareKind::SymmetricMagic, 3}, {0, 3, 6});
    CHECK(sym3[0].count == 1);
    CHECK(sym3[1].count == 3);
    CHECK(sym3[2].count == 5);
}

TEST_CASE("oracle equivalence on small classes") {
    const SquareClass classes[] = {
        {SquareKind::SemiMagic, 2},  {SquareKind::SemiMagic, 3},
        {SquareKind::Magic, 3},      {SquareKind::Pandiagonal, 3},
        {SquareKind::SymmetricMagic, 3}, {SquareKind::SymmetricMagic, 4},
        {SquareKind::Hypercube, 2, 3},
    };
    for (const SquareClass& cls : classes) {
        for (long long t = 0; t <= 4; ++t) {
            CHECK(count(cls, t) == oracle_count(cls, t));
            CHECK(count(cls, t, true) == oracle_count(cls, t, true));
        }
    }
}

TEST_CASE("shift identity: strict(t) = plain(t - n)") {
    for (SquareClass cls : {SquareClass{SquareKind::SemiMagic, 2},
                            SquareClass{SquareKind::SemiMagic, 3},
                            SquareClass{SquareKind::Magic, 3},
                            SquareClass{SquareKind::SymmetricMagic, 3},
                            SquareClass{SquareKind::Pandiagonal, 3},
                            SquareClass{SquareKind::Hypercube, 2, 3}}) {
        for (long long t = cls.n; t <= cls.n + 5; ++t) CHECK(shift_identity_check(cls, t));
    }
    // M_3*(6) = M_3(3) = 5, H_2*(4) = H_2(2) = 3, all-ones cube at t = 2
    CHECK(count({SquareKind::Magic, 3}, 6, true) == 5);
    CHECK(count({SquareKind::SemiMagic, 2}, 4, true) == 3);
    CHECK(count({SquareKind::Hypercube, 2, 3}, 2, true) == 1);
}

TEST_CASE("diagonal constraints refine semi-magic counts") {
    for (int n : {3, 4}) {
        for (long long t = 0; t <= 6; ++t) {
            const Integer semi = count({SquareKind::SemiMagic, n}, t);
            CHECK(semi >= count({SquareKind::Magic, n}, t));
            CHECK(semi >= count({SquareKind::Pandiagonal, n}, t));
        }
    }
}

TEST_CASE("the magic 3x3 solution set is closed under transposition") {
    std::set<std::vector<long long>> solutions;
    oracle_enumerate({SquareKind::Magic, 3}, 3, false,
                     [&](const std::vector<long long>& cells) { solutions.insert(cells); });
    CHECK(solutions.size() == 5);
    for (const auto& s : solutions) {
        std::vector<long long> transposed(9);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) transposed[j * 3 + i] = s[i * 3 + j];
        CHECK(solutions.count(transposed) == 1);
    }
}

TEST_CASE("worker count does not change the result") {
    for (int workers : {2, 3, 7}) {
        CountOptions opts;
        opts.workers = workers;
        CHECK(count({SquareKind::Magic, 3}, 9, false, opts) == count({SquareKind::Magic, 3}, 9));
        // H_3(5) = 3 C(8,4) + C(7,2) = 231
        CHECK(count({SquareKind::SemiMagic, 3}, 5, false, opts) == 231);
    }
}

TEST_CASE("node budget aborts instead of truncating") {
    CountOptions opts;
    opts.node_budget = 10;
    CHECK_THROWS_AS(count({SquareKind::SemiMagic, 4}, 8, false, opts), BudgetExceeded);
}

TEST_CASE("sample cache round trip") {
    const std::string path = "test_counting_cache.jsonl";
    std::remove(path.c_str());
    {
        SampleCache cache(path);
        CHECK(cache.get_or_compute({SquareKind::Magic, 3}, 6, false) == 13);
        CHECK(cache.get_or_compute({SquareKind::Magic, 3}, 6, false) == 13);
        CHECK(cache.size() == 1);
    }
    {
        SampleCache reloaded(path);
        CHECK(reloaded.size() == 1);
        CHECK(reloaded.get_or_compute({SquareKind::Magic, 3}, 6, false) == 13);
        // strict flag is part of the key
        CHECK(reloaded.get_or_compute({SquareKind::Magic, 3}, 6, true) == 5);
        CHECK(reloaded.size() == 2);
    }
    {
        SampleCache reloaded(path);
        CHECK(reloaded.size() == 2);
    }
    std::remove(path.c_str());
}
