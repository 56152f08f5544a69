#include <doctest.h>

#include "cmm/seaweed/meander.hpp"
#include "cmm/series/qseries.hpp"
#include "oracles.hpp"

using namespace cmm::seaweed;

TEST_CASE("odd partitions")
{
    CHECK(odd_partitions(1).size() == 1);
    CHECK(odd_partitions(5).size() == 3); // 5, 311, 11111
    CHECK(odd_partitions(10).size() == 10);
    for (const auto& p : odd_partitions(9)) {
        CHECK(p.n() == 9);
        for (int part : p.parts) {
            CHECK(part % 2 == 1);
        }
    }
}

TEST_CASE("meander arcs")
{
    const MeanderGraph g = build_meander({{3, 1}}, {{4}});
    CHECK(g.n == 4);
    // Block of size 3 joins 1-3 and fixes 2; block of size 4 joins 1-4, 2-3.
    CHECK(g.top_arcs == std::vector<Arc>{{1, 3}});
    CHECK(g.bottom_arcs == std::vector<Arc>{{1, 4}, {2, 3}});
    CHECK_THROWS_AS(build_meander({{3}}, {{4}}), cmm::SumMismatch);
}

TEST_CASE("gl(n) calibration: index({n},{n}) = n")
{
    for (int n = 1; n <= 50; ++n) {
        CHECK(seaweed_index(build_meander({{n}}, {{n}})) == n);
    }
}

TEST_CASE("two-block seaweeds match the gcd formula")
{
    for (int a = 1; a <= 20; ++a) {
        for (int b = 1; b <= 20; ++b) {
            CHECK_MESSAGE(seaweed_index(build_meander({{a, b}}, {{a + b}})) == oracle::two_block_index(a, b),
                          "a=" << a << " b=" << b);
        }
    }
}

TEST_CASE("component counts are consistent")
{
    const Components c = components(build_meander({{5, 3, 1}}, {{9}}));
    CHECK(c.cycle_vertices + c.path_vertices == 9);
    CHECK(c.max_degree <= 2);
}

TEST_CASE("parity counts reproduce |e_n - o_n| = a(n)")
{
    const auto a = oracle::signed_partition_counts(24);
    for (int n = 1; n <= 24; ++n) {
        const ParityCounts pc = parity_counts(n);
        CHECK_MESSAGE(std::llabs(pc.e - pc.o) == a[static_cast<std::size_t>(n)], "n=" << n);
        CHECK(pc.e + pc.o == static_cast<std::int64_t>(odd_partitions(n).size()));
    }
}

TEST_CASE("parallel and serial verification agree")
{
    const auto par = verify_part2(30);
    const auto ser = verify_part2_serial(30);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].n == ser[i].n);
        CHECK(par[i].e == ser[i].e);
        CHECK(par[i].o == ser[i].o);
        CHECK(par[i].match);
    }
}
