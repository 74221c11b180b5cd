#include <catch2/catch.hpp>

#include <random>

#include <vknot/gauss.hpp>
#include <vknot/invariants.hpp>
#include <vknot/moves.hpp>
#include <vknot/ssf.hpp>

#include "support/data_path.hpp"
#include "support/generators.hpp"

using namespace vknot;
using vknot::testsupport::random_diagram;

TEST_CASE("SSF parsing") {
    SECTION("worked example") {
        auto s = parse_ssf("surface g=1 b=1\ntraversal: 1o+ 2u- 1u+ 2o-\n");
        CHECK(s.surface().genus == 1);
        CHECK(s.surface().boundary == 1);
        REQUIRE(s.crossings().size() == 2);
        CHECK(s.crossings()[0].over_first);
        CHECK_FALSE(s.crossings()[1].over_first);
        CHECK(s.crossings()[0].sign == 1);
        CHECK(s.crossings()[1].sign == -1);
        CHECK(to_gauss(s).raw_code() == "O1+U2-U1+O2-");
    }
    SECTION("comments and blank lines are skipped") {
        auto s = parse_ssf("# a record\n\nsurface g=0 b=2\n# body\ntraversal: 1o+ 1u+\n");
        CHECK(s.surface().boundary == 2);
        CHECK(s.crossings().size() == 1);
    }
    SECTION("zero-crossing record gives the unknot") {
        auto s = parse_ssf("surface g=3 b=1\ntraversal:\n");
        CHECK(to_gauss(s).n() == 0);
    }
    SECTION("errors") {
        CHECK_THROWS_AS(parse_ssf("traversal: 1o+ 1u+\n"), ssf_parse_error); // no surface
        CHECK_THROWS_AS(parse_ssf("surface g=1 b=1\ntraversal: 1o+ 1o+\n"), ssf_parse_error);
        CHECK_THROWS_AS(parse_ssf("surface g=1 b=1\ntraversal: 1o+ 1u-\n"), ssf_parse_error);
        CHECK_THROWS_AS(parse_ssf("surface g=1 b=1\ntraversal: 1o+\n"), ssf_parse_error);
        CHECK_THROWS_AS(parse_ssf("surface g=1 b=0\ntraversal:\n"), ssf_parse_error);
        CHECK_THROWS_AS(parse_ssf("surface g=1 b=1\ntraversal: 1o+ 1u+ 1o+\n"),
                        ssf_parse_error);
    }
}

TEST_CASE("round trip through serialize_ssf") {
    std::mt19937 rng(21);
    for (int t = 0; t < 50; ++t) {
        auto d = random_diagram(rng, 1 + int(rng() % 5));
        auto s = ssf_from_gauss(d, {int(rng() % 3), 1 + int(rng() % 2)});
        auto back = parse_ssf(serialize_ssf(s));
        CHECK(back == s);
    }
}

TEST_CASE("to_gauss is onto: ssf_from_gauss inverts it up to isomorphism") {
    std::mt19937 rng(22);
    for (int t = 0; t < 60; ++t) {
        auto d = random_diagram(rng, 1 + int(rng() % 6));
        auto s = ssf_from_gauss(d, {0, 1});
        CHECK(serialize(to_gauss(s)) == serialize(d));
    }
}

TEST_CASE("reverse_ssf") {
    SECTION("zero-crossing record reverses trivially") {
        auto s = parse_ssf("surface g=0 b=1\ntraversal:\n");
        CHECK(reverse_ssf(s) == s);
    }
    SECTION("involution") {
        std::mt19937 rng(23);
        for (int t = 0; t < 40; ++t) {
            auto s = ssf_from_gauss(random_diagram(rng, 1 + int(rng() % 5)), {1, 1});
            CHECK(reverse_ssf(reverse_ssf(s)) == s);
        }
    }
    SECTION("commuting square with to_gauss") {
        std::mt19937 rng(24);
        for (int t = 0; t < 60; ++t) {
            auto d = random_diagram(rng, 1 + int(rng() % 6));
            auto s = ssf_from_gauss(d, {2, 1});
            CHECK(serialize(to_gauss(reverse_ssf(s))) ==
                  serialize(ssf_reverse_transform(to_gauss(s))));
        }
    }
}

TEST_CASE("trivial-cover fixture reduces to the unknot") {
    auto s = parse_ssf(vknot::testsupport::read_file(
        vknot::testsupport::data_path("trivial_cover.ssf")));
    auto d = to_gauss(s);
    CHECK(reduced_sawollek(d).is_zero());
    auto v = bounded_equivalent(d, parse_gauss_code(""), 6, d.n());
    CHECK(v.status == SearchStatus::Equivalent);
}
