#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "check.hpp"
#include "gen.hpp"
#include "oracle.hpp"
#include "sconv/cone.hpp"
#include "sconv/errors.hpp"
#include "sconv/replay.hpp"

using sconv::ConeVRep;
using sconv::Rat;
using sconv::RatVec;
namespace replay = sconv::replay;

namespace {

RatVec v(long a, long b) { return RatVec::from_ints({a, b}); }

ConeVRep cone(std::initializer_list<RatVec> gs) { return ConeVRep(std::vector<RatVec>(gs)); }

}  // namespace

TEST_CASE("membership examples") {
    const auto q = cone({v(1, 0), v(0, 1)});
    auto m = sconv::membership(q, v(1, 1));
    REQUIRE(m);
    CHECK(*m == std::vector<Rat>{1, 1});
    CHECK_FALSE(sconv::membership(q, v(-1, 0)));
    auto y = sconv::farkas_separator(q, v(-1, 0));
    REQUIRE(y);
    CHECK_REPLAY(replay::non_membership(q.generators(), v(-1, 0), *y));
    m = sconv::membership(q, v(0, 0));
    REQUIRE(m);
    CHECK(*m == std::vector<Rat>{0, 0});
    CHECK_THROWS_AS(sconv::membership(q, RatVec::from_ints({1, 1, 1})), sconv::ArgumentError);
}

TEST_CASE("cone construction preconditions") {
    CHECK_THROWS_AS(ConeVRep(std::vector<RatVec>{}), sconv::ArgumentError);
    CHECK_THROWS_AS(cone({v(1, 0), v(0, 0)}), sconv::ArgumentError);
    CHECK_THROWS_AS(cone({RatVec::from_ints({1})}), sconv::ArgumentError);
    CHECK_THROWS_AS(cone({v(1, 0), RatVec::from_ints({1, 0, 0})}), sconv::DimensionError);
}

TEST_CASE("pointedness examples") {
    auto k = cone({v(1, 0), v(0, 1)});
    auto p = sconv::is_pointed(k);
    CHECK(p.pointed);
    REQUIRE(std::holds_alternative<sconv::StrictWitness>(p.certificate));
    CHECK(std::get<sconv::StrictWitness>(p.certificate).u == v(1, 1));
    CHECK_REPLAY(replay::pointedness(k.generators(), p));

    k = cone({v(1, 0), v(-1, 0)});
    p = sconv::is_pointed(k);
    CHECK_FALSE(p.pointed);
    REQUIRE(std::holds_alternative<sconv::LineWitness>(p.certificate));
    CHECK((sconv::same_ray(std::get<sconv::LineWitness>(p.certificate).x, v(1, 0)) ||
           sconv::same_ray(std::get<sconv::LineWitness>(p.certificate).x, v(-1, 0))));
    CHECK_REPLAY(replay::pointedness(k.generators(), p));

    k = cone({v(1, 0), v(0, 1), v(-1, -1)});
    p = sconv::is_pointed(k);
    CHECK_FALSE(p.pointed);
    CHECK_REPLAY(replay::pointedness(k.generators(), p));
}

TEST_CASE("extreme_rays examples") {
    CHECK(sconv::extreme_rays(cone({v(1, 0), v(0, 1), v(1, 1)})) == std::vector<std::size_t>{0, 1});
    CHECK(sconv::extreme_rays(cone({v(1, 0), v(0, 1)})) == std::vector<std::size_t>{0, 1});
    const auto k = cone({v(1, 0), v(2, 0), v(0, 1)});
    const auto e = sconv::extreme_rays(k);
    CHECK(e == std::vector<std::size_t>{0, 2});
    // Mutual membership: the reported rays generate the same cone.
    std::vector<RatVec> ext;
    for (auto i : e) ext.push_back(k[i]);
    for (const auto& g : k.generators()) CHECK(oracle::naive_member(ConeVRep(ext), g));
    CHECK_THROWS_AS(sconv::extreme_rays(cone({v(1, 0), v(-1, 0)})), sconv::PreconditionError);
}

TEST_CASE("conic_caratheodory examples") {
    const auto k = cone({v(1, 0), v(0, 1), v(1, 1)});
    auto check_against_oracle = [&](const RatVec& x) {
        const auto d = sconv::conic_caratheodory(k, x);
        CHECK_REPLAY(replay::conic_decomposition(k.generators(), x, d.indices, d.coeffs));
        const auto all = oracle::naive_caratheodory(k, x);
        CHECK(std::any_of(all.begin(), all.end(), [&](const oracle::Support& s) {
            return s.indices == d.indices && s.coeffs == d.coeffs;
        }));
        return d;
    };
    check_against_oracle(v(2, 1));
    check_against_oracle(v(1, 1));
    const auto d = sconv::conic_caratheodory(cone({v(1, 0), v(0, 1)}), v(3, 0));
    CHECK(d.indices == std::vector<std::size_t>{0});
    CHECK(d.coeffs == std::vector<Rat>{3});
    CHECK_THROWS_AS(sconv::conic_caratheodory(k, v(0, 0)), sconv::PreconditionError);
    CHECK_THROWS_AS(sconv::conic_caratheodory(k, v(-1, 0)), sconv::PreconditionError);
}

TEST_CASE("intersect_nontrivial examples") {
    std::vector<ConeVRep> cs{cone({v(1, 0), v(1, 1)}), cone({v(1, 1), v(0, 1)})};
    auto w = sconv::intersect_nontrivial(cs);
    REQUIRE(w);
    CHECK(sconv::same_ray(w->x, v(1, 1)));
    CHECK_REPLAY(replay::intersection(cs, *w));

    cs = {cone({v(1, 0)}), cone({v(0, 1)})};
    CHECK_FALSE(sconv::intersect_nontrivial(cs));

    cs = {cone({v(1, 0), v(0, 1)})};
    w = sconv::intersect_nontrivial(cs);
    REQUIRE(w);
    CHECK_FALSE(w->x.is_zero());
    CHECK_REPLAY(replay::intersection(cs, *w));

    cs = {cone({v(1, 0), v(-1, 0)})};
    CHECK_THROWS_AS(sconv::intersect_nontrivial(cs), sconv::PreconditionError);
}

TEST_CASE("covers_space examples") {
    std::vector<ConeVRep> cs{cone({v(1, 0), v(0, 1)})};
    auto c = sconv::covers_space(cs, 100);
    CHECK(c.verdict == sconv::Coverage::NotCovered);
    CHECK(c.exact);
    CHECK_REPLAY(replay::coverage(cs, c));

    cs = {cone({v(1, 0), v(1, 1)}), cone({v(1, 1), v(0, 1)}), cone({v(1, 0), v(0, 1)})};
    c = sconv::covers_space(cs, 100);
    CHECK(c.verdict == sconv::Coverage::NotCovered);
    REQUIRE(c.witness);
    // Every cone lies in the closed first quadrant, so the witness leaves it.
    CHECK(((*c.witness)[0] < 0 || (*c.witness)[1] < 0));
    CHECK_REPLAY(replay::coverage(cs, c));

    const std::vector<RatVec> us{v(1, 0), v(0, 1), v(-1, -1)};
    cs = {sconv::qi_cone(us, 0), sconv::qi_cone(us, 1), sconv::qi_cone(us, 2)};
    c = sconv::covers_space(cs, 100);
    CHECK(c.verdict == sconv::Coverage::CoveredNotFalsified);
    CHECK(c.exact);
    CHECK(std::string(sconv::to_string(c.verdict)) == "covered-not-falsified");
}

TEST_CASE("barycentric_origin examples") {
    auto b = sconv::barycentric_origin(std::vector{v(1, 0), v(0, 1), v(-1, -1)});
    REQUIRE(b);
    CHECK(*b == std::vector<Rat>{Rat(1, 3), Rat(1, 3), Rat(1, 3)});
    CHECK_FALSE(sconv::barycentric_origin(std::vector{v(1, 0), v(0, 1), v(1, 1)}));

    // 2a = c, b = c, a + b + c = 1 gives (1/5, 2/5, 2/5).
    const std::vector<RatVec> us{v(2, 0), v(0, 1), v(-1, -1)};
    auto s = sconv::solve_linear(sconv::RatMat({RatVec::from_ints({2, 0, -1}), RatVec::from_ints({0, 1, -1}),
                                                RatVec::from_ints({1, 1, 1})}),
                                 RatVec::from_ints({0, 0, 1}));
    REQUIRE(s);
    b = sconv::barycentric_origin(us);
    REQUIRE(b);
    CHECK(*b == s->particular.coords());
    CHECK(*b == std::vector<Rat>{Rat(1, 5), Rat(2, 5), Rat(2, 5)});
    CHECK_REPLAY(replay::barycentric(us, *b));

    CHECK_THROWS_AS(sconv::barycentric_origin(std::vector{v(0, 0), v(1, 1), v(2, 2)}), sconv::PreconditionError);
}

TEST_CASE("qi_decomposition examples") {
    const std::vector<RatVec> us{v(1, 0), v(0, 1), v(-1, -1)};
    const std::vector<Rat> lb{Rat(1, 3), Rat(1, 3), Rat(1, 3)};

    auto d = sconv::qi_decomposition(us, lb, v(-2, 1));
    CHECK(d.j == 0);
    CHECK(d.mu == std::vector<Rat>{0, 3, 2});
    CHECK(Rat(0) * us[0] + Rat(3) * us[1] + Rat(2) * us[2] == v(-2, 1));
    CHECK_REPLAY(replay::qi(us, lb, v(-2, 1), d));

    d = sconv::qi_decomposition(us, lb, v(0, 0));
    CHECK(d.mu == std::vector<Rat>{0, 0, 0});

    d = sconv::qi_decomposition(us, lb, v(1, 0));
    CHECK((d.j == 1 || d.j == 2));
    CHECK(sconv::linear_combination(us, d.mu) == v(1, 0));
    CHECK_REPLAY(replay::qi(us, lb, v(1, 0), d));

    const std::vector<Rat> wrong{Rat(1, 2), Rat(1, 4), Rat(1, 4)};
    CHECK_THROWS_AS(sconv::qi_decomposition(us, wrong, v(1, 0)), sconv::PreconditionError);
}

TEST_CASE("property: membership agrees with support enumeration and certifies both ways") {
    gen::Rng rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const auto n = static_cast<std::size_t>(gen::integer(rng, 2, 4));
        const auto k = static_cast<std::size_t>(gen::integer(rng, 1, 6));
        const ConeVRep c(gen::hull_addible_rays(rng, n, k, 6));
        const RatVec x = gen::vec(rng, n, 8, 2);
        const auto m = sconv::membership(c, x);
        CHECK(m.has_value() == oracle::naive_member(c, x));
        if (m) {
            CHECK_REPLAY(replay::membership(c.generators(), x, *m));
            CHECK_FALSE(sconv::farkas_separator(c, x));
        } else {
            auto y = sconv::farkas_separator(c, x);
            REQUIRE(y);
            CHECK_REPLAY(replay::non_membership(c.generators(), x, *y));
        }
    }
}

TEST_CASE("property: extreme rays agree with the naive oracle") {
    gen::Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(gen::integer(rng, 2, 4));
        auto gens = gen::hull_addible_rays(rng, n, static_cast<std::size_t>(gen::integer(rng, 1, 7)), 5);
        if (trial % 4 == 0) gens.push_back(Rat(gen::integer(rng, 1, 4)) * gens.front());
        if (trial % 5 == 0) gens.push_back(gens[0] + gens.back());
        const ConeVRep c(gens);
        CHECK(sconv::extreme_rays(c) == oracle::naive_extreme(c));
    }
}

TEST_CASE("property: conic Carathéodory output is among the enumerated supports") {
    gen::Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(gen::integer(rng, 2, 4));
        const auto k = static_cast<std::size_t>(gen::integer(rng, n, 7));
        const ConeVRep c(gen::hull_addible_rays(rng, n, k, 6));
        std::vector<Rat> w;
        for (std::size_t i = 0; i < k; ++i) w.emplace_back(gen::integer(rng, 0, 4));
        RatVec x = sconv::linear_combination(c.generators(), w);
        if (x.is_zero()) x = c[0];
        const auto d = sconv::conic_caratheodory(c, x);
        CHECK(d.indices.size() <= n);
        CHECK_REPLAY(replay::conic_decomposition(c.generators(), x, d.indices, d.coeffs));
        const auto all = oracle::naive_caratheodory(c, x);
        CHECK(std::any_of(all.begin(), all.end(), [&](const oracle::Support& s) { return s.indices == d.indices; }));
    }
}

TEST_CASE("property: strict separation and zero combinations are complementary") {
    gen::Rng rng(44);
    for (int trial = 0; trial < 150; ++trial) {
        const auto n = static_cast<std::size_t>(gen::integer(rng, 2, 4));
        const auto k = static_cast<std::size_t>(gen::integer(rng, 1, 6));
        std::vector<RatVec> pts;
        for (std::size_t i = 0; i < k; ++i) pts.push_back(gen::int_vec(rng, n, 5));
        const auto u = sconv::strict_separator(pts);
        const auto l = sconv::zero_convex_combination(pts);
        CHECK(u.has_value() != l.has_value());
        if (u) CHECK_REPLAY(replay::strict_separation(pts, *u, 1));
        if (l) CHECK_REPLAY(replay::zero_convex_combination(pts, *l));
    }
}

TEST_CASE("property: planar coverage is exact") {
    gen::Rng rng(45);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<ConeVRep> cs;
        const auto m = gen::integer(rng, 1, 4);
        for (long i = 0; i < m; ++i) cs.emplace_back(gen::hull_addible_rays(rng, 2, 2, 5));
        const auto c = sconv::covers_space(cs, 0);
        CHECK(c.exact);
        CHECK_REPLAY(replay::coverage(cs, c));
        if (c.verdict == sconv::Coverage::CoveredNotFalsified) {
            // Dense integer probe around the circle: every probe lies in some cone.
            for (long a = -12; a <= 12; ++a)
                for (long b = -12; b <= 12; ++b) {
                    if (a == 0 && b == 0) continue;
                    CHECK(std::any_of(cs.begin(), cs.end(),
                                      [&](const ConeVRep& k) { return oracle::naive_member(k, v(a, b)); }));
                }
        }
    }
}

TEST_CASE("property: Qi decomposition always succeeds") {
    gen::Rng rng(46);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(gen::integer(rng, 2, 4));
        const auto us = gen::simplex_around_origin(rng, n);
        const auto lb = sconv::barycentric_origin(us);
        REQUIRE(lb);
        CHECK_REPLAY(replay::barycentric(us, *lb));
        for (int t = 0; t < 25; ++t) {
            const RatVec x = gen::vec(rng, n, 30, 7);
            const auto d = sconv::qi_decomposition(us, *lb, x);
            CHECK_REPLAY(replay::qi(us, *lb, x, d));
            CHECK(oracle::naive_member(sconv::qi_cone(us, d.j), x));
        }
    }
}
