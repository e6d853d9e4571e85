#include <doctest.h>

#include <cstdint>

#include "czkit/halton.hpp"
#include "czkit/interval.hpp"

using namespace czkit;

TEST_CASE("diam_union endpoint evaluation") {
    const Interval a = Interval::from_endpoints(0, 1);
    CHECK(diam_union(a, a) == doctest::Approx(1.0));
    CHECK(diam_union(a, Interval::from_endpoints(2, 3)) == doctest::Approx(3.0));
    CHECK(diam_union(Interval::from_endpoints(-1, 1), Interval::from_endpoints(0, 0.5)) ==
          doctest::Approx(2.0));
}

TEST_CASE("rdist basics") {
    const Interval a = Interval::from_endpoints(0, 1);
    CHECK(rdist(a, a) == doctest::Approx(1.0));
    CHECK(rdist(a, Interval::from_endpoints(2, 3)) == doctest::Approx(3.0));
    CHECK(rdist(Interval::from_endpoints(-4, 4), Interval::from_endpoints(0, 1)) ==
          doctest::Approx(1.0));
}

TEST_CASE("eccentricity") {
    CHECK(ec(Interval(0, 3), Interval(5, 3)) == doctest::Approx(1.0));
    CHECK(ec(Interval(0, 2), Interval(0, 8)) == doctest::Approx(0.25));
    CHECK(ec(Interval(0, 8), Interval(0, 2)) == doctest::Approx(0.25));
}

TEST_CASE("notation comparabilities on random pairs") {
    std::uint64_t st = 7;
    for (int i = 0; i < 10000; ++i) {
        const Interval I(8 * (2 * uniform01(st) - 1), std::exp2(6 * uniform01(st) - 3));
        const Interval J(8 * (2 * uniform01(st) - 1), std::exp2(6 * uniform01(st) - 3));
        const double mid = 0.5 * I.length + std::abs(I.center - J.center) + 0.5 * J.length;
        const double d = diam_union(I, J);
        // two-sided comparability: mid <= diam(I u J) <= 2 mid
        CHECK(mid <= d * (1.0 + 1e-12));
        CHECK(d <= 2.0 * mid * (1.0 + 1e-12));
        CHECK(rdist(I, J) >= 1.0 - 1e-14);
        CHECK(rdist(I, J) == doctest::Approx(rdist(J, I)));
        CHECK(ec(I, J) <= 1.0);
        CHECK(ec(I, J) > 0.0);
    }
}

TEST_CASE("is_lagom on the worked examples") {
    CHECK(is_lagom(Interval(0.0, 1.0), 1));              // B_1
    CHECK(is_lagom(Interval::from_endpoints(0, 1), 1));  // rdist([0,1],[-1,1]) = 1
    CHECK(!is_lagom(Interval::from_endpoints(4, 5), 1)); // rdist = 3 > 1
}

TEST_CASE("enum_lagom matches brute force and the remark bounds") {
    for (int M = 1; M <= 4; ++M) {
        LagomWindow w(M, 8.0, -3, 3);
        const auto got = enum_lagom(w);
        std::vector<DyadicInterval> brute;
        for (const auto& d : w.enumerate())
            if (is_lagom(d.to_interval(), M)) brute.push_back(d);
        REQUIRE(got.size() == brute.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == brute[i]);
        // membership bounds: I in D_M implies |c(I)| <= (M-1/2) 2^M and
        // I inside [-M 2^M, M 2^M]
        for (const auto& d : got) {
            const Interval I = d.to_interval();
            CHECK(std::abs(I.center) <= (M - 0.5) * std::exp2(M) + 1e-12);
            CHECK(ball(2.0 * M * std::exp2(M)).contains(I));
        }
        // sorted and duplicate-free
        for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1] < got[i]);
    }
}

TEST_CASE("enum_lagom membership example and degenerate window") {
    LagomWindow w(1, 2.0, -1, 1);
    const auto got = enum_lagom(w);
    bool has01 = false;
    for (const auto& d : got)
        if (d.j == 0 && d.k == 0) has01 = true;
    CHECK(has01); // [0,1] is lagom for M=1
    CHECK_THROWS(LagomWindow(1, 2.0, 1, 0));
}

TEST_CASE("smallest dyadic containing") {
    const auto a = smallest_dyadic_containing({0.1, 0.4}, 8);
    CHECK(a.j == 1);
    CHECK(a.k == 0);
    const auto b = smallest_dyadic_containing({0.25}, 6);
    CHECK(b.j == 6);
    CHECK(b.k == 16);
    const auto c = smallest_dyadic_containing({0.4, 0.6}, 8);
    CHECK(c.j == 0);
    CHECK(c.k == 0);
    // straddling pair comparability |I|/2 <= |t-x| <= |I|
    const auto d = smallest_dyadic_containing({0.49, 0.51}, 20);
    CHECK(d.to_interval().length >= 0.02);
}

TEST_CASE("dyadic interval arithmetic is exact") {
    const DyadicInterval d(3, -5);
    CHECK(d.length() == 0.125);
    CHECK(d.left() == -0.625);
    CHECK(d.center() == -0.5625);
}
