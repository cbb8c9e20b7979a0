#include <doctest.h>

#include <random>

#include "slalg/spectra.hpp"
#include "support/oracle.hpp"

using namespace slalg;
using slalg::testing::random_element;

namespace {
const Semigroup kNat = Semigroup::nat_min();

Element el(std::initializer_list<std::pair<long, Rat>> terms) {
    std::vector<std::pair<Point, Rat>> v;
    for (auto& [p, c] : terms) v.emplace_back(Point::integer(p), c);
    return Element::from_terms(kNat, std::move(v));
}
} // namespace

TEST_CASE("phi_k sums coefficients above the threshold") {
    Element a = el({{1, Rat(2)}, {4, Rat(3)}});
    CHECK(phi_k_apply(Point::integer(2), a) == 3);
    CHECK(phi_k_apply(Point::integer(1), a) == 5);
    for (long n = 1; n <= 6; ++n)
        for (long k = 1; k <= 6; ++k)
            CHECK(phi_k_apply(Point::integer(k), delta(kNat, Point::integer(n))) ==
                  (n >= k ? 1 : 0));
}

TEST_CASE("gelfand transform") {
    // step function for a point mass
    auto g = gelfand(delta(kNat, Point::integer(3)), 6);
    REQUIRE(g.size() == 6);
    for (std::size_t i = 0; i < g.size(); ++i)
        CHECK(g[i].second == (static_cast<long>(i) + 1 <= 3 ? 1 : 0));

    CHECK(gelfand(Element(kNat), 4) ==
          std::vector<std::pair<Point, Rat>>{{Point::integer(1), Rat(0)},
                                             {Point::integer(2), Rat(0)},
                                             {Point::integer(3), Rat(0)},
                                             {Point::integer(4), Rat(0)}});

    // multiplicative: gelfand(a * b) = gelfand(a) . gelfand(b) pointwise
    std::mt19937_64 rng(19);
    for (int i = 0; i < 60; ++i) {
        Element a = random_element(rng, kNat, 10, 30);
        Element b = random_element(rng, kNat, 10, 30);
        auto ga = gelfand(a, 12), gb = gelfand(b, 12), gab = gelfand(convolve(a, b), 12);
        for (int k = 0; k < 12; ++k) CHECK(gab[k].second == ga[k].second * gb[k].second);
    }
}

TEST_CASE("phi_k is multiplicative") {
    std::mt19937_64 rng(37);
    Weight wn = Weight::parse("n", kNat);
    for (int i = 0; i < 100; ++i) {
        Element a = random_element(rng, kNat, 12, 40);
        Element b = random_element(rng, kNat, 12, 40);
        Point k = Point::integer(1 + static_cast<long>(rng() % 40));
        CHECK(phi_k_apply(k, convolve(a, b)) == phi_k_apply(k, a) * phi_k_apply(k, b));
        // norm bound: |phi_k(a)| <= ||a||_1
        CHECK(rat_abs(phi_k_apply(k, a)) <= norm1(a));
    }
    (void)wn;
}

TEST_CASE("brute-force character enumeration") {
    Weight w1 = Weight::parse("1", kNat);
    Weight wn = Weight::parse("n", kNat);
    for (long n = 1; n <= 12; ++n) {
        Truncation tr = Truncation::range(kNat, 1, n);
        auto chars = enumerate_characters(tr, wn);
        REQUIRE(chars.size() == static_cast<std::size_t>(n));
        for (long k = 0; k < n; ++k) CHECK(chars[static_cast<std::size_t>(k)].threshold == Point::integer(k + 1));
        // weight independence: Phi_omega = Phi_S
        auto chars1 = enumerate_characters(tr, w1);
        REQUIRE(chars1.size() == chars.size());
        for (std::size_t i = 0; i < chars.size(); ++i)
            CHECK(chars1[i].threshold == chars[i].threshold);
    }
    // every enumerated character is multiplicative on the truncation
    Truncation tr = Truncation::range(kNat, 1, 8);
    for (const Semicharacter& c : enumerate_characters(tr, wn))
        for (const Point& s : tr.points)
            for (const Point& t : tr.points)
                CHECK(c.eval(op(kNat, s, t)) == (c.eval(s) && c.eval(t)));
    CHECK_THROWS_AS(enumerate_characters(Truncation::range(kNat, 1, 21), wn), DomainError);
}

TEST_CASE("predual density approximation") {
    Weight wn = Weight::parse("n", kNat);

    // finite support: exactly representable once n reaches the support
    Functional ind3 = Functional::indicator({Point::integer(3)});
    CHECK(predual_density_approx(ind3, wn, 3).residual.exact() == 0);
    CHECK(predual_density_approx(ind3, wn, 5).residual.exact() == 0);
    CHECK(predual_density_approx(ind3, wn, 2).residual.exact() == Rat(1, 3));

    // lambda(k) = 1/k with omega = n^2: residual is the tail sup 1/(n+1)^3
    Weight w2 = Weight::parse("n^2", kNat);
    Functional lam = Functional::phi_omega(Weight::parse("n", kNat));
    Rat prev(1);
    for (int n = 1; n <= 12; ++n) {
        Value r = predual_density_approx(lam, w2, n).residual;
        REQUIRE(r.is_exact());
        CHECK(r.exact() == Rat(1) / pow_int(Rat(n + 1), 3));
        CHECK(r.exact() <= prev);
        prev = r.exact();
    }

    // the zero functional needs nothing at all
    Functional zero = Functional::table({}, Functional::Tail::Zero);
    auto dz = predual_density_approx(zero, wn, 0);
    CHECK(dz.residual.exact() == 0);
    CHECK(dz.combination.empty());

    // members only
    Functional bad = Functional::char_times_omega(SetSpec::parity(true));
    CHECK_THROWS_AS(predual_density_approx(bad, wn, 4), PreconditionError);
    // and only under Lim omega = infinity
    CHECK_THROWS_AS(predual_density_approx(ind3, Weight::parse("1", kNat), 4), PreconditionError);
}

TEST_CASE("density combination reproduces lambda below n") {
    Weight wn = Weight::parse("n", kNat);
    Functional lam = Functional::table({{Rat(1), Rat(5)}, {Rat(3), Rat(-2)}, {Rat(9), Rat(1, 7)}},
                                       Functional::Tail::Zero);
    auto d = predual_density_approx(lam, wn, 6);
    // mu^(n)(s) = lambda(s) for s <= n: the combination lists lambda's values
    REQUIRE(d.combination.size() == 2);
    CHECK(d.combination[0] == std::pair<Point, Rat>(Point::integer(1), Rat(5)));
    CHECK(d.combination[1] == std::pair<Point, Rat>(Point::integer(3), Rat(-2)));
    CHECK(d.residual.exact() == Rat(1, 7) / 9);
}
