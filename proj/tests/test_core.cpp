#include <doctest.h>

#include <random>

#include "slalg/core.hpp"
#include "slalg/errors.hpp"

using namespace slalg;

TEST_CASE("min semilattice operation") {
    auto nat = Semigroup::nat_min();
    CHECK(op(nat, Point::integer(3), Point::integer(5)) == Point::integer(3));
    CHECK(op(nat, Point::integer(4), Point::integer(4)) == Point::integer(4));

    auto plus = Semigroup::nat_plus();
    CHECK(op(plus, Point::integer(3), Point::integer(5)) == Point::integer(8));
}

TEST_CASE("order via the operation") {
    auto nat = Semigroup::nat_min();
    CHECK(leq(nat, Point::integer(2), Point::integer(7)));
    CHECK_FALSE(leq(nat, Point::integer(7), Point::integer(2)));
    auto z = Semigroup::int_min();
    CHECK(leq(z, Point::integer(-3), Point::integer(-3)));
}

TEST_CASE("domain validation") {
    auto q = Semigroup::posrat_min();
    CHECK_THROWS_AS(op(q, Point{Rat(0)}, Point{Rat(1)}), DomainError);
    CHECK_THROWS_AS(op(q, Point{Rat(-1, 2)}, Point{Rat(1)}), DomainError);
    auto nat = Semigroup::nat_min();
    CHECK_THROWS_AS(nat.require(Point::integer(0)), DomainError);
    CHECK_THROWS_AS(nat.require(Point{Rat(3, 2)}), DomainError);
    CHECK(q.contains(Point{Rat(3, 2)}));
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> d(1, 1000);
    for (Semigroup sg : {Semigroup::nat_min(), Semigroup::int_min(), Semigroup::posrat_min(),
                         Semigroup::nat_plus()}) {
        for (int i = 0; i < 200; ++i) {
            long xs = d(rng), ys = d(rng), zs = d(rng);
            if (sg.kind == SemigroupKind::IntMin) {
                xs -= 500; ys -= 500; zs -= 500;
            }
            Point x{Rat(xs)}, y{Rat(ys)}, z{Rat(zs)};
            if (sg.kind == SemigroupKind::PosRatMin) {
                x = Point{Rat(xs, 7)};
                y = Point{Rat(ys, 3)};
                z = Point{Rat(zs, 11)};
            }
            CHECK(op(sg, op(sg, x, y), z) == op(sg, x, op(sg, y, z)));
        }
    }
}

TEST_CASE("semilattice laws exhaustively on a truncation") {
    auto tr = Truncation::range(Semigroup::nat_min(), 1, 50);
    const Semigroup& sg = tr.semigroup;
    for (const Point& s : tr.points)
        for (const Point& t : tr.points) {
            CHECK(op(sg, s, t) == op(sg, t, s));
            CHECK(op(sg, s, s) == s);
            CHECK(leq(sg, s, t) == (s.v <= t.v));
            // op(s,t) is the greatest lower bound of {s, t}
            Point m = op(sg, s, t);
            CHECK(leq(sg, m, s));
            CHECK(leq(sg, m, t));
            for (const Point& u : {tr.points[0], tr.points[tr.size() / 2], tr.points.back()})
                if (leq(sg, u, s) && leq(sg, u, t)) CHECK(leq(sg, u, m));
        }
}

TEST_CASE("declared semigroup properties") {
    CHECK(Semigroup::nat_min().properties().is_semilattice);
    CHECK_FALSE(Semigroup::nat_min().properties().is_weakly_cancellative);
    CHECK(Semigroup::nat_plus().properties().is_weakly_cancellative);
    CHECK_FALSE(Semigroup::nat_plus().properties().is_semilattice);
    CHECK(Semigroup::int_min().properties().closure_scattered);
    CHECK_FALSE(Semigroup::posrat_min().properties().closure_scattered);
    for (auto sg : {Semigroup::nat_min(), Semigroup::int_min(), Semigroup::posrat_min()})
        CHECK_FALSE(sg.properties().has_sup_in_s);
}

TEST_CASE("truncations") {
    auto tr = Truncation::range(Semigroup::nat_min(), 1, 9);
    CHECK(tr.max() == Point::integer(9));
    CHECK(tr.contains(Point::integer(4)));
    CHECK_FALSE(tr.contains(Point::integer(10)));
    CHECK_THROWS_AS(Truncation(Semigroup::nat_plus(), {Point::integer(1), Point::integer(2)}),
                    DomainError);
    CHECK_THROWS_AS(Truncation(Semigroup::nat_min(), {Point::integer(3), Point::integer(2)}),
                    DomainError);
    CHECK_THROWS_AS(Truncation(Semigroup::nat_min(), {}), DomainError);
}

TEST_CASE("points canonicalize their rationals") {
    CHECK(Point{Rat(14, 7)} == Point::integer(2));
    CHECK(Semigroup::nat_min().contains(Point{Rat(14, 7)}));
}
