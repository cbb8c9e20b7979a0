#include <doctest.h>

#include <random>

#include "slalg/json_io.hpp"
#include "support/oracle.hpp"

using namespace slalg;
using slalg::testing::random_element;
using io::json;

TEST_CASE("rationals and points round-trip") {
    for (const char* text : {"0", "7", "-3", "22/7", "-5/9"}) {
        Rat q = parse_rat(text);
        CHECK(io::rat_from(io::rat_json(q)) == q);
    }
    Rat huge("123456789123456789123456789");
    CHECK(io::rat_from(io::rat_json(huge)) == huge);
    CHECK(io::point_from(io::point_json(Point{Rat(3, 2)})) == Point{Rat(3, 2)});
}

TEST_CASE("element schema round-trips") {
    std::mt19937_64 rng(53);
    for (Semigroup sg : {Semigroup::nat_min(), Semigroup::int_min(), Semigroup::posrat_min()}) {
        for (int i = 0; i < 40; ++i) {
            Element e = random_element(rng, sg, 12, 60);
            Element back = io::element_from(io::element_json(e));
            CHECK(back == e);
            Element back2 = io::element_from_compact(io::element_compact(e), sg);
            CHECK(back2 == e);
        }
    }
    // documented shape
    Element a = Element::from_terms(Semigroup::nat_min(),
                                    {{Point::integer(1), Rat(4)}, {Point::integer(2), Rat(3, 7)}});
    json j = io::element_json(a);
    CHECK(j["semigroup"] == "nat-min");
    CHECK(j["mode"] == "exact");
    CHECK(j["terms"][0][0] == 1);
    CHECK(j["terms"][0][1] == "4");
    CHECK(j["terms"][1][1] == "3/7");
}

TEST_CASE("sequence specs round-trip") {
    auto nat = Semigroup::nat_min();
    Weight w1 = Weight::parse("1", nat);
    std::vector<Sequence> seqs = {
        Sequence::arith(nat, Rat(2), Rat(2)),
        Sequence::geom(nat, Rat(1), Rat(2)),
        Sequence::enum_le(w1, Rat(1)),
        Sequence::rationals_in(Semigroup::posrat_min(), Rat(0), Rat(1)),
        Sequence::explicit_list(nat, {Point::integer(2), Point::integer(5)}, Rat(3)),
    };
    for (const Sequence& s : seqs) {
        const Semigroup& sg = s.semigroup();
        Sequence back = io::sequence_from(io::sequence_json(s), sg, &w1);
        CHECK(back.kind() == s.kind());
        for (std::size_t i = 0; i < 6; ++i) CHECK(back.at(i) == s.at(i));
    }
}

TEST_CASE("functional specs round-trip") {
    auto nat = Semigroup::nat_min();
    Weight wn = Weight::parse("n", nat);
    std::vector<Functional> funcs = {
        Functional::indicator({Point::integer(1), Point::integer(4)}),
        Functional::char_times_omega(SetSpec::parity(true)),
        Functional::phi_k(Point::integer(3)),
        Functional::phi_omega(),
        Functional::phi_omega(Weight::parse("n^2", nat)),
        Functional::table({{Rat(1), Rat(5)}, {Rat(4), Rat(-2, 3)}}, Functional::Tail::Const, Rat(1, 2)),
    };
    for (const Functional& f : funcs) {
        Functional back = io::functional_from(io::functional_json(f), nat);
        CHECK(back.form() == f.form());
        for (long s = 1; s <= 10; ++s)
            CHECK(back.eval(Point::integer(s), wn).to_double() ==
                  f.eval(Point::integer(s), wn).to_double());
    }
}

TEST_CASE("iterated-limit config matches the documented schema") {
    json j = json::parse(R"({"inner_depth": 1000, "outer_depth": 1000,
                             "tolerance": 1e-6, "tail_window": 8})");
    IterConfig cfg = io::iter_config_from(j);
    CHECK(cfg.inner_depth == 1000);
    CHECK(cfg.tail_window == 8);
    json back = io::iter_config_json(cfg);
    CHECK(back["tolerance"] == 1e-6);
    CHECK_THROWS_AS(io::iter_config_from(json::parse(R"({"tail_window": 0})")), DomainError);
}

TEST_CASE("classification and limit reports serialize with stable keys") {
    auto nat = Semigroup::nat_min();
    json c = io::classification_json(classify(Weight::parse("n", nat)));
    CHECK(c["verdict"] == "ArensRegular");
    CHECK(c["predual_note"] == "E_omega_predual");
    CHECK(c["reasons"].is_array());
    CHECK(c["reasons"][0][0] == "AR-iff-Lim-omega-infinite");

    json l = io::limit_report_json(analyze_limits(Weight::parse("1", nat)));
    CHECK(l["filter_lim_infinite"] == false);
    CHECK(l["liminf_value"] == 1);
    CHECK(l["bounded_cofinal_bound"] == 1);
}

TEST_CASE("float-mode elements round-trip through their dyadic doubles") {
    auto z = Semigroup::int_min();
    Weight we = Weight::parse("exp(|n|)", z);
    Element f = delta_tilde(z, Point::integer(2), we, Mode::Float);
    json j = io::element_json(f);
    CHECK(j["mode"] == "float");
    Element back = io::element_from(j);
    CHECK(back == f); // dyadic doubles survive exactly
}

TEST_CASE("enum-le refuses finite sets") {
    auto nat = Semigroup::nat_min();
    Weight wn = Weight::parse("n", nat);
    CHECK_THROWS_AS(Sequence::enum_le(wn, Rat(5)), DomainError);
}
