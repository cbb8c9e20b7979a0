#include <doctest.h>

#include <random>

#include "slalg/arens.hpp"

using namespace slalg;

namespace {
const Semigroup kNat = Semigroup::nat_min();

IterConfig fast_cfg(long inner, long outer, double tol = 1e-6) {
    IterConfig cfg;
    cfg.inner_depth = inner;
    cfg.outer_depth = outer;
    cfg.tolerance = tol;
    return cfg;
}
} // namespace

TEST_CASE("Omega values") {
    Weight wn = Weight::parse("n", kNat);
    CHECK(omega_fn(wn, Point::integer(3), Point::integer(5)).exact() == Rat(1, 5));
    CHECK(omega_fn(wn, Point::integer(7), Point::integer(7)).exact() == Rat(1, 7));
    Weight p1 = Weight::parse("1", Semigroup::nat_plus());
    CHECK(omega_fn(p1, Point::integer(3), Point::integer(4)).exact() == 1);

    // min specialization: Omega(s,t) = 1/omega(max(s,t))
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        Point s = Point::integer(1 + static_cast<long>(rng() % 500));
        Point t = Point::integer(1 + static_cast<long>(rng() % 500));
        Point mx = s >= t ? s : t;
        CHECK(omega_fn(wn, s, t).exact() == Rat(1) / wn.eval_exact_or_throw(mx));
    }
}

TEST_CASE("iterated limits: constant kernel is exact") {
    Weight w1 = Weight::parse("1", kNat);
    PairKernel k = [&](const Point& s, const Point& t) { return omega_fn(w1, s, t); };
    Sequence a = Sequence::arith(kNat, Rat(1), Rat(1));
    Sequence b = Sequence::arith(kNat, Rat(2), Rat(1));
    IterPair p = iterated_limit(k, a, b, fast_cfg(1200, 1200));
    REQUIRE(p.box.status == IterResult::Status::Value);
    REQUIRE(p.diamond.status == IterResult::Status::Value);
    CHECK(p.box.exact);
    CHECK(p.box.exact_value == 1);
    CHECK(p.diamond.exact);
    CHECK(p.diamond.exact_value == 1);
}

TEST_CASE("iterated limits: 1/max kernel decays") {
    Weight wn = Weight::parse("n", kNat);
    PairKernel k = [&](const Point& s, const Point& t) { return omega_fn(wn, s, t); };

    // geometric sequences certify 0 within the tolerance
    Sequence g1 = Sequence::geom(kNat, Rat(1), Rat(2));
    Sequence g2 = Sequence::geom(kNat, Rat(3), Rat(2));
    IterPair pg = iterated_limit(k, g1, g2, fast_cfg(1100, 1100));
    REQUIRE(pg.box.status == IterResult::Status::Value);
    REQUIRE(pg.diamond.status == IterResult::Status::Value);
    CHECK(std::abs(pg.box.value) <= 1e-6);
    CHECK(std::abs(pg.diamond.value) <= 1e-6);

    // arithmetic sequences converge like 1/n: the window criterion reports
    // the stabilized tail value, small but not zero
    Sequence a1 = Sequence::arith(kNat, Rat(1), Rat(1));
    Sequence a2 = Sequence::arith(kNat, Rat(2), Rat(1));
    IterPair pa = iterated_limit(k, a1, a2, fast_cfg(800, 600, 1e-4));
    REQUIRE(pa.box.status == IterResult::Status::Value);
    REQUIRE(pa.diamond.status == IterResult::Status::Value);
    CHECK(std::abs(pa.box.value) < 5e-3);
    CHECK(std::abs(pa.diamond.value) < 5e-3);

    // and an honest "undetermined" when the depth cannot reach stability
    IterPair tight = iterated_limit(k, a1, a2, fast_cfg(1500, 400));
    CHECK(tight.box.status == IterResult::Status::Undetermined);
}

TEST_CASE("iterated limits are order-symmetric under swap") {
    Weight wn = Weight::parse("2 - 1/n", kNat);
    PairKernel k = [&](const Point& s, const Point& t) { return omega_fn(wn, s, t); };
    PairKernel kt = [&](const Point& t, const Point& s) { return omega_fn(wn, s, t); };
    Sequence a = Sequence::arith(kNat, Rat(1), Rat(2));
    Sequence b = Sequence::arith(kNat, Rat(5), Rat(3));
    IterConfig cfg = fast_cfg(400, 400);
    IterPair p = iterated_limit(k, a, b, cfg);
    IterPair q = iterated_limit(kt, b, a, cfg);
    CHECK(p.box.status == q.diamond.status);
    CHECK(p.diamond.status == q.box.status);
    if (p.box.status == IterResult::Status::Value) CHECK(p.box.value == q.diamond.value);
    if (p.diamond.status == IterResult::Status::Value) CHECK(p.diamond.value == q.box.value);
}

TEST_CASE("zero-cluster test and witnesses") {
    IterConfig cfg = fast_cfg(1500, 1200);

    ZeroClusterResult rn = zero_cluster_test(Weight::parse("n", kNat), cfg);
    CHECK(rn.clusters_zero == Tri::True);
    CHECK_FALSE(rn.witness.has_value());

    ZeroClusterResult r1 = zero_cluster_test(Weight::parse("1", kNat), cfg);
    CHECK(r1.clusters_zero == Tri::False);
    REQUIRE(r1.witness.has_value());
    CHECK(r1.witness->m_bound == 1);
    CHECK(r1.witness->box.exact);
    CHECK(r1.witness->box.exact_value == 1);
    CHECK(r1.witness->diamond.exact_value == 1);

    auto z = Semigroup::int_min();
    Weight wz = Weight::parse("piecewise{ (-inf,1): 1; [1,inf): n }", z);
    ZeroClusterResult rz = zero_cluster_test(wz, cfg);
    CHECK(rz.clusters_zero == Tri::False);
    REQUIRE(rz.witness.has_value());
    // witness sequences live where omega is bounded: n <= 1
    for (const Point& p : rz.witness->s_seq.prefix(20)) CHECK(p.v <= 1);
    REQUIRE(rz.witness->box.status == IterResult::Status::Value);
    CHECK(rz.witness->box.value >= 1.0 - 1e-6);   // = 1/M^2 with M = 1
    CHECK(rz.witness->diamond.value >= 1.0 - 1e-6);
}

TEST_CASE("zero-cluster matches the filter limit") {
    IterConfig cfg = fast_cfg(600, 600);
    for (const char* text : {"n", "1", "n^2", "2 - 1/n"}) {
        Weight w = Weight::parse(text, kNat);
        ZeroClusterResult r = zero_cluster_test(w, cfg);
        Tri expected = analyze_limits(w).filter_lim_infinite ? Tri::True : Tri::False;
        CHECK(r.clusters_zero == expected);
    }
}

TEST_CASE("arens pairing separates box and diamond on the unweighted algebra") {
    Weight w1 = Weight::parse("1", kNat);
    Sequence evens = Sequence::arith(kNat, Rat(2), Rat(2));
    Sequence odds = Sequence::arith(kNat, Rat(1), Rat(2));
    Functional lam = Functional::char_times_omega(SetSpec::parity(true));
    IterConfig cfg = fast_cfg(4000, 1200, 1e-9);
    IterPair p = arens_pairing(evens, odds, lam, w1, cfg);
    REQUIRE(p.box.status == IterResult::Status::Value);
    REQUIRE(p.diamond.status == IterResult::Status::Value);
    CHECK(p.box.exact);
    CHECK(p.box.exact_value == 1);
    CHECK(p.diamond.exact);
    CHECK(p.diamond.exact_value == 0);
}

TEST_CASE("arens pairing vanishes in both orders when the weight blows up") {
    Weight wn = Weight::parse("n", kNat);
    Functional lam = Functional::char_times_omega(
        SetSpec::make_interval({Bound::finite(Rat(1), true), Bound::pos_inf()}));
    Sequence g1 = Sequence::geom(kNat, Rat(1), Rat(2));
    Sequence g2 = Sequence::geom(kNat, Rat(3), Rat(2));
    IterPair p = arens_pairing(g1, g2, lam, wn, fast_cfg(1100, 1100));
    REQUIRE(p.box.status == IterResult::Status::Value);
    REQUIRE(p.diamond.status == IterResult::Status::Value);
    CHECK(std::abs(p.box.value) <= 1e-6);
    CHECK(std::abs(p.diamond.value) <= 1e-6);
}

TEST_CASE("Example Q+: the concrete centre element") {
    auto q = Semigroup::posrat_min();
    Weight wq = Weight::parse("piecewise{ (0,1]: 1; (1,inf): n }", q);
    Sequence outer = Sequence::geom(q, Rat(2), Rat(2)); // integer points tending to sup
    Sequence inner = Sequence::rationals_in(q, Rat(0), Rat(1));
    PairKernel k = [&](const Point& s, const Point& t) { return omega_fn(wq, s, t); };
    IterPair p = iterated_limit(k, outer, inner, fast_cfg(1100, 1100));
    REQUIRE(p.box.status == IterResult::Status::Value);
    REQUIRE(p.diamond.status == IterResult::Status::Value);
    CHECK(std::abs(p.box.value) <= 1e-6);
    CHECK(std::abs(p.diamond.value) <= 1e-6);
}

TEST_CASE("Craw-Young extraction") {
    auto plus = Semigroup::nat_plus();
    Weight p1 = Weight::parse("1", plus);
    Sequence nat_seq = Sequence::arith(plus, Rat(1), Rat(1));
    CrawYoungWitness wit = craw_young_witness(p1, nat_seq, nat_seq, Rat(1, 2), 8, 2048);
    REQUIRE(wit.s_points.size() == 8);
    REQUIRE(wit.t_points.size() == 8);
    for (int n = 0; n < 8; ++n)
        for (int m = 0; m < 8; ++m) {
            if (n <= m) CHECK(wit.pairing[n][m] > Rat(1, 2));
            else CHECK(wit.pairing[n][m] == 0);
        }

    // omega(n) = 1+n: lim_m Omega(s, t_m) = 1/(1+s) <= 1/2 kills the hypothesis
    Weight growing = Weight::parse("1 + n", plus);
    CHECK_THROWS_AS(craw_young_witness(growing, nat_seq, nat_seq, Rat(1, 2), 8, 2048),
                    PreconditionError);

    // not weakly cancellative
    Weight w1 = Weight::parse("1", kNat);
    Sequence nats = Sequence::arith(kNat, Rat(1), Rat(1));
    CHECK_THROWS_AS(craw_young_witness(w1, nats, nats, Rat(1, 2), 8, 2048), PreconditionError);
}

TEST_CASE("classifier verdicts") {
    CHECK(classify(Weight::parse("n", kNat)).verdict == Verdict::ArensRegular);
    CHECK(classify(Weight::parse("n", kNat)).predual_note == PredualNote::EOmegaPredual);
    CHECK(classify(Weight::parse("1", kNat)).verdict == Verdict::StronglyArensIrregular);

    auto z = Semigroup::int_min();
    Weight wz = Weight::parse("piecewise{ (-inf,1): 1; [1,inf): n }", z);
    CHECK(classify(wz).verdict == Verdict::NeitherRegularNorSAI);

    auto q = Semigroup::posrat_min();
    Weight wq = Weight::parse("piecewise{ (0,1]: 1; (1,inf): n }", q);
    Classification cq = classify(wq);
    CHECK(cq.verdict == Verdict::NeitherRegularNorSAI);
    CHECK(cq.predual_note == PredualNote::NoPredualHypothesisMet);

    // bounded weight on int-min: scattered closure, so SAI
    Weight flat = Weight::parse("1", z);
    CHECK(classify(flat).verdict == Verdict::StronglyArensIrregular);
    // bounded weight on posrat-min: closure not scattered
    Weight flatq = Weight::parse("7/2", q);
    CHECK(classify(flatq).verdict == Verdict::NeitherRegularNorSAI);

    // unbounded only toward -inf: no verdict either way
    Weight down = Weight::parse("piecewise{ (-inf,-1]: |n|; (-1,inf): 1 }", z);
    CHECK(classify(down).verdict == Verdict::NotRegularSAIUnknown);

    CHECK_THROWS_AS(classify(Weight::parse("1", Semigroup::nat_plus())), PreconditionError);
    CHECK_THROWS_AS(classify(Weight::parse("exp(n) - exp(n) + 2", kNat)), UndecidableError);
}

TEST_CASE("two-point DTC demonstration") {
    Weight w1 = Weight::parse("1", kNat);
    Sequence evens = Sequence::arith(kNat, Rat(2), Rat(2));
    Sequence odds = Sequence::arith(kNat, Rat(1), Rat(2));
    Element f = Element::from_terms(kNat, {{Point::integer(2), Rat(1)}, {Point::integer(5), Rat(1)}});
    IterConfig cfg = fast_cfg(1500, 1500);
    DtcReport rep = dtc_demo(w1, evens, odds, f, cfg);
    CHECK_FALSE(rep.undetermined);
    CHECK(rep.phi_a.exact);
    CHECK(rep.phi_a.exact_value == 1);
    CHECK(rep.ideal_exact);
    CHECK(rep.ideal_rows.size() > 0);
    CHECK(rep.trivial_only);

    // bounded non-constant weight: the limit is 1/2
    Weight wb = Weight::parse("2 - 1/n", kNat);
    DtcReport rb = dtc_demo(wb, evens, odds, f, fast_cfg(3000, 2500));
    CHECK_FALSE(rb.undetermined);
    CHECK(std::abs(rb.phi_a.value - 0.5) < 1e-3);
    CHECK(rb.trivial_only);

    CHECK_THROWS_AS(dtc_demo(Weight::parse("n", kNat), evens, odds, f, cfg), PreconditionError);
}

TEST_CASE("regular verdict implies coinciding pairings on random geometric pairs") {
    Weight wn = Weight::parse("n", kNat);
    REQUIRE(classify(wn).verdict == Verdict::ArensRegular);
    std::vector<Functional> funcs = {
        Functional::char_times_omega(
            SetSpec::make_interval({Bound::finite(Rat(1), true), Bound::pos_inf()})),
        Functional::char_times_omega(SetSpec::parity(true)),
        Functional::phi_k(Point::integer(3)),
        Functional::phi_omega(),
        Functional::indicator({Point::integer(5)}),
    };
    std::mt19937_64 rng(71);
    IterConfig cfg = fast_cfg(300, 300);
    for (int i = 0; i < 20; ++i) {
        Rat a0(1 + static_cast<long>(rng() % 9));
        Rat b0(1 + static_cast<long>(rng() % 9));
        Rat r1(2 + static_cast<long>(rng() % 2));
        Rat r2(2 + static_cast<long>(rng() % 2));
        Sequence s = Sequence::geom(kNat, a0, r1);
        Sequence t = Sequence::geom(kNat, b0, r2);
        const Functional& lam = funcs[i % funcs.size()];
        IterPair p = arens_pairing(s, t, lam, wn, cfg);
        REQUIRE(p.box.status == IterResult::Status::Value);
        REQUIRE(p.diamond.status == IterResult::Status::Value);
        CHECK(std::abs(p.box.value - p.diamond.value) <= 1e-6);
    }
}

TEST_CASE("irregular verdict: the zero-cluster witness separates a pairing") {
    Weight w1 = Weight::parse("1", kNat);
    REQUIRE(classify(w1).verdict != Verdict::ArensRegular);
    ZeroClusterResult zc = zero_cluster_test(w1, fast_cfg(1400, 1400));
    REQUIRE(zc.witness.has_value());
    // chi of the outer witness range: box sees 1, diamond sees 0; the inner
    // depth must clear the crossover at the largest outer index
    Functional lam = Functional::char_times_omega(SetSpec::sequence_range(zc.witness->s_seq));
    IterPair p = arens_pairing(zc.witness->s_seq, zc.witness->t_seq, lam, w1, fast_cfg(1400, 420));
    REQUIRE(p.box.status == IterResult::Status::Value);
    REQUIRE(p.diamond.status == IterResult::Status::Value);
    double floor = 1.0 / Rat(zc.witness->m_bound * zc.witness->m_bound).get_d();
    CHECK(std::abs(p.box.value - p.diamond.value) >= floor - 1e-6);
}

TEST_CASE("divergence is reported for blowing-up kernels") {
    PairKernel k = [](const Point& s, const Point&) { return Value(Rat(s.v * 10000000)); };
    Sequence a = Sequence::arith(kNat, Rat(1), Rat(0) + 1);
    Sequence b = Sequence::arith(kNat, Rat(1), Rat(1));
    IterConfig cfg = fast_cfg(1100, 1100);
    IterPair p = iterated_limit(k, a, b, cfg);
    // constant in the inner index, divergent in the outer one
    CHECK(p.diamond.status == IterResult::Status::Undetermined);
}

TEST_CASE("the rescaled pairing identity at finite level") {
    // <delta~_s * delta~_t, omega chi> = Omega(s,t) chi(st), the finite-rank
    // shadow of the box/diamond product identities
    std::mt19937_64 rng(97);
    Weight wn = Weight::parse("n", kNat);
    SetSpec evens = SetSpec::parity(true);
    Functional omega_chi = Functional::char_times_omega(evens);
    for (int i = 0; i < 100; ++i) {
        Point s = Point::integer(1 + static_cast<long>(rng() % 200));
        Point t = Point::integer(1 + static_cast<long>(rng() % 200));
        Value lhs = pair_with(convolve(delta_tilde(kNat, s, wn), delta_tilde(kNat, t, wn)),
                              omega_chi, wn);
        Point st = op(kNat, s, t);
        Value rhs = omega_fn(wn, s, t) * Value(Rat(evens.contains(kNat, st) ? 1 : 0));
        CHECK(lhs.exact() == rhs.exact());
    }
}

TEST_CASE("interval-valued kernels flow through the limit engine") {
    auto z = Semigroup::int_min();
    Weight we = Weight::parse("exp(|n|)", z);
    REQUIRE(classify(we).verdict == Verdict::ArensRegular);
    PairKernel k = [&](const Point& s, const Point& t) { return omega_fn(we, s, t); };
    Sequence g1 = Sequence::geom(z, Rat(1), Rat(2));
    Sequence g2 = Sequence::arith(z, Rat(0), Rat(-1)); // descending toward -inf
    IterPair p = iterated_limit(k, g1, g2, fast_cfg(300, 300));
    REQUIRE(p.box.status == IterResult::Status::Value);
    REQUIRE(p.diamond.status == IterResult::Status::Value);
    CHECK(std::abs(p.box.value) <= 1e-6);
    CHECK(std::abs(p.diamond.value) <= 1e-6);
}

TEST_CASE("Omega stays within (0,1] for the shipped semilattice weights") {
    auto z = Semigroup::int_min();
    auto q = Semigroup::posrat_min();
    Weight wz = Weight::parse("piecewise{ (-inf,1): 1; [1,inf): n }", z);
    Weight wq = Weight::parse("piecewise{ (0,1]: 1; (1,inf): n }", q);
    std::mt19937_64 rng(83);
    for (int i = 0; i < 150; ++i) {
        Point s = Point::integer(static_cast<long>(rng() % 200) - 100);
        Point t = Point::integer(static_cast<long>(rng() % 200) - 100);
        Value om = omega_fn(wz, s, t);
        CHECK(om.exact() > 0);
        CHECK(om.exact() <= 1);
        Point sq{Rat(1 + static_cast<long>(rng() % 400), 1 + static_cast<long>(rng() % 40))};
        Point tq{Rat(1 + static_cast<long>(rng() % 400), 1 + static_cast<long>(rng() % 40))};
        Value omq = omega_fn(wq, sq, tq);
        CHECK(omq.exact() > 0);
        CHECK(omq.exact() <= 1);
    }
}
