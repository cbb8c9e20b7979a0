#include "slalg/spectra.hpp"

#include <algorithm>

#include "weight_internal.hpp"

namespace slalg {

Functional phi_k_functional(const Point& k) { return Functional::phi_k(k); }

Rat phi_k_apply(const Point& k, const Element& a) {
    Rat acc(0);
    for (const Term& t : a.terms())
        if (t.point >= k) acc += t.coeff;
    return acc;
}

std::vector<std::pair<Point, Rat>> gelfand(const Element& a, int K) {
    if (a.semigroup().kind != SemigroupKind::NatMin)
        throw PreconditionError("the Gel'fand transform over thresholds 1..K is nat-min only");
    if (K < 1) throw DomainError("K must be positive");
    std::vector<std::pair<Point, Rat>> out;
    out.reserve(static_cast<std::size_t>(K));
    // phi_k(a) = sum over points >= k: running suffix sums over the support
    for (long k = 1; k <= K; ++k) out.emplace_back(Point::integer(k), Rat(0));
    for (const Term& t : a.terms()) {
        // contributes to every threshold k <= point
        long top = std::min<long>(K, static_cast<long>(t.point.v.get_num().get_si()));
        for (long k = 1; k <= top; ++k) out[static_cast<std::size_t>(k - 1)].second += t.coeff;
    }
    return out;
}

std::vector<Semicharacter> enumerate_characters(const Truncation& tr, const Weight& w) {
    (void)w; // Phi_omega = Phi_S: the weight plays no role, kept for the interface
    const std::size_t n = tr.size();
    if (n > 20) throw DomainError("brute-force character enumeration is bounded at 20 points");
    if (tr.semigroup.kind == SemigroupKind::PosRatMin)
        throw PreconditionError("character enumeration covers nat-min/int-min truncations");

    std::vector<Semicharacter> out;
    const std::uint32_t limit = static_cast<std::uint32_t>(1u << n);
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        // multiplicativity: theta(min(s_i,s_j)) = theta(s_i) theta(s_j) for all pairs
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i; j < n && ok; ++j) {
                bool bi = (mask >> i) & 1u, bj = (mask >> j) & 1u;
                bool bmin = (mask >> i) & 1u; // points sorted: min(s_i, s_j) = s_i for i <= j
                if (bmin != (bi && bj)) ok = false;
            }
        if (!ok) continue;
        std::size_t least = 0;
        while (!((mask >> least) & 1u)) ++least;
        // upward-closedness re-check (the enumeration is the oracle)
        for (std::size_t i = least; i < n; ++i)
            if (!((mask >> i) & 1u)) { ok = false; break; }
        if (!ok)
            throw Error("non-threshold multiplicative assignment found; enumeration is wrong");
        out.push_back(Semicharacter{tr.points[least], false});
    }
    if (out.size() != n)
        throw Error("character count " + std::to_string(out.size()) + " != truncation size " +
                    std::to_string(n));
    std::sort(out.begin(), out.end(),
              [](const Semicharacter& a, const Semicharacter& b) { return a.threshold < b.threshold; });
    return out;
}

namespace {

// inf over the integer lattice tail {s in S : s > from} of g(s) * omega(s)
// (g absent = constant 1); exact, certified by the rational-function root
// bound or by range monotonicity. Throws UndecidableError when neither
// certificate applies within the scan budget.
Rat tail_product_inf(const Weight& w, const Weight* g, const Point& from) {
    const Semigroup& sg = w.semigroup();
    if (sg.kind == SemigroupKind::PosRatMin)
        throw PreconditionError("the density computation runs on nat-min");

    auto product_at = [&](const Rat& x) -> Rat {
        Rat v = w.eval_exact_or_throw(Point{x});
        if (g) v *= g->eval_exact_or_throw(Point{x});
        return v;
    };

    // find the point beyond which both weights sit in their final pieces
    Rat boundary = from.v;
    auto track = [&](const Weight& wt) {
        const Piece& last = wt.pieces().back();
        if (last.interval.lo.kind == Bound::Kind::Finite && last.interval.lo.value > boundary)
            boundary = last.interval.lo.value;
    };
    track(w);
    if (g) track(*g);

    // synthesized tail expression h = w_last * g_last
    ExprPtr h = w.pieces().back().expr;
    if (g) h = make_binary(ExprKind::Mul, h, g->pieces().back().expr);

    Rat scan_to = boundary + 8;
    if (auto rf = detail::to_ratfn(h, detail::Dir::PlusInf)) {
        // beyond the derivative's root bound the product is monotone
        Poly dnum = rf->num.derivative() * rf->den - rf->num * rf->den.derivative();
        Rat B = dnum.root_bound();
        if (B > scan_to) scan_to = B;
        detail::TailInfo ti = detail::tail_of_ratfn(*rf);
        Rat best(0);
        bool any = false;
        Rat start = from.v + 1;
        if (!is_integer(start)) start = Rat(rat_ceil(start));
        for (Rat x = start; x <= scan_to + 1; x += 1) {
            Rat v = product_at(x);
            if (!any || v < best) best = v;
            any = true;
        }
        // beyond scan_to the function is monotone; increasing means the
        // scanned minimum is global, decreasing means the limit is
        bool increasing = true;
        {
            Rat a = product_at(scan_to + 1), b = product_at(scan_to + 2);
            increasing = b >= a;
        }
        if (!any) throw Error("empty scan in tail_product_inf");
        if (increasing) return best;
        if (ti.limit.kind == ExtendedReal::Kind::Finite && ti.limit.value.is_exact()) {
            Rat L = ti.limit.value.exact();
            return std::min(best, L);
        }
        throw UndecidableError("tail of the product is decreasing with no exact limit");
    }

    // non-rational tail: scan while trying a certified floor
    Rat best(0);
    bool any = false;
    Rat start = from.v + 1;
    if (!is_integer(start)) start = Rat(rat_ceil(start));
    Rat x = start;
    for (long i = 0; i < 4096; ++i, x += 1) {
        Rat v = product_at(x);
        if (!any || v < best) best = v;
        any = true;
        PieceInterval tail_iv{Bound::finite(x, false), Bound::pos_inf()};
        detail::ERange rng = detail::range_on(*h, tail_iv);
        if (detail::range_lo_ge(rng, best) == Tri::True) return best;
    }
    throw UndecidableError("could not certify the infimum of |lambda|/omega beyond the window");
}

} // namespace

DensityApprox predual_density_approx(const Functional& l, const Weight& w, int n) {
    const Semigroup& sg = w.semigroup();
    if (sg.kind != SemigroupKind::NatMin)
        throw PreconditionError("the density computation runs on nat-min");
    if (n < 0) throw DomainError("n must be nonnegative");

    LimitReport rep = analyze_limits(w);
    if (!rep.filter_lim_infinite)
        throw PreconditionError("predual density needs Lim omega = infinity");
    MembershipResult mem = e_omega_membership(l, w);
    if (mem.verdict != Membership::Member)
        throw PreconditionError("lambda is not a certified member of E_omega");

    DensityApprox out;
    for (long i = 1; i <= n; ++i) {
        Point p = Point::integer(i);
        Value v = l.eval(p, w);
        if (!v.is_exact())
            throw ModeError("density combination needs exact lambda values at 1..n");
        if (v.exact() != 0) out.combination.emplace_back(p, v.exact());
    }

    // residual = sup_{s > n} |lambda(s)| / omega(s)
    const Point from = Point::integer(std::max(n, 0));
    switch (l.form()) {
        case Functional::Form::Indicator: {
            Rat best(0);
            for (const Point& p : l.set().points)
                if (p.v > Rat(n)) {
                    Rat r = Rat(1) / w.eval_exact_or_throw(p);
                    if (r > best) best = r;
                }
            out.residual = Value(best);
            return out;
        }
        case Functional::Form::Table: {
            Rat best(0);
            for (const auto& [key, val] : l.entries())
                if (key > Rat(n)) {
                    Rat r = rat_abs(val) / w.eval_exact_or_throw(Point{key});
                    if (r > best) best = r;
                }
            if (l.tail() == Functional::Tail::Const && l.tail_const() != 0) {
                Rat start = l.entries().empty() ? Rat(n) : std::max(Rat(n), l.entries().rbegin()->first);
                Rat inf_w = tail_product_inf(w, nullptr, Point{start});
                Rat r = rat_abs(l.tail_const()) / inf_w;
                if (r > best) best = r;
            }
            out.residual = Value(best);
            return out;
        }
        case Functional::Form::PhiK: {
            Rat start = std::max(Rat(n), Rat(l.threshold().v - 1));
            Rat inf_w = tail_product_inf(w, nullptr, Point{start});
            out.residual = Value(Rat(1) / inf_w);
            return out;
        }
        case Functional::Form::PhiOmega: {
            const Weight* g = l.phi_weight() ? &*l.phi_weight() : &w;
            Rat inf_gw = tail_product_inf(w, g, from);
            out.residual = Value(Rat(1) / inf_gw);
            return out;
        }
        case Functional::Form::CharTimesOmega:
            // members are finite sets only
            {
                Rat best(0);
                for (const Point& p : l.set().points)
                    if (p.v > Rat(n)) best = std::max(best, Rat(1)); // ratio omega/omega = 1
                out.residual = Value(best);
                return out;
            }
    }
    throw Error("unreachable functional form");
}

} // namespace slalg
