#include "slalg/functional.hpp"

#include <algorithm>
#include <random>

namespace slalg {

// ---------------------------------------------------------------------------
// SetSpec
// ---------------------------------------------------------------------------

SetSpec SetSpec::make_interval(PieceInterval iv) {
    SetSpec s;
    s.kind = Kind::Interval;
    s.interval = std::move(iv);
    return s;
}

SetSpec SetSpec::parity(bool even) {
    SetSpec s;
    s.kind = Kind::Parity;
    s.even = even;
    return s;
}

SetSpec SetSpec::explicit_set(std::vector<Point> pts) {
    SetSpec s;
    s.kind = Kind::Explicit;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    s.points = std::move(pts);
    return s;
}

SetSpec SetSpec::sequence_range(Sequence sq) {
    SetSpec s;
    s.kind = Kind::SequenceRange;
    s.seq = std::move(sq);
    return s;
}

bool SetSpec::contains(const Semigroup& sg, const Point& s) const {
    if (!sg.contains(s)) return false;
    switch (kind) {
        case Kind::Interval: return interval.contains(s.v);
        case Kind::Parity: {
            if (!is_integer(s.v)) return false;
            bool is_even = mpz_even_p(s.v.get_num().get_mpz_t());
            return even == is_even;
        }
        case Kind::Explicit: return std::binary_search(points.begin(), points.end(), s);
        case Kind::SequenceRange: return seq->contains(s);
    }
    return false;
}

Tri SetSpec::finite(const Semigroup& sg) const {
    switch (kind) {
        case Kind::Explicit: return Tri::True;
        case Kind::Parity: return Tri::False;
        case Kind::SequenceRange:
            if (seq->kind() == Sequence::Kind::Explicit && !seq->tail_step()) return Tri::True;
            return Tri::False;
        case Kind::Interval: {
            bool bounded = interval.lo.kind == Bound::Kind::Finite &&
                           interval.hi.kind == Bound::Kind::Finite;
            if (sg.kind == SemigroupKind::PosRatMin) {
                if (interval.hi.kind == Bound::Kind::PosInf) return Tri::False;
                Rat lo = interval.lo.kind == Bound::Kind::Finite ? interval.lo.value : Rat(0);
                if (lo < 0) lo = 0;
                if (interval.hi.value > lo) return Tri::False; // dense
                return Tri::True;
            }
            if (!bounded && interval.lo.kind == Bound::Kind::NegInf &&
                sg.kind != SemigroupKind::IntMin)
                bounded = interval.hi.kind == Bound::Kind::Finite; // floor at the domain minimum
            return bounded ? Tri::True : Tri::False;
        }
    }
    return Tri::Unknown;
}

std::vector<Point> SetSpec::enumerate_from(const Semigroup& sg, const Point& from,
                                           std::size_t count, long scan_cap) const {
    std::vector<Point> out;
    if (kind == Kind::Explicit) {
        for (const Point& p : points)
            if (p >= from && out.size() < count) out.push_back(p);
        if (out.size() < count)
            throw PreconditionError("explicit set exhausted: needed " + std::to_string(count) +
                                    " members >= " + from.to_string());
        return out;
    }
    if (kind == Kind::SequenceRange) {
        for (long i = 0; i < scan_cap && out.size() < count; ++i) {
            Point p = seq->at(static_cast<std::size_t>(i));
            if (p >= from) out.push_back(p);
        }
        std::sort(out.begin(), out.end());
        if (out.size() < count)
            throw PreconditionError("sequence range produced too few members >= " + from.to_string());
        return out;
    }
    if (sg.kind == SemigroupKind::PosRatMin && kind == Kind::Interval) {
        // ladder toward the upper end of the interval piece above `from`
        Rat a = interval.lo.kind == Bound::Kind::Finite ? std::max(interval.lo.value, from.v) : from.v;
        if (interval.hi.kind == Bound::Kind::PosInf) {
            for (std::size_t k = 0; k < count; ++k) out.push_back(Point{Rat(a + Rat(static_cast<long>(k) + 1))});
            return out;
        }
        Rat b = interval.hi.value;
        if (!(a < b))
            throw PreconditionError("interval has no room above " + from.to_string());
        for (std::size_t k = 1; out.size() < count; ++k)
            out.push_back(Point{Rat(a + (b - a) * Rat(static_cast<long>(k), static_cast<long>(k) + 1))});
        return out;
    }
    // integer lattice scan
    Rat x = from.v;
    if (!is_integer(x)) x = Rat(rat_ceil(x));
    for (long i = 0; i < scan_cap && out.size() < count; ++i, x += 1)
        if (contains(sg, Point{x})) out.push_back(Point{x});
    if (out.size() < count)
        throw PreconditionError("window exhausted enumerating the set from " + from.to_string());
    return out;
}

std::string SetSpec::describe() const {
    switch (kind) {
        case Kind::Interval: return "interval" + interval.to_string();
        case Kind::Parity: return even ? "evens" : "odds";
        case Kind::Explicit: return "explicit[" + std::to_string(points.size()) + "]";
        case Kind::SequenceRange: return "range(" + seq->describe() + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Functional
// ---------------------------------------------------------------------------

Functional Functional::char_times_omega(SetSpec set) {
    Functional f;
    f.form_ = Form::CharTimesOmega;
    f.set_ = std::move(set);
    return f;
}

Functional Functional::indicator(std::vector<Point> pts) {
    Functional f;
    f.form_ = Form::Indicator;
    f.set_ = SetSpec::explicit_set(std::move(pts));
    return f;
}

Functional Functional::phi_k(Point k) {
    Functional f;
    f.form_ = Form::PhiK;
    f.k_ = std::move(k);
    return f;
}

Functional Functional::phi_omega(std::optional<Weight> override_expr) {
    Functional f;
    f.form_ = Form::PhiOmega;
    f.phi_weight_ = std::move(override_expr);
    return f;
}

Functional Functional::table(std::map<Rat, Rat> entries, Tail tail, Rat tail_const) {
    Functional f;
    f.form_ = Form::Table;
    f.entries_ = std::move(entries);
    f.tail_ = tail;
    f.tail_const_ = std::move(tail_const);
    return f;
}

Value Functional::eval(const Point& s, const Weight& w) const {
    const Semigroup& sg = w.semigroup();
    switch (form_) {
        case Form::CharTimesOmega:
            return set_.contains(sg, s) ? w.eval(s) : Value(Rat(0));
        case Form::Indicator:
            return Value(Rat(set_.contains(sg, s) ? 1 : 0));
        case Form::PhiK:
            return Value(Rat(s >= k_ ? 1 : 0));
        case Form::PhiOmega: {
            const Weight& g = phi_weight_ ? *phi_weight_ : w;
            return Value(Rat(1)) / g.eval(s);
        }
        case Form::Table: {
            if (window_from_ && s < *window_from_)
                throw DomainError("functional table is windowed; " + s.to_string() +
                                  " lies below its bound " + window_from_->to_string());
            auto it = entries_.find(s.v);
            if (it != entries_.end()) return Value(it->second);
            if (!entries_.empty() && s.v > entries_.rbegin()->first)
                return tail_ == Tail::Zero ? Value(Rat(0)) : Value(tail_const_);
            if (entries_.empty()) return tail_ == Tail::Zero ? Value(Rat(0)) : Value(tail_const_);
            return Value(Rat(0));
        }
    }
    throw Error("unreachable functional form");
}

std::string Functional::describe() const {
    switch (form_) {
        case Form::CharTimesOmega: return "omega*chi(" + set_.describe() + ")";
        case Form::Indicator: return "indicator(" + set_.describe() + ")";
        case Form::PhiK: return "phi_" + k_.to_string();
        case Form::PhiOmega: return phi_weight_ ? "phi[1/(" + phi_weight_->source() + ")]" : "phi_omega";
        case Form::Table:
            return "table[" + std::to_string(entries_.size()) + (tail_ == Tail::Zero ? ", tail 0]" : ", tail c]");
    }
    return "?";
}

Value pair_with(const Element& a, const Functional& l, const Weight& w) {
    Value acc{Rat(0)};
    for (const Term& t : a.terms()) acc = acc + Value(t.coeff) * l.eval(t.point, w);
    return acc;
}

// ---------------------------------------------------------------------------
// Module action delta_s . lambda
// ---------------------------------------------------------------------------

namespace {

Rat exact_eval(const Functional& l, const Point& s, const Weight& w) {
    Value v = l.eval(s, w);
    if (!v.is_exact())
        throw ModeError("module action needs exact functional values; " + l.describe() +
                        " is not rational at " + s.to_string());
    return v.exact();
}

// all domain points strictly below s (finite only for Nat-based semigroups)
std::vector<Point> lattice_below(const Semigroup& sg, const Point& s) {
    std::vector<Point> out;
    if (sg.kind == SemigroupKind::NatMin || sg.kind == SemigroupKind::NatPlus) {
        for (Rat x(1); x < s.v; x += 1) out.push_back(Point{x});
        return out;
    }
    throw DomainError("the part of S below " + s.to_string() + " is infinite");
}

} // namespace

Functional module_action(const Point& s, const Functional& l, const Weight& w,
                         std::optional<Point> window_lo) {
    const Semigroup& sg = w.semigroup();
    if (!sg.is_semilattice())
        throw PreconditionError("module action is implemented for the min semilattices");
    sg.require(s);

    const bool finite_below = sg.kind == SemigroupKind::NatMin;

    switch (l.form()) {
        case Functional::Form::PhiK: {
            if (s >= l.threshold()) return l;
            return Functional::table({}, Functional::Tail::Zero);
        }
        case Functional::Form::Indicator: {
            // (delta_s . lambda)(r) = [min(r,s) in P]
            std::map<Rat, Rat> entries;
            for (const Point& p : l.set().points)
                if (p < s) entries[p.v] = 1;
            bool s_in = l.set().contains(sg, s);
            if (s_in) {
                entries[s.v] = 1;
                return Functional::table(std::move(entries), Functional::Tail::Const, Rat(1));
            }
            return Functional::table(std::move(entries), Functional::Tail::Zero);
        }
        default:
            break;
    }

    // remaining forms need the value of lambda at every point below s
    auto build_table = [&](const std::vector<Point>& below,
                           std::optional<Point> win) -> Functional {
        std::map<Rat, Rat> entries;
        for (const Point& r : below) {
            Rat v = exact_eval(l, r, w);
            if (v != 0) entries[r.v] = v;
        }
        Rat at_s = exact_eval(l, s, w);
        Functional out;
        if (at_s != 0) {
            entries[s.v] = at_s;
            out = Functional::table(std::move(entries), Functional::Tail::Const, at_s);
        } else {
            out = Functional::table(std::move(entries), Functional::Tail::Zero);
        }
        if (win) out.window_from_ = win;
        return out;
    };

    if (finite_below) return build_table(lattice_below(sg, s), std::nullopt);

    // not closed: generic table over the requested window
    if (!window_lo)
        throw PreconditionError("form " + l.describe() + " is not closed under the action on " +
                                sg.name() + "; pass a window");
    std::vector<Point> below;
    if (sg.kind == SemigroupKind::IntMin) {
        for (Rat x = window_lo->v; x < s.v; x += 1) below.push_back(Point{x});
    } else {
        // posrat-min: dyadic refinement of [window_lo, s)
        Rat a = window_lo->v, width = s.v - window_lo->v;
        for (int j = 0; j < 10; ++j)
            for (long i = 0; i < (1 << j); ++i) {
                Rat x = a + width * Rat(2 * i + 1, 2L << j);
                if (x > 0 && x < s.v) below.push_back(Point{x});
            }
        std::sort(below.begin(), below.end());
        below.erase(std::unique(below.begin(), below.end()), below.end());
    }
    return build_table(below, window_lo);
}

// ---------------------------------------------------------------------------
// E_omega membership
// ---------------------------------------------------------------------------

MembershipResult e_omega_membership(const Functional& l, const Weight& w) {
    const Semigroup& sg = w.semigroup();
    constexpr long kWindow = 100000;
    auto report = [&](Membership m) { return MembershipResult{m, 0}; };
    auto undecided = [&]() { return MembershipResult{Membership::Undetermined, kWindow}; };

    LimitReport rep;
    bool have_rep = true;
    try {
        rep = analyze_limits(w);
    } catch (const UndecidableError&) {
        have_rep = false;
    }

    switch (l.form()) {
        case Functional::Form::Indicator:
            return report(Membership::Member);
        case Functional::Form::Table: {
            if (l.tail() == Functional::Tail::Zero || l.tail_const() == 0)
                return report(Membership::Member);
            if (!have_rep) return undecided();
            return report(rep.filter_lim_infinite ? Membership::Member : Membership::NotMember);
        }
        case Functional::Form::CharTimesOmega: {
            Tri fin = l.set().finite(sg);
            if (fin == Tri::True) return report(Membership::Member);
            if (fin == Tri::False) return report(Membership::NotMember);
            return undecided();
        }
        case Functional::Form::PhiK: {
            if (!have_rep) return undecided();
            switch (sg.kind) {
                case SemigroupKind::NatMin:
                case SemigroupKind::NatPlus:
                    return report(rep.filter_lim_infinite ? Membership::Member
                                                          : Membership::NotMember);
                case SemigroupKind::IntMin:
                    return report(rep.order_lim_sup_infinite ? Membership::Member
                                                             : Membership::NotMember);
                case SemigroupKind::PosRatMin:
                    return report(Membership::NotMember);
            }
            return undecided();
        }
        case Functional::Form::PhiOmega: {
            if (!have_rep) return undecided();
            if (!l.phi_weight()) {
                // ratio 1/omega^2
                if (sg.kind == SemigroupKind::PosRatMin) return report(Membership::NotMember);
                return report(rep.filter_lim_infinite ? Membership::Member : Membership::NotMember);
            }
            LimitReport grep;
            try {
                grep = analyze_limits(*l.phi_weight());
            } catch (const UndecidableError&) {
                return undecided();
            }
            if (sg.kind == SemigroupKind::PosRatMin) return report(Membership::NotMember);
            if (rep.filter_lim_infinite || grep.filter_lim_infinite)
                return report(Membership::Member);
            return report(Membership::NotMember);
        }
    }
    return undecided();
}

// ---------------------------------------------------------------------------
// Non-submodule witness
// ---------------------------------------------------------------------------

WitnessReport non_submodule_witness(const Weight& w, const SetSpec& U, const Point& t,
                                    const Point& u, int n_max, std::optional<Functional> lambda) {
    const Semigroup& sg = w.semigroup();
    sg.require(t);
    sg.require(u);
    if (n_max < 1) throw DomainError("n_max must be positive");

    if (sg.kind == SemigroupKind::NatPlus)
        throw PreconditionError("nat-plus is weakly cancellative: {r : r t = u} is finite, "
                                "so no witness exists (E_omega is a Banach-algebra predual)");

    LimitReport rep = analyze_limits(w);
    if (rep.filter_lim_infinite)
        throw PreconditionError("Lim omega = infinity: no infinite U with omega bounded exists "
                                "(A_omega is a dual Banach algebra with predual E_omega)");

    // {r in U : min(r, t) = u} is infinite only when u = t
    if (u != t)
        throw PreconditionError("for the min operation, {r in U : r t = u} is infinite only "
                                "when u = t; got t = " + t.to_string() + ", u = " + u.to_string());
    if (U.finite(sg) == Tri::True)
        throw PreconditionError("U must be infinite");

    // bound omega on U
    std::optional<Rat> M = weight_upper_bound(w);
    if (!M && U.kind == SetSpec::Kind::SequenceRange &&
        U.seq->kind() == Sequence::Kind::EnumLE)
        M = U.seq->enum_bound();
    if (!M && U.kind == SetSpec::Kind::Interval && sg.kind != SemigroupKind::PosRatMin) {
        // bounded interval of integers: max over its lattice points
        if (U.interval.hi.kind == Bound::Kind::Finite &&
            (U.interval.lo.kind == Bound::Kind::Finite || sg.kind != SemigroupKind::IntMin)) {
            Rat best(0);
            Rat x = U.interval.lo.kind == Bound::Kind::Finite ? Rat(rat_ceil(U.interval.lo.value)) : Rat(1);
            for (; x <= U.interval.hi.value; x += 1) {
                Point p{x};
                if (!U.contains(sg, p)) continue;
                Value v = w.eval(p);
                if (!v.is_exact()) break;
                if (v.exact() > best) best = v.exact();
            }
            if (best > 0) M = best;
        }
    }
    if (!M)
        throw PreconditionError("cannot certify that omega is bounded on U");

    Functional lam = lambda ? *lambda : Functional::indicator({u});
    Value lam_u = lam.eval(u, w);
    bool nonzero = lam_u.is_exact() ? lam_u.exact() != 0 : lam_u.interval().sign() != 0;
    if (!nonzero) throw PreconditionError("<delta_u, lambda> must be nonzero");
    if (e_omega_membership(lam, w).verdict != Membership::Member)
        throw PreconditionError("lambda must be a member of E_omega");

    WitnessReport rpt;
    rpt.bound_m = *M;
    rpt.support = U.enumerate_from(sg, t, static_cast<std::size_t>(n_max));
    for (const Point& s : rpt.support) {
        Value ws = w.eval(s);
        if (ws.is_exact() && ws.exact() > *M)
            throw PreconditionError("omega exceeds the certified bound at " + s.to_string());
    }

    rpt.separation = Value(Rat(1) / *M) * lam_u.abs();

    Element accum(sg);
    rpt.tends_to_zero = true;
    rpt.stays_separated = true;
    for (int n = 1; n <= n_max; ++n) {
        accum = accum + delta_tilde(sg, rpt.support[static_cast<std::size_t>(n - 1)], w);
        Element alpha_n = Rat(1, n) * accum;
        Value a = pair_with(alpha_n, lam, w);
        Value b = pair_with(convolve(alpha_n, delta(sg, t)), lam, w).abs();
        rpt.alpha_pairing.push_back(a);
        rpt.conv_pairing.push_back(b);
        Value diff = b - rpt.separation;
        if (!(diff.is_exact() ? diff.exact() >= 0 : diff.interval().certainly_ge(Rat(0))))
            rpt.stays_separated = false;
    }
    // the weak-* limit of <alpha^(n), lambda>: exact zero throughout or a
    // vanishing tail
    const Value& last = rpt.alpha_pairing.back();
    double tail = std::abs(last.to_double());
    double first = std::abs(rpt.alpha_pairing.front().to_double());
    rpt.tends_to_zero = tail <= 1e-9 || (first > 0 && tail <= first * 2.0 / n_max);
    return rpt;
}

// ---------------------------------------------------------------------------
// Compactness probe
// ---------------------------------------------------------------------------

CompactnessReport compactness_probe(const Point& x, const Weight& w, const Truncation& window,
                                    const Rat& eps, int n_random, unsigned seed) {
    const Semigroup& sg = w.semigroup();
    if (sg.kind != SemigroupKind::NatMin)
        throw PreconditionError("xS is finite for every x only in nat-min");
    sg.require(x);
    LimitReport rep = analyze_limits(w);
    if (!rep.filter_lim_infinite)
        throw PreconditionError("the compactness argument needs Lim omega = infinity");
    if (eps <= 0) throw DomainError("eps must be positive");

    CompactnessReport out;
    // M = max omega(x t) over t = max omega on [1, x]
    Rat M(0);
    for (Rat v(1); v <= x.v; v += 1) {
        Rat wv = w.eval_exact_or_throw(Point{v});
        if (wv > M) M = wv;
    }
    out.m = M;

    // G = {t in window : omega(t) <= M / eps}, F = xG
    Rat cutoff = M / eps;
    std::vector<Point> F;
    out.g_size = 0;
    for (const Point& t : window.points) {
        Rat wt = w.eval_exact_or_throw(t);
        if (wt <= cutoff) {
            ++out.g_size;
            F.push_back(op(sg, x, t));
        }
    }
    std::sort(F.begin(), F.end());
    F.erase(std::unique(F.begin(), F.end()), F.end());
    if (F.empty()) throw PreconditionError("G is empty on this window; enlarge the window");
    out.f_max = F.back();

    double bound = 0;
    for (const Point& t : window.points) {
        Rat wt = w.eval_exact_or_throw(t);
        if (wt <= cutoff) continue;
        double r = Rat(M / wt).get_d();
        if (r > bound) bound = r;
    }
    out.bound = bound;

    auto probe = [&](const Element& f) {
        Element lf = convolve(delta(sg, x), f);
        std::vector<std::pair<Point, Rat>> outside;
        for (const Term& term : lf.terms())
            if (!std::binary_search(F.begin(), F.end(), term.point))
                outside.emplace_back(term.point, term.coeff);
        Element resid = Element::from_terms(sg, std::move(outside));
        Value rn = norm(resid, w);
        Value fn = norm(f, w);
        double ratio = fn.to_double() > 0 ? rn.to_double() / fn.to_double() : 0.0;
        out.rows.push_back({rn, fn, ratio});
        if (ratio > eps.get_d()) out.all_within_eps = false;
    };

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, window.points.size() - 1);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int i = 0; i < n_random; ++i) {
        std::vector<std::pair<Point, Rat>> terms;
        int sz = 1 + static_cast<int>(rng() % 12);
        for (int j = 0; j < sz; ++j) {
            Rat c(num(rng), den(rng));
            if (c != 0) terms.emplace_back(window.points[pick(rng)], c);
        }
        Element f = Element::from_terms(sg, std::move(terms));
        if (!f.is_zero()) probe(f);
    }
    // edge probes: f supported inside F, and f = delta_x
    probe(delta(sg, F.front()));
    probe(delta(sg, x));
    return out;
}

} // namespace slalg
