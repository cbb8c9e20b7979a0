#include "slalg/arens.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

namespace slalg {

std::string IterResult::to_string() const {
    switch (status) {
        case Status::Diverges: return "diverges";
        case Status::Undetermined: return "undetermined";
        case Status::Value: {
            if (exact) return rat_to_string(exact_value);
            std::ostringstream os;
            os.precision(12);
            os << value;
            return os.str();
        }
    }
    return "?";
}

namespace {

struct LimVal {
    double d = 0.0;
    std::optional<Rat> exact;
};

// tail-window limit of a numeric sequence; the getter returns nullopt when a
// term is itself undetermined (failed inner limit).
//
// A value is declared at the first depth >= min_depth where the last
// tail_window terms agree within the tolerance AND geometrically spaced
// probe terms out to the full configured depth agree with them. The probes
// keep a stable-looking prefix from masking a later switch without paying
// for a dense scan of the whole range.
IterResult limit_seq(const std::function<std::optional<LimVal>(long)>& get, long depth,
                     const IterConfig& cfg) {
    IterResult r;
    r.inner_depth = cfg.inner_depth;
    r.outer_depth = cfg.outer_depth;
    r.tolerance = cfg.tolerance;
    r.tail_window = cfg.tail_window;

    const long min_depth = cfg.min_depth(depth);
    const std::size_t W = static_cast<std::size_t>(std::max(2, cfg.tail_window));
    std::deque<LimVal> window;

    for (long k = 0; k < depth; ++k) {
        std::optional<LimVal> v = get(k);
        if (!v) {
            r.status = IterResult::Status::Undetermined;
            r.depth_used = k;
            return r;
        }
        window.push_back(*v);
        if (window.size() > W) window.pop_front();
        if (k + 1 < min_depth || window.size() < W) continue;

        double lo = window.front().d, hi = window.front().d;
        bool all_equal_exact = true;
        for (const LimVal& x : window) {
            lo = std::min(lo, x.d);
            hi = std::max(hi, x.d);
            if (!x.exact || !window.front().exact || !(*x.exact == *window.front().exact))
                all_equal_exact = false;
        }
        if (!all_equal_exact && !(hi - lo < cfg.tolerance)) continue;

        double mid = all_equal_exact ? window.back().d : 0.5 * (hi + lo);
        bool exact = all_equal_exact;
        Rat exact_value = all_equal_exact ? *window.back().exact : Rat(0);

        // confirmation probes at 2(k+1), 4(k+1), ... up to the full depth
        bool confirmed = true;
        bool probe_undetermined = false;
        for (long p = 2 * (k + 1); confirmed; p *= 2) {
            long idx = std::min(p, depth) - 1;
            std::optional<LimVal> pv = get(idx);
            if (!pv) {
                probe_undetermined = true;
                break;
            }
            if (exact && (!pv->exact || !(*pv->exact == exact_value))) {
                exact = false; // keep the value claim, drop exactness
            }
            if (std::abs(pv->d - mid) >= cfg.tolerance) confirmed = false;
            if (idx == depth - 1) break;
        }
        if (probe_undetermined) {
            r.status = IterResult::Status::Undetermined;
            r.depth_used = k + 1;
            return r;
        }
        if (!confirmed) continue; // a later term disagrees: keep scanning

        if (std::abs(mid) > 1.0 / cfg.tolerance) {
            r.status = IterResult::Status::Diverges;
        } else {
            r.status = IterResult::Status::Value;
            r.value = mid;
            r.exact = exact;
            if (exact) r.exact_value = exact_value;
        }
        r.depth_used = k + 1;
        return r;
    }
    r.status = IterResult::Status::Undetermined;
    r.depth_used = depth;
    return r;
}

LimVal to_limval(const Value& v) {
    LimVal lv;
    lv.d = v.to_double();
    if (v.is_exact()) lv.exact = v.exact();
    return lv;
}

IterResult repeated_limit(const PairKernel& f, const Sequence& outer, const Sequence& inner,
                          const IterConfig& cfg) {
    auto outer_term = [&](long m) -> std::optional<LimVal> {
        Point s = outer.at(static_cast<std::size_t>(m));
        IterResult in = limit_seq(
            [&](long n) -> std::optional<LimVal> {
                return to_limval(f(s, inner.at(static_cast<std::size_t>(n))));
            },
            cfg.inner_depth, cfg);
        if (in.status != IterResult::Status::Value) return std::nullopt;
        LimVal lv;
        lv.d = in.value;
        if (in.exact) lv.exact = in.exact_value;
        return lv;
    };
    return limit_seq(outer_term, cfg.outer_depth, cfg);
}

} // namespace

IterPair iterated_limit(const PairKernel& f, const Sequence& outer, const Sequence& inner,
                        const IterConfig& cfg) {
    IterPair p;
    p.box = repeated_limit(f, outer, inner, cfg);
    PairKernel swapped = [&f](const Point& t, const Point& s) { return f(s, t); };
    p.diamond = repeated_limit(swapped, inner, outer, cfg);
    return p;
}

// ---------------------------------------------------------------------------
// 0-clustering
// ---------------------------------------------------------------------------

ZeroClusterResult zero_cluster_test(const Weight& w, const IterConfig& cfg) {
    ZeroClusterResult out;
    LimitReport rep;
    try {
        rep = analyze_limits(w);
    } catch (const UndecidableError&) {
        out.clusters_zero = Tri::Unknown;
        return out;
    }
    if (rep.filter_lim_infinite) {
        out.clusters_zero = Tri::True;
        return out;
    }
    out.clusters_zero = Tri::False;

    // pick M with {omega <= M} certified infinite, preferring the liminf
    std::vector<Rat> candidates;
    if (rep.liminf_value.is_finite() && rep.liminf_value.value.is_exact()) {
        Rat L = rep.liminf_value.value.exact();
        candidates.push_back(L);
        candidates.push_back(is_integer(L) ? Rat(L + 1) : Rat(rat_ceil(L)));
        candidates.push_back(L + 2);
    } else if (rep.liminf_value.is_finite()) {
        Rat ub(rep.liminf_value.value.interval().upper_double());
        candidates.push_back(Rat(rat_floor(ub) + 1));
        candidates.push_back(Rat(rat_floor(ub) + 2));
    }
    std::optional<Sequence> enumeration;
    Rat M(0);
    for (const Rat& cand : candidates) {
        try {
            enumeration = Sequence::enum_le(w, cand);
            M = cand;
            break;
        } catch (const Error&) {
            continue;
        }
    }
    if (!enumeration) {
        out.clusters_zero = Tri::Unknown;
        return out;
    }

    // split the enumeration into two disjoint monotone sequences
    std::size_t depth = static_cast<std::size_t>(
        std::max(cfg.inner_depth, cfg.outer_depth) + cfg.tail_window + 8);
    std::vector<Point> all = enumeration->prefix(2 * depth);
    std::vector<Point> evens, odds;
    for (std::size_t i = 0; i < all.size(); ++i)
        (i % 2 == 0 ? evens : odds).push_back(all[i]);
    Sequence s_seq = Sequence::explicit_list(w.semigroup(), std::move(evens));
    Sequence t_seq = Sequence::explicit_list(w.semigroup(), std::move(odds));

    PairKernel kernel = [&w](const Point& s, const Point& t) { return omega_fn(w, s, t); };
    IterPair lims = iterated_limit(kernel, s_seq, t_seq, cfg);
    out.witness = ZeroClusterWitness{std::move(s_seq), std::move(t_seq), lims.box, lims.diamond, M};
    return out;
}

IterPair arens_pairing(const Sequence& outer, const Sequence& inner, const Functional& l,
                       const Weight& w, const IterConfig& cfg) {
    const Semigroup sg = w.semigroup();
    PairKernel kernel = [&l, &w, sg](const Point& s, const Point& t) {
        Point st = op(sg, s, t);
        return l.eval(st, w) / (w.eval(s) * w.eval(t));
    };
    return iterated_limit(kernel, outer, inner, cfg);
}

// ---------------------------------------------------------------------------
// Craw-Young extraction
// ---------------------------------------------------------------------------

namespace {

bool omega_gt(const Weight& w, const Point& s, const Point& t, const Rat& eps) {
    Value v = omega_fn(w, s, t);
    if (v.is_exact()) return v.exact() > eps;
    if (v.interval().certainly_gt(eps)) return true;
    if (v.interval().certainly_le(eps)) return false;
    throw UndecidableError("Omega comparison against eps not certified");
}

// window check for lim_m Omega(s, t_m) > eps
bool tail_omega_gt(const Weight& w, const Point& s, const Sequence& t_seq, const Rat& eps,
                   long window, int tail) {
    for (long m = window - tail; m < window; ++m)
        if (!omega_gt(w, s, t_seq.at(static_cast<std::size_t>(m)), eps)) return false;
    return true;
}

} // namespace

CrawYoungWitness craw_young_witness(const Weight& w, const Sequence& s_seq,
                                    const Sequence& t_seq, const Rat& eps, int k, long window) {
    const Semigroup& sg = w.semigroup();
    if (!sg.properties().is_weakly_cancellative)
        throw PreconditionError(sg.name() + " is not weakly cancellative; the extraction "
                                            "argument does not apply");
    if (k < 1 || window < 2 * k + 16) throw DomainError("window too small for the extraction");

    // hypothesis: lim_m Omega(s_n, t_m) > eps along the sequence, verified on
    // the window; most of the first candidates must satisfy it
    {
        int passing = 0;
        for (long n = 0; n < 8; ++n)
            if (tail_omega_gt(w, s_seq.at(static_cast<std::size_t>(n)), t_seq, eps, window, 8))
                ++passing;
        if (passing < 4)
            throw PreconditionError("lim_m Omega(s_n, t_m) > eps fails on the window for most "
                                    "candidates (" + std::to_string(passing) + "/8 pass)");
    }

    CrawYoungWitness out;
    std::vector<Point>& S = out.s_points;
    std::vector<Point>& T = out.t_points;

    long s_idx = 0, t_idx = 0;
    for (int step = 0; step < k; ++step) {
        // F = {u : u + t'_l = s'_i + t'_j} for already chosen triples
        std::set<Rat> F;
        for (const Point& sp : S)
            for (const Point& tp : T)
                for (const Point& tl : T) {
                    Rat u = sp.v + tp.v - tl.v;
                    if (u >= 1 && is_integer(u)) F.insert(u);
                }
        bool found_s = false;
        for (; s_idx < window; ++s_idx) {
            Point cand = s_seq.at(static_cast<std::size_t>(s_idx));
            if (F.count(cand.v)) continue;
            if (!tail_omega_gt(w, cand, t_seq, eps, window, 8)) continue;
            S.push_back(cand);
            ++s_idx;
            found_s = true;
            break;
        }
        if (!found_s)
            throw UndecidableError("window exhausted extracting s'_" + std::to_string(step + 1) +
                                   " (got " + std::to_string(S.size()) + " of " + std::to_string(k) + ")");

        // E = {u : s'_l + u = s'_i + t'_j}
        std::set<Rat> E;
        for (const Point& sp : S)
            for (const Point& tp : T)
                for (const Point& sl : S) {
                    Rat u = sp.v + tp.v - sl.v;
                    if (u >= 1 && is_integer(u)) E.insert(u);
                }
        bool found_t = false;
        for (; t_idx < window; ++t_idx) {
            Point cand = t_seq.at(static_cast<std::size_t>(t_idx));
            if (E.count(cand.v)) continue;
            bool all_above = true;
            for (const Point& sp : S)
                if (!omega_gt(w, sp, cand, eps)) {
                    all_above = false;
                    break;
                }
            if (!all_above) continue;
            T.push_back(cand);
            ++t_idx;
            found_t = true;
            break;
        }
        if (!found_t)
            throw UndecidableError("window exhausted extracting t'_" + std::to_string(step + 1));
    }

    // chi = characteristic set of {s'_n t'_m : n <= m}; the products must be
    // pairwise distinct for the pairing matrix to collapse correctly
    std::vector<Point> products;
    std::set<Rat> seen;
    for (int n = 0; n < k; ++n)
        for (int m = 0; m < k; ++m) {
            Point prod = op(sg, S[static_cast<std::size_t>(n)], T[static_cast<std::size_t>(m)]);
            if (!seen.insert(prod.v).second)
                throw Error("extracted products are not pairwise distinct");
            if (n <= m) products.push_back(prod);
        }
    out.chi = SetSpec::explicit_set(std::move(products));

    Functional omega_chi = Functional::char_times_omega(out.chi);
    out.pairing.assign(static_cast<std::size_t>(k), std::vector<Rat>(static_cast<std::size_t>(k), Rat(0)));
    for (int n = 0; n < k; ++n)
        for (int m = 0; m < k; ++m) {
            Element prod = convolve(delta_tilde(sg, S[static_cast<std::size_t>(n)], w),
                                    delta_tilde(sg, T[static_cast<std::size_t>(m)], w));
            Value v = pair_with(prod, omega_chi, w);
            if (!v.is_exact()) throw ModeError("Craw-Young pairing needs exact weight values");
            out.pairing[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = v.exact();
        }
    return out;
}

// ---------------------------------------------------------------------------
// Classifier
// ---------------------------------------------------------------------------

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ArensRegular: return "ArensRegular";
        case Verdict::StronglyArensIrregular: return "StronglyArensIrregular";
        case Verdict::NeitherRegularNorSAI: return "NeitherRegularNorSAI";
        case Verdict::NotRegularSAIUnknown: return "NotRegularSAIUnknown";
    }
    return "?";
}

std::string predual_note_name(PredualNote p) {
    switch (p) {
        case PredualNote::EOmegaPredual: return "E_omega_predual";
        case PredualNote::NoPredualHypothesisMet: return "no_predual_hypothesis_met";
        case PredualNote::Unknown: return "unknown";
    }
    return "?";
}

namespace {

// hypothesis of the no-predual proposition: {s : omega(s) <= Liminf omega}
// is infinite with an accumulation point outside S
bool no_predual_hypothesis(const Weight& w, const LimitReport& rep) {
    if (!rep.liminf_value.is_finite() || !rep.liminf_value.value.is_exact()) return false;
    Rat L = rep.liminf_value.value.exact();
    const Semigroup& sg = w.semigroup();
    if (sg.kind == SemigroupKind::PosRatMin) {
        if (le_set_interval(w, L)) return true; // irrational accumulation points
        return tail_le_set_infinite(w, L, true) == Tri::True; // accumulates at sup
    }
    // integer lattices accumulate only at +-inf, both outside S
    return tail_le_set_infinite(w, L, true) == Tri::True ||
           tail_le_set_infinite(w, L, false) == Tri::True;
}

} // namespace

Classification classify(const Weight& w) {
    const Semigroup& sg = w.semigroup();
    if (!sg.is_semilattice())
        throw PreconditionError("the classifier covers the min semilattices");

    LimitReport rep = analyze_limits(w); // UndecidableError carries the diagnostic

    Classification c;

    if (rep.filter_lim_infinite) {
        c.verdict = Verdict::ArensRegular;
        c.reasons.emplace_back("AR-iff-Lim-omega-infinite",
                               "Lim omega = infinity, so Omega 0-clusters and A_omega is Arens regular");
        c.predual_note = PredualNote::EOmegaPredual;
        c.reasons.emplace_back("dual-algebra-Lim-infinite",
                               "Lim omega = infinity makes E_omega a Banach-algebra predual");
        return c;
    }

    std::string liminf_str = rep.liminf_value.to_string();
    c.reasons.emplace_back("not-AR-liminf-finite",
                           "Liminf omega = " + liminf_str + " < infinity, so A_omega is not Arens regular");
    c.predual_note = no_predual_hypothesis(w, rep) ? PredualNote::NoPredualHypothesisMet
                                                   : PredualNote::Unknown;

    if (sg.kind == SemigroupKind::NatMin) {
        c.verdict = Verdict::StronglyArensIrregular;
        c.reasons.emplace_back("NMin-liminf-finite-SAI",
                               "liminf omega < infinity on (N, min): strongly Arens irregular "
                               "with a two-point DTC set");
        return c;
    }

    if (auto bound = weight_upper_bound(w)) {
        bool scattered = sg.properties().closure_scattered;
        c.reasons.emplace_back("bounded-weight-unweighted-isomorphic",
                               "omega <= " + rat_to_string(*bound) +
                                   " so A_omega is isomorphic to the unweighted algebra");
        if (scattered) {
            c.verdict = Verdict::StronglyArensIrregular;
            c.reasons.emplace_back("bounded-weight-scattered", "cl_T S is scattered");
        } else {
            c.verdict = Verdict::NeitherRegularNorSAI;
            c.reasons.emplace_back("bounded-weight-not-scattered", "cl_T S is not scattered");
        }
        return c;
    }

    if (rep.order_lim_sup_infinite) {
        c.verdict = Verdict::NeitherRegularNorSAI;
        c.reasons.emplace_back("weight-unbounded-at-sup-not-SAI",
                               "every net tending to sup S has unbounded omega, so A_omega is "
                               "not strongly Arens irregular");
        return c;
    }

    c.verdict = Verdict::NotRegularSAIUnknown;
    c.reasons.emplace_back("no-SAI-characterization",
                           "no characterization of strong Arens irregularity applies here");
    return c;
}

// ---------------------------------------------------------------------------
// Two-point DTC demo on nat-min
// ---------------------------------------------------------------------------

DtcReport dtc_demo(const Weight& w, const Sequence& a_seq, const Sequence& b_seq,
                   const Element& f, const IterConfig& cfg) {
    const Semigroup& sg = w.semigroup();
    if (sg.kind != SemigroupKind::NatMin)
        throw PreconditionError("the DTC demonstration runs on nat-min");
    LimitReport rep = analyze_limits(w);
    if (rep.filter_lim_infinite)
        throw PreconditionError("liminf omega = infinity: <delta_u, phi_omega> = 0 for every "
                                "u in the growth, no DTC pair arises this way");
    if (f.semigroup() != sg) throw DomainError("f lives over the wrong semigroup");

    DtcReport out;
    auto phi_limit = [&](const Sequence& seq) {
        return limit_seq(
            [&](long i) -> std::optional<LimVal> {
                Value v = Value(Rat(1)) / w.eval(seq.at(static_cast<std::size_t>(i)));
                return to_limval(v);
            },
            cfg.outer_depth, cfg);
    };
    out.phi_a = phi_limit(a_seq);
    out.phi_b = phi_limit(b_seq);
    if (out.phi_a.status != IterResult::Status::Value ||
        out.phi_b.status != IterResult::Status::Value) {
        out.undetermined = true;
        return out;
    }
    if (std::abs(out.phi_a.value) < cfg.tolerance && std::abs(out.phi_b.value) < cfg.tolerance)
        throw PreconditionError("both limits <delta, phi_omega> vanish; choose sequences along "
                                "a bounded-omega set");

    // (i) f * delta~_s = (1/omega(s)) f exactly once s > max supp f
    if (!f.is_zero()) {
        int used = 0;
        for (long i = 0; used < 8 && i < cfg.outer_depth; ++i) {
            Point s = a_seq.at(static_cast<std::size_t>(i));
            if (!(s > f.max_support())) continue;
            Element lhs = convolve(f, delta_tilde(sg, s, w));
            Element rhs = Rat(Rat(1) / w.eval_exact_or_throw(s)) * f;
            bool okay = lhs == rhs;
            out.ideal_rows.emplace_back(s, okay);
            if (!okay) out.ideal_exact = false;
            ++used;
        }
    }

    // (ii) against both delta_a and delta_b, box = diamond forces the trivial
    // combination: the system {x_b p_b = 0, x_b p_a = 0, x_a p_b = 0,
    // x_a p_a = 0} with (p_a, p_b) != 0
    out.trivial_only = std::abs(out.phi_a.value) >= cfg.tolerance ||
                       std::abs(out.phi_b.value) >= cfg.tolerance;
    return out;
}

} // namespace slalg
