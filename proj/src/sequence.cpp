#include "slalg/sequence.hpp"

#include <algorithm>

namespace slalg {

namespace {
constexpr long kScanCap = 2'000'000; // safety bound for EnumLE scans
}

struct Sequence::Impl {
    Kind kind;
    Semigroup sg;
    Rat a;        // Arith a0 / Geom a0 / RationalsIn lower
    Rat b;        // Arith d / Geom r / RationalsIn upper
    std::optional<Weight> weight;
    Rat bound;    // EnumLE M
    std::vector<Point> points; // Explicit
    std::optional<Rat> tail;

    // EnumLE strategy, fixed at construction
    enum class EnumDir { Ascending, Descending, Ladder };
    EnumDir enum_dir = EnumDir::Ascending;
    Rat ladder_a, ladder_b;
    std::optional<Rat> enum_start; // first scan point (ascending/descending)

    mutable std::vector<Point> memo;
    mutable Rat scan_next; // next unexamined lattice point for EnumLE
    mutable Rat cw_state;  // last Calkin-Wilf value emitted (over all of Q+)
    mutable bool scan_init = false;

    Impl(Kind k, Semigroup s) : kind(k), sg(s), a(0), b(0), bound(0), ladder_a(0), ladder_b(0), scan_next(0), cw_state(0) {}

    bool qualifies(const Rat& x) const {
        Point p{x};
        if (!sg.contains(p)) return false;
        Value v = weight->eval(p);
        if (v.is_exact()) return v.exact() <= bound;
        if (v.interval().certainly_le(bound)) return true;
        if (v.interval().certainly_gt(bound)) return false;
        throw UndecidableError("omega(s) <= M not certified at s = " + rat_to_string(x));
    }

    void ensure(std::size_t n) const {
        while (memo.size() <= n) step();
    }

    void step() const {
        switch (kind) {
            case Kind::Arith: {
                std::size_t i = memo.size();
                Rat v = a + b * Rat(static_cast<long>(i));
                Point p{v};
                sg.require(p);
                memo.push_back(p);
                return;
            }
            case Kind::Geom: {
                Rat v = memo.empty() ? a : Rat(memo.back().v * b);
                Point p{v};
                sg.require(p);
                memo.push_back(p);
                return;
            }
            case Kind::EnumLE: {
                if (enum_dir == EnumDir::Ladder) {
                    // a + (b-a) * k/(k+1), k >= 1: strictly increasing inside (a, b)
                    long k = static_cast<long>(memo.size()) + 1;
                    Rat v = ladder_a + (ladder_b - ladder_a) * Rat(k, k + 1);
                    memo.push_back(Point{v});
                    return;
                }
                if (!scan_init) {
                    scan_next = *enum_start;
                    scan_init = true;
                }
                long steps = 0;
                while (true) {
                    if (++steps > kScanCap)
                        throw Error("EnumLE scan exceeded " + std::to_string(kScanCap) + " lattice points");
                    Rat x = scan_next;
                    scan_next = enum_dir == EnumDir::Ascending ? Rat(scan_next + 1) : Rat(scan_next - 1);
                    if (sg.contains(Point{x}) && qualifies(x)) {
                        memo.push_back(Point{x});
                        return;
                    }
                }
            }
            case Kind::RationalsIn: {
                // Calkin-Wilf successor: q' = 1 / (2 floor(q) - q + 1)
                Rat q;
                if (!scan_init) {
                    q = Rat(1);
                    scan_init = true;
                } else {
                    Rat fl(rat_floor(cw_state));
                    q = Rat(1) / (2 * fl - cw_state + 1);
                }
                long steps = 0;
                while (!(q > a && q < b)) {
                    if (++steps > kScanCap)
                        throw Error("Calkin-Wilf scan exceeded its step budget for (" +
                                    rat_to_string(a) + ", " + rat_to_string(b) + ")");
                    Rat fl(rat_floor(q));
                    q = Rat(1) / (2 * fl - q + 1);
                }
                cw_state = q;
                memo.push_back(Point{q});
                return;
            }
            case Kind::Explicit: {
                std::size_t i = memo.size();
                if (i < points.size()) {
                    memo.push_back(points[i]);
                    return;
                }
                if (!tail) throw DomainError("explicit sequence exhausted at index " + std::to_string(i));
                Rat v = points.back().v + *tail * Rat(static_cast<long>(i - points.size() + 1));
                Point p{v};
                sg.require(p);
                memo.push_back(p);
                return;
            }
        }
        throw Error("unreachable sequence kind");
    }
};

Sequence Sequence::arith(const Semigroup& sg, Rat a0, Rat d) {
    if (d == 0) throw DomainError("arithmetic sequence needs a nonzero step");
    if (d < 0 && sg.kind != SemigroupKind::IntMin)
        throw DomainError("decreasing arithmetic sequences leave " + sg.name());
    auto impl = std::make_shared<Impl>(Kind::Arith, sg);
    sg.require(Point{a0});
    impl->a = std::move(a0);
    impl->b = std::move(d);
    return Sequence(std::move(impl));
}

Sequence Sequence::geom(const Semigroup& sg, Rat a0, Rat r) {
    if (r <= 0 || r == 1) throw DomainError("geometric ratio must be positive and != 1");
    sg.require(Point{a0});
    if (a0 < 0 && sg.kind == SemigroupKind::IntMin && r <= 1)
        throw DomainError("geometric sequence not monotone in int-min");
    auto impl = std::make_shared<Impl>(Kind::Geom, sg);
    impl->a = std::move(a0);
    impl->b = std::move(r);
    return Sequence(std::move(impl));
}

Sequence Sequence::enum_le(const Weight& w, Rat M) {
    const Semigroup& sg = w.semigroup();
    auto impl = std::make_shared<Impl>(Kind::EnumLE, sg);
    impl->weight = w;
    impl->bound = M;

    Tri up = tail_le_set_infinite(w, M, true);
    Tri down = tail_le_set_infinite(w, M, false);
    if (sg.kind == SemigroupKind::PosRatMin) {
        if (auto iv = le_set_interval(w, M)) {
            impl->enum_dir = Impl::EnumDir::Ladder;
            impl->ladder_a = iv->first;
            impl->ladder_b = iv->second;
            return Sequence(std::move(impl));
        }
        if (up == Tri::True) {
            impl->enum_dir = Impl::EnumDir::Ascending;
            impl->enum_start = Rat(1);
            return Sequence(std::move(impl));
        }
        throw DomainError("{s : omega(s) <= " + rat_to_string(M) + "} is not certified infinite");
    }
    if (up == Tri::True) {
        impl->enum_dir = Impl::EnumDir::Ascending;
        impl->enum_start = sg.kind == SemigroupKind::IntMin ? Rat(0) : Rat(1);
        return Sequence(std::move(impl));
    }
    if (down == Tri::True) {
        // descending enumeration from the largest qualifying integer; the
        // upper tail is certified to leave the set eventually, so scan up
        // until that is visible, then walk down
        Rat start(0);
        long misses = 0;
        for (long n = 0; n <= kScanCap; ++n) {
            if (impl->qualifies(Rat(n))) {
                start = Rat(n);
                misses = 0;
            } else {
                ++misses;
                if (misses > 64 && misses % 64 == 0 &&
                    certified_tail_ge(w, Point{Rat(n)}, Rat(M + 1)) == Tri::True)
                    break;
                if (misses > 65536) break;
            }
        }
        impl->enum_dir = Impl::EnumDir::Descending;
        impl->enum_start = start;
        return Sequence(std::move(impl));
    }
    throw DomainError("{s : omega(s) <= " + rat_to_string(M) + "} is not certified infinite");
}

Sequence Sequence::rationals_in(const Semigroup& sg, Rat a, Rat b) {
    if (sg.kind != SemigroupKind::PosRatMin)
        throw DomainError("rationals-in sequences live in posrat-min");
    if (a < 0 || b <= a) throw DomainError("rationals-in needs 0 <= a < b");
    auto impl = std::make_shared<Impl>(Kind::RationalsIn, sg);
    impl->a = std::move(a);
    impl->b = std::move(b);
    return Sequence(std::move(impl));
}

Sequence Sequence::explicit_list(const Semigroup& sg, std::vector<Point> pts,
                                 std::optional<Rat> tail_step) {
    if (pts.empty()) throw DomainError("explicit sequence needs at least one point");
    bool inc = pts.size() < 2 || pts[0] < pts[1];
    for (std::size_t i = 0; i < pts.size(); ++i) {
        sg.require(pts[i]);
        if (i > 0 && !(inc ? pts[i - 1] < pts[i] : pts[i] < pts[i - 1]))
            throw DomainError("explicit sequence must be strictly monotone");
    }
    if (tail_step && *tail_step <= 0) throw DomainError("tail step must be positive");
    if (tail_step && !inc) throw DomainError("tail continuation requires an increasing list");
    auto impl = std::make_shared<Impl>(Kind::Explicit, sg);
    impl->points = std::move(pts);
    impl->tail = std::move(tail_step);
    return Sequence(std::move(impl));
}

Sequence::Kind Sequence::kind() const { return impl_->kind; }
const Semigroup& Sequence::semigroup() const { return impl_->sg; }

Point Sequence::at(std::size_t i) const {
    impl_->ensure(i);
    return impl_->memo[i];
}

std::vector<Point> Sequence::prefix(std::size_t n) const {
    if (n) impl_->ensure(n - 1);
    return std::vector<Point>(impl_->memo.begin(), impl_->memo.begin() + n);
}

bool Sequence::contains(const Point& s) const {
    const Impl& im = *impl_;
    switch (im.kind) {
        case Kind::Arith: {
            Rat k = (s.v - im.a) / im.b;
            return is_integer(k) && k >= 0;
        }
        case Kind::Geom: {
            if (im.a == 0) return s.v == 0;
            Rat q = s.v / im.a;
            if (q <= 0) return false;
            if (q == 1) return true;
            // q must equal r^k; bracket k by bit sizes, then verify exactly
            auto bits = [](const Rat& x) {
                long n = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 2));
                long d = static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
                return n - d;
            };
            long bq = bits(q), br = bits(im.b);
            if (br == 0) br = 1;
            long k_est = bq / br;
            for (long k = std::max(0L, k_est - 2); k <= k_est + 2; ++k)
                if (pow_int(im.b, k) == q) return true;
            return false;
        }
        case Kind::EnumLE: {
            if (!im.sg.contains(s)) return false;
            if (im.enum_dir == Impl::EnumDir::Ladder) {
                if (im.ladder_b == im.ladder_a) return false;
                Rat q = (s.v - im.ladder_a) / (im.ladder_b - im.ladder_a);
                if (q <= 0 || q >= 1) return false;
                Rat k = q / (1 - q);
                return is_integer(k) && k >= 1;
            }
            if (!im.qualifies(s.v)) return false;
            return im.enum_dir == Impl::EnumDir::Ascending ? s.v >= *im.enum_start
                                                           : s.v <= *im.enum_start;
        }
        case Kind::RationalsIn:
            return im.sg.contains(s) && s.v > im.a && s.v < im.b;
        case Kind::Explicit: {
            for (const Point& p : im.points)
                if (p == s) return true;
            if (im.tail) {
                Rat k = (s.v - im.points.back().v) / *im.tail;
                return is_integer(k) && k >= 1;
            }
            return false;
        }
    }
    return false;
}

const Rat& Sequence::param_a() const { return impl_->a; }
const Rat& Sequence::param_b() const { return impl_->b; }
std::optional<Rat> Sequence::enum_bound() const {
    return impl_->kind == Kind::EnumLE ? std::optional<Rat>(impl_->bound) : std::nullopt;
}
const std::vector<Point>& Sequence::explicit_points() const { return impl_->points; }
std::optional<Rat> Sequence::tail_step() const { return impl_->tail; }

std::string Sequence::describe() const {
    switch (impl_->kind) {
        case Kind::Arith: return "arith(" + rat_to_string(impl_->a) + ", " + rat_to_string(impl_->b) + ")";
        case Kind::Geom: return "geom(" + rat_to_string(impl_->a) + ", " + rat_to_string(impl_->b) + ")";
        case Kind::EnumLE: return "enum-le(" + rat_to_string(impl_->bound) + ")";
        case Kind::RationalsIn:
            return "rationals-in(" + rat_to_string(impl_->a) + ", " + rat_to_string(impl_->b) + ")";
        case Kind::Explicit: return "explicit[" + std::to_string(impl_->points.size()) + "]";
    }
    return "?";
}

} // namespace slalg
