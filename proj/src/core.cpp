#include "slalg/core.hpp"

#include <algorithm>

#include "slalg/errors.hpp"

namespace slalg {

SemigroupProperties Semigroup::properties() const {
    switch (kind) {
        case SemigroupKind::NatMin:
            return {true, false, false, true};
        case SemigroupKind::IntMin:
            return {true, false, false, true};
        case SemigroupKind::PosRatMin:
            return {true, false, false, false};
        case SemigroupKind::NatPlus:
            return {false, true, false, true};
    }
    throw Error("unreachable semigroup kind");
}

bool Semigroup::contains(const Point& s) const {
    switch (kind) {
        case SemigroupKind::NatMin:
        case SemigroupKind::NatPlus:
            return is_integer(s.v) && s.v >= 1;
        case SemigroupKind::IntMin:
            return is_integer(s.v);
        case SemigroupKind::PosRatMin:
            return s.v > 0;
    }
    return false;
}

void Semigroup::require(const Point& s) const {
    if (!contains(s))
        throw DomainError("point " + s.to_string() + " is not in " + name());
}

std::string Semigroup::name() const {
    switch (kind) {
        case SemigroupKind::NatMin: return "nat-min";
        case SemigroupKind::IntMin: return "int-min";
        case SemigroupKind::PosRatMin: return "posrat-min";
        case SemigroupKind::NatPlus: return "nat-plus";
    }
    return "?";
}

Semigroup Semigroup::from_name(const std::string& name) {
    if (name == "nat-min") return nat_min();
    if (name == "int-min") return int_min();
    if (name == "posrat-min") return posrat_min();
    if (name == "nat-plus") return nat_plus();
    throw DomainError("unknown semigroup '" + name + "'");
}

Point op(const Semigroup& sg, const Point& s, const Point& t) {
    sg.require(s);
    sg.require(t);
    if (sg.kind == SemigroupKind::NatPlus) return Point(Rat(s.v + t.v));
    return s <= t ? s : t;
}

bool leq(const Semigroup& sg, const Point& s, const Point& t) {
    sg.require(s);
    sg.require(t);
    if (sg.is_semilattice()) return op(sg, s, t) == s;
    return s <= t;
}

Truncation::Truncation(Semigroup sg, std::vector<Point> pts) : semigroup(sg), points(std::move(pts)) {
    if (points.empty()) throw DomainError("truncation must be nonempty");
    if (sg.kind == SemigroupKind::NatPlus)
        throw DomainError("no finite window of nat-plus is closed under +");
    for (std::size_t i = 0; i < points.size(); ++i) {
        semigroup.require(points[i]);
        if (i > 0 && !(points[i - 1] < points[i]))
            throw DomainError("truncation points must be strictly increasing");
    }
    // closure under min is automatic for a sorted list
}

bool Truncation::contains(const Point& s) const {
    return std::binary_search(points.begin(), points.end(), s);
}

Truncation Truncation::range(const Semigroup& sg, long lo, long hi) {
    std::vector<Point> pts;
    for (long n = lo; n <= hi; ++n) pts.push_back(Point::integer(n));
    return Truncation(sg, std::move(pts));
}

} // namespace slalg
