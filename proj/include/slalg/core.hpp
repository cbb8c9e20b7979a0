#ifndef SLALG_CORE_HPP
#define SLALG_CORE_HPP

#include <compare>
#include <string>
#include <vector>

#include "slalg/rational.hpp"

namespace slalg {

// An exact order-comparable index into the ambient semigroup. Comparison is
// the numeric total order; equality is exact.
struct Point {
    Rat v;

    Point() : v(0) {}
    explicit Point(Rat q) : v(std::move(q)) { v.canonicalize(); }
    static Point integer(long n) { return Point(Rat(n)); }

    friend bool operator==(const Point& a, const Point& b) { return a.v == b.v; }
    friend bool operator!=(const Point& a, const Point& b) { return a.v != b.v; }
    friend bool operator<(const Point& a, const Point& b) { return a.v < b.v; }
    friend bool operator<=(const Point& a, const Point& b) { return a.v <= b.v; }
    friend bool operator>(const Point& a, const Point& b) { return a.v > b.v; }
    friend bool operator>=(const Point& a, const Point& b) { return a.v >= b.v; }

    std::string to_string() const { return rat_to_string(v); }
};

enum class SemigroupKind { NatMin, IntMin, PosRatMin, NatPlus };

struct SemigroupProperties {
    bool is_semilattice;
    bool is_weakly_cancellative;
    bool has_sup_in_s;
    bool closure_scattered; // declared constant per semigroup, not computed
};

struct Semigroup {
    SemigroupKind kind;

    constexpr explicit Semigroup(SemigroupKind k) : kind(k) {}

    static Semigroup nat_min() { return Semigroup(SemigroupKind::NatMin); }
    static Semigroup int_min() { return Semigroup(SemigroupKind::IntMin); }
    static Semigroup posrat_min() { return Semigroup(SemigroupKind::PosRatMin); }
    static Semigroup nat_plus() { return Semigroup(SemigroupKind::NatPlus); }

    SemigroupProperties properties() const;
    bool is_semilattice() const { return properties().is_semilattice; }

    // Domain membership; throws DomainError with the offending point when not.
    bool contains(const Point& s) const;
    void require(const Point& s) const;

    std::string name() const;           // "nat-min", "int-min", "posrat-min", "nat-plus"
    static Semigroup from_name(const std::string& name);

    friend bool operator==(const Semigroup& a, const Semigroup& b) { return a.kind == b.kind; }
    friend bool operator!=(const Semigroup& a, const Semigroup& b) { return a.kind != b.kind; }
};

// The semigroup operation: min for the three semilattices, + for NatPlus.
Point op(const Semigroup& sg, const Point& s, const Point& t);

// Semilattice order: s <= t iff op(s,t) = s. Coincides with numeric order.
bool leq(const Semigroup& sg, const Point& s, const Point& t);

// Finite strictly increasing window, closed under the operation. NatPlus is
// rejected (no finite sum-closed window exists).
struct Truncation {
    Semigroup semigroup;
    std::vector<Point> points; // strictly increasing

    Truncation(Semigroup sg, std::vector<Point> pts);

    const Point& max() const { return points.back(); }
    std::size_t size() const { return points.size(); }
    bool contains(const Point& s) const;

    static Truncation range(const Semigroup& sg, long lo, long hi); // integer points lo..hi
};

} // namespace slalg

#endif
