#ifndef SLALG_SEQUENCE_HPP
#define SLALG_SEQUENCE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "slalg/core.hpp"
#include "slalg/weight.hpp"

namespace slalg {

// Generator of point sequences used to approximate elements of the growth S*.
// All kinds generate pairwise distinct points; every kind except RationalsIn
// (fixed Calkin-Wilf order, inherently non-monotone) is strictly monotone.
class Sequence {
public:
    enum class Kind { Arith, Geom, EnumLE, RationalsIn, Explicit };

    static Sequence arith(const Semigroup& sg, Rat a0, Rat d);
    static Sequence geom(const Semigroup& sg, Rat a0, Rat r);
    // increasing (or, when only the lower tail qualifies, decreasing)
    // enumeration of {s : omega(s) <= M}; errors when that set is not
    // certified infinite
    static Sequence enum_le(const Weight& w, Rat M);
    // Calkin-Wilf-order enumeration of the rationals in (a, b)
    static Sequence rationals_in(const Semigroup& sg, Rat a, Rat b);
    static Sequence explicit_list(const Semigroup& sg, std::vector<Point> points,
                                  std::optional<Rat> tail_step = std::nullopt);

    Kind kind() const;
    const Semigroup& semigroup() const;
    Point at(std::size_t i) const; // 0-based
    std::vector<Point> prefix(std::size_t n) const;
    bool contains(const Point& s) const; // membership in the range

    // spec parameters for serialization
    const Rat& param_a() const;
    const Rat& param_b() const;
    std::optional<Rat> enum_bound() const;
    const std::vector<Point>& explicit_points() const;
    std::optional<Rat> tail_step() const;

    std::string describe() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    explicit Sequence(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
};

} // namespace slalg

#endif
