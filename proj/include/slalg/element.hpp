#ifndef SLALG_ELEMENT_HPP
#define SLALG_ELEMENT_HPP

#include <vector>

#include "slalg/core.hpp"
#include "slalg/value.hpp"
#include "slalg/weight.hpp"

namespace slalg {

// Exact pipelines and float pipelines never mix; an element carries its mode
// and binary operations reject mismatches. Float-mode coefficients are the
// dyadic rationals of their double approximations, so the arithmetic below is
// shared; only provenance and formatting differ.
enum class Mode { Exact, Float };

struct Term {
    Point point;
    Rat coeff; // nonzero
};

// Finite-support formal sum over the semigroup, sorted by point.
class Element {
public:
    explicit Element(Semigroup sg, Mode mode = Mode::Exact) : sg_(sg), mode_(mode) {}

    static Element from_terms(Semigroup sg, std::vector<std::pair<Point, Rat>> terms,
                              Mode mode = Mode::Exact);

    const Semigroup& semigroup() const { return sg_; }
    Mode mode() const { return mode_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    Rat coeff(const Point& s) const;
    const Point& max_support() const;
    const Point& min_support() const;

    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Rat& c, const Element& a);
    friend Element convolve(const Element& a, const Element& b);

    std::string to_string() const;

private:
    Semigroup sg_;
    Mode mode_;
    std::vector<Term> terms_;
};

Element delta(const Semigroup& sg, const Point& s);

// delta_s / omega(s); exact mode requires a rational weight value at s,
// otherwise request Mode::Float (the coefficient is a certified double
// approximation) or receive a ModeError.
Element delta_tilde(const Semigroup& sg, const Point& s, const Weight& w, Mode mode = Mode::Exact);

// Convolution: suffix-sum closed form over the merged support for the min
// semilattices (O((n+m) log(n+m)) including the merge), generic double loop
// for NatPlus. Exactly equals the bilinear extension of delta_s * delta_t.
Element convolve(const Element& a, const Element& b);

// ||a||_omega = sum |a(s)| omega(s); exact when omega is rational on supp a.
Value norm(const Element& a, const Weight& w);

// ||a||_1
Rat norm1(const Element& a);

// theta_omega: coefficientwise division by omega; isometric from l1 onto
// l1(S, omega). Exact mode only.
Element theta_omega(const Element& a, const Weight& w);
Element theta_omega_inverse(const Element& a, const Weight& w);

} // namespace slalg

#endif
