#ifndef SLALG_POLY_HPP
#define SLALG_POLY_HPP

#include <optional>
#include <vector>

#include "slalg/rational.hpp"

namespace slalg {

// Dense univariate polynomial with exact rational coefficients; coeffs[i] is
// the coefficient of u^i. Used by the tail analyzer to put the exp/log-free
// fragment of a weight expression into an exact normal form.
struct Poly {
    std::vector<Rat> coeffs;

    Poly() = default;
    explicit Poly(Rat c) : coeffs{std::move(c)} { trim(); }
    static Poly var() { return Poly::from({Rat(0), Rat(1)}); }
    static Poly from(std::vector<Rat> cs) {
        Poly p;
        p.coeffs = std::move(cs);
        p.trim();
        return p;
    }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; } // -1 for zero
    const Rat& lead() const { return coeffs.back(); }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (coeffs.size() <= 1) return Poly();
        std::vector<Rat> d(coeffs.size() - 1);
        for (std::size_t i = 1; i < coeffs.size(); ++i) d[i - 1] = coeffs[i] * Rat(static_cast<long>(i));
        return Poly::from(std::move(d));
    }

    // All real roots lie in (-B, B) with B = 1 + max |c_i / c_lead|.
    Rat root_bound() const {
        if (is_zero() || degree() == 0) return Rat(0);
        Rat m(0);
        for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
            Rat r = rat_abs(coeffs[i] / lead());
            if (r > m) m = r;
        }
        return m + 1;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> c(std::max(a.coeffs.size(), b.coeffs.size()), Rat(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
        return Poly::from(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> c(std::max(a.coeffs.size(), b.coeffs.size()), Rat(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
        return Poly::from(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> c(a.coeffs.size() + b.coeffs.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
        return Poly::from(std::move(c));
    }
};

// Exact rational function num/den (den not the zero polynomial). Kept
// unreduced; only leading-term data is consumed downstream.
struct RatFn {
    Poly num;
    Poly den;

    RatFn() : num(), den(Rat(1)) {}
    explicit RatFn(Poly n) : num(std::move(n)), den(Rat(1)) {}
    RatFn(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {}

    bool is_zero() const { return num.is_zero(); }
    // degree of the function at infinity
    long inf_degree() const { return num.degree() - den.degree(); }
    Rat lead_ratio() const { return num.lead() / den.lead(); }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend RatFn operator*(const RatFn& a, const RatFn& b) { return {a.num * b.num, a.den * b.den}; }
    friend RatFn operator/(const RatFn& a, const RatFn& b) { return {a.num * b.den, a.den * b.num}; }

    std::optional<Rat> eval(const Rat& x) const {
        Rat d = den.eval(x);
        if (d == 0) return std::nullopt;
        return num.eval(x) / d;
    }
};

} // namespace slalg

#endif
