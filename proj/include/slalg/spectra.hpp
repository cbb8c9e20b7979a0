#ifndef SLALG_SPECTRA_HPP
#define SLALG_SPECTRA_HPP

#include <vector>

#include "slalg/functional.hpp"

namespace slalg {

// Semicharacter of a totally ordered semilattice: the indicator of an
// upward-closed set, recorded by its least element (or a cut for posrat-min).
struct Semicharacter {
    Point threshold;
    bool cut_open = false; // posrat-min cuts: true = {s : s > threshold}

    bool eval(const Point& s) const { return cut_open ? s > threshold : s >= threshold; }
};

// phi_k as a functional and its direct application.
Functional phi_k_functional(const Point& k);
Rat phi_k_apply(const Point& k, const Element& a);

// Gel'fand transform on nat-min: values at the first K thresholds 1..K.
std::vector<std::pair<Point, Rat>> gelfand(const Element& a, int K);

// Brute force over all {0,1} assignments on the truncation (n <= 20):
// keeps the nonzero multiplicative ones and checks they are exactly the n
// threshold characters.
std::vector<Semicharacter> enumerate_characters(const Truncation& tr, const Weight& w);

struct DensityApprox {
    // mu^(n) = sum_{i<=n} lambda(i) (phi_i - phi_{i+1})
    std::vector<std::pair<Point, Rat>> combination; // (threshold i, coefficient lambda(i))
    Value residual;                                 // ||lambda - mu^(n)||'_omega
};

// The L(D_omega) density computation behind the unique-predual result.
DensityApprox predual_density_approx(const Functional& l, const Weight& w, int n);

} // namespace slalg

#endif
