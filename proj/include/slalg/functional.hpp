#ifndef SLALG_FUNCTIONAL_HPP
#define SLALG_FUNCTIONAL_HPP

#include <map>
#include <optional>
#include <vector>

#include "slalg/element.hpp"
#include "slalg/sequence.hpp"

namespace slalg {

// Symbolic subsets of S used inside functionals and witness constructions.
struct SetSpec {
    enum class Kind { Interval, Parity, Explicit, SequenceRange };
    Kind kind = Kind::Explicit;
    PieceInterval interval{};
    bool even = true;
    std::vector<Point> points;
    std::optional<Sequence> seq;

    static SetSpec make_interval(PieceInterval iv);
    static SetSpec parity(bool even);
    static SetSpec explicit_set(std::vector<Point> pts);
    static SetSpec sequence_range(Sequence s);

    bool contains(const Semigroup& sg, const Point& s) const;
    Tri finite(const Semigroup& sg) const;
    // ascending members >= from; throws when the window is exhausted first
    std::vector<Point> enumerate_from(const Semigroup& sg, const Point& from, std::size_t count,
                                      long scan_cap = 1'000'000) const;
    std::string describe() const;
};

// Symbolic member of linf(S, 1/omega). Every form has a finite dual norm by
// construction. Table entries are exact; points absent from the map are 0
// below the largest key and take the tail value beyond it.
class Functional {
public:
    enum class Form { CharTimesOmega, Indicator, PhiK, PhiOmega, Table };
    enum class Tail { Zero, Const };

    static Functional char_times_omega(SetSpec set);
    static Functional indicator(std::vector<Point> pts);
    static Functional phi_k(Point k);
    // lambda(s) = 1/omega(s); an optional override expression g gives
    // lambda(s) = 1/g(s) (g parsed with the weight grammar)
    static Functional phi_omega(std::optional<Weight> override_expr = std::nullopt);
    static Functional table(std::map<Rat, Rat> entries, Tail tail, Rat tail_const = Rat(0));

    Form form() const { return form_; }
    const SetSpec& set() const { return set_; }
    const Point& threshold() const { return k_; }
    const std::map<Rat, Rat>& entries() const { return entries_; }
    Tail tail() const { return tail_; }
    const Rat& tail_const() const { return tail_const_; }
    const std::optional<Weight>& phi_weight() const { return phi_weight_; }
    const std::optional<Point>& window_from() const { return window_from_; }

    // lambda(s)
    Value eval(const Point& s, const Weight& w) const;

    std::string describe() const;

private:
    Form form_ = Form::Indicator;
    SetSpec set_;
    Point k_;
    std::map<Rat, Rat> entries_;
    Tail tail_ = Tail::Zero;
    Rat tail_const_{0};
    std::optional<Weight> phi_weight_;
    std::optional<Point> window_from_; // generic windowed tables: undefined below

    friend Functional module_action(const Point& s, const Functional& l, const Weight& w,
                                    std::optional<Point> window_lo);
};

// <a, lambda> = sum_s a(s) lambda(s); exact in the exact pipeline.
Value pair_with(const Element& a, const Functional& l, const Weight& w);

// delta_s . lambda, i.e. (delta_s . lambda)(r) = lambda(op(r, s)).
// Min semilattices stay inside the symbolic forms except where the part of
// the dual below s is infinite (IntMin / PosRatMin); those return a table
// over [window_lo, inf) with an explicit window bound.
Functional module_action(const Point& s, const Functional& l, const Weight& w,
                         std::optional<Point> window_lo = std::nullopt);

enum class Membership { Member, NotMember, Undetermined };

struct MembershipResult {
    Membership verdict = Membership::Undetermined;
    long window = 0; // points examined when the verdict is Undetermined
};

// Does lim_{s->inf} |lambda(s)|/omega(s) = 0 in the filter sense?
MembershipResult e_omega_membership(const Functional& l, const Weight& w);

struct WitnessReport {
    std::vector<Point> support;       // s_1 < s_2 < ... inside U with op(s_i, t) = u
    std::vector<Value> alpha_pairing; // <alpha^(n), lambda>, n = 1..n_max
    std::vector<Value> conv_pairing;  // |<alpha^(n) * delta_t, lambda>|
    Rat bound_m;                      // omega <= M on U
    Value separation;                 // (1/M) |<delta_u, lambda>|
    bool tends_to_zero = false;
    bool stays_separated = false;
};

// The sigma(A_omega, E_omega)-discontinuity witness: alpha^(n) -> 0 weakly
// while alpha^(n) * delta_t stays away from 0.
WitnessReport non_submodule_witness(const Weight& w, const SetSpec& U, const Point& t,
                                    const Point& u, int n_max,
                                    std::optional<Functional> lambda = std::nullopt);

struct CompactnessRow {
    Value residual;
    Value norm_f;
    double ratio;
};

struct CompactnessReport {
    Rat m;                 // max omega over xS
    std::size_t g_size;    // |G| within the window
    Point f_max;           // max of F = xG
    double bound;          // sup M/omega(t) over the window outside G
    std::vector<CompactnessRow> rows;
    bool all_within_eps = true;
};

// Finite-rank approximation residuals for L_{delta_x} on a window.
CompactnessReport compactness_probe(const Point& x, const Weight& w, const Truncation& window,
                                    const Rat& eps, int n_random = 16, unsigned seed = 12345);

} // namespace slalg

#endif
