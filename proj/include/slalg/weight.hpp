#ifndef SLALG_WEIGHT_HPP
#define SLALG_WEIGHT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slalg/core.hpp"
#include "slalg/value.hpp"

namespace slalg {

// ---------------------------------------------------------------------------
// Expression AST
// ---------------------------------------------------------------------------

enum class ExprKind { Const, Var, AbsVar, Add, Sub, Mul, Div, Pow, Exp, Log, Max, Min };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind;
    Rat value;    // Const
    Rat exponent; // Pow
    ExprPtr a;
    ExprPtr b;
};

ExprPtr make_const(Rat c);
ExprPtr make_var();
ExprPtr make_absvar();
ExprPtr make_unary(ExprKind k, ExprPtr a);
ExprPtr make_binary(ExprKind k, ExprPtr a, ExprPtr b);
ExprPtr make_pow(ExprPtr base, Rat exponent);

std::string expr_to_string(const Expr& e);

// ---------------------------------------------------------------------------
// Piece intervals
// ---------------------------------------------------------------------------

struct Bound {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    Rat value;
    bool closed = false; // meaningful only for Finite

    static Bound neg_inf() { return {Kind::NegInf, Rat(0), false}; }
    static Bound pos_inf() { return {Kind::PosInf, Rat(0), false}; }
    static Bound finite(Rat v, bool closed) { return {Kind::Finite, std::move(v), closed}; }
};

struct PieceInterval {
    Bound lo;
    Bound hi;

    bool contains(const Rat& x) const;
    bool unbounded_above() const { return hi.kind == Bound::Kind::PosInf; }
    bool unbounded_below() const { return lo.kind == Bound::Kind::NegInf; }
    std::string to_string() const;
};

struct Piece {
    PieceInterval interval;
    ExprPtr expr;
};

// ---------------------------------------------------------------------------
// Weight
// ---------------------------------------------------------------------------

struct ParseOptions {
    // NatPlus submultiplicativity is checked exhaustively on s,t <= this bound.
    long submult_grid_bound = 100;
    // Per-piece sample count used when neither the range nor monotonicity
    // analysis certifies the weight condition.
    int validity_samples = 256;
};

class Weight {
public:
    static Weight parse(const std::string& text, const Semigroup& sg, const ParseOptions& opts = {});

    const Semigroup& semigroup() const { return sg_; }
    const std::string& source() const { return source_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    // Exact where the AST stays rational-closed at s, enclosure otherwise.
    Value eval(const Point& s) const;
    // nullopt when the value is not rational-closed at s.
    std::optional<Rat> eval_exact(const Point& s) const;
    // ModeError when an exact pipeline asked for a non-rational value.
    Rat eval_exact_or_throw(const Point& s) const;

    const Piece& piece_at(const Point& s) const;

private:
    Weight(Semigroup sg, std::string source, std::vector<Piece> pieces)
        : sg_(sg), source_(std::move(source)), pieces_(std::move(pieces)) {}

    Semigroup sg_;
    std::string source_;
    std::vector<Piece> pieces_; // sorted by interval, partitioning the domain

    friend struct WeightAnalysis;
};

// ---------------------------------------------------------------------------
// Limit reports
// ---------------------------------------------------------------------------

struct ExtendedReal {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    Value value;

    static ExtendedReal pos_inf() { return {Kind::PosInf, Value()}; }
    static ExtendedReal neg_inf() { return {Kind::NegInf, Value()}; }
    static ExtendedReal finite(Value v) { return {Kind::Finite, std::move(v)}; }
    bool is_pos_inf() const { return kind == Kind::PosInf; }
    bool is_finite() const { return kind == Kind::Finite; }
    std::string to_string() const;
};

struct LimitReport {
    // Lim_{s->inf} omega(s) = inf in the finite-exception filter sense.
    bool filter_lim_infinite = false;
    // Liminf = inf { M : {s : omega(s) < M} is infinite }; PosInf iff the above.
    ExtendedReal liminf_value;
    // Order limit of omega along points tending to sup S.
    bool order_lim_sup_infinite = false;
    // IntMin only: order limit toward -inf; false for the other semigroups.
    bool order_lim_inf_infinite = false;
    // Present iff some sequence tending to sup S keeps omega <= M.
    std::optional<Rat> bounded_cofinal_bound;
};

// Decides both limit notions by per-piece symbolic tail analysis.
// Throws UndecidableError("undecidable-expression ...") outside the
// eventually-monotone fragment.
LimitReport analyze_limits(const Weight& w);

enum class Tri { True, False, Unknown };

// Is {s in the tail toward sup S (or toward -inf) : omega(s) <= M} infinite?
Tri tail_le_set_infinite(const Weight& w, const Rat& M, bool toward_sup);

// For PosRatMin: a nondegenerate open interval on which omega <= M is
// certified, if the analyzer can find one.
std::optional<std::pair<Rat, Rat>> le_set_interval(const Weight& w, const Rat& M);

// Global sup of omega when certified finite (used as "omega bounded on U by M").
std::optional<Rat> weight_upper_bound(const Weight& w);

// Certified "omega(t) >= v for every t >= from in S".
Tri certified_tail_ge(const Weight& w, const Point& from, const Rat& v);

// Omega(s,t) = omega(st) / (omega(s) omega(t)).
Value omega_fn(const Weight& w, const Point& s, const Point& t);

} // namespace slalg

#endif
