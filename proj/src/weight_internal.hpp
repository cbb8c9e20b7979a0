#ifndef SLALG_WEIGHT_INTERNAL_HPP
#define SLALG_WEIGHT_INTERNAL_HPP

#include <optional>

#include "slalg/poly.hpp"
#include "slalg/weight.hpp"

namespace slalg::detail {

// ---------------------------------------------------------------------------
// Range-and-monotonicity analysis over an interval
// ---------------------------------------------------------------------------

enum class Mono { Inc, Dec, Const, Unknown };

// Sound enclosure of the values of an expression over an interval; bounds
// need not be attained. NegInf/PosInf double as "unknown in that direction".
struct ERange {
    ExtendedReal lo;
    ExtendedReal hi;
    Mono mono = Mono::Unknown;
};

ERange range_on(const Expr& e, const PieceInterval& iv);

// Certified bound tests on range endpoints (Unknown when the enclosure
// cannot certify either way).
Tri range_lo_ge(const ERange& r, const Rat& v);
Tri range_hi_le(const ERange& r, const Rat& v);

// ---------------------------------------------------------------------------
// Tail analysis toward an infinite end
// ---------------------------------------------------------------------------

enum class Dir { PlusInf, MinusInf };

// Asymptotic scale of |f|: log|f(n)| ~ e*n + sub_c*n^sub_q + p*log n + l*loglog n,
// one `super` level above/below every representable scale for exp(super-linear)
// arguments. `lead` is the constant factor once the scale is stripped.
struct Growth {
    bool valid = false;
    int super = 0;   // -1, 0, +1
    Rat e{0};
    Rat sub_c{0};
    Rat sub_q{0};
    Rat p{0};
    Rat l{0};
    int lead_sign = 0; // sign of f eventually; 0 = unknown
    bool lead_known = false;
    Value lead;

    bool scale_is_zero() const {
        return super == 0 && e == 0 && sub_c == 0 && p == 0 && l == 0;
    }
    bool scale_positive() const; // |f| -> inf
    bool scale_negative() const; // |f| -> 0
};

enum class Approach { FromBelow, FromAbove, Equal, Unknown };

struct TailInfo {
    bool undetermined = true;
    ExtendedReal limit;
    Approach approach = Approach::Unknown;
    Growth growth;
    std::optional<RatFn> ratfn;
};

TailInfo tail_info(const ExprPtr& e, Dir dir);

// Exact rational-function normal form in u -> +inf (the direction is folded
// into the leaves), when the expression lies in that fragment.
std::optional<RatFn> to_ratfn(const ExprPtr& e, Dir dir);

// Tail classification of an already-normalized rational function.
TailInfo tail_of_ratfn(const RatFn& rf);

// ---------------------------------------------------------------------------
// Evaluation on raw rationals (domain membership not required)
// ---------------------------------------------------------------------------

std::optional<Rat> eval_exact_expr(const Expr& e, const Rat& x);
FloatInterval eval_interval_expr(const Expr& e, const FloatInterval& x);
Value eval_expr(const Expr& e, const Rat& x);

// Weight-condition validation; throws ValidityError / UndecidableError.
void validate_weight(const Weight& w, const ParseOptions& opts);

} // namespace slalg::detail

#endif
