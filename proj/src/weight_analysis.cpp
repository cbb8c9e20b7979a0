#include <algorithm>
#include <vector>

#include "weight_internal.hpp"

namespace slalg::detail {

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

std::optional<Rat> eval_exact_expr(const Expr& e, const Rat& x) {
    switch (e.kind) {
        case ExprKind::Const: return e.value;
        case ExprKind::Var: return x;
        case ExprKind::AbsVar: return rat_abs(x);
        case ExprKind::Add: {
            auto a = eval_exact_expr(*e.a, x), b = eval_exact_expr(*e.b, x);
            if (!a || !b) return std::nullopt;
            return Rat(*a + *b);
        }
        case ExprKind::Sub: {
            auto a = eval_exact_expr(*e.a, x), b = eval_exact_expr(*e.b, x);
            if (!a || !b) return std::nullopt;
            return Rat(*a - *b);
        }
        case ExprKind::Mul: {
            auto a = eval_exact_expr(*e.a, x), b = eval_exact_expr(*e.b, x);
            if (!a || !b) return std::nullopt;
            return Rat(*a * *b);
        }
        case ExprKind::Div: {
            auto a = eval_exact_expr(*e.a, x), b = eval_exact_expr(*e.b, x);
            if (!a || !b) return std::nullopt;
            if (*b == 0) throw DomainError("weight expression divides by zero at s = " + rat_to_string(x));
            return Rat(*a / *b);
        }
        case ExprKind::Pow: {
            auto a = eval_exact_expr(*e.a, x);
            if (!a) return std::nullopt;
            if (is_integer(e.exponent)) return pow_int(*a, e.exponent.get_num().get_si());
            if (*a < 0) throw DomainError("fractional power of a negative value at s = " + rat_to_string(x));
            Rat base = pow_int(*a, e.exponent.get_num().get_si());
            return exact_root(base, e.exponent.get_den().get_ui());
        }
        case ExprKind::Exp: {
            auto a = eval_exact_expr(*e.a, x);
            if (a && *a == 0) return Rat(1);
            return std::nullopt;
        }
        case ExprKind::Log: {
            auto a = eval_exact_expr(*e.a, x);
            if (a && *a <= 0) throw DomainError("log of a nonpositive value at s = " + rat_to_string(x));
            if (a && *a == 1) return Rat(0);
            return std::nullopt;
        }
        case ExprKind::Max: {
            auto a = eval_exact_expr(*e.a, x), b = eval_exact_expr(*e.b, x);
            if (!a || !b) return std::nullopt;
            return std::max(*a, *b);
        }
        case ExprKind::Min: {
            auto a = eval_exact_expr(*e.a, x), b = eval_exact_expr(*e.b, x);
            if (!a || !b) return std::nullopt;
            return std::min(*a, *b);
        }
    }
    return std::nullopt;
}

FloatInterval eval_interval_expr(const Expr& e, const FloatInterval& x) {
    switch (e.kind) {
        case ExprKind::Const: return FloatInterval(e.value);
        case ExprKind::Var: return x;
        case ExprKind::AbsVar: return x.abs();
        case ExprKind::Add: return eval_interval_expr(*e.a, x) + eval_interval_expr(*e.b, x);
        case ExprKind::Sub: return eval_interval_expr(*e.a, x) - eval_interval_expr(*e.b, x);
        case ExprKind::Mul: return eval_interval_expr(*e.a, x) * eval_interval_expr(*e.b, x);
        case ExprKind::Div: return eval_interval_expr(*e.a, x) / eval_interval_expr(*e.b, x);
        case ExprKind::Pow: return eval_interval_expr(*e.a, x).pow(e.exponent);
        case ExprKind::Exp: return eval_interval_expr(*e.a, x).exp();
        case ExprKind::Log: return eval_interval_expr(*e.a, x).log();
        case ExprKind::Max:
            return FloatInterval::max(eval_interval_expr(*e.a, x), eval_interval_expr(*e.b, x));
        case ExprKind::Min:
            return FloatInterval::min(eval_interval_expr(*e.a, x), eval_interval_expr(*e.b, x));
    }
    throw Error("unreachable expr kind");
}

Value eval_expr(const Expr& e, const Rat& x) {
    if (auto r = eval_exact_expr(e, x)) return Value(*r);
    return Value(eval_interval_expr(e, FloatInterval(x)));
}

// ---------------------------------------------------------------------------
// Extended-real helpers
// ---------------------------------------------------------------------------

namespace {

using ER = ExtendedReal;

Tri val_ge(const Value& v, const Rat& q) {
    if (v.is_exact()) return v.exact() >= q ? Tri::True : Tri::False;
    if (v.interval().certainly_ge(q)) return Tri::True;
    if (v.interval().certainly_lt(q)) return Tri::False;
    return Tri::Unknown;
}

Tri val_le(const Value& v, const Rat& q) {
    if (v.is_exact()) return v.exact() <= q ? Tri::True : Tri::False;
    if (v.interval().certainly_le(q)) return Tri::True;
    if (v.interval().certainly_gt(q)) return Tri::False;
    return Tri::Unknown;
}

// sign with 0 meaning "zero or unknown"; `exactly_zero` disambiguates
int val_sign(const Value& v) {
    if (v.is_exact()) return v.exact() > 0 ? 1 : v.exact() < 0 ? -1 : 0;
    return v.interval().sign();
}

bool val_exactly_zero(const Value& v) { return v.is_exact() && v.exact() == 0; }

Value val_min(const Value& a, const Value& b) {
    if (a.is_exact() && b.is_exact()) return Value(std::min(a.exact(), b.exact()));
    return Value(FloatInterval::min(a.widen(), b.widen()));
}

Value val_max(const Value& a, const Value& b) {
    if (a.is_exact() && b.is_exact()) return Value(std::max(a.exact(), b.exact()));
    return Value(FloatInterval::max(a.widen(), b.widen()));
}

Value val_pow(const Value& v, const Rat& q) {
    if (v.is_exact()) {
        if (is_integer(q)) return Value(pow_int(v.exact(), q.get_num().get_si()));
        if (v.exact() >= 0) {
            Rat base = pow_int(v.exact(), q.get_num().get_si());
            if (auto r = exact_root(base, q.get_den().get_ui())) return Value(*r);
        }
    }
    return Value(v.widen().pow(q));
}

Value val_exp(const Value& v) {
    if (v.is_exact() && v.exact() == 0) return Value(Rat(1));
    return Value(v.widen().exp());
}

Value val_log(const Value& v) {
    if (v.is_exact() && v.exact() == 1) return Value(Rat(0));
    return Value(v.widen().log());
}

ER er_min(const ER& a, const ER& b) {
    if (a.kind == ER::Kind::NegInf || b.kind == ER::Kind::NegInf) return ER::neg_inf();
    if (a.kind == ER::Kind::PosInf) return b;
    if (b.kind == ER::Kind::PosInf) return a;
    return ER::finite(val_min(a.value, b.value));
}

ER er_max(const ER& a, const ER& b) {
    if (a.kind == ER::Kind::PosInf || b.kind == ER::Kind::PosInf) return ER::pos_inf();
    if (a.kind == ER::Kind::NegInf) return b;
    if (b.kind == ER::Kind::NegInf) return a;
    return ER::finite(val_max(a.value, b.value));
}

ER er_add(const ER& a, const ER& b, bool lower_slot) {
    if (a.kind == ER::Kind::Finite && b.kind == ER::Kind::Finite)
        return ER::finite(a.value + b.value);
    // mixed infinities in a bound slot: widen toward the slot's direction
    bool has_neg = a.kind == ER::Kind::NegInf || b.kind == ER::Kind::NegInf;
    bool has_pos = a.kind == ER::Kind::PosInf || b.kind == ER::Kind::PosInf;
    if (has_neg && has_pos) return lower_slot ? ER::neg_inf() : ER::pos_inf();
    return has_neg ? ER::neg_inf() : ER::pos_inf();
}

ER er_neg(const ER& a) {
    switch (a.kind) {
        case ER::Kind::NegInf: return ER::pos_inf();
        case ER::Kind::PosInf: return ER::neg_inf();
        case ER::Kind::Finite: return ER::finite(-a.value);
    }
    return a;
}

// nullopt = indeterminate (0 * inf or unknown sign)
std::optional<ER> er_mul(const ER& a, const ER& b) {
    if (a.kind == ER::Kind::Finite && b.kind == ER::Kind::Finite)
        return ER::finite(a.value * b.value);
    const ER& inf = a.kind == ER::Kind::Finite ? b : a;
    const ER& oth = a.kind == ER::Kind::Finite ? a : b;
    int inf_sign = inf.kind == ER::Kind::PosInf ? 1 : -1;
    int oth_sign;
    if (oth.kind == ER::Kind::PosInf) oth_sign = 1;
    else if (oth.kind == ER::Kind::NegInf) oth_sign = -1;
    else {
        oth_sign = val_sign(oth.value);
        if (oth_sign == 0) return std::nullopt;
    }
    return inf_sign * oth_sign > 0 ? ER::pos_inf() : ER::neg_inf();
}

Tri er_ge(const ER& a, const Rat& q) {
    if (a.kind == ER::Kind::PosInf) return Tri::True;
    if (a.kind == ER::Kind::NegInf) return Tri::Unknown; // "no certificate"
    return val_ge(a.value, q);
}

Tri er_le(const ER& a, const Rat& q) {
    if (a.kind == ER::Kind::NegInf) return Tri::Unknown;
    if (a.kind == ER::Kind::PosInf) return Tri::Unknown;
    return val_le(a.value, q);
}

} // namespace

// ---------------------------------------------------------------------------
// Range-and-monotonicity analysis
// ---------------------------------------------------------------------------

Tri range_lo_ge(const ERange& r, const Rat& v) { return er_ge(r.lo, v); }
Tri range_hi_le(const ERange& r, const Rat& v) { return er_le(r.hi, v); }

namespace {

Mono mono_neg(Mono m) {
    if (m == Mono::Inc) return Mono::Dec;
    if (m == Mono::Dec) return Mono::Inc;
    return m;
}

Mono mono_add(Mono a, Mono b) {
    if (a == Mono::Const) return b;
    if (b == Mono::Const) return a;
    if (a == b && a != Mono::Unknown) return a;
    return Mono::Unknown;
}

ERange full_range() {
    return {ER::neg_inf(), ER::pos_inf(), Mono::Unknown};
}

ERange range_neg(const ERange& r) { return {er_neg(r.hi), er_neg(r.lo), mono_neg(r.mono)}; }

ERange range_mul(const ERange& A, const ERange& B) {
    std::optional<ER> c1 = er_mul(A.lo, B.lo);
    std::optional<ER> c2 = er_mul(A.lo, B.hi);
    std::optional<ER> c3 = er_mul(A.hi, B.lo);
    std::optional<ER> c4 = er_mul(A.hi, B.hi);
    ERange r = full_range();
    if (c1 && c2 && c3 && c4) {
        r.lo = er_min(er_min(*c1, *c2), er_min(*c3, *c4));
        r.hi = er_max(er_max(*c1, *c2), er_max(*c3, *c4));
    }
    // monotonicity: sign-definite factors only
    Tri a_nonneg = er_ge(A.lo, Rat(0)), a_nonpos = er_le(A.hi, Rat(0));
    Tri b_nonneg = er_ge(B.lo, Rat(0)), b_nonpos = er_le(B.hi, Rat(0));
    Mono m = Mono::Unknown;
    if (A.mono == Mono::Const && B.mono == Mono::Const) m = Mono::Const;
    else if (A.mono == Mono::Const) {
        int s = a_nonneg == Tri::True ? 1 : a_nonpos == Tri::True ? -1 : 0;
        m = s == 1 ? B.mono : s == -1 ? mono_neg(B.mono) : Mono::Unknown;
    } else if (B.mono == Mono::Const) {
        int s = b_nonneg == Tri::True ? 1 : b_nonpos == Tri::True ? -1 : 0;
        m = s == 1 ? A.mono : s == -1 ? mono_neg(A.mono) : Mono::Unknown;
    } else if (a_nonneg == Tri::True && b_nonneg == Tri::True) {
        if (A.mono == Mono::Inc && B.mono == Mono::Inc) m = Mono::Inc;
        if (A.mono == Mono::Dec && B.mono == Mono::Dec) m = Mono::Dec;
    } else if (a_nonpos == Tri::True && b_nonpos == Tri::True) {
        if (A.mono == Mono::Inc && B.mono == Mono::Inc) m = Mono::Dec;
        if (A.mono == Mono::Dec && B.mono == Mono::Dec) m = Mono::Inc;
    }
    r.mono = m;
    return r;
}

ERange range_recip(const ERange& A) {
    // requires sign-definite A
    Tri pos = er_ge(A.lo, Rat(0));
    Tri neg = er_le(A.hi, Rat(0));
    bool strictly_pos = pos == Tri::True &&
                        (A.lo.kind == ER::Kind::PosInf ||
                         (A.lo.kind == ER::Kind::Finite && val_sign(A.lo.value) > 0));
    bool strictly_neg = neg == Tri::True &&
                        (A.hi.kind == ER::Kind::NegInf ||
                         (A.hi.kind == ER::Kind::Finite && val_sign(A.hi.value) < 0));
    if (!strictly_pos && !strictly_neg) return full_range();
    auto recip = [](const ER& x) -> ER {
        if (x.kind == ER::Kind::PosInf || x.kind == ER::Kind::NegInf)
            return ER::finite(Value(Rat(0)));
        return ER::finite(Value(Rat(1)) / x.value);
    };
    ERange r;
    r.lo = recip(A.hi);
    r.hi = recip(A.lo);
    r.mono = mono_neg(A.mono);
    return r;
}

ERange range_abs(const ERange& A) {
    Tri nonneg = er_ge(A.lo, Rat(0));
    Tri nonpos = er_le(A.hi, Rat(0));
    if (nonneg == Tri::True) return A;
    if (nonpos == Tri::True) return range_neg(A);
    ER m = er_max(A.hi, er_neg(A.lo));
    return {ER::finite(Value(Rat(0))), m, Mono::Unknown};
}

ER er_pow(const ER& x, const Rat& q) {
    if (x.kind == ER::Kind::PosInf) {
        if (q > 0) return ER::pos_inf();
        return ER::finite(Value(Rat(0)));
    }
    if (x.kind == ER::Kind::NegInf) {
        if (is_integer(q) && q > 0)
            return mpz_even_p(q.get_num().get_mpz_t()) ? ER::pos_inf() : ER::neg_inf();
        return ER::finite(Value(Rat(0))); // not used for fractional q on negatives
    }
    return ER::finite(val_pow(x.value, q));
}

} // namespace

ERange range_on(const Expr& e, const PieceInterval& iv) {
    switch (e.kind) {
        case ExprKind::Const:
            return {ER::finite(Value(e.value)), ER::finite(Value(e.value)), Mono::Const};
        case ExprKind::Var: {
            ER lo = iv.lo.kind == Bound::Kind::Finite ? ER::finite(Value(iv.lo.value)) : ER::neg_inf();
            ER hi = iv.hi.kind == Bound::Kind::Finite ? ER::finite(Value(iv.hi.value)) : ER::pos_inf();
            return {lo, hi, Mono::Inc};
        }
        case ExprKind::AbsVar: {
            ER lo = iv.lo.kind == Bound::Kind::Finite ? ER::finite(Value(iv.lo.value)) : ER::neg_inf();
            ER hi = iv.hi.kind == Bound::Kind::Finite ? ER::finite(Value(iv.hi.value)) : ER::pos_inf();
            ERange var{lo, hi, Mono::Inc};
            return range_abs(var);
        }
        case ExprKind::Add: {
            ERange A = range_on(*e.a, iv), B = range_on(*e.b, iv);
            return {er_add(A.lo, B.lo, true), er_add(A.hi, B.hi, false), mono_add(A.mono, B.mono)};
        }
        case ExprKind::Sub: {
            ERange A = range_on(*e.a, iv), B = range_neg(range_on(*e.b, iv));
            return {er_add(A.lo, B.lo, true), er_add(A.hi, B.hi, false), mono_add(A.mono, B.mono)};
        }
        case ExprKind::Mul:
            return range_mul(range_on(*e.a, iv), range_on(*e.b, iv));
        case ExprKind::Div:
            return range_mul(range_on(*e.a, iv), range_recip(range_on(*e.b, iv)));
        case ExprKind::Pow: {
            ERange A = range_on(*e.a, iv);
            const Rat& q = e.exponent;
            if (q == 0) return {ER::finite(Value(Rat(1))), ER::finite(Value(Rat(1))), Mono::Const};
            bool integer_q = is_integer(q);
            bool odd = integer_q && !mpz_even_p(q.get_num().get_mpz_t());
            Tri nonneg = er_ge(A.lo, Rat(0));
            if (q > 0) {
                if (odd || nonneg == Tri::True) {
                    ERange base = A;
                    if (!odd && nonneg != Tri::True) base = range_abs(A);
                    return {er_pow(base.lo, q), er_pow(base.hi, q), base.mono};
                }
                if (integer_q) { // even power, mixed sign: go through |.|
                    ERange base = range_abs(A);
                    return {er_pow(base.lo, q), er_pow(base.hi, q), base.mono};
                }
                return full_range(); // fractional power of possibly-negative values
            }
            // negative exponent: x^q = 1 / x^(-q)
            ERange p = range_on(*e.a, iv);
            ERange powed{er_pow(p.lo, -q), er_pow(p.hi, -q), p.mono};
            if (er_ge(p.lo, Rat(0)) != Tri::True && !odd) return full_range();
            return range_recip(powed);
        }
        case ExprKind::Exp: {
            ERange A = range_on(*e.a, iv);
            auto ex = [](const ER& x) -> ER {
                if (x.kind == ER::Kind::PosInf) return ER::pos_inf();
                if (x.kind == ER::Kind::NegInf) return ER::finite(Value(Rat(0)));
                return ER::finite(val_exp(x.value));
            };
            return {ex(A.lo), ex(A.hi), A.mono};
        }
        case ExprKind::Log: {
            ERange A = range_on(*e.a, iv);
            bool lo_pos = A.lo.kind == ER::Kind::Finite && val_sign(A.lo.value) > 0;
            if (A.lo.kind == ER::Kind::PosInf) lo_pos = true;
            ER lo = lo_pos ? (A.lo.kind == ER::Kind::PosInf ? ER::pos_inf()
                                                            : ER::finite(val_log(A.lo.value)))
                           : ER::neg_inf();
            ER hi;
            if (A.hi.kind == ER::Kind::PosInf) hi = ER::pos_inf();
            else if (A.hi.kind == ER::Kind::Finite && val_sign(A.hi.value) > 0)
                hi = ER::finite(val_log(A.hi.value));
            else
                hi = ER::pos_inf();
            return {lo, hi, A.mono};
        }
        case ExprKind::Max: {
            ERange A = range_on(*e.a, iv), B = range_on(*e.b, iv);
            Mono m = (A.mono == B.mono || B.mono == Mono::Const) ? A.mono
                     : A.mono == Mono::Const                     ? B.mono
                                                                 : Mono::Unknown;
            if (A.mono == Mono::Unknown || B.mono == Mono::Unknown) m = Mono::Unknown;
            return {er_max(A.lo, B.lo), er_max(A.hi, B.hi), m};
        }
        case ExprKind::Min: {
            ERange A = range_on(*e.a, iv), B = range_on(*e.b, iv);
            Mono m = (A.mono == B.mono || B.mono == Mono::Const) ? A.mono
                     : A.mono == Mono::Const                     ? B.mono
                                                                 : Mono::Unknown;
            if (A.mono == Mono::Unknown || B.mono == Mono::Unknown) m = Mono::Unknown;
            return {er_min(A.lo, B.lo), er_min(A.hi, B.hi), m};
        }
    }
    return full_range();
}

// ---------------------------------------------------------------------------
// Rational-function normal form
// ---------------------------------------------------------------------------

namespace {
constexpr long kDegreeCap = 64;

bool rf_ok(const RatFn& r) {
    return r.num.degree() <= kDegreeCap && r.den.degree() <= kDegreeCap && !r.den.is_zero();
}
} // namespace

std::optional<RatFn> to_ratfn(const ExprPtr& e, Dir dir) {
    switch (e->kind) {
        case ExprKind::Const: return RatFn(Poly(e->value));
        case ExprKind::Var:
            return RatFn(dir == Dir::PlusInf ? Poly::var() : Poly::from({Rat(0), Rat(-1)}));
        case ExprKind::AbsVar: return RatFn(Poly::var());
        case ExprKind::Add: {
            auto a = to_ratfn(e->a, dir), b = to_ratfn(e->b, dir);
            if (!a || !b) return std::nullopt;
            RatFn r = *a + *b;
            return rf_ok(r) ? std::optional<RatFn>(r) : std::nullopt;
        }
        case ExprKind::Sub: {
            auto a = to_ratfn(e->a, dir), b = to_ratfn(e->b, dir);
            if (!a || !b) return std::nullopt;
            RatFn r = *a - *b;
            return rf_ok(r) ? std::optional<RatFn>(r) : std::nullopt;
        }
        case ExprKind::Mul: {
            auto a = to_ratfn(e->a, dir), b = to_ratfn(e->b, dir);
            if (!a || !b) return std::nullopt;
            RatFn r = *a * *b;
            return rf_ok(r) ? std::optional<RatFn>(r) : std::nullopt;
        }
        case ExprKind::Div: {
            auto a = to_ratfn(e->a, dir), b = to_ratfn(e->b, dir);
            if (!a || !b || b->is_zero()) return std::nullopt;
            RatFn r = *a / *b;
            return rf_ok(r) ? std::optional<RatFn>(r) : std::nullopt;
        }
        case ExprKind::Pow: {
            auto a = to_ratfn(e->a, dir);
            if (!a) return std::nullopt;
            const Rat& q = e->exponent;
            if (is_integer(q)) {
                long k = q.get_num().get_si();
                if (k < -kDegreeCap || k > kDegreeCap) return std::nullopt;
                RatFn acc(Poly(Rat(1)));
                for (long i = 0; i < (k < 0 ? -k : k); ++i) {
                    acc = acc * *a;
                    if (!rf_ok(acc)) return std::nullopt;
                }
                if (k < 0) {
                    if (acc.is_zero()) return std::nullopt;
                    acc = RatFn(Poly(Rat(1))) / acc;
                }
                return acc;
            }
            // fractional exponent of an exact constant
            if (a->num.degree() <= 0 && a->den.degree() <= 0) {
                Rat c = a->is_zero() ? Rat(0) : a->lead_ratio();
                if (c < 0) return std::nullopt;
                Rat base = pow_int(c, q.get_num().get_si());
                if (auto root = exact_root(base, q.get_den().get_ui())) return RatFn(Poly(*root));
            }
            return std::nullopt;
        }
        case ExprKind::Exp: {
            auto a = to_ratfn(e->a, dir);
            if (a && a->is_zero()) return RatFn(Poly(Rat(1)));
            return std::nullopt;
        }
        case ExprKind::Log: {
            auto a = to_ratfn(e->a, dir);
            if (a && !a->is_zero() && a->num.degree() <= 0 && a->den.degree() <= 0 &&
                a->lead_ratio() == 1)
                return RatFn(Poly(Rat(0)));
            return std::nullopt;
        }
        case ExprKind::Max:
        case ExprKind::Min: {
            auto a = to_ratfn(e->a, dir), b = to_ratfn(e->b, dir);
            if (!a || !b) return std::nullopt;
            RatFn diff = *a - *b;
            if (diff.is_zero()) return a;
            int sgn = sgn_of(diff.num.lead()) * sgn_of(diff.den.lead());
            bool a_eventually_bigger = sgn > 0;
            if (e->kind == ExprKind::Max) return a_eventually_bigger ? a : b;
            return a_eventually_bigger ? b : a;
        }
    }
    return std::nullopt;

}

// ---------------------------------------------------------------------------
// Growth algebra
// ---------------------------------------------------------------------------

bool Growth::scale_positive() const {
    if (super != 0) return super > 0;
    if (e != 0) return e > 0;
    if (sub_c != 0) return sub_c > 0;
    if (p != 0) return p > 0;
    return l > 0;
}

bool Growth::scale_negative() const {
    if (super != 0) return super < 0;
    if (e != 0) return e < 0;
    if (sub_c != 0) return sub_c < 0;
    if (p != 0) return p < 0;
    return l < 0;
}

namespace {

constexpr int kIncomparable = -9;

// -1/0/+1: scale of a vs scale of b; kIncomparable when not decidable
int cmp_scale(const Growth& a, const Growth& b) {
    if (a.super != b.super) return a.super < b.super ? -1 : 1;
    if (a.super != 0) return kIncomparable; // nested-super detail not tracked
    if (a.e != b.e) return a.e < b.e ? -1 : 1;
    if (a.sub_c != 0 || b.sub_c != 0) {
        if (a.sub_c != 0 && b.sub_c != 0) {
            if (a.sub_q == b.sub_q) {
                if (a.sub_c != b.sub_c) return a.sub_c < b.sub_c ? -1 : 1;
            } else {
                const bool a_higher = a.sub_q > b.sub_q;
                const Rat& c = a_higher ? a.sub_c : b.sub_c;
                int s = c > 0 ? 1 : -1;
                return a_higher ? s : -s;
            }
        } else if (a.sub_c != 0) {
            return a.sub_c > 0 ? 1 : -1;
        } else {
            return b.sub_c > 0 ? -1 : 1;
        }
    }
    if (a.p != b.p) return a.p < b.p ? -1 : 1;
    if (a.l != b.l) return a.l < b.l ? -1 : 1;
    return 0;
}

Growth growth_const(const Value& lead) {
    Growth g;
    g.valid = true;
    g.lead_known = true;
    g.lead = lead;
    g.lead_sign = val_sign(lead);
    return g;
}

Growth growth_invalid() { return Growth{}; }

Growth g_mul(const Growth& a, const Growth& b) {
    if (!a.valid || !b.valid) return growth_invalid();
    Growth r;
    r.valid = true;
    if (a.super != 0 && b.super != 0 && a.super != b.super) return growth_invalid();
    r.super = a.super + b.super;
    if (r.super > 1) r.super = 1;
    if (r.super < -1) r.super = -1;
    r.e = a.e + b.e;
    if (a.sub_c != 0 && b.sub_c != 0) {
        if (a.sub_q != b.sub_q) return growth_invalid();
        r.sub_c = a.sub_c + b.sub_c;
        r.sub_q = r.sub_c == 0 ? Rat(0) : a.sub_q;
    } else if (a.sub_c != 0) {
        r.sub_c = a.sub_c;
        r.sub_q = a.sub_q;
    } else {
        r.sub_c = b.sub_c;
        r.sub_q = b.sub_q;
    }
    r.p = a.p + b.p;
    r.l = a.l + b.l;
    r.lead_sign = a.lead_sign * b.lead_sign;
    if (a.lead_known && b.lead_known) {
        r.lead_known = true;
        r.lead = a.lead * b.lead;
    }
    return r;
}

Growth g_recip(const Growth& a) {
    if (!a.valid) return growth_invalid();
    Growth r = a;
    r.super = -a.super;
    r.e = -a.e;
    r.sub_c = -a.sub_c;
    r.p = -a.p;
    r.l = -a.l;
    r.lead_sign = a.lead_sign;
    if (a.lead_known && val_sign(a.lead) != 0 && !val_exactly_zero(a.lead)) {
        r.lead_known = true;
        r.lead = Value(Rat(1)) / a.lead;
    } else {
        r.lead_known = false;
    }
    return r;
}

Growth g_pow(const Growth& a, const Rat& q) {
    if (!a.valid) return growth_invalid();
    Growth r = a;
    int qs = q > 0 ? 1 : q < 0 ? -1 : 0;
    r.super = a.super * qs;
    r.e = a.e * q;
    r.sub_c = a.sub_c * q;
    r.p = a.p * q;
    r.l = a.l * q;
    if (a.lead_known && (a.lead_sign > 0 || is_integer(q))) {
        r.lead = val_pow(a.lead, q);
        r.lead_known = true;
        r.lead_sign = val_sign(r.lead);
    } else {
        r.lead_known = false;
        r.lead_sign = a.lead_sign > 0 ? 1 : 0;
    }
    return r;
}

Growth g_neg(const Growth& a) {
    if (!a.valid) return growth_invalid();
    Growth r = a;
    r.lead_sign = -a.lead_sign;
    if (a.lead_known) r.lead = -a.lead;
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// Tail analysis
// ---------------------------------------------------------------------------

namespace {

TailInfo undet_tail() { return TailInfo{}; }

TailInfo rf_tail(const RatFn& rf) {
    TailInfo t;
    t.undetermined = false;
    t.ratfn = rf;
    if (rf.is_zero()) {
        t.limit = ER::finite(Value(Rat(0)));
        t.approach = Approach::Equal;
        t.growth = growth_const(Value(Rat(0)));
        return t;
    }
    long d = rf.inf_degree();
    Rat L = rf.lead_ratio();
    if (d > 0) {
        t.limit = L > 0 ? ER::pos_inf() : ER::neg_inf();
        t.growth.valid = true;
        t.growth.p = Rat(d);
        t.growth.lead_known = true;
        t.growth.lead = Value(L);
        t.growth.lead_sign = L > 0 ? 1 : -1;
        t.approach = Approach::Unknown;
        return t;
    }
    if (d == 0) {
        t.limit = ER::finite(Value(L));
        Poly dev = rf.num - Poly(L) * rf.den;
        if (dev.is_zero()) {
            t.approach = Approach::Equal;
        } else {
            int s = sgn_of(dev.lead()) * sgn_of(rf.den.lead());
            t.approach = s > 0 ? Approach::FromAbove : Approach::FromBelow;
        }
        t.growth = growth_const(Value(L));
        return t;
    }
    // d < 0: tends to 0 with sign given by the leading terms
    t.limit = ER::finite(Value(Rat(0)));
    int s = sgn_of(rf.num.lead()) * sgn_of(rf.den.lead());
    t.approach = s > 0 ? Approach::FromAbove : Approach::FromBelow;
    t.growth.valid = true;
    t.growth.p = Rat(d);
    t.growth.lead_known = true;
    t.growth.lead = Value(L);
    t.growth.lead_sign = s;
    return t;
}

TailInfo neg_tail(const TailInfo& a) {
    if (a.undetermined) return a;
    TailInfo r = a;
    r.limit = er_neg(a.limit);
    r.approach = a.approach == Approach::FromAbove   ? Approach::FromBelow
                 : a.approach == Approach::FromBelow ? Approach::FromAbove
                                                     : a.approach;
    r.growth = g_neg(a.growth);
    r.ratfn.reset();
    if (a.ratfn) r.ratfn = RatFn(Poly() - a.ratfn->num, a.ratfn->den);
    return r;
}

// growth of exp(f) given f's tail info and the sign of f's divergence
Growth exp_growth(const TailInfo& f, bool to_plus_inf) {
    const Growth& g = f.growth;
    if (!g.valid) return growth_invalid();
    Growth r;
    r.valid = true;
    r.lead_sign = 1; // exp is positive
    int dir = to_plus_inf ? 1 : -1;
    if (g.super != 0 || g.e != 0 || g.sub_c != 0) {
        // exp of something already exponential: one super level
        r.super = dir;
        return r;
    }
    if (g.p == 1 && g.l == 0) {
        if (!g.lead_known || !g.lead.is_exact()) {
            r.super = 0;
            r.e = dir > 0 ? Rat(1) : Rat(-1); // rate sign known, magnitude not: super-safe fallback
            r.lead_known = false;
            // without the exact rate, same-scale comparisons would lie; mark super instead
            r.super = dir;
            r.e = 0;
            return r;
        }
        r.e = g.lead.exact();
        // constant factor: exp of the remainder when the argument is an exact
        // rational function rate*n + rest
        if (f.ratfn) {
            RatFn rest = *f.ratfn - RatFn(Poly::from({Rat(0), r.e}));
            TailInfo rt = rf_tail(rest);
            if (rt.limit.kind == ER::Kind::Finite) {
                r.lead_known = true;
                r.lead = val_exp(rt.limit.value);
            }
        }
        return r;
    }
    if (g.p > 0 && g.p < 1 && g.l == 0 && g.lead_known && g.lead.is_exact()) {
        r.sub_q = g.p;
        r.sub_c = dir > 0 ? g.lead.exact() : Rat(-g.lead.exact());
        // lead (the exp of the remainder) is not tracked here
        return r;
    }
    // super-linear or log-mixed argument
    r.super = dir;
    return r;
}

Growth log_growth(const Growth& g) {
    if (!g.valid) return growth_invalid();
    Growth r;
    r.valid = true;
    r.lead_sign = 1;
    if (g.super != 0) return growth_invalid();
    if (g.e != 0) {
        r.p = 1;
        r.lead_known = true;
        r.lead = Value(g.e);
        r.lead_sign = 1;
        return r;
    }
    if (g.sub_c != 0) {
        r.p = g.sub_q;
        r.lead_known = true;
        r.lead = Value(g.sub_c);
        return r;
    }
    if (g.p != 0) {
        r.l = 1;
        r.lead_known = true;
        r.lead = Value(g.p);
        return r;
    }
    return growth_invalid(); // log of a bounded quantity is bounded; callers handle
}

TailInfo combine_add(const TailInfo& A, const TailInfo& B) {
    if (A.undetermined || B.undetermined) return undet_tail();
    TailInfo r;
    r.undetermined = false;
    const bool a_fin = A.limit.kind == ER::Kind::Finite;
    const bool b_fin = B.limit.kind == ER::Kind::Finite;
    if (a_fin && b_fin) {
        r.limit = ER::finite(A.limit.value + B.limit.value);
        if (A.approach == Approach::Equal) r.approach = B.approach;
        else if (B.approach == Approach::Equal) r.approach = A.approach;
        else if (A.approach == B.approach) r.approach = A.approach;
        else r.approach = Approach::Unknown;
        r.growth = growth_const(r.limit.value);
        return r;
    }
    if (a_fin) {
        r.limit = B.limit;
        r.growth = B.growth;
        r.approach = Approach::Unknown;
        return r;
    }
    if (b_fin) {
        r.limit = A.limit;
        r.growth = A.growth;
        r.approach = Approach::Unknown;
        return r;
    }
    const bool same_sign = A.limit.kind == B.limit.kind;
    if (!A.growth.valid || !B.growth.valid) {
        if (same_sign) {
            r.limit = A.limit;
            r.approach = Approach::Unknown;
            return r;
        }
        return undet_tail();
    }
    int cmp = cmp_scale(A.growth, B.growth);
    if (cmp == kIncomparable) {
        if (same_sign) {
            r.limit = A.limit;
            return r;
        }
        return undet_tail();
    }
    if (cmp > 0) {
        r.limit = A.limit;
        r.growth = A.growth;
        return r;
    }
    if (cmp < 0) {
        r.limit = B.limit;
        r.growth = B.growth;
        return r;
    }
    // same scale: add leads
    Growth g = A.growth;
    if (A.growth.lead_known && B.growth.lead_known) {
        g.lead = A.growth.lead + B.growth.lead;
        g.lead_known = true;
        g.lead_sign = val_sign(g.lead);
        if (val_exactly_zero(g.lead)) return undet_tail(); // exact cancellation hides lower order
        if (g.lead_sign == 0) return undet_tail();
    } else if (same_sign) {
        g.lead_known = false;
        g.lead_sign = A.limit.kind == ER::Kind::PosInf ? 1 : -1;
    } else {
        return undet_tail();
    }
    r.growth = g;
    r.limit = g.lead_sign > 0 ? ER::pos_inf() : ER::neg_inf();
    return r;
}

TailInfo recip_tail(const TailInfo& A) {
    if (A.undetermined) return undet_tail();
    TailInfo r;
    r.undetermined = false;
    r.growth = g_recip(A.growth);
    if (A.ratfn && !A.ratfn->is_zero()) r.ratfn = RatFn(A.ratfn->den, A.ratfn->num);
    switch (A.limit.kind) {
        case ER::Kind::PosInf:
            r.limit = ER::finite(Value(Rat(0)));
            r.approach = Approach::FromAbove;
            return r;
        case ER::Kind::NegInf:
            r.limit = ER::finite(Value(Rat(0)));
            r.approach = Approach::FromBelow;
            return r;
        case ER::Kind::Finite: {
            const Value& L = A.limit.value;
            if (val_exactly_zero(L) || val_sign(L) == 0) {
                // limit 0 (or sign not certified): 1/f diverges by approach side
                if (!val_exactly_zero(L) && !L.is_exact()) return undet_tail();
                if (A.approach == Approach::FromAbove) {
                    r.limit = ER::pos_inf();
                    return r;
                }
                if (A.approach == Approach::FromBelow) {
                    r.limit = ER::neg_inf();
                    return r;
                }
                return undet_tail();
            }
            r.limit = ER::finite(Value(Rat(1)) / L);
            r.approach = A.approach == Approach::FromAbove   ? Approach::FromBelow
                         : A.approach == Approach::FromBelow ? Approach::FromAbove
                                                             : A.approach;
            return r;
        }
    }
    return undet_tail();
}

TailInfo combine_mul(const TailInfo& A, const TailInfo& B) {
    if (A.undetermined || B.undetermined) return undet_tail();
    TailInfo r;
    r.undetermined = false;
    const bool a_fin = A.limit.kind == ER::Kind::Finite;
    const bool b_fin = B.limit.kind == ER::Kind::Finite;
    if (a_fin && b_fin) {
        r.limit = ER::finite(A.limit.value * B.limit.value);
        r.growth = growth_const(r.limit.value);
        r.approach = Approach::Unknown;
        return r;
    }
    Growth net = g_mul(A.growth, B.growth);
    if (net.valid) {
        if (net.scale_positive()) {
            if (net.lead_sign > 0) r.limit = ER::pos_inf();
            else if (net.lead_sign < 0) r.limit = ER::neg_inf();
            else return undet_tail();
            r.growth = net;
            return r;
        }
        if (net.scale_negative()) {
            r.limit = ER::finite(Value(Rat(0)));
            r.growth = net;
            r.approach = net.lead_sign > 0   ? Approach::FromAbove
                         : net.lead_sign < 0 ? Approach::FromBelow
                                             : Approach::Unknown;
            return r;
        }
        if (net.lead_known) {
            r.limit = ER::finite(net.lead);
            r.growth = net;
            r.approach = Approach::Unknown;
            return r;
        }
        return undet_tail();
    }
    // growth unavailable: only the easy sign cases
    const TailInfo& fin = a_fin ? A : B;
    const TailInfo& inf = a_fin ? B : A;
    if (a_fin != b_fin) {
        int s = val_sign(fin.limit.value);
        if (s == 0) return undet_tail();
        bool pos = (inf.limit.kind == ER::Kind::PosInf) == (s > 0);
        r.limit = pos ? ER::pos_inf() : ER::neg_inf();
        return r;
    }
    bool pos = A.limit.kind == B.limit.kind;
    r.limit = pos ? ER::pos_inf() : ER::neg_inf();
    return r;
}

} // namespace

TailInfo tail_of_ratfn(const RatFn& rf) { return rf_tail(rf); }

TailInfo tail_info(const ExprPtr& e, Dir dir) {
    if (auto rf = to_ratfn(e, dir)) return rf_tail(*rf);
    switch (e->kind) {
        case ExprKind::Const:
        case ExprKind::Var:
        case ExprKind::AbsVar:
            return undet_tail(); // unreachable: always rational functions
        case ExprKind::Add:
            return combine_add(tail_info(e->a, dir), tail_info(e->b, dir));
        case ExprKind::Sub:
            return combine_add(tail_info(e->a, dir), neg_tail(tail_info(e->b, dir)));
        case ExprKind::Mul:
            return combine_mul(tail_info(e->a, dir), tail_info(e->b, dir));
        case ExprKind::Div:
            return combine_mul(tail_info(e->a, dir), recip_tail(tail_info(e->b, dir)));
        case ExprKind::Exp: {
            TailInfo A = tail_info(e->a, dir);
            if (A.undetermined) return undet_tail();
            TailInfo r;
            r.undetermined = false;
            switch (A.limit.kind) {
                case ER::Kind::PosInf:
                    r.limit = ER::pos_inf();
                    r.growth = exp_growth(A, true);
                    return r;
                case ER::Kind::NegInf:
                    r.limit = ER::finite(Value(Rat(0)));
                    r.approach = Approach::FromAbove;
                    r.growth = exp_growth(A, false);
                    return r;
                case ER::Kind::Finite:
                    r.limit = ER::finite(val_exp(A.limit.value));
                    r.approach = A.approach;
                    r.growth = growth_const(r.limit.value);
                    return r;
            }
            return undet_tail();
        }
        case ExprKind::Log: {
            TailInfo A = tail_info(e->a, dir);
            if (A.undetermined) return undet_tail();
            TailInfo r;
            r.undetermined = false;
            if (A.limit.kind == ER::Kind::PosInf) {
                r.limit = ER::pos_inf();
                r.growth = log_growth(A.growth);
                return r;
            }
            if (A.limit.kind == ER::Kind::Finite) {
                const Value& L = A.limit.value;
                bool pos = L.is_exact() ? L.exact() > 0 : L.interval().certainly_gt(Rat(0));
                if (!pos) return undet_tail();
                r.limit = ER::finite(val_log(L));
                r.approach = A.approach;
                r.growth = growth_const(r.limit.value);
                return r;
            }
            return undet_tail();
        }
        case ExprKind::Pow: {
            TailInfo A = tail_info(e->a, dir);
            if (A.undetermined) return undet_tail();
            const Rat& q = e->exponent;
            TailInfo r;
            r.undetermined = false;
            if (A.limit.kind == ER::Kind::PosInf) {
                if (q > 0) {
                    r.limit = ER::pos_inf();
                    r.growth = g_pow(A.growth, q);
                    return r;
                }
                r.limit = ER::finite(Value(Rat(0)));
                r.approach = Approach::FromAbove;
                r.growth = g_pow(A.growth, q);
                return r;
            }
            if (A.limit.kind == ER::Kind::NegInf) {
                if (!is_integer(q)) return undet_tail();
                bool even = mpz_even_p(q.get_num().get_mpz_t());
                if (q > 0) {
                    r.limit = even ? ER::pos_inf() : ER::neg_inf();
                    r.growth = g_pow(A.growth, q);
                    return r;
                }
                r.limit = ER::finite(Value(Rat(0)));
                r.approach = even ? Approach::FromAbove : Approach::FromBelow;
                r.growth = g_pow(A.growth, q);
                return r;
            }
            const Value& L = A.limit.value;
            int s = val_sign(L);
            if (val_exactly_zero(L)) {
                if (A.approach == Approach::FromAbove) {
                    if (q > 0) {
                        r.limit = ER::finite(Value(Rat(0)));
                        r.approach = Approach::FromAbove;
                    } else {
                        r.limit = ER::pos_inf();
                    }
                    r.growth = g_pow(A.growth, q);
                    return r;
                }
                return undet_tail();
            }
            if (s > 0 || (s < 0 && is_integer(q))) {
                r.limit = ER::finite(val_pow(L, q));
                r.approach = q > 0 ? A.approach
                             : A.approach == Approach::FromAbove   ? Approach::FromBelow
                             : A.approach == Approach::FromBelow ? Approach::FromAbove
                                                                   : Approach::Unknown;
                r.growth = growth_const(r.limit.value);
                return r;
            }
            return undet_tail();
        }
        case ExprKind::Max:
        case ExprKind::Min: {
            TailInfo D = tail_info(make_binary(ExprKind::Sub, e->a, e->b), dir);
            if (D.undetermined) {
                // both limits equal is still conclusive
                TailInfo A = tail_info(e->a, dir), B = tail_info(e->b, dir);
                if (!A.undetermined && !B.undetermined && A.limit.kind == ER::Kind::Finite &&
                    B.limit.kind == ER::Kind::Finite && A.limit.value.is_exact() &&
                    B.limit.value.is_exact() && A.limit.value.exact() == B.limit.value.exact()) {
                    TailInfo r;
                    r.undetermined = false;
                    r.limit = A.limit;
                    r.growth = growth_const(A.limit.value);
                    return r;
                }
                return undet_tail();
            }
            int diff_sign; // sign of a - b eventually; 0 = tends to equal
            if (D.limit.kind == ER::Kind::PosInf) diff_sign = 1;
            else if (D.limit.kind == ER::Kind::NegInf) diff_sign = -1;
            else {
                const Value& L = D.limit.value;
                int s = val_sign(L);
                if (s != 0 && !(L.is_exact() && L.exact() == 0)) diff_sign = s;
                else if (val_exactly_zero(L)) {
                    if (D.approach == Approach::FromAbove) diff_sign = 1;
                    else if (D.approach == Approach::FromBelow) diff_sign = -1;
                    else if (D.approach == Approach::Equal) diff_sign = 0;
                    else {
                        // limits agree; the pointwise max/min shares them
                        TailInfo A = tail_info(e->a, dir);
                        if (!A.undetermined && A.limit.kind == ER::Kind::Finite) {
                            TailInfo r;
                            r.undetermined = false;
                            r.limit = A.limit;
                            r.growth = growth_const(A.limit.value);
                            return r;
                        }
                        return undet_tail();
                    }
                } else {
                    return undet_tail();
                }
            }
            bool pick_a = e->kind == ExprKind::Max ? diff_sign >= 0 : diff_sign <= 0;
            return tail_info(pick_a ? e->a : e->b, dir);
        }
        default:
            return undet_tail();
    }
}

// ---------------------------------------------------------------------------
// Weight-level analyses
// ---------------------------------------------------------------------------

namespace {

PieceInterval domain_of(const Semigroup& sg) {
    switch (sg.kind) {
        case SemigroupKind::NatMin:
        case SemigroupKind::NatPlus:
            return {Bound::finite(Rat(1), true), Bound::pos_inf()};
        case SemigroupKind::IntMin:
            return {Bound::neg_inf(), Bound::pos_inf()};
        case SemigroupKind::PosRatMin:
            return {Bound::finite(Rat(0), false), Bound::pos_inf()};
    }
    throw Error("unreachable");
}

// intersection of a piece interval with the domain (never empty for pieces of
// a validated partition)
PieceInterval clip_to_domain(const PieceInterval& iv, const Semigroup& sg) {
    PieceInterval dom = domain_of(sg);
    PieceInterval r = iv;
    if (r.lo.kind == Bound::Kind::NegInf) r.lo = dom.lo;
    else if (dom.lo.kind == Bound::Kind::Finite && r.lo.kind == Bound::Kind::Finite &&
             r.lo.value < dom.lo.value)
        r.lo = dom.lo;
    return r;
}

bool clip_nonempty(const PieceInterval& iv) {
    if (iv.lo.kind == Bound::Kind::NegInf || iv.hi.kind == Bound::Kind::PosInf) return true;
    if (iv.lo.value < iv.hi.value) return true;
    return iv.lo.value == iv.hi.value && iv.lo.closed && iv.hi.closed;
}

// infinitely many domain points inside the (clipped) interval?
bool piece_infinite(const PieceInterval& iv, const Semigroup& sg) {
    if (iv.hi.kind == Bound::Kind::PosInf) return true;
    if (iv.lo.kind == Bound::Kind::NegInf) return sg.kind == SemigroupKind::IntMin;
    if (sg.kind == SemigroupKind::PosRatMin) return iv.lo.value < iv.hi.value;
    return false; // bounded integer windows are finite
}

} // namespace

void validate_weight(const Weight& w, const ParseOptions& opts) {
    const Semigroup& sg = w.semigroup();
    const bool semilattice = sg.is_semilattice();
    const Rat threshold(semilattice ? 1 : 0);

    for (const Piece& piece : w.pieces()) {
        PieceInterval clip = clip_to_domain(piece.interval, sg);
        if (!clip_nonempty(clip)) continue;

        ERange rng = range_on(*piece.expr, clip);
        if (semilattice ? range_lo_ge(rng, threshold) == Tri::True
                        : (range_lo_ge(rng, Rat(0)) == Tri::True &&
                           !(rng.lo.kind == ER::Kind::Finite && val_exactly_zero(rng.lo.value))))
            continue;

        // monotone pieces: the infimum sits at one end
        auto end_ok = [&](bool left) -> Tri {
            const Bound& b = left ? clip.lo : clip.hi;
            if (b.kind == Bound::Kind::Finite) {
                try {
                    Value v = eval_expr(*piece.expr, b.value);
                    Tri ge = val_ge(v, threshold);
                    if (!semilattice && ge == Tri::True && val_exactly_zero(v)) return Tri::False;
                    return ge;
                } catch (const Error&) {
                    return Tri::Unknown;
                }
            }
            // infinite end: tail limit
            TailInfo ti = tail_info(piece.expr, left ? Dir::MinusInf : Dir::PlusInf);
            if (ti.undetermined) return Tri::Unknown;
            return er_ge(ti.limit, threshold);
        };
        if (rng.mono == Mono::Inc) {
            if (end_ok(true) == Tri::True) continue;
        } else if (rng.mono == Mono::Dec) {
            if (end_ok(false) == Tri::True) continue;
        } else if (rng.mono == Mono::Const) {
            if (end_ok(clip.lo.kind == Bound::Kind::Finite) == Tri::True) continue;
        }

        // dense sampling fallback
        std::vector<Rat> samples;
        const bool integer_dom = sg.kind != SemigroupKind::PosRatMin;
        Rat lo = clip.lo.kind == Bound::Kind::Finite ? clip.lo.value : Rat(-(1 << 20));
        Rat hi = clip.hi.kind == Bound::Kind::Finite ? clip.hi.value : Rat(1 << 20);
        if (integer_dom) {
            Int a = rat_ceil(lo) - (clip.lo.kind == Bound::Kind::Finite && !clip.lo.closed &&
                                            is_integer(lo)
                                        ? Int(-1)
                                        : Int(0));
            if (clip.lo.kind == Bound::Kind::Finite && !clip.lo.closed && is_integer(lo)) a = lo.get_num() + 1;
            Int b = rat_floor(hi);
            if (clip.hi.kind == Bound::Kind::Finite && !clip.hi.closed && is_integer(hi)) b = hi.get_num() - 1;
            if (sg.kind != SemigroupKind::IntMin && a < 1) a = 1;
            Int count = b - a + 1;
            if (count <= opts.validity_samples) {
                for (Int n = a; n <= b; ++n) samples.push_back(Rat(n));
            } else {
                for (int i = 0; i < 32; ++i) samples.push_back(Rat(a + i));
                for (int i = 0; i < 32; ++i) samples.push_back(Rat(b - i));
                Int step = count / (opts.validity_samples - 64);
                if (step < 1) step = 1;
                for (Int n = a; n <= b; n += step) samples.push_back(Rat(n));
            }
        } else {
            Rat a = lo < 0 ? Rat(0) : lo;
            Rat width = hi - a;
            if (width <= 0) width = 1;
            for (int j = 1; j <= 24; ++j) {
                Rat d = width / pow_int(Rat(2), j);
                samples.push_back(a + d);
                samples.push_back(hi - d);
            }
            for (int i = 1; i < opts.validity_samples / 8; ++i)
                samples.push_back(a + width * Rat(i) / Rat(opts.validity_samples / 8));
        }
        for (const Rat& x : samples) {
            if (!piece.interval.contains(x)) continue;
            if (sg.kind == SemigroupKind::PosRatMin && x <= 0) continue;
            try {
                Value v = eval_expr(*piece.expr, x);
                Tri ge = val_ge(v, threshold);
                if (ge == Tri::False || (!semilattice && val_exactly_zero(v)))
                    throw ValidityError("weight " + std::string(semilattice ? "< 1" : "<= 0") +
                                        " at s = " + rat_to_string(x) + " (piece " +
                                        piece.interval.to_string() + ")");
            } catch (const DomainError& err) {
                throw ValidityError(std::string("weight undefined inside its piece: ") + err.what());
            }
        }
    }

    if (sg.kind == SemigroupKind::NatPlus) {
        // submultiplicativity on an exhaustive grid
        long B = opts.submult_grid_bound;
        std::vector<Value> vals(static_cast<std::size_t>(2 * B + 1));
        for (long n = 1; n <= 2 * B; ++n) vals[n] = w.eval(Point::integer(n));
        for (long s = 1; s <= B; ++s)
            for (long t = s; t <= B; ++t) {
                Value lhs = vals[s + t];
                Value rhs = vals[s] * vals[t];
                Value diff = rhs - lhs;
                Tri ok = val_ge(diff, Rat(0));
                if (ok == Tri::False)
                    throw ValidityError("weight is not submultiplicative at (s,t) = (" +
                                        std::to_string(s) + "," + std::to_string(t) + ")");
                if (ok == Tri::Unknown)
                    throw UndecidableError("submultiplicativity not certified at (s,t) = (" +
                                           std::to_string(s) + "," + std::to_string(t) + ")");
            }
    }
}

} // namespace slalg::detail

namespace slalg {

using namespace detail;

namespace {

TailInfo sup_tail(const Weight& w) {
    const Piece& last = w.pieces().back();
    return tail_info(last.expr, Dir::PlusInf);
}

TailInfo inf_tail(const Weight& w) {
    const Piece& first = w.pieces().front();
    return tail_info(first.expr, Dir::MinusInf);
}

[[noreturn]] void throw_undecidable(const char* where) {
    throw UndecidableError(std::string("undecidable-expression: the ") + where +
                           " falls outside the eventually-monotone fragment");
}

// infimum of omega over one (clipped, nondegenerate) piece; sound lower bound
ER piece_inf(const Piece& piece, const PieceInterval& clip) {
    ERange rng = range_on(*piece.expr, clip);
    auto eval_at = [&](const Bound& b, Dir dir) -> std::optional<ER> {
        if (b.kind == Bound::Kind::Finite) {
            try {
                return ER::finite(eval_expr(*piece.expr, b.value));
            } catch (const Error&) {
                return std::nullopt;
            }
        }
        TailInfo ti = tail_info(piece.expr, dir);
        if (ti.undetermined) return std::nullopt;
        return ti.limit;
    };
    if (rng.mono == Mono::Inc || rng.mono == Mono::Const) {
        if (auto v = eval_at(clip.lo, Dir::MinusInf)) return *v;
    } else if (rng.mono == Mono::Dec) {
        if (auto v = eval_at(clip.hi, Dir::PlusInf)) return *v;
    }
    if (rng.lo.kind == ER::Kind::Finite) return rng.lo;
    // weights are validated >= 1; use that as the sound floor
    return ER::finite(Value(Rat(1)));
}

} // namespace

LimitReport analyze_limits(const Weight& w) {
    const Semigroup& sg = w.semigroup();
    LimitReport rep;

    TailInfo up = sup_tail(w);
    if (up.undetermined) throw_undecidable("tail toward sup S");
    rep.order_lim_sup_infinite = up.limit.kind == ER::Kind::PosInf;

    TailInfo down;
    if (sg.kind == SemigroupKind::IntMin) {
        down = inf_tail(w);
        if (down.undetermined) throw_undecidable("tail toward -inf");
        rep.order_lim_inf_infinite = down.limit.kind == ER::Kind::PosInf;
    }

    switch (sg.kind) {
        case SemigroupKind::NatMin:
        case SemigroupKind::NatPlus:
            rep.filter_lim_infinite = rep.order_lim_sup_infinite;
            rep.liminf_value = up.limit;
            break;
        case SemigroupKind::IntMin:
            rep.filter_lim_infinite = rep.order_lim_sup_infinite && rep.order_lim_inf_infinite;
            rep.liminf_value = er_min(up.limit, down.limit);
            break;
        case SemigroupKind::PosRatMin: {
            rep.filter_lim_infinite = false;
            ER inf = ER::pos_inf();
            for (const Piece& piece : w.pieces()) {
                PieceInterval clip = clip_to_domain(piece.interval, sg);
                if (!clip_nonempty(clip) || !piece_infinite(clip, sg)) continue;
                inf = er_min(inf, piece_inf(piece, clip));
            }
            rep.liminf_value = inf;
            break;
        }
    }

    if (!rep.order_lim_sup_infinite) {
        // a bounded cofinal net exists; choose a certified rational bound
        if (up.limit.kind == ER::Kind::Finite) {
            const Value& L = up.limit.value;
            if (L.is_exact() &&
                (up.approach == Approach::FromBelow || up.approach == Approach::Equal)) {
                rep.bounded_cofinal_bound = L.exact();
            } else if (L.is_exact()) {
                Rat v = L.exact();
                rep.bounded_cofinal_bound = is_integer(v) ? Rat(v + 1) : Rat(rat_ceil(v));
            } else {
                Rat ub(L.interval().upper_double());
                rep.bounded_cofinal_bound = Rat(rat_floor(ub) + 1);
            }
        }
    }
    return rep;
}

Tri tail_le_set_infinite(const Weight& w, const Rat& M, bool toward_sup) {
    const Semigroup& sg = w.semigroup();
    if (!toward_sup && sg.kind != SemigroupKind::IntMin) return Tri::False;
    TailInfo ti = toward_sup ? sup_tail(w) : inf_tail(w);
    if (ti.undetermined) return Tri::Unknown;
    if (ti.limit.kind == ER::Kind::PosInf) return Tri::False;
    if (ti.limit.kind == ER::Kind::NegInf) return Tri::True;
    const Value& L = ti.limit.value;
    if (L.is_exact()) {
        if (L.exact() < M) return Tri::True;
        if (L.exact() > M) return Tri::False;
        switch (ti.approach) {
            case Approach::FromBelow:
            case Approach::Equal:
                return Tri::True;
            case Approach::FromAbove:
                return Tri::False;
            default:
                return Tri::Unknown;
        }
    }
    if (L.interval().certainly_lt(M)) return Tri::True;
    if (L.interval().certainly_gt(M)) return Tri::False;
    return Tri::Unknown;
}

std::optional<std::pair<Rat, Rat>> le_set_interval(const Weight& w, const Rat& M) {
    if (w.semigroup().kind != SemigroupKind::PosRatMin) return std::nullopt;
    // a certified nondegenerate open interval with omega <= M on it
    std::vector<PieceInterval> queue;
    for (const Piece& piece : w.pieces()) {
        PieceInterval clip = clip_to_domain(piece.interval, w.semigroup());
        if (!clip_nonempty(clip) || !piece_infinite(clip, w.semigroup())) continue;
        queue.clear();
        queue.push_back(clip);
        for (int depth = 0; depth < 3 && !queue.empty(); ++depth) {
            std::vector<PieceInterval> next;
            for (const PieceInterval& iv : queue) {
                ERange rng = range_on(*piece.expr, iv);
                if (range_hi_le(rng, M) == Tri::True) {
                    Rat a = iv.lo.kind == Bound::Kind::Finite ? iv.lo.value : Rat(0);
                    Rat b;
                    if (iv.hi.kind == Bound::Kind::Finite) b = iv.hi.value;
                    else b = a + 1;
                    if (a < b) return std::make_pair(a, b);
                    continue;
                }
                // split and retry
                if (iv.lo.kind == Bound::Kind::Finite && iv.hi.kind == Bound::Kind::Finite) {
                    Rat mid = (iv.lo.value + iv.hi.value) / 2;
                    next.push_back({iv.lo, Bound::finite(mid, true)});
                    next.push_back({Bound::finite(mid, false), iv.hi});
                } else if (iv.lo.kind == Bound::Kind::Finite) {
                    Rat mid = iv.lo.value + 1;
                    next.push_back({iv.lo, Bound::finite(mid, true)});
                    next.push_back({Bound::finite(mid, false), iv.hi});
                }
            }
            queue = std::move(next);
        }
    }
    return std::nullopt;
}

std::optional<Rat> weight_upper_bound(const Weight& w) {
    Rat best(0);
    bool any = false;
    for (const Piece& piece : w.pieces()) {
        PieceInterval clip = clip_to_domain(piece.interval, w.semigroup());
        if (!clip_nonempty(clip)) continue;
        ERange rng = range_on(*piece.expr, clip);
        if (rng.hi.kind != ER::Kind::Finite) return std::nullopt;
        Rat ub = rng.hi.value.is_exact() ? rng.hi.value.exact()
                                         : Rat(rng.hi.value.interval().upper_double());
        if (!any || ub > best) best = ub;
        any = true;
    }
    if (!any) return std::nullopt;
    return best;
}

Tri certified_tail_ge(const Weight& w, const Point& from, const Rat& v) {
    bool all_true = true;
    for (const Piece& piece : w.pieces()) {
        PieceInterval clip = clip_to_domain(piece.interval, w.semigroup());
        // restrict to [from, inf)
        if (clip.hi.kind == Bound::Kind::Finite &&
            (clip.hi.value < from.v || (clip.hi.value == from.v && !clip.hi.closed)))
            continue;
        if (clip.lo.kind == Bound::Kind::NegInf ||
            (clip.lo.kind == Bound::Kind::Finite && clip.lo.value < from.v))
            clip.lo = Bound::finite(from.v, true);
        if (!clip_nonempty(clip)) continue;
        ERange rng = range_on(*piece.expr, clip);
        Tri lo_ok = range_lo_ge(rng, v);
        if (lo_ok == Tri::True) continue;
        // monotone refinement
        if (rng.mono == Mono::Inc || rng.mono == Mono::Const) {
            if (clip.lo.kind == Bound::Kind::Finite) {
                try {
                    if (val_ge(eval_expr(*piece.expr, clip.lo.value), v) == Tri::True) continue;
                } catch (const Error&) {
                }
            }
        } else if (rng.mono == Mono::Dec) {
            std::optional<ER> end;
            if (clip.hi.kind == Bound::Kind::Finite) {
                try {
                    end = ER::finite(eval_expr(*piece.expr, clip.hi.value));
                } catch (const Error&) {
                }
            } else {
                TailInfo ti = tail_info(piece.expr, Dir::PlusInf);
                if (!ti.undetermined) end = ti.limit;
            }
            if (end && er_ge(*end, v) == Tri::True) continue;
        }
        all_true = false;
        // certified violation? (everything on this piece below v)
        if (rng.hi.kind == ER::Kind::Finite && val_le(rng.hi.value, v) == Tri::True &&
            !(rng.hi.value.is_exact() && rng.hi.value.exact() == v))
            return Tri::False;
    }
    return all_true ? Tri::True : Tri::Unknown;
}

} // namespace slalg
