#ifndef SLALG_VALUE_HPP
#define SLALG_VALUE_HPP

#include <string>
#include <variant>

#include "slalg/interval.hpp"
#include "slalg/rational.hpp"

namespace slalg {

// Exact-or-float number. Exact wherever the computation stays in the
// rationals; an MPFR enclosure once exp/log or a fractional power enters.
class Value {
public:
    Value() : v_(Rat(0)) {}
    Value(Rat q) : v_(std::move(q)) {}
    Value(FloatInterval iv) : v_(std::move(iv)) {}

    bool is_exact() const { return std::holds_alternative<Rat>(v_); }
    const Rat& exact() const { return std::get<Rat>(v_); }
    const FloatInterval& interval() const { return std::get<FloatInterval>(v_); }

    FloatInterval widen() const {
        return is_exact() ? FloatInterval(exact()) : interval();
    }

    double to_double() const {
        return is_exact() ? exact().get_d() : interval().midpoint();
    }

    std::string to_string() const {
        return is_exact() ? rat_to_string(exact()) : interval().to_string();
    }

    friend Value operator+(const Value& a, const Value& b) {
        if (a.is_exact() && b.is_exact()) return Value(Rat(a.exact() + b.exact()));
        return Value(a.widen() + b.widen());
    }
    friend Value operator-(const Value& a, const Value& b) {
        if (a.is_exact() && b.is_exact()) return Value(Rat(a.exact() - b.exact()));
        return Value(a.widen() - b.widen());
    }
    friend Value operator*(const Value& a, const Value& b) {
        if (a.is_exact() && b.is_exact()) return Value(Rat(a.exact() * b.exact()));
        return Value(a.widen() * b.widen());
    }
    friend Value operator/(const Value& a, const Value& b) {
        if (a.is_exact() && b.is_exact()) {
            if (b.exact() == 0) throw DomainError("division by zero");
            return Value(Rat(a.exact() / b.exact()));
        }
        return Value(a.widen() / b.widen());
    }
    Value operator-() const {
        if (is_exact()) return Value(Rat(-exact()));
        return Value(-interval());
    }

    Value abs() const {
        if (is_exact()) return Value(rat_abs(exact()));
        return Value(interval().abs());
    }

    // Certified threshold tests; throw UndecidableError on a straddling enclosure.
    bool ge(const Rat& q) const {
        if (is_exact()) return exact() >= q;
        auto c = interval().compare(q);
        if (c == FloatInterval::Cmp::Undecided) throw UndecidableError("comparison not certified at current precision");
        return c != FloatInterval::Cmp::Less;
    }
    bool le(const Rat& q) const {
        if (is_exact()) return exact() <= q;
        auto c = interval().compare(q);
        if (c == FloatInterval::Cmp::Undecided) throw UndecidableError("comparison not certified at current precision");
        return c != FloatInterval::Cmp::Greater;
    }

private:
    std::variant<Rat, FloatInterval> v_;
};

} // namespace slalg

#endif
