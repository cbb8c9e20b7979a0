#include "slalg/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace slalg {

mpfr_prec_t FloatInterval::precision_bits() {
    static mpfr_prec_t prec = [] {
        long bits = 160;
        if (const char* env = std::getenv("SLALG_PRECISION")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v >= 113 && v <= 16384) bits = v;
        }
        return static_cast<mpfr_prec_t>(bits);
    }();
    return prec;
}

void FloatInterval::init() {
    mpfr_init2(lo_, precision_bits());
    mpfr_init2(hi_, precision_bits());
}

FloatInterval::FloatInterval() {
    init();
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

FloatInterval::FloatInterval(const Rat& q) {
    init();
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

FloatInterval::FloatInterval(const FloatInterval& other) {
    init();
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

FloatInterval::FloatInterval(FloatInterval&& other) noexcept {
    mpfr_init2(lo_, mpfr_get_prec(other.lo_));
    mpfr_init2(hi_, mpfr_get_prec(other.hi_));
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

FloatInterval& FloatInterval::operator=(const FloatInterval& other) {
    if (this != &other) {
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

FloatInterval& FloatInterval::operator=(FloatInterval&& other) noexcept {
    if (this != &other) {
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
    }
    return *this;
}

FloatInterval::~FloatInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

FloatInterval FloatInterval::operator-() const {
    FloatInterval r;
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::operator+(const FloatInterval& o) const {
    FloatInterval r;
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::operator-(const FloatInterval& o) const {
    FloatInterval r;
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::operator*(const FloatInterval& o) const {
    FloatInterval r;
    mpfr_t t;
    mpfr_init2(t, precision_bits());
    // lower bound: min of the four products rounded down
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    // upper bound: max of the four rounded up
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

FloatInterval FloatInterval::operator/(const FloatInterval& o) const {
    if (o.contains_zero()) throw UndecidableError("division by an enclosure containing zero");
    FloatInterval r;
    mpfr_t t;
    mpfr_init2(t, precision_bits());
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
    if (mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
    if (mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

FloatInterval FloatInterval::abs() const {
    FloatInterval r(*this);
    if (mpfr_sgn(lo_) >= 0) return r;
    if (mpfr_sgn(hi_) <= 0) return -r;
    // straddles zero
    mpfr_t a, b;
    mpfr_init2(a, precision_bits());
    mpfr_init2(b, precision_bits());
    mpfr_neg(a, lo_, MPFR_RNDU);
    mpfr_set(b, hi_, MPFR_RNDU);
    mpfr_set_zero(r.lo_, 1);
    mpfr_max(r.hi_, a, b, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);
    return r;
}

FloatInterval FloatInterval::exp() const {
    FloatInterval r;
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw DomainError("log of a value not certified positive");
    FloatInterval r;
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::pow(const Rat& e) const {
    if (is_integer(e)) {
        long k = static_cast<long>(e.get_num().get_si());
        FloatInterval acc{Rat(1)};
        FloatInterval base(*this);
        unsigned long mag = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
        while (mag > 0) {
            if (mag & 1) acc = acc * base;
            base = base * base;
            mag >>= 1;
        }
        if (k < 0) return FloatInterval(Rat(1)) / acc;
        return acc;
    }
    // fractional exponent: x^e = exp(e * log x), x must be positive
    return (log() * FloatInterval(e)).exp();
}

FloatInterval FloatInterval::min(const FloatInterval& a, const FloatInterval& b) {
    FloatInterval r;
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

FloatInterval FloatInterval::max(const FloatInterval& a, const FloatInterval& b) {
    FloatInterval r;
    mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

FloatInterval::Cmp FloatInterval::compare(const Rat& q) const {
    int lo_cmp = mpfr_cmp_q(lo_, q.get_mpq_t());
    int hi_cmp = mpfr_cmp_q(hi_, q.get_mpq_t());
    if (hi_cmp < 0) return Cmp::Less;
    if (lo_cmp > 0) return Cmp::Greater;
    if (lo_cmp == 0 && hi_cmp == 0) return Cmp::Equal;
    return Cmp::Undecided;
}

bool FloatInterval::certainly_ge(const Rat& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0; }
bool FloatInterval::certainly_le(const Rat& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0; }
bool FloatInterval::certainly_gt(const Rat& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0; }
bool FloatInterval::certainly_lt(const Rat& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0; }

bool FloatInterval::certainly_ge(const FloatInterval& o) const { return mpfr_cmp(lo_, o.hi_) >= 0; }
bool FloatInterval::certainly_le(const FloatInterval& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }

bool FloatInterval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

int FloatInterval::sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

double FloatInterval::midpoint() const {
    double a = mpfr_get_d(lo_, MPFR_RNDN);
    double b = mpfr_get_d(hi_, MPFR_RNDN);
    return 0.5 * (a + b);
}

double FloatInterval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double FloatInterval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string FloatInterval::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << midpoint();
    return os.str();
}

} // namespace slalg
