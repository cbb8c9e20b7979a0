#ifndef SLALG_INTERVAL_HPP
#define SLALG_INTERVAL_HPP

#include <mpfr.h>

#include <string>

#include "slalg/rational.hpp"

namespace slalg {

// Outward-rounded enclosure of a real number, used wherever exp/log force
// the evaluation out of the rationals. Precision defaults to 160 bits
// (>= 50 significant bits beyond double) and can be overridden through the
// SLALG_PRECISION environment variable. Threshold comparisons are certified:
// an enclosure that straddles the threshold is reported as undecided rather
// than rounded through it.
class FloatInterval {
public:
    FloatInterval();
    explicit FloatInterval(const Rat& q);
    FloatInterval(const FloatInterval& other);
    FloatInterval(FloatInterval&& other) noexcept;
    FloatInterval& operator=(const FloatInterval& other);
    FloatInterval& operator=(FloatInterval&& other) noexcept;
    ~FloatInterval();

    static mpfr_prec_t precision_bits();

    FloatInterval operator-() const;
    FloatInterval operator+(const FloatInterval& o) const;
    FloatInterval operator-(const FloatInterval& o) const;
    FloatInterval operator*(const FloatInterval& o) const;
    FloatInterval operator/(const FloatInterval& o) const; // o must be sign-definite

    FloatInterval abs() const;
    FloatInterval exp() const;
    FloatInterval log() const; // requires certified > 0
    FloatInterval pow(const Rat& e) const;
    static FloatInterval min(const FloatInterval& a, const FloatInterval& b);
    static FloatInterval max(const FloatInterval& a, const FloatInterval& b);

    enum class Cmp { Less, Greater, Equal, Undecided };
    Cmp compare(const Rat& q) const;
    bool certainly_ge(const Rat& q) const;
    bool certainly_le(const Rat& q) const;
    bool certainly_gt(const Rat& q) const;
    bool certainly_lt(const Rat& q) const;
    bool certainly_ge(const FloatInterval& o) const;
    bool certainly_le(const FloatInterval& o) const;
    bool contains_zero() const;
    int sign() const; // +1, -1, or 0 when the enclosure straddles zero

    double midpoint() const;
    double lower_double() const; // rounded down
    double upper_double() const; // rounded up
    std::string to_string() const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
    void init();
};

} // namespace slalg

#endif
