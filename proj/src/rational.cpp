#include "slalg/rational.hpp"

#include <cctype>

namespace slalg {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational", 0);
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected digits in rational '" + text + "'", i);
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size()) {
        if (text[i] != '/') throw ParseError("unexpected character in rational '" + text + "'", i);
        ++i;
        if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected positive denominator in '" + text + "'", i);
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i != text.size()) throw ParseError("trailing characters in rational '" + text + "'", i);
    }
    Rat q;
    if (q.set_str(text, 10) != 0) throw ParseError("malformed rational '" + text + "'", 0);
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'", 0);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat pow_int(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (q == 0) {
        if (e < 0) throw DomainError("0 raised to a negative power");
        return Rat(0);
    }
    const unsigned long mag = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), mag);
    mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), mag);
    Rat r;
    if (e > 0) r = Rat(num, den);
    else r = Rat(den, num);
    r.canonicalize();
    return r;
}

std::optional<Rat> exact_root(const Rat& q, unsigned long e) {
    if (e == 1) return q;
    if (q < 0) return std::nullopt; // even/odd handling not needed by callers
    Int num_root, den_root;
    if (!mpz_root(num_root.get_mpz_t(), q.get_num().get_mpz_t(), e)) return std::nullopt;
    if (!mpz_root(den_root.get_mpz_t(), q.get_den().get_mpz_t(), e)) return std::nullopt;
    return Rat(num_root, den_root);
}

Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

} // namespace slalg
