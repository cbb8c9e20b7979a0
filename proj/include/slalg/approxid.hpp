#ifndef SLALG_APPROXID_HPP
#define SLALG_APPROXID_HPP

#include <optional>
#include <vector>

#include "slalg/element.hpp"
#include "slalg/sequence.hpp"

namespace slalg {

struct AiReport {
    enum class Kind { Bounded, SequentialUnbounded };
    Kind kind = Kind::Bounded;
    Rat bound{1};        // norm bound M (bounded case) / multiplier bound 2 (unbounded)
    Sequence sequence;   // (s_n) with delta_{s_n} the approximate identity

    AiReport(Kind k, Rat b, Sequence s) : kind(k), bound(std::move(b)), sequence(std::move(s)) {}
};

// Constructs the approximate identity of Prop "BAI": along a bounded cofinal
// enumeration when one exists, else by the omega-tilde greedy recursion
// (s_{n+1} realizes the infimum of omega over the tail past s_n + 1).
AiReport build_ai(const Weight& w, int depth = 64);

struct AiVerificationRow {
    std::size_t element_index;
    long n;
    Point s_n;
    Value residual;      // ||alpha - alpha * delta_{s_n}||_omega
    Value tail_bound;    // (C+1) * sum_{t > s_n} |alpha(t)| omega(t)
    bool residual_ok;    // residual <= tail_bound
    Value conv_norm;     // ||alpha * delta_{s_n}||_omega
    bool multiplier_ok;  // conv_norm <= C ||alpha||_omega
};

std::vector<AiVerificationRow> verify_ai(const AiReport& report, const Weight& w,
                                         const std::vector<Element>& test_elements, long N);

// Truncations always have delta_max as identity; the full semigroups never
// have one (sup S is not attained).
std::optional<Element> identity_check(const Truncation& tr, const Weight& w, unsigned seed = 7);
std::optional<Element> identity_check(const Semigroup& sg);

} // namespace slalg

#endif
