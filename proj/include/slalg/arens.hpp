#ifndef SLALG_ARENS_HPP
#define SLALG_ARENS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slalg/functional.hpp"
#include "slalg/sequence.hpp"

namespace slalg {

struct IterConfig {
    long inner_depth = 1000;
    long outer_depth = 1000;
    double tolerance = 1e-6;
    int tail_window = 8;
    // limits are declared no earlier than min(1000, depth) terms
    long min_depth(long depth) const { return std::min<long>(1000, depth); }
};

// One repeated limit. A value is asserted only when the last tail_window
// terms lie within the tolerance of it (exactly constant windows propagate
// exactness); anything else is "undetermined", never a guess.
struct IterResult {
    enum class Status { Value, Diverges, Undetermined };
    Status status = Status::Undetermined;
    double value = 0.0;
    bool exact = false;
    Rat exact_value{0};
    long depth_used = 0;
    long inner_depth = 0;
    long outer_depth = 0;
    double tolerance = 0.0;
    int tail_window = 0;

    std::string to_string() const;
};

using PairKernel = std::function<Value(const Point&, const Point&)>;

struct IterPair {
    IterResult box;     // lim_m lim_n f(s_m, t_n)
    IterResult diamond; // lim_n lim_m f(s_m, t_n)
};

IterPair iterated_limit(const PairKernel& f, const Sequence& outer, const Sequence& inner,
                        const IterConfig& cfg = {});

// --------------------------------------------------------------------------

struct ZeroClusterWitness {
    Sequence s_seq;
    Sequence t_seq;
    IterResult box;
    IterResult diamond;
    Rat m_bound; // both repeated limits >= 1/M^2
};

struct ZeroClusterResult {
    Tri clusters_zero = Tri::Unknown;
    std::optional<ZeroClusterWitness> witness; // present when clusters_zero == False
};

// Omega 0-clusters iff Lim omega = infinity (min semilattices); when false, a
// concrete witness pair inside {omega <= M} is emitted and its repeated
// limits evaluated.
ZeroClusterResult zero_cluster_test(const Weight& w, const IterConfig& cfg = {});

// lim lim <delta~_{s_m} * delta~_{t_n}, lambda> in both orders.
IterPair arens_pairing(const Sequence& outer, const Sequence& inner, const Functional& l,
                       const Weight& w, const IterConfig& cfg = {});

// --------------------------------------------------------------------------

struct CrawYoungWitness {
    std::vector<Point> s_points;
    std::vector<Point> t_points;
    SetSpec chi; // characteristic set {s'_n t'_m : n <= m}
    std::vector<std::vector<Rat>> pairing; // <alpha_n * beta_m, omega chi>
};

// The greedy subsequence extraction from the Craw-Young argument on a weakly
// cancellative semigroup: Omega(s'_n, t'_m) > eps for n <= m, products
// pairwise distinct, pairing matrix 0 strictly below the diagonal.
CrawYoungWitness craw_young_witness(const Weight& w, const Sequence& s_seq,
                                    const Sequence& t_seq, const Rat& eps, int k = 12,
                                    long window = 4096);

// --------------------------------------------------------------------------

enum class Verdict { ArensRegular, StronglyArensIrregular, NeitherRegularNorSAI, NotRegularSAIUnknown };

enum class PredualNote { EOmegaPredual, NoPredualHypothesisMet, Unknown };

struct Classification {
    Verdict verdict = Verdict::NotRegularSAIUnknown;
    std::vector<std::pair<std::string, std::string>> reasons; // (tag, satisfied hypothesis)
    PredualNote predual_note = PredualNote::Unknown;
};

std::string verdict_name(Verdict v);
std::string predual_note_name(PredualNote p);

// Decision tree over the limit report; min semilattices only.
Classification classify(const Weight& w);

// --------------------------------------------------------------------------

struct DtcReport {
    bool undetermined = false;
    IterResult phi_a; // lim 1/omega along a_seq = <delta_a, phi_omega>
    IterResult phi_b;
    // f * delta~_{s} = (1/omega(s)) f exactly once s > max supp f
    std::vector<std::pair<Point, bool>> ideal_rows;
    bool ideal_exact = true;
    bool trivial_only = false; // the 2x2 separation system forces c_a = c_b = 0
};

// Desk-scale verification of the two-point DTC argument on nat-min.
DtcReport dtc_demo(const Weight& w, const Sequence& a_seq, const Sequence& b_seq,
                   const Element& f, const IterConfig& cfg = {});

} // namespace slalg

#endif
