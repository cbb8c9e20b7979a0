#include "slalg/element.hpp"

#include <algorithm>
#include <map>

namespace slalg {

namespace {

void require_compatible(const Element& a, const Element& b) {
    if (a.semigroup() != b.semigroup())
        throw DomainError("elements live over different semigroups: " + a.semigroup().name() +
                          " vs " + b.semigroup().name());
    if (a.mode() != b.mode())
        throw ModeError("exact and float elements cannot be combined");
}

} // namespace

Element Element::from_terms(Semigroup sg, std::vector<std::pair<Point, Rat>> terms, Mode mode) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Element e(sg, mode);
    for (auto& [p, c] : terms) {
        sg.require(p);
        if (!e.terms_.empty() && e.terms_.back().point == p)
            e.terms_.back().coeff += c;
        else
            e.terms_.push_back({p, c});
    }
    e.terms_.erase(std::remove_if(e.terms_.begin(), e.terms_.end(),
                                  [](const Term& t) { return t.coeff == 0; }),
                   e.terms_.end());
    return e;
}

Rat Element::coeff(const Point& s) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                               [](const Term& t, const Point& p) { return t.point < p; });
    if (it != terms_.end() && it->point == s) return it->coeff;
    return Rat(0);
}

const Point& Element::max_support() const {
    if (terms_.empty()) throw DomainError("zero element has no support");
    return terms_.back().point;
}

const Point& Element::min_support() const {
    if (terms_.empty()) throw DomainError("zero element has no support");
    return terms_.front().point;
}

bool operator==(const Element& a, const Element& b) {
    if (a.sg_ != b.sg_ || a.mode_ != b.mode_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].point != b.terms_[i].point || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

Element operator+(const Element& a, const Element& b) {
    require_compatible(a, b);
    Element r(a.sg_, a.mode_);
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].point < b.terms_[j].point)) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (i == a.terms_.size() || b.terms_[j].point < a.terms_[i].point) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            Rat c = a.terms_[i].coeff + b.terms_[j].coeff;
            if (c != 0) r.terms_.push_back({a.terms_[i].point, c});
            ++i;
            ++j;
        }
    }
    return r;
}

Element operator-(const Element& a, const Element& b) { return a + (Rat(-1) * b); }

Element operator*(const Rat& c, const Element& a) {
    Element r(a.sg_, a.mode_);
    if (c == 0) return r;
    r.terms_ = a.terms_;
    for (Term& t : r.terms_) t.coeff *= c;
    return r;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) s += " + ";
        s += rat_to_string(terms_[i].coeff) + "*d[" + terms_[i].point.to_string() + "]";
    }
    return s;
}

Element delta(const Semigroup& sg, const Point& s) {
    return Element::from_terms(sg, {{s, Rat(1)}});
}

Element delta_tilde(const Semigroup& sg, const Point& s, const Weight& w, Mode mode) {
    Value ws = w.eval(s);
    if (ws.is_exact()) return Element::from_terms(sg, {{s, Rat(1) / ws.exact()}}, mode);
    if (mode == Mode::Exact)
        throw ModeError("delta_tilde at s = " + s.to_string() +
                        " needs a non-rational weight value; request the float pipeline");
    Rat approx;
    mpq_set_d(approx.get_mpq_t(), 1.0 / ws.to_double());
    return Element::from_terms(sg, {{s, approx}}, Mode::Float);
}

Element convolve(const Element& a, const Element& b) {
    require_compatible(a, b);
    const Semigroup& sg = a.semigroup();
    Element r(sg, a.mode());
    if (a.is_zero() || b.is_zero()) return r;

    if (sg.kind == SemigroupKind::NatPlus) {
        std::map<Rat, Rat> acc;
        for (const Term& s : a.terms())
            for (const Term& t : b.terms()) acc[Rat(s.point.v + t.point.v)] += s.coeff * t.coeff;
        std::vector<std::pair<Point, Rat>> terms;
        for (auto& [v, c] : acc)
            if (c != 0) terms.emplace_back(Point(v), c);
        return Element::from_terms(sg, std::move(terms), a.mode());
    }

    // min semilattice: (a*b)(u) = a(u) * sum_{t >= u} b(t) + b(u) * sum_{s > u} a(s)
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    std::vector<Point> merged;
    merged.reserve(ta.size() + tb.size());
    {
        std::size_t i = 0, j = 0;
        while (i < ta.size() || j < tb.size()) {
            if (j == tb.size() || (i < ta.size() && ta[i].point < tb[j].point))
                merged.push_back(ta[i++].point);
            else if (i == ta.size() || tb[j].point < ta[i].point)
                merged.push_back(tb[j++].point);
            else {
                merged.push_back(ta[i].point);
                ++i;
                ++j;
            }
        }
    }

    std::vector<Term> out(merged.size());
    Rat suffix_b(0);        // sum_{t >= u} b(t), inclusive of the current u
    Rat suffix_a_strict(0); // sum_{s > u} a(s)
    std::size_t i = ta.size(), j = tb.size();
    for (std::size_t k = merged.size(); k-- > 0;) {
        const Point& u = merged[k];
        Rat au(0), bu(0);
        if (j > 0 && tb[j - 1].point == u) bu = tb[--j].coeff;
        if (i > 0 && ta[i - 1].point == u) au = ta[--i].coeff;
        suffix_b += bu;
        Rat c = au * suffix_b + bu * suffix_a_strict;
        out[k] = {u, std::move(c)};
        suffix_a_strict += au;
    }
    r.terms_.reserve(out.size());
    for (Term& t : out)
        if (t.coeff != 0) r.terms_.push_back(std::move(t));
    return r;
}

Value norm(const Element& a, const Weight& w) {
    Value acc{Rat(0)};
    for (const Term& t : a.terms()) acc = acc + Value(rat_abs(t.coeff)) * w.eval(t.point);
    return acc;
}

Rat norm1(const Element& a) {
    Rat acc(0);
    for (const Term& t : a.terms()) acc += rat_abs(t.coeff);
    return acc;
}

Element theta_omega(const Element& a, const Weight& w) {
    if (a.mode() != Mode::Exact)
        throw ModeError("theta_omega runs in the exact pipeline only");
    std::vector<std::pair<Point, Rat>> terms;
    terms.reserve(a.terms().size());
    for (const Term& t : a.terms())
        terms.emplace_back(t.point, Rat(t.coeff / w.eval_exact_or_throw(t.point)));
    return Element::from_terms(a.semigroup(), std::move(terms));
}

Element theta_omega_inverse(const Element& a, const Weight& w) {
    if (a.mode() != Mode::Exact)
        throw ModeError("theta_omega runs in the exact pipeline only");
    std::vector<std::pair<Point, Rat>> terms;
    terms.reserve(a.terms().size());
    for (const Term& t : a.terms())
        terms.emplace_back(t.point, Rat(t.coeff * w.eval_exact_or_throw(t.point)));
    return Element::from_terms(a.semigroup(), std::move(terms));
}

} // namespace slalg
