#include <algorithm>
#include <cctype>

#include "slalg/weight.hpp"
#include "weight_internal.hpp"

namespace slalg {

// ---------------------------------------------------------------------------
// AST constructors
// ---------------------------------------------------------------------------

ExprPtr make_const(Rat c) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Const;
    e->value = std::move(c);
    return e;
}
ExprPtr make_var() {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Var;
    return e;
}
ExprPtr make_absvar() {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::AbsVar;
    return e;
}
ExprPtr make_unary(ExprKind k, ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(a);
    return e;
}
ExprPtr make_binary(ExprKind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}
ExprPtr make_pow(ExprPtr base, Rat exponent) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Pow;
    e->a = std::move(base);
    e->exponent = std::move(exponent);
    return e;
}

std::string expr_to_string(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Const: return rat_to_string(e.value);
        case ExprKind::Var: return "n";
        case ExprKind::AbsVar: return "|n|";
        case ExprKind::Add: return "(" + expr_to_string(*e.a) + " + " + expr_to_string(*e.b) + ")";
        case ExprKind::Sub: return "(" + expr_to_string(*e.a) + " - " + expr_to_string(*e.b) + ")";
        case ExprKind::Mul: return "(" + expr_to_string(*e.a) + " * " + expr_to_string(*e.b) + ")";
        case ExprKind::Div: return "(" + expr_to_string(*e.a) + " / " + expr_to_string(*e.b) + ")";
        case ExprKind::Pow: return expr_to_string(*e.a) + "^" + rat_to_string(e.exponent);
        case ExprKind::Exp: return "exp(" + expr_to_string(*e.a) + ")";
        case ExprKind::Log: return "log(" + expr_to_string(*e.a) + ")";
        case ExprKind::Max: return "max(" + expr_to_string(*e.a) + ", " + expr_to_string(*e.b) + ")";
        case ExprKind::Min: return "min(" + expr_to_string(*e.a) + ", " + expr_to_string(*e.b) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Piece intervals
// ---------------------------------------------------------------------------

bool PieceInterval::contains(const Rat& x) const {
    if (lo.kind == Bound::Kind::PosInf) return false;
    if (hi.kind == Bound::Kind::NegInf) return false;
    if (lo.kind == Bound::Kind::Finite) {
        if (lo.closed ? x < lo.value : x <= lo.value) return false;
    }
    if (hi.kind == Bound::Kind::Finite) {
        if (hi.closed ? x > hi.value : x >= hi.value) return false;
    }
    return true;
}

std::string PieceInterval::to_string() const {
    std::string s;
    s += lo.kind == Bound::Kind::Finite ? (lo.closed ? "[" : "(") + rat_to_string(lo.value) : "(-inf";
    s += ",";
    s += hi.kind == Bound::Kind::Finite ? rat_to_string(hi.value) + (hi.closed ? "]" : ")") : "inf)";
    return s;
}

std::string ExtendedReal::to_string() const {
    switch (kind) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "inf";
        case Kind::Finite: return value.to_string();
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
    End, Number, Ident, Pipe, Plus, Minus, Star, Slash, Caret,
    LParen, RParen, LBracket, RBracket, LBrace, RBrace, Comma, Semi, Colon
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    bool at(Tok k) const { return tok_.kind == k; }
    Token expect(Tok k, const std::string& what) {
        if (!at(k)) throw ParseError("expected " + what + ", found '" + tok_.text + "'", tok_.pos);
        return take();
    }

    struct State {
        std::size_t i;
        Token tok;
    };
    State save() const { return {i_, tok_}; }
    void restore(const State& s) {
        i_ = s.i;
        tok_ = s.tok;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= s_.size()) {
            tok_ = {Tok::End, "", i_};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Tok::Number, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Tok::Ident, s_.substr(i_, j - i_), i_};
            i_ = j;
            return;
        }
        Tok k;
        switch (c) {
            case '|': k = Tok::Pipe; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '[': k = Tok::LBracket; break;
            case ']': k = Tok::RBracket; break;
            case '{': k = Tok::LBrace; break;
            case '}': k = Tok::RBrace; break;
            case ',': k = Tok::Comma; break;
            case ';': k = Tok::Semi; break;
            case ':': k = Tok::Colon; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i_);
        }
        tok_ = {k, std::string(1, c), i_};
        ++i_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_{Tok::End, "", 0};
};

// ---------------------------------------------------------------------------
// Parser (grammar from the weight DSL)
// ---------------------------------------------------------------------------

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    std::vector<Piece> parse_weight() {
        std::vector<Piece> pieces;
        if (lex_.at(Tok::Ident) && lex_.peek().text == "piecewise") {
            lex_.take();
            lex_.expect(Tok::LBrace, "'{'");
            pieces.push_back(parse_piece());
            while (lex_.at(Tok::Semi)) {
                lex_.take();
                pieces.push_back(parse_piece());
            }
            lex_.expect(Tok::RBrace, "'}'");
        } else {
            Piece p;
            p.interval = {Bound::neg_inf(), Bound::pos_inf()};
            p.expr = parse_expr();
            pieces.push_back(std::move(p));
        }
        lex_.expect(Tok::End, "end of input");
        return pieces;
    }

private:
    Piece parse_piece() {
        Piece p;
        p.interval = parse_interval();
        lex_.expect(Tok::Colon, "':'");
        p.expr = parse_expr();
        return p;
    }

    PieceInterval parse_interval() {
        bool lo_closed;
        if (lex_.at(Tok::LParen)) {
            lo_closed = false;
            lex_.take();
        } else if (lex_.at(Tok::LBracket)) {
            lo_closed = true;
            lex_.take();
        } else {
            throw ParseError("expected '(' or '[' to open an interval", lex_.peek().pos);
        }
        Bound lo = parse_bound(lo_closed);
        lex_.expect(Tok::Comma, "','");
        Bound hi = parse_bound(false);
        if (lex_.at(Tok::RParen)) {
            lex_.take();
        } else if (lex_.at(Tok::RBracket)) {
            if (hi.kind == Bound::Kind::Finite) hi.closed = true;
            lex_.take();
        } else {
            throw ParseError("expected ')' or ']' to close an interval", lex_.peek().pos);
        }
        if (lo.kind == Bound::Kind::PosInf || hi.kind == Bound::Kind::NegInf)
            throw ParseError("interval bounds out of order", lex_.peek().pos);
        if (lo.kind == Bound::Kind::Finite && hi.kind == Bound::Kind::Finite) {
            if (hi.value < lo.value || (lo.value == hi.value && !(lo.closed && hi.closed)))
                throw ParseError("empty interval", lex_.peek().pos);
        }
        return {lo, hi};
    }

    Bound parse_bound(bool closed) {
        bool neg = false;
        if (lex_.at(Tok::Minus)) {
            lex_.take();
            neg = true;
        }
        if (lex_.at(Tok::Ident) && lex_.peek().text == "inf") {
            lex_.take();
            return neg ? Bound::neg_inf() : Bound::pos_inf();
        }
        Rat v = parse_rational_token();
        return Bound::finite(neg ? Rat(-v) : v, closed);
    }

    // integer [ "/" positive-integer ], sign handled by callers
    Rat parse_rational_token() {
        Token num = lex_.expect(Tok::Number, "a number");
        Rat q(Int(num.text), 1);
        if (lex_.at(Tok::Slash)) {
            // only consume when a bare integer follows: "n^1/2" binds the
            // '/' into the rational, "1/n" leaves it to the term level
            Lexer::State mark = lex_.save();
            lex_.take();
            if (lex_.at(Tok::Number)) {
                Token den = lex_.take();
                Int d(den.text);
                if (d == 0) throw ParseError("zero denominator", den.pos);
                q = Rat(Int(num.text), d);
                q.canonicalize();
            } else {
                lex_.restore(mark);
            }
        }
        return q;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (lex_.at(Tok::Plus) || lex_.at(Tok::Minus)) {
            Tok k = lex_.take().kind;
            ExprPtr rhs = parse_term();
            e = make_binary(k == Tok::Plus ? ExprKind::Add : ExprKind::Sub, std::move(e), std::move(rhs));
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        while (lex_.at(Tok::Star) || lex_.at(Tok::Slash)) {
            Tok k = lex_.take().kind;
            ExprPtr rhs = parse_factor();
            e = make_binary(k == Tok::Star ? ExprKind::Mul : ExprKind::Div, std::move(e), std::move(rhs));
        }
        return e;
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_base();
        if (lex_.at(Tok::Caret)) {
            lex_.take();
            bool neg = false;
            if (lex_.at(Tok::Minus)) {
                lex_.take();
                neg = true;
            }
            Rat e = parse_rational_token();
            return make_pow(std::move(base), neg ? Rat(-e) : e);
        }
        return base;
    }

    ExprPtr parse_base() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::Minus: {
                // negative rational constant
                lex_.take();
                Rat v = parse_rational_token();
                return make_const(-v);
            }
            case Tok::Number:
                return make_const(parse_rational_token());
            case Tok::Pipe: {
                lex_.take();
                Token v = lex_.expect(Tok::Ident, "'n'");
                if (v.text != "n") throw ParseError("expected 'n' inside '|...|'", v.pos);
                lex_.expect(Tok::Pipe, "'|'");
                return make_absvar();
            }
            case Tok::LParen: {
                lex_.take();
                ExprPtr e = parse_expr();
                lex_.expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Ident: {
                if (t.text == "n") {
                    lex_.take();
                    return make_var();
                }
                if (t.text == "exp" || t.text == "log") {
                    bool is_exp = t.text == "exp";
                    lex_.take();
                    lex_.expect(Tok::LParen, "'('");
                    ExprPtr e = parse_expr();
                    lex_.expect(Tok::RParen, "')'");
                    return make_unary(is_exp ? ExprKind::Exp : ExprKind::Log, std::move(e));
                }
                if (t.text == "max" || t.text == "min") {
                    bool is_max = t.text == "max";
                    lex_.take();
                    lex_.expect(Tok::LParen, "'('");
                    ExprPtr a = parse_expr();
                    lex_.expect(Tok::Comma, "','");
                    ExprPtr b = parse_expr();
                    lex_.expect(Tok::RParen, "')'");
                    return make_binary(is_max ? ExprKind::Max : ExprKind::Min, std::move(a), std::move(b));
                }
                throw ParseError("unknown identifier '" + t.text + "'", t.pos);
            }
            default:
                throw ParseError("expected an expression, found '" + t.text + "'", t.pos);
        }
    }

    Lexer lex_;
};

// ---------------------------------------------------------------------------
// Piece partition checks, domain-aware
// ---------------------------------------------------------------------------

// Domain of the index set as an interval of the rationals.
PieceInterval domain_interval(const Semigroup& sg) {
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

bool integer_domain(const Semigroup& sg) {
    return sg.kind != SemigroupKind::PosRatMin;
}

// Does [lo, hi] (with the given endpoint inclusivities) contain a point of S?
bool region_has_domain_point(const Semigroup& sg, const Rat& lo, bool lo_incl, const Rat& hi,
                             bool hi_incl) {
    if (integer_domain(sg)) {
        Int a = lo_incl ? rat_ceil(lo) : rat_floor(lo) + 1;
        Int b = hi_incl ? rat_floor(hi) : rat_ceil(hi) - 1;
        if (sg.kind != SemigroupKind::IntMin && a < 1) a = 1;
        return a <= b;
    }
    Rat a = lo < 0 ? Rat(0) : lo;
    bool a_incl = lo < 0 ? false : lo_incl;
    if (a <= 0) a_incl = false; // 0 is not in PosRatMin
    if (a < hi) return true;
    return a == hi && a_incl && hi_incl && a > 0;
}

void check_partition(const Semigroup& sg, std::vector<Piece>& pieces) {
    std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) {
        const Bound& a = x.interval.lo;
        const Bound& b = y.interval.lo;
        int ak = a.kind == Bound::Kind::NegInf ? -1 : 0;
        int bk = b.kind == Bound::Kind::NegInf ? -1 : 0;
        if (ak != bk) return ak < bk;
        if (ak == -1) return false;
        return a.value < b.value;
    });

    const PieceInterval dom = domain_interval(sg);

    // coverage below the first piece: uncovered = { x in S : x below first lo }
    const Bound& first_lo = pieces.front().interval.lo;
    if (first_lo.kind == Bound::Kind::Finite) {
        if (dom.lo.kind == Bound::Kind::NegInf)
            throw DomainError("weight pieces do not cover the semigroup below " +
                              rat_to_string(first_lo.value));
        if (region_has_domain_point(sg, dom.lo.value, dom.lo.closed, first_lo.value, !first_lo.closed))
            throw DomainError("weight pieces do not cover the semigroup below " +
                              rat_to_string(first_lo.value));
    }

    // adjacency between consecutive pieces
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
        const Bound& hi = pieces[i].interval.hi;
        const Bound& lo = pieces[i + 1].interval.lo;
        if (hi.kind == Bound::Kind::PosInf || lo.kind == Bound::Kind::NegInf)
            throw DomainError("weight pieces overlap: " + pieces[i].interval.to_string() + " and " +
                              pieces[i + 1].interval.to_string());
        if (hi.value < lo.value || (hi.value == lo.value && !(hi.closed && lo.closed))) {
            // possible gap: points above piece i and below piece i+1
            if (region_has_domain_point(sg, hi.value, !hi.closed, lo.value, !lo.closed))
                throw DomainError("weight pieces leave a gap between " + rat_to_string(hi.value) +
                                  " and " + rat_to_string(lo.value));
        } else {
            // possible overlap: points inside both pieces
            if (region_has_domain_point(sg, lo.value, lo.closed, hi.value, hi.closed))
                throw DomainError("weight pieces overlap between " + rat_to_string(lo.value) +
                                  " and " + rat_to_string(hi.value));
        }
    }

    // coverage above the last piece (all four domains are unbounded above)
    if (pieces.back().interval.hi.kind != Bound::Kind::PosInf)
        throw DomainError("weight pieces do not cover the semigroup toward sup S");
}

} // namespace

// ---------------------------------------------------------------------------
// Weight
// ---------------------------------------------------------------------------

Weight Weight::parse(const std::string& text, const Semigroup& sg, const ParseOptions& opts) {
    Parser parser(text);
    std::vector<Piece> pieces = parser.parse_weight();
    check_partition(sg, pieces);
    Weight w(sg, text, std::move(pieces));
    detail::validate_weight(w, opts);
    return w;
}

const Piece& Weight::piece_at(const Point& s) const {
    for (const Piece& p : pieces_)
        if (p.interval.contains(s.v)) return p;
    throw DomainError("no weight piece covers " + s.to_string());
}

Value Weight::eval(const Point& s) const {
    sg_.require(s);
    const Piece& p = piece_at(s);
    Value v = detail::eval_expr(*p.expr, s.v);
    if (sg_.is_semilattice()) {
        if (v.is_exact()) {
            if (v.exact() < 1)
                throw ValidityError("weight value " + v.to_string() + " < 1 at s = " + s.to_string());
        } else if (v.interval().certainly_lt(Rat(1))) {
            throw ValidityError("weight value < 1 at s = " + s.to_string());
        }
    } else if (v.is_exact() ? v.exact() <= 0 : v.interval().certainly_le(Rat(0))) {
        throw ValidityError("weight value <= 0 at s = " + s.to_string());
    }
    return v;
}

std::optional<Rat> Weight::eval_exact(const Point& s) const {
    sg_.require(s);
    const Piece& p = piece_at(s);
    auto r = detail::eval_exact_expr(*p.expr, s.v);
    if (r && sg_.is_semilattice() && *r < 1)
        throw ValidityError("weight value " + rat_to_string(*r) + " < 1 at s = " + s.to_string());
    return r;
}

Rat Weight::eval_exact_or_throw(const Point& s) const {
    auto r = eval_exact(s);
    if (!r)
        throw ModeError("weight '" + source_ + "' is not rational-valued at s = " + s.to_string() +
                        "; exact pipeline cannot proceed");
    return *r;
}

Value omega_fn(const Weight& w, const Point& s, const Point& t) {
    const Semigroup& sg = w.semigroup();
    Point st = op(sg, s, t);
    return w.eval(st) / (w.eval(s) * w.eval(t));
}

} // namespace slalg
