#include "slalg/json_io.hpp"

namespace slalg::io {

json rat_json(const Rat& q) {
    if (is_integer(q) && q.get_num().fits_slong_p())
        return json(q.get_num().get_si());
    return json(rat_to_string(q));
}

Rat rat_from(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_number_float()) {
        Rat r;
        mpq_set_d(r.get_mpq_t(), j.get<double>());
        return r;
    }
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw DomainError("expected a rational (int or \"p/q\"), got " + j.dump());
}

json point_json(const Point& p) { return rat_json(p.v); }
Point point_from(const json& j) { return Point{rat_from(j)}; }

json value_json(const Value& v) {
    if (v.is_exact()) return rat_json(v.exact());
    return json(v.to_double());
}

json element_json(const Element& e) {
    json terms = json::array();
    for (const Term& t : e.terms()) {
        if (e.mode() == Mode::Float)
            terms.push_back({point_json(t.point), json(t.coeff.get_d())});
        else
            terms.push_back({point_json(t.point), json(rat_to_string(t.coeff))});
    }
    return json{{"semigroup", e.semigroup().name()},
                {"mode", e.mode() == Mode::Exact ? "exact" : "float"},
                {"terms", terms}};
}

Element element_from(const json& j) {
    Semigroup sg = Semigroup::from_name(j.at("semigroup").get<std::string>());
    Mode mode = j.value("mode", "exact") == std::string("float") ? Mode::Float : Mode::Exact;
    return element_from_compact(j.at("terms"), sg, mode);
}

json element_compact(const Element& e) {
    json terms = json::array();
    for (const Term& t : e.terms()) terms.push_back({point_json(t.point), rat_json(t.coeff)});
    return terms;
}

Element element_from_compact(const json& j, const Semigroup& sg, Mode mode) {
    if (!j.is_array()) throw DomainError("element terms must be an array of [point, coeff] pairs");
    std::vector<std::pair<Point, Rat>> terms;
    for (const json& item : j) {
        if (!item.is_array() || item.size() != 2)
            throw DomainError("element term must be a [point, coeff] pair");
        terms.emplace_back(point_from(item[0]), rat_from(item[1]));
    }
    return Element::from_terms(sg, std::move(terms), mode);
}

json limit_report_json(const LimitReport& r) {
    json j{{"filter_lim_infinite", r.filter_lim_infinite},
           {"order_lim_sup_infinite", r.order_lim_sup_infinite},
           {"order_lim_inf_infinite", r.order_lim_inf_infinite}};
    if (r.liminf_value.kind == ExtendedReal::Kind::PosInf)
        j["liminf_value"] = "inf";
    else
        j["liminf_value"] = value_json(r.liminf_value.value);
    if (r.bounded_cofinal_bound)
        j["bounded_cofinal_bound"] = rat_json(*r.bounded_cofinal_bound);
    else
        j["bounded_cofinal_bound"] = nullptr;
    return j;
}

json classification_json(const Classification& c) {
    json reasons = json::array();
    for (const auto& [tag, hyp] : c.reasons) reasons.push_back({tag, hyp});
    return json{{"verdict", verdict_name(c.verdict)},
                {"reasons", reasons},
                {"predual_note", predual_note_name(c.predual_note)}};
}

json iter_config_json(const IterConfig& cfg) {
    return json{{"inner_depth", cfg.inner_depth},
                {"outer_depth", cfg.outer_depth},
                {"tolerance", cfg.tolerance},
                {"tail_window", cfg.tail_window}};
}

IterConfig iter_config_from(const json& j) {
    IterConfig cfg;
    cfg.inner_depth = j.value("inner_depth", cfg.inner_depth);
    cfg.outer_depth = j.value("outer_depth", cfg.outer_depth);
    cfg.tolerance = j.value("tolerance", cfg.tolerance);
    cfg.tail_window = j.value("tail_window", cfg.tail_window);
    if (cfg.inner_depth < 1 || cfg.outer_depth < 1 || cfg.tolerance <= 0 || cfg.tail_window < 2)
        throw DomainError("invalid iterated-limit configuration");
    return cfg;
}

json iter_result_json(const IterResult& r) {
    json j{{"inner_depth", r.inner_depth},
           {"outer_depth", r.outer_depth},
           {"tolerance", r.tolerance},
           {"tail_window", r.tail_window},
           {"depth_used", r.depth_used}};
    switch (r.status) {
        case IterResult::Status::Diverges: j["value"] = "diverges"; break;
        case IterResult::Status::Undetermined: j["value"] = "undetermined"; break;
        case IterResult::Status::Value:
            if (r.exact) {
                j["value"] = rat_json(r.exact_value);
                j["exact"] = true;
            } else {
                j["value"] = r.value;
                j["exact"] = false;
            }
            break;
    }
    return j;
}

json sequence_json(const Sequence& s) {
    switch (s.kind()) {
        case Sequence::Kind::Arith:
            return json{{"kind", "arith"}, {"a0", rat_json(s.param_a())}, {"d", rat_json(s.param_b())}};
        case Sequence::Kind::Geom:
            return json{{"kind", "geom"}, {"a0", rat_json(s.param_a())}, {"r", rat_json(s.param_b())}};
        case Sequence::Kind::EnumLE:
            return json{{"kind", "enum-le"}, {"M", rat_json(*s.enum_bound())}};
        case Sequence::Kind::RationalsIn:
            return json{{"kind", "rationals-in"}, {"a", rat_json(s.param_a())}, {"b", rat_json(s.param_b())}};
        case Sequence::Kind::Explicit: {
            json pts = json::array();
            for (const Point& p : s.explicit_points()) pts.push_back(point_json(p));
            json j{{"kind", "explicit"}, {"points", pts}};
            if (s.tail_step()) j["tail_step"] = rat_json(*s.tail_step());
            return j;
        }
    }
    throw Error("unreachable sequence kind");
}

Sequence sequence_from(const json& j, const Semigroup& sg, const Weight* w) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "arith") return Sequence::arith(sg, rat_from(j.at("a0")), rat_from(j.at("d")));
    if (kind == "geom") return Sequence::geom(sg, rat_from(j.at("a0")), rat_from(j.at("r")));
    if (kind == "enum-le") {
        if (!w) throw DomainError("enum-le sequences need a weight in scope");
        return Sequence::enum_le(*w, rat_from(j.at("M")));
    }
    if (kind == "rationals-in")
        return Sequence::rationals_in(sg, rat_from(j.at("a")), rat_from(j.at("b")));
    if (kind == "explicit") {
        std::vector<Point> pts;
        for (const json& p : j.at("points")) pts.push_back(point_from(p));
        std::optional<Rat> tail;
        if (j.contains("tail_step") && !j["tail_step"].is_null()) tail = rat_from(j["tail_step"]);
        return Sequence::explicit_list(sg, std::move(pts), tail);
    }
    throw DomainError("unknown sequence kind '" + kind + "'");
}

namespace {

json bound_json(const Bound& b) {
    switch (b.kind) {
        case Bound::Kind::NegInf: return json("-inf");
        case Bound::Kind::PosInf: return json("inf");
        case Bound::Kind::Finite: return rat_json(b.value);
    }
    return json();
}

Bound bound_from(const json& j, bool closed) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf") return Bound::pos_inf();
        if (s == "-inf") return Bound::neg_inf();
    }
    return Bound::finite(rat_from(j), closed);
}

} // namespace

json setspec_json(const SetSpec& s) {
    switch (s.kind) {
        case SetSpec::Kind::Interval:
            return json{{"kind", "interval"},
                        {"lo", bound_json(s.interval.lo)},
                        {"hi", bound_json(s.interval.hi)},
                        {"lo_closed", s.interval.lo.closed},
                        {"hi_closed", s.interval.hi.closed}};
        case SetSpec::Kind::Parity:
            return json{{"kind", "parity"}, {"which", s.even ? "even" : "odd"}};
        case SetSpec::Kind::Explicit: {
            json pts = json::array();
            for (const Point& p : s.points) pts.push_back(point_json(p));
            return json{{"kind", "explicit"}, {"points", pts}};
        }
        case SetSpec::Kind::SequenceRange:
            return json{{"kind", "sequence"}, {"seq", sequence_json(*s.seq)}};
    }
    throw Error("unreachable set kind");
}

SetSpec setspec_from(const json& j, const Semigroup& sg, const Weight* w) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "interval") {
        PieceInterval iv{bound_from(j.at("lo"), j.value("lo_closed", true)),
                         bound_from(j.at("hi"), j.value("hi_closed", true))};
        return SetSpec::make_interval(iv);
    }
    if (kind == "parity") return SetSpec::parity(j.at("which").get<std::string>() == "even");
    if (kind == "explicit") {
        std::vector<Point> pts;
        for (const json& p : j.at("points")) pts.push_back(point_from(p));
        return SetSpec::explicit_set(std::move(pts));
    }
    if (kind == "sequence") return SetSpec::sequence_range(sequence_from(j.at("seq"), sg, w));
    throw DomainError("unknown set kind '" + kind + "'");
}

json functional_json(const Functional& f) {
    switch (f.form()) {
        case Functional::Form::CharTimesOmega:
            return json{{"form", "char-times-omega"}, {"set", setspec_json(f.set())}};
        case Functional::Form::Indicator: {
            json pts = json::array();
            for (const Point& p : f.set().points) pts.push_back(point_json(p));
            return json{{"form", "indicator"}, {"points", pts}};
        }
        case Functional::Form::PhiK:
            return json{{"form", "phi-k"}, {"k", point_json(f.threshold())}};
        case Functional::Form::PhiOmega: {
            json j{{"form", "phi-omega"}};
            if (f.phi_weight()) j["of"] = f.phi_weight()->source();
            return j;
        }
        case Functional::Form::Table: {
            json entries = json::array();
            for (const auto& [k, v] : f.entries()) entries.push_back({rat_json(k), rat_json(v)});
            json j{{"form", "table"}, {"entries", entries}};
            if (f.tail() == Functional::Tail::Zero)
                j["tail"] = "zero";
            else
                j["tail"] = json{{"const", rat_json(f.tail_const())}};
            if (f.window_from()) j["window_from"] = point_json(*f.window_from());
            return j;
        }
    }
    throw Error("unreachable functional form");
}

Functional functional_from(const json& j, const Semigroup& sg) {
    std::string form = j.at("form").get<std::string>();
    if (form == "char-times-omega") return Functional::char_times_omega(setspec_from(j.at("set"), sg));
    if (form == "indicator") {
        std::vector<Point> pts;
        for (const json& p : j.at("points")) pts.push_back(point_from(p));
        return Functional::indicator(std::move(pts));
    }
    if (form == "phi-k") return Functional::phi_k(point_from(j.at("k")));
    if (form == "phi-omega") {
        if (j.contains("of") && !j["of"].is_null())
            return Functional::phi_omega(Weight::parse(j["of"].get<std::string>(), sg));
        return Functional::phi_omega();
    }
    if (form == "table") {
        std::map<Rat, Rat> entries;
        for (const json& e : j.at("entries")) entries[rat_from(e[0])] = rat_from(e[1]);
        if (j.at("tail").is_string())
            return Functional::table(std::move(entries), Functional::Tail::Zero);
        return Functional::table(std::move(entries), Functional::Tail::Const,
                                 rat_from(j.at("tail").at("const")));
    }
    throw DomainError("unknown functional form '" + form + "'");
}

json membership_json(const MembershipResult& m) {
    std::string v = m.verdict == Membership::Member       ? "member"
                    : m.verdict == Membership::NotMember ? "not_member"
                                                          : "undetermined";
    json j{{"verdict", v}};
    if (m.verdict == Membership::Undetermined) j["window"] = m.window;
    return j;
}

json witness_report_json(const WitnessReport& r) {
    json support = json::array(), ap = json::array(), cp = json::array();
    for (const Point& p : r.support) support.push_back(point_json(p));
    for (const Value& v : r.alpha_pairing) ap.push_back(value_json(v));
    for (const Value& v : r.conv_pairing) cp.push_back(value_json(v));
    return json{{"support", support},
                {"alpha_pairing", ap},
                {"conv_pairing", cp},
                {"bound_m", rat_json(r.bound_m)},
                {"separation", value_json(r.separation)},
                {"tends_to_zero", r.tends_to_zero},
                {"stays_separated", r.stays_separated}};
}

json compactness_json(const CompactnessReport& r) {
    json rows = json::array();
    for (const CompactnessRow& row : r.rows)
        rows.push_back(json{{"residual", value_json(row.residual)},
                            {"norm", value_json(row.norm_f)},
                            {"ratio", row.ratio}});
    return json{{"M", rat_json(r.m)},
                {"g_size", r.g_size},
                {"f_max", point_json(r.f_max)},
                {"bound", r.bound},
                {"rows", rows},
                {"all_within_eps", r.all_within_eps}};
}

json zero_cluster_json(const ZeroClusterResult& r) {
    json j;
    j["clusters_zero"] = r.clusters_zero == Tri::True    ? json(true)
                         : r.clusters_zero == Tri::False ? json(false)
                                                         : json("undetermined");
    if (r.witness) {
        j["witness"] = json{{"s_seq", sequence_json(r.witness->s_seq)},
                            {"t_seq", sequence_json(r.witness->t_seq)},
                            {"box", iter_result_json(r.witness->box)},
                            {"diamond", iter_result_json(r.witness->diamond)},
                            {"M", rat_json(r.witness->m_bound)}};
    }
    return j;
}

json craw_young_json(const CrawYoungWitness& r) {
    json s = json::array(), t = json::array(), matrix = json::array();
    for (const Point& p : r.s_points) s.push_back(point_json(p));
    for (const Point& p : r.t_points) t.push_back(point_json(p));
    for (const auto& row : r.pairing) {
        json jr = json::array();
        for (const Rat& v : row) jr.push_back(rat_json(v));
        matrix.push_back(jr);
    }
    return json{{"s_points", s}, {"t_points", t}, {"chi", setspec_json(r.chi)}, {"pairing", matrix}};
}

json dtc_json(const DtcReport& r) {
    json rows = json::array();
    for (const auto& [p, ok] : r.ideal_rows) rows.push_back({point_json(p), ok});
    return json{{"undetermined", r.undetermined},
                {"phi_a", iter_result_json(r.phi_a)},
                {"phi_b", iter_result_json(r.phi_b)},
                {"ideal_rows", rows},
                {"ideal_exact", r.ideal_exact},
                {"trivial_only", r.trivial_only}};
}

json ai_report_json(const AiReport& r) {
    return json{{"kind", r.kind == AiReport::Kind::Bounded ? "bounded" : "sequential_unbounded"},
                {"bound", rat_json(r.bound)},
                {"sequence", sequence_json(r.sequence)}};
}

json ai_rows_json(const std::vector<AiVerificationRow>& rows) {
    json out = json::array();
    for (const AiVerificationRow& r : rows)
        out.push_back(json{{"element", r.element_index},
                           {"n", r.n},
                           {"s_n", point_json(r.s_n)},
                           {"residual", value_json(r.residual)},
                           {"tail_bound", value_json(r.tail_bound)},
                           {"residual_ok", r.residual_ok},
                           {"conv_norm", value_json(r.conv_norm)},
                           {"multiplier_ok", r.multiplier_ok}});
    return out;
}

json density_json(const DensityApprox& d) {
    json combo = json::array();
    for (const auto& [p, c] : d.combination) combo.push_back({point_json(p), rat_json(c)});
    return json{{"combination", combo}, {"residual", value_json(d.residual)}};
}

json characters_json(const std::vector<Semicharacter>& cs) {
    json out = json::array();
    for (const Semicharacter& c : cs)
        out.push_back(json{{"threshold", point_json(c.threshold)}, {"cut_open", c.cut_open}});
    return out;
}

json gelfand_json(const std::vector<std::pair<Point, Rat>>& g) {
    json out = json::array();
    for (const auto& [k, v] : g) out.push_back({point_json(k), rat_json(v)});
    return out;
}

} // namespace slalg::io
