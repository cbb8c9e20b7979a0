// slalg: weighted semilattice convolution algebra toolkit.
//
// Exit codes: 0 success, 1 mathematically undetermined, 2 invalid input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "slalg/json_io.hpp"

using namespace slalg;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUndetermined = 1;
constexpr int kExitInput = 2;

struct Common {
    std::string semigroup = "nat-min";
    std::string weight;
    bool as_json = false;
    std::string cfg_text;

    Semigroup sg() const { return Semigroup::from_name(semigroup); }
    Weight parse_weight() const { return Weight::parse(weight, sg()); }
    IterConfig cfg() const {
        if (cfg_text.empty()) return IterConfig{};
        return io::iter_config_from(json::parse(cfg_text));
    }
};

void add_common(CLI::App* cmd, Common& c, bool needs_weight = true) {
    cmd->add_option("--semigroup", c.semigroup, "nat-min | int-min | posrat-min | nat-plus");
    auto* w = cmd->add_option("--weight", c.weight, "weight expression (DSL)");
    if (needs_weight) w->required();
    cmd->add_flag("--json", c.as_json, "machine-readable output");
    cmd->add_option("--cfg", c.cfg_text, "iterated-limit config JSON");
}

// Accepts the compact CLI form with bare rationals, e.g. [[5,1/5]]:
// unquoted p/q tokens are quoted before the JSON parse.
std::string quote_bare_rationals(const std::string& text) {
    std::string out;
    bool in_string = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '"') in_string = !in_string;
        if (!in_string && (std::isdigit(static_cast<unsigned char>(c)) || c == '-')) {
            std::size_t j = i;
            if (text[j] == '-') ++j;
            std::size_t digits = j;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j > digits && j < text.size() && text[j] == '/') {
                std::size_t k = j + 1;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                if (k > j + 1) {
                    out += '"';
                    out += text.substr(i, k - i);
                    out += '"';
                    i = k - 1;
                    continue;
                }
            }
            out += text.substr(i, j - i);
            i = j - 1;
            continue;
        }
        out += c;
    }
    return out;
}

Element parse_element_arg(const std::string& text, const Semigroup& sg) {
    return io::element_from_compact(json::parse(quote_bare_rationals(text)), sg);
}

Sequence parse_seq_arg(const std::string& text, const Semigroup& sg, const Weight* w) {
    return io::sequence_from(json::parse(text), sg, w);
}

int print_iter_pair(const Common& c, const IterPair& p, const char* what) {
    if (c.as_json) {
        std::cout << json{{"box", io::iter_result_json(p.box)},
                          {"diamond", io::iter_result_json(p.diamond)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << what << " box     = " << p.box.to_string() << "\n";
        std::cout << what << " diamond = " << p.diamond.to_string() << "\n";
    }
    bool undet = p.box.status != IterResult::Status::Value ||
                 p.diamond.status != IterResult::Status::Value;
    return undet ? kExitUndetermined : kExitOk;
}

// ---------------------------------------------------------------------------
// scenario runner
// ---------------------------------------------------------------------------

struct ScenarioOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool json_close(const json& got, const json& expect, double tol);

bool json_number_close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool json_close(const json& got, const json& expect, double tol) {
    if (expect.is_object()) {
        if (!got.is_object()) return false;
        for (auto it = expect.begin(); it != expect.end(); ++it) {
            if (!got.contains(it.key())) return false;
            if (!json_close(got.at(it.key()), it.value(), tol)) return false;
        }
        return true;
    }
    if (expect.is_array()) {
        if (!got.is_array() || got.size() != expect.size()) return false;
        for (std::size_t i = 0; i < expect.size(); ++i)
            if (!json_close(got[i], expect[i], tol)) return false;
        return true;
    }
    if (expect.is_number() && got.is_number())
        return json_number_close(got.get<double>(), expect.get<double>(), tol);
    return got == expect;
}

json run_scenario_op(const json& sc) {
    Semigroup sg = Semigroup::from_name(sc.value("semigroup", "nat-min"));
    std::optional<Weight> w;
    if (sc.contains("weight")) w = Weight::parse(sc.at("weight").get<std::string>(), sg);
    IterConfig cfg;
    if (sc.contains("cfg")) cfg = io::iter_config_from(sc.at("cfg"));
    const json& args = sc.contains("args") ? sc.at("args") : json::object();
    std::string op = sc.at("op").get<std::string>();

    if (op == "classify") return io::classification_json(classify(*w));
    if (op == "limits") return io::limit_report_json(analyze_limits(*w));
    if (op == "convolve") {
        Element a = io::element_from_compact(args.at("a"), sg);
        Element b = io::element_from_compact(args.at("b"), sg);
        return io::element_compact(convolve(a, b));
    }
    if (op == "norm") {
        Element a = io::element_from_compact(args.at("a"), sg);
        return io::value_json(norm(a, *w));
    }
    if (op == "omega") {
        Point s = io::point_from(args.at("s")), t = io::point_from(args.at("t"));
        return io::value_json(omega_fn(*w, s, t));
    }
    if (op == "iterated-omega") {
        Sequence outer = io::sequence_from(args.at("outer"), sg, &*w);
        Sequence inner = io::sequence_from(args.at("inner"), sg, &*w);
        PairKernel kernel = [&](const Point& s, const Point& t) { return omega_fn(*w, s, t); };
        IterPair p = iterated_limit(kernel, outer, inner, cfg);
        return json{{"box", io::iter_result_json(p.box)}, {"diamond", io::iter_result_json(p.diamond)}};
    }
    if (op == "pairing") {
        Sequence outer = io::sequence_from(args.at("outer"), sg, &*w);
        Sequence inner = io::sequence_from(args.at("inner"), sg, &*w);
        Functional lam = io::functional_from(args.at("lambda"), sg);
        IterPair p = arens_pairing(outer, inner, lam, *w, cfg);
        return json{{"box", io::iter_result_json(p.box)}, {"diamond", io::iter_result_json(p.diamond)}};
    }
    if (op == "zero-cluster") return io::zero_cluster_json(zero_cluster_test(*w, cfg));
    if (op == "craw-young") {
        Sequence s = io::sequence_from(args.at("s_seq"), sg, &*w);
        Sequence t = io::sequence_from(args.at("t_seq"), sg, &*w);
        return io::craw_young_json(craw_young_witness(*w, s, t, io::rat_from(args.at("eps")),
                                                      args.value("k", 12),
                                                      args.value("window", 4096L)));
    }
    if (op == "non-submodule") {
        SetSpec U = io::setspec_from(args.at("set"), sg, &*w);
        std::optional<Functional> lam;
        if (args.contains("lambda")) lam = io::functional_from(args.at("lambda"), sg);
        return io::witness_report_json(non_submodule_witness(
            *w, U, io::point_from(args.at("t")), io::point_from(args.at("u")),
            args.value("n_max", 100), lam));
    }
    if (op == "membership") {
        Functional lam = io::functional_from(args.at("lambda"), sg);
        return io::membership_json(e_omega_membership(lam, *w));
    }
    if (op == "module-action") {
        Functional lam = io::functional_from(args.at("lambda"), sg);
        std::optional<Point> win;
        if (args.contains("window_lo")) win = io::point_from(args.at("window_lo"));
        return io::functional_json(module_action(io::point_from(args.at("s")), lam, *w, win));
    }
    if (op == "compactness") {
        Truncation window = Truncation::range(sg, args.value("window_lo", 1L), args.value("window_hi", 400L));
        return io::compactness_json(compactness_probe(io::point_from(args.at("x")), *w, window,
                                                      io::rat_from(args.at("eps"))));
    }
    if (op == "ai") {
        AiReport rep = build_ai(*w, args.value("depth", 64));
        json out = io::ai_report_json(rep);
        if (args.contains("test")) {
            std::vector<Element> tests{io::element_from_compact(args.at("test"), sg)};
            out["verification"] = io::ai_rows_json(verify_ai(rep, *w, tests, args.value("N", 10L)));
        }
        return out;
    }
    if (op == "identity") {
        if (args.contains("truncation")) {
            std::vector<Point> pts;
            for (const json& p : args.at("truncation")) pts.push_back(io::point_from(p));
            Truncation tr(sg, std::move(pts));
            auto e = identity_check(tr, *w);
            return e ? io::element_compact(*e) : json(nullptr);
        }
        auto e = identity_check(sg);
        return e ? io::element_compact(*e) : json(nullptr);
    }
    if (op == "gelfand") {
        Element a = io::element_from_compact(args.at("a"), sg);
        return io::gelfand_json(gelfand(a, args.value("k", 8)));
    }
    if (op == "chars") {
        Truncation tr = Truncation::range(sg, args.value("lo", 1L), args.value("hi", 5L));
        return io::characters_json(enumerate_characters(tr, *w));
    }
    if (op == "density") {
        Functional lam = io::functional_from(args.at("lambda"), sg);
        return io::density_json(predual_density_approx(lam, *w, args.value("n", 8)));
    }
    if (op == "dtc") {
        Sequence a = io::sequence_from(args.at("a_seq"), sg, &*w);
        Sequence b = io::sequence_from(args.at("b_seq"), sg, &*w);
        Element f = io::element_from_compact(args.at("f"), sg);
        return io::dtc_json(dtc_demo(*w, a, b, f, cfg));
    }
    if (op == "phi-k") {
        Element a = io::element_from_compact(args.at("a"), sg);
        return io::rat_json(phi_k_apply(io::point_from(args.at("k")), a));
    }
    if (op == "error") {
        // scenario expects the operation named in args.op to fail; rerun it
        json inner = sc;
        inner["op"] = args.at("op");
        inner["args"] = args.value("args", json::object());
        try {
            run_scenario_op(inner);
        } catch (const Error& e) {
            return json{{"error", true}, {"message", e.what()}};
        }
        return json{{"error", false}};
    }
    throw DomainError("unknown scenario op '" + op + "'");
}

ScenarioOutcome run_scenario(const json& sc) {
    ScenarioOutcome out;
    out.name = sc.at("name").get<std::string>();
    double tol = sc.value("tolerance", 1e-9);
    try {
        json got = run_scenario_op(sc);
        const json& expect = sc.at("expect");
        out.pass = json_close(got, expect, tol);
        if (!out.pass) out.detail = "got " + got.dump();
    } catch (const Error& e) {
        out.pass = false;
        out.detail = e.what();
    }
    return out;
}

int cmd_scenarios(const std::string& file, bool all, const std::string& only, int jobs,
                  bool as_json) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "cannot open scenario file " << file << "\n";
        return kExitInput;
    }
    json list = json::parse(in);
    std::vector<json> selected;
    for (const json& sc : list) {
        if (!all && !only.empty() && sc.at("name").get<std::string>() != only) continue;
        selected.push_back(sc);
    }
    std::vector<ScenarioOutcome> results(selected.size());
    if (jobs < 1) jobs = 1;
    std::size_t next = 0;
    std::mutex mu;
    auto worker = [&]() {
        while (true) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (next >= selected.size()) return;
                i = next++;
            }
            results[i] = run_scenario(selected[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();

    bool all_pass = true;
    json jout = json::array();
    for (const ScenarioOutcome& r : results) {
        all_pass = all_pass && r.pass;
        if (as_json)
            jout.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        else
            std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name
                      << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
    }
    if (as_json) std::cout << jout.dump(2) << "\n";
    if (!as_json)
        std::cout << (all_pass ? "all scenarios passed" : "some scenarios FAILED") << "\n";
    return all_pass ? kExitOk : kExitInput;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted semilattice convolution algebra toolkit"};
    app.require_subcommand(1);

    // classify
    Common c_classify;
    auto* classify_cmd = app.add_subcommand("classify", "Arens regularity / SAI classification");
    add_common(classify_cmd, c_classify);

    // convolve
    Common c_conv;
    std::string conv_a, conv_b;
    auto* conv_cmd = app.add_subcommand("convolve", "exact convolution of two elements");
    add_common(conv_cmd, c_conv, false);
    conv_cmd->add_option("--a", conv_a, "element terms, e.g. [[1,2],[4,3]]")->required();
    conv_cmd->add_option("--b", conv_b)->required();

    // norm
    Common c_norm;
    std::string norm_a;
    auto* norm_cmd = app.add_subcommand("norm", "weighted l1 norm of an element");
    add_common(norm_cmd, c_norm);
    norm_cmd->add_option("--a", norm_a)->required();

    // omega
    Common c_omega;
    std::string om_s, om_t, om_outer, om_inner;
    int om_table = 0;
    auto* omega_cmd = app.add_subcommand("omega", "Omega(s,t) values, tables, or iterated limits");
    add_common(omega_cmd, c_omega);
    omega_cmd->add_option("--s", om_s);
    omega_cmd->add_option("--t", om_t);
    omega_cmd->add_option("--table", om_table, "print an N x N Omega table");
    omega_cmd->add_option("--outer", om_outer, "outer sequence JSON");
    omega_cmd->add_option("--inner", om_inner, "inner sequence JSON");

    // witness
    Common c_wit;
    std::string wit_kind = "zero-cluster", wit_set, wit_t, wit_u, wit_lambda, wit_s_seq, wit_t_seq, wit_eps = "1/2";
    int wit_nmax = 100, wit_k = 12;
    long wit_window = 4096;
    auto* wit_cmd = app.add_subcommand("witness", "non-regularity / non-submodule / Craw-Young witnesses");
    add_common(wit_cmd, c_wit);
    wit_cmd->add_option("--kind", wit_kind, "zero-cluster | non-submodule | craw-young");
    wit_cmd->add_option("--set", wit_set, "U as a set JSON (non-submodule)");
    wit_cmd->add_option("--t", wit_t);
    wit_cmd->add_option("--u", wit_u);
    wit_cmd->add_option("--lambda", wit_lambda, "functional JSON");
    wit_cmd->add_option("--n-max", wit_nmax);
    wit_cmd->add_option("--s-seq", wit_s_seq);
    wit_cmd->add_option("--t-seq", wit_t_seq);
    wit_cmd->add_option("--eps", wit_eps);
    wit_cmd->add_option("--k", wit_k);
    wit_cmd->add_option("--window", wit_window);

    // ai
    Common c_ai;
    int ai_depth = 20;
    long ai_n = 10;
    std::string ai_test;
    auto* ai_cmd = app.add_subcommand("ai", "approximate identity construction and verification");
    add_common(ai_cmd, c_ai);
    ai_cmd->add_option("--depth", ai_depth);
    ai_cmd->add_option("--test", ai_test, "test element terms");
    ai_cmd->add_option("--n", ai_n, "verification rows per element");

    // gelfand
    Common c_gel;
    std::string gel_a;
    int gel_k = 8;
    auto* gel_cmd = app.add_subcommand("gelfand", "Gel'fand transform at thresholds 1..K");
    add_common(gel_cmd, c_gel);
    gel_cmd->add_option("--a", gel_a)->required();
    gel_cmd->add_option("--k", gel_k);

    // chars
    Common c_chars;
    long chars_lo = 1, chars_hi = 5;
    auto* chars_cmd = app.add_subcommand("chars", "brute-force character enumeration on a truncation");
    add_common(chars_cmd, c_chars);
    chars_cmd->add_option("--lo", chars_lo);
    chars_cmd->add_option("--hi", chars_hi);

    // dtc
    Common c_dtc;
    std::string dtc_a, dtc_b, dtc_f;
    auto* dtc_cmd = app.add_subcommand("dtc", "two-point DTC demonstration on nat-min");
    add_common(dtc_cmd, c_dtc);
    dtc_cmd->add_option("--a-seq", dtc_a)->required();
    dtc_cmd->add_option("--b-seq", dtc_b)->required();
    dtc_cmd->add_option("--f", dtc_f)->required();

    // scenarios
    std::string sc_file = "data/scenarios.json", sc_only;
    bool sc_all = false, sc_json = false;
    int sc_jobs = 1;
    auto* sc_cmd = app.add_subcommand("scenarios", "run the shipped paper scenarios");
    sc_cmd->add_flag("--all", sc_all, "run every scenario");
    sc_cmd->add_option("--file", sc_file);
    sc_cmd->add_option("--only", sc_only, "run a single scenario by name");
    sc_cmd->add_option("--jobs", sc_jobs);
    sc_cmd->add_flag("--json", sc_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify_cmd->parsed()) {
            Classification cls = classify(c_classify.parse_weight());
            if (c_classify.as_json)
                std::cout << io::classification_json(cls).dump(2) << "\n";
            else {
                std::cout << verdict_name(cls.verdict) << "\n";
                for (const auto& [tag, hyp] : cls.reasons) std::cout << "  [" << tag << "] " << hyp << "\n";
                std::cout << "  predual: " << predual_note_name(cls.predual_note) << "\n";
            }
            return kExitOk;
        }
        if (conv_cmd->parsed()) {
            Semigroup sg = c_conv.sg();
            Element r = convolve(parse_element_arg(conv_a, sg), parse_element_arg(conv_b, sg));
            std::cout << io::element_compact(r).dump() << "\n";
            return kExitOk;
        }
        if (norm_cmd->parsed()) {
            Weight w = c_norm.parse_weight();
            Element a = parse_element_arg(norm_a, c_norm.sg());
            std::cout << io::value_json(norm(a, w)).dump() << "\n";
            return kExitOk;
        }
        if (omega_cmd->parsed()) {
            Weight w = c_omega.parse_weight();
            if (!om_s.empty() && !om_t.empty()) {
                Value v = omega_fn(w, Point{parse_rat(om_s)}, Point{parse_rat(om_t)});
                std::cout << io::value_json(v).dump() << "\n";
                return kExitOk;
            }
            if (om_table > 0) {
                Semigroup sg = c_omega.sg();
                Sequence rows = om_outer.empty() ? Sequence::arith(sg, Rat(1), Rat(1))
                                                 : parse_seq_arg(om_outer, sg, &w);
                Sequence cols = om_inner.empty() ? Sequence::arith(sg, Rat(1), Rat(1))
                                                 : parse_seq_arg(om_inner, sg, &w);
                json table = json::array();
                for (int i = 0; i < om_table; ++i) {
                    json r = json::array();
                    for (int j = 0; j < om_table; ++j)
                        r.push_back(io::value_json(omega_fn(w, rows.at(i), cols.at(j))));
                    table.push_back(r);
                }
                if (c_omega.as_json) {
                    std::cout << table.dump(2) << "\n";
                } else {
                    for (const json& r : table) {
                        for (const json& v : r) std::cout << v.dump() << "\t";
                        std::cout << "\n";
                    }
                }
                return kExitOk;
            }
            if (om_outer.empty() || om_inner.empty())
                throw DomainError("omega needs --s/--t, --table N, or --outer/--inner");
            Sequence outer = parse_seq_arg(om_outer, c_omega.sg(), &w);
            Sequence inner = parse_seq_arg(om_inner, c_omega.sg(), &w);
            PairKernel kernel = [&w](const Point& s, const Point& t) { return omega_fn(w, s, t); };
            return print_iter_pair(c_omega, iterated_limit(kernel, outer, inner, c_omega.cfg()),
                                   "Omega");
        }
        if (wit_cmd->parsed()) {
            Weight w = c_wit.parse_weight();
            Semigroup sg = c_wit.sg();
            if (wit_kind == "zero-cluster") {
                ZeroClusterResult r = zero_cluster_test(w, c_wit.cfg());
                std::cout << io::zero_cluster_json(r).dump(2) << "\n";
                return r.clusters_zero == Tri::Unknown ? kExitUndetermined : kExitOk;
            }
            if (wit_kind == "non-submodule") {
                if (wit_set.empty() || wit_t.empty() || wit_u.empty())
                    throw DomainError("non-submodule needs --set, --t, --u");
                SetSpec U = io::setspec_from(json::parse(wit_set), sg, &w);
                std::optional<Functional> lam;
                if (!wit_lambda.empty()) lam = io::functional_from(json::parse(wit_lambda), sg);
                WitnessReport r = non_submodule_witness(w, U, Point{parse_rat(wit_t)},
                                                        Point{parse_rat(wit_u)}, wit_nmax, lam);
                std::cout << io::witness_report_json(r).dump(2) << "\n";
                return r.tends_to_zero && r.stays_separated ? kExitOk : kExitUndetermined;
            }
            if (wit_kind == "craw-young") {
                Sequence s = wit_s_seq.empty() ? Sequence::arith(sg, Rat(1), Rat(1))
                                               : parse_seq_arg(wit_s_seq, sg, &w);
                Sequence t = wit_t_seq.empty() ? Sequence::arith(sg, Rat(1), Rat(1))
                                               : parse_seq_arg(wit_t_seq, sg, &w);
                CrawYoungWitness r = craw_young_witness(w, s, t, parse_rat(wit_eps), wit_k, wit_window);
                std::cout << io::craw_young_json(r).dump(2) << "\n";
                return kExitOk;
            }
            throw DomainError("unknown witness kind '" + wit_kind + "'");
        }
        if (ai_cmd->parsed()) {
            Weight w = c_ai.parse_weight();
            AiReport rep = build_ai(w, ai_depth);
            json out = io::ai_report_json(rep);
            if (!ai_test.empty()) {
                std::vector<Element> tests{parse_element_arg(ai_test, c_ai.sg())};
                auto rows = verify_ai(rep, w, tests, ai_n);
                out["verification"] = io::ai_rows_json(rows);
                if (!c_ai.as_json) {
                    std::cout << (rep.kind == AiReport::Kind::Bounded ? "bounded" : "sequential_unbounded")
                              << " AI, bound " << rat_to_string(rep.bound) << "\n";
                    std::cout << "  n    s_n    residual    bound    ok\n";
                    for (const auto& r : rows)
                        std::cout << "  " << r.n << "    " << r.s_n.to_string() << "    "
                                  << r.residual.to_string() << "    " << r.tail_bound.to_string()
                                  << "    " << (r.residual_ok && r.multiplier_ok ? "yes" : "NO") << "\n";
                    return kExitOk;
                }
            }
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
        if (gel_cmd->parsed()) {
            Weight w = c_gel.parse_weight();
            Element a = parse_element_arg(gel_a, c_gel.sg());
            std::cout << io::gelfand_json(gelfand(a, gel_k)).dump() << "\n";
            return kExitOk;
        }
        if (chars_cmd->parsed()) {
            Weight w = c_chars.parse_weight();
            Truncation tr = Truncation::range(c_chars.sg(), chars_lo, chars_hi);
            std::cout << io::characters_json(enumerate_characters(tr, w)).dump(2) << "\n";
            return kExitOk;
        }
        if (dtc_cmd->parsed()) {
            Weight w = c_dtc.parse_weight();
            Semigroup sg = c_dtc.sg();
            DtcReport r = dtc_demo(w, parse_seq_arg(dtc_a, sg, &w), parse_seq_arg(dtc_b, sg, &w),
                                   parse_element_arg(dtc_f, sg), c_dtc.cfg());
            std::cout << io::dtc_json(r).dump(2) << "\n";
            return r.undetermined ? kExitUndetermined : kExitOk;
        }
        if (sc_cmd->parsed()) {
            if (!sc_all && sc_only.empty())
                throw DomainError("scenarios: pass --all or --only NAME");
            return cmd_scenarios(sc_file, sc_all, sc_only, sc_jobs, sc_json);
        }
    } catch (const UndecidableError& e) {
        std::cerr << "undetermined: " << e.what() << "\n";
        return kExitUndetermined;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
