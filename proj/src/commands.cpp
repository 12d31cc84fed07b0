#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "bnlab/cli.hpp"
#include "bnlab/geometry.hpp"
#include "bnlab/lifting.hpp"

namespace bnlab {

namespace {

Json pair_json(i64 r, i64 d) { return Json::array({r, d}); }
Json pair_json(const LinearSeries& s) { return pair_json(s.r, s.d); }

Json vec_json(const LatticeVector& v) { return Json::array({v.a.str(), v.b.str()}); }

std::string pair_str(const LinearSeries& s) { return std::to_string(s.r) + "," + std::to_string(s.d); }

std::vector<i64> parse_ints(const std::string& text, std::size_t n, const std::string& flag) {
    std::vector<i64> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(part, &used));
            if (used != part.size()) throw std::invalid_argument("junk");
        } catch (const std::exception&) {
            out.clear();
            break;
        }
    }
    if (out.size() != n)
        throw CLI::ValidationError(flag, "expected " + std::to_string(n) + " comma-separated integers, got '" + text + "'");
    return out;
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(text));
        return Rat(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--step", "expected p or p/q, got '" + text + "'");
    }
}

Strength parse_strength(const std::string& s) { return s == "exact-h" ? Strength::ExactH : Strength::DiscRatio; }

struct Settings {
    std::string format = "json";
    bool json_flag = false;
    bool no_cache = false;
    std::string config_path = "bnlab.toml";
    int jobs = 1;
    std::optional<i64> nef_cap;
    std::optional<i64> lift_cap;
    Config config;

    i64 nef() const { return nef_cap.value_or(config.get_int("nef_cap").value_or(SurfaceCaps{}.nef_cap)); }
    std::optional<i64> lift() const {
        if (lift_cap) return lift_cap;
        if (auto v = config.get_int("lift_cap")) return *v;
        return std::nullopt;
    }
};

// ---- the commands; each fills params first so that the cache key is known before any work ----

void cmd_loci(RunReport& r, i64 g) {
    r.params["genus"] = g;
    auto ex = expected_maximal_loci(g);
    auto co = conjectured_maximal_loci(g);
    Json e = Json::array(), c = Json::array();
    for (const auto& s : ex) e.push_back(pair_json(s));
    for (const auto& s : co) c.push_back(pair_json(s));
    r.results["genus"] = g;
    r.results["expected"] = e;
    r.results["conjectured"] = c;
    Table t{{"g", "r", "d", "rho", "gamma", "expected", "conjectured"}, {}};
    std::vector<LinearSeries> all = ex;
    for (const auto& s : co)
        if (std::find(all.begin(), all.end(), s) == all.end()) all.push_back(s);
    std::sort(all.begin(), all.end());
    for (const auto& s : all) {
        bool ie = std::find(ex.begin(), ex.end(), s) != ex.end();
        bool ic = std::find(co.begin(), co.end(), s) != co.end();
        t.rows.push_back({std::to_string(g), std::to_string(s.r), std::to_string(s.d), std::to_string(rho(g, s.r, s.d)),
                          std::to_string(clifford_gamma(s.r, s.d)), ie ? "1" : "0", ic ? "1" : "0"});
    }
    r.table = std::move(t);
}

void cmd_classify(RunReport& r, i64 g, i64 rr, i64 d) {
    r.params["genus"] = g;
    r.params["r"] = rr;
    r.params["d"] = d;
    LinearSeries s{g, rr, d};
    auto c = classify(s);
    r.results["series"] = describe(s);
    r.results["rho"] = c.rho;
    r.results["gamma"] = c.gamma;
    r.results["delta"] = c.delta;
    r.results["bn_special"] = c.bn_special;
    r.results["noncomputing"] = c.noncomputing;
    r.results["in_l2_window"] = c.in_l2_window;
    r.results["expected_maximal"] = is_expected_maximal(s);
    if (d <= 2 * g - 2 && d >= 0) {
        try {
            r.results["serre_adjoint"] = pair_json(serre_adjoint(s));
        } catch (const Error&) {
            r.results["serre_adjoint"] = nullptr;
        }
    }
}

void cmd_scan_l2(RunReport& r, i64 from, i64 to, const std::string& strength, std::optional<i64> gamma_low, int jobs) {
    ConditionOptions opts{gamma_low};
    auto res = scan_l2(from, to, parse_strength(strength), jobs, opts);
    Json exc = Json::array(), fails = Json::array();
    Table t{{"g", "fixed_r", "fixed_d", "candidate_r", "candidate_d", "disc_ratio"}, {}};
    for (const auto& gr : res) {
        exc.push_back(gr.g);
        for (const auto& [fixed, hit] : gr.failures) {
            Json f;
            f["g"] = gr.g;
            f["fixed"] = pair_json(fixed);
            f["candidate"] = pair_json(hit.candidate);
            f["disc_ratio"] = hit.disc_ratio;
            if (hit.witness) f["witness"] = vec_json(*hit.witness);
            fails.push_back(f);
            t.rows.push_back({std::to_string(gr.g), std::to_string(fixed.r), std::to_string(fixed.d),
                              std::to_string(hit.candidate.r), std::to_string(hit.candidate.d),
                              std::to_string(hit.disc_ratio)});
        }
    }
    r.results["exceptions"] = exc;
    r.results["failures"] = fails;
    r.table = std::move(t);
    r.condition_failed = !exc.empty();
}

void cmd_check(RunReport& r, const std::string& mode, i64 g, const std::vector<i64>& fixed,
               const std::optional<std::vector<i64>>& other, const std::string& strength, std::optional<i64> gamma_low) {
    Mode m = mode == "l1" ? Mode::L1 : mode == "l2" ? Mode::L2 : Mode::L3;
    std::optional<LinearSeries> o;
    if (other) o = LinearSeries{g, (*other)[0], (*other)[1]};
    auto rep = check_condition(m, g, {g, fixed[0], fixed[1]}, o, parse_strength(strength), {gamma_low});
    r.results["mode"] = mode_name(rep.mode);
    r.results["strength"] = strength_name(rep.strength);
    r.results["fixed"] = pair_json(rep.fixed);
    r.results["other"] = rep.other ? pair_json(*rep.other) : Json(nullptr);
    r.results["candidates_checked"] = rep.candidates_checked;
    Json hits = Json::array();
    for (const auto& h : rep.hits) {
        Json j;
        j["candidate"] = pair_json(h.candidate);
        j["disc_ratio"] = h.disc_ratio;
        j["isomorphic"] = h.isomorphic;
        j["witness"] = h.witness ? vec_json(*h.witness) : Json(nullptr);
        hits.push_back(j);
    }
    r.results["hits"] = hits;
    r.results["holds"] = rep.holds();
    r.results["holds_excluding_isomorphic"] = rep.holds_excluding_isomorphic();
    r.condition_failed = !rep.holds();
}

void cmd_lift_candidates(RunReport& r, i64 g, const std::vector<i64>& s, std::optional<i64> gamma_low,
                         std::optional<i64> cap, bool wide) {
    LiftWindow w{gamma_low, cap, wide};
    auto cands = potential_dm_lifts(g, s[0], s[1], w);
    r.caps["lift_cap"] = lift_degree_cap(g, w);
    Json arr = Json::array();
    Table t{{"s", "e", "gamma", "h2", "hl", "l2", "disc"}, {}};
    for (const auto& c : cands) {
        Json j;
        j["s"] = c.s;
        j["e"] = c.e;
        j["gamma"] = clifford_gamma(c.s, c.e);
        j["disc"] = c.lattice.disc();
        arr.push_back(j);
        t.rows.push_back({std::to_string(c.s), std::to_string(c.e), std::to_string(clifford_gamma(c.s, c.e)),
                          std::to_string(c.lattice.h2), std::to_string(c.lattice.hl), std::to_string(c.lattice.l2),
                          std::to_string(c.lattice.disc())});
    }
    r.results["candidates"] = arr;
    r.table = std::move(t);
}

void cmd_filtrations(RunReport& r, i64 g, i64 d, i64 gamma, i64 m, i64 mu) {
    auto adm = admissible_filtrations(g, d, gamma, m, mu);
    Json arr = Json::array();
    Table t{{"filtration", "bound", "admissible"}, {}};
    for (auto f : kAllFiltrations) {
        auto b = filtration_bound(f, g, gamma, m, mu);
        bool ok = std::find(adm.begin(), adm.end(), f) != adm.end();
        Json j;
        j["filtration"] = filtration_name(f);
        j["bound"] = b ? Json(to_string(*b)) : Json(nullptr);
        j["admissible"] = ok;
        arr.push_back(j);
        t.rows.push_back({filtration_name(f), b ? to_string(*b) : "", ok ? "1" : "0"});
    }
    r.results["filtrations"] = arr;
    r.table = std::move(t);
}

void cmd_threshold(RunReport& r, const std::string& kind, i64 g, i64 gamma, i64 m, i64 mu, i64 rank) {
    if (kind == "strategy") {
        r.results["value"] = to_string(strategy_threshold(g, rank));
        return;
    }
    auto th = dm_threshold(g, gamma, m, mu);
    r.results["value"] = to_string(th.value);
    r.results["applicable"] = th.applicable;
}

GramLattice2 lattice_from(RunReport& r, std::optional<i64> g, const std::optional<std::vector<i64>>& series,
                          const std::optional<std::vector<i64>>& gram) {
    if (gram) {
        if (g || series) throw CLI::ValidationError("--gram", "give either --gram or --genus with --series");
        r.params["gram"] = Json::array({(*gram)[0], (*gram)[1], (*gram)[2]});
        return {(*gram)[0], (*gram)[1], (*gram)[2]};
    }
    if (!g || !series) throw CLI::ValidationError("--series", "a lattice needs --genus and --series, or --gram");
    r.params["genus"] = *g;
    r.params["series"] = Json::array({(*series)[0], (*series)[1]});
    return gram_of(*g, (*series)[0], (*series)[1]);
}

void cmd_lattice(RunReport& r, const std::string& op, const GramLattice2& L, i64 n,
                 const std::optional<std::vector<i64>>& target, i64 nef_cap) {
    require_hyperbolic(L);
    r.results["lattice"] = describe(L);
    r.results["disc"] = L.disc();
    if (op == "disc") return;
    if (op == "isotropic") {
        r.results["isotropic"] = isotropic_exists(L);
        Json dirs = Json::array();
        for (const auto& v : isotropic_directions(L)) dirs.push_back(vec_json(v));
        r.results["directions"] = dirs;
    } else if (op == "represents") {
        r.params["n"] = n;
        auto v = represents(L, n);
        r.results["n"] = n;
        r.results["witness"] = v ? vec_json(*v) : Json(nullptr);
    } else if (op == "embeds") {
        if (!target) throw CLI::ValidationError("--target", "embeds needs --target r,d");
        if (L.h2 % 2 != 0) throw Error(ErrorKind::BadParameters, "H^2 must be even");
        r.params["target"] = Json::array({(*target)[0], (*target)[1]});
        auto e = embeds_preserving_H(L, (*target)[0], (*target)[1]);
        r.results["embeds"] = e.has_value();
        if (e) {
            r.results["vector"] = vec_json(e->v);
            r.results["index"] = e->index.str();
            r.results["primitive"] = e->primitive;
        }
    } else if (op == "invariants") {
        r.caps["nef_cap"] = nef_cap;
        auto si = surface_invariants(L, {nef_cap});
        r.results["has_isotropic"] = si.has_isotropic;
        r.results["m"] = si.m ? Json(*si.m) : Json(nullptr);
        r.results["mu"] = si.mu;
        r.results["minus_two_exists"] = si.minus_two_exists;
        r.results["minus_two_witness"] = si.minus_two_witness ? vec_json(*si.minus_two_witness) : Json(nullptr);
        r.complete = si.m_complete && si.mu_complete;
    }
}

void cmd_distinguish(RunReport& r, i64 from, i64 to, const std::optional<std::vector<i64>>& a,
                     const std::optional<std::vector<i64>>& b, i64 nef_cap, bool wide) {
    DistinguishOptions opts{nef_cap, wide};
    Json traces = Json::array();
    Table t{{"g", "A", "B", "verdict"}, {}};
    Json open = Json::array();
    auto one = [&](i64 g, const LinearSeries& A, const LinearSeries& B) {
        auto tr = distinguish_pair(g, A, B, opts);
        Json j;
        j["g"] = g;
        j["A"] = pair_json(A);
        j["B"] = pair_json(B);
        j["claim"] = tr.claim();
        j["verdict"] = verdict_name(tr.verdict);
        Json steps = Json::array();
        for (const auto& s : tr.steps)
            steps.push_back({{"rule", s.rule}, {"anchor", s.anchor}, {"evidence", s.evidence}, {"conclusive", s.conclusive}});
        j["steps"] = steps;
        traces.push_back(j);
        if (tr.verdict == Verdict::Inconclusive) open.push_back(Json::array({g, pair_json(A), pair_json(B)}));
        t.rows.push_back({std::to_string(g), pair_str(A), pair_str(B), verdict_name(tr.verdict)});
    };
    for (i64 g = from; g <= to; ++g) {
        if (a && b) {
            one(g, {g, (*a)[0], (*a)[1]}, {g, (*b)[0], (*b)[1]});
            continue;
        }
        auto loci = conjectured_maximal_loci(g);
        for (const auto& A : loci)
            for (const auto& B : loci)
                if (!(A == B)) one(g, A, B);
    }
    r.results["inconclusive"] = open;
    r.results["traces"] = traces;
    r.table = std::move(t);
}

void cmd_secant(RunReport& r, i64 gmax, bool raw) {
    auto hits = scan_unexpected_containments(gmax, {raw});
    Json arr = Json::array();
    Table t{{"g", "source", "locus", "ambient_r", "degree", "k", "l", "expected_dim", "count", "projected"}, {}};
    for (const auto& h : hits) {
        Json j;
        j["g"] = h.g;
        j["source"] = pair_json(h.source);
        j["locus"] = pair_json(h.locus);
        j["config"] = {{"r", h.config.r}, {"d", h.config.d}, {"k", h.config.k}, {"l", h.config.l}};
        j["expected_dim"] = h.expected_dim;
        j["count"] = h.count ? Json(*h.count) : Json(nullptr);
        j["projected"] = pair_json(h.projected);
        arr.push_back(j);
        t.rows.push_back({std::to_string(h.g), pair_str(h.source), pair_str(h.locus), std::to_string(h.config.r),
                          std::to_string(h.config.d), std::to_string(h.config.k), std::to_string(h.config.l),
                          std::to_string(h.expected_dim), h.count ? std::to_string(*h.count) : "",
                          pair_str(h.projected)});
    }
    r.results["hits"] = arr;
    r.table = std::move(t);
}

void cmd_region(RunReport& r, i64 g, const Rat& step) {
    if (g < 2) throw Error(ErrorKind::BadParameters, "region needs g >= 2");
    auto samples = region_samples(g, step);
    Json arr = Json::array();
    Table t{{"r", "gamma_rho", "gamma_delta"}, {}};
    for (const auto& s : samples) {
        std::string gd = format_scaled(s.gamma_delta_scaled);
        arr.push_back({{"r", to_string(s.r)}, {"gamma_rho", to_string(s.gamma_rho)}, {"gamma_delta", gd}});
        t.rows.push_back({to_string(s.r), to_string(s.gamma_rho), gd});
    }
    r.results["digits"] = kRegionDigits;
    r.results["samples"] = arr;
    r.table = std::move(t);
}

void cmd_counterexample(RunReport& r, i64 a, i64 b) {
    auto k = knutsen_counterexample(a, b);
    r.results["lattice"] = describe(k.lattice);
    r.results["curve_class"] = vec_json(k.curve_class);
    r.results["curve_square"] = k.curve_square;
    r.results["genus"] = k.genus;
    r.results["series"] = pair_json(k.series);
    r.results["rho"] = k.rho;
    r.results["curve_lattice"] = describe(k.curve_lattice);
    r.results["no_minus_two"] = k.no_minus_two;
    r.results["no_isotropic"] = k.no_isotropic;
}

CLI::App* sub(CLI::App& parent, const std::string& name, const std::string& desc) {
    auto* s = parent.add_subcommand(name, desc);
    s->fallthrough();
    return s;
}

}  // namespace

RunOutcome run(const std::vector<std::string>& args) {
    RunOutcome out;
    Settings st;
    CLI::App app{"Brill-Noether loci, Picard lattices and lifting bounds", "bnlab"};
    app.require_subcommand(1);
    app.add_option("--format", st.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_flag("--json", st.json_flag, "same as --format json");
    app.add_flag("--no-cache", st.no_cache, "do not read or write the result cache");
    app.add_option("--config", st.config_path, "flat key = value file with caps");
    app.add_option("--jobs", st.jobs, "worker threads for per-genus scans")->check(CLI::Range(1, 256));
    app.add_option("--nef-cap", st.nef_cap, "cap on the (-2)-class search for nefness");

    // parameters shared by many subcommands
    std::optional<i64> genus, gamma_low, e_cap;
    i64 r_ = 0, d_ = 0, from = 2, to = 199, gamma = 0, m = 0, mu = 0, n = 0, rank = 3, a = 6, b = 4, gmax = 200;
    std::string series_s, other_s, gram_s, target_s, a_s, b_s, mode = "l1", strength = "disc-ratio", kind = "dm",
                                                                 step_s = "1/2";
    bool wide = false, raw = false;
    auto strength_opt = [&](CLI::App* s) {
        s->add_option("--strength", strength)->check(CLI::IsMember({"disc-ratio", "exact-h"}));
    };

    auto* loci = sub(app, "loci", "expected and conjectured maximal Brill-Noether loci");
    loci->add_option("--genus", genus)->required()->check(CLI::Range(2, 100000));

    auto* cls = sub(app, "classify", "invariants of a g^r_d");
    cls->add_option("--genus", genus)->required();
    cls->add_option("--r", r_)->required();
    cls->add_option("--d", d_)->required();

    auto* scan = sub(app, "scan-l2", "genera where the L2 condition fails");
    scan->add_option("--from", from);
    scan->add_option("--to", to);
    scan->add_option("--gamma-low", gamma_low);
    strength_opt(scan);

    auto* chk = sub(app, "check", "one L1/L2/L3 condition");
    chk->add_option("--mode", mode)->check(CLI::IsMember({"l1", "l2", "l3"}));
    chk->add_option("--genus", genus)->required();
    chk->add_option("--series", series_s, "fixed series r,d")->required();
    chk->add_option("--other", other_s, "second series r,d for l3");
    chk->add_option("--gamma-low", gamma_low);
    strength_opt(chk);

    auto* lifts = sub(app, "lift-candidates", "potential Donagi-Morrison lifts");
    lifts->add_option("--genus", genus)->required();
    lifts->add_option("--series", series_s, "r,d")->required();
    lifts->add_option("--gamma-low", gamma_low);
    lifts->add_option("--lift-cap", e_cap, "largest lift degree");
    lifts->add_flag("--wide", wide, "degree cap 2g-4");

    auto* filt = sub(app, "filtrations", "terminal filtration bounds of a rank-4 LM bundle");
    filt->add_option("--genus", genus)->required();
    filt->add_option("--d", d_)->required();
    filt->add_option("--gamma", gamma)->required();
    filt->add_option("--m", m)->required();
    filt->add_option("--mu", mu)->required();

    auto* thr = sub(app, "threshold", "rank-3 lifting threshold or strategy threshold");
    thr->add_option("--kind", kind)->check(CLI::IsMember({"dm", "strategy"}));
    thr->add_option("--genus", genus)->required();
    thr->add_option("--gamma", gamma);
    thr->add_option("--m", m);
    thr->add_option("--mu", mu);
    thr->add_option("--r", rank);

    auto* lat = sub(app, "lattice", "rank-2 Picard lattice queries");
    lat->require_subcommand(1);
    lat->add_option("--genus", genus);
    lat->add_option("--series", series_s, "r,d of Lambda^r_{g,d}");
    lat->add_option("--gram", gram_s, "h2,hl,l2");
    std::string lat_op;
    for (const char* op : {"disc", "isotropic", "represents", "embeds", "invariants"}) {
        auto* s = sub(*lat, op, std::string("lattice ") + op);
        if (std::string(op) == "represents") s->add_option("--n", n)->required();
        if (std::string(op) == "embeds") s->add_option("--target", target_s, "r,d of the embedded lattice")->required();
        s->callback([&lat_op, op] { lat_op = op; });
    }

    auto* dist = sub(app, "distinguish", "non-containment proofs between maximal loci");
    dist->add_option("--genus", genus);
    dist->add_option("--from", from);
    dist->add_option("--to", to);
    dist->add_option("--a", a_s, "r,d of A");
    dist->add_option("--b", b_s, "r,d of B");
    dist->add_flag("--wide", wide, "lift degree cap 2g-4");

    auto* sec = sub(app, "secant-scan", "unexpected containments from secant constructions");
    sec->add_option("--max-genus", gmax);
    sec->add_flag("--raw", raw, "keep duplicate and empty configurations");

    auto* reg = sub(app, "region", "samples of the Brill-Noether hyperbola and Hodge parabola");
    reg->add_option("--genus", genus)->required();
    reg->add_option("--step", step_s, "p or p/q");

    auto* cex = sub(app, "counterexample", "rank-2 lattice with a g^3 but no (-2) or elliptic classes");
    cex->add_option("--a", a);
    cex->add_option("--b", b);

    std::ostringstream os, es;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, os, es);
        out.out = os.str();
        out.err = es.str();
        out.exit_code = code == 0 ? 0 : 2;
        return out;
    }
    if (st.json_flag) st.format = "json";

    RunReport rep;
    try {
        st.config = load_config(st.config_path);
        auto* chosen = app.get_subcommands().front();
        rep.command = chosen->get_name();
        auto ints = [](const std::string& s, std::size_t k, const std::string& flag) { return parse_ints(s, k, flag); };
        auto opt_ints = [&](const std::string& s, std::size_t k, const std::string& flag) {
            return s.empty() ? std::optional<std::vector<i64>>() : std::optional(ints(s, k, flag));
        };
        i64 nef = st.nef();
        if (nef < 1) throw CLI::ValidationError("--nef-cap", "must be positive");
        bool cacheable = rep.command == "scan-l2" || rep.command == "distinguish" || rep.command == "secant-scan";

        // params first, so a cache hit skips the work
        if (rep.command == "scan-l2") {
            rep.params["from"] = from;
            rep.params["to"] = to;
            rep.params["strength"] = strength;
            rep.params["gamma_low"] = gamma_low ? Json(*gamma_low) : Json(nullptr);
        } else if (rep.command == "distinguish") {
            if (genus) from = to = *genus;
            else if (!dist->count("--from") || !dist->count("--to"))
                throw CLI::ValidationError("--genus", "distinguish needs --genus or --from/--to");
            if (a_s.empty() != b_s.empty()) throw CLI::ValidationError("--a", "give both --a and --b or neither");
            rep.params["from"] = from;
            rep.params["to"] = to;
            rep.params["a"] = a_s.empty() ? Json(nullptr) : Json(a_s);
            rep.params["b"] = b_s.empty() ? Json(nullptr) : Json(b_s);
            rep.params["wide"] = wide;
            rep.caps["nef_cap"] = nef;
        } else if (rep.command == "secant-scan") {
            rep.params["max_genus"] = gmax;
            rep.params["raw"] = raw;
        }
        if (cacheable && !st.no_cache) {
            if (auto hit = cache_load(rep)) rep = std::move(*hit);
        }

        if (!rep.from_cache) {
            if (rep.command == "loci") {
                cmd_loci(rep, *genus);
            } else if (rep.command == "classify") {
                cmd_classify(rep, *genus, r_, d_);
            } else if (rep.command == "scan-l2") {
                cmd_scan_l2(rep, from, to, strength, gamma_low, st.jobs);
            } else if (rep.command == "check") {
                auto fixed = ints(series_s, 2, "--series");
                auto other = opt_ints(other_s, 2, "--other");
                if (mode == "l3" && !other) throw CLI::ValidationError("--other", "l3 needs --other r,d");
                rep.params["mode"] = mode;
                rep.params["genus"] = *genus;
                rep.params["series"] = Json::array({fixed[0], fixed[1]});
                rep.params["other"] = other ? Json::array({(*other)[0], (*other)[1]}) : Json(nullptr);
                rep.params["strength"] = strength;
                rep.params["gamma_low"] = gamma_low ? Json(*gamma_low) : Json(nullptr);
                cmd_check(rep, mode, *genus, fixed, other, strength, gamma_low);
            } else if (rep.command == "lift-candidates") {
                auto s = ints(series_s, 2, "--series");
                if (!e_cap) e_cap = st.lift();
                rep.params["genus"] = *genus;
                rep.params["series"] = Json::array({s[0], s[1]});
                rep.params["gamma_low"] = gamma_low ? Json(*gamma_low) : Json(nullptr);
                rep.params["wide"] = wide;
                cmd_lift_candidates(rep, *genus, s, gamma_low, e_cap, wide);
            } else if (rep.command == "filtrations") {
                rep.params = {{"genus", *genus}, {"d", d_}, {"gamma", gamma}, {"m", m}, {"mu", mu}};
                cmd_filtrations(rep, *genus, d_, gamma, m, mu);
            } else if (rep.command == "threshold") {
                if (kind == "strategy")
                    rep.params = {{"kind", kind}, {"genus", *genus}, {"r", rank}};
                else
                    rep.params = {{"kind", kind}, {"genus", *genus}, {"gamma", gamma}, {"m", m}, {"mu", mu}};
                cmd_threshold(rep, kind, *genus, gamma, m, mu, rank);
            } else if (rep.command == "lattice") {
                rep.command = "lattice " + lat_op;
                auto L = lattice_from(rep, genus, opt_ints(series_s, 2, "--series"), opt_ints(gram_s, 3, "--gram"));
                cmd_lattice(rep, lat_op, L, n, opt_ints(target_s, 2, "--target"), nef);
            } else if (rep.command == "distinguish") {
                cmd_distinguish(rep, from, to, opt_ints(a_s, 2, "--a"), opt_ints(b_s, 2, "--b"), nef, wide);
            } else if (rep.command == "secant-scan") {
                cmd_secant(rep, gmax, raw);
            } else if (rep.command == "region") {
                Rat step = parse_rat(step_s);
                rep.params = {{"genus", *genus}, {"step", to_string(step)}};
                cmd_region(rep, *genus, step);
            } else if (rep.command == "counterexample") {
                rep.params = {{"a", a}, {"b", b}};
                cmd_counterexample(rep, a, b);
            }
            if (cacheable && !st.no_cache) cache_store(rep);
        }
        out.out = render(rep, st.format);
        out.exit_code = exit_code(rep);
        out.report = std::move(rep);
    } catch (const CLI::Error& e) {
        out.err = "error: " + std::string(e.what()) + "\n";
        out.exit_code = 2;
    } catch (const Error& e) {
        out.err = "error: " + std::string(e.what()) + "\n";
        out.exit_code = 2;
    }
    return out;
}

}  // namespace bnlab
