#include "forge/report.hpp"

#include <chrono>

#include "forge/errors.hpp"
#include "forge/parse.hpp"

namespace forge {

void RunConfig::validate() const {
    if (n <= 0 || n % 2 != 0) throw ConfigError("n must be a positive even integer, got " + std::to_string(n));
    if (max_arity < n + 2) throw ConfigError("max_arity must be at least n+2");
    if (t_window_lo > t_window_hi) throw ConfigError("empty t-exponent window");
    if (order_bound < 0) throw ConfigError("order_bound must be nonnegative");
    if (imax < 0) throw ConfigError("imax must be nonnegative");
}

Json RunConfig::echo() const {
    Json j;
    j["n"] = n;
    j["max_arity"] = max_arity;
    j["order_bound"] = order_bound;
    j["t_window"] = {t_window_lo, t_window_hi};
    j["seed"] = seed;
    j["sample_count"] = sample_count;
    j["aut_count"] = aut_count;
    j["imax"] = imax;
    j["size_limit"] = size_limit;
    j["aut_files"] = aut_files;
    return j;
}

RunConfig RunConfig::from_json(const Json& j, const RunConfig& base) {
    RunConfig c = base;
    if (j.contains("n")) c.n = j["n"].get<int>();
    if (j.contains("max_arity"))
        c.max_arity = j["max_arity"].get<int>();
    else if (j.contains("n"))
        c.max_arity = 2 * c.n + 3;
    if (j.contains("order_bound")) c.order_bound = j["order_bound"].get<int>();
    if (j.contains("t_window")) {
        c.t_window_lo = j["t_window"].at(0).get<int>();
        c.t_window_hi = j["t_window"].at(1).get<int>();
    }
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("sample_count")) c.sample_count = j["sample_count"].get<int>();
    if (j.contains("aut_count")) c.aut_count = j["aut_count"].get<int>();
    if (j.contains("imax")) c.imax = j["imax"].get<int>();
    if (j.contains("size_limit")) c.size_limit = j["size_limit"].get<std::size_t>();
    if (j.contains("with_timings")) c.with_timings = j["with_timings"].get<bool>();
    if (j.contains("aut_files")) c.aut_files = j["aut_files"].get<std::vector<std::string>>();
    return c;
}

AutSpec autspec_from_json(const Tower& tw, const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("automorphism json: ") + e.what());
    }
    AutSpec f;
    try {
        for (const auto& s : j.at("images_x")) f.images_x.push_back(parse_ratfunc(tw.nvars(), s.get<std::string>()));
        f.t_unit = parse_ratfunc(tw.nvars(), j.at("t_unit").get<std::string>());
    } catch (const Json::exception& e) {
        throw ParseError(std::string("automorphism json: ") + e.what());
    }
    validate_aut(tw, f);
    return f;
}

std::string autspec_to_json(const AutSpec& f) {
    Json j;
    j["images_x"] = Json::array();
    for (const auto& im : f.images_x) j["images_x"].push_back(im.to_string());
    j["t_unit"] = f.t_unit.to_string();
    return j.dump(2);
}

namespace {

struct StepTimer {
    bool enabled;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    void record(Json& step) {
        if (!enabled) return;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        step["elapsed_ms"] = ms.count();
    }
};

Json json_dims(const std::vector<int>& v) {
    Json a = Json::array();
    for (int d : v) a.push_back(d);
    return a;
}

RunResult finish(Json&& report, bool all_ok) {
    RunResult r;
    report["overall"] = all_ok ? "pass" : "fail";
    r.report = std::move(report);
    r.all_ok = all_ok;
    r.exit_code = all_ok ? 0 : 1;
    return r;
}

Json report_header(const char* command, const RunConfig& cfg) {
    Json rep;
    rep["schema_version"] = kReportSchemaVersion;
    rep["command"] = command;
    rep["config"] = cfg.echo();
    rep["steps"] = Json::array();
    return rep;
}

std::vector<AutSpec> bundled_autspecs(const Tower& tw) {
    const int m = tw.nvars();
    std::vector<AutSpec> out;
    {
        AutSpec id;  // identity
        for (int i = 0; i < m; ++i) id.images_x.push_back(RatFunc::variable(m, i));
        id.t_unit = RatFunc(m, Rat(1));
        out.push_back(std::move(id));
    }
    {
        AutSpec sc;  // x1 -> 2 x1
        for (int i = 0; i < m; ++i) sc.images_x.push_back(RatFunc::variable(m, i));
        sc.images_x[0] = RatFunc(m, Rat(2)) * RatFunc::variable(m, 0);
        sc.t_unit = RatFunc(m, Rat(1));
        out.push_back(std::move(sc));
    }
    if (m >= 2) {
        AutSpec sw;  // swap x1, x2 and stretch t by x1
        for (int i = 0; i < m; ++i) sw.images_x.push_back(RatFunc::variable(m, i));
        std::swap(sw.images_x[0], sw.images_x[1]);
        sw.t_unit = RatFunc::variable(m, 0);
        out.push_back(std::move(sw));
    }
    return out;
}

Json certificate_json(const AutSpec& f, const ObstructionCertificate& cert,
                      const std::string& label) {
    Json j;
    j["label"] = label;
    j["images_x"] = Json::array();
    for (const auto& im : f.images_x) j["images_x"].push_back(im.to_string());
    j["t_unit"] = f.t_unit.to_string();
    j["jacobian_det"] = cert.jacobian.to_string();
    j["certificate"] = cert.value.to_string();
    j["verdict"] = cert.nonzero ? "nonzero class" : "zero";
    return j;
}

}  // namespace

RunResult cmd_demo(const RunConfig& cfg) {
    cfg.validate();
    const Tower tw{cfg.n};
    Json rep = report_header("demo", cfg);
    bool all_ok = true;
    auto push_step = [&](Json&& step, bool ok) {
        step["verdict"] = ok ? "pass" : "fail";
        rep["steps"].push_back(std::move(step));
        all_ok = all_ok && ok;
    };

    // step 1: the alternating cochain on K
    {
        StepTimer t{cfg.with_timings};
        Json step;
        step["name"] = "cocycle_on_k";
        PolyDiffCochain vx = volume_cocycle_x(tw);
        bool closed = vx.hochschild_differential().is_zero();
        bool symbol = !vx.hkr_symbol().is_zero();
        step["arity"] = vx.arity();
        step["terms"] = vx.term_count();
        step["closed"] = closed;
        step["hkr_symbol"] = vx.hkr_symbol().to_string();
        t.record(step);
        push_step(std::move(step), closed && symbol);
    }

    // step 2: the seed cochain on F: cocycle + dual nontriviality certificates
    PolyDiffCochain seed = volume_cocycle_xt(tw);
    {
        StepTimer t{cfg.with_timings};
        Json step;
        step["name"] = "seed_cocycle";
        bool closed = seed.hochschild_differential().is_zero();
        bool symbol = !seed.hkr_symbol().is_zero();
        bool primitive_absent = false;
        try {
            primitive_absent = !solve_coboundary(seed, cfg.solver()).has_value();
        } catch (const NotClosed&) {
            primitive_absent = false;
        }
        step["arity"] = seed.arity();
        step["internal_degree"] = seed.degree();
        step["terms"] = seed.term_count();
        step["closed"] = closed;
        step["hkr_symbol"] = seed.hkr_symbol().to_string();
        step["bounded_primitive_absent"] = primitive_absent;
        t.record(step);
        push_step(std::move(step), closed && symbol && primitive_absent);
    }

    // step 3: minimal extension and symbolic Stasheff verification
    AInfStructure deformed(tw);
    {
        StepTimer t{cfg.with_timings};
        Json step;
        step["name"] = "extension";
        bool ok = true;
        try {
            ExtensionOutcome out = extend_minimal(multiplication_cochain(tw), seed, cfg.max_arity, cfg.solver());
            deformed = out.structure;
            step["stasheff_symbolic_range"] = {3, out.structure.verified_arity()};
            step["verified_arity"] = out.structure.verified_arity();
            step["branch"] = out.seed_square_vanished ? "seed square vanished strictly"
                                                      : "primitive solved for the seed square";
            step["corrected_arities"] = json_dims(out.corrected_arities);
            step["zero_obstruction_arities"] = json_dims(out.zero_obstruction_arities);
            Json ops = Json::array();
            for (const auto& [d, m] : out.structure.ops()) {
                Json o;
                o["arity"] = d;
                o["terms"] = m.term_count();
                o["internal_degree"] = m.degree();
                ops.push_back(std::move(o));
            }
            step["operations"] = std::move(ops);
            StasheffReport sampled =
                stasheff_check_sampled(out.structure, cfg.n + 3, cfg.sample_count, cfg.seed);
            step["sampled_identity"] = Json{{"arity", sampled.arity},
                                            {"tuples", cfg.sample_count},
                                            {"ok", sampled.ok}};
            ok = ok && sampled.ok;
        } catch (const Error& e) {
            ok = false;
            step["error"] = e.what();
        }
        t.record(step);
        push_step(std::move(step), ok);
    }

    // step 4: morphism obstruction certificates
    {
        StepTimer t{cfg.with_timings};
        Json step;
        step["name"] = "morphism_obstructions";
        bool ok = true;
        Json certs = Json::array();
        Rat expected_identity = rat_factorial(tw.ndirs());
        std::vector<AutSpec> specs = bundled_autspecs(tw);
        std::vector<std::string> labels = {"identity", "scale_x1_by_2", "swap_x1_x2_t_unit_x1"};
        for (std::size_t k = 0; k < specs.size(); ++k) {
            ObstructionCertificate cert = morphism_obstruction(tw, specs[k], seed);
            Json cj = certificate_json(specs[k], cert, labels[k]);
            bool this_ok = cert.nonzero;
            if (k == 0) {
                FElem want(tw, RatFunc(tw.nvars(), expected_identity), 0);
                this_ok = this_ok && cert.value == want;
                cj["expected"] = want.to_string();
            }
            certs.push_back(std::move(cj));
            ok = ok && this_ok;
        }
        for (const auto& text : cfg.aut_files) {
            AutSpec f = autspec_from_json(tw, text);
            ObstructionCertificate cert = morphism_obstruction(tw, f, seed);
            certs.push_back(certificate_json(f, cert, "user"));
            ok = ok && cert.nonzero;
        }
        Rng rng(cfg.seed);
        for (int k = 0; k < cfg.aut_count; ++k) {
            AutSpec f = random_autspec(rng, tw);
            ObstructionCertificate cert = morphism_obstruction(tw, f, seed);
            certs.push_back(certificate_json(f, cert, "random_" + std::to_string(k)));
            ok = ok && cert.nonzero;
        }
        step["certificates"] = std::move(certs);
        t.record(step);
        push_step(std::move(step), ok);
    }

    // step 5: endomorphism invariants of rank-1 twisted complexes
    {
        StepTimer t{cfg.with_timings};
        Json step;
        step["name"] = "endo_invariants";
        bool ok = true;
        AInfStructure strict(tw);
        Json rows = Json::array();
        for (int u = -3; u <= 3; ++u) {
            EndoInvariant a = endo_invariant(u, strict);
            EndoInvariant b = endo_invariant(u, deformed);
            Json r;
            r["shift"] = u;
            r["strict_all_higher_zero"] = a.strictly_associative;
            r["deformed_seed_symbol_nonzero"] = b.seed_symbol_nonzero;
            r["conjugation_sign"] = b.conjugation_sign;
            rows.push_back(std::move(r));
            ok = ok && a.strictly_associative && !a.seed_symbol_nonzero && b.seed_symbol_nonzero &&
                 !b.strictly_associative;
        }
        step["shifts"] = std::move(rows);
        t.record(step);
        push_step(std::move(step), ok);
    }

    return finish(std::move(rep), all_ok);
}

RunResult cmd_hh(const std::string& algebra_json_text, int imax, const RunConfig& cfg) {
    Json rep = report_header("hh", cfg);
    SmallAlgebra A = SmallAlgebra::from_json(algebra_json_text);
    HHTable t = hh_bruteforce(A, imax, cfg.size_limit);
    Json step;
    step["name"] = "hh_bruteforce";
    step["algebra"] = A.name.empty() ? "(unnamed)" : A.name;
    step["dim"] = A.dim;
    step["imax"] = imax;
    step["dims"] = json_dims(t.dims);
    Json bg = Json::array();
    for (const auto& [i, row] : t.by_degree)
        for (const auto& [s, d] : row) bg.push_back({i, s, d});
    step["bigraded"] = std::move(bg);
    step["verdict"] = "pass";
    rep["steps"].push_back(std::move(step));
    return finish(std::move(rep), true);
}

RunResult cmd_kunneth(const std::string& a_json, const std::string& b_json, int imax, const RunConfig& cfg) {
    Json rep = report_header("kunneth", cfg);
    SmallAlgebra A = SmallAlgebra::from_json(a_json);
    SmallAlgebra B = SmallAlgebra::from_json(b_json);
    KunnethReport kr = kunneth_check(A, B, imax, cfg.size_limit);
    Json step;
    step["name"] = "kunneth_check";
    step["lhs_tensor_dims"] = json_dims(kr.lhs);
    step["rhs_convolution_dims"] = json_dims(kr.rhs);
    step["verdict"] = kr.ok ? "pass" : "fail";
    rep["steps"].push_back(std::move(step));
    return finish(std::move(rep), kr.ok);
}

RunResult cmd_laurent(int imax, const RunConfig& cfg) {
    Json rep = report_header("laurent", cfg);
    LaurentReport lr = hh_laurent(imax, cfg.seed);
    Json step;
    step["name"] = "hh_laurent";
    step["imax"] = imax;
    step["ranks"] = json_dims(lr.ranks);
    step["nonzerodivisor_ok"] = lr.nonzerodivisor_ok;
    step["kernel_generated_by_omega"] = lr.kernel_ok;
    step["induced_map_zero"] = lr.induced_map_zero;
    step["ddt_derivation_ok"] = lr.derivation_ok;
    step["ddt_class_nontrivial"] = lr.nontrivial_class;
    std::vector<int> expected(static_cast<std::size_t>(imax) + 1, 0);
    expected[0] = expected[1] = 1;
    bool ok = lr.ok() && lr.ranks == expected;
    step["verdict"] = ok ? "pass" : "fail";
    rep["steps"].push_back(std::move(step));
    return finish(std::move(rep), ok);
}

RunResult cmd_obstruction(const std::string& aut_json_text, const RunConfig& cfg) {
    cfg.validate();
    const Tower tw{cfg.n};
    Json rep = report_header("obstruction", cfg);
    AutSpec f = autspec_from_json(tw, aut_json_text);
    PolyDiffCochain seed = volume_cocycle_xt(tw);
    ObstructionCertificate cert = morphism_obstruction(tw, f, seed);
    Json step = certificate_json(f, cert, "user");
    step["name"] = "morphism_obstruction";
    step["verdict"] = cert.nonzero ? "pass" : "fail";
    rep["steps"].push_back(std::move(step));
    return finish(std::move(rep), cert.nonzero);
}

RunResult cmd_tw_check(const std::string& complex_json_text, bool deformed, const RunConfig& cfg) {
    cfg.validate();
    const Tower tw{cfg.n};
    Json rep = report_header("tw_check", cfg);
    TwistedComplex X = TwistedComplex::from_json(tw, complex_json_text);
    AInfStructure S(tw);
    if (deformed) {
        ExtensionOutcome out =
            extend_minimal(multiplication_cochain(tw), volume_cocycle_xt(tw), cfg.max_arity, cfg.solver());
        S = out.structure;
    }
    MCReport mc = mc_check(X, S);
    Json step;
    step["name"] = "mc_check";
    step["structure"] = deformed ? "deformed" : "strict";
    step["rank"] = X.rank();
    step["mc_holds"] = mc.ok;
    if (!mc.ok) {
        step["first_violation"] = {mc.first_bad.first, mc.first_bad.second};
        step["value"] = mc.value;
    }
    step["verdict"] = mc.ok ? "pass" : "fail";
    rep["steps"].push_back(std::move(step));
    return finish(std::move(rep), mc.ok);
}

}  // namespace forge
