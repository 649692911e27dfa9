// Command-line frontend: exact CSM cycles of matroid fans, weighted-fan
// calculus, and the lattice-polytope Noether identity, with JSON reports.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "tropcsm/csm.hpp"
#include "tropcsm/fixtures.hpp"
#include "tropcsm/json_io.hpp"

using namespace tropcsm;

namespace {

json witness_to_json(const BalanceWitness& w) {
    json j;
    json tau;
    tau["rays"] = json::array();
    for (const IVec& r : w.tau.rays) {
        json row = json::array();
        for (const Int& x : r) row.push_back(static_cast<long long>(x));
        tau["rays"].push_back(row);
    }
    tau["lineality"] = json::array();
    for (const IVec& r : w.tau.lineality) {
        json row = json::array();
        for (const Int& x : r) row.push_back(static_cast<long long>(x));
        tau["lineality"].push_back(row);
    }
    j["face"] = tau;
    json res = json::array();
    for (const Int& x : w.residual) res.push_back(static_cast<long long>(x));
    j["residual"] = res;
    return j;
}

json chain_to_json(const std::vector<Subset>& chain) {
    json out = json::array();
    for (Subset f : chain) out.push_back(subset_elements(f));
    return out;
}

int cmd_matroid_info(const std::string& file, json& report) {
    Matroid m = matroid_from_json(load_json_file(file));
    report["inputs"] = {{"file", file}, {"matroid", matroid_to_json(m)}};
    json res;
    res["n"] = m.size();
    res["rank"] = m.rank();
    res["connected"] = m.connected();
    res["loops"] = subset_elements(m.loops());
    json flats = json::array();
    for (Subset f : m.flats())
        flats.push_back(json{{"elements", subset_elements(f)}, {"rank", m.rank(f)}});
    res["flats"] = flats;
    res["characteristic_polynomial"] = polynomial_to_json(m.characteristic_polynomial(), "t");
    if (!m.has_loops())
        res["reduced_characteristic"] = polynomial_to_json(m.reduced_characteristic(), "t");
    res["beta"] = static_cast<long long>(m.beta());
    report["results"] = res;
    report["verdict"] = "pass";
    return 0;
}

int cmd_bergman_build(const std::string& file, json& report) {
    Matroid m = matroid_from_json(load_json_file(file));
    report["inputs"] = {{"file", file}, {"matroid", matroid_to_json(m)}};
    BergmanFan bf = bergman_fan(m);
    report["results"] = {{"fan", bergman_to_json(bf)}};
    report["verdict"] = "pass";
    return 0;
}

json cycle_report(const CsmCycle& c) {
    json j;
    j["k"] = c.k;
    j["fan"] = fan_to_json(c.fan);
    json ledger = json::array();
    for (const auto& r : c.cones)
        ledger.push_back(json{{"chain", chain_to_json(r.chain)},
                              {"weight", static_cast<long long>(r.weight)}});
    j["ledger"] = ledger;
    return j;
}

int cmd_csm_compute(const std::string& file, int k, bool k_given, json& report) {
    Matroid m = matroid_from_json(load_json_file(file));
    report["inputs"] = {{"file", file}, {"matroid", matroid_to_json(m)}};
    if (k_given) report["inputs"]["k"] = k;
    json cycles = json::array();
    if (k_given)
        cycles.push_back(cycle_report(csm_cycle(m, k)));
    else
        for (const auto& c : csm_total(m)) cycles.push_back(cycle_report(c));
    report["results"] = {{"cycles", cycles}};
    report["verdict"] = "pass";
    return 0;
}

int cmd_csm_verify(const std::string& file, uint64_t seed, int transforms, json& report) {
    Matroid m = matroid_from_json(load_json_file(file));
    report["inputs"] = {{"file", file},
                        {"matroid", matroid_to_json(m)},
                        {"seed", seed},
                        {"transforms", transforms}};
    bool ok = true;
    json res;

    BergmanFan bf = bergman_fan(m);
    PsiOracle oracle(bf);
    long checked = 0;
    json mismatches = json::array();
    json exponents = json::array();
    if (!m.has_loops()) {
        const int d = m.rank() - 1;
        for (int k = 0; k <= d; ++k) {
            for (const auto& chain : flat_chains(m, k)) {
                PsiWeight pw = oracle.chain_weight(chain);
                Int direct = csm_chain_weight(m, chain);
                ++checked;
                if (pw.weight != direct) {
                    ok = false;
                    mismatches.push_back(json{{"chain", chain_to_json(chain)},
                                              {"psi_weight", static_cast<long long>(pw.weight)},
                                              {"direct_weight", static_cast<long long>(direct)}});
                }
                exponents.push_back(json{{"chain", chain_to_json(chain)},
                                         {"cone_dim", static_cast<int>(chain.size())},
                                         {"exponent", pw.exponent},
                                         {"weight", static_cast<long long>(pw.weight)}});
            }
        }
    }
    res["oracle"] = {{"cones_checked", checked}, {"mismatches", mismatches}};
    res["exponent_ledger"] = exponents;

    json balance = json::array();
    for (const auto& c : csm_total(m)) {
        BalanceWitness w;
        bool b = c.fan.empty() || is_balanced(c.fan, &w);
        if (!b) ok = false;
        json entry = {{"k", c.k}, {"balanced", b}};
        if (!b) entry["witness"] = witness_to_json(w);
        balance.push_back(entry);
    }
    res["balancing"] = balance;

    // GL-invariance of the psi-oracle weights under random unimodular maps
    bool gl_ok = true;
    if (!m.has_loops() && m.size() >= 2) {
        std::mt19937_64 rng(seed);
        const int n = m.size() - 1;
        const int d = m.rank() - 1;
        for (int t = 0; t < transforms && gl_ok; ++t) {
            IMat u = random_unimodular(n, rng);
            for (int k = 0; k <= d && gl_ok; ++k) {
                for (const auto& chain : flat_chains(m, k)) {
                    WeightedFan star = apply_unimodular(star_of_chain(bf, chain), u);
                    Polynomial psi = psi_polynomial(star);
                    Polynomial q = psi;
                    bool divides = true;
                    for (int i = 0; i < k && divides; ++i) {
                        Polynomial next;
                        divides = q.divide_by_x_minus_one(next);
                        q = next;
                    }
                    if (!divides || q.eval(1) != csm_chain_weight(m, chain)) {
                        gl_ok = false;
                        break;
                    }
                }
            }
        }
        if (!gl_ok) ok = false;
    }
    res["gl_invariance"] = {{"transforms", transforms}, {"ok", gl_ok}};

    report["results"] = res;
    report["verdict"] = ok ? "pass" : "fail";
    return ok ? 0 : 1;
}

int cmd_fan_balance(const std::string& file, json& report) {
    WeightedFan f = fan_from_json(load_json_file(file));
    report["inputs"] = {{"file", file}, {"fan", fan_to_json(f)}};
    BalanceWitness w;
    bool b = f.empty() || is_balanced(f, &w);
    json res = {{"balanced", b}};
    if (!b) res["witness"] = witness_to_json(w);
    report["results"] = res;
    report["verdict"] = b ? "pass" : "fail";
    return b ? 0 : 1;
}

int cmd_fan_intersect(const std::string& fa, const std::string& fb, json& report) {
    WeightedFan a = fan_from_json(load_json_file(fa));
    WeightedFan b = fan_from_json(load_json_file(fb));
    report["inputs"] = {{"fileA", fa}, {"fileB", fb}, {"fanA", fan_to_json(a)}, {"fanB", fan_to_json(b)}};
    report["results"] = {{"intersection", fan_to_json(stable_intersection(a, b))}};
    report["verdict"] = "pass";
    return 0;
}

int cmd_fan_recession(const std::string& file, json& report) {
    PolyhedralCycle c = cycle_from_json(load_json_file(file));
    report["inputs"] = {{"file", file}, {"cycle", cycle_to_json(c)}};
    report["results"] = {{"recession", fan_to_json(recession_cycle(c))}};
    report["verdict"] = "pass";
    return 0;
}

json noether_report_json(const NoetherReport& r) {
    json taus = json::array();
    for (const Int& t : r.tau_list) taus.push_back(static_cast<long long>(t));
    return json{{"interior", r.interior},
                {"volume", static_cast<long long>(r.volume)},
                {"area", static_cast<long long>(r.area)},
                {"perimeter", static_cast<long long>(r.perimeter)},
                {"tau", taus},
                {"lhs", static_cast<long long>(r.lhs)},
                {"rhs", static_cast<long long>(r.rhs)},
                {"holds", r.holds}};
}

json census_report_json(const CensusReport& r) {
    json taus = json::array();
    for (const Int& t : r.tau_list) taus.push_back(static_cast<long long>(t));
    return json{{"tets", r.tets},
                {"facet_triangles", r.facet_triangles},
                {"edge_segments", r.edge_segments},
                {"tau", taus},
                {"lhs", static_cast<long long>(r.lhs)},
                {"rhs", static_cast<long long>(r.rhs)},
                {"holds", r.holds}};
}

// Recognizes conv{0, d e1, d e2, d e3} and [0,d]^3 and returns their
// staircase triangulations.
Triangulation staircase_for(const LatticePolytope3& p) {
    auto vertex_set = [](const IMat& pts) {
        IMat s = pts;
        std::sort(s.begin(), s.end());
        return s;
    };
    IMat have = vertex_set(p.vertices);
    for (long d = 1; d <= 64; ++d) {
        const Int dd(d);
        IMat simplex = {{Int(0), Int(0), Int(0)}, {dd, Int(0), Int(0)}, {Int(0), dd, Int(0)}, {Int(0), Int(0), dd}};
        if (vertex_set(simplex) == have) return staircase_simplex(static_cast<int>(d));
        IMat cube;
        for (Int x : {Int(0), dd})
            for (Int y : {Int(0), dd})
                for (Int z : {Int(0), dd}) cube.push_back({x, y, z});
        if (vertex_set(cube) == have) return staircase_cube(static_cast<int>(d));
    }
    throw Error(Err::ParseError,
                "staircase triangulations cover only d-dilated corner simplices and cubes [0,d]^3");
}

int cmd_noether(const std::string& file, const std::string& tri_file, bool staircase, json& report) {
    LatticePolytope3 p = polytope_from_json(load_json_file(file));
    report["inputs"] = {{"file", file}, {"polytope", polytope_to_json(p)}};
    NoetherReport nr = noether_check(p);
    json res = {{"identity", noether_report_json(nr)}};
    bool ok = nr.holds;
    if (staircase || !tri_file.empty()) {
        Triangulation t = staircase ? staircase_for(p) : triangulation_from_json(load_json_file(tri_file));
        if (!tri_file.empty()) report["inputs"]["triangulation"] = tri_file;
        if (staircase) report["inputs"]["staircase"] = true;
        CensusReport cr = dual_census_check(p, t);
        res["census"] = census_report_json(cr);
        bool agree = cr.lhs == nr.lhs && cr.rhs == nr.rhs && cr.tau_list == nr.tau_list;
        res["ledgers_agree"] = agree;
        ok = ok && cr.holds && agree;
    }
    report["results"] = res;
    report["verdict"] = ok ? "pass" : "fail";
    return ok ? 0 : 1;
}

int cmd_paperchecks(json& report) {
    report["inputs"] = json::object();
    json checks = json::array();
    bool all_ok = true;
    auto add = [&](const std::string& name, bool pass, json detail = json::object(),
                   bool expected_fail = false) {
        json c = {{"name", name}, {"pass", pass}};
        if (expected_fail) c["expected-fail"] = true;
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(c);
        if (!pass) all_ok = false;
    };

    // chi of a single coloop is t - 1
    add("coloop characteristic polynomial t-1",
        Matroid::uniform(1, 1).characteristic_polynomial() == Polynomial({Int(-1), Int(1)}));

    // a matroid with a loop has an empty Bergman fan
    add("loop matroid has empty Bergman fan",
        bergman_fan(Matroid::from_bases(2, {{0}})).fan.empty());

    Matroid u23 = Matroid::uniform(2, 3);
    CsmCycle c0 = csm_cycle(u23, 0);
    add("csm_0(U(2,3)) = -1 at the origin",
        c0.fan.cones.size() == 1 && cones_equal(c0.fan.cones[0].cone, origin_cone(2)) &&
            c0.fan.cones[0].weight == -1);
    CsmCycle c1 = csm_cycle(u23, 1);
    bool c1_ok = c1.fan.cones.size() == 3 && cycles_equal(c1.fan, bergman_fan(u23).fan);
    for (const auto& wc : c1.fan.cones) c1_ok = c1_ok && wc.weight == 1;
    add("csm_1(U(2,3)) = Bergman fan with unit weights", c1_ok);

    PsiWeight pw = csm_weight_via_psi(u23, origin_cone(2));
    add("psi-oracle at the U(2,3) origin gives -1", pw.weight == -1,
        json{{"exponent", pw.exponent}});

    // psi of every ray star of the pyramid hypersurface is (t-1)(t-2)
    WeightedFan pyr = pyramid_hypersurface_fan();
    bool stars_ok = true;
    Polynomial expect({Int(2), Int(-3), Int(1)});
    for (const auto& ray : {IVec{Int(0), Int(0), Int(-1)}, IVec{Int(-1), Int(0), Int(0)},
                            IVec{Int(0), Int(-1), Int(0)}, IVec{Int(1), Int(0), Int(1)},
                            IVec{Int(0), Int(1), Int(1)}})
        stars_ok = stars_ok && psi_polynomial(star_fan(pyr, make_cone(3, {ray}, {}))) == expect;
    add("pyramid hypersurface ray stars have psi = (t-1)(t-2)", stars_ok);

    // the constant-weight 1-skeleton of that hypersurface is not balanced
    BalanceWitness w;
    bool unbalanced = !is_balanced(pyramid_skeleton(Int(-1)), &w);
    add("constant -1 weights on the pyramid 1-skeleton are unbalanced", unbalanced,
        unbalanced ? json{{"witness", witness_to_json(w)}} : json::object(), true);

    // two decompositions of the same balanced fan disagree on csm_0
    Int u13_deg = degree0(csm_cycle(Matroid::uniform(1, 3), 0).fan);
    IMat crem = {{Int(-1), Int(0)}, {Int(0), Int(-1)}};
    Int dec_a = degree0(c0.fan) + degree0(apply_unimodular(c0.fan, crem)) - u13_deg;
    add("decomposition into two U(2,3) fans minus a point gives -3p", dec_a == -3,
        json{{"degree", static_cast<long long>(dec_a)}});
    Int lines = 0;
    for (const auto& bases : std::vector<std::vector<std::vector<int>>>{
             {{0, 1}, {0, 2}}, {{0, 1}, {1, 2}}, {{0, 2}, {1, 2}}})
        lines += degree0(csm_cycle(Matroid::from_bases(3, bases), 0).fan);
    Int dec_b = lines - 2 * u13_deg;
    add("decomposition into three lines minus two points gives -2p", dec_b == -2,
        json{{"degree", static_cast<long long>(dec_b)}});

    // product formula identity cases
    ProductCheckReport pa = product_check(u23, u23);
    add("product formula for (U(2,3), U(2,3))", pa.all_equal, json{{"identified", pa.identified}});
    ProductCheckReport pb = product_check(Matroid::free_matroid(3), u23);
    add("product formula for (free rank 3, U(2,3))", pb.all_equal,
        json{{"identified", pb.identified}});

    // Noether identity anchors
    auto hull_simplex = [](long d) {
        const Int dd(d);
        return hull({{Int(0), Int(0), Int(0)}, {dd, Int(0), Int(0)}, {Int(0), dd, Int(0)}, {Int(0), Int(0), dd}});
    };
    NoetherReport unit = noether_check(hull_simplex(1));
    add("Noether identity on the unit simplex (lhs = rhs = 12)",
        unit.holds && unit.lhs == 12, noether_report_json(unit));
    NoetherReport s4 = noether_check(hull_simplex(4));
    add("Noether identity on the 4-dilated simplex (lhs = rhs = 24)",
        s4.holds && s4.lhs == 24, noether_report_json(s4));
    IMat cube2;
    for (Int x : {Int(0), Int(2)})
        for (Int y : {Int(0), Int(2)})
            for (Int z : {Int(0), Int(2)}) cube2.push_back({x, y, z});
    NoetherReport cr = noether_check(hull(cube2));
    add("Noether identity on the cube [0,2]^3 (lhs = rhs = 24)", cr.holds && cr.lhs == 24,
        noether_report_json(cr));

    report["results"] = {{"checks", checks}};
    report["verdict"] = all_ok ? "pass" : "fail";
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact CSM cycles of matroid fans, weighted-fan calculus, and lattice-polytope checks"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "Include wall time in the report");

    std::string file, file_b, tri_file;
    int k = -1;
    uint64_t seed = 0;
    int transforms = 10;
    bool staircase = false;

    auto* matroid = app.add_subcommand("matroid", "Matroid inspection");
    auto* minfo = matroid->add_subcommand("info", "Flats, characteristic polynomial, beta invariant");
    minfo->add_option("file", file, "Matroid JSON file")->required();

    auto* bergman = app.add_subcommand("bergman", "Bergman fan construction");
    auto* bbuild = bergman->add_subcommand("build", "Emit the Bergman fan with chain annotations");
    bbuild->add_option("file", file, "Matroid JSON file")->required();

    auto* csm = app.add_subcommand("csm", "CSM cycles");
    auto* ccompute = csm->add_subcommand("compute", "CSM cycles with the per-cone weight ledger");
    ccompute->add_option("file", file, "Matroid JSON file")->required();
    auto* kopt = ccompute->add_option("-k", k, "Single grade to compute");
    auto* cverify = csm->add_subcommand(
        "verify", "Cross-check the beta-formula weights against the psi-oracle; balancing; GL-invariance");
    cverify->add_option("file", file, "Matroid JSON file")->required();
    cverify->add_option("--seed", seed, "Seed for the unimodular transforms")->capture_default_str();
    cverify->add_option("--transforms", transforms, "Number of random unimodular transforms")
        ->capture_default_str();

    auto* fan = app.add_subcommand("fan", "Weighted-fan calculus");
    auto* fbalance = fan->add_subcommand("balance", "Check the balancing condition");
    fbalance->add_option("file", file, "Fan JSON file")->required();
    auto* fintersect = fan->add_subcommand("intersect", "Stable intersection of two fans");
    fintersect->add_option("fileA", file, "First fan JSON file")->required();
    fintersect->add_option("fileB", file_b, "Second fan JSON file")->required();
    auto* frecession = fan->add_subcommand("recession", "Recession fan of a polyhedral cycle");
    frecession->add_option("file", file, "Cycle JSON file")->required();

    auto* noether = app.add_subcommand("noether", "Lattice-polytope Noether identity");
    auto* ncheck = noether->add_subcommand("check", "Verify 12(1+i) = 2V - 3A + 3P + sum tau");
    ncheck->add_option("polytope", file, "Polytope JSON file")->required();
    auto* topt = ncheck->add_option("--triangulation", tri_file,
                                    "Unimodular triangulation JSON for the dual vertex census");
    ncheck->add_flag("--staircase", staircase, "Use the built-in staircase triangulation")
        ->excludes(topt);

    app.add_subcommand("paperchecks", "Run the suite of fixed worked-example checks");

    // let --timing (registered on the root) appear after any subcommand
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << json{{"schema", 1}, {"error", "UsageError"}, {"detail", e.what()}}.dump()
                  << "\n";
        return 2;
    }

    json report;
    report["schema"] = 1;
    const auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (minfo->parsed()) {
            report["command"] = "matroid info";
            code = cmd_matroid_info(file, report);
        } else if (bbuild->parsed()) {
            report["command"] = "bergman build";
            code = cmd_bergman_build(file, report);
        } else if (ccompute->parsed()) {
            report["command"] = "csm compute";
            code = cmd_csm_compute(file, k, kopt->count() > 0, report);
        } else if (cverify->parsed()) {
            report["command"] = "csm verify";
            code = cmd_csm_verify(file, seed, transforms, report);
        } else if (fbalance->parsed()) {
            report["command"] = "fan balance";
            code = cmd_fan_balance(file, report);
        } else if (fintersect->parsed()) {
            report["command"] = "fan intersect";
            code = cmd_fan_intersect(file, file_b, report);
        } else if (frecession->parsed()) {
            report["command"] = "fan recession";
            code = cmd_fan_recession(file, report);
        } else if (ncheck->parsed()) {
            report["command"] = "noether check";
            code = cmd_noether(file, tri_file, staircase, report);
        } else {
            report["command"] = "paperchecks";
            code = cmd_paperchecks(report);
        }
    } catch (const Error& e) {
        std::cerr << json{{"schema", 1}, {"error", err_name(e.code())}, {"detail", e.what()}}.dump()
                  << "\n";
        return 2;
    }
    if (timing) {
        const auto dt = std::chrono::steady_clock::now() - t0;
        report["wall_time_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }
    std::cout << report.dump(2) << "\n";
    return code;
}
