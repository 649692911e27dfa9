// Acceptance gate: runs the ten required end-to-end checks and prints one
// pass/fail line per criterion. Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "tropcsm/csm.hpp"
#include "tropcsm/fixtures.hpp"
#include "tropcsm/json_io.hpp"

using namespace tropcsm;

namespace {

struct Named {
    std::string name;
    Matroid m;
};

// Non-isomorphic connected simple graphs on 2..5 vertices, as graphic matroids.
std::vector<Named> connected_graph_matroids() {
    std::vector<Named> out;
    for (int v = 2; v <= 5; ++v) {
        std::vector<std::pair<int, int>> all;
        for (int a = 0; a < v; ++a)
            for (int b = a + 1; b < v; ++b) all.push_back({a, b});
        const int ne = static_cast<int>(all.size());
        int idx[5][5] = {};
        for (int i = 0; i < ne; ++i) idx[all[i].first][all[i].second] = i;
        std::vector<int> perm(v);
        std::iota(perm.begin(), perm.end(), 0);
        std::set<uint32_t> seen;
        int count = 0;
        for (uint32_t mask = 1; mask < (1u << ne); ++mask) {
            // connectivity over all v vertices
            std::vector<int> comp(v);
            std::iota(comp.begin(), comp.end(), 0);
            auto find = [&](int x) {
                while (comp[x] != x) x = comp[x] = comp[comp[x]];
                return x;
            };
            int parts = v;
            for (int i = 0; i < ne; ++i)
                if (mask >> i & 1u) {
                    int a = find(all[i].first), b = find(all[i].second);
                    if (a != b) {
                        comp[a] = b;
                        --parts;
                    }
                }
            if (parts != 1) continue;
            // canonical form: minimum edge mask over vertex relabelings
            uint32_t canon = mask;
            std::vector<int> p = perm;
            do {
                uint32_t img = 0;
                for (int i = 0; i < ne; ++i)
                    if (mask >> i & 1u) {
                        int a = p[all[i].first], b = p[all[i].second];
                        img |= 1u << idx[std::min(a, b)][std::max(a, b)];
                    }
                canon = std::min(canon, img);
            } while (std::next_permutation(p.begin(), p.end()));
            if (!seen.insert(canon).second) continue;
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < ne; ++i)
                if (canon >> i & 1u) edges.push_back(all[i]);
            out.push_back({"graph(" + std::to_string(v) + "v," + std::to_string(edges.size()) +
                               "e)#" + std::to_string(++count),
                           Matroid::graphic(v, edges)});
        }
    }
    return out;
}

// The criterion-1 suite: uniforms n <= 7, connected graphs on <= 5 vertices,
// Fano and non-Fano, and all their single-element minors; duplicates (equal
// ground set and basis family) are checked once.
std::vector<Named> build_suite() {
    std::vector<Named> base;
    for (int n = 1; n <= 7; ++n)
        for (int r = 1; r <= n; ++r)
            base.push_back({"U(" + std::to_string(r) + "," + std::to_string(n) + ")",
                            Matroid::uniform(r, n)});
    for (auto& g : connected_graph_matroids()) base.push_back(std::move(g));
    base.push_back({"Fano", Matroid::fano()});
    base.push_back({"non-Fano", Matroid::non_fano()});

    std::vector<Named> suite;
    std::set<std::pair<int, std::vector<Subset>>> seen;
    auto push = [&](Named nm) {
        if (seen.insert({nm.m.size(), nm.m.bases()}).second) suite.push_back(std::move(nm));
    };
    for (const auto& nm : base) {
        push(nm);
        if (nm.m.size() < 2) continue;
        const Subset full = (1u << nm.m.size()) - 1;
        for (int e = 0; e < nm.m.size(); ++e) {
            push({nm.name + "\\" + std::to_string(e), nm.m.minor(full & ~(1u << e), 0)});
            push({nm.name + "/" + std::to_string(e), nm.m.minor(full, 1u << e)});
        }
    }
    return suite;
}

struct ChainRecord {
    int dim = 0;
    int exponent = 0;
    Int psi_weight;
    Int direct_weight;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void verdict(int criterion, bool pass, const std::string& text, double secs) {
    std::printf("[criterion %2d] %s  %s (%.1fs)\n", criterion, pass ? "PASS" : "FAIL", text.c_str(),
                secs);
    std::fflush(stdout);
    if (!pass) ++failures;
}

} // namespace

int main() {
    const auto suite_t0 = std::chrono::steady_clock::now();
    std::vector<Named> suite = build_suite();

    // One oracle sweep over every cone of every Bergman fan in the suite;
    // criteria 1, 9 and 10 are all judged from these records.
    std::vector<std::vector<ChainRecord>> records(suite.size());
    long cones_checked = 0;
    bool oracle_ok = true;
    for (size_t i = 0; i < suite.size(); ++i) {
        const Matroid& m = suite[i].m;
        if (m.has_loops() || m.rank() == 0) continue;
        PsiOracle oracle(bergman_fan(m));
        const int d = m.rank() - 1;
        std::vector<std::vector<Subset>> chains;
        for (int k = 0; k <= d; ++k)
            for (auto& c : flat_chains(m, k)) chains.push_back(std::move(c));
        std::vector<ChainRecord> recs(chains.size());
#pragma omp parallel for schedule(dynamic)
        for (long c = 0; c < static_cast<long>(chains.size()); ++c) {
            PsiWeight pw = oracle.chain_weight(chains[c]);
            recs[c] = {static_cast<int>(chains[c].size()), pw.exponent, pw.weight,
                       csm_chain_weight(m, chains[c])};
        }
        for (const auto& r : recs)
            if (r.psi_weight != r.direct_weight) oracle_ok = false;
        cones_checked += static_cast<long>(recs.size());
        records[i] = std::move(recs);
    }
    verdict(1, oracle_ok,
            "Def-3.1 weights equal psi-oracle weights: " + std::to_string(suite.size()) +
                " matroids, " + std::to_string(cones_checked) + " cones",
            seconds_since(suite_t0));

    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        long fans = 0;
        for (const auto& nm : suite)
            for (const auto& c : csm_total(nm.m)) {
                if (!c.fan.empty() && !is_balanced(c.fan)) ok = false;
                ++fans;
            }
        verdict(2, ok, "every csm_k cycle is balanced: " + std::to_string(fans) + " fans",
                seconds_since(t0));
    }

    {
        const auto t0 = std::chrono::steady_clock::now();
        BalanceWitness w;
        bool unbalanced = !is_balanced(pyramid_skeleton(Int(-1)), &w);
        std::string text = "constant -1 weights on the hypersurface 1-skeleton are unbalanced";
        if (unbalanced) {
            text += "; witness face rays={";
            for (const auto& r : w.tau.rays)
                for (const auto& x : r) text += x.str() + " ";
            text += "} residual=(";
            for (size_t j = 0; j < w.residual.size(); ++j)
                text += w.residual[j].str() + (j + 1 < w.residual.size() ? "," : ")");
        }
        verdict(3, unbalanced, text, seconds_since(t0));
    }

    {
        const auto t0 = std::chrono::steady_clock::now();
        CsmCycle c0 = csm_cycle(Matroid::uniform(2, 3), 0);
        Int u13 = degree0(csm_cycle(Matroid::uniform(1, 3), 0).fan);
        IMat crem = {{Int(-1), Int(0)}, {Int(0), Int(-1)}};
        Int dec_a = degree0(c0.fan) + degree0(apply_unimodular(c0.fan, crem)) - u13;
        Int lines = 0;
        for (const auto& bases : std::vector<std::vector<std::vector<int>>>{
                 {{0, 1}, {0, 2}}, {{0, 1}, {1, 2}}, {{0, 2}, {1, 2}}})
            lines += degree0(csm_cycle(Matroid::from_bases(3, bases), 0).fan);
        Int dec_b = lines - 2 * u13;
        verdict(4, dec_a == -3 && dec_b == -2,
                "decompositions evaluate to " + dec_a.str() + "p and " + dec_b.str() + "p",
                seconds_since(t0));
    }

    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::mt19937_64 rng(42);
        for (const auto& nm : std::vector<Named>{{"U(2,3)", Matroid::uniform(2, 3)},
                                                 {"U(3,4)", Matroid::uniform(3, 4)},
                                                 {"U(3,5)", Matroid::uniform(3, 5)},
                                                 {"K4", graphic_k4()}}) {
            BergmanFan bf = bergman_fan(nm.m);
            const int d = nm.m.rank() - 1;
            std::vector<std::vector<Subset>> chains;
            for (int k = 0; k <= d; ++k)
                for (auto& c : flat_chains(nm.m, k)) chains.push_back(std::move(c));
            for (int t = 0; t < 50 && ok; ++t) {
                IMat u = random_unimodular(nm.m.size() - 1, rng);
                for (const auto& chain : chains) {
                    WeightedFan star = apply_unimodular(star_of_chain(bf, chain), u);
                    Polynomial q = psi_polynomial(star);
                    bool divides = true;
                    for (size_t j = 0; j < chain.size() && divides; ++j) {
                        Polynomial next;
                        divides = q.divide_by_x_minus_one(next);
                        q = next;
                    }
                    if (!divides || q.eval(1) != csm_chain_weight(nm.m, chain)) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        verdict(5, ok, "psi-oracle weights invariant under 50 random unimodular maps per matroid",
                seconds_since(t0));
    }

    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (const auto& [m2, label] :
             std::vector<std::pair<Matroid, std::string>>{{Matroid::uniform(2, 3), "P(U23,U23)"},
                                                          {Matroid::uniform(2, 4), "P(U23,U24)"}}) {
            ParallelMapReport r =
                parallel_connection_map(Matroid::uniform(2, 3), 0, m2, 0, 42, 1000);
            if (!((r.det == 1 || r.det == -1) && r.cones_forward_ok && r.points_forward_ok &&
                  r.points_backward_ok))
                ok = false;
        }
        verdict(6, ok,
                "parallel-connection chart: det +-1, cones and 1000 points/cone verified both ways",
                seconds_since(t0));
    }

    {
        const auto t0 = std::chrono::steady_clock::now();
        ProductCheckReport a = product_check(Matroid::uniform(2, 3), Matroid::uniform(2, 3));
        ProductCheckReport b = product_check(Matroid::free_matroid(3), Matroid::uniform(2, 3));
        verdict(7, a.all_equal && b.all_equal,
                "product formula holds for (U23,U23) [" + a.identified + "] and (free,M') [" +
                    b.identified + "]",
                seconds_since(t0));
    }

    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        auto check = [&](const LatticePolytope3& p, const Triangulation& t) {
            NoetherReport nr = noether_check(p);
            CensusReport cr = dual_census_check(p, t);
            if (!(nr.holds && cr.holds && nr.lhs == cr.lhs && nr.rhs == cr.rhs &&
                  nr.tau_list == cr.tau_list))
                ok = false;
        };
        for (long d = 1; d <= 6; ++d) {
            const Int dd(d);
            check(hull({{Int(0), Int(0), Int(0)},
                        {dd, Int(0), Int(0)},
                        {Int(0), dd, Int(0)},
                        {Int(0), Int(0), dd}}),
                  staircase_simplex(static_cast<int>(d)));
        }
        for (long d = 1; d <= 5; ++d) {
            IMat pts;
            for (Int x : {Int(0), Int(d)})
                for (Int y : {Int(0), Int(d)})
                    for (Int z : {Int(0), Int(d)}) pts.push_back({x, y, z});
            check(hull(pts), staircase_cube(static_cast<int>(d)));
        }
        verdict(8, ok,
                "Noether identity and dual vertex census agree for d-simplices (d<=6) and cubes "
                "(d<=5)",
                seconds_since(t0));
    }

    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (const auto& nm : suite) {
            if (nm.m.rank() == 0) continue;
            const int d = nm.m.rank() - 1;
            Int deg = degree0(csm_cycle(nm.m, 0).fan);
            Int beta = nm.m.beta();
            Int signed_deg = (d % 2 != 0) ? -deg : deg;
            if (signed_deg != beta) ok = false;
            if (beta > 0 && !(signed_deg > 0)) ok = false;
        }
        verdict(9, ok, "deg(csm_0) = (-1)^d beta across the suite, positive whenever beta > 0",
                seconds_since(t0));
    }

    {
        const auto t0 = std::chrono::steady_clock::now();
        bool constant_ok = true;
        bool quotient_ok = oracle_ok; // quotient-at-1 vs Def-3.1 checked in the sweep above
        json ledger = json::array();
        for (size_t i = 0; i < suite.size(); ++i) {
            if (records[i].empty()) continue;
            std::map<int, std::set<int>> nonzero_exponents;
            for (const auto& r : records[i])
                if (r.direct_weight != 0) nonzero_exponents[r.dim].insert(r.exponent);
            json dims = json::object();
            for (const auto& [dim, exps] : nonzero_exponents) {
                if (exps.size() != 1) constant_ok = false;
                json e = json::array();
                for (int x : exps) e.push_back(x);
                dims[std::to_string(dim)] = e;
            }
            ledger.push_back(json{{"matroid", suite[i].name}, {"exponent_by_cone_dim", dims}});
        }
        std::ofstream("exponent_ledger.json") << ledger.dump(2) << "\n";
        verdict(10, constant_ok && quotient_ok,
                "observed (lambda-1)-exponent constant per cone dimension (ledger: "
                "exponent_ledger.json), quotients match Def-3.1",
                seconds_since(t0));
    }

    return failures;
}
