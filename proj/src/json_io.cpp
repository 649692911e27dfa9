#include "tropcsm/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace tropcsm {

namespace {

Int int_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw Error(Err::ParseError, std::string("expected an integer for ") + what);
}

json int_to_json(const Int& v) {
    // Keep machine-size values as JSON numbers, fall back to strings.
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(v));
    return json(v.str());
}

IVec ivec_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw Error(Err::ParseError, std::string("expected an array for ") + what);
    IVec out;
    for (const auto& e : j) out.push_back(int_from_json(e, what));
    return out;
}

json ivec_to_json(const IVec& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

IMat imat_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw Error(Err::ParseError, std::string("expected an array for ") + what);
    IMat out;
    for (const auto& row : j) out.push_back(ivec_from_json(row, what));
    return out;
}

json imat_to_json(const IMat& m) {
    json out = json::array();
    for (const IVec& row : m) out.push_back(ivec_to_json(row));
    return out;
}

QVec qvec_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw Error(Err::ParseError, std::string("expected an array for ") + what);
    QVec out;
    for (const auto& e : j) {
        if (e.is_number_integer())
            out.push_back(Rat(e.get<long long>()));
        else if (e.is_string())
            out.push_back(rat_from_string(e.get<std::string>()));
        else
            throw Error(Err::ParseError, std::string("expected a rational for ") + what);
    }
    return out;
}

json qvec_to_json(const QVec& v) {
    json out = json::array();
    for (const Rat& x : v) {
        if (boost::multiprecision::denominator(x) == 1)
            out.push_back(int_to_json(boost::multiprecision::numerator(x)));
        else
            out.push_back(rat_to_string(x));
    }
    return out;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(Err::ParseError, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

json cell_to_json(int ambient_dim, const Cone& cone, const Int& weight, const QMat* vertices) {
    json cell;
    if (vertices) {
        bool origin_apex = vertices->size() == 1 &&
                           std::all_of(vertices->front().begin(), vertices->front().end(),
                                       [](const Rat& r) { return r == 0; });
        if (!origin_apex) {
            if (vertices->size() == 1)
                cell["apex"] = qvec_to_json(vertices->front());
            else {
                json vs = json::array();
                for (const QVec& v : *vertices) vs.push_back(qvec_to_json(v));
                cell["vertices"] = vs;
            }
        }
    }
    cell["rays"] = imat_to_json(cone.rays);
    cell["lineality"] = imat_to_json(cone.lineality);
    cell["weight"] = int_to_json(weight);
    (void)ambient_dim;
    return cell;
}

} // namespace

std::string rat_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw Error(Err::ParseError, "zero denominator in \"" + s + "\"");
        return Rat(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(Err::ParseError, "malformed rational \"" + s + "\"");
    }
}

json matroid_to_json(const Matroid& m) {
    std::vector<std::vector<int>> bases;
    for (Subset b : m.bases()) bases.push_back(subset_elements(b));
    std::sort(bases.begin(), bases.end());
    json j;
    j["n"] = m.size();
    j["bases"] = bases;
    return j;
}

Matroid matroid_from_json(const json& j) {
    const json& jn = field(j, "n");
    if (!jn.is_number_integer()) throw Error(Err::ParseError, "\"n\" must be an integer");
    const int n = jn.get<int>();
    const json& jb = field(j, "bases");
    if (!jb.is_array()) throw Error(Err::ParseError, "\"bases\" must be an array");
    std::vector<std::vector<int>> bases;
    for (const auto& b : jb) {
        if (!b.is_array()) throw Error(Err::ParseError, "each basis must be an array");
        std::vector<int> elems;
        for (const auto& e : b) {
            if (!e.is_number_integer()) throw Error(Err::ParseError, "basis elements must be integers");
            const int x = e.get<int>();
            if (x < 0 || x >= n) throw Error(Err::ParseError, "basis element out of range");
            elems.push_back(x);
        }
        bases.push_back(std::move(elems));
    }
    if (n < 1 || n > 30) throw Error(Err::ParseError, "\"n\" must be between 1 and 30");
    return Matroid::from_bases(n, bases);
}

json polynomial_to_json(const Polynomial& p, const std::string& var) {
    json j;
    j["coefficients"] = ivec_to_json(p.coefficients());
    j["display"] = p.to_string(var);
    return j;
}

json fan_to_json(const WeightedFan& f) {
    json j;
    j["ambient_dim"] = f.ambient_dim;
    j["dim"] = f.dim();
    json cells = json::array();
    for (const WCone& wc : f.cones) cells.push_back(cell_to_json(f.ambient_dim, wc.cone, wc.weight, nullptr));
    j["cells"] = cells;
    return j;
}

WeightedFan fan_from_json(const json& j) {
    const json& jd = field(j, "ambient_dim");
    if (!jd.is_number_integer() || jd.get<int>() < 0)
        throw Error(Err::ParseError, "\"ambient_dim\" must be a nonnegative integer");
    const int n = jd.get<int>();
    const json& jc = field(j, "cells");
    if (!jc.is_array()) throw Error(Err::ParseError, "\"cells\" must be an array");
    std::vector<WCone> cones;
    for (const auto& cell : jc) {
        IMat rays = imat_from_json(field(cell, "rays"), "rays");
        IMat lin = imat_from_json(field(cell, "lineality"), "lineality");
        for (const IVec& r : rays)
            if (static_cast<int>(r.size()) != n)
                throw Error(Err::ParseError, "ray length does not match ambient_dim");
        for (const IVec& r : lin)
            if (static_cast<int>(r.size()) != n)
                throw Error(Err::ParseError, "lineality vector length does not match ambient_dim");
        Int w = int_from_json(field(cell, "weight"), "weight");
        cones.push_back({make_cone(n, rays, lin), std::move(w)});
    }
    return make_fan(n, std::move(cones));
}

json cycle_to_json(const PolyhedralCycle& c) {
    json j;
    j["ambient_dim"] = c.ambient_dim;
    int dim = -1;
    for (const Cell& cell : c.cells) dim = std::max(dim, cell_dim(cell));
    j["dim"] = dim;
    json cells = json::array();
    for (const Cell& cell : c.cells) cells.push_back(cell_to_json(c.ambient_dim, cell.cone, cell.weight, &cell.vertices));
    j["cells"] = cells;
    return j;
}

PolyhedralCycle cycle_from_json(const json& j) {
    const json& jd = field(j, "ambient_dim");
    if (!jd.is_number_integer() || jd.get<int>() < 0)
        throw Error(Err::ParseError, "\"ambient_dim\" must be a nonnegative integer");
    const int n = jd.get<int>();
    const json& jc = field(j, "cells");
    if (!jc.is_array()) throw Error(Err::ParseError, "\"cells\" must be an array");
    PolyhedralCycle out;
    out.ambient_dim = n;
    for (const auto& cell : jc) {
        QMat vertices;
        if (cell.is_object() && cell.contains("vertices")) {
            const json& jv = cell.at("vertices");
            if (!jv.is_array()) throw Error(Err::ParseError, "\"vertices\" must be an array");
            for (const auto& v : jv) vertices.push_back(qvec_from_json(v, "vertices"));
        } else if (cell.is_object() && cell.contains("apex")) {
            vertices.push_back(qvec_from_json(cell.at("apex"), "apex"));
        } else {
            vertices.push_back(QVec(n, Rat(0)));
        }
        for (const QVec& v : vertices)
            if (static_cast<int>(v.size()) != n)
                throw Error(Err::ParseError, "vertex length does not match ambient_dim");
        IMat rays = imat_from_json(field(cell, "rays"), "rays");
        IMat lin = imat_from_json(field(cell, "lineality"), "lineality");
        for (const IVec& r : rays)
            if (static_cast<int>(r.size()) != n)
                throw Error(Err::ParseError, "ray length does not match ambient_dim");
        for (const IVec& r : lin)
            if (static_cast<int>(r.size()) != n)
                throw Error(Err::ParseError, "lineality vector length does not match ambient_dim");
        Int w = int_from_json(field(cell, "weight"), "weight");
        out.cells.push_back({std::move(vertices), make_cone(n, rays, lin), std::move(w)});
    }
    return out;
}

json bergman_to_json(const BergmanFan& bf) {
    json j;
    j["ambient_dim"] = bf.ambient_dim;
    j["dim"] = bf.fan.dim();
    json cells = json::array();
    for (size_t i = 0; i < bf.fan.cones.size(); ++i) {
        json cell = cell_to_json(bf.ambient_dim, bf.fan.cones[i].cone, bf.fan.cones[i].weight, nullptr);
        json chain = json::array();
        for (Subset f : bf.max_chains[i]) chain.push_back(subset_elements(f));
        cell["chain"] = chain;
        cells.push_back(cell);
    }
    j["cells"] = cells;
    return j;
}

json polytope_to_json(const LatticePolytope3& p) {
    json j;
    j["vertices"] = imat_to_json(p.vertices);
    return j;
}

LatticePolytope3 polytope_from_json(const json& j) {
    IMat pts = imat_from_json(field(j, "vertices"), "vertices");
    for (const IVec& v : pts)
        if (v.size() != 3) throw Error(Err::ParseError, "polytope vertices must have 3 coordinates");
    return hull(pts);
}

json triangulation_to_json(const Triangulation& t) {
    json j;
    j["points"] = imat_to_json(t.points);
    json tets = json::array();
    for (const auto& tet : t.tets) tets.push_back(json::array({tet[0], tet[1], tet[2], tet[3]}));
    j["tets"] = tets;
    return j;
}

Triangulation triangulation_from_json(const json& j) {
    Triangulation t;
    t.points = imat_from_json(field(j, "points"), "points");
    for (const IVec& v : t.points)
        if (v.size() != 3) throw Error(Err::ParseError, "triangulation points must have 3 coordinates");
    const json& jt = field(j, "tets");
    if (!jt.is_array()) throw Error(Err::ParseError, "\"tets\" must be an array");
    for (const auto& tet : jt) {
        if (!tet.is_array() || tet.size() != 4)
            throw Error(Err::ParseError, "each tet must list 4 point indices");
        std::array<int, 4> ix{};
        for (int i = 0; i < 4; ++i) {
            if (!tet[i].is_number_integer()) throw Error(Err::ParseError, "tet indices must be integers");
            ix[i] = tet[i].get<int>();
        }
        t.tets.push_back(ix);
    }
    return t;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Err::ParseError, "cannot open " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error(Err::ParseError, "invalid JSON in " + path);
    return j;
}

} // namespace tropcsm
