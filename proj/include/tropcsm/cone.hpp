#ifndef TROPCSM_CONE_HPP
#define TROPCSM_CONE_HPP

#include <tuple>
#include <vector>

#include "tropcsm/linalg.hpp"

namespace tropcsm {

// Rational polyhedral cone: nonneg span of rays plus lineality subspace.
// Construct via make_cone so the invariants (primitive rays, saturated HNF
// lineality, no ray inside the lineality span) hold.
struct Cone {
    int ambient_dim = 0;
    IMat rays;      // primitive integer vectors
    IMat lineality; // HNF basis of the saturated lineality lattice
};

Cone make_cone(int ambient_dim, const IMat& rays, const IMat& lineality);
Cone origin_cone(int ambient_dim);

int cone_dim(const Cone& c);
int lineality_dim(const Cone& c);

// All generators (rays then lineality basis) as one matrix.
IMat cone_generators(const Cone& c);

// Saturated lattice N_sigma spanned by the cone, HNF basis.
IMat cone_lattice(const Cone& c);

// H-representation: x in cone iff eq * x = 0 and ineq * x >= 0 (componentwise).
// Normals are primitive; inequality normals lie in the span of the cone.
struct HRep {
    IMat eq;
    IMat ineq;
};
HRep hrep(const Cone& c);

bool hrep_contains(const HRep& h, const QVec& x);
bool cone_contains(const Cone& c, const QVec& x);
bool cone_contains(const Cone& c, const IVec& x);
// Strict on every facet inequality, still inside the span.
bool in_relative_interior(const Cone& c, const QVec& x);

// A point in the relative interior (sum of extreme rays; 0 for a subspace).
IVec relative_interior_point(const Cone& c);

// Canonical form: extreme rays only, sorted; decidable equality.
Cone canonical(const Cone& c);
bool cones_equal(const Cone& a, const Cone& b); // compares canonical forms

// Value identifying a cone uniquely: ambient dimension, lineality HNF and the
// sorted primitive quotient images of the extreme rays. Precompute when a cone
// is used as a map key repeatedly.
using ConeKey = std::tuple<int, IMat, IMat>;
ConeKey cone_key(const Cone& c);

// Total order on canonical cones, for use as map keys.
struct ConeLess {
    bool operator()(const Cone& a, const Cone& b) const;
};

// Cone from an H-description (V-representation recovered exactly).
Cone cone_from_hrep(int ambient_dim, const IMat& eq, const IMat& ineq);

Cone intersect_cones(const Cone& a, const Cone& b);

// Is tau a face of sigma (including tau == sigma)?
bool is_face_of(const Cone& sigma, const Cone& tau);

// Codimension-one faces.
std::vector<Cone> cone_facets(const Cone& c);

// Split by the hyperplane h.x = 0; returns {c} when h does not properly cut
// the cone, else the two closed halves.
std::vector<Cone> split_cone(const Cone& c, const IVec& h);

} // namespace tropcsm

#endif
