#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octapet/pet.hpp"
#include "octapet/polytope3.hpp"

namespace octapet {

/// The 4-tuple (u1, v1, u2, v2) defining one affine branch of the bundle map
/// F.  On 420-scaled coordinates the branch acts by
///   (X, Y, Z) -> (X + (2 v1 - 2 v2) Z - 840 u1,  Y - (2 v1 + 2 v2) Z + 840 u2,  Z).
struct MapVector {
    std::int64_t u1 = 0;
    std::int64_t v1 = 0;
    std::int64_t u2 = 0;
    std::int64_t v2 = 0;

    friend bool operator==(const MapVector&, const MapVector&) = default;
    friend bool operator<(const MapVector& a, const MapVector& b) {
        if (a.u1 != b.u1) return a.u1 < b.u1;
        if (a.v1 != b.v1) return a.v1 < b.v1;
        if (a.u2 != b.u2) return a.u2 < b.u2;
        return a.v2 < b.v2;
    }

    MapVector negated() const { return {-u1, -v1, -u2, -v2}; }
    std::string str() const;
};

/// Conversions between the bundle 4-tuple and the planar symbolic step
/// (a, b, c, d) of the same branch: (u1, v1, u2, v2) = (-a, b, c, -d).
MapVector map_vector_from_step(const SymbolicStep& step);
SymbolicStep step_from_map_vector(const MapVector& v);

/// The scaled affine action of the full step for the branch, of the inverse
/// branch, and of the half step (which uses the reduced tuple (u1, v1, 0, 0)
/// and lands in the rotated bundle).
AffineMap3 full_map(const MapVector& v);
AffineMap3 inverse_map(const MapVector& v);
AffineMap3 half_map(const MapVector& v);

/// One maximal continuity domain of F together with its branch data.
struct Piece {
    ConvexPolytope3 polytope;
    MapVector vector;
};

/// The partition of the scaled bundle over z in [105, 840] into the 51
/// maximal continuity domains of F: 19 alpha pieces over [105, 210], 13 beta
/// pieces over [210, 420] and 19 gamma pieces over [420, 840].
struct PiecewiseAffineSystem {
    std::vector<Piece> alpha;
    std::vector<Piece> beta;
    std::vector<Piece> gamma;
    ConvexPolytope3 bundle;          // X over [105, 840]
    ConvexPolytope3 rotated_bundle;  // quarter-turn image (fibers F2)

    std::vector<const Piece*> pieces() const;

    /// Index into pieces() of the unique piece strictly containing v, or -1.
    int find_piece(const RVec3& v) const;

    RVec3 apply_F(const RVec3& v) const;
    RVec3 apply_Fprime(const RVec3& v) const;
    RVec3 apply_F_inverse(const RVec3& v) const;
};

/// One derived maximal domain over a z-interval.
struct DerivedPartition {
    std::vector<Piece> pieces;   // sorted by map vector
    std::int64_t lo = 0, hi = 0;
    int refinements = 0;         // grid halvings needed
};

/// Independently re-derives the partition of the bundle over [lo, hi]
/// (420-scaled fibers) from the planar dynamics: samples a rational grid,
/// clusters samples by their symbolic step, solves each cluster's 14
/// halfspace constraints for exact vertices, and verifies disjointness and
/// exact volume fill.  Throws VerificationError when the verification still
/// fails after `max_refinements` grid halvings.
DerivedPartition derive_partition(std::int64_t lo, std::int64_t hi, std::int64_t step_xy = 20,
                                  std::int64_t step_z = 5, int max_refinements = 2);

/// Loads the alpha fixtures, derives the beta pieces (the published beta
/// vertex tables are corrupt; only their 4-tuples are used, to index the
/// derived pieces), and computes the gamma pieces as the projective images
/// of the F-images of the alpha pieces.
PiecewiseAffineSystem load_fixtures(const std::string& dir);

/// Difference between the published beta vertex tables and the derived
/// pieces, for the data-discrepancy report.
struct PieceDiff {
    std::string name;
    MapVector vector;
    std::vector<IVec3> published;
    std::vector<IVec3> derived;
};

std::vector<PieceDiff> published_beta_diff(const std::string& dir, const DerivedPartition& derived);

struct PairWitness {
    std::string a;
    std::string b;
    IVec3 witness;
};

struct PartitionReport {
    bool vertex_faces_ok = false;      // every vertex of every piece in at least 3 faces
    bool normals_ok = false;           // improved normal form holds for every face
    bool disjoint_ok = false;          // pairwise disjointness witnesses found
    bool images_disjoint_ok = false;   // F-images pairwise disjoint
    bool containment_ok = false;       // P_i and F(P_i) in the bundle, F'(P_i) in the rotated bundle
    bool volume_ok = false;            // sum of volumes equals the bundle volume
    bool maximality_ok = false;        // neighbors across non-horizontal faces carry different tuples
    std::int64_t total_volume6 = 0;
    std::int64_t bundle_volume6 = 0;
    std::vector<PairWitness> witnesses;
    std::vector<std::string> failures;

    bool ok() const {
        return vertex_faces_ok && normals_ok && disjoint_ok && images_disjoint_ok && containment_ok && volume_ok &&
               maximality_ok;
    }
};

PartitionReport verify_partition(const PiecewiseAffineSystem& sys);

std::string partition_report_to_json(const PartitionReport& report);

}  // namespace octapet
