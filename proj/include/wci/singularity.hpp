#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wci/core.hpp"

namespace wci {

// Local type 1/r(w_1..w_m) at a coordinate point, r = a_i, residues of the
// surviving ambient weights mod r, with the one-blowup discrepancy
// (sum w)/r - 1. `reduced` marks a type whose zero residues (weights
// divisible by r) were discarded; such records need manual review.
struct CyclicQuotientSingularity {
    int point_index = -1;
    Weight order = 0;
    WeightList local_weights;
    Rational discrepancy;
    bool reduced = false;
    std::vector<int> matched_externals; // e_j realizing the equation structure
};

struct KltParams {
    Rational epsilon; // 0 < epsilon <= 1
    explicit KltParams(Rational eps);
};

struct PointAnalysis {
    enum class Kind {
        off_x,        // some degree divisible by a_i (includes a_i = 1)
        no_structure, // P_i on X but no distinct-e equation structure
        quotient
    };
    Kind kind = Kind::off_x;
    int point_index = -1;
    std::optional<CyclicQuotientSingularity> singularity;
};

// Quotient-type detection at the coordinate point P_i.
PointAnalysis coordinate_point_analysis(const CandidateFamily& f, int i);

// All coordinate points that lie on X, ascending index.
std::vector<PointAnalysis> coordinate_point_scan(const CandidateFamily& f);

// (sum residues)/r - 1, exact. Rejects r < 2 or residues outside [1, r).
Rational blowup_discrepancy(Weight r, std::span<const Weight> residues);

// First coordinate-point singularity (ascending index, clean types only)
// with discrepancy <= epsilon - 1: a certified witness that X is not
// epsilon-klt. A nullopt never certifies the converse.
std::optional<CyclicQuotientSingularity>
epsilon_klt_witness(const CandidateFamily& f, const KltParams& params);

} // namespace wci
