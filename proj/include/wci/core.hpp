#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wci/rational.hpp"

namespace wci {

using Weight = std::int64_t;
using WeightList = std::vector<Weight>;

// Ambient weights (a_0,...,a_n), kept sorted ascending, every entry >= 1.
struct WeightSystem {
    WeightList weights;

    int n() const { return static_cast<int>(weights.size()) - 1; }
    Weight sum() const;
    std::string str() const; // "P(a_0,...,a_n)"
};

// A candidate X_{d_1,...,d_c} in P(a_0,...,a_n); both lists sorted ascending,
// 1 <= c <= n.
struct CandidateFamily {
    WeightSystem space;
    WeightList degrees;

    int n() const { return space.n(); }
    int codim() const { return static_cast<int>(degrees.size()); }
    int dim() const { return n() - codim(); }
    Weight degree_sum() const;
    Weight amplitude() const { return degree_sum() - space.sum(); }
    std::string str() const; // "X_{d_1,...} in P(a_0,...)"

    bool operator==(const CandidateFamily& other) const {
        return space.weights == other.space.weights && degrees == other.degrees;
    }
};

// Gap invariants: delta_j = d_j - a_{j+m}, total = sum.
struct DeltaProfile {
    WeightList deltas;
    Weight total = 0;
};

// Exact self-intersection numbers of O_X(1), K_X and -K_X.
struct VolumeData {
    Rational o1_power;            // prod d_j / prod a_i
    Rational canonical_power;     // alpha^m * o1_power
    Rational anticanonical_power; // (-alpha)^m * o1_power
};

// Sorts both lists and validates. Throws std::invalid_argument on empty
// input, nonpositive entries, or c > n.
CandidateFamily normalize_family(WeightList weights, WeightList degrees);

std::pair<Weight, DeltaProfile> amplitude_delta(const CandidateFamily& f);

// Result of cancelling d_j == a_i pairs. `family` is empty when the
// reduction removed every degree (X degenerates to the ambient space);
// `weights` always holds the surviving ambient weights.
struct ConeReduction {
    std::optional<CandidateFamily> family;
    WeightList weights;
    std::vector<std::pair<int, int>> steps; // (weight index, degree index) at removal time
    bool degenerate() const { return !family.has_value(); }
    bool is_linear_cone() const { return !steps.empty(); }
};

ConeReduction linear_cone_reduce(const CandidateFamily& f);

// gcd of every n-element subset of the weights is 1.
bool is_wellformed_space(const WeightSystem& w);

VolumeData volume(const CandidateFamily& f);

// Prepends a weight-1 variable: dimension +1, amplitude -1.
CandidateFamily cone_lift(const CandidateFamily& f);

} // namespace wci
