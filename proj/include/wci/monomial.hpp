#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wci/core.hpp"

namespace wci {

// Indices into a weight system, sorted ascending, nonempty for stratum use.
using VariableSubset = std::vector<int>;

// A monomial prod x_i^{k_i} of the given weighted degree; only nonzero
// exponents are stored.
struct Monomial {
    std::vector<std::pair<int, Weight>> exponents; // (variable index, exponent)
    Weight degree = 0;
};

// Reachability table of the numerical semigroup <gens> up to a cap,
// one bit per value. Cheap to copy-and-extend along a search path.
class SemigroupTable {
public:
    SemigroupTable() = default;
    SemigroupTable(WeightList gens, Weight cap);

    // Table over the same cap with one more generator.
    SemigroupTable extended(Weight gen) const;

    // In-place variants for preallocated workspaces (no reallocation once
    // sized): reset to the empty generating set, rebuild as src + gen, or
    // add one generator.
    void reset(Weight cap);
    void assign_extended(const SemigroupTable& src, Weight gen);
    void absorb_gen(Weight gen);

    bool contains(Weight d) const;
    // Largest member in [lo, hi] (clamped to [0, cap]), or -1 when none.
    Weight max_member_in(Weight lo, Weight hi) const;
    Weight cap() const { return cap_; }
    const WeightList& generators() const { return gens_; }

private:
    void absorb(Weight gen);
    WeightList gens_;
    Weight cap_ = -1;
    std::vector<std::uint64_t> bits_;
};

// Does d = sum k_i * gens_i admit a nonnegative integer solution?
bool semigroup_contains(Weight d, std::span<const Weight> gens);

// Witness exponents for the generators as given (callers pass the subset's
// sorted weights); lexicographically smallest exponent vector, d = 0 gives
// all zeros. nullopt when d is not representable.
std::optional<WeightList> semigroup_witness(Weight d, std::span<const Weight> gens);

// Monomial of weighted degree d supported on the variables E of f,
// lexicographically smallest exponents in index order.
std::optional<Monomial> representable(const CandidateFamily& f, Weight d,
                                      const VariableSubset& E);

// { e outside E : d - a_e >= 0 and d - a_e representable over E }, sorted.
std::vector<int> external_candidates(const CandidateFamily& f, Weight d,
                                     const VariableSubset& E);

// Injective choice of one index per requirement (maximum bipartite
// matching); nullopt when none exists. Empty input gives an empty
// assignment. The returned choice is the lexicographically smallest
// assignment vector.
std::optional<std::vector<int>>
distinct_assignment(const std::vector<std::vector<int>>& requirements);

} // namespace wci
