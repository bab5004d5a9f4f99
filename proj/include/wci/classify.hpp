#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wci/core.hpp"
#include "wci/quasismooth.hpp"
#include "wci/singularity.hpp"

namespace wci {

enum class KltStatus { no_witness, witness, unanalyzed };

const char* klt_status_name(KltStatus s);

// Full classification of one normalized family: the unit of enumeration
// output and fixture diffing.
struct FamilyRecord {
    CandidateFamily family;
    Weight alpha = 0;
    DeltaProfile delta;
    VolumeData volumes;

    bool wellformed = false;
    std::optional<VariableSubset> wf_witness;
    QsVerdict quasismooth;

    std::vector<CyclicQuotientSingularity> singularities;
    bool degenerate_local_type = false; // some type needed residue reduction
    bool strata_meet_x = false;         // positive-dimensional singular strata on X
    KltStatus klt_status = KltStatus::no_witness;
    std::optional<Rational> epsilon;    // threshold used for the witness scan

    std::vector<std::pair<int, int>> cone_steps;
    bool degenerate_ambient = false;    // cone reduction removed every degree

    std::string provenance; // search shard id, empty for single checks
};

// Canonical output order: codimension, then degrees, then weights.
bool record_less(const FamilyRecord& a, const FamilyRecord& b);

// Normalizes, strips linear-cone factors (keeping the log), and runs the
// whole classification. Defaults: strict mode for hypersurfaces,
// necessary mode otherwise; epsilon = 1 for the klt witness scan.
FamilyRecord check_one(WeightList weights, WeightList degrees,
                       std::optional<Rational> eps = std::nullopt,
                       std::optional<QsMode> mode = std::nullopt);

// Classification of an already-normalized cone-free family.
FamilyRecord classify_family(CandidateFamily f, QsMode mode,
                             std::optional<Rational> eps = std::nullopt);

// One anticanonically-embedded Fano threefold family per (k, triple):
// X_{2kB} in P(2, k b_1, k b_2, k b_3, kB - 1), B = b_1 + b_2 + b_3.
// k must be odd and >= 1; every instance has amplitude -1.
std::vector<FamilyRecord>
jk_templates(const std::vector<Weight>& k_values,
             const std::vector<std::array<Weight, 3>>& triples,
             std::optional<Rational> eps = std::nullopt);

// The K3 weight triples feeding the templates: hypersurface families with
// m = 2, amplitude 0, top weight equal to the sum of the other three.
std::vector<std::array<Weight, 3>> jk_auto_triples(Weight d_max = 100);

} // namespace wci
