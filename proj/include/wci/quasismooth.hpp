#pragma once

#include <optional>
#include <vector>

#include "wci/core.hpp"
#include "wci/monomial.hpp"

namespace wci {

// `necessary` is the combinatorial condition every quasismooth family
// satisfies. `strict_hypersurface` additionally demands, for c = 1 and a
// subset with no pure monomial, at least |E| distinct external variables:
// the classical sufficient criterion for generic hypersurfaces. For c >= 2
// the modes coincide.
enum class QsMode { necessary, strict_hypersurface };

const char* qs_mode_name(QsMode mode);

struct SubsetReport {
    VariableSubset subset;
    int rho = 0;
    int pure_count = 0;                            // degrees representable over E
    bool condition1 = false;
    bool condition2 = false;
    int l = 0;                                     // pure equations used by condition 2
    std::vector<std::pair<int, int>> assignment;   // (equation, external index)
    int distinct_e_count = 0;                      // distinct feasible externals, non-pure equations
    bool pass = false;
};

struct QsVerdict {
    bool pass = false;
    QsMode mode = QsMode::necessary;
    std::vector<SubsetReport> failing; // smallest subsets first
};

SubsetReport subset_report(const CandidateFamily& f, const VariableSubset& E,
                           QsMode mode);

// Scans all nonempty subsets by increasing size, lexicographic within a
// size. Stops at the first failure unless collect_all.
QsVerdict check_quasismooth(const CandidateFamily& f, QsMode mode,
                            bool collect_all = false);

// P_E lies inside X: no defining degree has a monomial supported on E.
bool stratum_contained(const CandidateFamily& f, const VariableSubset& E);

struct WellformedResult {
    bool ok = false;
    std::optional<VariableSubset> witness; // a contained singular stratum
};

// Well-formed ambient space plus: no singular stratum of codimension
// exactly c+1 is contained in X. Containment of any larger singular
// stratum is caught through its size-m substrata (smaller semigroups), so
// this single size suffices.
WellformedResult check_wellformed_family(const CandidateFamily& f);

// Some singular stratum of positive dimension has nonempty generic
// intersection with X (dimension count |E|-1-#representable >= 0). Such
// points fall outside the coordinate-point singularity analysis.
bool singular_stratum_meets_x(const CandidateFamily& f);

} // namespace wci
