#pragma once

#include <optional>
#include <vector>

#include "wci/classify.hpp"

namespace wci {

struct SearchParams {
    int m = 2;                       // dimension of X
    Weight alpha = 0;                // amplitude
    std::vector<int> c_range;        // empty: 1..codim_bound(m, alpha)
    std::optional<Weight> d_max;     // cap on d_c; mandatory when alpha == 0
    std::optional<Weight> a_max;     // optional cap on a_n
    int jobs = 1;
    QsMode mode = QsMode::strict_hypersurface; // c = 1 mode; c >= 2 runs necessary
    std::optional<Rational> epsilon;           // klt scan + Fano degree cap
    std::optional<Rational> volume_lb;         // derives d_max when alpha != 0
};

// The degree cap the search will run with: d_max when given, otherwise
// derived from the degree bound (needs alpha != 0 and volume_lb).
// Throws std::invalid_argument when neither is available.
Weight resolve_degree_cap(const SearchParams& params);

// Every normalized, linear-cone-free, well-formed family with the given
// dimension and amplitude, codimension in c_range, d_c <= cap, passing the
// quasismoothness check. Canonically ordered (codim, degrees, weights);
// byte-identical output for any jobs value.
std::vector<FamilyRecord> enumerate_families(const SearchParams& params);

} // namespace wci
