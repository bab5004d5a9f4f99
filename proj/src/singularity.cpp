#include "wci/singularity.hpp"

#include <algorithm>
#include <stdexcept>

#include "wci/monomial.hpp"

namespace wci {

KltParams::KltParams(Rational eps) : epsilon(std::move(eps)) {
    if (epsilon <= 0 || epsilon > 1)
        throw std::invalid_argument("KltParams: need 0 < epsilon <= 1");
}

Rational blowup_discrepancy(Weight r, std::span<const Weight> residues) {
    if (r < 2) throw std::invalid_argument("blowup_discrepancy: order must be >= 2");
    Weight total = 0;
    for (Weight w : residues) {
        if (w < 1 || w >= r)
            throw std::invalid_argument("blowup_discrepancy: residues must lie in [1, r)");
        total += w;
    }
    return Rational(total, r) - 1;
}

PointAnalysis coordinate_point_analysis(const CandidateFamily& f, int i) {
    if (i < 0 || i > f.n()) throw std::out_of_range("coordinate_point_analysis: index");
    PointAnalysis out;
    out.point_index = i;
    const Weight r = f.space.weights[static_cast<std::size_t>(i)];
    for (Weight d : f.degrees)
        if (d % r == 0) return out; // monomial x_i^{d/r}: P_i not on X (covers r = 1)

    // P_i lies on X; quasismoothness needs f_j = x_{e_j} x_i^{k_j} + ...,
    // with distinct e_j, i.e. r | d_j - a_{e_j}.
    const int c = f.codim();
    std::vector<std::vector<int>> cands(static_cast<std::size_t>(c));
    for (int j = 0; j < c; ++j) {
        for (int e = 0; e <= f.n(); ++e) {
            if (e == i) continue;
            const Weight rest = f.degrees[static_cast<std::size_t>(j)] -
                                f.space.weights[static_cast<std::size_t>(e)];
            if (rest >= 0 && rest % r == 0) cands[static_cast<std::size_t>(j)].push_back(e);
        }
    }
    auto assignment = distinct_assignment(cands);
    if (!assignment) {
        out.kind = PointAnalysis::Kind::no_structure;
        return out;
    }

    CyclicQuotientSingularity s;
    s.point_index = i;
    s.order = r;
    s.matched_externals = *assignment;
    for (int k = 0; k <= f.n(); ++k) {
        if (k == i) continue;
        if (std::find(assignment->begin(), assignment->end(), k) != assignment->end())
            continue;
        const Weight res = f.space.weights[static_cast<std::size_t>(k)] % r;
        if (res == 0)
            s.reduced = true; // degenerate direction, type kept without it
        else
            s.local_weights.push_back(res);
    }
    s.discrepancy = blowup_discrepancy(r, s.local_weights);
    out.kind = PointAnalysis::Kind::quotient;
    out.singularity = std::move(s);
    return out;
}

std::vector<PointAnalysis> coordinate_point_scan(const CandidateFamily& f) {
    std::vector<PointAnalysis> out;
    for (int i = 0; i <= f.n(); ++i) {
        PointAnalysis pa = coordinate_point_analysis(f, i);
        if (pa.kind != PointAnalysis::Kind::off_x) out.push_back(std::move(pa));
    }
    return out;
}

std::optional<CyclicQuotientSingularity>
epsilon_klt_witness(const CandidateFamily& f, const KltParams& params) {
    const Rational threshold = params.epsilon - 1;
    for (int i = 0; i <= f.n(); ++i) {
        PointAnalysis pa = coordinate_point_analysis(f, i);
        if (pa.kind != PointAnalysis::Kind::quotient || pa.singularity->reduced)
            continue;
        if (pa.singularity->discrepancy <= threshold) return pa.singularity;
    }
    return std::nullopt;
}

} // namespace wci
