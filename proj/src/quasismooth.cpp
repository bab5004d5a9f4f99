#include "wci/quasismooth.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wci {

const char* qs_mode_name(QsMode mode) {
    return mode == QsMode::strict_hypersurface ? "strict" : "necessary";
}

namespace {

void validate_subset(const CandidateFamily& f, const VariableSubset& E) {
    if (E.empty()) throw std::invalid_argument("subset must be nonempty");
    for (std::size_t k = 0; k < E.size(); ++k) {
        if (E[k] < 0 || E[k] > f.n()) throw std::invalid_argument("subset index out of range");
        if (k > 0 && E[k] <= E[k - 1]) throw std::invalid_argument("subset must be sorted and distinct");
    }
}

SemigroupTable subset_table(const CandidateFamily& f, const VariableSubset& E) {
    WeightList gens;
    gens.reserve(E.size());
    for (int i : E) gens.push_back(f.space.weights[static_cast<std::size_t>(i)]);
    return SemigroupTable(std::move(gens), f.degrees.back());
}

// all size-k subsets of {0..n}, lexicographic; fn returns false to abort
template <typename Fn>
bool for_each_subset_of_size(int n1, int k, Fn&& fn) {
    VariableSubset E(static_cast<std::size_t>(k));
    std::iota(E.begin(), E.end(), 0);
    while (true) {
        if (!fn(E)) return false;
        int i = k - 1;
        while (i >= 0 && E[static_cast<std::size_t>(i)] == n1 - k + i) --i;
        if (i < 0) return true;
        ++E[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            E[static_cast<std::size_t>(j)] = E[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

SubsetReport subset_report(const CandidateFamily& f, const VariableSubset& E,
                           QsMode mode) {
    validate_subset(f, E);
    const int c = f.codim();
    SubsetReport rep;
    rep.subset = E;
    rep.rho = std::min<int>(c, static_cast<int>(E.size()));

    const SemigroupTable table = subset_table(f, E);
    std::vector<int> nonpure;
    for (int j = 0; j < c; ++j) {
        if (table.contains(f.degrees[static_cast<std::size_t>(j)]))
            ++rep.pure_count;
        else
            nonpure.push_back(j);
    }
    rep.condition1 = rep.pure_count >= rep.rho;
    if (rep.condition1) {
        rep.pass = true;
        return rep;
    }

    // condition (2): match every non-pure equation to a distinct outside
    // variable e with d_j - a_e in the semigroup of E
    std::vector<std::vector<int>> cands;
    cands.reserve(nonpure.size());
    std::vector<int> pool;
    for (int j : nonpure) {
        std::vector<int> cj;
        for (int e = 0; e <= f.n(); ++e) {
            if (std::binary_search(E.begin(), E.end(), e)) continue;
            const Weight rest = f.degrees[static_cast<std::size_t>(j)] -
                                f.space.weights[static_cast<std::size_t>(e)];
            if (rest >= 0 && table.contains(rest)) cj.push_back(e);
        }
        for (int e : cj)
            if (std::find(pool.begin(), pool.end(), e) == pool.end()) pool.push_back(e);
        cands.push_back(std::move(cj));
    }
    rep.distinct_e_count = static_cast<int>(pool.size());
    rep.l = rep.pure_count;
    if (auto assignment = distinct_assignment(cands)) {
        rep.condition2 = true;
        for (std::size_t k = 0; k < nonpure.size(); ++k)
            rep.assignment.emplace_back(nonpure[k], (*assignment)[k]);
    }
    rep.pass = rep.condition2;
    if (mode == QsMode::strict_hypersurface && c == 1)
        rep.pass = rep.pass && rep.distinct_e_count >= static_cast<int>(E.size());
    return rep;
}

QsVerdict check_quasismooth(const CandidateFamily& f, QsMode mode,
                            bool collect_all) {
    QsVerdict verdict;
    verdict.mode = mode;
    const int n1 = f.n() + 1;
    for (int size = 1; size <= n1; ++size) {
        const bool completed = for_each_subset_of_size(n1, size, [&](const VariableSubset& E) {
            SubsetReport rep = subset_report(f, E, mode);
            if (!rep.pass) {
                verdict.failing.push_back(std::move(rep));
                return collect_all;
            }
            return true;
        });
        if (!completed) break;
    }
    verdict.pass = verdict.failing.empty();
    return verdict;
}

bool stratum_contained(const CandidateFamily& f, const VariableSubset& E) {
    validate_subset(f, E);
    const SemigroupTable table = subset_table(f, E);
    for (Weight d : f.degrees)
        if (table.contains(d)) return false;
    return true;
}

WellformedResult check_wellformed_family(const CandidateFamily& f) {
    WellformedResult out;
    if (!is_wellformed_space(f.space)) return out;
    const int m = f.dim();
    out.ok = true;
    if (m < 1) return out;
    for_each_subset_of_size(f.n() + 1, m, [&](const VariableSubset& E) {
        Weight g = 0;
        for (int i : E) g = std::gcd(g, f.space.weights[static_cast<std::size_t>(i)]);
        if (g > 1 && stratum_contained(f, E)) {
            out.ok = false;
            out.witness = E;
            return false;
        }
        return true;
    });
    return out;
}

bool singular_stratum_meets_x(const CandidateFamily& f) {
    const int n1 = f.n() + 1;
    bool meets = false;
    for (int size = 2; size <= n1 && !meets; ++size) {
        for_each_subset_of_size(n1, size, [&](const VariableSubset& E) {
            Weight g = 0;
            for (int i : E) g = std::gcd(g, f.space.weights[static_cast<std::size_t>(i)]);
            if (g <= 1) return true;
            const SemigroupTable table = subset_table(f, E);
            int r = 0;
            for (Weight d : f.degrees)
                if (table.contains(d)) ++r;
            if (static_cast<int>(E.size()) - 1 - r >= 0) {
                meets = true;
                return false;
            }
            return true;
        });
    }
    return meets;
}

} // namespace wci
