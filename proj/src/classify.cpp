#include "wci/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "wci/enumerate.hpp"

namespace wci {

const char* klt_status_name(KltStatus s) {
    switch (s) {
        case KltStatus::witness: return "witness";
        case KltStatus::unanalyzed: return "unanalyzed";
        default: return "no-witness";
    }
}

bool record_less(const FamilyRecord& a, const FamilyRecord& b) {
    if (a.family.codim() != b.family.codim()) return a.family.codim() < b.family.codim();
    if (a.family.degrees != b.family.degrees) return a.family.degrees < b.family.degrees;
    return a.family.space.weights < b.family.space.weights;
}

FamilyRecord classify_family(CandidateFamily f, QsMode mode,
                             std::optional<Rational> eps) {
    FamilyRecord rec;
    rec.family = std::move(f);
    auto [alpha, profile] = amplitude_delta(rec.family);
    rec.alpha = alpha;
    rec.delta = std::move(profile);
    rec.volumes = volume(rec.family);

    auto wf = check_wellformed_family(rec.family);
    rec.wellformed = wf.ok;
    rec.wf_witness = std::move(wf.witness);
    rec.quasismooth = check_quasismooth(rec.family, mode);

    if (rec.quasismooth.pass) {
        for (PointAnalysis& pa : coordinate_point_scan(rec.family)) {
            if (pa.kind == PointAnalysis::Kind::quotient) {
                if (pa.singularity->reduced) rec.degenerate_local_type = true;
                rec.singularities.push_back(std::move(*pa.singularity));
            }
        }
        rec.strata_meet_x = singular_stratum_meets_x(rec.family);
        const Rational threshold = (eps ? *eps : Rational(1)) - 1;
        rec.epsilon = eps ? *eps : Rational(1);
        bool witness = false;
        for (const auto& s : rec.singularities)
            if (!s.reduced && s.discrepancy <= threshold) witness = true;
        if (witness)
            rec.klt_status = KltStatus::witness;
        else if (rec.degenerate_local_type || rec.strata_meet_x)
            rec.klt_status = KltStatus::unanalyzed;
        else
            rec.klt_status = KltStatus::no_witness;
    }
    return rec;
}

FamilyRecord check_one(WeightList weights, WeightList degrees,
                       std::optional<Rational> eps, std::optional<QsMode> mode) {
    CandidateFamily input = normalize_family(std::move(weights), std::move(degrees));
    ConeReduction reduction = linear_cone_reduce(input);
    if (reduction.degenerate()) {
        FamilyRecord rec;
        rec.family = std::move(input);
        rec.alpha = rec.family.amplitude();
        rec.volumes = volume(rec.family);
        rec.cone_steps = std::move(reduction.steps);
        rec.degenerate_ambient = true;
        rec.klt_status = KltStatus::unanalyzed;
        return rec;
    }
    CandidateFamily reduced = std::move(*reduction.family);
    const QsMode effective_mode =
        mode ? *mode
             : (reduced.codim() == 1 ? QsMode::strict_hypersurface : QsMode::necessary);
    FamilyRecord rec = classify_family(std::move(reduced), effective_mode, eps);
    rec.cone_steps = std::move(reduction.steps);
    return rec;
}

std::vector<FamilyRecord>
jk_templates(const std::vector<Weight>& k_values,
             const std::vector<std::array<Weight, 3>>& triples,
             std::optional<Rational> eps) {
    std::vector<FamilyRecord> out;
    for (Weight k : k_values) {
        if (k < 1 || k % 2 == 0)
            throw std::invalid_argument("jk_templates: k values must be odd and >= 1");
        for (const auto& b : triples) {
            const Weight B = b[0] + b[1] + b[2];
            const WeightList weights{2, k * b[0], k * b[1], k * b[2], k * B - 1};
            const WeightList degrees{2 * k * B};
            FamilyRecord rec = check_one(weights, degrees, eps);
            if (rec.alpha != -1)
                throw std::logic_error("jk_templates: template instance with amplitude != -1");
            out.push_back(std::move(rec));
        }
    }
    std::sort(out.begin(), out.end(), record_less);
    return out;
}

std::vector<std::array<Weight, 3>> jk_auto_triples(Weight d_max) {
    SearchParams params;
    params.m = 2;
    params.alpha = 0;
    params.c_range = {1};
    params.d_max = d_max;
    params.mode = QsMode::strict_hypersurface;
    std::vector<std::array<Weight, 3>> out;
    for (const FamilyRecord& rec : enumerate_families(params)) {
        const auto& a = rec.family.space.weights;
        if (a[3] == a[0] + a[1] + a[2]) out.push_back({a[0], a[1], a[2]});
    }
    return out;
}

} // namespace wci
