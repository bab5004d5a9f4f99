#include "wci/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wci {

namespace {

std::string join(const WeightList& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

} // namespace

Weight WeightSystem::sum() const {
    return std::accumulate(weights.begin(), weights.end(), Weight{0});
}

std::string WeightSystem::str() const { return "P(" + join(weights) + ")"; }

Weight CandidateFamily::degree_sum() const {
    return std::accumulate(degrees.begin(), degrees.end(), Weight{0});
}

std::string CandidateFamily::str() const {
    return "X_{" + join(degrees) + "} in " + space.str();
}

CandidateFamily normalize_family(WeightList weights, WeightList degrees) {
    if (weights.size() < 2) throw std::invalid_argument("normalize_family: need at least two weights");
    if (degrees.empty()) throw std::invalid_argument("normalize_family: need at least one degree");
    if (degrees.size() > weights.size() - 1)
        throw std::invalid_argument("normalize_family: codimension exceeds ambient dimension");
    for (Weight a : weights)
        if (a < 1) throw std::invalid_argument("normalize_family: weights must be positive");
    for (Weight d : degrees)
        if (d < 1) throw std::invalid_argument("normalize_family: degrees must be positive");
    std::sort(weights.begin(), weights.end());
    std::sort(degrees.begin(), degrees.end());
    return CandidateFamily{WeightSystem{std::move(weights)}, std::move(degrees)};
}

std::pair<Weight, DeltaProfile> amplitude_delta(const CandidateFamily& f) {
    const int m = f.dim();
    DeltaProfile profile;
    profile.deltas.reserve(f.degrees.size());
    for (std::size_t j = 0; j < f.degrees.size(); ++j) {
        const Weight dj = f.degrees[j] - f.space.weights[j + 1 + m];
        profile.deltas.push_back(dj);
        profile.total += dj;
    }
    return {f.amplitude(), profile};
}

ConeReduction linear_cone_reduce(const CandidateFamily& f) {
    ConeReduction out;
    out.weights = f.space.weights;
    WeightList degs = f.degrees;
    bool removed = true;
    while (removed && !degs.empty()) {
        removed = false;
        for (std::size_t j = 0; j < degs.size() && !removed; ++j) {
            for (std::size_t i = 0; i < out.weights.size(); ++i) {
                if (out.weights[i] == degs[j]) {
                    out.steps.emplace_back(static_cast<int>(i), static_cast<int>(j));
                    out.weights.erase(out.weights.begin() + static_cast<long>(i));
                    degs.erase(degs.begin() + static_cast<long>(j));
                    removed = true;
                    break;
                }
            }
        }
    }
    if (!degs.empty())
        out.family = normalize_family(out.weights, degs);
    return out;
}

bool is_wellformed_space(const WeightSystem& w) {
    const auto& a = w.weights;
    const std::size_t k = a.size();
    // prefix[i] = gcd(a_0..a_{i-1}), suffix[i] = gcd(a_i..a_{n})
    std::vector<Weight> prefix(k + 1, 0), suffix(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = std::gcd(prefix[i], a[i]);
    for (std::size_t i = k; i-- > 0;) suffix[i] = std::gcd(suffix[i + 1], a[i]);
    for (std::size_t i = 0; i < k; ++i)
        if (std::gcd(prefix[i], suffix[i + 1]) != 1) return false;
    return true;
}

VolumeData volume(const CandidateFamily& f) {
    BigInt num(1), den(1);
    for (Weight d : f.degrees) num *= d;
    for (Weight a : f.space.weights) den *= a;
    VolumeData v;
    v.o1_power = Rational(num, den);
    const long m = f.dim();
    const Rational alpha(f.amplitude());
    v.canonical_power = rational_pow(alpha, m) * v.o1_power;
    v.anticanonical_power = rational_pow(-alpha, m) * v.o1_power;
    return v;
}

CandidateFamily cone_lift(const CandidateFamily& f) {
    WeightList w = f.space.weights;
    w.insert(w.begin(), 1);
    return CandidateFamily{WeightSystem{std::move(w)}, f.degrees};
}

} // namespace wci
