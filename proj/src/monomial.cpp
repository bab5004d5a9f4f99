#include "wci/monomial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wci {

namespace {

// bits |= bits << shift, within the fixed word span
void self_shift_or(std::vector<std::uint64_t>& bits, Weight shift) {
    if (shift <= 0) return;
    const std::size_t word_off = static_cast<std::size_t>(shift / 64);
    const unsigned bit_off = static_cast<unsigned>(shift % 64);
    const std::size_t L = bits.size();
    if (word_off >= L) return;
    for (std::size_t i = L; i-- > word_off;) {
        std::uint64_t v = bits[i - word_off] << bit_off;
        if (bit_off && i - word_off > 0)
            v |= bits[i - word_off - 1] >> (64 - bit_off);
        bits[i] |= v;
    }
}

} // namespace

SemigroupTable::SemigroupTable(WeightList gens, Weight cap)
    : gens_(std::move(gens)), cap_(cap) {
    if (cap_ < 0) cap_ = 0;
    bits_.assign(static_cast<std::size_t>(cap_ / 64) + 1, 0);
    bits_[0] = 1; // degree 0: the constant monomial
    for (Weight g : gens_) {
        if (g <= 0) throw std::invalid_argument("SemigroupTable: generators must be positive");
        absorb(g);
    }
}

void SemigroupTable::absorb(Weight gen) {
    // closure under +gen via doubling shifts
    for (Weight s = gen; s <= cap_; s *= 2) self_shift_or(bits_, s);
}

SemigroupTable SemigroupTable::extended(Weight gen) const {
    SemigroupTable t(*this);
    if (gen <= 0) throw std::invalid_argument("SemigroupTable: generators must be positive");
    t.gens_.push_back(gen);
    t.absorb(gen);
    return t;
}

void SemigroupTable::reset(Weight cap) {
    cap_ = cap < 0 ? 0 : cap;
    gens_.clear();
    bits_.assign(static_cast<std::size_t>(cap_ / 64) + 1, 0);
    bits_[0] = 1;
}

void SemigroupTable::assign_extended(const SemigroupTable& src, Weight gen) {
    if (gen <= 0) throw std::invalid_argument("SemigroupTable: generators must be positive");
    cap_ = src.cap_;
    gens_ = src.gens_;
    bits_ = src.bits_;
    gens_.push_back(gen);
    absorb(gen);
}

void SemigroupTable::absorb_gen(Weight gen) {
    if (gen <= 0) throw std::invalid_argument("SemigroupTable: generators must be positive");
    gens_.push_back(gen);
    absorb(gen);
}

bool SemigroupTable::contains(Weight d) const {
    if (d < 0) return false;
    if (d > cap_) throw std::out_of_range("SemigroupTable::contains beyond cap");
    return (bits_[static_cast<std::size_t>(d / 64)] >> (d % 64)) & 1u;
}

Weight SemigroupTable::max_member_in(Weight lo, Weight hi) const {
    if (lo < 0) lo = 0;
    if (hi > cap_) hi = cap_;
    if (lo > hi) return -1;
    std::size_t w = static_cast<std::size_t>(hi / 64);
    std::uint64_t word = bits_[w] & (~std::uint64_t{0} >> (63 - hi % 64));
    const std::size_t w_lo = static_cast<std::size_t>(lo / 64);
    for (;;) {
        if (word) {
            const Weight v = static_cast<Weight>(w) * 64 + (63 - std::countl_zero(word));
            return v >= lo ? v : -1;
        }
        if (w == w_lo) return -1;
        word = bits_[--w];
    }
}

bool semigroup_contains(Weight d, std::span<const Weight> gens) {
    if (d < 0) return false;
    if (d == 0) return true;
    SemigroupTable t(WeightList(gens.begin(), gens.end()), d);
    return t.contains(d);
}

std::optional<WeightList> semigroup_witness(Weight d, std::span<const Weight> gens) {
    if (d < 0) return std::nullopt;
    const std::size_t k = gens.size();
    if (d == 0) return WeightList(k, 0);
    // suffix[i]: reachability over gens[i..]
    std::vector<SemigroupTable> suffix(k + 1);
    suffix[k] = SemigroupTable({}, d);
    for (std::size_t i = k; i-- > 0;)
        suffix[i] = suffix[i + 1].extended(gens[i]);
    if (!suffix[0].contains(d)) return std::nullopt;
    WeightList expo(k, 0);
    Weight rest = d;
    for (std::size_t i = 0; i < k; ++i) {
        Weight e = 0;
        while (!suffix[i + 1].contains(rest - e * gens[i])) ++e;
        expo[i] = e;
        rest -= e * gens[i];
    }
    return expo;
}

std::optional<Monomial> representable(const CandidateFamily& f, Weight d,
                                      const VariableSubset& E) {
    WeightList gens;
    gens.reserve(E.size());
    for (int i : E) {
        if (i < 0 || i > f.n()) throw std::out_of_range("representable: bad variable index");
        gens.push_back(f.space.weights[static_cast<std::size_t>(i)]);
    }
    auto expo = semigroup_witness(d, gens);
    if (!expo) return std::nullopt;
    Monomial mono;
    mono.degree = d;
    for (std::size_t k = 0; k < E.size(); ++k)
        if ((*expo)[k] > 0) mono.exponents.emplace_back(E[k], (*expo)[k]);
    return mono;
}

std::vector<int> external_candidates(const CandidateFamily& f, Weight d,
                                     const VariableSubset& E) {
    WeightList gens;
    for (int i : E) gens.push_back(f.space.weights[static_cast<std::size_t>(i)]);
    const SemigroupTable table(gens, d);
    std::vector<int> out;
    for (int e = 0; e <= f.n(); ++e) {
        if (std::find(E.begin(), E.end(), e) != E.end()) continue;
        const Weight rest = d - f.space.weights[static_cast<std::size_t>(e)];
        if (rest >= 0 && table.contains(rest)) out.push_back(e);
    }
    return out;
}

namespace {

bool assign_rec(const std::vector<std::vector<int>>& reqs, std::size_t j,
                std::vector<int>& picked, std::vector<int>& used) {
    if (j == reqs.size()) return true;
    for (int e : reqs[j]) {
        if (std::find(used.begin(), used.end(), e) != used.end()) continue;
        used.push_back(e);
        picked[j] = e;
        if (assign_rec(reqs, j + 1, picked, used)) return true;
        used.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<int>>
distinct_assignment(const std::vector<std::vector<int>>& requirements) {
    std::vector<std::vector<int>> reqs = requirements;
    for (auto& r : reqs) std::sort(r.begin(), r.end());
    std::vector<int> picked(reqs.size(), -1);
    std::vector<int> used;
    if (!assign_rec(reqs, 0, picked, used)) return std::nullopt;
    return picked;
}

} // namespace wci
