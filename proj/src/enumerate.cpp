#include "wci/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "wci/bounds.hpp"

namespace wci {

namespace {

// Search for one fixed degree tuple. Weights are grown top-down: the c
// "paired" weights a_{m+1} <= ... <= a_n first (a_{j+m} < d_j keeps every
// delta_j positive), then the m+1 low weights, largest first, against the
// exact remaining sum. Relaxed forms of the subset conditions run at every
// depth against the not-yet-chosen weights' count, range and sum budget;
// the exact checks gate emission. Table workspaces are preallocated, the
// hot path does not allocate.
class TupleSearch {
public:
    TupleSearch(const SearchParams& params, std::vector<FamilyRecord>& sink)
        : p_(params), sink_(sink) {
        amax_ = p_.a_max ? *p_.a_max : std::numeric_limits<Weight>::max();
        lows_.assign(static_cast<std::size_t>(p_.m) + 1, 0);
    }

    void search(const WeightList& degrees, const std::string& provenance) {
        degs_ = degrees;
        prov_ = &provenance;
        c_ = static_cast<int>(degs_.size());
        n_ = p_.m + c_;
        total_ = std::accumulate(degs_.begin(), degs_.end(), Weight{0}) - p_.alpha;
        if (total_ < n_ + 1) return;
        mode_ = c_ == 1 ? p_.mode : QsMode::necessary;
        tops_.assign(static_cast<std::size_t>(c_), 0);
        // suffix sums / maxima of the per-position caps min(d_j - 1, a_max)
        cap_suffix_.assign(static_cast<std::size_t>(c_) + 1, 0);
        cap_max_.assign(static_cast<std::size_t>(c_) + 1, 0);
        for (int j = c_; j-- > 0;) {
            const Weight cap = position_cap(j);
            cap_suffix_[static_cast<std::size_t>(j)] =
                cap_suffix_[static_cast<std::size_t>(j) + 1] + cap;
            cap_max_[static_cast<std::size_t>(j)] =
                std::max(cap_max_[static_cast<std::size_t>(j) + 1], cap);
        }
        divisors_.clear();
        for (Weight d : degs_)
            for (Weight q = 1; q * q <= d; ++q)
                if (d % q == 0) {
                    divisors_.push_back(q);
                    divisors_.push_back(d / q);
                }
        std::sort(divisors_.begin(), divisors_.end());
        divisors_.erase(std::unique(divisors_.begin(), divisors_.end()), divisors_.end());

        const Weight cap = degs_.back();
        chain_.resize(static_cast<std::size_t>(c_) + 1);
        chain_[0].reset(cap);
        battery_.resize(std::size_t{1} << c_);
        battery_[0].reset(cap);
        choose_top(0, 1, 0);
    }

private:
    Weight position_cap(int j) const {
        return std::min<Weight>(degs_[static_cast<std::size_t>(j)] - 1, amax_);
    }

    bool is_degree(Weight v) const {
        return std::binary_search(degs_.begin(), degs_.end(), v);
    }

    // window + cone + divisibility filters shared by every top position
    bool top_value_ok(int j, Weight prev_sum, Weight v) const {
        if (is_degree(v)) return false;
        if (v > degs_.front() && !std::any_of(degs_.begin(), degs_.end(),
                                              [v](Weight d) { return d % v == 0; }))
            return false;
        const Weight t1 = j == 0 ? v : tops_[0];
        const Weight rest_min = Weight(c_ - 1 - j) * v + (p_.m + 1);
        const Weight rest_max =
            cap_suffix_[static_cast<std::size_t>(j) + 1] + Weight(p_.m + 1) * t1;
        const Weight used = prev_sum + v;
        return used + rest_min <= total_ && used + rest_max >= total_;
    }

    void choose_top(int j, Weight lo, Weight prev_sum) {
        const Weight hi = position_cap(j);
        if (lo > hi) return;
        const bool last = j == c_ - 1;
        const int pure_needed = c_ - (p_.m + 1);

        if (last && pure_needed >= 1) {
            int pure0 = 0;
            for (Weight d : degs_)
                if (chain_[static_cast<std::size_t>(j)].contains(d)) ++pure0;
            if (pure0 < pure_needed) {
                // condition (2) on the full top stratum leaves only m+1
                // external slots, so some degree must be pure over the
                // tops; enumerate the values of a_n that can create one.
                pure_enabling_values(chain_[static_cast<std::size_t>(j)], lo, hi);
                for (Weight v : enabling_)
                    if (top_value_ok(j, prev_sum, v)) accept_top(j, prev_sum, v);
                return;
            }
        }
        // dense values up to d_1, divisors of the degrees beyond it
        const Weight dense_hi = std::min(hi, degs_.front());
        for (Weight v = lo; v <= dense_hi; ++v)
            if (top_value_ok(j, prev_sum, v)) accept_top(j, prev_sum, v);
        for (Weight v : divisors_)
            if (v > std::max(lo - 1, degs_.front()) && v <= hi)
                if (top_value_ok(j, prev_sum, v)) accept_top(j, prev_sum, v);
    }

    // Bounds on the still-unchosen weights as seen from top position j with
    // value v already placed in tops_[j].
    struct Unknowns {
        int remaining_tops;
        Weight top_lo, top_hi; // value range for future tops
        Weight low_cap;        // per-value cap for the low weights
        Weight low_sum_max;    // sum budget for the low weights
    };

    Unknowns unknowns_at(int j, Weight prev_sum) const {
        Unknowns u;
        const Weight v = tops_[static_cast<std::size_t>(j)];
        u.remaining_tops = c_ - 1 - j;
        u.top_lo = v;
        const Weight cur = prev_sum + v;
        // a future top also leaves room for its peers and the low weights
        const Weight budget =
            total_ - cur - Weight(std::max(0, u.remaining_tops - 1)) * v - (p_.m + 1);
        u.top_hi = std::min(cap_max_[static_cast<std::size_t>(j) + 1], budget);
        u.low_sum_max = total_ - cur - Weight(u.remaining_tops) * v;
        u.low_cap = std::min(tops_[0], u.low_sum_max - p_.m);
        return u;
    }

    // Can some admissible future top value v' in [u.top_lo, u.top_hi] have
    // d - v' inside the table? Values above d_1 must divide a degree, and
    // no value may equal a degree.
    bool future_top_serves(const SemigroupTable& table, Weight d, const Unknowns& u) const {
        const Weight dense_hi = std::min({degs_.front() - 1, u.top_hi, d});
        if (dense_hi >= u.top_lo && table.max_member_in(d - dense_hi, d - u.top_lo) >= 0)
            return true;
        for (Weight dv : divisors_) {
            if (dv <= degs_.front() || dv < u.top_lo) continue;
            if (dv > u.top_hi || dv > d) break;
            if (!is_degree(dv) && table.contains(d - dv)) return true;
        }
        return false;
    }

    // Relaxed singleton condition at the just-chosen top; plain
    // divisibility arithmetic, no tables.
    bool singleton_ok(int j, Weight prev_sum) const {
        const Weight v = tops_[static_cast<std::size_t>(j)];
        for (Weight d : degs_)
            if (d % v == 0) return true; // condition (1) with rho = 1
        const Unknowns u = unknowns_at(j, prev_sum);
        int forced_low = 0;
        Weight forced_low_sum = 0;
        for (Weight d : degs_) {
            bool known = false;
            for (int t = 0; t < j && !known; ++t) {
                const Weight w = tops_[static_cast<std::size_t>(t)];
                known = d - w >= 0 && (d - w) % v == 0;
            }
            if (known) continue;
            const Weight r = d % v; // >= 1: no degree is divisible here
            if (u.remaining_tops > 0 && future_top_serves_mod(d, v, u)) continue;
            if (r > std::min(u.low_cap, d)) return false;
            ++forced_low;
            forced_low_sum += r;
        }
        if (forced_low > p_.m + 1) return false;
        return forced_low_sum <= u.low_sum_max - Weight(p_.m + 1 - forced_low);
    }

    // Same admissibility as future_top_serves, membership in <v> computed
    // through residues.
    bool future_top_serves_mod(Weight d, Weight v, const Unknowns& u) const {
        if (u.top_lo <= d) {
            const Weight first = u.top_lo + (d - u.top_lo) % v; // smallest v' == d (mod v)
            if (first <= std::min({degs_.front() - 1, u.top_hi, d})) return true;
        }
        for (Weight dv : divisors_) {
            if (dv <= degs_.front() || dv < u.top_lo) continue;
            if (dv > u.top_hi || dv > d) break;
            if (!is_degree(dv) && (d - dv) % v == 0) return true;
        }
        return false;
    }

    // Relaxed condition for the set of all chosen tops; chain_[j+1] holds
    // the table generated by tops_[0..j].
    bool prefix_ok(int j, Weight prev_sum) const {
        const SemigroupTable& table = chain_[static_cast<std::size_t>(j) + 1];
        const int rho = std::min(c_, j + 1);
        int pure = 0;
        for (Weight d : degs_)
            if (table.contains(d)) ++pure;
        if (pure >= rho) return true;
        const Unknowns u = unknowns_at(j, prev_sum);
        int nonpure = 0, forced_low = 0;
        Weight forced_low_sum = 0;
        for (Weight d : degs_) {
            if (table.contains(d)) continue;
            ++nonpure;
            if (u.remaining_tops > 0 && future_top_serves(table, d, u)) continue;
            const Weight member = table.max_member_in(d - std::min(u.low_cap, d), d - 1);
            if (member < 0) return false;
            ++forced_low;
            forced_low_sum += d - member;
        }
        if (nonpure > u.remaining_tops + p_.m + 1) return false;
        if (forced_low > p_.m + 1) return false;
        return forced_low_sum <= u.low_sum_max - Weight(p_.m + 1 - forced_low);
    }

    void accept_top(int j, Weight prev_sum, Weight v) {
        tops_[static_cast<std::size_t>(j)] = v;
        if (!singleton_ok(j, prev_sum)) return;
        chain_[static_cast<std::size_t>(j) + 1].assign_extended(
            chain_[static_cast<std::size_t>(j)], v);
        if (j > 0 && !prefix_ok(j, prev_sum)) return;
        if (j + 1 < c_) {
            choose_top(j + 1, v, prev_sum + v);
            return;
        }
        const Weight low_sum = total_ - prev_sum - v;
        if (low_sum < p_.m + 1 || low_sum > Weight(p_.m + 1) * tops_[0]) return;
        if (!relaxed_battery(low_sum)) return;
        choose_low(p_.m, std::min(tops_[0], low_sum - p_.m), low_sum);
    }

    void pure_enabling_values(const SemigroupTable& table, Weight lo, Weight hi) {
        enabling_.clear();
        for (Weight d : degs_) {
            if (table.contains(d)) continue;
            for (Weight s = 0; s <= d; ++s) {
                if (!table.contains(s)) continue;
                const Weight r = d - s;
                if (r == 0) continue;
                for (Weight k = 1; k * lo <= r; ++k) {
                    if (r % k) continue;
                    const Weight v = r / k;
                    if (v >= lo && v <= hi) enabling_.push_back(v);
                }
            }
        }
        std::sort(enabling_.begin(), enabling_.end());
        enabling_.erase(std::unique(enabling_.begin(), enabling_.end()), enabling_.end());
    }

    // Relaxed conditions over every nonempty subset of the top positions,
    // with the low weights known only through their count, cap and exact
    // sum. Sound: any completion passing the exact check passes this.
    bool relaxed_battery(Weight low_sum) {
        const Weight vcap = std::min(tops_[0], low_sum - p_.m);
        const unsigned full = (1u << c_) - 1;
        for (unsigned mask = 1; mask <= full; ++mask) {
            const SemigroupTable* table;
            if (mask == full) {
                table = &chain_[static_cast<std::size_t>(c_)];
            } else {
                battery_[mask].assign_extended(
                    battery_[mask & (mask - 1)],
                    tops_[static_cast<std::size_t>(std::countr_zero(mask))]);
                table = &battery_[mask];
            }
            if (!relaxed_subset(*table, mask, low_sum, vcap)) return false;
        }
        return true;
    }

    bool relaxed_subset(const SemigroupTable& table, unsigned mask, Weight low_sum,
                        Weight vcap) const {
        const int esize = std::popcount(mask);
        int pure = 0;
        for (Weight d : degs_)
            if (table.contains(d)) ++pure;
        if (pure >= std::min(c_, esize)) return true;

        const int known_ext = c_ - esize;
        int nonpure = 0, need = 0;
        Weight need_sum = 0;
        for (Weight d : degs_) {
            if (table.contains(d)) continue;
            ++nonpure;
            bool known_ok = false;
            for (int t = 0; t < c_ && !known_ok; ++t)
                if (!(mask >> t & 1)) {
                    const Weight w = tops_[static_cast<std::size_t>(t)];
                    known_ok = d - w >= 0 && table.contains(d - w);
                }
            if (known_ok) continue;
            // smallest admissible low value: largest semigroup member in
            // [d - vcap, d - 1]
            const Weight member = table.max_member_in(d - vcap, d - 1);
            if (member < 0) return false;
            ++need;
            need_sum += d - member;
        }
        if (nonpure > known_ext + p_.m + 1) return false;
        if (need > p_.m + 1) return false;
        if (need_sum > low_sum - Weight(p_.m + 1 - need)) return false;
        return true;
    }

    void choose_low(int pos, Weight cap, Weight rem) {
        if (pos == 0) {
            if (rem >= 1 && rem <= cap && !is_degree(rem)) {
                lows_[0] = rem;
                leaf();
            }
            return;
        }
        const Weight hi = std::min(cap, rem - pos);
        Weight lo = (rem + pos) / (pos + 1); // ceil(rem / (pos + 1))
        if (lo < 1) lo = 1;
        for (Weight v = hi; v >= lo; --v) {
            if (is_degree(v)) continue;
            lows_[static_cast<std::size_t>(pos)] = v;
            choose_low(pos - 1, v, rem - v);
        }
    }

    // allocation-free versions of the well-formedness checks on the
    // weight buffer, before any exact machinery runs
    bool leaf_wellformed() {
        weights_buf_.clear();
        weights_buf_.insert(weights_buf_.end(), lows_.begin(), lows_.end());
        weights_buf_.insert(weights_buf_.end(), tops_.begin(), tops_.end());
        const std::size_t k = weights_buf_.size();
        gcd_suffix_.assign(k + 1, 0);
        for (std::size_t i = k; i-- > 0;)
            gcd_suffix_[i] = std::gcd(gcd_suffix_[i + 1], weights_buf_[i]);
        Weight prefix = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (std::gcd(prefix, gcd_suffix_[i + 1]) != 1) return false;
            prefix = std::gcd(prefix, weights_buf_[i]);
        }
        // no singular stratum of codimension c+1 inside X: every size-m
        // subset with a common factor must represent some degree
        const int m = p_.m;
        if (m < 1) return true;
        subset_idx_.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) subset_idx_[static_cast<std::size_t>(i)] = i;
        const int n1 = n_ + 1;
        for (;;) {
            Weight g = 0;
            for (int i : subset_idx_) g = std::gcd(g, weights_buf_[static_cast<std::size_t>(i)]);
            if (g > 1) {
                wf_table_.reset(degs_.back());
                for (int i : subset_idx_)
                    wf_table_.absorb_gen(weights_buf_[static_cast<std::size_t>(i)]);
                bool represented = false;
                for (Weight d : degs_)
                    if (wf_table_.contains(d)) represented = true;
                if (!represented) return false;
            }
            int i = m - 1;
            while (i >= 0 && subset_idx_[static_cast<std::size_t>(i)] == n1 - m + i) --i;
            if (i < 0) break;
            ++subset_idx_[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < m; ++t)
                subset_idx_[static_cast<std::size_t>(t)] =
                    subset_idx_[static_cast<std::size_t>(t - 1)] + 1;
        }
        return true;
    }

    void leaf() {
        if (!leaf_wellformed()) return;
        CandidateFamily f{WeightSystem{weights_buf_}, degs_};
        if (!check_quasismooth(f, mode_).pass) return;
        FamilyRecord rec = classify_family(std::move(f), mode_, p_.epsilon);
        assert(rec.wellformed && rec.quasismooth.pass);
        rec.provenance = *prov_;
        sink_.push_back(std::move(rec));
    }

    const SearchParams& p_;
    WeightList degs_;
    const std::string* prov_ = nullptr;
    std::vector<FamilyRecord>& sink_;
    int c_ = 0, n_ = 0;
    Weight total_ = 0, amax_ = 0;
    QsMode mode_ = QsMode::necessary;
    WeightList tops_, lows_, divisors_, cap_suffix_, cap_max_, enabling_;
    WeightList weights_buf_, gcd_suffix_;
    std::vector<int> subset_idx_;
    SemigroupTable wf_table_;
    std::vector<SemigroupTable> chain_, battery_;
};

// all ascending (c-1)-tuples below a fixed top degree
template <typename Fn>
void for_each_degree_tuple(int c, Weight dc, Fn&& fn) {
    WeightList degs(static_cast<std::size_t>(c), dc);
    if (c == 1) {
        fn(degs);
        return;
    }
    const auto rec = [&](auto&& self, int idx, Weight lo) -> void {
        if (idx == c - 1) {
            fn(degs);
            return;
        }
        for (Weight d = lo; d <= dc; ++d) {
            degs[static_cast<std::size_t>(idx)] = d;
            self(self, idx + 1, d);
        }
    };
    rec(rec, 0, 1);
}

} // namespace

Weight resolve_degree_cap(const SearchParams& params) {
    if (params.d_max) {
        if (*params.d_max < 1)
            throw std::invalid_argument("enumerate: degree cap must be positive");
        return *params.d_max;
    }
    if (params.alpha == 0)
        throw std::invalid_argument(
            "enumerate: amplitude 0 has no effective degree bound, a degree cap is required");
    if (!params.volume_lb)
        throw std::invalid_argument(
            "enumerate: need a degree cap or a volume lower bound to derive one");
    Rational dc_max;
    if (params.c_range.empty()) {
        dc_max = dc_bound(BoundsQuery(params.m, params.alpha, std::nullopt,
                                      *params.volume_lb, params.epsilon))
                     .dc_max;
    } else {
        for (int c : params.c_range) {
            const BoundsResult r = dc_bound(
                BoundsQuery(params.m, params.alpha, c, *params.volume_lb, params.epsilon));
            if (r.dc_max > dc_max) dc_max = r.dc_max;
        }
    }
    if (dc_max <= 0) return 0;
    const BigInt cap =
        boost::multiprecision::numerator(dc_max) / boost::multiprecision::denominator(dc_max);
    if (cap > BigInt(1) << 40)
        throw std::invalid_argument("enumerate: derived degree cap is impractically large");
    return static_cast<Weight>(cap);
}

std::vector<FamilyRecord> enumerate_families(const SearchParams& params) {
    if (params.m < 1) throw std::invalid_argument("enumerate: dimension must be >= 1");
    if (params.jobs < 1) throw std::invalid_argument("enumerate: jobs must be >= 1");
    const Weight cap = resolve_degree_cap(params);

    std::vector<int> c_range = params.c_range;
    if (c_range.empty()) {
        for (int c = 1; c <= codim_bound(params.m, params.alpha); ++c)
            c_range.push_back(c);
    }
    std::sort(c_range.begin(), c_range.end());
    c_range.erase(std::unique(c_range.begin(), c_range.end()), c_range.end());
    for (int c : c_range)
        if (c < 1) throw std::invalid_argument("enumerate: codimension must be >= 1");

    struct Shard {
        int c;
        Weight dc;
    };
    std::vector<Shard> shards;
    for (int c : c_range)
        for (Weight dc = 1; dc <= cap; ++dc) shards.push_back({c, dc});

    std::vector<std::vector<FamilyRecord>> buckets(shards.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= shards.size()) return;
            const Shard shard = shards[idx];
            const std::string prov =
                "c" + std::to_string(shard.c) + ":d" + std::to_string(shard.dc);
            TupleSearch search(params, buckets[idx]);
            for_each_degree_tuple(shard.c, shard.dc, [&](const WeightList& degs) {
                search.search(degs, prov);
            });
        }
    };
    const int jobs = std::min<int>(params.jobs, static_cast<int>(shards.size()));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<FamilyRecord> out;
    for (auto& b : buckets)
        for (auto& rec : b) out.push_back(std::move(rec));
    std::sort(out.begin(), out.end(), record_less);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const FamilyRecord& a, const FamilyRecord& b) {
                              return a.family == b.family;
                          }),
              out.end());
    return out;
}

} // namespace wci
