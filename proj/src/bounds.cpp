#include "wci/bounds.hpp"

#include <stdexcept>

namespace wci {

int codim_bound(int m, Weight alpha) {
    if (m < 1) throw std::invalid_argument("codim_bound: dimension must be >= 1");
    if (alpha >= 0) return m + static_cast<int>(alpha) + 1;
    return m;
}

Rational an_bound(int m, Weight delta, Weight alpha,
                  std::optional<Rational> eps, std::optional<Weight> an_hint) {
    if (alpha >= -1) return Rational(m + 1) * delta;
    if (!eps) throw std::invalid_argument("an_bound: alpha <= -2 needs epsilon");
    if (*eps <= 0) throw std::invalid_argument("an_bound: epsilon must be positive");
    if (an_hint) {
        const Rational floor = (Rational(m) + *eps) / m * Rational(-alpha) / *eps;
        if (!(Rational(*an_hint) > floor))
            throw std::invalid_argument("an_bound: a_n hint violates the Fano-branch hypothesis");
    }
    return (Rational(m) + *eps) / *eps * delta;
}

BoundsQuery::BoundsQuery(int m_, Weight alpha_, std::optional<int> c_, Rational b_,
                         std::optional<Rational> eps)
    : m(m_), alpha(alpha_), c(c_), b(std::move(b_)) {
    if (m < 2) throw std::invalid_argument("BoundsQuery: dimension must be >= 2");
    if (b <= 0) throw std::invalid_argument("BoundsQuery: volume bound must be positive");
    if (c && (*c < 1 || *c > codim_bound(m, alpha)))
        throw std::invalid_argument("BoundsQuery: codimension outside the admissible range");
    if (alpha >= -1) {
        epsilon = 1;
    } else {
        if (!eps) throw std::invalid_argument("BoundsQuery: alpha <= -2 needs epsilon");
        if (*eps <= 0 || *eps > 1)
            throw std::invalid_argument("BoundsQuery: need 0 < epsilon <= 1");
        epsilon = *eps;
    }
}

namespace {

BoundsResult eval_one(const BoundsQuery& q, int c) {
    BoundsResult r;
    r.effective = true;
    r.codim_max = codim_bound(q.m, q.alpha);
    const long m = q.m;
    const Rational eps = q.epsilon;
    Rational ratio; // ((c + alpha + m + 1)/c)^c resp. ((c + m + 1)/c)^c
    if (q.alpha > 0)
        ratio = rational_pow(Rational(c + q.alpha + m + 1, c), c);
    else
        ratio = rational_pow(Rational(c + m + 1, c), c);
    const Rational amp_pow = rational_pow(Rational(q.alpha > 0 ? q.alpha : -q.alpha), m);
    r.N = amp_pow * ratio / q.b;
    r.delta_max = Rational(m + 1) * r.N + q.alpha;
    r.an_strict_sup = (Rational(m) + eps) / eps * r.delta_max;
    // (m + 2eps)/(b eps) * ((m+1)|alpha|^m ratio^c + b alpha); eps = 1 for alpha > 0
    r.dc_max = (Rational(m) + 2 * eps) / (q.b * eps) *
               (Rational(m + 1) * amp_pow * ratio + q.b * q.alpha);
    return r;
}

} // namespace

BoundsResult dc_bound(const BoundsQuery& q) {
    if (q.alpha == 0) {
        BoundsResult r;
        r.effective = false;
        r.codim_max = codim_bound(q.m, q.alpha);
        return r;
    }
    if (q.c) return eval_one(q, *q.c);
    BoundsResult best = eval_one(q, 1);
    for (int c = 2; c <= codim_bound(q.m, q.alpha); ++c) {
        BoundsResult r = eval_one(q, c);
        if (r.N > best.N) best.N = r.N;
        if (r.delta_max > best.delta_max) best.delta_max = r.delta_max;
        if (r.an_strict_sup > best.an_strict_sup) best.an_strict_sup = r.an_strict_sup;
        if (r.dc_max > best.dc_max) best.dc_max = r.dc_max;
    }
    return best;
}

} // namespace wci
