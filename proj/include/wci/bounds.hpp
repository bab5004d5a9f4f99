#pragma once

#include <optional>

#include "wci/rational.hpp"
#include "wci/core.hpp"

namespace wci {

// Largest codimension a quasismooth non-cone family can have:
// m + alpha + 1 when alpha >= 0, m when alpha < 0.
int codim_bound(int m, Weight alpha);

// Strict upper bound for a_n. alpha >= -1: (m+1)*delta. Fano branch
// (alpha <= -2, eps required): (m+eps)/eps * delta, valid only when
// a_n > (m+eps)/m * (-alpha)/eps -- validated against an_hint when given.
Rational an_bound(int m, Weight delta, Weight alpha,
                  std::optional<Rational> eps = std::nullopt,
                  std::optional<Weight> an_hint = std::nullopt);

struct BoundsQuery {
    int m = 0;                // dimension, >= 2
    Weight alpha = 0;         // amplitude, nonzero for an effective bound
    std::optional<int> c;     // codimension; when absent, maximize over 1..codim_bound
    Rational b;               // positive lower bound for K^m (alpha>0) or (-K)^m (alpha<0)
    Rational epsilon;         // forced to 1 when alpha > 0 or alpha == -1

    BoundsQuery(int m_, Weight alpha_, std::optional<int> c_, Rational b_,
                std::optional<Rational> eps = std::nullopt);
};

struct BoundsResult {
    bool effective = false;   // false exactly when alpha == 0: no bound, caller must cap
    int codim_max = 0;
    Rational N;               // volume-ratio bound: (|alpha|^m * ratio^c) / b
    Rational delta_max;       // (m+1)*N + alpha
    Rational an_strict_sup;   // (m+eps)/eps * delta_max
    Rational dc_max;          // the degree bound
};

// Evaluates the degree bound, exactly. alpha == 0 yields a non-effective
// result with only codim_max filled in.
BoundsResult dc_bound(const BoundsQuery& q);

} // namespace wci
