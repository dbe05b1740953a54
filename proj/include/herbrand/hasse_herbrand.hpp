#pragma once

#include <vector>

#include "herbrand/errors.hpp"
#include "herbrand/filtration.hpp"
#include "herbrand/piecewise_linear.hpp"
#include "herbrand/rational.hpp"

namespace herbrand {

// Transition function of the extension: the integral of 1/(G_0 : G_t) from
// 0 to u, as an exact piecewise-linear function. The slope on (i-1, i] is
// g_i/g_0, so breakpoints sit exactly at the lower-numbering breaks and the
// final slope is 1/e. Unramified extensions give the identity.
//
// The domain is [0, inf): the conventional extension by u on [-1, 0] is
// deliberately not represented.
inline piecewise_linear hasse_herbrand(const ramification_filtration& f) {
    const Int& e = f.ramification_index();
    if (e == 1) return piecewise_linear::identity();

    std::vector<piecewise_linear::point> points{{0, 0}};
    Int running = 0;  // sum of g_1..g_i
    for (std::int64_t i = 1; i <= f.last_index(); ++i) {
        running += f.order_at_index(i);
        if (f.order_at_index(i) > f.order_at_index(i + 1)) {
            points.push_back({Rat(i), Rat(running, e)});
        }
    }
    return piecewise_linear(std::move(points), Rat(1, e));
}

// Upper-numbering images of the breaks: phi(b_j) for every lower break
// b_j >= 0, strictly increasing.
inline std::vector<Rat> upper_breaks(const ramification_filtration& f) {
    if (f.trivial()) {
        throw filtration_error(filtration_errc::trivial_extension,
                               "trivial extension has no ramification break");
    }
    if (f.ramification_index() == 1) {
        throw filtration_error(filtration_errc::unramified_extension,
                               "unramified extension has no break at index >= 0");
    }
    piecewise_linear phi = hasse_herbrand(f);
    std::vector<Rat> result;
    for (const filtration_break& brk : f.break_sequence()) {
        result.push_back(phi(Rat(brk.index)));
    }
    return result;
}

// Brute-force evaluation of the transition function at an integer:
// (1/g_0) * (g_1 + ... + g_u) by direct summation, with g_i = 1 beyond the
// stored sequence. Independent of the piecewise-linear path; the two must
// agree exactly.
inline Rat phi_by_summation(const ramification_filtration& f, const Int& u) {
    if (u < 0) {
        throw function_error(function_errc::negative_argument,
                             "argument " + u.str() + " is negative");
    }
    Int sum = 0;
    Int stored = f.last_index() > 0 ? Int(f.last_index()) : Int(0);
    Int cutoff = u < stored ? u : stored;
    for (Int i = 1; i <= cutoff; ++i) {
        sum += f.order_at_index(static_cast<std::int64_t>(i));
    }
    if (u > stored) sum += u - stored;  // tail of 1s
    return Rat(sum, f.ramification_index());
}

}  // namespace herbrand
