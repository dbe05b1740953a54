#pragma once

#include <optional>

#include "herbrand/errors.hpp"
#include "herbrand/filtration.hpp"
#include "herbrand/hasse_herbrand.hpp"
#include "herbrand/piecewise_linear.hpp"
#include "herbrand/rational.hpp"

namespace herbrand {

namespace detail {

inline void require_nonnegative_depth(const Rat& depth) {
    if (depth < 0) {
        throw depth_error(depth_errc::negative_depth,
                          "depth " + format_rational(depth) + " is negative");
    }
}

}  // namespace detail

// Depth of the parameter attached to a character of depth chi_depth on the
// induced torus of the extension: phi(e * chi_depth), exact. Strictly
// increasing in chi_depth and fixes 0.
inline Rat parameter_depth(const ramification_filtration& f, const Rat& chi_depth) {
    detail::require_nonnegative_depth(chi_depth);
    return hasse_herbrand(f)(Rat(f.ramification_index()) * chi_depth);
}

// phi(b) - b/e: the constant value the depth gap takes once e*r >= b, and
// the limit of the gap as r grows. Zero exactly for tame extensions; by
// convention 0 as well for unramified and trivial extensions, where no
// break b >= 0 exists.
inline Rat depth_gap_limit(const ramification_filtration& f) {
    if (f.classification() == ramification_class::unramified) return 0;
    Int b = f.largest_break();
    return hasse_herbrand(f)(Rat(b)) - Rat(b, f.ramification_index());
}

// Parameter depth minus character depth; nonnegative, positive exactly for
// wild extensions at positive depth.
inline Rat depth_gap(const ramification_filtration& f, const Rat& chi_depth) {
    return parameter_depth(f, chi_depth) - chi_depth;
}

// phi(e*r)/r for r > 0; equals 1 + depth_gap_limit/r once e*r >= b, so it
// decreases to 1.
inline Rat depth_ratio(const ramification_filtration& f, const Rat& chi_depth) {
    detail::require_nonnegative_depth(chi_depth);
    if (chi_depth == 0) {
        throw depth_error(depth_errc::zero_depth,
                          "depth ratio requires positive character depth");
    }
    return parameter_depth(f, chi_depth) / chi_depth;
}

inline bool is_depth_preserving(const ramification_filtration& f) {
    return f.classification() != ramification_class::wild;
}

// Smallest integer >= e*r: the valuation cutoff defining the congruence
// filtration subgroup at level r.
inline Int moy_prasad_threshold(const ramification_filtration& f, const Rat& r) {
    detail::require_nonnegative_depth(r);
    return rat_ceil(Rat(f.ramification_index()) * r);
}

// Smallest r > 0 with phi(e*r)/r - 1 <= epsilon, solved exactly.
//
// For wild f the gap phi(e*r) - r has derivative g_ceil(e*r) - 1 >= 0, so
// the ratio excess (gap/r) is constant at g_1 - 1 on the first segment and
// strictly decreasing afterwards. When epsilon >= g_1 - 1 the bound holds
// for every positive r and there is no smallest one; 0 is returned then,
// the same convention the tame case uses ("any positive depth works").
// Otherwise the unique crossing is located by exact segment scan, landing
// on the closed form depth_gap_limit/epsilon whenever e*r* >= b.
inline Rat min_depth_for_ratio(const ramification_filtration& f, const Rat& epsilon) {
    if (epsilon <= 0) {
        throw depth_error(depth_errc::nonpositive_epsilon,
                          "epsilon must be positive");
    }
    if (f.classification() != ramification_class::wild) return 0;
    if (epsilon >= Rat(f.wild_order()) - 1) return 0;

    // h(r) = phi(e*r); crossing of h(r) = (1+eps)*r with h strictly above
    // on the left.
    piecewise_linear h =
        compose(hasse_herbrand(f), piecewise_linear::linear(Rat(f.ramification_index())));
    const auto& pts = h.breakpoints();
    std::vector<Rat> slopes = h.slopes();
    for (std::size_t j = 1; j < pts.size(); ++j) {
        if (pts[j].y <= (1 + epsilon) * pts[j].x) {
            // Crossing lies in the segment entering pts[j].
            const Rat& slope = slopes[j - 1];
            return (pts[j - 1].y - slope * pts[j - 1].x) / (1 + epsilon - slope);
        }
    }
    // Crossing on the final slope-1 segment: gap is constant there.
    const auto& last = pts.back();
    return (last.y - last.x) / epsilon;
}

struct depth_report {
    Rat chi_depth;
    Rat lambda_depth;
    std::optional<Rat> ratio;  // empty at chi_depth = 0
    Rat gap;
    Rat gap_limit;
    ramification_class classification = ramification_class::unramified;
    bool operator==(const depth_report&) const = default;
};

inline depth_report report_depth(const ramification_filtration& f, const Rat& chi_depth) {
    detail::require_nonnegative_depth(chi_depth);
    depth_report report;
    report.chi_depth = chi_depth;
    report.lambda_depth = parameter_depth(f, chi_depth);
    if (chi_depth > 0) report.ratio = report.lambda_depth / chi_depth;
    report.gap = report.lambda_depth - chi_depth;
    report.gap_limit = depth_gap_limit(f);
    report.classification = f.classification();
    return report;
}

}  // namespace herbrand
