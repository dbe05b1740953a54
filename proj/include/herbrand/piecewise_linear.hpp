#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "herbrand/errors.hpp"
#include "herbrand/rational.hpp"

namespace herbrand {

// Exact continuous piecewise-linear function on [0, inf) with f(0) = 0 and
// strictly positive slopes everywhere. Stored in canonical form: adjacent
// segments with equal slopes are merged, so two values compare equal iff
// they are the same function. The slope past the last breakpoint is kept
// explicitly; no sentinel segment is needed.
class piecewise_linear {
  public:
    struct point {
        Rat x;
        Rat y;
        bool operator==(const point&) const = default;
    };

    piecewise_linear(std::vector<point> breakpoints, Rat final_slope)
        : points_(std::move(breakpoints)), final_slope_(std::move(final_slope)) {
        validate();
        canonicalize();
    }

    static piecewise_linear identity() { return linear(1); }

    static piecewise_linear linear(Rat slope) {
        return piecewise_linear({{0, 0}}, std::move(slope));
    }

    const std::vector<point>& breakpoints() const { return points_; }
    const Rat& final_slope() const { return final_slope_; }

    // Slopes of the segments between consecutive breakpoints, with the
    // final slope appended; strictly decreasing left to right in the
    // canonical form of a concave function.
    std::vector<Rat> slopes() const {
        std::vector<Rat> all = slopes_;
        all.push_back(final_slope_);
        return all;
    }

    Rat operator()(const Rat& u) const {
        if (u < 0) {
            throw function_error(function_errc::negative_argument,
                                 "argument " + format_rational(u) + " is negative");
        }
        // Last breakpoint with x <= u; points_[0].x == 0 guarantees one.
        auto it = std::upper_bound(
            points_.begin(), points_.end(), u,
            [](const Rat& value, const point& pt) { return value < pt.x; });
        std::size_t idx = static_cast<std::size_t>(it - points_.begin()) - 1;
        const Rat& slope = idx < slopes_.size() ? slopes_[idx] : final_slope_;
        return points_[idx].y + slope * (u - points_[idx].x);
    }

    bool operator==(const piecewise_linear& other) const {
        return points_ == other.points_ && final_slope_ == other.final_slope_;
    }

  private:
    void validate() const {
        if (points_.empty() || points_.front().x != 0 || points_.front().y != 0) {
            throw function_error(function_errc::invalid_breakpoints,
                                 "breakpoints must start at the origin");
        }
        for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
            if (points_[i].x >= points_[i + 1].x) {
                throw function_error(function_errc::invalid_breakpoints,
                                     "breakpoint abscissae must be strictly increasing");
            }
            if (points_[i].y >= points_[i + 1].y) {
                throw function_error(function_errc::not_invertible,
                                     "segment slopes must be positive");
            }
        }
        if (final_slope_ <= 0) {
            throw function_error(function_errc::not_invertible,
                                 "final slope must be positive");
        }
    }

    void canonicalize() {
        std::vector<point> merged;
        std::vector<Rat> merged_slopes;
        merged.push_back(points_.front());
        for (std::size_t i = 1; i < points_.size(); ++i) {
            Rat slope = (points_[i].y - merged.back().y) / (points_[i].x - merged.back().x);
            // Slope after this point: next segment, or the final slope.
            Rat next = i + 1 < points_.size()
                           ? Rat((points_[i + 1].y - points_[i].y) /
                                 (points_[i + 1].x - points_[i].x))
                           : final_slope_;
            if (slope == next) continue;  // not a real break
            merged_slopes.push_back(std::move(slope));
            merged.push_back(points_[i]);
        }
        points_ = std::move(merged);
        slopes_ = std::move(merged_slopes);
    }

    std::vector<point> points_;
    std::vector<Rat> slopes_;  // one per segment between stored points
    Rat final_slope_;
};

// Exact inverse; evaluate(inverse(f), evaluate(f, u)) == u for all u >= 0.
inline piecewise_linear inverse(const piecewise_linear& f) {
    std::vector<piecewise_linear::point> flipped;
    flipped.reserve(f.breakpoints().size());
    for (const auto& pt : f.breakpoints()) flipped.push_back({pt.y, pt.x});
    return piecewise_linear(std::move(flipped), 1 / f.final_slope());
}

// Breakpoint-merged exact composition outer(inner(u)).
inline piecewise_linear compose(const piecewise_linear& outer, const piecewise_linear& inner) {
    piecewise_linear inner_inverse = inverse(inner);
    std::vector<Rat> xs;
    for (const auto& pt : inner.breakpoints()) xs.push_back(pt.x);
    for (const auto& pt : outer.breakpoints()) xs.push_back(inner_inverse(pt.x));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<piecewise_linear::point> points;
    points.reserve(xs.size());
    for (const Rat& x : xs) points.push_back({x, outer(inner(x))});
    return piecewise_linear(std::move(points), outer.final_slope() * inner.final_slope());
}

}  // namespace herbrand
