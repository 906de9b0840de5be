#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace lsqfit {

struct Point {
    double x;
    double y;
};

/// An ordered, immutable list of (x, y) samples. Construction rejects empty
/// input and non-finite coordinates; consumers that need at least two points
/// (fitting, CSV ingestion) enforce that themselves.
class Dataset {
public:
    explicit Dataset(std::vector<Point> points) : points_(std::move(points)) {
        if (points_.empty())
            throw std::invalid_argument("dataset must contain at least one point");
        for (const Point& p : points_)
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw std::invalid_argument("dataset coordinates must be finite");
    }

    std::size_t size() const noexcept { return points_.size(); }
    const Point& operator[](std::size_t i) const noexcept { return points_[i]; }
    const std::vector<Point>& points() const noexcept { return points_; }

    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

private:
    std::vector<Point> points_;
};

}  // namespace lsqfit
