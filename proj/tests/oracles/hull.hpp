#pragma once

// Lower convex hull by exhaustive chord tests: an interior point is a vertex
// iff it lies strictly below every chord joining a point on its left to a
// point on its right.

#include "k3/exactpoly/arith.hpp"

#include <utility>
#include <vector>

namespace oracle {

using Point = std::pair<int, k3::Rat>;

inline std::vector<Point> lower_hull(const std::vector<Point>& pts)
{
    std::vector<Point> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool vertex = true;
        for (std::size_t a = 0; a < i && vertex; ++a)
            for (std::size_t b = i + 1; b < pts.size() && vertex; ++b) {
                k3::Rat t = k3::Rat(pts[i].first - pts[a].first) / (pts[b].first - pts[a].first);
                k3::Rat chord = pts[a].second + t * (pts[b].second - pts[a].second);
                if (pts[i].second >= chord)
                    vertex = false;
            }
        if (vertex)
            out.push_back(pts[i]);
    }
    return out;
}

}  // namespace oracle
