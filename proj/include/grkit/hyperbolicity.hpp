#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <vector>

#include "cayley.hpp"
#include "core.hpp"

namespace grkit {

// All Gromov products are kept as doubled integers so every value is exact:
// gromov_product2(D, x, y, w) = d(x,w) + d(y,w) - d(x,y) = 2 (x|y)_w.
inline int gromov_product2(const DistanceMatrix& D, int x, int y, int w) {
    return D.at(x, w) + D.at(y, w) - D.at(x, y);
}

// delta2 is twice the hyperbolicity constant of the four-point condition
//   (x|y)_w >= min((x|z)_w, (y|z)_w) - delta,
// i.e. the maximum over all (w,x,y,z) of min((x|z)_w, (y|z)_w) - (x|y)_w.
// witness = (w, x, y, z) attaining it.
struct DeltaResult {
    int delta2 = 0;
    std::array<int, 4> witness{0, 0, 0, 0};
};

// Direct four-fold loop. O(n^4); kept as the independent slow route.
inline DeltaResult delta_naive(const DistanceMatrix& D) {
    const int n = D.n;
    DeltaResult res;
    std::vector<int> gp(static_cast<std::size_t>(n) * n);
    for (int w = 0; w < n; ++w) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) gp[static_cast<std::size_t>(x) * n + y] = gromov_product2(D, x, y, w);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int xy = gp[static_cast<std::size_t>(x) * n + y];
                for (int z = 0; z < n; ++z) {
                    int m = std::min(gp[static_cast<std::size_t>(x) * n + z],
                                     gp[static_cast<std::size_t>(y) * n + z]);
                    if (m - xy > res.delta2) {
                        res.delta2 = m - xy;
                        res.witness = {w, x, y, z};
                    }
                }
            }
    }
    return res;
}

// Max-min route: for a fixed base w with product matrix A,
//   B[x][y] = max_z min(A[x][z], A[z][y])
// is the max-min matrix square of A, and delta2 = max (B - A). The witness z
// is recovered afterwards for the attaining (x, y). O(n^3) per base.
inline DeltaResult delta_maxmin(const DistanceMatrix& D) {
    const int n = D.n;
    DeltaResult res;
    std::vector<int> A(static_cast<std::size_t>(n) * n), B(static_cast<std::size_t>(n) * n);
    for (int w = 0; w < n; ++w) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) A[static_cast<std::size_t>(x) * n + y] = gromov_product2(D, x, y, w);
        for (int x = 0; x < n; ++x) {
            const int* ax = &A[static_cast<std::size_t>(x) * n];
            for (int y = 0; y < n; ++y) {
                int best = std::numeric_limits<int>::min();
                for (int z = 0; z < n; ++z) {
                    int m = std::min(ax[z], A[static_cast<std::size_t>(z) * n + y]);
                    if (m > best) best = m;
                }
                B[static_cast<std::size_t>(x) * n + y] = best;
            }
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int v = B[static_cast<std::size_t>(x) * n + y] - A[static_cast<std::size_t>(x) * n + y];
                if (v > res.delta2) {
                    int zbest = -1, m0 = std::numeric_limits<int>::min();
                    for (int z = 0; z < n; ++z) {
                        int m = std::min(A[static_cast<std::size_t>(x) * n + z],
                                         A[static_cast<std::size_t>(z) * n + y]);
                        if (m > m0) {
                            m0 = m;
                            zbest = z;
                        }
                    }
                    res.delta2 = v;
                    res.witness = {w, x, y, zbest};
                }
            }
    }
    return res;
}

// Re-checks a claimed constant against the four-point condition from scratch.
inline bool four_point_holds(const DistanceMatrix& D, int delta2) {
    const int n = D.n;
    for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int xy = gromov_product2(D, x, y, w);
                for (int z = 0; z < n; ++z) {
                    int m = std::min(gromov_product2(D, x, z, w), gromov_product2(D, y, z, w));
                    if (m - xy > delta2) return false;
                }
            }
    return true;
}

// Main entry point. The max-min route always runs; for n <= 128 the direct
// route runs too and any disagreement is a hard internal error. Sizes past
// 2000 vertices are refused outright rather than left to crawl.
inline DeltaResult delta(const DistanceMatrix& D) {
    if (D.n > 2000)
        throw error("graph has " + std::to_string(D.n) +
                    " vertices; exact delta is limited to 2000");
    DeltaResult fast = delta_maxmin(D);
    if (D.n <= 128) {
        DeltaResult slow = delta_naive(D);
        if (slow.delta2 != fast.delta2)
            throw error("internal: delta routes disagree (" + std::to_string(slow.delta2) +
                        " vs " + std::to_string(fast.delta2) + ")");
    }
    return fast;
}

}  // namespace grkit
