#ifndef CFC_TESTS_FIXTURES_HPP
#define CFC_TESTS_FIXTURES_HPP

#include "cfc/graphs.hpp"
#include "cfc/hypergraph.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace cfc::test {

// Ten points, six intervals: [1,5] [5,10] [2,3] [4,5] [6,7] [8,9].
inline IntervalHypergraph h10()
{
    return IntervalHypergraph(10, {{1, 5}, {5, 10}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
}

inline IntervalHypergraph chain4()
{
    return IntervalHypergraph(4, {{1, 2}, {2, 3}, {3, 4}});
}

inline SimpleGraph star(int leaves)
{
    SimpleGraph g(leaves + 1);
    for (Vertex v = 2; v <= leaves + 1; ++v)
        g.add_edge(1, v);
    return g;
}

inline SimpleGraph path_graph(int n)
{
    SimpleGraph g(n);
    for (Vertex v = 1; v < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline SimpleGraph cycle_graph(int n)
{
    SimpleGraph g = path_graph(n);
    g.add_edge(n, 1);
    return g;
}

inline SimpleGraph complete_graph(int n)
{
    SimpleGraph g(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            g.add_edge(u, v);
    return g;
}

// u=1 a=2 b=3 c=4 d=5 e=6
inline SimpleGraph five_clique_graph()
{
    return SimpleGraph(6, {{2, 1}, {2, 5}, {1, 3}, {1, 4}, {1, 6}, {1, 5}, {3, 5}, {3, 6}, {6, 4}});
}

// a-b path plus c, d, u, e, f: c,d hang off a; e,f off b; u off both.
// a=1 b=2 c=3 d=4 u=5 e=6 f=7
inline SimpleGraph two_path_pattern()
{
    return SimpleGraph(7, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {2, 7}});
}

// Every subset of the discrete family over 1..n, as a bitmask of its intervals.
inline IntervalHypergraph subfamily(int n, unsigned mask)
{
    auto all = discrete_hypergraph(n);
    std::vector<Interval> ivs;
    for (std::size_t i = 0; i < all.num_intervals(); ++i)
        if (mask >> i & 1U)
            ivs.push_back(all.interval(i));
    return IntervalHypergraph(n, ivs);
}

// Brute force exact hittability for small n.
inline bool brute_hittable(const IntervalHypergraph& h)
{
    int n = h.num_points();
    for (unsigned s = 0; s < (1U << n); ++s) {
        bool ok = true;
        for (const auto& iv : h.intervals()) {
            int hits = 0;
            for (Point p = iv.l; p <= iv.r; ++p)
                hits += s >> (p - 1) & 1U;
            if (hits != 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    }
    return false;
}

// Intersection graph of `vertices` random intervals over 1..2*vertices.
inline SimpleGraph random_interval_graph(int vertices, std::mt19937_64& rng)
{
    int span = 2 * vertices;
    std::vector<Interval> ivs;
    for (int i = 0; i < vertices; ++i) {
        Point a = 1 + static_cast<Point>(rng() % static_cast<unsigned>(span));
        Point b = 1 + static_cast<Point>(rng() % static_cast<unsigned>(span));
        ivs.push_back({std::min(a, b), std::max(a, b)});
    }
    return intersection_graph(IntervalHypergraph(span, ivs));
}

} // namespace cfc::test

#endif // CFC_TESTS_FIXTURES_HPP
