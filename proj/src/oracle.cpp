#include "cfc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <utility>

namespace cfc::oracle {

namespace {

constexpr int max_colour_points = 16;
constexpr int max_hitting_points = 24;
constexpr double max_colourings = 2e7;
constexpr double max_rep_functions = 5e6;
constexpr std::size_t max_partition_intervals = 14;

bool unique_colour_in(const std::vector<int>& colours, const Interval& iv)
{
    std::vector<int> count;
    for (Point p = iv.l; p <= iv.r; ++p) {
        int c = colours[static_cast<std::size_t>(p - 1)];
        if (c == 0)
            continue;
        if (static_cast<std::size_t>(c) >= count.size())
            count.resize(static_cast<std::size_t>(c) + 1, 0);
        ++count[static_cast<std::size_t>(c)];
    }
    return std::find(count.begin(), count.end(), 1) != count.end();
}

// Colours points left to right with first uses in increasing colour order.
// `done` is called on each full colouring and returns true to stop.
template <typename Done>
bool enumerate_colourings(int n, int k, std::vector<int>& colours, int p, int used, const Done& done,
                          const std::vector<std::vector<Interval>>& ending)
{
    if (p > n)
        return done(colours);
    for (int c = 0; c <= std::min(k, used + 1); ++c) {
        colours[static_cast<std::size_t>(p - 1)] = c;
        bool fine = true;
        for (const auto& iv : ending[static_cast<std::size_t>(p)])
            if (!unique_colour_in(colours, iv)) {
                fine = false;
                break;
            }
        if (fine && enumerate_colourings(n, k, colours, p + 1, std::max(used, c), done, ending))
            return true;
    }
    colours[static_cast<std::size_t>(p - 1)] = 0;
    return false;
}

std::uint64_t mask_of(const Interval& iv)
{
    return ((std::uint64_t{1} << (iv.r - iv.l + 1)) - 1) << (iv.l - 1);
}

bool exactly_hit(const std::vector<std::uint64_t>& masks, std::uint64_t points)
{
    return std::all_of(masks.begin(), masks.end(), [&](std::uint64_t im) { return std::popcount(im & points) == 1; });
}

// Plain backtracking k-colourability on an adjacency matrix.
bool colourable(const std::vector<std::vector<bool>>& adj, int k, std::vector<int>& colour, std::size_t v, int used)
{
    if (v == adj.size())
        return true;
    for (int c = 1; c <= std::min(k, used + 1); ++c) {
        bool clash = false;
        for (std::size_t u = 0; u < v && !clash; ++u)
            clash = adj[v][u] && colour[u] == c;
        if (clash)
            continue;
        colour[v] = c;
        if (colourable(adj, k, colour, v + 1, std::max(used, c)))
            return true;
    }
    colour[v] = 0;
    return false;
}

} // namespace

int brute_cfc_number(const IntervalHypergraph& h)
{
    if (h.empty())
        return 0;
    if (h.num_points() > max_colour_points)
        throw ScaleExceeded("brute_cfc_number supports n <= " + std::to_string(max_colour_points));
    std::vector<std::vector<Interval>> ending(static_cast<std::size_t>(h.num_points()) + 1);
    for (const auto& iv : h.intervals())
        ending[static_cast<std::size_t>(iv.r)].push_back(iv);
    for (int k = 1;; ++k) {
        std::vector<int> colours(static_cast<std::size_t>(h.num_points()), 0);
        if (enumerate_colourings(h.num_points(), k, colours, 1, 0, [](const std::vector<int>&) { return true; },
                                 ending))
            return k;
    }
}

std::optional<std::vector<Point>> brute_exact_hitting_set(const IntervalHypergraph& h)
{
    if (h.num_points() > max_hitting_points)
        throw ScaleExceeded("brute_exact_hitting_set supports n <= " + std::to_string(max_hitting_points));
    std::vector<std::uint64_t> masks;
    for (const auto& iv : h.intervals())
        masks.push_back(mask_of(iv));
    const std::uint64_t limit = std::uint64_t{1} << h.num_points();
    for (std::uint64_t s = 0; s < limit; ++s) {
        if (!exactly_hit(masks, s))
            continue;
        std::vector<Point> out;
        for (Point p = 1; p <= h.num_points(); ++p)
            if (s >> (p - 1) & 1)
                out.push_back(p);
        return out;
    }
    return std::nullopt;
}

int brute_max_cfc(const IntervalHypergraph& h, int n_colours)
{
    if (n_colours < 1)
        throw std::invalid_argument("brute_max_cfc needs at least one colour");
    double size = 1;
    for (int p = 0; p < h.num_points(); ++p)
        size *= n_colours + 1;
    if (size > max_colourings)
        throw ScaleExceeded("brute_max_cfc supports (N+1)^n <= 2e7");
    int best = 0;
    std::vector<std::vector<Interval>> ending(static_cast<std::size_t>(h.num_points()) + 1);
    std::vector<int> colours(static_cast<std::size_t>(h.num_points()), 0);
    const int m = static_cast<int>(h.num_intervals());
    enumerate_colourings(
        h.num_points(), n_colours, colours, 1, 0,
        [&](const std::vector<int>& c) {
            int ok = 0;
            for (const auto& iv : h.intervals())
                ok += unique_colour_in(c, iv) ? 1 : 0;
            best = std::max(best, ok);
            return best == m;
        },
        ending);
    return best;
}

int brute_min_over_cooccurrence(const IntervalHypergraph& h)
{
    if (h.empty())
        return 0;
    double size = 1;
    for (const auto& iv : h.intervals())
        size *= iv.length();
    if (size > max_rep_functions)
        throw ScaleExceeded("brute_min_over_cooccurrence supports at most 5e6 representative functions");
    const std::size_t m = h.num_intervals();
    std::vector<Point> rep(m);
    for (std::size_t i = 0; i < m; ++i)
        rep[i] = h.interval(i).l;
    int best = static_cast<int>(m) + 1;
    while (true) {
        std::vector<Point> verts(rep);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<std::vector<bool>> adj(verts.size(), std::vector<bool>(verts.size(), false));
        auto pos = [&](Point p) {
            return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), p) - verts.begin());
        };
        for (std::size_t i = 0; i < m; ++i) {
            const auto& iv = h.interval(i);
            for (Point v : verts)
                if (v != rep[i] && iv.contains(v))
                    adj[pos(rep[i])][pos(v)] = adj[pos(v)][pos(rep[i])] = true;
        }
        std::vector<int> colour(verts.size(), 0);
        if (colourable(adj, best - 1, colour, 0, 0)) {
            int k = best - 1;
            while (k > 1) {
                std::fill(colour.begin(), colour.end(), 0);
                if (!colourable(adj, k - 1, colour, 0, 0))
                    break;
                --k;
            }
            best = k;
            if (best == 1)
                return 1;
        }
        // Next representative function in odometer order.
        std::size_t i = 0;
        while (i < m && rep[i] == h.interval(i).r) {
            rep[i] = h.interval(i).l;
            ++i;
        }
        if (i == m)
            break;
        ++rep[i];
    }
    return best;
}

int brute_min_eh_partition(const IntervalHypergraph& h)
{
    const std::size_t m = h.num_intervals();
    if (m == 0)
        return 0;
    if (m > max_partition_intervals || h.num_points() > max_hitting_points)
        throw ScaleExceeded("brute_min_eh_partition supports m <= " + std::to_string(max_partition_intervals) +
                            " and n <= " + std::to_string(max_hitting_points));
    const std::size_t full = (std::size_t{1} << m) - 1;
    std::vector<char> hittable(full + 1, 0);
    for (std::size_t part = 1; part <= full; ++part) {
        std::vector<Interval> members;
        for (std::size_t i = 0; i < m; ++i)
            if (part >> i & 1)
                members.push_back(h.interval(i));
        hittable[part] = brute_exact_hitting_set(IntervalHypergraph(h.num_points(), members)).has_value();
    }
    // Fewest parts covering each subset; the part holding the lowest index is
    // chosen first so each partition is met once.
    std::vector<int> parts(full + 1, static_cast<int>(m) + 1);
    parts[0] = 0;
    for (std::size_t s = 1; s <= full; ++s) {
        std::size_t low = s & (~s + 1);
        std::size_t rest = s ^ low;
        for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
            std::size_t part = sub | low;
            if (hittable[part])
                parts[s] = std::min(parts[s], 1 + parts[s ^ part]);
            if (sub == 0)
                break;
        }
    }
    return parts[full];
}

} // namespace cfc::oracle
