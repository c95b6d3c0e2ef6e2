#include "cfc/cooccurrence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace cfc {

std::size_t RepresentativeFunction::num_assigned() const
{
    return static_cast<std::size_t>(std::count_if(rep_.begin(), rep_.end(), [](const auto& p) { return p.has_value(); }));
}

std::vector<IntervalIndex> RepresentativeFunction::domain() const
{
    std::vector<IntervalIndex> out;
    for (IntervalIndex i = 0; i < rep_.size(); ++i)
        if (rep_[i])
            out.push_back(i);
    return out;
}

std::vector<Point> RepresentativeFunction::image() const
{
    std::set<Point> pts;
    for (const auto& p : rep_)
        if (p)
            pts.insert(*p);
    return {pts.begin(), pts.end()};
}

bool is_valid_for(const IntervalHypergraph& h, const RepresentativeFunction& t)
{
    if (t.size() != h.num_intervals())
        return false;
    for (IntervalIndex i = 0; i < t.size(); ++i)
        if (auto p = t.at(i); p && !h.interval(i).contains(*p))
            return false;
    return true;
}

CoOccurrenceGraph::CoOccurrenceGraph(std::vector<Point> vertices, const std::vector<std::pair<Point, Point>>& edges)
    : vertices_(std::move(vertices))
{
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    adj_.assign(vertices_.size(), std::vector<bool>(vertices_.size(), false));
    for (auto [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop at " + std::to_string(u));
        auto i = index_of(u);
        auto j = index_of(v);
        adj_[i][j] = adj_[j][i] = true;
    }
}

bool CoOccurrenceGraph::has_vertex(Point p) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), p);
}

std::size_t CoOccurrenceGraph::index_of(Point p) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
    if (it == vertices_.end() || *it != p)
        throw std::invalid_argument("point " + std::to_string(p) + " is not a vertex");
    return static_cast<std::size_t>(it - vertices_.begin());
}

bool CoOccurrenceGraph::adjacent(Point u, Point v) const
{
    if (!has_vertex(u) || !has_vertex(v))
        return false;
    return adj_[index_of(u)][index_of(v)];
}

std::vector<std::pair<Point, Point>> CoOccurrenceGraph::edges() const
{
    std::vector<std::pair<Point, Point>> out;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (std::size_t j = i + 1; j < vertices_.size(); ++j)
            if (adj_[i][j])
                out.emplace_back(vertices_[i], vertices_[j]);
    return out;
}

std::vector<Point> CoOccurrenceGraph::neighbours(Point v) const
{
    std::vector<Point> out;
    auto i = index_of(v);
    for (std::size_t j = 0; j < vertices_.size(); ++j)
        if (adj_[i][j])
            out.push_back(vertices_[j]);
    return out;
}

int GraphColouring::num_colours() const
{
    std::set<int> used;
    for (const auto& [p, c] : colour)
        used.insert(c);
    return static_cast<int>(used.size());
}

bool is_proper_colouring(const CoOccurrenceGraph& g, const GraphColouring& c)
{
    for (Point v : g.vertices()) {
        auto it = c.colour.find(v);
        if (it == c.colour.end() || it->second < 1)
            return false;
    }
    for (auto [u, v] : g.edges())
        if (c.colour.at(u) == c.colour.at(v))
            return false;
    return true;
}

CoOccurrenceGraph build_cooccurrence(const IntervalHypergraph& h, const RepresentativeFunction& t)
{
    if (t.size() != h.num_intervals())
        throw std::invalid_argument("representative function sized for a different hypergraph");
    for (IntervalIndex i = 0; i < t.size(); ++i)
        if (auto p = t.at(i); p && !h.interval(i).contains(*p))
            throw std::invalid_argument("representative " + std::to_string(*p) + " of interval " + std::to_string(i) +
                                        " lies outside it");
    auto reps = t.image();
    std::vector<std::pair<Point, Point>> edges;
    for (IntervalIndex i = 0; i < t.size(); ++i) {
        auto p = t.at(i);
        if (!p)
            continue;
        const auto& iv = h.interval(i);
        auto lo = std::lower_bound(reps.begin(), reps.end(), iv.l);
        auto hi = std::upper_bound(reps.begin(), reps.end(), iv.r);
        for (auto it = lo; it != hi; ++it)
            if (*it != *p)
                edges.emplace_back(*p, *it);
    }
    return CoOccurrenceGraph(std::move(reps), edges);
}

namespace {

// Carraghan-Pardalos style search over vertex positions.
class CliqueSearch {
public:
    explicit CliqueSearch(const CoOccurrenceGraph& g) : g_(g) {}

    std::vector<std::size_t> run(std::vector<std::size_t> candidates)
    {
        best_.clear();
        current_.clear();
        expand(candidates);
        return best_;
    }

private:
    void expand(std::vector<std::size_t>& cand)
    {
        if (current_.size() > best_.size())
            best_ = current_;
        while (!cand.empty()) {
            if (current_.size() + cand.size() <= best_.size())
                return;
            auto v = cand.back();
            cand.pop_back();
            std::vector<std::size_t> next;
            for (auto u : cand)
                if (g_.adjacent_at(u, v))
                    next.push_back(u);
            current_.push_back(v);
            expand(next);
            current_.pop_back();
        }
    }

    const CoOccurrenceGraph& g_;
    std::vector<std::size_t> best_;
    std::vector<std::size_t> current_;
};

} // namespace

std::vector<Point> max_clique_within(const CoOccurrenceGraph& g, const std::vector<Point>& subset)
{
    std::vector<std::size_t> cand;
    for (Point p : subset)
        cand.push_back(g.index_of(p));
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    auto best = CliqueSearch(g).run(std::move(cand));
    std::vector<Point> out;
    for (auto i : best)
        out.push_back(g.vertices()[i]);
    std::sort(out.begin(), out.end());
    return out;
}

CliqueResult clique_number(const CoOccurrenceGraph& g, const IntervalHypergraph& h)
{
    CliqueResult result;
    const auto& verts = g.vertices();
    for (IntervalIndex i = 0; i < h.num_intervals(); ++i) {
        const auto& iv = h.interval(i);
        auto lo = std::lower_bound(verts.begin(), verts.end(), iv.l);
        auto hi = std::upper_bound(verts.begin(), verts.end(), iv.r);
        if (hi - lo <= result.size)
            continue;
        auto clique = max_clique_within(g, std::vector<Point>(lo, hi));
        if (static_cast<int>(clique.size()) > result.size) {
            result.size = static_cast<int>(clique.size());
            result.clique = std::move(clique);
            result.host = i;
        }
    }
    return result;
}

namespace {

class DsaturColouring {
public:
    DsaturColouring(const CoOccurrenceGraph& g, int bound)
        : g_(g), bound_(bound), colour_(g.num_vertices(), 0), degree_(g.num_vertices(), 0)
    {
        for (std::size_t i = 0; i < g.num_vertices(); ++i)
            for (std::size_t j = 0; j < g.num_vertices(); ++j)
                if (g.adjacent_at(i, j))
                    ++degree_[i];
    }

    bool solve() { return assign(0, 0); }
    [[nodiscard]] int colour_at(std::size_t i) const { return colour_[i]; }

private:
    std::size_t pick() const
    {
        std::size_t best = g_.num_vertices();
        int best_sat = -1;
        int best_deg = -1;
        for (std::size_t i = 0; i < g_.num_vertices(); ++i) {
            if (colour_[i] != 0)
                continue;
            std::uint64_t seen = 0;
            std::set<int> seen_big;
            int uncoloured_deg = 0;
            for (std::size_t j = 0; j < g_.num_vertices(); ++j) {
                if (!g_.adjacent_at(i, j))
                    continue;
                if (colour_[j] == 0)
                    ++uncoloured_deg;
                else if (colour_[j] <= 64)
                    seen |= std::uint64_t{1} << (colour_[j] - 1);
                else
                    seen_big.insert(colour_[j]);
            }
            int sat = std::popcount(seen) + static_cast<int>(seen_big.size());
            // Vertices are in ascending point order, so strict comparison keeps
            // the lowest point on ties.
            if (sat > best_sat || (sat == best_sat && uncoloured_deg > best_deg)) {
                best = i;
                best_sat = sat;
                best_deg = uncoloured_deg;
            }
        }
        return best;
    }

    bool assign(std::size_t done, int used)
    {
        if (done == g_.num_vertices())
            return true;
        auto v = pick();
        int limit = std::min(bound_, used + 1);
        for (int c = 1; c <= limit; ++c) {
            bool clash = false;
            for (std::size_t j = 0; j < g_.num_vertices() && !clash; ++j)
                clash = g_.adjacent_at(v, j) && colour_[j] == c;
            if (clash)
                continue;
            colour_[v] = c;
            if (assign(done + 1, std::max(used, c)))
                return true;
            colour_[v] = 0;
        }
        return false;
    }

    const CoOccurrenceGraph& g_;
    int bound_;
    std::vector<int> colour_;
    std::vector<int> degree_;
};

} // namespace

std::optional<GraphColouring> colour_graph(const CoOccurrenceGraph& g, int bound)
{
    if (g.num_vertices() == 0)
        return GraphColouring{};
    if (bound < 1)
        return std::nullopt;
    DsaturColouring search(g, bound);
    if (!search.solve())
        return std::nullopt;
    GraphColouring out;
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
        out.colour[g.vertices()[i]] = search.colour_at(i);
    return out;
}

CfColouring lift_colouring(const IntervalHypergraph& h, const CoOccurrenceGraph& g, const GraphColouring& gc)
{
    if (!is_proper_colouring(g, gc))
        throw std::invalid_argument("graph colouring is not proper");
    CfColouring out;
    out.colours.assign(static_cast<std::size_t>(h.num_points()), 0);
    for (Point v : g.vertices()) {
        if (v < 1 || v > h.num_points())
            throw std::invalid_argument("vertex " + std::to_string(v) + " is not a point of the hypergraph");
        out.colours[static_cast<std::size_t>(v - 1)] = gc.colour.at(v);
    }
    return out;
}

namespace {

bool induces_cycle(const std::vector<std::uint64_t>& adj, std::uint64_t set, int size, bool complement)
{
    // Every vertex needs exactly two neighbours inside the set (in G or in its
    // complement) and the set must be connected under that relation.
    auto nbrs = [&](int v) {
        std::uint64_t n = adj[static_cast<std::size_t>(v)] & set;
        if (complement)
            n = set & ~n & ~(std::uint64_t{1} << v);
        return n;
    };
    for (std::uint64_t rest = set; rest; rest &= rest - 1)
        if (std::popcount(nbrs(std::countr_zero(rest))) != 2)
            return false;
    std::uint64_t seen = set & (~set + 1);
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1)
            next |= nbrs(std::countr_zero(f));
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return std::popcount(seen) == size;
}

bool search_subsets(const std::vector<std::uint64_t>& adj, int n, int size, int start, std::uint64_t chosen,
                    int count, std::uint64_t& found)
{
    if (count == size) {
        if (induces_cycle(adj, chosen, size, false) || induces_cycle(adj, chosen, size, true)) {
            found = chosen;
            return true;
        }
        return false;
    }
    for (int v = start; v <= n - (size - count); ++v)
        if (search_subsets(adj, n, size, v + 1, chosen | (std::uint64_t{1} << v), count + 1, found))
            return true;
    return false;
}

} // namespace

std::optional<std::vector<Point>> find_odd_hole_or_antihole(const CoOccurrenceGraph& g, int max_hole)
{
    int n = static_cast<int>(g.num_vertices());
    if (n > 64)
        throw std::invalid_argument("perfectness scan limited to 64 vertices");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.adjacent_at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)))
                adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    for (int size = 5; size <= std::min(max_hole, n); size += 2) {
        std::uint64_t found = 0;
        if (search_subsets(adj, n, size, 0, 0, 0, found)) {
            std::vector<Point> out;
            for (std::uint64_t f = found; f; f &= f - 1)
                out.push_back(g.vertices()[static_cast<std::size_t>(std::countr_zero(f))]);
            return out;
        }
    }
    return std::nullopt;
}

bool scan_perfectness(const CoOccurrenceGraph& g, int max_hole)
{
    return !find_odd_hole_or_antihole(g, max_hole).has_value();
}

} // namespace cfc
