#ifndef CFC_COOCCURRENCE_HPP
#define CFC_COOCCURRENCE_HPP

#include "cfc/hypergraph.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cfc {

/// Partial map interval index -> representative point. A partial function
/// models a solution that accepts only some of the intervals.
class RepresentativeFunction {
public:
    RepresentativeFunction() = default;
    explicit RepresentativeFunction(std::size_t num_intervals) : rep_(num_intervals) {}

    void assign(IntervalIndex i, Point p) { rep_.at(i) = p; }
    void unassign(IntervalIndex i) { rep_.at(i).reset(); }
    [[nodiscard]] std::optional<Point> at(IntervalIndex i) const { return rep_.at(i); }
    [[nodiscard]] bool assigned(IntervalIndex i) const { return rep_.at(i).has_value(); }

    /// Size of the index space (the m of the owning hypergraph).
    [[nodiscard]] std::size_t size() const noexcept { return rep_.size(); }
    [[nodiscard]] std::size_t num_assigned() const;
    [[nodiscard]] bool is_total() const { return num_assigned() == rep_.size(); }
    /// Assigned interval indices, ascending.
    [[nodiscard]] std::vector<IntervalIndex> domain() const;
    /// The representative set R, sorted and deduplicated.
    [[nodiscard]] std::vector<Point> image() const;

    friend bool operator==(const RepresentativeFunction&, const RepresentativeFunction&) = default;

private:
    std::vector<std::optional<Point>> rep_;
};

/// Sized for `h` and every assigned representative lies inside its interval.
bool is_valid_for(const IntervalHypergraph& h, const RepresentativeFunction& t);

/// Simple graph on a set of points.
class CoOccurrenceGraph {
public:
    CoOccurrenceGraph() = default;
    /// Builds a graph directly, e.g. for hand-made test graphs. Throws on
    /// loops or on edge endpoints that are not vertices.
    CoOccurrenceGraph(std::vector<Point> vertices, const std::vector<std::pair<Point, Point>>& edges);

    [[nodiscard]] const std::vector<Point>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] std::size_t num_vertices() const noexcept { return vertices_.size(); }
    [[nodiscard]] bool has_vertex(Point p) const;
    [[nodiscard]] bool adjacent(Point u, Point v) const;
    /// Edges as (u, v) with u < v, sorted.
    [[nodiscard]] std::vector<std::pair<Point, Point>> edges() const;
    [[nodiscard]] std::vector<Point> neighbours(Point v) const;

    // Index based access, positions follow vertices().
    [[nodiscard]] std::size_t index_of(Point p) const;
    [[nodiscard]] bool adjacent_at(std::size_t i, std::size_t j) const { return adj_[i][j]; }

    friend bool operator==(const CoOccurrenceGraph&, const CoOccurrenceGraph&) = default;

private:
    std::vector<Point> vertices_;
    std::vector<std::vector<bool>> adj_;
};

/// Proper colouring of a co-occurrence graph with colours >= 1.
struct GraphColouring {
    std::map<Point, int> colour;

    [[nodiscard]] int num_colours() const;
    friend bool operator==(const GraphColouring&, const GraphColouring&) = default;
};

bool is_proper_colouring(const CoOccurrenceGraph& g, const GraphColouring& c);

/// G_{R,t}: vertices R = image(t); (u, v) is an edge iff some assigned
/// interval contains both and is represented by u or v.
/// Throws std::invalid_argument if t(I) lies outside I.
CoOccurrenceGraph build_cooccurrence(const IntervalHypergraph& h, const RepresentativeFunction& t);

struct CliqueResult {
    int size = 0;
    std::vector<Point> clique;
    /// Interval of `h` whose points contain the clique.
    std::optional<IntervalIndex> host;
};

/// Maximum clique of the subgraph induced on `subset` (branch and bound).
std::vector<Point> max_clique_within(const CoOccurrenceGraph& g, const std::vector<Point>& subset);

/// omega(G), searched interval by interval: every clique of a co-occurrence
/// graph sits inside one interval of the hypergraph it came from.
CliqueResult clique_number(const CoOccurrenceGraph& g, const IntervalHypergraph& h);

/// Exact backtracking colouring with at most `bound` colours, DSATUR order.
/// std::nullopt means no such colouring exists.
std::optional<GraphColouring> colour_graph(const CoOccurrenceGraph& g, int bound);

/// Representatives keep their graph colour, every other point gets 0.
/// Throws std::invalid_argument if `gc` is not a proper colouring of `g`.
CfColouring lift_colouring(const IntervalHypergraph& h, const CoOccurrenceGraph& g, const GraphColouring& gc);

/// First induced odd hole or odd antihole with 5..max_hole vertices, if any.
/// Graphs are limited to 64 vertices.
std::optional<std::vector<Point>> find_odd_hole_or_antihole(const CoOccurrenceGraph& g, int max_hole);

/// True iff no induced odd hole or odd antihole of size 5..max_hole exists.
bool scan_perfectness(const CoOccurrenceGraph& g, int max_hole);

} // namespace cfc

#endif // CFC_COOCCURRENCE_HPP
