#ifndef CFC_GRAPHS_HPP
#define CFC_GRAPHS_HPP

#include "cfc/hypergraph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cfc {

using Vertex = int;

/// Simple undirected graph on vertices 1..n.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    /// Throws std::invalid_argument on loops, repeated edges or bad endpoints.
    SimpleGraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    [[nodiscard]] int num_vertices() const noexcept { return n_; }
    [[nodiscard]] std::size_t num_edges() const;
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
    [[nodiscard]] const std::vector<Vertex>& neighbours(Vertex v) const;
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }
    /// Edges (u, v) with u < v, sorted.
    [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Adds u-v; returns false if it was already present.
    bool add_edge(Vertex u, Vertex v);

    /// Subgraph induced on `keep`; vertex keep[i] becomes i+1.
    [[nodiscard]] SimpleGraph induced(const std::vector<Vertex>& keep) const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    void check(Vertex v) const;

    int n_ = 0;
    std::vector<std::vector<bool>> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
};

/// Graph file: "n m" then m lines "u v", 1-based. Blank and '#' lines skipped.
SimpleGraph parse_graph(std::istream& in);
SimpleGraph parse_graph(std::string_view text);
std::string serialize(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

/// Vertex i+1 stands for interval i; edges join intersecting intervals.
SimpleGraph intersection_graph(const IntervalHypergraph& h);

class NotIntervalGraph : public std::invalid_argument {
public:
    enum class Reason { not_chordal, no_consecutive_arrangement };
    NotIntervalGraph(Reason reason, const std::string& what) : std::invalid_argument(what), reason_(reason) {}
    [[nodiscard]] Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

/// Maximal cliques listed so that the cliques holding any vertex are
/// consecutive. Each clique is sorted.
struct CliqueOrdering {
    std::vector<std::vector<Vertex>> cliques;
    friend bool operator==(const CliqueOrdering&, const CliqueOrdering&) = default;
};

/// Perfect elimination ordering if `g` is chordal.
std::optional<std::vector<Vertex>> perfect_elimination_ordering(const SimpleGraph& g);

/// Maximal cliques of a chordal graph, sorted lexicographically.
/// Throws NotIntervalGraph(not_chordal) otherwise.
std::vector<std::vector<Vertex>> maximal_cliques(const SimpleGraph& g);

/// Every vertex occupies a contiguous run of cliques and every maximal clique
/// of `g` appears exactly once.
bool is_consecutive_ordering(const SimpleGraph& g, const CliqueOrdering& o);

/// Between an ordering and its reverse, the one whose first clique is
/// lexicographically smaller. Throws NotIntervalGraph.
CliqueOrdering maximal_clique_ordering(const SimpleGraph& g);

/// Tries every permutation of the given cliques (at most 8).
std::optional<CliqueOrdering> brute_clique_ordering(const SimpleGraph& g,
                                                    const std::vector<std::vector<Vertex>>& cliques);

bool is_interval_graph(const SimpleGraph& g);

/// Which vertex of a group with identical clique sets keeps its interval.
enum class Retain { lowest, highest };

struct CanonicalRepresentation {
    IntervalHypergraph hypergraph;
    CliqueOrdering ordering;
    /// Entry v-1: interval index used by vertex v (merged vertices share one).
    std::vector<IntervalIndex> vertex_interval;
    /// Entry v-1: vertex that retained the interval of v's group.
    std::vector<Vertex> merged_into;
    /// Entry i: vertex owning interval i.
    std::vector<Vertex> interval_vertex;
    /// Anchor z_i of the gadget of clique i.
    std::vector<Point> anchors;
    /// Points covered by each gadget.
    std::vector<std::pair<Point, Point>> gadgets;
};

/// Gadget-stretched interval model. Throws NotIntervalGraph.
CanonicalRepresentation build_canonical(const SimpleGraph& g, Retain retain = Retain::lowest);

/// Hypergraph file text plus "# vertex <v> -> interval <idx>" and
/// "# z <i> = <point>" comment lines.
std::string format_canonical(const CanonicalRepresentation& c);

/// Induced path whose open neighbourhood holds an independent set of at
/// least |path| + 3 vertices.
struct ForbiddenWitness {
    std::vector<Vertex> path;
    std::vector<Vertex> independents;
    friend bool operator==(const ForbiddenWitness&, const ForbiddenWitness&) = default;
};

bool is_valid_witness(const SimpleGraph& g, const ForbiddenWitness& w);

/// Exhaustive search over induced paths, shortest first. Throws
/// oracle::ScaleExceeded above 24 vertices.
std::optional<ForbiddenWitness> find_forbidden(const SimpleGraph& g);

struct EhigResult {
    bool exactly_hittable = false;
    CanonicalRepresentation canonical;
    std::vector<Point> hitting_set;          // when exactly hittable
    std::optional<ForbiddenWitness> witness; // otherwise
};

/// Throws NotIntervalGraph.
EhigResult is_ehig(const SimpleGraph& g);

/// Claw-free interval graph.
bool is_proper_interval_graph(const SimpleGraph& g);

/// Finite set system; elements are 0..universe_size-1.
struct SetSystem {
    int universe_size = 0;
    std::vector<std::vector<int>> sets;
    std::vector<std::string> element_names;
};

/// Elements are the vertices (named by number) then the edges ("u-v"); the
/// set of v is v plus its incident edges.
SetSystem ehs_representation(const SimpleGraph& g);

bool is_exact_hitting_set(const SetSystem& s, const std::vector<int>& elements);

/// Vertex i+1 stands for set i.
SimpleGraph intersection_graph(const SetSystem& s);

/// Isomorphism invariant code, exhaustive over degree-respecting
/// permutations. Throws std::invalid_argument above 10 vertices.
std::vector<std::uint8_t> canonical_form(const SimpleGraph& g);

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

} // namespace cfc

#endif // CFC_GRAPHS_HPP
