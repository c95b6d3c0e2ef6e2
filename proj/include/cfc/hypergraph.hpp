#ifndef CFC_HYPERGRAPH_HPP
#define CFC_HYPERGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cfc {

/// Points on the host line are 1-based, matching the file formats.
using Point = int;
/// Stable identifier of an interval: its position in file order.
using IntervalIndex = std::size_t;

/// Closed interval [l, r] of consecutive host points.
struct Interval {
    Point l = 1;
    Point r = 1;

    [[nodiscard]] constexpr bool contains(Point p) const noexcept { return l <= p && p <= r; }
    /// True when `other` lies inside this interval (equal intervals count).
    [[nodiscard]] constexpr bool contains(const Interval& other) const noexcept
    {
        return l <= other.l && other.r <= r;
    }
    [[nodiscard]] constexpr bool intersects(const Interval& other) const noexcept
    {
        return l <= other.r && other.l <= r;
    }
    [[nodiscard]] constexpr int length() const noexcept { return r - l + 1; }

    friend constexpr bool operator==(const Interval&, const Interval&) = default;
    friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

/// Thrown by the text parsers; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Host points 1..n plus a list of intervals. Duplicates are allowed and
/// the index of an interval never changes.
class IntervalHypergraph {
public:
    IntervalHypergraph() = default;
    /// Throws std::invalid_argument if an interval violates 1 <= l <= r <= n.
    IntervalHypergraph(int n, std::vector<Interval> intervals);

    [[nodiscard]] int num_points() const noexcept { return n_; }
    [[nodiscard]] std::size_t num_intervals() const noexcept { return intervals_.size(); }
    [[nodiscard]] bool empty() const noexcept { return intervals_.empty(); }
    [[nodiscard]] const Interval& interval(IntervalIndex i) const { return intervals_.at(i); }
    [[nodiscard]] std::span<const Interval> intervals() const noexcept { return intervals_; }

    friend bool operator==(const IntervalHypergraph&, const IntervalHypergraph&) = default;

private:
    int n_ = 0;
    std::vector<Interval> intervals_;
};

/// Total map point -> colour, stored 0-based (entry p-1 is the colour of point p).
/// Colour 0 means "uncoloured".
struct CfColouring {
    std::vector<int> colours;

    [[nodiscard]] int colour(Point p) const { return colours.at(static_cast<std::size_t>(p - 1)); }
    /// Number of distinct positive colours in use.
    [[nodiscard]] int num_colours() const;

    friend bool operator==(const CfColouring&, const CfColouring&) = default;
};

IntervalHypergraph parse_hypergraph(std::istream& in);
IntervalHypergraph parse_hypergraph(std::string_view text);
std::string serialize(const IntervalHypergraph& h);

CfColouring parse_colouring(std::istream& in, int n);
CfColouring parse_colouring(std::string_view text, int n);
std::string serialize(const CfColouring& c);

/// No interval contains another; identical duplicates count as containment.
bool is_proper(const IntervalHypergraph& h);

/// Indices of intervals starting at or before `b`, in stable order.
std::vector<IntervalIndex> j_set(const IntervalHypergraph& h, Point b);

/// Sets of intervals containing `b` that are upward closed under left endpoint
/// among the intervals containing `b`. Returned smallest first, starting with
/// the empty set; each set is listed in stable index order.
std::vector<std::vector<IntervalIndex>> nested_sets_at(const IntervalHypergraph& h, Point b);

/// Predicate behind nested_sets_at, exposed for tests and for the DP.
bool is_nested_at(const IntervalHypergraph& h, Point b, std::span<const IntervalIndex> set);

/// All n(n+1)/2 intervals over 1..n, ordered by left then right endpoint.
IntervalHypergraph discrete_hypergraph(int n);

/// `m` intervals drawn uniformly from the discrete family over 1..n.
IntervalHypergraph random_hypergraph(int n, std::size_t m, std::mt19937_64& rng);

/// Every interval has a positive colour that occurs exactly once inside it.
bool verify_cf_colouring(const IntervalHypergraph& h, const CfColouring& c);

/// True iff `points` meets every interval of `h` exactly once.
bool is_exact_hitting_set(const IntervalHypergraph& h, std::span<const Point> points);

} // namespace cfc

#endif // CFC_HYPERGRAPH_HPP
