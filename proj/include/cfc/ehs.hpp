#ifndef CFC_EHS_HPP
#define CFC_EHS_HPP

#include "cfc/hypergraph.hpp"

#include <optional>
#include <vector>

namespace cfc {

enum class Mark { white, black };

/// Entry p-1 is the mark of point p.
using PointMark = std::vector<Mark>;

/// Exact hitting set of a proper family: sweep by right endpoint and take
/// the right end of every interval not yet hit. Identical intervals are merged
/// first. Throws std::invalid_argument if the merged family is not proper.
std::vector<Point> greedy_proper_ehs(const IntervalHypergraph& h);

enum class BlackenVerdict { proceed, reject };

struct BlackenResult {
    BlackenVerdict verdict = BlackenVerdict::proceed;
    PointMark marks;
    /// Family on the white points, renumbered 1..n' in order, identical
    /// intervals kept once. Empty on reject.
    IntervalHypergraph reduced;
    /// Entry i-1 is the point of the input that became point i.
    std::vector<Point> label_map;
};

/// One blackening round: for every containment I ⊇ J the points of I \ J turn
/// black. Rejects when some interval is left without a white point.
/// Throws std::invalid_argument if `marks` does not have n entries.
BlackenResult blacken_step(const IntervalHypergraph& h, const PointMark& marks);

struct EhsResult {
    bool exactly_hittable = false;
    std::optional<std::vector<Point>> hitting_set;
};

/// Decides whether `h` has an exact hitting set and returns one if so.
EhsResult is_ehs(const IntervalHypergraph& h);

struct EhPart {
    std::vector<IntervalIndex> intervals; // ascending
    std::vector<Point> hitting;           // ascending
    friend bool operator==(const EhPart&, const EhPart&) = default;
};

struct EhPartition {
    std::vector<EhPart> parts;
    friend bool operator==(const EhPartition&, const EhPartition&) = default;
};

/// Parts are disjoint, cover every interval and each hitting set is exact
/// on its part.
bool is_valid_partition(const IntervalHypergraph& h, const EhPartition& p);

/// Interval I goes to the part of the smallest colour occurring exactly once
/// in I. Parts follow colour order and empty ones are dropped.
/// Throws std::invalid_argument if `c` is not conflict-free on `h`.
EhPartition colouring_to_partition(const IntervalHypergraph& h, const CfColouring& c);

/// Conflict-free colouring with at most |parts| colours.
/// Throws std::invalid_argument if `p` is not a valid partition.
CfColouring partition_to_colouring(const IntervalHypergraph& h, const EhPartition& p);

/// "part <i>: intervals <idx list> hitting <point list>" lines, 1-based parts.
std::string format_partition(const EhPartition& p);

} // namespace cfc

#endif // CFC_EHS_HPP
