#ifndef CFC_ORACLE_HPP
#define CFC_ORACLE_HPP

#include "cfc/hypergraph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exhaustive reference implementations. Each one refuses inputs beyond a
// fixed size instead of running unbounded.
namespace cfc::oracle {

class ScaleExceeded : public std::runtime_error {
public:
    explicit ScaleExceeded(const std::string& what) : std::runtime_error("oracle scale exceeded: " + what) {}
};

/// Smallest k with a colouring into {0..k} that is conflict-free.
int brute_cfc_number(const IntervalHypergraph& h);

/// Some point set meeting every interval exactly once, if one exists.
std::optional<std::vector<Point>> brute_exact_hitting_set(const IntervalHypergraph& h);

/// Most intervals simultaneously conflict-free under one colouring with
/// colours {0..N}.
int brute_max_cfc(const IntervalHypergraph& h, int n_colours);

/// Minimum chromatic number of G_{R,t} over all total representative
/// functions t, with R = image(t).
int brute_min_over_cooccurrence(const IntervalHypergraph& h);

/// Fewest parts in a partition of the intervals into exactly hittable parts.
int brute_min_eh_partition(const IntervalHypergraph& h);

} // namespace cfc::oracle

#endif // CFC_ORACLE_HPP
