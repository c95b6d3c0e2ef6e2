#ifndef CFC_CF_DP_HPP
#define CFC_CF_DP_HPP

#include "cfc/cooccurrence.hpp"
#include "cfc/hypergraph.hpp"

#include <optional>
#include <vector>

namespace cfc {

/// Subproblem (a, b, T_b): a < b are consecutive representatives and T_b is
/// the set of accepted intervals represented by b.
struct SubproblemKey {
    Point a = 0;
    Point b = 0;
    std::vector<IntervalIndex> t_b;
};

/// Moves onto b every accepted interval that contains b and starts no earlier
/// than the b-represented interval with the smallest left endpoint.
/// `t` is returned unchanged when no interval is represented by b.
RepresentativeFunction canonicalize(const IntervalHypergraph& h, const RepresentativeFunction& t, Point b);

/// Intervals of the combined structure (sub_witness with T_b moved onto b)
/// whose points up to b hold a clique of size N+1 through b.
/// Throws std::invalid_argument on a malformed key.
std::vector<IntervalIndex> beta(const IntervalHypergraph& h, int n_colours, const SubproblemKey& key,
                                const RepresentativeFunction& sub_witness);

struct MaxCfcResult {
    int count = 0;
    /// Partial; assigned exactly on the accepted intervals.
    RepresentativeFunction witness;
};

/// Largest number of intervals that a representative function can accept
/// while its co-occurrence graph keeps clique number <= N.
/// Throws std::invalid_argument if N < 1.
MaxCfcResult max_cfc(const IntervalHypergraph& h, int n_colours);

/// Same search restricted to solutions that accept every interval.
std::optional<RepresentativeFunction> accept_all(const IntervalHypergraph& h, int n_colours);

struct MinCfcResult {
    int k = 0;
    CfColouring colouring;
};

/// Conflict-free chromatic number with an optimal colouring.
MinCfcResult min_cfc(const IntervalHypergraph& h);

} // namespace cfc

#endif // CFC_CF_DP_HPP
