#include "cfc/cf_dp.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace cfc {

RepresentativeFunction canonicalize(const IntervalHypergraph& h, const RepresentativeFunction& t, Point b)
{
    if (t.size() != h.num_intervals())
        throw std::invalid_argument("representative function sized for a different hypergraph");
    std::optional<Point> first_l;
    for (IntervalIndex i = 0; i < t.size(); ++i)
        if (t.at(i) == b && (!first_l || h.interval(i).l < *first_l))
            first_l = h.interval(i).l;
    if (!first_l)
        return t;
    RepresentativeFunction out = t;
    for (IntervalIndex i = 0; i < t.size(); ++i) {
        const auto& iv = h.interval(i);
        if (t.assigned(i) && iv.contains(b) && iv.l >= *first_l)
            out.assign(i, b);
    }
    return out;
}

std::vector<IntervalIndex> beta(const IntervalHypergraph& h, int n_colours, const SubproblemKey& key,
                                const RepresentativeFunction& sub_witness)
{
    if (n_colours < 1)
        throw std::invalid_argument("need at least one colour");
    if (!(1 <= key.a && key.a < key.b && key.b <= h.num_points()))
        throw std::invalid_argument("subproblem key needs 1 <= a < b <= n");
    if (sub_witness.size() != h.num_intervals())
        throw std::invalid_argument("sub-witness sized for a different hypergraph");
    RepresentativeFunction t = sub_witness;
    for (auto i : key.t_b) {
        if (i >= h.num_intervals() || !h.interval(i).contains(key.b))
            throw std::invalid_argument("T_b member " + std::to_string(i) + " does not contain b");
        t.assign(i, key.b);
    }
    auto g = build_cooccurrence(h, t);
    std::vector<IntervalIndex> out;
    if (!g.has_vertex(key.b))
        return out;
    for (IntervalIndex i = 0; i < h.num_intervals(); ++i) {
        const auto& iv = h.interval(i);
        if (!t.assigned(i) || !iv.contains(key.b))
            continue;
        std::vector<Point> around;
        for (Point v : g.neighbours(key.b))
            if (iv.l <= v && v < key.b)
                around.push_back(v);
        if (static_cast<int>(around.size()) < n_colours)
            continue;
        if (static_cast<int>(max_clique_within(g, around).size()) + 1 >= n_colours + 1)
            out.push_back(i);
    }
    return out;
}

namespace {

// A representative p owns the span [L, R], the hull of the intervals it
// represents. Two representatives are adjacent iff one lies in the span of
// the other, and an interval is accepted iff it sits inside the span of a
// representative it contains.
//
// The search sweeps representatives left to right. A state after placing
// representative b keeps
//   live: representatives q with R_q > b as (q, L_q, R_q, A_q), where A_q is
//         the largest clique having q as its leftmost vertex seen so far,
//   dead: for k = 1..N the largest finished representative with A >= k.
// Live representatives are pairwise adjacent, so there are at most N.
struct Live {
    int q, l, r, a;
};

struct Span {
    Point p, l, r;
};

struct Frontier {
    std::vector<Live> live; // ascending q
    std::vector<int> dead;  // non-increasing, 0 = none
};

struct KeyHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept
    {
        return std::hash<std::string_view>{}(
            std::string_view(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(int)));
    }
};

std::vector<int> encode(const Frontier& f)
{
    std::vector<int> key;
    key.reserve(1 + 4 * f.live.size() + f.dead.size());
    key.push_back(static_cast<int>(f.live.size()));
    for (const auto& x : f.live) {
        key.push_back(x.q);
        key.push_back(x.l);
        key.push_back(x.r);
        key.push_back(x.a);
    }
    key.insert(key.end(), f.dead.begin(), f.dead.end());
    return key;
}

Frontier decode(const std::vector<int>& key)
{
    Frontier f;
    auto k = static_cast<std::size_t>(key[0]);
    for (std::size_t i = 0; i < k; ++i)
        f.live.push_back({key[1 + 4 * i], key[2 + 4 * i], key[3 + 4 * i], key[4 + 4 * i]});
    f.dead.assign(key.begin() + static_cast<std::ptrdiff_t>(1 + 4 * k), key.end());
    return f;
}

// Largest clique value among dead representatives at or right of x.
int dead_at(const std::vector<int>& dead, int x)
{
    int v = 0;
    while (v < static_cast<int>(dead.size()) && dead[static_cast<std::size_t>(v)] >= x)
        ++v;
    return v;
}

void fold(std::vector<int>& dead, int q, int a)
{
    for (int k = 0; k < a && k < static_cast<int>(dead.size()); ++k)
        dead[static_cast<std::size_t>(k)] = std::max(dead[static_cast<std::size_t>(k)], q);
}

class FrontierSearch {
public:
    FrontierSearch(const IntervalHypergraph& h, int n_colours, bool need_all)
        : h_(h), n_(h.num_points()), cap_(n_colours), need_all_(need_all)
    {
        auto np = static_cast<std::size_t>(n_) + 2;
        containing_.resize(np);
        crossing_l_.resize(np);
        ending_after_.assign(np, 0);
        min_r_after_.assign(np, INT_MAX);
        for (IntervalIndex i = 0; i < h.num_intervals(); ++i) {
            const auto& iv = h.interval(i);
            for (Point p = iv.l; p <= iv.r; ++p)
                containing_[static_cast<std::size_t>(p)].push_back(i);
            for (Point b = iv.l; b < iv.r; ++b)
                crossing_l_[static_cast<std::size_t>(b)].push_back(iv.l);
            for (Point b = 0; b < iv.r; ++b)
                ++ending_after_[static_cast<std::size_t>(b)];
            for (Point b = 0; b < iv.l; ++b)
                min_r_after_[static_cast<std::size_t>(b)] = std::min(min_r_after_[static_cast<std::size_t>(b)], iv.r);
        }
        for (Point p = 1; p <= n_; ++p) {
            auto& cl = crossing_l_[static_cast<std::size_t>(p)];
            std::sort(cl.begin(), cl.end());
            cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
        }
    }

    // Returns the value and spans of an optimal solution. When every interval
    // must be accepted, the value is -1 if that is impossible.
    std::pair<int, std::vector<Span>> run()
    {
        Frontier start;
        start.dead.assign(static_cast<std::size_t>(cap_), 0);
        const int m = static_cast<int>(h_.num_intervals());
        if (need_all_) {
            failed_.assign(static_cast<std::size_t>(n_) + 1, {});
            path_.clear();
            if (m == 0 || search_all(0, start, 0))
                return {m, path_};
            return {-1, {}};
        }
        layers_.assign(static_cast<std::size_t>(n_) + 1, {});
        best_ = {0, 0, 0};
        best_value_ = 0;
        insert(0, encode(start), 0, -1, -1, {0, 0, 0});
        for (int b = 0; b <= n_; ++b) {
            auto& layer = layers_[static_cast<std::size_t>(b)];
            for (std::size_t s = 0; s < layer.states.size(); ++s)
                expand(b, static_cast<int>(s));
        }
        return {best_value_, trace(best_)};
    }

private:
    struct Record {
        std::vector<int> key;
        int value;
        int prev_layer;
        int prev_index;
        Span chosen;
        bool removed;
    };

    struct Layer {
        std::unordered_map<std::vector<int>, int, KeyHash> index;
        std::unordered_map<std::vector<int>, std::vector<int>, KeyHash> groups;
        std::vector<Record> states;
    };

    struct Ref {
        int layer, index, value;
    };

    // Same live representatives and spans, no larger clique values or dead
    // summary, no smaller value.
    bool dominates(const Record& x, const Record& y) const
    {
        if (x.value < y.value)
            return false;
        const auto k = static_cast<std::size_t>(x.key[0]);
        for (std::size_t i = 0; i < k; ++i) {
            if (x.key[2 + 4 * i] != y.key[2 + 4 * i])
                return false;
            if (x.key[4 + 4 * i] > y.key[4 + 4 * i])
                return false;
        }
        for (std::size_t i = 1 + 4 * k; i < x.key.size(); ++i)
            if (x.key[i] > y.key[i])
                return false;
        return true;
    }

    static std::vector<int> skeleton_of(const std::vector<int>& key)
    {
        const auto k = static_cast<std::size_t>(key[0]);
        std::vector<int> out{key[0]};
        for (std::size_t i = 0; i < k; ++i) {
            out.push_back(key[1 + 4 * i]);
            out.push_back(key[3 + 4 * i]);
        }
        return out;
    }

    void insert(int layer, std::vector<int> key, int value, int prev_layer, int prev_index, Span chosen)
    {
        auto& ly = layers_[static_cast<std::size_t>(layer)];
        Record cand{std::move(key), value, prev_layer, prev_index, chosen, false};
        auto& group = ly.groups[skeleton_of(cand.key)];
        for (int j : group)
            if (dominates(ly.states[static_cast<std::size_t>(j)], cand))
                return;
        std::erase_if(group, [&](int j) {
            auto& rec = ly.states[static_cast<std::size_t>(j)];
            if (!dominates(cand, rec))
                return false;
            rec.removed = true;
            return true;
        });
        int at;
        if (auto it = ly.index.find(cand.key); it != ly.index.end()) {
            at = it->second;
            ly.states[static_cast<std::size_t>(at)] = std::move(cand);
        } else {
            at = static_cast<int>(ly.states.size());
            ly.index.emplace(cand.key, at);
            ly.states.push_back(std::move(cand));
        }
        group.push_back(at);
        if (value > best_value_) {
            best_value_ = value;
            best_ = {layer, at, value};
        }
    }

    // Canonical form of a frontier after representative b: values that no
    // later comparison can tell apart are merged.
    void snap(Frontier& f, int b) const
    {
        const auto& cl = crossing_l_[static_cast<std::size_t>(b)];
        std::vector<int> queries = cl;
        for (const auto& x : f.live)
            if (x.q + 1 <= b)
                queries.push_back(x.q + 1);
        std::sort(queries.begin(), queries.end());
        for (auto& d : f.dead) {
            auto it = std::upper_bound(queries.begin(), queries.end(), d);
            d = it == queries.begin() ? 0 : *std::prev(it);
        }
        for (auto& x : f.live) {
            auto it = std::lower_bound(cl.begin(), cl.end(), x.l);
            x.l = (it != cl.end() && *it <= x.q) ? *it : x.q + 1;
        }
    }

    int upper_bound_of(int b, const Frontier& f, int value) const
    {
        int covered = 0;
        for (const auto& iv : h_.intervals()) {
            if (!(iv.l <= b && b < iv.r))
                continue;
            for (const auto& x : f.live)
                if (x.q >= iv.l && x.l <= iv.l && x.r >= iv.r) {
                    ++covered;
                    break;
                }
        }
        return value + ending_after_[static_cast<std::size_t>(b)] - covered;
    }

    // A later representative covering an open interval [l, r] reaches back to
    // l, so it extends every clique that starts at or after l.
    bool coverable(int b, const Frontier& f) const
    {
        for (const auto& iv : h_.intervals()) {
            if (!(iv.l <= b && b < iv.r))
                continue;
            int worst = dead_at(f.dead, iv.l);
            bool done = false;
            for (const auto& x : f.live) {
                if (x.q >= iv.l && x.l <= iv.l && x.r >= iv.r)
                    done = true;
                if (x.q >= iv.l)
                    worst = std::max(worst, x.a);
            }
            if (!done && worst + 1 > cap_)
                return false;
        }
        return true;
    }

    void expand(int b, int s)
    {
        const auto& rec = layers_[static_cast<std::size_t>(b)].states[static_cast<std::size_t>(s)];
        if (rec.removed)
            return;
        const int value = rec.value;
        const Frontier f = decode(rec.key);
        if (upper_bound_of(b, f, value) <= best_value_)
            return;
        successors(b, f, value, [&](Span chosen, Frontier&& nf, int next_value) {
            insert(chosen.p, encode(nf), next_value, b, s, chosen);
            return false;
        });
    }

    // Depth first; frontiers that cannot be completed are remembered per layer.
    bool search_all(int b, const Frontier& f, int value)
    {
        const int m = static_cast<int>(h_.num_intervals());
        if (value == m)
            return true;
        // Only frontiers that still keep every interval enter the memo, so a
        // key there always stands for the same value.
        if (upper_bound_of(b, f, value) != m)
            return false;
        auto key = encode(f);
        auto& failed = failed_[static_cast<std::size_t>(b)];
        if (failed.contains(key))
            return false;
        bool found = false;
        if (coverable(b, f)) {
            found = successors(b, f, value, [&](Span chosen, Frontier&& nf, int next_value) {
                path_.push_back(chosen);
                if (search_all(chosen.p, nf, next_value))
                    return true;
                path_.pop_back();
                return false;
            });
        }
        if (!found)
            failed.insert(std::move(key));
        return found;
    }

    // Calls sink(span, frontier, value) for every way to place the next
    // representative; stops early once sink returns true.
    template <typename Sink>
    bool successors(int b, const Frontier& f, int value, const Sink& sink) const
    {
        for (int p = b + 1; p <= n_; ++p) {
            if (need_all_ && p > min_r_after_[static_cast<std::size_t>(b)])
                break;
            const auto& cont = containing_[static_cast<std::size_t>(p)];
            if (cont.empty())
                continue;
            std::vector<Live> live;
            std::vector<int> dead = f.dead;
            for (const auto& x : f.live) {
                if (x.r < p)
                    fold(dead, x.q, x.a);
                else
                    live.push_back(x);
            }
            std::vector<char> covered(cont.size(), 0);
            for (std::size_t c = 0; c < cont.size(); ++c) {
                const auto& iv = h_.interval(cont[c]);
                for (const auto& x : live)
                    if (x.q >= iv.l && x.l <= iv.l && x.r >= iv.r)
                        covered[c] = 1;
            }

            // The span of p is the hull of the intervals it newly covers.
            std::vector<int> lefts;
            for (std::size_t c = 0; c < cont.size(); ++c)
                if (!covered[c])
                    lefts.push_back(h_.interval(cont[c]).l);
            std::sort(lefts.begin(), lefts.end());
            lefts.erase(std::unique(lefts.begin(), lefts.end()), lefts.end());
            for (int lp : lefts)
                if (extend(value, p, lp, live, dead, cont, covered, sink))
                    return true;
        }
        return false;
    }

    template <typename Sink>
    bool extend(int value, int p, int lp, const std::vector<Live>& live, const std::vector<int>& dead,
                const std::vector<IntervalIndex>& cont, const std::vector<char>& covered, const Sink& sink) const
    {
        int dmax = dead_at(dead, lp);
        if (dmax > 0 && dmax + 1 > cap_)
            return false;
        // Clique values through p, live representatives right to left.
        std::vector<Live> next_live = live;
        int run_max = 1;
        for (auto it = next_live.rbegin(); it != next_live.rend(); ++it) {
            int dm = dead_at(dead, std::max(it->q + 1, lp));
            int cand = std::max(run_max, dm > 0 ? 1 + dm : 1);
            if (lp <= it->q)
                cand = std::max(cand, it->a);
            int g = 1 + cand;
            if (g > cap_)
                return false;
            run_max = std::max(run_max, g);
            it->a = std::max(it->a, g);
        }
        // Dead representatives at or right of lp gain p as a neighbour.
        std::vector<int> next_dead(dead.size());
        for (std::size_t k = 0; k < dead.size(); ++k) {
            int src = k == 0 ? dead[0] : dead[k - 1];
            next_dead[k] = src >= lp ? src : dead[k];
        }

        int least_r = INT_MAX;
        std::vector<int> rights;
        for (std::size_t c = 0; c < cont.size(); ++c) {
            const auto& iv = h_.interval(cont[c]);
            if (covered[c] || iv.l < lp)
                continue;
            rights.push_back(iv.r);
            if (iv.l == lp)
                least_r = std::min(least_r, iv.r);
        }
        std::erase_if(rights, [&](int r) { return r < least_r; });
        std::sort(rights.begin(), rights.end());
        rights.erase(std::unique(rights.begin(), rights.end()), rights.end());

        for (int rp : rights) {
            int gain = 0;
            for (std::size_t c = 0; c < cont.size(); ++c) {
                const auto& iv = h_.interval(cont[c]);
                if (!covered[c] && iv.l >= lp && iv.r <= rp)
                    ++gain;
            }
            Frontier nf{next_live, next_dead};
            if (rp > p)
                nf.live.push_back({p, lp, rp, 1});
            else
                fold(nf.dead, p, 1);
            snap(nf, p);
            if (sink(Span{p, lp, rp}, std::move(nf), value + gain))
                return true;
        }
        return false;
    }

    std::vector<Span> trace(Ref at) const
    {
        std::vector<Span> spans;
        int layer = at.layer;
        int index = at.index;
        while (layer > 0) {
            const auto& rec = layers_[static_cast<std::size_t>(layer)].states[static_cast<std::size_t>(index)];
            spans.push_back(rec.chosen);
            layer = rec.prev_layer;
            index = rec.prev_index;
        }
        std::reverse(spans.begin(), spans.end());
        return spans;
    }

    const IntervalHypergraph& h_;
    int n_;
    int cap_;
    bool need_all_;
    std::vector<std::vector<IntervalIndex>> containing_;
    std::vector<std::vector<int>> crossing_l_;
    std::vector<int> ending_after_;
    std::vector<int> min_r_after_;
    std::vector<Layer> layers_;
    std::vector<std::unordered_set<std::vector<int>, KeyHash>> failed_;
    std::vector<Span> path_;
    Ref best_{0, 0, 0};
    int best_value_ = 0;
};

RepresentativeFunction assign_from_spans(const IntervalHypergraph& h, const std::vector<Span>& spans)
{
    RepresentativeFunction t(h.num_intervals());
    for (IntervalIndex i = 0; i < h.num_intervals(); ++i) {
        const auto& iv = h.interval(i);
        for (const auto& s : spans)
            if (iv.contains(s.p) && s.l <= iv.l && iv.r <= s.r) {
                t.assign(i, s.p);
                break;
            }
    }
    return t;
}

void check_witness(const IntervalHypergraph& h, const RepresentativeFunction& t, int count, int n_colours)
{
    if (!is_valid_for(h, t) || static_cast<int>(t.num_assigned()) != count)
        throw std::logic_error("max_cfc witness does not match its count");
    if (clique_number(build_cooccurrence(h, t), h).size > n_colours)
        throw std::logic_error("max_cfc witness exceeds the clique bound");
}

} // namespace

MaxCfcResult max_cfc(const IntervalHypergraph& h, int n_colours)
{
    if (n_colours < 1)
        throw std::invalid_argument("max_cfc needs at least one colour");
    FrontierSearch search(h, n_colours, false);
    auto [count, spans] = search.run();
    MaxCfcResult out{count, assign_from_spans(h, spans)};
    check_witness(h, out.witness, out.count, n_colours);
    return out;
}

std::optional<RepresentativeFunction> accept_all(const IntervalHypergraph& h, int n_colours)
{
    if (n_colours < 1)
        throw std::invalid_argument("accept_all needs at least one colour");
    FrontierSearch search(h, n_colours, true);
    auto [count, spans] = search.run();
    if (count < 0)
        return std::nullopt;
    auto t = assign_from_spans(h, spans);
    check_witness(h, t, static_cast<int>(h.num_intervals()), n_colours);
    return t;
}

MinCfcResult min_cfc(const IntervalHypergraph& h)
{
    MinCfcResult out;
    out.colouring.colours.assign(static_cast<std::size_t>(h.num_points()), 0);
    if (h.empty())
        return out;
    for (int k = 1; k <= h.num_points(); ++k) {
        auto t = accept_all(h, k);
        if (!t)
            continue;
        auto g = build_cooccurrence(h, *t);
        auto gc = colour_graph(g, k);
        if (!gc)
            throw std::logic_error("co-occurrence graph not colourable within its clique bound");
        out.k = k;
        out.colouring = lift_colouring(h, g, *gc);
        if (!verify_cf_colouring(h, out.colouring) || out.colouring.num_colours() != k)
            throw std::logic_error("min_cfc produced an invalid colouring");
        return out;
    }
    throw std::logic_error("no conflict-free colouring found");
}

} // namespace cfc
