#include "cfc/graphs.hpp"

#include "cfc/ehs.hpp"
#include "cfc/oracle.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace cfc {

SimpleGraph::SimpleGraph(int n) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    nbrs_.assign(static_cast<std::size_t>(n), {});
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : SimpleGraph(n)
{
    for (auto [u, v] : edges)
        if (!add_edge(u, v))
            throw std::invalid_argument("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
}

void SimpleGraph::check(Vertex v) const
{
    if (v < 1 || v > n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

std::size_t SimpleGraph::num_edges() const
{
    std::size_t total = 0;
    for (const auto& nb : nbrs_)
        total += nb.size();
    return total / 2;
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const
{
    check(u);
    check(v);
    return adj_[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)];
}

const std::vector<Vertex>& SimpleGraph::neighbours(Vertex v) const
{
    check(v);
    return nbrs_[static_cast<std::size_t>(v - 1)];
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 1; u <= n_; ++u)
        for (Vertex v : nbrs_[static_cast<std::size_t>(u - 1)])
            if (u < v)
                out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

bool SimpleGraph::add_edge(Vertex u, Vertex v)
{
    check(u);
    check(v);
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto iu = static_cast<std::size_t>(u - 1);
    auto iv = static_cast<std::size_t>(v - 1);
    if (adj_[iu][iv])
        return false;
    adj_[iu][iv] = adj_[iv][iu] = true;
    auto& nu = nbrs_[iu];
    nu.insert(std::upper_bound(nu.begin(), nu.end(), v), v);
    auto& nv = nbrs_[iv];
    nv.insert(std::upper_bound(nv.begin(), nv.end(), u), u);
    return true;
}

SimpleGraph SimpleGraph::induced(const std::vector<Vertex>& keep) const
{
    SimpleGraph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j]))
                out.add_edge(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
    return out;
}

SimpleGraph parse_graph(std::istream& in)
{
    using detail::skippable;
    using detail::to_integer;
    using detail::tokens_of;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    long long seen = 0;
    SimpleGraph g;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line))
            continue;
        auto toks = tokens_of(line);
        if (toks.size() != 2)
            throw ParseError(lineno, have_header ? "expected 'u v'" : "malformed header, expected 'n m'");
        long long a = to_integer(toks[0], lineno);
        long long b = to_integer(toks[1], lineno);
        if (!have_header) {
            if (a < 0 || b < 0 || a > 100'000 || b > 10'000'000)
                throw ParseError(lineno, "malformed header, need n >= 0 and m >= 0");
            n = a;
            m = b;
            g = SimpleGraph(static_cast<int>(n));
            have_header = true;
            continue;
        }
        if (seen == m)
            throw ParseError(lineno, "more edges than declared in header");
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParseError(lineno, "vertex outside 1.." + std::to_string(n));
        if (a == b)
            throw ParseError(lineno, "self-loop");
        if (!g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)))
            throw ParseError(lineno, "repeated edge");
        ++seen;
    }
    if (!have_header)
        throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
    if (seen != m)
        throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " + std::to_string(seen));
    return g;
}

SimpleGraph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

std::string serialize(const SimpleGraph& g)
{
    std::ostringstream out;
    auto es = g.edges();
    out << g.num_vertices() << ' ' << es.size() << '\n';
    for (auto [u, v] : es)
        out << u << ' ' << v << '\n';
    return out.str();
}

bool is_connected(const SimpleGraph& g)
{
    if (g.num_vertices() <= 1)
        return true;
    std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices()) + 1, false);
    std::vector<Vertex> stack{1};
    seen[1] = true;
    int count = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbours(v))
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.num_vertices();
}

SimpleGraph intersection_graph(const IntervalHypergraph& h)
{
    SimpleGraph g(static_cast<int>(h.num_intervals()));
    for (IntervalIndex i = 0; i < h.num_intervals(); ++i)
        for (IntervalIndex j = i + 1; j < h.num_intervals(); ++j)
            if (h.interval(i).intersects(h.interval(j)))
                g.add_edge(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
    return g;
}

std::optional<std::vector<Vertex>> perfect_elimination_ordering(const SimpleGraph& g)
{
    const int n = g.num_vertices();
    // Maximum cardinality search; the reverse visiting order is a perfect
    // elimination ordering exactly when the graph is chordal.
    std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
    std::vector<bool> done(static_cast<std::size_t>(n) + 1, false);
    std::vector<Vertex> visit;
    for (int step = 0; step < n; ++step) {
        Vertex pick = 0;
        for (Vertex v = 1; v <= n; ++v)
            if (!done[static_cast<std::size_t>(v)] &&
                (pick == 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]))
                pick = v;
        done[static_cast<std::size_t>(pick)] = true;
        visit.push_back(pick);
        for (Vertex w : g.neighbours(pick))
            ++weight[static_cast<std::size_t>(w)];
    }
    std::vector<Vertex> peo(visit.rbegin(), visit.rend());
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        pos[static_cast<std::size_t>(peo[static_cast<std::size_t>(i)])] = i;
    for (Vertex v : peo) {
        Vertex first_later = 0;
        for (Vertex w : g.neighbours(v))
            if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)] &&
                (first_later == 0 || pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(first_later)]))
                first_later = w;
        if (first_later == 0)
            continue;
        for (Vertex w : g.neighbours(v))
            if (w != first_later && pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)] &&
                !g.adjacent(w, first_later))
                return std::nullopt;
    }
    return peo;
}

std::vector<std::vector<Vertex>> maximal_cliques(const SimpleGraph& g)
{
    auto peo = perfect_elimination_ordering(g);
    if (!peo)
        throw NotIntervalGraph(NotIntervalGraph::Reason::not_chordal, "graph is not chordal");
    std::vector<int> pos(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
    for (std::size_t i = 0; i < peo->size(); ++i)
        pos[static_cast<std::size_t>((*peo)[i])] = static_cast<int>(i);
    std::vector<std::vector<Vertex>> cand;
    for (Vertex v : *peo) {
        std::vector<Vertex> c{v};
        for (Vertex w : g.neighbours(v))
            if (pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)])
                c.push_back(w);
        std::sort(c.begin(), c.end());
        cand.push_back(std::move(c));
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<std::vector<Vertex>> out;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool inside = false;
        for (std::size_t j = 0; j < cand.size() && !inside; ++j)
            inside = j != i && cand[j].size() > cand[i].size() &&
                     std::includes(cand[j].begin(), cand[j].end(), cand[i].begin(), cand[i].end());
        if (!inside)
            out.push_back(cand[i]);
    }
    return out;
}

bool is_consecutive_ordering(const SimpleGraph& g, const CliqueOrdering& o)
{
    std::vector<std::vector<Vertex>> mine;
    try {
        mine = maximal_cliques(g);
    } catch (const NotIntervalGraph&) {
        return false;
    }
    auto theirs = o.cliques;
    for (auto& c : theirs)
        std::sort(c.begin(), c.end());
    std::sort(theirs.begin(), theirs.end());
    if (theirs != mine)
        return false;
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
        int state = 0; // 0 before the run, 1 inside, 2 after
        for (const auto& c : o.cliques) {
            bool in = std::binary_search(c.begin(), c.end(), v);
            if (in && state == 2)
                return false;
            if (in)
                state = 1;
            else if (state == 1)
                state = 2;
        }
    }
    return true;
}

namespace {

class ArrangementSearch {
public:
    ArrangementSearch(const SimpleGraph& g, const std::vector<std::vector<Vertex>>& cliques)
        : cliques_(cliques), remaining_(static_cast<std::size_t>(g.num_vertices()) + 1, 0),
          total_(static_cast<std::size_t>(g.num_vertices()) + 1, 0), placed_(cliques.size(), 0)
    {
        for (const auto& c : cliques)
            for (Vertex v : c)
                ++total_[static_cast<std::size_t>(v)];
        remaining_ = total_;
    }

    std::optional<std::vector<std::size_t>> run()
    {
        order_.clear();
        if (extend())
            return order_;
        return std::nullopt;
    }

private:
    bool fits(std::size_t c) const
    {
        const auto& cand = cliques_[c];
        if (!order_.empty()) {
            for (Vertex v : cliques_[order_.back()])
                if (remaining_[static_cast<std::size_t>(v)] > 0 && !std::binary_search(cand.begin(), cand.end(), v))
                    return false;
        }
        for (Vertex v : cand) {
            bool started = remaining_[static_cast<std::size_t>(v)] < total_[static_cast<std::size_t>(v)];
            bool in_last = !order_.empty() && std::binary_search(cliques_[order_.back()].begin(),
                                                                 cliques_[order_.back()].end(), v);
            if (started && !in_last)
                return false;
        }
        return true;
    }

    bool extend()
    {
        if (order_.size() == cliques_.size())
            return true;
        std::string key(placed_.begin(), placed_.end());
        key.push_back(static_cast<char>(order_.empty() ? 0 : 1));
        if (!order_.empty())
            key += std::to_string(order_.back());
        if (failed_.contains(key))
            return false;
        for (std::size_t c = 0; c < cliques_.size(); ++c) {
            if (placed_[c] || !fits(c))
                continue;
            placed_[c] = 1;
            order_.push_back(c);
            for (Vertex v : cliques_[c])
                --remaining_[static_cast<std::size_t>(v)];
            if (extend())
                return true;
            for (Vertex v : cliques_[c])
                ++remaining_[static_cast<std::size_t>(v)];
            order_.pop_back();
            placed_[c] = 0;
        }
        failed_.insert(std::move(key));
        return false;
    }

    const std::vector<std::vector<Vertex>>& cliques_;
    std::vector<int> remaining_;
    std::vector<int> total_;
    std::vector<char> placed_;
    std::vector<std::size_t> order_;
    std::unordered_set<std::string> failed_;
};

CliqueOrdering oriented(CliqueOrdering o)
{
    if (o.cliques.size() > 1 && o.cliques.back() < o.cliques.front())
        std::reverse(o.cliques.begin(), o.cliques.end());
    return o;
}

} // namespace

std::optional<CliqueOrdering> brute_clique_ordering(const SimpleGraph& g,
                                                    const std::vector<std::vector<Vertex>>& cliques)
{
    if (cliques.size() > 8)
        throw std::invalid_argument("permutation search limited to 8 cliques");
    std::vector<std::size_t> perm(cliques.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        CliqueOrdering o;
        for (auto i : perm)
            o.cliques.push_back(cliques[i]);
        if (is_consecutive_ordering(g, o))
            return oriented(std::move(o));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

CliqueOrdering maximal_clique_ordering(const SimpleGraph& g)
{
    auto cliques = maximal_cliques(g);
    auto order = ArrangementSearch(g, cliques).run();
    if (!order && cliques.size() <= 8) {
        if (auto brute = brute_clique_ordering(g, cliques))
            return *brute;
    }
    if (!order)
        throw NotIntervalGraph(NotIntervalGraph::Reason::no_consecutive_arrangement,
                               "maximal cliques admit no consecutive arrangement");
    CliqueOrdering out;
    for (auto i : *order)
        out.cliques.push_back(cliques[i]);
    return oriented(std::move(out));
}

bool is_interval_graph(const SimpleGraph& g)
{
    try {
        maximal_clique_ordering(g);
        return true;
    } catch (const NotIntervalGraph&) {
        return false;
    }
}

CanonicalRepresentation build_canonical(const SimpleGraph& g, Retain retain)
{
    CanonicalRepresentation out;
    out.ordering = maximal_clique_ordering(g);
    const int n = g.num_vertices();
    const int r = static_cast<int>(out.ordering.cliques.size());
    // Cliques are numbered 1..r; each vertex spans [first, last].
    std::vector<int> first(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> last(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= r; ++i)
        for (Vertex v : out.ordering.cliques[static_cast<std::size_t>(i - 1)]) {
            if (first[static_cast<std::size_t>(v)] == 0)
                first[static_cast<std::size_t>(v)] = i;
            last[static_cast<std::size_t>(v)] = i;
        }

    std::map<std::pair<int, int>, Vertex> keeper;
    for (Vertex v = 1; v <= n; ++v) {
        auto key = std::make_pair(first[static_cast<std::size_t>(v)], last[static_cast<std::size_t>(v)]);
        auto it = keeper.find(key);
        if (it == keeper.end())
            keeper.emplace(key, v);
        else if (retain == Retain::highest)
            it->second = v;
    }
    out.merged_into.resize(static_cast<std::size_t>(n));
    std::vector<Vertex> kept;
    for (Vertex v = 1; v <= n; ++v) {
        Vertex k = keeper.at({first[static_cast<std::size_t>(v)], last[static_cast<std::size_t>(v)]});
        out.merged_into[static_cast<std::size_t>(v - 1)] = k;
        if (k == v)
            kept.push_back(v);
    }

    std::vector<std::vector<Vertex>> starters(static_cast<std::size_t>(r) + 1);
    std::vector<std::vector<Vertex>> enders(static_cast<std::size_t>(r) + 1);
    for (Vertex v : kept) {
        starters[static_cast<std::size_t>(first[static_cast<std::size_t>(v)])].push_back(v);
        enders[static_cast<std::size_t>(last[static_cast<std::size_t>(v)])].push_back(v);
    }
    std::vector<Point> left(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Point> right(static_cast<std::size_t>(n) + 1, 0);
    Point cursor = 1;
    for (int i = 1; i <= r; ++i) {
        auto& s = starters[static_cast<std::size_t>(i)];
        auto& e = enders[static_cast<std::size_t>(i)];
        std::stable_sort(s.begin(), s.end(), [&](Vertex a, Vertex b) {
            return last[static_cast<std::size_t>(a)] > last[static_cast<std::size_t>(b)];
        });
        std::stable_sort(e.begin(), e.end(), [&](Vertex a, Vertex b) {
            return first[static_cast<std::size_t>(a)] < first[static_cast<std::size_t>(b)];
        });
        int width_left = std::max<int>(1, static_cast<int>(s.size()));
        int width_right = std::max<int>(1, static_cast<int>(e.size()));
        Point z = cursor + width_left - 1;
        for (std::size_t k = 0; k < s.size(); ++k)
            left[static_cast<std::size_t>(s[k])] = z - static_cast<Point>(k);
        for (std::size_t k = 0; k < e.size(); ++k)
            right[static_cast<std::size_t>(e[k])] = z + static_cast<Point>(k);
        out.anchors.push_back(z);
        out.gadgets.emplace_back(cursor, z + width_right - 1);
        cursor = z + width_right + 1;
    }
    const Point total = r == 0 ? 0 : cursor - 2;

    std::vector<Interval> ivs;
    std::vector<IntervalIndex> index_of(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v : kept) {
        index_of[static_cast<std::size_t>(v)] = ivs.size();
        ivs.push_back({left[static_cast<std::size_t>(v)], right[static_cast<std::size_t>(v)]});
        out.interval_vertex.push_back(v);
    }
    out.hypergraph = IntervalHypergraph(total, std::move(ivs));
    for (Vertex v = 1; v <= n; ++v)
        out.vertex_interval.push_back(index_of[static_cast<std::size_t>(out.merged_into[static_cast<std::size_t>(v - 1)])]);

    for (std::size_t i = 0; i < kept.size(); ++i)
        for (std::size_t j = i + 1; j < kept.size(); ++j)
            if (out.hypergraph.interval(i).intersects(out.hypergraph.interval(j)) != g.adjacent(kept[i], kept[j]))
                throw std::logic_error("canonical model does not represent the graph");
    return out;
}

std::string format_canonical(const CanonicalRepresentation& c)
{
    std::ostringstream out;
    out << serialize(c.hypergraph);
    for (std::size_t v = 0; v < c.vertex_interval.size(); ++v)
        out << "# vertex " << v + 1 << " -> interval " << c.vertex_interval[v] << '\n';
    for (std::size_t i = 0; i < c.anchors.size(); ++i)
        out << "# z " << i + 1 << " = " << c.anchors[i] << '\n';
    return out.str();
}

bool is_valid_witness(const SimpleGraph& g, const ForbiddenWitness& w)
{
    const auto k = w.path.size();
    if (k == 0 || w.independents.size() < k + 3)
        return false;
    std::set<Vertex> all;
    for (Vertex v : w.path)
        if (v < 1 || v > g.num_vertices() || !all.insert(v).second)
            return false;
    for (Vertex v : w.independents)
        if (v < 1 || v > g.num_vertices() || !all.insert(v).second)
            return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (g.adjacent(w.path[i], w.path[j]) != (j == i + 1))
                return false;
    for (std::size_t i = 0; i < w.independents.size(); ++i) {
        for (std::size_t j = i + 1; j < w.independents.size(); ++j)
            if (g.adjacent(w.independents[i], w.independents[j]))
                return false;
        bool touches = std::any_of(w.path.begin(), w.path.end(),
                                   [&](Vertex p) { return g.adjacent(p, w.independents[i]); });
        if (!touches)
            return false;
    }
    return true;
}

namespace {

void max_independent(const SimpleGraph& g, std::vector<Vertex> cand, std::vector<Vertex>& current,
                     std::vector<Vertex>& best)
{
    if (current.size() + cand.size() <= best.size()) {
        return;
    }
    if (cand.empty()) {
        best = current;
        return;
    }
    Vertex v = cand.front();
    std::vector<Vertex> rest;
    for (std::size_t i = 1; i < cand.size(); ++i)
        if (!g.adjacent(v, cand[i]))
            rest.push_back(cand[i]);
    current.push_back(v);
    max_independent(g, rest, current, best);
    current.pop_back();
    cand.erase(cand.begin());
    max_independent(g, std::move(cand), current, best);
}

class PathSearch {
public:
    explicit PathSearch(const SimpleGraph& g) : g_(g) {}

    std::optional<ForbiddenWitness> run()
    {
        for (std::size_t k = 1; k <= static_cast<std::size_t>(g_.num_vertices()); ++k) {
            target_ = k;
            for (Vertex s = 1; s <= g_.num_vertices(); ++s) {
                path_ = {s};
                if (grow())
                    return found_;
            }
        }
        return std::nullopt;
    }

private:
    bool grow()
    {
        if (path_.size() == target_) {
            if (path_.front() > path_.back())
                return false;
            return test();
        }
        Vertex tail = path_.back();
        for (Vertex w : g_.neighbours(tail)) {
            bool ok = std::find(path_.begin(), path_.end(), w) == path_.end();
            for (std::size_t i = 0; ok && i + 1 < path_.size(); ++i)
                ok = !g_.adjacent(path_[i], w);
            if (!ok)
                continue;
            path_.push_back(w);
            if (grow())
                return true;
            path_.pop_back();
        }
        return false;
    }

    bool test()
    {
        std::set<Vertex> around;
        for (Vertex p : path_)
            for (Vertex w : g_.neighbours(p))
                around.insert(w);
        for (Vertex p : path_)
            around.erase(p);
        if (around.size() < path_.size() + 3)
            return false;
        std::vector<Vertex> current;
        std::vector<Vertex> best;
        max_independent(g_, {around.begin(), around.end()}, current, best);
        if (best.size() < path_.size() + 3)
            return false;
        std::sort(best.begin(), best.end());
        found_ = ForbiddenWitness{path_, best};
        return true;
    }

    const SimpleGraph& g_;
    std::size_t target_ = 0;
    std::vector<Vertex> path_;
    ForbiddenWitness found_;
};

} // namespace

std::optional<ForbiddenWitness> find_forbidden(const SimpleGraph& g)
{
    if (g.num_vertices() > 24)
        throw oracle::ScaleExceeded("find_forbidden supports at most 24 vertices");
    auto w = PathSearch(g).run();
    if (w && !is_valid_witness(g, *w))
        throw std::logic_error("forbidden pattern search returned an invalid witness");
    return w;
}

EhigResult is_ehig(const SimpleGraph& g)
{
    EhigResult out;
    out.canonical = build_canonical(g);
    auto ehs = is_ehs(out.canonical.hypergraph);
    if (ehs.exactly_hittable) {
        out.exactly_hittable = true;
        out.hitting_set = *ehs.hitting_set;
        return out;
    }
    out.witness = find_forbidden(g);
    if (!out.witness)
        throw std::logic_error("canonical model is not exactly hittable but no forbidden pattern exists");
    return out;
}

bool is_proper_interval_graph(const SimpleGraph& g)
{
    if (!is_interval_graph(g))
        return false;
    for (Vertex c = 1; c <= g.num_vertices(); ++c) {
        const auto& nb = g.neighbours(c);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j]))
                    continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
                        return false;
            }
    }
    return true;
}

SetSystem ehs_representation(const SimpleGraph& g)
{
    SetSystem s;
    const int n = g.num_vertices();
    auto es = g.edges();
    s.universe_size = n + static_cast<int>(es.size());
    for (Vertex v = 1; v <= n; ++v)
        s.element_names.push_back(std::to_string(v));
    for (auto [u, v] : es)
        s.element_names.push_back(std::to_string(u) + "-" + std::to_string(v));
    s.sets.assign(static_cast<std::size_t>(n), {});
    for (Vertex v = 1; v <= n; ++v)
        s.sets[static_cast<std::size_t>(v - 1)].push_back(v - 1);
    for (std::size_t e = 0; e < es.size(); ++e) {
        int element = n + static_cast<int>(e);
        s.sets[static_cast<std::size_t>(es[e].first - 1)].push_back(element);
        s.sets[static_cast<std::size_t>(es[e].second - 1)].push_back(element);
    }
    return s;
}

bool is_exact_hitting_set(const SetSystem& s, const std::vector<int>& elements)
{
    std::set<int> chosen(elements.begin(), elements.end());
    return std::all_of(s.sets.begin(), s.sets.end(), [&](const std::vector<int>& set) {
        return std::count_if(set.begin(), set.end(), [&](int e) { return chosen.contains(e); }) == 1;
    });
}

SimpleGraph intersection_graph(const SetSystem& s)
{
    SimpleGraph g(static_cast<int>(s.sets.size()));
    for (std::size_t i = 0; i < s.sets.size(); ++i)
        for (std::size_t j = i + 1; j < s.sets.size(); ++j) {
            std::set<int> a(s.sets[i].begin(), s.sets[i].end());
            bool meet = std::any_of(s.sets[j].begin(), s.sets[j].end(), [&](int e) { return a.contains(e); });
            if (meet)
                g.add_edge(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
        }
    return g;
}

namespace {

class FormSearch {
public:
    explicit FormSearch(const SimpleGraph& g) : g_(g), n_(g.num_vertices())
    {
        for (Vertex v = 1; v <= n_; ++v)
            by_degree_.emplace_back(g.degree(v), v);
        std::sort(by_degree_.begin(), by_degree_.end());
        used_.assign(static_cast<std::size_t>(n_) + 1, false);
    }

    std::vector<std::uint8_t> run()
    {
        place(0);
        std::vector<std::uint8_t> out{static_cast<std::uint8_t>(n_)};
        for (const auto& [d, v] : by_degree_)
            out.push_back(static_cast<std::uint8_t>(d));
        out.insert(out.end(), best_.begin(), best_.end());
        return out;
    }

private:
    // Positions take vertices of the matching degree; the code lists
    // adjacency of each new position against all earlier ones.
    void place(std::size_t pos)
    {
        if (!best_.empty() && std::lexicographical_compare(best_.begin(), best_.begin() + static_cast<std::ptrdiff_t>(code_.size()),
                                                           code_.begin(), code_.end()))
            return;
        if (pos == static_cast<std::size_t>(n_)) {
            if (best_.empty() || code_ < best_)
                best_ = code_;
            return;
        }
        int d = by_degree_[pos].first;
        for (const auto& [dv, v] : by_degree_) {
            if (dv != d || used_[static_cast<std::size_t>(v)])
                continue;
            std::size_t mark = code_.size();
            for (std::size_t i = 0; i < pos; ++i)
                code_.push_back(g_.adjacent(order_[i], v) ? 1 : 0);
            used_[static_cast<std::size_t>(v)] = true;
            order_.push_back(v);
            place(pos + 1);
            order_.pop_back();
            used_[static_cast<std::size_t>(v)] = false;
            code_.resize(mark);
        }
    }

    const SimpleGraph& g_;
    int n_;
    std::vector<std::pair<int, Vertex>> by_degree_;
    std::vector<bool> used_;
    std::vector<Vertex> order_;
    std::vector<std::uint8_t> code_;
    std::vector<std::uint8_t> best_;
};

} // namespace

std::vector<std::uint8_t> canonical_form(const SimpleGraph& g)
{
    if (g.num_vertices() > 10)
        throw std::invalid_argument("canonical form limited to 10 vertices");
    return FormSearch(g).run();
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b)
{
    return a.num_vertices() == b.num_vertices() && a.num_edges() == b.num_edges() &&
           canonical_form(a) == canonical_form(b);
}

} // namespace cfc
