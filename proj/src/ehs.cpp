#include "cfc/ehs.hpp"

#include "cfc/cooccurrence.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cfc {

namespace {

std::vector<Interval> distinct_intervals(const IntervalHypergraph& h)
{
    std::vector<Interval> out(h.intervals().begin(), h.intervals().end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<Point> greedy_proper_ehs(const IntervalHypergraph& h)
{
    IntervalHypergraph merged(h.num_points(), distinct_intervals(h));
    if (!is_proper(merged))
        throw std::invalid_argument("greedy hitting set needs a proper family");
    auto order = distinct_intervals(h);
    std::sort(order.begin(), order.end(), [](const Interval& a, const Interval& b) { return a.r < b.r; });
    std::vector<Point> chosen;
    for (const auto& iv : order)
        if (chosen.empty() || chosen.back() < iv.l)
            chosen.push_back(iv.r);
    if (!is_exact_hitting_set(h, chosen))
        throw std::logic_error("greedy hitting set is not exact");
    return chosen;
}

BlackenResult blacken_step(const IntervalHypergraph& h, const PointMark& marks)
{
    if (static_cast<int>(marks.size()) != h.num_points())
        throw std::invalid_argument("mark vector needs one entry per point");
    BlackenResult out;
    out.marks = marks;
    auto ivs = h.intervals();
    for (const auto& outer : ivs)
        for (const auto& inner : ivs)
            if (outer.contains(inner) && outer != inner) {
                for (Point p = outer.l; p < inner.l; ++p)
                    out.marks[static_cast<std::size_t>(p - 1)] = Mark::black;
                for (Point p = inner.r + 1; p <= outer.r; ++p)
                    out.marks[static_cast<std::size_t>(p - 1)] = Mark::black;
            }

    // new_label[p] is the number of white points in 1..p.
    std::vector<Point> new_label(static_cast<std::size_t>(h.num_points()) + 1, 0);
    for (Point p = 1; p <= h.num_points(); ++p) {
        bool white = out.marks[static_cast<std::size_t>(p - 1)] == Mark::white;
        new_label[static_cast<std::size_t>(p)] = new_label[static_cast<std::size_t>(p - 1)] + (white ? 1 : 0);
        if (white)
            out.label_map.push_back(p);
    }
    std::vector<Interval> shrunk;
    for (const auto& iv : ivs) {
        Point first = new_label[static_cast<std::size_t>(iv.l - 1)] + 1;
        Point last = new_label[static_cast<std::size_t>(iv.r)];
        if (first > last) {
            out.verdict = BlackenVerdict::reject;
            out.label_map.clear();
            return out;
        }
        shrunk.push_back({first, last});
    }
    std::sort(shrunk.begin(), shrunk.end());
    shrunk.erase(std::unique(shrunk.begin(), shrunk.end()), shrunk.end());
    out.reduced = IntervalHypergraph(static_cast<int>(out.label_map.size()), std::move(shrunk));
    return out;
}

EhsResult is_ehs(const IntervalHypergraph& h)
{
    IntervalHypergraph cur(h.num_points(), distinct_intervals(h));
    std::vector<Point> to_original(static_cast<std::size_t>(h.num_points()));
    for (Point p = 1; p <= h.num_points(); ++p)
        to_original[static_cast<std::size_t>(p - 1)] = p;

    while (!is_proper(cur)) {
        auto step = blacken_step(cur, PointMark(static_cast<std::size_t>(cur.num_points()), Mark::white));
        if (step.verdict == BlackenVerdict::reject)
            return {false, std::nullopt};
        std::vector<Point> composed;
        composed.reserve(step.label_map.size());
        for (Point p : step.label_map)
            composed.push_back(to_original[static_cast<std::size_t>(p - 1)]);
        to_original = std::move(composed);
        cur = std::move(step.reduced);
    }
    std::vector<Point> hitting;
    for (Point p : greedy_proper_ehs(cur))
        hitting.push_back(to_original[static_cast<std::size_t>(p - 1)]);
    std::sort(hitting.begin(), hitting.end());
    if (!is_exact_hitting_set(h, hitting))
        throw std::logic_error("recovered hitting set is not exact");
    return {true, std::move(hitting)};
}

bool is_valid_partition(const IntervalHypergraph& h, const EhPartition& p)
{
    std::vector<int> seen(h.num_intervals(), 0);
    for (const auto& part : p.parts) {
        std::vector<Interval> members;
        for (auto i : part.intervals) {
            if (i >= h.num_intervals())
                return false;
            ++seen[i];
            members.push_back(h.interval(i));
        }
        for (Point x : part.hitting)
            if (x < 1 || x > h.num_points())
                return false;
        if (!is_exact_hitting_set(IntervalHypergraph(h.num_points(), members), part.hitting))
            return false;
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

EhPartition colouring_to_partition(const IntervalHypergraph& h, const CfColouring& c)
{
    if (!verify_cf_colouring(h, c))
        throw std::invalid_argument("colouring is not conflict-free");
    std::map<int, EhPart> by_colour;
    for (IntervalIndex i = 0; i < h.num_intervals(); ++i) {
        const auto& iv = h.interval(i);
        std::map<int, int> count;
        for (Point p = iv.l; p <= iv.r; ++p)
            if (int col = c.colour(p); col > 0)
                ++count[col];
        auto it = std::find_if(count.begin(), count.end(), [](const auto& kv) { return kv.second == 1; });
        by_colour[it->first].intervals.push_back(i);
    }
    EhPartition out;
    for (auto& [colour, part] : by_colour) {
        for (Point p = 1; p <= h.num_points(); ++p) {
            if (c.colour(p) != colour)
                continue;
            bool used = std::any_of(part.intervals.begin(), part.intervals.end(),
                                    [&](IntervalIndex i) { return h.interval(i).contains(p); });
            if (used)
                part.hitting.push_back(p);
        }
        out.parts.push_back(std::move(part));
    }
    if (!is_valid_partition(h, out))
        throw std::logic_error("derived partition is not exactly hittable");
    return out;
}

CfColouring partition_to_colouring(const IntervalHypergraph& h, const EhPartition& p)
{
    if (!is_valid_partition(h, p))
        throw std::invalid_argument("not a partition into exactly hittable parts");
    RepresentativeFunction t(h.num_intervals());
    for (const auto& part : p.parts)
        for (auto i : part.intervals)
            for (Point x : part.hitting)
                if (h.interval(i).contains(x))
                    t.assign(i, x);
    auto g = build_cooccurrence(h, t);
    int k = static_cast<int>(p.parts.size());
    auto gc = colour_graph(g, std::max(k, 1));
    if (!gc)
        throw std::logic_error("co-occurrence graph needs more colours than parts");
    auto out = lift_colouring(h, g, *gc);
    if (!verify_cf_colouring(h, out) || out.num_colours() > k)
        throw std::logic_error("partition produced an invalid colouring");
    return out;
}

std::string format_partition(const EhPartition& p)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        out << "part " << i + 1 << ": intervals";
        for (auto idx : p.parts[i].intervals)
            out << ' ' << idx;
        out << " hitting";
        for (Point x : p.parts[i].hitting)
            out << ' ' << x;
        out << '\n';
    }
    return out.str();
}

} // namespace cfc
