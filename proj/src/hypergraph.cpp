#include "cfc/hypergraph.hpp"

#include "text_util.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace cfc {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line)
{
}

IntervalHypergraph::IntervalHypergraph(int n, std::vector<Interval> intervals)
    : n_(n), intervals_(std::move(intervals))
{
    if (n_ < 0)
        throw std::invalid_argument("negative point count");
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        const auto& iv = intervals_[i];
        if (iv.l < 1 || iv.l > iv.r || iv.r > n_)
            throw std::invalid_argument("interval " + std::to_string(i) + " = [" + std::to_string(iv.l) + "," +
                                        std::to_string(iv.r) + "] out of bounds for n=" + std::to_string(n_));
    }
}

int CfColouring::num_colours() const
{
    std::set<int> used;
    for (int c : colours)
        if (c > 0)
            used.insert(c);
    return static_cast<int>(used.size());
}

namespace detail {

std::vector<std::string_view> tokens_of(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long to_integer(std::string_view tok, std::size_t line)
{
    long long value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

bool skippable(std::string_view line)
{
    auto toks = tokens_of(line);
    return toks.empty() || toks.front().front() == '#';
}

} // namespace detail

using detail::skippable;
using detail::to_integer;
using detail::tokens_of;

IntervalHypergraph parse_hypergraph(std::istream& in)
{
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<Interval> intervals;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line))
            continue;
        auto toks = tokens_of(line);
        if (!have_header) {
            if (toks.size() != 2)
                throw ParseError(lineno, "malformed header, expected 'n m'");
            n = to_integer(toks[0], lineno);
            m = to_integer(toks[1], lineno);
            if (n < 1 || m < 0 || n > 1'000'000 || m > 10'000'000)
                throw ParseError(lineno, "malformed header, need n >= 1 and m >= 0");
            have_header = true;
            intervals.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (toks.size() != 2)
            throw ParseError(lineno, "expected 'l r'");
        if (static_cast<long long>(intervals.size()) == m)
            throw ParseError(lineno, "more intervals than declared in header");
        long long l = to_integer(toks[0], lineno);
        long long r = to_integer(toks[1], lineno);
        if (l < 1)
            throw ParseError(lineno, "left endpoint below 1");
        if (l > r)
            throw ParseError(lineno, "left endpoint exceeds right endpoint");
        if (r > n)
            throw ParseError(lineno, "endpoint exceeds n=" + std::to_string(n));
        intervals.push_back({static_cast<Point>(l), static_cast<Point>(r)});
    }
    if (!have_header)
        throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
    if (static_cast<long long>(intervals.size()) != m)
        throw ParseError(lineno, "expected " + std::to_string(m) + " intervals, found " +
                                     std::to_string(intervals.size()));
    return IntervalHypergraph(static_cast<int>(n), std::move(intervals));
}

IntervalHypergraph parse_hypergraph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_hypergraph(in);
}

std::string serialize(const IntervalHypergraph& h)
{
    std::ostringstream out;
    out << h.num_points() << ' ' << h.num_intervals() << '\n';
    for (const auto& iv : h.intervals())
        out << iv.l << ' ' << iv.r << '\n';
    return out.str();
}

CfColouring parse_colouring(std::istream& in, int n)
{
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line))
            continue;
        auto toks = tokens_of(line);
        if (static_cast<int>(toks.size()) != n)
            throw ParseError(lineno, "expected " + std::to_string(n) + " colours, found " + std::to_string(toks.size()));
        CfColouring c;
        c.colours.reserve(toks.size());
        for (auto tok : toks) {
            long long v = to_integer(tok, lineno);
            if (v < 0 || v > 1'000'000)
                throw ParseError(lineno, "colour must be a non-negative integer");
            c.colours.push_back(static_cast<int>(v));
        }
        while (std::getline(in, line)) {
            ++lineno;
            if (!skippable(line))
                throw ParseError(lineno, "trailing data after colouring line");
        }
        return c;
    }
    throw ParseError(lineno == 0 ? 1 : lineno, "missing colouring line");
}

CfColouring parse_colouring(std::string_view text, int n)
{
    std::istringstream in{std::string(text)};
    return parse_colouring(in, n);
}

std::string serialize(const CfColouring& c)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < c.colours.size(); ++i)
        out << (i ? " " : "") << c.colours[i];
    out << '\n';
    return out.str();
}

bool is_proper(const IntervalHypergraph& h)
{
    // Sorted by (l asc, r desc), a containment exists iff some interval ends
    // at or before the running maximum right endpoint of its predecessors.
    std::vector<Interval> sorted(h.intervals().begin(), h.intervals().end());
    std::sort(sorted.begin(), sorted.end(), [](const Interval& a, const Interval& b) {
        return a.l != b.l ? a.l < b.l : a.r > b.r;
    });
    Point max_r = 0;
    for (const auto& iv : sorted) {
        if (iv.r <= max_r)
            return false;
        max_r = iv.r;
    }
    return true;
}

std::vector<IntervalIndex> j_set(const IntervalHypergraph& h, Point b)
{
    if (b < 1 || b > h.num_points())
        throw std::out_of_range("point " + std::to_string(b) + " outside 1.." + std::to_string(h.num_points()));
    std::vector<IntervalIndex> out;
    for (IntervalIndex i = 0; i < h.num_intervals(); ++i)
        if (h.interval(i).l <= b)
            out.push_back(i);
    return out;
}

std::vector<std::vector<IntervalIndex>> nested_sets_at(const IntervalHypergraph& h, Point b)
{
    if (b < 1 || b > h.num_points())
        throw std::out_of_range("point " + std::to_string(b) + " outside 1.." + std::to_string(h.num_points()));
    // Group the intervals containing b by left endpoint, largest first.
    std::map<Point, std::vector<IntervalIndex>, std::greater<>> groups;
    for (IntervalIndex i = 0; i < h.num_intervals(); ++i)
        if (h.interval(i).contains(b))
            groups[h.interval(i).l].push_back(i);

    std::vector<std::vector<IntervalIndex>> out;
    out.emplace_back();
    std::vector<IntervalIndex> acc;
    for (const auto& [l, members] : groups) {
        acc.insert(acc.end(), members.begin(), members.end());
        auto set = acc;
        std::sort(set.begin(), set.end());
        out.push_back(std::move(set));
    }
    return out;
}

bool is_nested_at(const IntervalHypergraph& h, Point b, std::span<const IntervalIndex> set)
{
    std::vector<bool> in(h.num_intervals(), false);
    for (auto i : set) {
        if (i >= h.num_intervals() || !h.interval(i).contains(b))
            return false;
        in[i] = true;
    }
    for (auto i : set)
        for (IntervalIndex j = 0; j < h.num_intervals(); ++j)
            if (!in[j] && h.interval(j).contains(b) && h.interval(j).l > h.interval(i).l)
                return false;
    return true;
}

IntervalHypergraph discrete_hypergraph(int n)
{
    if (n < 1)
        throw std::invalid_argument("discrete hypergraph needs n >= 1");
    std::vector<Interval> all;
    all.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2);
    for (Point i = 1; i <= n; ++i)
        for (Point j = i; j <= n; ++j)
            all.push_back({i, j});
    return IntervalHypergraph(n, std::move(all));
}

IntervalHypergraph random_hypergraph(int n, std::size_t m, std::mt19937_64& rng)
{
    if (n < 1)
        throw std::invalid_argument("random hypergraph needs n >= 1");
    std::uniform_int_distribution<int> pick(0, n * (n + 1) / 2 - 1);
    std::vector<Interval> out;
    out.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        int code = pick(rng);
        Point l = 1;
        // Row l holds n-l+1 intervals.
        while (code >= n - l + 1) {
            code -= n - l + 1;
            ++l;
        }
        out.push_back({l, l + code});
    }
    return IntervalHypergraph(n, std::move(out));
}

bool verify_cf_colouring(const IntervalHypergraph& h, const CfColouring& c)
{
    if (static_cast<int>(c.colours.size()) != h.num_points())
        return false;
    std::map<int, int> count;
    for (const auto& iv : h.intervals()) {
        count.clear();
        for (Point p = iv.l; p <= iv.r; ++p)
            if (int col = c.colour(p); col > 0)
                ++count[col];
        bool unique = std::any_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 1; });
        if (!unique)
            return false;
    }
    return true;
}

bool is_exact_hitting_set(const IntervalHypergraph& h, std::span<const Point> points)
{
    for (const auto& iv : h.intervals()) {
        auto hits = std::count_if(points.begin(), points.end(), [&](Point p) { return iv.contains(p); });
        if (hits != 1)
            return false;
    }
    return true;
}

} // namespace cfc
