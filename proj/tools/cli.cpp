#include "cli.hpp"

#include "cfc/cf_dp.hpp"
#include "cfc/cooccurrence.hpp"
#include "cfc/ehs.hpp"
#include "cfc/graphs.hpp"
#include "cfc/hypergraph.hpp"
#include "cfc/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cfc::cli {

namespace {

using nlohmann::json;

// Raised when a certificate fails its own re-check before printing.
class SelfCheckFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file)
        throw InputError("cannot open '" + path + "'");
    buf << file.rdbuf();
    return buf.str();
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw SelfCheckFailed(what);
}

std::string join(const std::vector<int>& xs)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << (i ? " " : "") << xs[i];
    return out.str();
}

json intervals_json(const IntervalHypergraph& h)
{
    json ivs = json::array();
    for (const auto& iv : h.intervals())
        ivs.push_back({iv.l, iv.r});
    return ivs;
}

struct Options {
    bool json = false;
    std::string file;
    std::string second_file;
    int colours = 1;
    std::string oracle_name;
    std::string gen_kind;
    int gen_n = 0;
    int gen_m = 0;
    std::uint64_t seed = 1;
};

int cmd_solve(const Options& o, std::istream& in, std::ostream& out)
{
    auto h = parse_hypergraph(read_source(o.file, in));
    auto r = min_cfc(h);
    require(verify_cf_colouring(h, r.colouring), "colouring is not conflict-free");
    require(r.colouring.num_colours() == r.k, "colouring uses a different number of colours");
    if (o.json)
        out << json{{"k", r.k}, {"colouring", r.colouring.colours}}.dump() << '\n';
    else
        out << "k=" << r.k << '\n' << serialize(r.colouring);
    return ok;
}

int cmd_isehs(const Options& o, std::istream& in, std::ostream& out)
{
    auto h = parse_hypergraph(read_source(o.file, in));
    auto r = is_ehs(h);
    if (r.exactly_hittable)
        require(is_exact_hitting_set(h, *r.hitting_set), "hitting set is not exact");
    if (o.json) {
        json j{{"exactly_hittable", r.exactly_hittable}, {"hitting_set", nullptr}};
        if (r.hitting_set)
            j["hitting_set"] = *r.hitting_set;
        out << j.dump() << '\n';
    } else {
        out << (r.exactly_hittable ? join(*r.hitting_set) : "none") << '\n';
    }
    return r.exactly_hittable ? ok : verdict_false;
}

void check_canonical(const SimpleGraph& g, const CanonicalRepresentation& c)
{
    for (Vertex u = 1; u <= g.num_vertices(); ++u)
        for (Vertex v = u + 1; v <= g.num_vertices(); ++v) {
            auto iu = c.vertex_interval[static_cast<std::size_t>(u - 1)];
            auto iv = c.vertex_interval[static_cast<std::size_t>(v - 1)];
            bool meet = iu == iv || c.hypergraph.interval(iu).intersects(c.hypergraph.interval(iv));
            require(meet == g.adjacent(u, v), "canonical model disagrees with the graph");
        }
}

json canonical_json(const CanonicalRepresentation& c)
{
    json gadgets = json::array();
    for (auto [a, b] : c.gadgets)
        gadgets.push_back({a, b});
    return json{{"n", c.hypergraph.num_points()},
                {"intervals", intervals_json(c.hypergraph)},
                {"vertex_interval", c.vertex_interval},
                {"anchors", c.anchors},
                {"gadgets", gadgets}};
}

int cmd_ehig(const Options& o, std::istream& in, std::ostream& out)
{
    auto g = parse_graph(read_source(o.file, in));
    auto r = is_ehig(g);
    check_canonical(g, r.canonical);
    if (r.exactly_hittable) {
        require(is_exact_hitting_set(r.canonical.hypergraph, r.hitting_set), "hitting set is not exact");
        if (o.json)
            out << json{{"exactly_hittable", true}, {"canonical", canonical_json(r.canonical)},
                        {"hitting_set", r.hitting_set}}
                       .dump()
                << '\n';
        else
            out << format_canonical(r.canonical) << "hitting " << join(r.hitting_set) << '\n';
        return ok;
    }
    require(r.witness && is_valid_witness(g, *r.witness), "forbidden pattern witness is invalid");
    if (o.json)
        out << json{{"exactly_hittable", false},
                    {"witness", {{"path", r.witness->path}, {"independents", r.witness->independents}}}}
                   .dump()
            << '\n';
    else
        out << "P: " << join(r.witness->path) << '\n' << "X: " << join(r.witness->independents) << '\n';
    return verdict_false;
}

int cmd_maxcfc(const Options& o, std::istream& in, std::ostream& out)
{
    if (o.colours < 1)
        throw InputError("--colors must be at least 1");
    auto h = parse_hypergraph(read_source(o.file, in));
    auto r = max_cfc(h, o.colours);
    require(is_valid_for(h, r.witness), "representative outside its interval");
    require(static_cast<int>(r.witness.num_assigned()) == r.count, "witness size differs from count");
    require(clique_number(build_cooccurrence(h, r.witness), h).size <= o.colours, "witness exceeds clique bound");
    std::vector<int> reps;
    json jreps = json::array();
    for (IntervalIndex i = 0; i < h.num_intervals(); ++i) {
        auto p = r.witness.at(i);
        reps.push_back(p.value_or(0));
        jreps.push_back(p ? json(*p) : json(nullptr));
    }
    if (o.json)
        out << json{{"colors", o.colours}, {"count", r.count}, {"representatives", jreps}}.dump() << '\n';
    else
        out << "count=" << r.count << '\n' << join(reps) << '\n';
    return ok;
}

int cmd_partition(const Options& o, std::istream& in, std::ostream& out)
{
    auto h = parse_hypergraph(read_source(o.file, in));
    auto c = parse_colouring(read_source(o.second_file, in), h.num_points());
    if (!verify_cf_colouring(h, c))
        throw InputError("colouring is not conflict-free for this hypergraph");
    auto p = colouring_to_partition(h, c);
    require(is_valid_partition(h, p), "partition is not exactly hittable");
    if (o.json) {
        json parts = json::array();
        for (const auto& part : p.parts)
            parts.push_back({{"intervals", part.intervals}, {"hitting", part.hitting}});
        out << json{{"parts", parts}}.dump() << '\n';
    } else {
        out << format_partition(p);
    }
    return ok;
}

int cmd_canonical(const Options& o, std::istream& in, std::ostream& out)
{
    auto g = parse_graph(read_source(o.file, in));
    auto c = build_canonical(g);
    check_canonical(g, c);
    if (o.json)
        out << canonical_json(c).dump() << '\n';
    else
        out << format_canonical(c);
    return ok;
}

int cmd_oracle(const Options& o, std::istream& in, std::ostream& out)
{
    auto h = parse_hypergraph(read_source(o.file, in));
    json value;
    std::string text;
    if (o.oracle_name == "cfc-number") {
        int v = oracle::brute_cfc_number(h);
        value = v;
        text = std::to_string(v);
    } else if (o.oracle_name == "exact-hitting-set") {
        auto s = oracle::brute_exact_hitting_set(h);
        if (s)
            require(is_exact_hitting_set(h, *s), "hitting set is not exact");
        value = s ? json(*s) : json(nullptr);
        text = s ? join(*s) : "none";
    } else if (o.oracle_name == "max-cfc") {
        if (o.colours < 1)
            throw InputError("--colors must be at least 1");
        int v = oracle::brute_max_cfc(h, o.colours);
        value = v;
        text = std::to_string(v);
    } else if (o.oracle_name == "min-over-cooccurrence") {
        int v = oracle::brute_min_over_cooccurrence(h);
        value = v;
        text = std::to_string(v);
    } else if (o.oracle_name == "min-eh-partition") {
        int v = oracle::brute_min_eh_partition(h);
        value = v;
        text = std::to_string(v);
    } else {
        throw InputError("unknown oracle '" + o.oracle_name + "'");
    }
    if (o.json)
        out << json{{"oracle", o.oracle_name}, {"value", value}}.dump() << '\n';
    else
        out << text << '\n';
    return ok;
}

int cmd_gen(const Options& o, std::ostream& out)
{
    IntervalHypergraph h;
    if (o.gen_kind == "discrete") {
        if (o.gen_n < 1)
            throw InputError("--n must be at least 1");
        h = discrete_hypergraph(o.gen_n);
    } else if (o.gen_kind == "random") {
        if (o.gen_n < 1 || o.gen_m < 0)
            throw InputError("need --n >= 1 and --m >= 0");
        std::mt19937_64 rng(o.seed);
        h = random_hypergraph(o.gen_n, static_cast<std::size_t>(o.gen_m), rng);
    } else {
        throw InputError("unknown generator '" + o.gen_kind + "'");
    }
    if (o.json)
        out << json{{"n", h.num_points()}, {"intervals", intervals_json(h)}}.dump() << '\n';
    else
        out << serialize(h);
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Conflict-free colouring of interval hypergraphs"};
    app.name("cfc");
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Machine-readable output");

    auto* solve = app.add_subcommand("solve", "Optimal conflict-free colouring");
    solve->add_option("file", o.file, "Hypergraph file ('-' for stdin)")->required();

    auto* isehs = app.add_subcommand("isehs", "Exact hitting set or exit 1");
    isehs->add_option("file", o.file, "Hypergraph file")->required();

    auto* ehig = app.add_subcommand("ehig", "Exactly hittable interval graph test");
    ehig->add_option("file", o.file, "Graph file")->required();

    auto* maxcfc = app.add_subcommand("maxcfc", "Most intervals conflict-free with N colours");
    maxcfc->add_option("file", o.file, "Hypergraph file")->required();
    maxcfc->add_option("--colors", o.colours, "Number of colours N")->required();

    auto* partition = app.add_subcommand("partition", "Colouring to exactly hittable partition");
    partition->add_option("hypergraph", o.file, "Hypergraph file")->required();
    partition->add_option("colouring", o.second_file, "Colouring file")->required();

    auto* canonical = app.add_subcommand("canonical", "Canonical interval model of an interval graph");
    canonical->add_option("file", o.file, "Graph file")->required();

    auto* orc = app.add_subcommand("oracle", "Brute-force reference values");
    orc->add_option("name", o.oracle_name,
                    "cfc-number | exact-hitting-set | max-cfc | min-over-cooccurrence | min-eh-partition")
        ->required();
    orc->add_option("file", o.file, "Hypergraph file")->required();
    orc->add_option("--colors", o.colours, "Number of colours for max-cfc");

    auto* gen = app.add_subcommand("gen", "Generate instances");
    gen->add_option("kind", o.gen_kind, "discrete | random")->required();
    gen->add_option("--n", o.gen_n, "Number of points")->required();
    gen->add_option("--m", o.gen_m, "Number of intervals (random)");
    gen->add_option("--seed", o.seed, "Random seed")->default_val(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    try {
        if (solve->parsed())
            return cmd_solve(o, in, out);
        if (isehs->parsed())
            return cmd_isehs(o, in, out);
        if (ehig->parsed())
            return cmd_ehig(o, in, out);
        if (maxcfc->parsed())
            return cmd_maxcfc(o, in, out);
        if (partition->parsed())
            return cmd_partition(o, in, out);
        if (canonical->parsed())
            return cmd_canonical(o, in, out);
        if (orc->parsed())
            return cmd_oracle(o, in, out);
        return cmd_gen(o, out);
    } catch (const SelfCheckFailed& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    } catch (const oracle::ScaleExceeded& e) {
        err << e.what() << '\n';
        return scale_exceeded;
    } catch (const NotIntervalGraph& e) {
        err << "not an interval graph: " << e.what() << '\n';
        return input_error;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return input_error;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal_error;
    }
}

} // namespace cfc::cli
