#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "tubings/builder.hpp"
#include "tubings/cache.hpp"
#include "tubings/graph.hpp"
#include "tubings/verify.hpp"

namespace {

using namespace tubings;

constexpr int kMaxEnumerationSize = 9;
constexpr int kMaxIdentitySize = 8;

struct CommonOpts {
    bool json = false;
    bool no_cache = false;
    bool force = false;
    bool list = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_list = false) {
    cmd->add_flag("--json", opts.json, "emit structured JSON instead of key:value text");
    cmd->add_flag("--no-cache", opts.no_cache, "bypass the census cache");
    cmd->add_flag("--force", opts.force, "override the desk-scale size guardrails");
    if (with_list) cmd->add_flag("--list", opts.list, "stream every tubing");
}

Poset load_poset(const std::string& build, const std::string& file) {
    if (build.empty() == file.empty())
        throw std::invalid_argument("provide exactly one of --build or --poset");
    if (!build.empty()) return build_poset(build);
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open poset file: " + file);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_poset(text.str());
}

void guard_enumeration(int size, bool force) {
    if (size <= kMaxEnumerationSize || force) return;
    throw std::invalid_argument(
        "refusing to enumerate " + std::to_string(size) +
        " elements (limit " + std::to_string(kMaxEnumerationSize) +
        "): the search considers up to 2^" + std::to_string(size) +
        " = " + std::to_string(1ll << size) +
        " candidate subsets and the tubing total grows super-exponentially; rerun with --force");
}

void guard_identity(int n, bool force) {
    if (n <= kMaxIdentitySize || force) return;
    Int cost = factorial(n);
    throw std::invalid_argument("refusing an identity sum over S_" + std::to_string(n) +
                                " (limit " + std::to_string(kMaxIdentitySize) + "): " +
                                cost.str() + " permutations; rerun with --force");
}

FaceCount cached_census(const std::string& description, bool no_cache,
                        const std::function<FaceCount()>& compute) {
    if (no_cache) return compute();
    CensusCache cache = CensusCache::from_environment();
    if (auto hit = cache.lookup(description)) return *hit;
    FaceCount census = compute();
    cache.store(description, census);
    return census;
}

std::string tubing_line(const std::vector<LabelSet>& tubes) {
    std::string out;
    for (std::size_t i = 0; i < tubes.size(); ++i) {
        if (i > 0) out += ',';
        out += to_string(tubes[i]);
    }
    return out;
}

nlohmann::json census_json(const FaceCount& census) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, c] : census.by_tube_count) j[std::to_string(k)] = c;
    return j;
}

int cmd_hvector(const std::string& build, const std::string& file, const CommonOpts& opts) {
    Poset p = load_poset(build, file);
    guard_enumeration(p.size(), opts.force);
    if (!p.connected()) throw std::invalid_argument("poset is not connected");

    FaceCount census = cached_census("poset\n" + write_poset(p), opts.no_cache,
                                     [&] { return tubing_census(p); });
    IntPoly f = f_polynomial(census, p.size() - 2);
    IntPoly h = f_to_h(f);
    IntPoly gamma = gamma_polynomial(h, p.size() - 2);

    if (opts.json) {
        nlohmann::json j;
        j["elements"] = p.size();
        j["census"] = census_json(census);
        j["f"] = to_string(f);
        j["h"] = to_string(h);
        j["gamma"] = to_string(gamma);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "elements: " << p.size() << "\n"
                  << to_string(census) << "f: " << to_string(f) << "\n"
                  << "h: " << to_string(h) << "\n"
                  << "gamma: " << to_string(gamma) << "\n";
    }
    if (opts.list)
        for_each_tubing(p, [&](const std::vector<ElementSet>& tubes) {
            std::cout << "tubing " << tubing_line(tubes) << "\n";
        });
    return 0;
}

void emit_graph_census(const DiGraph& g, const FaceCount& census, bool bottom_excluding,
                       const CommonOpts& opts) {
    if (opts.json) {
        nlohmann::json j;
        j["vertices"] = g.n;
        j["graph"] = to_string(g);
        j["census"] = census_json(census);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "graph: " << to_string(g) << "\n" << to_string(census);
    }
    if (opts.list)
        for_each_graph_tubing(g, [&](const std::vector<LabelSet>& tubes) {
            if (bottom_excluding && !is_bottom_excluding(g, tubes)) return;
            std::cout << "tubing " << tubing_line(tubes) << "\n";
        });
}

int cmd_enumerate(const std::string& spec, bool bottom_excluding, const CommonOpts& opts) {
    DiGraph g = build_graph(spec);
    guard_enumeration(g.n, opts.force);

    // bottom-excluding censuses live on path unions; for a union of cycles,
    // report one census per single-edge-deleted path union
    std::vector<DiGraph> hosts{g};
    if (bottom_excluding && is_cycle_union(g)) {
        std::vector<int> image(g.n);
        for (auto [u, v] : g.edges) image[u - 1] = v;
        hosts = path_deletions(Permutation(std::move(image)));
    }
    for (const DiGraph& host : hosts) {
        const std::string kind = bottom_excluding ? "graph-bottom-excluding" : "graph";
        FaceCount census = cached_census(kind + "\n" + to_string(host), opts.no_cache, [&] {
            return bottom_excluding ? bottom_excluding_census(host) : graph_tubing_census(host);
        });
        emit_graph_census(host, census, bottom_excluding, opts);
    }
    return 0;
}

int emit_report(const VerificationReport& r, bool json) {
    std::cout << (json ? render_json(r) + "\n" : render_text(r));
    return r.equal ? 0 : 1;
}

int cmd_verify_theorem(const std::string& build, const std::string& file,
                       const std::string& chain_csv, const CommonOpts& opts) {
    Poset p = load_poset(build, file);
    guard_enumeration(p.size(), opts.force);
    ElementSet block;
    std::istringstream in(chain_csv);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty()) block.insert(std::stoi(tok));
    if (block.empty()) throw std::invalid_argument("--chain needs at least one element");
    return emit_report(verify_h_substitution(p, block), opts.json);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tubing enumeration and polynomial identity checks for poset and graph associahedra"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string build, poset_file, graph_spec, chain_csv, which = "eq2", name;
    int n = 1, k = 0;
    bool bottom_excluding = false;

    auto* hvector = app.add_subcommand(
        "hvector", "tubing census and f-, h-, gamma-polynomials of a poset associahedron");
    hvector->add_option("--build", build, "poset builder expression, e.g. chain:4 or osum(antichain:1,antichain:3)");
    hvector->add_option("--poset", poset_file, "poset file (\"n <count>\" header, \"a < b\" lines)");
    add_common(hvector, opts, true);

    auto* enumerate = app.add_subcommand("enumerate", "tubing census of a graph");
    enumerate->add_option("--graph", graph_spec, "graph spec: cycle:k, path:k, perm-cycles:w, union:a+b")
        ->required();
    enumerate->add_flag("--bottom-excluding", bottom_excluding,
                        "count only bottom-excluding tubings (path unions)");
    add_common(enumerate, opts, true);

    auto* theorem = app.add_subcommand(
        "verify-theorem", "h-substitution identity for an autonomous chain in a poset");
    theorem->add_option("--build", build, "poset builder expression");
    theorem->add_option("--poset", poset_file, "poset file");
    theorem->add_option("--chain", chain_csv, "comma-separated chain elements, e.g. 2,3")->required();
    add_common(theorem, opts);

    auto* prop = app.add_subcommand("verify-prop", "cycle-type identity eq2 or eq3 at a given n");
    prop->add_option("--n", n, "symmetric-group size")->required();
    prop->add_option("--which", which, "eq2 or eq3")->check(CLI::IsMember({"eq2", "eq3"}));
    add_common(prop, opts);

    auto* corollary = app.add_subcommand("verify-corollary",
                                         "named corollary identity (5.1 ... 5.7, final-prop)");
    corollary->add_option("--name", name, "identity name")
        ->required()
        ->check(CLI::IsMember(tubings::corollary_names()));
    corollary->add_option("--n", n, "first parameter")->required();
    corollary->add_option("--k", k, "second parameter (where used)");
    add_common(corollary, opts);

    auto* selftest = app.add_subcommand("selftest", "run the full verification suite");
    (void)selftest;

    CLI11_PARSE(app, argc, argv);

    try {
        if (hvector->parsed()) return cmd_hvector(build, poset_file, opts);
        if (enumerate->parsed()) return cmd_enumerate(graph_spec, bottom_excluding, opts);
        if (theorem->parsed()) return cmd_verify_theorem(build, poset_file, chain_csv, opts);
        if (prop->parsed()) {
            guard_identity(n, opts.force);
            return emit_report(tubings::verify_eq(n, which), opts.json);
        }
        if (corollary->parsed()) {
            guard_identity(n + k, opts.force);
            return emit_report(tubings::verify_corollary(name, n, k), opts.json);
        }
        if (selftest->parsed()) return tubings::selftest::run_all(std::cout) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
