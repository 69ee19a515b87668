#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

#include "drg/analysis.hpp"
#include "drg/catalog.hpp"
#include "drg/cayley.hpp"
#include "drg/cayleyness.hpp"
#include "drg/designs.hpp"
#include "drg/error.hpp"
#include "drg/graph.hpp"
#include "drg/groups.hpp"
#include "drg/parallel.hpp"

using json = nlohmann::ordered_json;
using namespace drg;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

struct Globals {
    std::string format = "text";
    double budget = kDefaultSearchBudget;
    std::size_t threads = 0;
    std::string data;
};

struct GraphSource {
    std::string name, file, graph6, recipe;
};

const CLI::Validator kCatalogId(
    [](std::string& id) {
        const auto ids = catalog_ids();
        return std::find(ids.begin(), ids.end(), id) != ids.end()
                   ? std::string()
                   : "unknown catalog graph '" + id + "' (see `build --list`)";
    },
    "ID");

void add_graph_source(CLI::App* sub, GraphSource& src) {
    auto* group = sub->add_option_group("graph", "graph to operate on");
    group->add_option("--name", src.name, "catalog graph id (see `census` or `build --list`)")->check(kCatalogId);
    group->add_option("--file", src.file, "graph6 or edge-list file");
    group->add_option("--graph6", src.graph6, "graph6 string");
    group->add_option("--recipe", src.recipe,
                      "family:params, e.g. kneser:5:2, hamming:3:2, crown:4, paley:13, diffset:13:4:1, ag:4, gq:3");
    group->require_option(1);
}

std::vector<std::size_t> recipe_params(const std::vector<std::string>& parts, std::size_t count) {
    if (parts.size() != count + 1) throw CLI::ValidationError("recipe", "'" + parts[0] + "' takes " + std::to_string(count) + " parameter(s)");
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < parts.size(); ++i) out.push_back(std::stoul(parts[i]));
    return out;
}

Graph graph_from_recipe(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.empty()) throw CLI::ValidationError("recipe", "empty recipe");
    const std::string& f = parts[0];
    if (f == "complete") return complete_graph(recipe_params(parts, 1)[0]);
    if (f == "cycle") return cycle_graph(recipe_params(parts, 1)[0]);
    if (f == "crown") return crown_graph(recipe_params(parts, 1)[0]);
    if (f == "multipartite") {
        auto p = recipe_params(parts, 2);
        return complete_multipartite(p[0], p[1]);
    }
    if (f == "hamming") {
        auto p = recipe_params(parts, 2);
        return hamming_graph(p[0], p[1]);
    }
    if (f == "kneser") {
        auto p = recipe_params(parts, 2);
        return kneser_graph(p[0], p[1]);
    }
    if (f == "odd") return odd_graph(recipe_params(parts, 1)[0]);
    if (f == "doubled-odd") return bipartite_double(odd_graph(recipe_params(parts, 1)[0]));
    if (f == "folded-cube") return antipodal_quotient(hamming_graph(recipe_params(parts, 1)[0], 2));
    if (f == "paley") return paley_graph(unsigned(recipe_params(parts, 1)[0]));
    if (f == "ag") return affine_plane_minus_pc_graph(unsigned(recipe_params(parts, 1)[0]));
    if (f == "gq") return symplectic_gq_incidence(unsigned(recipe_params(parts, 1)[0]));
    if (f == "diffset") {
        auto p = recipe_params(parts, 3);
        const auto d = find_difference_set(cyclic_group(p[0]), p[1], p[2]);
        if (!d) throw Error("no difference set with these parameters in Z_" + std::to_string(p[0]));
        return incidence_graph_of_development(*d);
    }
    throw CLI::ValidationError("recipe", "unknown family '" + f + "'");
}

Graph load_graph(const GraphSource& src, const Globals& g) {
    if (!src.name.empty()) return build_catalog_graph(src.name, g.data).graph;
    if (!src.file.empty()) return read_graph_file(src.file);
    if (!src.graph6.empty()) return from_graph6(src.graph6);
    return graph_from_recipe(src.recipe);
}

json header(const std::string& verb) { return json{{"schema", 1}, {"verb", verb}}; }

std::string girth_str(std::size_t g) { return g == kInfiniteGirth ? "inf" : std::to_string(g); }
json girth_json(std::size_t g) { return g == kInfiniteGirth ? json(nullptr) : json(g); }

void emit_graph(const Graph& g, const Globals& gl, const std::string& verb) {
    if (gl.format == "json") {
        json j = header(verb);
        j["n"] = g.order();
        j["graph6"] = to_graph6(g);
        json edges = json::array();
        for (auto [u, v] : g.edges()) edges.push_back({u, v});
        j["edges"] = edges;
        if (!g.labels().empty()) j["labels"] = g.labels();
        std::cout << j.dump(2) << '\n';
    } else if (gl.format == "tsv") {
        for (auto [u, v] : g.edges()) std::cout << u << '\t' << v << '\n';
    } else {
        std::cout << to_graph6(g) << '\n';
    }
}

int cmd_build(const GraphSource& src, bool list, const Globals& gl) {
    if (list) {
        for (const auto& id : catalog_ids()) std::cout << id << '\n';
        return kOk;
    }
    emit_graph(load_graph(src, gl), gl, "build");
    return kOk;
}

int cmd_metrics(const GraphSource& src, const Globals& gl) {
    const Graph g = load_graph(src, gl);
    const GraphMetrics m = graph_metrics(g);
    std::vector<std::size_t> degrees;
    for (Vertex v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
    const bool regular = !degrees.empty() && std::all_of(degrees.begin(), degrees.end(), [&](auto d) { return d == degrees[0]; });
    if (gl.format == "json") {
        json j = header("metrics");
        j["n"] = g.order();
        j["edges"] = g.edge_count();
        j["regular"] = regular;
        j["valency"] = regular ? json(degrees[0]) : json(nullptr);
        j["connected"] = m.connected;
        j["bipartite"] = m.bipartite;
        j["diameter"] = m.diameter;
        j["girth"] = girth_json(m.girth);
        j["odd_girth"] = girth_json(m.odd_girth);
        j["even_girth"] = girth_json(m.even_girth);
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    const char* sep = gl.format == "tsv" ? "\t" : ": ";
    std::cout << "n" << sep << g.order() << '\n'
              << "edges" << sep << g.edge_count() << '\n'
              << "valency" << sep << (regular ? std::to_string(degrees[0]) : "irregular") << '\n'
              << "connected" << sep << (m.connected ? "yes" : "no") << '\n'
              << "bipartite" << sep << (m.bipartite ? "yes" : "no") << '\n'
              << "diameter" << sep << m.diameter << '\n'
              << "girth" << sep << girth_str(m.girth) << '\n'
              << "odd_girth" << sep << girth_str(m.odd_girth) << '\n'
              << "even_girth" << sep << girth_str(m.even_girth) << '\n';
    return kOk;
}

int cmd_drg_check(const GraphSource& src, const std::string& expect, const Globals& gl) {
    const Graph g = load_graph(src, gl);
    if (!is_connected(g)) {
        std::cout << "not distance-regular: graph is disconnected\n";
        return kFail;
    }
    const DrgCheck c = check_distance_regular(g);
    bool ok = c.distance_regular();
    std::optional<IntersectionArray> want;
    if (!expect.empty()) {
        want = IntersectionArray::parse(expect);
        ok = ok && *c.array == *want;
    }
    if (gl.format == "json") {
        json j = header("drg-check");
        j["distance_regular"] = c.distance_regular();
        if (c.array) {
            j["array"] = c.array->str();
            j["b"] = c.array->b;
            j["c"] = c.array->c;
        } else {
            j["witness"] = c.witness->describe();
        }
        if (want) j["expected"] = want->str();
        j["ok"] = ok;
        std::cout << j.dump(2) << '\n';
    } else if (c.array) {
        std::cout << c.array->str() << '\n';
        if (want && !(*c.array == *want)) std::cout << "mismatch: expected " << want->str() << '\n';
    } else {
        std::cout << "not distance-regular: " << c.witness->describe() << '\n';
    }
    return ok ? kOk : kFail;
}

int cmd_spectrum(const GraphSource& src, const std::string& array_text, const Globals& gl) {
    std::optional<IntersectionArray> array;
    std::optional<Spectrum> numeric;
    if (!array_text.empty()) {
        array = IntersectionArray::parse(array_text);
        validate(*array);
    } else {
        const Graph g = load_graph(src, gl);
        numeric = spectrum_numeric(g);
        if (is_connected(g)) array = check_distance_regular(g).array;
    }
    std::vector<ArrayEigenvalue> from_array;
    if (array) from_array = spectrum_of_array(*array);
    bool agree = true;
    if (array && numeric) {
        agree = from_array.size() == numeric->size();
        for (std::size_t i = 0; agree && i < from_array.size(); ++i)
            agree = std::abs(from_array[i].value - (*numeric)[i].value) < 1e-6 &&
                    std::abs(from_array[i].multiplicity - double((*numeric)[i].multiplicity)) < 1e-6;
    }
    if (gl.format == "json") {
        json j = header("spectrum");
        if (array) {
            j["array"] = array->str();
            json a = json::array();
            for (const auto& e : from_array)
                a.push_back({{"value", format_eigenvalue(e.value)}, {"rational", e.rational}, {"multiplicity", e.multiplicity}});
            j["array_spectrum"] = a;
        }
        if (numeric) {
            json a = json::array();
            for (const auto& e : *numeric)
                a.push_back({{"value", format_eigenvalue(e.value)}, {"integral", e.integral}, {"multiplicity", e.multiplicity}});
            j["numeric_spectrum"] = a;
        }
        j["agree"] = agree;
        std::cout << j.dump(2) << '\n';
    } else {
        const char* sep = gl.format == "tsv" ? "\t" : "  ";
        if (numeric)
            for (const auto& e : *numeric) std::cout << format_eigenvalue(e.value) << sep << e.multiplicity << '\n';
        else
            for (const auto& e : from_array)
                std::cout << format_eigenvalue(e.value) << sep << format_eigenvalue(e.multiplicity) << '\n';
        if (array && numeric && !agree) std::cout << "mismatch with the spectrum of " << array->str() << '\n';
    }
    return agree ? kOk : kFail;
}

int cmd_derive(const GraphSource& src, const std::string& kind, std::size_t param, const Globals& gl) {
    static const std::map<std::string, DerivedKind> kinds = {
        {"complement", DerivedKind::complement},
        {"line", DerivedKind::line_graph},
        {"bipartite-double", DerivedKind::bipartite_double},
        {"distance", DerivedKind::distance_i},
        {"halved", DerivedKind::halved},
        {"antipodal-quotient", DerivedKind::antipodal_quotient},
    };
    const auto it = kinds.find(kind);
    if (it == kinds.end()) throw CLI::ValidationError("kind", "unknown derived graph '" + kind + "'");
    emit_graph(derived_graph(load_graph(src, gl), it->second, param), gl, "derive");
    return kOk;
}

std::vector<Element> parse_elements(const Group& g, const std::string& text) {
    std::vector<Element> out;
    int depth = 0;
    std::string cur;
    auto flush = [&] {
        std::string t;
        for (char ch : cur)
            if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
        if (!t.empty()) out.push_back(g.parse_element(t));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) flush();
        else cur += ch;
    }
    flush();
    return out;
}

std::string element_list(const Group& g, const std::vector<Element>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + g.label(xs[i]);
    return s + "}";
}

json element_json(const Group& g, const std::vector<Element>& xs) {
    json a = json::array();
    for (Element x : xs) a.push_back(g.label(x));
    return a;
}

int cmd_cayley(const std::string& group_spec, const std::string& set, const std::string& array_text, std::size_t max_results,
               const Globals& gl) {
    const Group group = parse_group_spec(group_spec);
    if (!array_text.empty()) {
        SearchLimits lim;
        lim.budget_seconds = gl.budget;
        lim.max_results = max_results;
        const auto target = IntersectionArray::parse(array_text);
        std::vector<ConnectionSet> found;
        try {
            found = connection_set_search(group, target, lim);
        } catch (const BudgetExceeded& e) {
            std::cout << "unknown: " << e.what() << '\n';
            return kUnknown;
        }
        if (gl.format == "json") {
            json j = header("cayley");
            j["group"] = group.name();
            j["array"] = target.str();
            json sets = json::array();
            for (const auto& s : found) sets.push_back(element_json(group, s.elements()));
            j["connection_sets"] = sets;
            std::cout << j.dump(2) << '\n';
        } else {
            for (const auto& s : found) std::cout << s.str() << '\n';
            std::cout << found.size() << " connection set(s)\n";
        }
        return found.empty() ? kFail : kOk;
    }
    if (set.empty()) throw CLI::ValidationError("cayley", "give --set or --array");
    const ConnectionSet s(group, parse_elements(group, set));
    const Graph g = cayley_graph(s);
    if (gl.format == "json") {
        json j = header("cayley");
        j["group"] = group.name();
        j["connection_set"] = element_json(group, s.elements());
        j["n"] = g.order();
        j["graph6"] = to_graph6(g);
        j["connected"] = is_connected(g);
        if (is_connected(g)) {
            const auto c = check_distance_regular(g);
            j["array"] = c.array ? json(c.array->str()) : json(nullptr);
        }
        std::cout << j.dump(2) << '\n';
    } else {
        emit_graph(g, gl, "cayley");
    }
    return kOk;
}

int cmd_distance_sets(const std::string& group_spec, const std::string& set, const Globals& gl) {
    const Group group = parse_group_spec(group_spec);
    const ConnectionSet s(group, parse_elements(group, set));
    const DistanceSets d = distance_sets(s);
    if (gl.format == "json") {
        json j = header("distance-sets");
        j["group"] = group.name();
        json sets = json::array();
        for (const auto& si : d.sets) sets.push_back(element_json(group, si));
        j["sets"] = sets;
        j["antipodal"] = element_json(group, d.antipodal);
        j["antipodal_is_subgroup"] = d.antipodal_is_subgroup;
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    const char* sep = gl.format == "tsv" ? "\t" : ": ";
    for (std::size_t i = 0; i < d.sets.size(); ++i)
        std::cout << "S_" << i << sep << element_list(group, d.sets[i]) << '\n';
    std::cout << "N_d" << sep << element_list(group, d.antipodal) << (d.antipodal_is_subgroup ? " (subgroup)" : "") << '\n';
    return kOk;
}

int cmd_quotient(const std::string& group_spec, const std::string& set, const std::string& subgroup, const Globals& gl) {
    const Group group = parse_group_spec(group_spec);
    const ConnectionSet s(group, parse_elements(group, set));
    const auto gens = parse_elements(group, subgroup);
    const SubgroupHandle h = subgroup_closure(group, gens);
    const QuotientMatrix q = coset_quotient(s, h);
    if (gl.format == "json") {
        json j = header("quotient");
        j["subgroup"] = element_json(group, h.elements());
        j["matrix"] = q.entries;
        json ev = json::array();
        for (double v : q.eigenvalues) ev.push_back(format_eigenvalue(v));
        j["eigenvalues"] = ev;
        j["eigenvalues_in_spectrum"] = q.eigenvalues_in_spectrum;
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto& row : q.entries) {
            for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? (gl.format == "tsv" ? "\t" : " ") : "") << row[i];
            std::cout << '\n';
        }
        std::cout << "eigenvalues:";
        for (double v : q.eigenvalues) std::cout << ' ' << format_eigenvalue(v);
        std::cout << (q.eigenvalues_in_spectrum ? " (all in the graph spectrum)" : " (NOT all in the graph spectrum)") << '\n';
    }
    return q.eigenvalues_in_spectrum ? kOk : kFail;
}

int cmd_is_cayley(const GraphSource& src, const std::string& expect, bool abelian, bool quick, const Globals& gl) {
    const Graph g = load_graph(src, gl);
    CayleyOptions o;
    o.search_budget = gl.budget;
    o.aut_budget = gl.budget;
    o.exhaustive = !quick;
    if (abelian) o.accept_group = [](const Group& grp) { return grp.is_abelian(); };
    const CayleyVerdict v = is_cayley(g, o);
    std::string certs;
    for (const auto& c : v.certificates) certs += (certs.empty() ? "" : ", ") + c;
    if (gl.format == "json") {
        json j = header("is-cayley");
        j["verdict"] = verdict_name(v.verdict);
        j["certificates"] = v.certificates;
        j["aut_order"] = v.aut_order.str();
        j["search_nodes"] = v.search_nodes;
        if (v.group) {
            j["group_order"] = v.group->order();
            j["group_abelian"] = v.group->is_abelian();
            j["connection_set"] = element_json(*v.group, v.connection_set->elements());
        }
        if (!v.detail.empty()) j["detail"] = v.detail;
        if (!expect.empty()) j["expected"] = expect;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << verdict_name(v.verdict);
        if (!certs.empty()) std::cout << " (" << certs << ")";
        std::cout << '\n';
        if (v.group)
            std::cout << "group: order " << v.group->order() << (v.group->is_abelian() ? ", abelian" : ", non-abelian")
                      << "\nconnection set (vertices adjacent to the identity): "
                      << element_list(*v.group, v.connection_set->elements()) << '\n';
        if (!v.detail.empty()) std::cout << v.detail << '\n';
    }
    if (v.verdict == Verdict::unknown) return kUnknown;
    if (!expect.empty()) return expect == verdict_name(v.verdict) ? kOk : kFail;
    return v.verdict == Verdict::yes ? kOk : kFail;
}

int cmd_feasibility(const std::string& kind, const std::string& value, const Globals& gl) {
    FeasibilityVerdict f{true, ""};
    if (kind == "gq" || kind == "gh") {
        const std::int64_t s = std::stoll(value);
        if (s < 1) throw CLI::ValidationError("s", "s must be positive");
        f = kind == "gq" ? gq_cayley_feasible(s) : gh_cayley_feasible(s);
    } else if (kind == "halving") {
        const auto a = IntersectionArray::parse(value);
        validate(a);
        const auto h = halving_obstruction(a);
        f = {!h.obstructed, h.reason};
    } else {
        throw CLI::ValidationError("kind", "feasibility kind must be gq, gh or halving");
    }
    if (gl.format == "json") {
        json j = header("feasibility");
        j["kind"] = kind;
        j["input"] = value;
        j["feasible"] = f.feasible;
        j["reason"] = f.reason;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << (f.feasible ? "feasible" : "infeasible: " + f.reason) << '\n';
    }
    return f.feasible ? kOk : kFail;
}

int cmd_diffset(const std::string& group_spec, std::size_t k, std::size_t lambda, const std::string& verify,
                const Globals& gl) {
    const Group group = parse_group_spec(group_spec);
    std::optional<DifferenceSet> d;
    if (!verify.empty()) {
        const auto elems = parse_elements(group, verify);
        const auto c = verify_difference_set(group, elems);
        if (!c.params) {
            std::cout << "not a difference set: element " << group.label(*c.witness) << " occurs " << c.found
                      << " times, expected " << c.expected << '\n';
            return kFail;
        }
        d = DifferenceSet{group, elems, *c.params};
    } else {
        d = find_difference_set(group, k, lambda);
    }
    if (!d) {
        std::cout << "none: no (" << group.order() << "," << k << "," << lambda << ") difference set in " << group.name() << '\n';
        return kFail;
    }
    std::optional<IntersectionArray> array;
    if (group.is_abelian()) {
        const Graph ig = incidence_graph_of_development(*d);
        if (is_connected(ig)) array = check_distance_regular(ig).array;
    }
    if (gl.format == "json") {
        json j = header("diffset");
        j["group"] = group.name();
        j["elements"] = element_json(group, d->elements);
        j["params"] = {d->params.n, d->params.k, d->params.lambda};
        j["incidence_graph_array"] = array ? json(array->str()) : json(nullptr);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << element_list(group, d->elements) << "  (" << d->params.n << "," << d->params.k << ","
                  << d->params.lambda << ")\n";
        if (array) std::cout << "incidence graph: " << array->str() << '\n';
    }
    return kOk;
}

int cmd_census(const std::string& table_text, const Globals& gl) {
    int table = 0;
    if (table_text != "all") {
        if (table_text.size() != 1 || table_text[0] < '1' || table_text[0] > '4')
            throw CLI::ValidationError("--table", "must be 1, 2, 3, 4 or all");
        table = table_text[0] - '0';
    }
    CensusOptions o;
    o.data_dir = gl.data;
    o.budget_seconds = gl.budget;
    const auto rows = census(table, o);
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.ok();
    if (gl.format == "json") {
        json j = header("census");
        j["table"] = table_text;
        json a = json::array();
        for (const auto& r : rows) {
            json graphs = json::array();
            for (const auto& g : r.graphs)
                graphs.push_back({{"id", g.id},
                                  {"n", g.n},
                                  {"d", g.d},
                                  {"g", girth_json(g.g)},
                                  {"array", g.array ? json(g.array->str()) : json(nullptr)},
                                  {"computed", verdict_name(g.computed)},
                                  {"certificates", g.certificates},
                                  {"group", g.group}});
            a.push_back({{"table", r.row->table},
                         {"name", r.row->name},
                         {"array", r.row->array.str()},
                         {"n", r.row->n},
                         {"d", r.row->d},
                         {"g", r.row->g},
                         {"expected", expected_name(r.row->cayley)},
                         {"computed", verdict_name(r.computed)},
                         {"status", r.status},
                         {"reference", r.row->reference},
                         {"detail", r.detail},
                         {"failures", r.failures},
                         {"graphs", graphs}});
        }
        j["rows"] = a;
        j["ok"] = ok;
        std::cout << j.dump(2) << '\n';
    } else if (gl.format == "tsv") {
        std::cout << census_tsv(rows);
    } else {
        std::cout << census_markdown(rows);
        for (const auto& r : rows)
            for (const auto& f : r.failures) std::cout << "FAIL " << r.row->name << ": " << f << '\n';
    }
    return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance-regular graphs of small valency and their Cayley structure.\n"
                 "Exit codes: 0 all checks pass (for is-cayley: verdict yes, or the verdict given by --expect);\n"
                 "1 a check failed or the verdict is no; 2 usage error; 3 budget exceeded (verdict unknown)."};
    app.require_subcommand(1);
    app.fallthrough();
    Globals gl;
    app.add_option("--format", gl.format, "output format")
        ->check(CLI::IsMember({"text", "graph6", "tsv", "md", "json"}));
    app.add_option("--budget", gl.budget, "time budget in seconds for searches (<= 0: unlimited)");
    app.add_option("--threads", gl.threads, "worker threads (default: available cores)");
    app.add_option("--data", gl.data, "asset directory (default: $DRG_DATA, then ./data)");
    std::string seed_order = "canonical";
    app.add_option("--seed-order", seed_order, "search ordering")->check(CLI::IsMember({"canonical"}));

    GraphSource src;
    int code = kOk;
    std::function<int()> run;

    auto* build = app.add_subcommand("build", "construct a graph");
    bool list = false;
    build->add_flag("--list", list, "list catalog graph ids");
    {
        auto* group = build->add_option_group("graph");
        group->add_option("--name", src.name, "catalog graph id")->check(kCatalogId);
        group->add_option("--file", src.file, "graph6 or edge-list file");
        group->add_option("--graph6", src.graph6, "graph6 string");
        group->add_option("--recipe", src.recipe, "family:params");
        group->require_option(0, 1);
    }
    build->callback([&] {
        if (!list && src.name.empty() && src.file.empty() && src.graph6.empty() && src.recipe.empty())
            throw CLI::RequiredError("a graph source or --list");
        run = [&] { return cmd_build(src, list, gl); };
    });

    auto* metrics = app.add_subcommand("metrics", "order, diameter, girths");
    add_graph_source(metrics, src);
    metrics->callback([&] { run = [&] { return cmd_metrics(src, gl); }; });

    auto* drg = app.add_subcommand("drg-check", "intersection array or a regularity witness");
    std::string expect_array;
    add_graph_source(drg, src);
    drg->add_option("--expect", expect_array, "expected intersection array");
    drg->callback([&] { run = [&] { return cmd_drg_check(src, expect_array, gl); }; });

    auto* spectrum = app.add_subcommand("spectrum", "numeric spectrum, compared with the array spectrum");
    std::string spectrum_array;
    {
        auto* group = spectrum->add_option_group("input");
        group->add_option("--name", src.name, "catalog graph id")->check(kCatalogId);
        group->add_option("--file", src.file, "graph6 or edge-list file");
        group->add_option("--graph6", src.graph6, "graph6 string");
        group->add_option("--recipe", src.recipe, "family:params");
        group->add_option("--array", spectrum_array, "intersection array instead of a graph");
        group->require_option(1);
    }
    spectrum->callback([&] { run = [&] { return cmd_spectrum(src, spectrum_array, gl); }; });

    auto* derive = app.add_subcommand("derive", "derived graph");
    std::string kind;
    std::size_t param = 0;
    derive->add_option("kind", kind, "complement|line|bipartite-double|distance|halved|antipodal-quotient")->required();
    derive->add_option("--param", param, "distance i, or halved colour class");
    add_graph_source(derive, src);
    derive->callback([&] { run = [&] { return cmd_derive(src, kind, param, gl); }; });

    std::string group_spec, set, array_text, subgroup;
    std::size_t max_results = 0;
    auto* cayley = app.add_subcommand("cayley", "Cayley graph of a group, or search connection sets for an array");
    cayley->add_option("--group", group_spec, "group spec, e.g. sym:4, cyclic:4*cyclic:4, armanios-wells")->required();
    cayley->add_option("--set", set, "connection set, comma separated labels");
    cayley->add_option("--array", array_text, "search all connection sets giving this array");
    cayley->add_option("--max-results", max_results, "stop the search after this many sets (0: all)");
    cayley->callback([&] { run = [&] { return cmd_cayley(group_spec, set, array_text, max_results, gl); }; });

    auto* dsets = app.add_subcommand("distance-sets", "S_i sets of a Cayley graph");
    dsets->add_option("--group", group_spec, "group spec")->required();
    dsets->add_option("--set", set, "connection set")->required();
    dsets->callback([&] { run = [&] { return cmd_distance_sets(group_spec, set, gl); }; });

    auto* quotient = app.add_subcommand("quotient", "quotient matrix of the cosets of a normal subgroup");
    quotient->add_option("--group", group_spec, "group spec")->required();
    quotient->add_option("--set", set, "connection set")->required();
    quotient->add_option("--subgroup", subgroup, "generators of the subgroup")->required();
    quotient->callback([&] { run = [&] { return cmd_quotient(group_spec, set, subgroup, gl); }; });

    auto* isc = app.add_subcommand("is-cayley", "decide whether a graph is a Cayley graph");
    std::string expect;
    bool abelian = false, quick = false;
    add_graph_source(isc, src);
    isc->add_option("--expect", expect, "expected verdict; exit 0 when it matches")->check(CLI::IsMember({"yes", "no"}));
    isc->add_flag("--abelian", abelian, "only accept abelian regular subgroups");
    isc->add_flag("--quick", quick, "stop at the first certificate");
    isc->callback([&] { run = [&] { return cmd_is_cayley(src, expect, abelian, quick, gl); }; });

    auto* feas = app.add_subcommand("feasibility", "gq <s> | gh <s> | halving <array>");
    std::string feas_kind, feas_value;
    feas->add_option("kind", feas_kind, "gq, gh or halving")->required();
    feas->add_option("value", feas_value, "s, or an intersection array")->required();
    feas->callback([&] { run = [&] { return cmd_feasibility(feas_kind, feas_value, gl); }; });

    auto* diffset = app.add_subcommand("diffset", "find or verify a difference set");
    std::size_t k = 0, lambda = 0;
    std::string verify;
    diffset->add_option("--group", group_spec, "group spec")->required();
    diffset->add_option("k", k, "block size");
    diffset->add_option("lambda", lambda, "lambda");
    diffset->add_option("--verify", verify, "verify this set instead of searching");
    diffset->callback([&] {
        if (verify.empty() && k == 0) throw CLI::RequiredError("k and lambda, or --verify");
        run = [&] { return cmd_diffset(group_spec, k, lambda, verify, gl); };
    });

    auto* cens = app.add_subcommand("census", "rebuild and check the catalog tables");
    std::string table = "all";
    cens->add_option("--table", table, "1, 2, 3, 4 or all");
    cens->callback([&] {
        if (gl.format == "text" || gl.format == "graph6") gl.format = "md";
        run = [&] { return cmd_census(table, gl); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    if (gl.threads > 0) set_thread_count(gl.threads);
    try {
        code = run();
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: bad number (" << e.what() << ")\n";
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cout << "unknown: " << e.what() << '\n';
        return kUnknown;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return code;
}
