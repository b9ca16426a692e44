#include "pact/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace pact {

namespace {

using nlohmann::json;

const std::map<std::string, const char*>& embedded_library() {
    static const std::map<std::string, const char*> lib = {
        {"sierpinski-z2", R"({
  "name": "sierpinski-z2",
  "note": "Z2 acting on the two-point space whose only proper open set is {b}; the nontrivial element fixes b on the open domain {b}.",
  "group": {"elements": ["e", "s"], "table": [[0, 1], [1, 0]]},
  "space": {"points": ["a", "b"], "opens": [[], ["b"], ["a", "b"]]},
  "domains": {"s": ["b"]},
  "maps": {"s": {"b": "b"}}
})"},
        {"neg-z3", R"({
  "name": "neg-z3",
  "note": "Z3 on the discrete set {-2,-1,1,2}; the generator negates the two negative points onto the two positive ones.",
  "group": {"elements": ["0", "1", "2"], "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]},
  "space": {"points": ["-2", "-1", "1", "2"], "opens": "discrete"},
  "domains": {"1": ["-2", "-1"], "2": ["1", "2"]},
  "maps": {"1": {"1": "-1", "2": "-2"}, "2": {"-2": "2", "-1": "1"}},
  "metric": {"points": ["-2", "-1", "1", "2"],
             "dist": [["0", "1", "3", "4"],
                      ["1", "0", "2", "3"],
                      ["3", "2", "0", "1"],
                      ["4", "3", "1", "0"]]},
  "subgroup": ["0", "1", "2"]
})"},
        {"clopen-z2", R"({
  "name": "clopen-z2",
  "note": "Z2 on the discrete three-point set {u,v,w}; the nontrivial element acts as the identity on the clopen domain {u}.",
  "group": {"elements": ["e", "s"], "table": [[0, 1], [1, 0]]},
  "space": {"points": ["u", "v", "w"], "opens": "discrete"},
  "domains": {"s": ["u"]},
  "maps": {"s": {"u": "u"}}
})"},
        {"cyclic-f", R"({
  "name": "cyclic-f",
  "note": "Z6 on the discrete set {0,1,2,3}: outside the identity every element acts on U={0,1,2} by the corresponding power of the 3-cycle 0->1->2->0; the point 3 is never moved.",
  "group": {"elements": ["0", "1", "2", "3", "4", "5"],
            "table": [[0, 1, 2, 3, 4, 5], [1, 2, 3, 4, 5, 0], [2, 3, 4, 5, 0, 1],
                      [3, 4, 5, 0, 1, 2], [4, 5, 0, 1, 2, 3], [5, 0, 1, 2, 3, 4]]},
  "space": {"points": ["0", "1", "2", "3"], "opens": "discrete"},
  "domains": {"1": ["0", "1", "2"], "2": ["0", "1", "2"], "3": ["0", "1", "2"],
              "4": ["0", "1", "2"], "5": ["0", "1", "2"]},
  "maps": {"1": {"0": "1", "1": "2", "2": "0"},
           "2": {"0": "2", "1": "0", "2": "1"},
           "3": {"0": "0", "1": "1", "2": "2"},
           "4": {"0": "1", "1": "2", "2": "0"},
           "5": {"0": "2", "1": "0", "2": "1"}},
  "subgroup": ["0", "2", "4"],
  "chain": [["0", "1", "2", "3", "4", "5"], ["0", "3"], ["0"]]
})"},
        {"chain-z4", R"({
  "name": "chain-z4",
  "note": "Z4 rotating the discrete set {0,1,2,3} globally; the default chain {0,2} > {0} drives the inverse-limit checks.",
  "group": {"elements": ["0", "1", "2", "3"],
            "table": [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]]},
  "space": {"points": ["0", "1", "2", "3"], "opens": "discrete"},
  "domains": {"1": ["0", "1", "2", "3"], "2": ["0", "1", "2", "3"], "3": ["0", "1", "2", "3"]},
  "maps": {"1": {"0": "1", "1": "2", "2": "3", "3": "0"},
           "2": {"0": "2", "1": "3", "2": "0", "3": "1"},
           "3": {"0": "3", "1": "0", "2": "1", "3": "2"}},
  "subgroup": ["0", "2"],
  "chain": [["0", "2"], ["0"]]
})"},
        {"metric-hyper", R"({
  "name": "metric-hyper",
  "note": "Z2 swapping the two-point discrete metric space {-1,1} at distance 2; the base for the hyperspace checks.",
  "group": {"elements": ["e", "s"], "table": [[0, 1], [1, 0]]},
  "space": {"points": ["-1", "1"], "opens": "discrete"},
  "domains": {"s": ["-1", "1"]},
  "maps": {"s": {"-1": "1", "1": "-1"}},
  "metric": {"points": ["-1", "1"], "dist": [["0", "2"], ["2", "0"]]}
})"},
    };
    return lib;
}

std::vector<std::string> string_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw Error(errc::parse_error, what + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) throw Error(errc::parse_error, what + " must contain strings only");
        out.push_back(v.get<std::string>());
    }
    return out;
}

FiniteSpace parse_space(const json& j) {
    if (!j.is_object() || !j.contains("points"))
        throw Error(errc::parse_error, "space fixture needs a points list");
    auto points = string_list(j.at("points"), "points");
    if (j.contains("preorder")) {
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& p : j.at("preorder")) {
            auto pv = string_list(p, "preorder pair");
            if (pv.size() != 2) throw Error(errc::parse_error, "preorder entries must be pairs");
            pairs.emplace_back(pv[0], pv[1]);
        }
        return space_from_preorder(points, pairs);
    }
    if (!j.contains("opens")) throw Error(errc::parse_error, "space fixture needs opens or preorder");
    if (j.at("opens").is_string() && j.at("opens").get<std::string>() == "discrete")
        return discrete_space(points);
    std::vector<std::vector<std::string>> opens;
    for (const auto& o : j.at("opens")) opens.push_back(string_list(o, "open set"));
    return space_from_opens(points, opens);
}

TopologicalFiniteGroup parse_group(const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("table"))
        throw Error(errc::parse_error, "group fixture needs elements and table");
    auto elements = string_list(j.at("elements"), "elements");
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) {
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw Error(errc::parse_error, "table entries must be element indices");
            r.push_back(v.get<int>());
        }
        table.push_back(std::move(r));
    }
    FiniteGroup g = validate_group(elements, table);
    if (!j.contains("topology")) return discrete_group(g);
    std::vector<std::vector<std::string>> opens;
    for (const auto& o : j.at("topology")) opens.push_back(string_list(o, "group open set"));
    return make_topological_group(g, space_from_opens(elements, opens));
}

FiniteMetric parse_metric(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("dist"))
        throw Error(errc::parse_error, "metric fixture needs points and dist");
    auto points = string_list(j.at("points"), "metric points");
    std::vector<std::vector<Rational>> dist;
    for (const auto& row : j.at("dist")) {
        std::vector<Rational> r;
        for (const auto& v : row) {
            if (!v.is_string()) throw Error(errc::parse_error, "distances must be rational strings");
            r.push_back(parse_rational(v.get<std::string>()));
        }
        dist.push_back(std::move(r));
    }
    return validate_metric(points, dist);
}

} // namespace

std::vector<std::string> embedded_fixture_names() {
    std::vector<std::string> names;
    for (const auto& [name, text] : embedded_library()) names.push_back(name);
    return names;
}

Fixture parse_fixture(const std::string& text, const std::string& name) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(errc::parse_error, e.what());
    }
    if (!j.is_object()) throw Error(errc::parse_error, "fixture must be a JSON object");

    Fixture fx;
    fx.name = j.value("name", name);
    fx.note = j.value("note", "");

    TopologicalFiniteGroup group = parse_group(j.at("group"));
    FiniteSpace space = parse_space(j.at("space"));
    const FiniteGroup& g = group.group;
    const int n = space.size();

    std::vector<Subset> domain(static_cast<std::size_t>(g.order()), empty_subset(static_cast<std::size_t>(n)));
    std::vector<std::vector<int>> eta(static_cast<std::size_t>(g.order()),
                                      std::vector<int>(static_cast<std::size_t>(n), -1));

    auto element_index = [&](const std::string& id) {
        int e = g.index_of(id);
        if (e < 0) throw Error(errc::parse_error, "unknown group element '" + id + "'");
        return e;
    };
    auto point_index = [&](const std::string& id) {
        int p = space.index_of(id);
        if (p < 0) throw Error(errc::unknown_point, "unknown point '" + id + "'");
        return p;
    };

    bool identity_given = false;
    if (j.contains("domains"))
        for (const auto& [key, value] : j.at("domains").items()) {
            int e = element_index(key);
            if (e == g.identity) identity_given = true;
            for (const auto& p : string_list(value, "domain of " + key))
                domain[static_cast<std::size_t>(e)][static_cast<std::size_t>(point_index(p))] = 1;
        }
    if (!identity_given) {
        domain[static_cast<std::size_t>(g.identity)] = full_subset(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x)
            eta[static_cast<std::size_t>(g.identity)][static_cast<std::size_t>(x)] = x;
    }
    if (j.contains("maps"))
        for (const auto& [key, value] : j.at("maps").items()) {
            int e = element_index(key);
            if (!value.is_object()) throw Error(errc::parse_error, "map of " + key + " must be an object");
            for (const auto& [from, to] : value.items()) {
                if (!to.is_string()) throw Error(errc::parse_error, "map values must be point ids");
                eta[static_cast<std::size_t>(e)][static_cast<std::size_t>(point_index(from))] =
                    point_index(to.get<std::string>());
            }
        }
    if (identity_given && !(j.contains("maps") && j.at("maps").contains(g.elements[static_cast<std::size_t>(g.identity)])))
        for (int x = 0; x < n; ++x)
            if (domain[static_cast<std::size_t>(g.identity)][static_cast<std::size_t>(x)])
                eta[static_cast<std::size_t>(g.identity)][static_cast<std::size_t>(x)] = x;

    fx.action = validate_partial_action(group, space, domain, eta);

    if (j.contains("metric")) {
        fx.metric = parse_metric(j.at("metric"));
        if (fx.metric->points != space.points)
            throw Error(errc::carrier_mismatch, "fixture metric must live on the carrier");
    }
    if (j.contains("subgroup")) fx.subgroup = string_list(j.at("subgroup"), "subgroup");
    if (j.contains("chain"))
        for (const auto& h : j.at("chain")) fx.chain.push_back(string_list(h, "chain entry"));
    return fx;
}

Fixture load_fixture(const std::string& path_or_name) {
    auto try_file = [](const std::string& path) -> std::optional<std::string> {
        std::ifstream in(path);
        if (!in) return std::nullopt;
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad()) throw IoError("cannot read '" + path + "'");
        return buf.str();
    };

    if (path_or_name.find('/') != std::string::npos ||
        (path_or_name.size() > 5 && path_or_name.substr(path_or_name.size() - 5) == ".json")) {
        auto text = try_file(path_or_name);
        if (!text) throw IoError("cannot open '" + path_or_name + "'");
        return parse_fixture(*text, path_or_name);
    }
    if (auto text = try_file(path_or_name)) return parse_fixture(*text, path_or_name);
    if (const char* dir = std::getenv("PACT_FIXTURE_PATH"))
        if (auto text = try_file(std::string(dir) + "/" + path_or_name + ".json"))
            return parse_fixture(*text, path_or_name);
    auto it = embedded_library().find(path_or_name);
    if (it == embedded_library().end())
        throw Error(errc::unknown_fixture, "no fixture named '" + path_or_name + "'");
    return parse_fixture(it->second, path_or_name);
}

} // namespace pact
