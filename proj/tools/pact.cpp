#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pact/report.hpp"

using nlohmann::ordered_json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<int> subgroup_indices(const pact::FiniteGroup& g, const std::vector<std::string>& ids) {
    std::vector<int> members;
    for (const auto& id : ids) {
        int e = g.index_of(id);
        if (e < 0) throw pact::Error(pact::errc::parse_error, "unknown group element '" + id + "'");
        members.push_back(e);
    }
    return members;
}

ordered_json space_json(const pact::FiniteSpace& s) {
    ordered_json j;
    j["points"] = s.points;
    j["opens"] = ordered_json::array();
    for (const auto& u : s.all_opens()) j["opens"].push_back(pact::subset_label(u, s.points));
    return j;
}

ordered_json separation_json(const pact::FiniteSpace& s) {
    pact::Separation sep = pact::separation(s);
    ordered_json j;
    j["t1"] = sep.t1;
    j["hausdorff"] = sep.hausdorff;
    j["regular"] = sep.regular;
    j["second_countable"] = sep.second_countable;
    j["metrizable"] = sep.metrizable;
    return j;
}

ordered_json metric_json(const pact::FiniteMetric& m) {
    ordered_json j;
    j["points"] = m.points;
    j["dist"] = ordered_json::array();
    for (int x = 0; x < m.size(); ++x) {
        ordered_json row = ordered_json::array();
        for (int y = 0; y < m.size(); ++y) row.push_back(pact::format_rational(m.at(x, y)));
        j["dist"].push_back(std::move(row));
    }
    return j;
}

void emit(const ordered_json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // a plain key: value rendering for human eyes
    for (const auto& [key, value] : j.items())
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

int cmd_validate(const pact::Fixture& fx, bool as_json) {
    const pact::PartialAction& a = fx.action;
    ordered_json j;
    j["command"] = "validate";
    j["fixture"] = fx.name;
    j["valid"] = true;
    j["group_order"] = a.group.group.order();
    j["points"] = a.space.points;
    ordered_json domains;
    for (int g = 0; g < a.group.group.order(); ++g)
        domains[a.group.group.elements[static_cast<std::size_t>(g)]] =
            pact::subset_label(a.domain[static_cast<std::size_t>(g)], a.space.points);
    j["domains"] = std::move(domains);
    j["global"] = a.is_global();
    emit(j, as_json);
    return 0;
}

int cmd_globalize(const pact::Fixture& fx, bool as_json) {
    pact::EnvelopingSpace env = pact::globalize(fx.action);
    const pact::FiniteGroup& g = fx.action.group.group;
    ordered_json j;
    j["command"] = "globalize";
    j["fixture"] = fx.name;
    j["classes"] = env.carrier().points;
    j["space"] = space_json(env.carrier());
    ordered_json mu;
    for (int e = 0; e < g.order(); ++e)
        mu[g.elements[static_cast<std::size_t>(e)]] = env.mu[static_cast<std::size_t>(e)];
    j["mu"] = std::move(mu);
    ordered_json iota;
    for (int x = 0; x < fx.action.space.size(); ++x)
        iota[fx.action.space.points[static_cast<std::size_t>(x)]] =
            env.carrier().points[static_cast<std::size_t>(env.iota.apply(x))];
    j["iota"] = std::move(iota);
    j["verified"] = ordered_json{{"mu_global", true}, {"iota_open_embedding", true},
                                 {"q_open", true}, {"minimal", true}};
    emit(j, as_json);
    return 0;
}

int cmd_orbits(const pact::Fixture& fx, bool as_json) {
    pact::OrbitSpace o = pact::orbit_space(fx.action);
    ordered_json j;
    j["command"] = "orbits";
    j["fixture"] = fx.name;
    j["classes"] = o.quotient.space.points;
    j["space"] = space_json(o.quotient.space);
    j["pi_open"] = pact::map_properties(o.quotient.pi).open_map;
    j["separation"] = separation_json(o.quotient.space);
    emit(j, as_json);
    return 0;
}

int cmd_quotient(const pact::Fixture& fx, const std::string& subgroup_arg, bool as_json) {
    const pact::FiniteGroup& g = fx.action.group.group;
    std::vector<std::string> ids = subgroup_arg.empty() ? fx.subgroup : split(subgroup_arg, ',');
    if (ids.empty())
        throw pact::Error(pact::errc::parse_error, "no subgroup given and the fixture has no default");
    pact::QuotientActionBundle b = pact::build_quotient_action(fx.action, subgroup_indices(g, ids));

    ordered_json j;
    j["command"] = "quotient";
    j["fixture"] = fx.name;
    j["subgroup"] = ids;
    j["quotient_group"] = b.quotient_grp.group.group.elements;
    j["orbit_space"] = b.z.quotient.space.points;
    ordered_json domains, action;
    const pact::FiniteGroup& q = b.quotient_grp.group.group;
    for (int c = 0; c < q.order(); ++c) {
        const std::string& coset = q.elements[static_cast<std::size_t>(c)];
        domains[coset] = pact::subset_label(b.eta_mod.domain[static_cast<std::size_t>(c)],
                                            b.z.quotient.space.points);
        ordered_json row;
        for (int z = 0; z < b.z.quotient.space.size(); ++z)
            if (b.eta_mod.defined(c, z))
                row[b.z.quotient.space.points[static_cast<std::size_t>(z)]] =
                    b.z.quotient.space.points[static_cast<std::size_t>(b.eta_mod.act(c, z))];
        action[coset] = std::move(row);
    }
    j["domains"] = std::move(domains);
    j["action"] = std::move(action);
    j["routes_agree"] = true;
    j["psi_verified"] = pact::psi_homeomorphism(b).verified;
    pact::ClosedDomainCorollary cc = pact::closed_domain_corollary_check(b);
    j["closed_domain"] = ordered_json{{"hypotheses_met", cc.hypotheses_met},
                                      {"domain_closed", cc.domain_closed}};
    emit(j, as_json);
    return 0;
}

int cmd_metric(const pact::Fixture& fx, bool invariant_check, bool construct, bool hyperspace,
               bool as_json) {
    ordered_json j;
    j["command"] = "metric";
    j["fixture"] = fx.name;
    if (invariant_check || hyperspace) {
        if (!fx.metric)
            throw pact::Error(pact::errc::hypotheses_not_met, "fixture carries no metric");
    }
    if (invariant_check) {
        pact::InvarianceReport r = pact::is_invariant_metric(fx.action, *fx.metric);
        j["invariant"] = r.invariant;
        if (!r.invariant) j["witness"] = r.witness;
    } else if (construct) {
        pact::InvariantMetricResult r = pact::invariant_metric_via_globalization(fx.action);
        j["metric_on_envelope"] = metric_json(r.metric_on_env);
        j["metric_on_carrier"] = metric_json(r.metric_on_space);
        j["invariant"] = true;
    } else if (hyperspace) {
        pact::HyperspaceActionResult r = pact::hyperspace_action(fx.action, *fx.metric);
        j["hausdorff_metric"] = metric_json(r.dh);
        j["invariance_propagated"] = r.invariance_propagated;
    } else {
        if (!fx.metric)
            throw pact::Error(pact::errc::hypotheses_not_met, "fixture carries no metric");
        j["metric"] = metric_json(*fx.metric);
        j["valid"] = true;
    }
    emit(j, as_json);
    return 0;
}

int cmd_invlimit(const pact::Fixture& fx, const std::string& chain_arg, bool as_json) {
    const pact::FiniteGroup& g = fx.action.group.group;
    std::vector<std::vector<std::string>> chain = fx.chain;
    if (!chain_arg.empty()) {
        chain.clear();
        for (const auto& part : split(chain_arg, ';')) chain.push_back(split(part, ','));
    }
    if (chain.empty())
        throw pact::Error(pact::errc::parse_error, "no chain given and the fixture has no default");

    std::vector<std::vector<int>> subgroups;
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> rel;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        subgroups.push_back(subgroup_indices(g, chain[i]));
        ids.push_back(std::to_string(i + 1));
        if (i) rel.emplace_back(ids[i - 1], ids[i]);
    }
    pact::InverseSystem sys = pact::build_system(fx.action, pact::validate_poset(ids, rel), subgroups);
    pact::LambdaResult l = pact::lambda_equivalence(sys);

    ordered_json j;
    j["command"] = "invlimit";
    j["fixture"] = fx.name;
    ordered_json spaces;
    for (int i = 0; i < sys.index.size(); ++i)
        spaces[ids[static_cast<std::size_t>(i)]] =
            sys.bundles[static_cast<std::size_t>(i)].z.quotient.space.points;
    j["orbit_spaces"] = std::move(spaces);
    j["threads"] = l.limit.space.points;
    j["lambda_equivalence"] = l.verified;
    emit(j, as_json);
    return 0;
}

int cmd_theorems(const pact::Fixture& fx, const std::string& only, bool as_json) {
    pact::Report rep = pact::run_theorem_suite(fx, split(only, ','));
    std::cout << (as_json ? pact::report_json(rep) : pact::report_text(rep));
    return rep.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for partial actions of finite topological groups"};
    app.require_subcommand(1);

    std::string fixture_arg, subgroup_arg, chain_arg, only_arg;
    bool as_json = false, invariant_check = false, construct = false, hyperspace = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("fixture", fixture_arg, "fixture path or embedded name")->required();
        sub->add_flag("--json", as_json, "machine-readable output");
    };
    auto* validate = app.add_subcommand("validate", "validate a fixture");
    add_common(validate);
    auto* globalize = app.add_subcommand("globalize", "build the enveloping space");
    add_common(globalize);
    auto* orbits = app.add_subcommand("orbits", "build the orbit space");
    add_common(orbits);
    auto* quotient = app.add_subcommand("quotient", "quotient partial action by a normal subgroup");
    add_common(quotient);
    quotient->add_option("--subgroup", subgroup_arg, "comma-separated subgroup elements");
    auto* metric = app.add_subcommand("metric", "metric operations");
    add_common(metric);
    metric->add_flag("--invariant-check", invariant_check, "check invariance of the fixture metric");
    metric->add_flag("--construct", construct, "construct an invariant metric via the globalization");
    metric->add_flag("--hyperspace", hyperspace, "hyperspace action with the Hausdorff metric");
    auto* invlimit = app.add_subcommand("invlimit", "inverse limit over a subgroup chain");
    add_common(invlimit);
    invlimit->add_option("--chain", chain_arg, "semicolon-separated subgroups, largest first");
    auto* theorems = app.add_subcommand("theorems", "run the verification suite");
    add_common(theorems);
    theorems->add_option("--only", only_arg, "comma-separated check ids");

    CLI11_PARSE(app, argc, argv);

    try {
        pact::Fixture fx = pact::load_fixture(fixture_arg);
        if (validate->parsed()) return cmd_validate(fx, as_json);
        if (globalize->parsed()) return cmd_globalize(fx, as_json);
        if (orbits->parsed()) return cmd_orbits(fx, as_json);
        if (quotient->parsed()) return cmd_quotient(fx, subgroup_arg, as_json);
        if (metric->parsed()) return cmd_metric(fx, invariant_check, construct, hyperspace, as_json);
        if (invlimit->parsed()) return cmd_invlimit(fx, chain_arg, as_json);
        if (theorems->parsed()) return cmd_theorems(fx, only_arg, as_json);
    } catch (const pact::TheoremViolation& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const pact::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const pact::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}
