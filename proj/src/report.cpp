#include "pact/report.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace pact {

namespace {

std::string yn(bool b) { return b ? "true" : "false"; }

void flag_properties(CheckRecord& rec, const std::string& prefix, const PropertyFlags& p) {
    rec.flags.emplace_back(prefix + "_hausdorff", yn(p.hausdorff));
    rec.flags.emplace_back(prefix + "_regular", yn(p.regular));
    rec.flags.emplace_back(prefix + "_metrizable", yn(p.metrizable));
    rec.flags.emplace_back(prefix + "_second_countable", yn(p.second_countable));
}

std::string subgroup_id(const FiniteGroup& g, const std::vector<int>& h) {
    return subset_label(subset_of(static_cast<std::size_t>(g.order()), h), g.elements);
}

struct SuiteContext {
    const Fixture& fx;
    std::vector<std::vector<int>> normal_subgroups;
};

using CheckFn = std::function<void(SuiteContext&, CheckRecord&)>;

// The fixed catalogue: id -> evaluation. Records are appended in this order.
const std::vector<std::pair<std::string, CheckFn>>& catalogue() {
    static const std::vector<std::pair<std::string, CheckFn>> checks = {
        {"orbit_quotient", [](SuiteContext& c, CheckRecord& r) {
             OrbitSpace o = orbit_space(c.fx.action);
             r.flags.emplace_back("orbit_classes", std::to_string(o.quotient.space.size()));
             r.flags.emplace_back("pi_open", yn(map_properties(o.quotient.pi).open_map));
             r.verdict = "holds";
         }},
        {"envelope_contract", [](SuiteContext& c, CheckRecord& r) {
             EnvelopingSpace env = globalize(c.fx.action);
             r.flags.emplace_back("classes", std::to_string(env.carrier().size()));
             r.flags.emplace_back("iota_open_embedding", "true");
             r.flags.emplace_back("minimal", "true");
             r.verdict = "holds";
         }},
        {"t1_chain", [](SuiteContext& c, CheckRecord& r) {
             T1Report t = t1_report(globalize(c.fx.action));
             r.flags.emplace_back("domain_closed", yn(t.domain_closed));
             r.flags.emplace_back("all_gx_closed", yn(t.all_gx_closed));
             r.flags.emplace_back("envelope_t1", yn(t.xg_t1));
             r.flags.emplace_back("carrier_hausdorff", yn(t.x_hausdorff));
             r.verdict = "holds";
         }},
        {"hat_orbit_space", [](SuiteContext& c, CheckRecord& r) {
             HatActionResult h = hat_action(c.fx.action);
             r.flags.emplace_back("orbit_space_matches", yn(h.orbit_space_matches));
             r.verdict = "holds";
         }},
        {"closed_perfect", [](SuiteContext& c, CheckRecord& r) {
             ClosednessReport cr = closedness_report(c.fx.action);
             r.hypotheses.emplace_back("group_compact", cr.group_compact);
             r.hypotheses.emplace_back("domain_closed", cr.domain_closed);
             r.flags.emplace_back("eta_closed_map", yn(cr.eta_closed_map));
             r.flags.emplace_back("pi_perfect", yn(cr.pi_perfect));
             r.verdict = cr.domain_closed ? "holds" : "hypotheses-not-met";
         }},
        {"transfer_orbit", [](SuiteContext& c, CheckRecord& r) {
             PropertyTransferReport t = property_transfer_orbit(c.fx.action);
             r.hypotheses.emplace_back("domain_closed", t.hypotheses_met);
             flag_properties(r, "carrier", t.source);
             flag_properties(r, "orbit", t.target);
             r.verdict = t.hypotheses_met ? "holds" : "hypotheses-not-met";
         }},
        {"transfer_envelope", [](SuiteContext& c, CheckRecord& r) {
             EnvTransferReport t = property_transfer_env(c.fx.action);
             r.hypotheses.emplace_back("domain_closed", t.hypotheses_met);
             flag_properties(r, "product", t.source);
             flag_properties(r, "envelope", t.target);
             r.verdict = t.hypotheses_met ? "holds" : "hypotheses-not-met";
         }},
        {"hausdorff_closed_domain", [](SuiteContext& c, CheckRecord& r) {
             HausdorffDomainCheck h = hausdorff_implies_closed_domain_check(c.fx.action);
             r.hypotheses.emplace_back("carrier_compact_hausdorff", h.hypotheses_met);
             r.flags.emplace_back("envelope_hausdorff", yn(h.xg_hausdorff));
             r.flags.emplace_back("domain_closed", yn(h.domain_closed));
             r.verdict = h.hypotheses_met ? "holds" : "hypotheses-not-met";
         }},
        {"invariant_metric", [](SuiteContext& c, CheckRecord& r) {
             bool t1 = separation(globalize(c.fx.action).carrier()).t1;
             r.hypotheses.emplace_back("envelope_t1", t1);
             if (!t1) {
                 r.verdict = "hypotheses-not-met";
                 return;
             }
             InvariantMetricResult m = invariant_metric_via_globalization(c.fx.action);
             r.flags.emplace_back("metric_points", std::to_string(m.metric_on_env.size()));
             r.flags.emplace_back("invariant", "true");
             r.verdict = "holds";
         }},
        {"orbit_metrizability", [](SuiteContext& c, CheckRecord& r) {
             OrbitMetrizability m = orbit_metrizability_report(c.fx.action);
             r.flags.emplace_back("orbit_t1", yn(m.orbit_t1));
             r.flags.emplace_back("orbit_regular", yn(m.orbit_regular));
             r.flags.emplace_back("orbit_metrizable", yn(m.orbit_metrizable));
             r.verdict = "holds";
         }},
        {"metric_invariance", [](SuiteContext& c, CheckRecord& r) {
             r.hypotheses.emplace_back("metric_given", c.fx.metric.has_value());
             if (!c.fx.metric) {
                 r.verdict = "hypotheses-not-met";
                 return;
             }
             InvarianceReport inv = is_invariant_metric(c.fx.action, *c.fx.metric);
             r.flags.emplace_back("invariant", yn(inv.invariant));
             if (!inv.invariant) r.flags.emplace_back("witness", inv.witness);
             r.verdict = "holds";
         }},
        {"hyperspace_invariance", [](SuiteContext& c, CheckRecord& r) {
             r.hypotheses.emplace_back("metric_given", c.fx.metric.has_value());
             if (!c.fx.metric) {
                 r.verdict = "hypotheses-not-met";
                 return;
             }
             HyperspaceActionResult h = hyperspace_action(c.fx.action, *c.fx.metric);
             r.flags.emplace_back("hyperspace_points", std::to_string(h.dh.size()));
             r.flags.emplace_back("invariance_propagated", yn(h.invariance_propagated));
             r.verdict = "holds";
         }},
        {"quotient_routes", [](SuiteContext& c, CheckRecord& r) {
             for (const auto& h : c.normal_subgroups) {
                 QuotientActionBundle b = build_quotient_action(c.fx.action, h);
                 r.flags.emplace_back(subgroup_id(c.fx.action.group.group, h),
                                      std::to_string(b.z.quotient.space.size()) + " classes, routes agree");
             }
             r.verdict = "holds";
         }},
        {"psi_quotient_orbits", [](SuiteContext& c, CheckRecord& r) {
             int verified = 0;
             for (const auto& h : c.normal_subgroups)
                 if (psi_homeomorphism(build_quotient_action(c.fx.action, h)).verified) ++verified;
             r.flags.emplace_back("subgroups_verified",
                                  std::to_string(verified) + "/" + std::to_string(c.normal_subgroups.size()));
             r.verdict = "holds";
         }},
        {"quotient_globalization", [](SuiteContext& c, CheckRecord& r) {
             int verified = 0;
             for (const auto& h : c.normal_subgroups)
                 if (globalization_of_quotient(build_quotient_action(c.fx.action, h)).verified) ++verified;
             r.flags.emplace_back("subgroups_verified",
                                  std::to_string(verified) + "/" + std::to_string(c.normal_subgroups.size()));
             r.verdict = "holds";
         }},
        {"closed_domain_quotient", [](SuiteContext& c, CheckRecord& r) {
             bool any_met = false;
             for (const auto& h : c.normal_subgroups) {
                 ClosedDomainCorollary cc = closed_domain_corollary_check(build_quotient_action(c.fx.action, h));
                 if (cc.hypotheses_met) any_met = true;
                 r.flags.emplace_back(subgroup_id(c.fx.action.group.group, h),
                                      cc.hypotheses_met ? (cc.domain_closed ? "closed" : "open")
                                                        : "hypotheses-not-met");
             }
             r.hypotheses.emplace_back("any_subgroup_qualifies", any_met);
             r.verdict = any_met ? "holds" : "hypotheses-not-met";
         }},
        {"bonding_composition", [](SuiteContext& c, CheckRecord& r) {
             int pairs = 0;
             for (const auto& h1 : c.normal_subgroups)
                 for (const auto& h2 : c.normal_subgroups) {
                     if (!std::includes(h2.begin(), h2.end(), h1.begin(), h1.end())) continue;
                     BondingMapResult b = bonding_map(c.fx.action, h1, h2);
                     if (!b.g_map_verified) throw TheoremViolation("bonding map failed the G-map check");
                     ++pairs;
                 }
             r.flags.emplace_back("nested_pairs", std::to_string(pairs));
             r.verdict = "holds";
         }},
        {"limit_lambda", [](SuiteContext& c, CheckRecord& r) {
             const PartialAction& a = c.fx.action;
             std::vector<std::vector<int>> chain;
             if (!c.fx.chain.empty()) {
                 for (const auto& h : c.fx.chain) {
                     std::vector<int> members;
                     for (const auto& id : h) members.push_back(a.group.group.index_of(id));
                     chain.push_back(std::move(members));
                 }
             } else {
                 std::vector<int> whole(static_cast<std::size_t>(a.group.group.order()));
                 for (int i = 0; i < a.group.group.order(); ++i) whole[static_cast<std::size_t>(i)] = i;
                 chain = {whole, {a.group.group.identity}};
             }
             std::vector<std::string> ids;
             std::vector<std::pair<std::string, std::string>> rel;
             for (std::size_t i = 0; i < chain.size(); ++i) {
                 ids.push_back(std::to_string(i + 1));
                 if (i) rel.emplace_back(ids[i - 1], ids[i]);
             }
             bool hyp = a.space.discrete() && domain_report(a).is_closed;
             r.hypotheses.emplace_back("carrier_hausdorff_and_domain_closed", hyp);
             if (!hyp) {
                 r.verdict = "hypotheses-not-met";
                 return;
             }
             LambdaResult l = lambda_equivalence(build_system(a, validate_poset(ids, rel), chain));
             r.flags.emplace_back("threads", std::to_string(l.limit.space.size()));
             r.flags.emplace_back("lambda_equivalence", yn(l.verified));
             r.verdict = "holds";
         }},
    };
    return checks;
}

} // namespace

std::vector<std::string> theorem_check_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, fn] : catalogue()) ids.push_back(id);
    return ids;
}

Report run_theorem_suite(const Fixture& fx, const std::vector<std::string>& selection) {
    Report rep;
    rep.command = "theorems";
    rep.fixture = fx.name;
    SuiteContext ctx{fx, all_normal_subgroups(fx.action.group.group)};
    for (const auto& [id, fn] : catalogue()) {
        if (!selection.empty() && std::find(selection.begin(), selection.end(), id) == selection.end())
            continue;
        CheckRecord rec;
        rec.id = id;
        try {
            fn(ctx, rec);
        } catch (const TheoremViolation& tv) {
            rec.verdict = "violated";
            rec.flags.emplace_back("detail", tv.what());
            rep.exit_code = 2;
        }
        rep.checks.push_back(std::move(rec));
    }
    return rep;
}

std::string report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["command"] = r.command;
    j["fixture"] = r.fixture;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["hypotheses"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.hypotheses) jc["hypotheses"][k] = v;
        jc["flags"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.flags) jc["flags"][k] = v;
        jc["verdict"] = c.verdict;
        j["checks"].push_back(std::move(jc));
    }
    j["exit_code"] = r.exit_code;
    return j.dump(2) + "\n";
}

std::string report_text(const Report& r) {
    std::ostringstream out;
    out << r.command << " " << r.fixture << "\n";
    std::size_t width = 0;
    for (const auto& c : r.checks) width = std::max(width, c.id.size());
    for (const auto& c : r.checks) {
        out << "  " << c.id << std::string(width - c.id.size() + 2, ' ') << c.verdict;
        std::vector<std::string> parts;
        for (const auto& [k, v] : c.hypotheses) parts.push_back(k + "=" + yn(v));
        for (const auto& [k, v] : c.flags) parts.push_back(k + "=" + v);
        if (!parts.empty()) {
            out << "  [";
            for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "; " : "") << parts[i];
            out << "]";
        }
        out << "\n";
    }
    return out.str();
}

} // namespace pact
