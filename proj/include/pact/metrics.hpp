#pragma once

#include <optional>

#include <boost/rational.hpp>

#include "pact/globalization.hpp"

namespace pact {

using Rational = boost::rational<long long>;

// "p/q" or "p"
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

// Exact rational metric on a finite point set.
struct FiniteMetric {
    std::vector<std::string> points;
    std::vector<std::vector<Rational>> dist;

    int size() const { return static_cast<int>(points.size()); }
    const Rational& at(int x, int y) const { return dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
};

// Checks zero diagonal, positivity, symmetry and the triangle inequality.
FiniteMetric validate_metric(const std::vector<std::string>& points,
                             const std::vector<std::vector<Rational>>& dist);

FiniteMetric unit_metric(const std::vector<std::string>& points);

struct InvarianceReport {
    bool invariant = false;
    std::string witness; // "(g,x,y)" on failure
};

InvarianceReport is_invariant_metric(const PartialAction& a, const FiniteMetric& d);

struct InvariantMetricResult {
    EnvelopingSpace env;
    FiniteMetric metric_on_env;   // mu-invariant, averaged over G
    FiniteMetric metric_on_space; // its restriction along iota; eta-invariant
};

// Finite-group averaging over the enveloping space; requires X_G to be T1
// (the only metrizable finite topologies are the discrete ones).
InvariantMetricResult invariant_metric_via_globalization(const PartialAction& a,
                                                         const std::optional<FiniteMetric>& seed = std::nullopt);

struct OrbitMetrizability {
    bool orbit_t1 = false;
    bool orbit_regular = false;
    bool orbit_metrizable = false;
    bool consistent = false; // metrizable <=> regular and T1
};

OrbitMetrizability orbit_metrizability_report(const PartialAction& a);

// All nonempty subsets of the base carrier, enumerated by increasing bitmask
// over point indices and labeled "{...}".
std::vector<Subset> hyperspace_elements(int n);

// d_H(A,B) by the max-min evaluation; the infimum formula attains it on a
// finite carrier.
FiniteMetric hausdorff_metric(const FiniteMetric& d);

struct HyperspaceActionResult {
    PartialAction action;      // 2^eta on the discrete hyperspace carrier
    FiniteMetric dh;
    bool invariance_propagated = false;
};

HyperspaceActionResult hyperspace_action(const PartialAction& a, const FiniteMetric& d);

} // namespace pact
