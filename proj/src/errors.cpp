#include "pact/errors.hpp"

namespace pact {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_associative: return "NotAssociative";
        case errc::no_identity: return "NoIdentity";
        case errc::no_inverse: return "NoInverse";
        case errc::not_normal: return "NotNormal";
        case errc::not_continuous_group: return "NotContinuousGroup";
        case errc::not_homomorphism: return "NotHomomorphism";
        case errc::missing_empty_or_full: return "MissingEmptyOrFull";
        case errc::not_closed_under_union: return "NotClosedUnderUnion";
        case errc::not_closed_under_intersection: return "NotClosedUnderIntersection";
        case errc::unknown_point: return "UnknownPoint";
        case errc::not_a_partition: return "NotAPartition";
        case errc::not_total: return "NotTotal";
        case errc::not_preorder: return "NotPreorder";
        case errc::identity_domain_not_full: return "IdentityDomainNotFull";
        case errc::domain_not_open: return "DomainNotOpen";
        case errc::not_homeomorphism: return "NotHomeomorphism";
        case errc::composition_law_fails: return "CompositionLawFails";
        case errc::evaluation_not_continuous: return "EvaluationNotContinuous";
        case errc::not_open_subset: return "NotOpenSubset";
        case errc::not_global: return "NotGlobal";
        case errc::gx_not_all_of_y: return "GXNotAllOfY";
        case errc::bad_metric: return "BadMetric";
        case errc::carrier_mismatch: return "CarrierMismatch";
        case errc::not_metrizable: return "NotMetrizable";
        case errc::not_directed: return "NotDirected";
        case errc::not_nested: return "NotNested";
        case errc::hypotheses_not_met: return "HypothesesNotMet";
        case errc::parse_error: return "ParseError";
        case errc::unknown_fixture: return "UnknownFixture";
    }
    return "Unknown";
}

} // namespace pact
