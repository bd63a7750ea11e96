// Global dimension, self-injective dimension, projective dimensions of
// simples and injectives, resolution ladders, Gorenstein-projective
// enumeration and the AG-invariant counting formulas.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gentle/dimension.hpp"
#include "gentle/presentation.hpp"
#include "gentle/strings.hpp"
#include "gentle/surface.hpp"

namespace gentle {

struct ResolutionLadder {
    // degrees[k] = vertices v with P(v) a summand of the k-th projective
    // term (sorted, with multiplicity). degrees[0] covers the module's top.
    std::vector<std::vector<VertexId>> degrees;
    bool terminates = false;
    // For non-terminating resolutions: the repeating block of degree
    // multisets, starting at first_period_degree.
    std::optional<std::vector<std::vector<VertexId>>> period;
    std::size_t first_period_degree = 0;
};

struct GorensteinReport {
    std::vector<VertexId> projectives;     // one P(v) per vertex
    std::vector<StringWord> nonprojectives;
    std::uint64_t count_by_formula = 0;    // sum of l * phi(0, l)
};

Dim gldim_via_polygons(const GentlePresentation& A);
Dim gldim_via_threads(const GentlePresentation& A);

// max of forbidden_tail over the outgoing arrows; 0 at a sink.
Dim pd_simple(const GentlePresentation& A, VertexId v);

Dim injdim(const GentlePresentation& A);

Dim pd_injective(const GentlePresentation& A, VertexId v);

// Default syzygy cap that certifies infinity verdicts.
std::uint32_t default_cap(const GentlePresentation& A);

ResolutionLadder resolution_of_simple(const GentlePresentation& A, VertexId v,
                                      std::size_t max_terms);
ResolutionLadder resolution_of_injective(const GentlePresentation& A, VertexId v,
                                         std::size_t max_terms);
ResolutionLadder resolution_of(const GentlePresentation& A, const StringSum& m,
                               std::size_t max_terms);

GorensteinReport gorenstein_projectives(const GentlePresentation& A);
std::uint64_t gp_count_via_ag(const GentlePresentation& A);
bool is_gldim_finite_via_ag(const GentlePresentation& A);

// True when Q is a single oriented cycle with full relations.
bool is_full_relation_cycle_quiver(const GentlePresentation& A);

} // namespace gentle
