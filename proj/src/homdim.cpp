#include "gentle/homdim.hpp"

#include <algorithm>
#include <map>

namespace gentle {

Dim gldim_via_polygons(const GentlePresentation& A) {
    Dim best(0);
    for (const auto& poly : surface_model(A).polygons) {
        if (poly.c_number.is_infinite()) return Dim::infinity();
        best = max(best, Dim(poly.c_number.value() - 1));
    }
    return best;
}

Dim gldim_via_threads(const GentlePresentation& A) {
    ThreadSet ts = forbidden_threads(A);
    if (!ts.infinite_cycles.empty()) return Dim::infinity();
    Dim best(0);
    for (const auto& t : ts.forbidden_finite)
        best = max(best, Dim(static_cast<std::uint32_t>(t.length())));
    return best;
}

Dim pd_simple(const GentlePresentation& A, VertexId v) {
    Dim best(0);
    for (ArrowId a : A.out_arrows(v)) best = max(best, A.forbidden_tail(a));
    return best;
}

bool is_full_relation_cycle_quiver(const GentlePresentation& A) {
    if (A.arrow_count() != A.vertex_count() || A.arrow_count() == 0) return false;
    auto cycles = full_relation_cycles(A);
    return cycles.size() == 1 && cycles[0].size() == A.arrow_count();
}

Dim injdim(const GentlePresentation& A) {
    if (A.arrow_count() == 0) return Dim(0);             // the base field
    if (is_full_relation_cycle_quiver(A)) return Dim(0); // self-injective Nakayama
    ThreadSet ts = forbidden_threads(A);
    Dim best(1);
    for (const auto& t : ts.forbidden_finite)
        best = max(best, Dim(static_cast<std::uint32_t>(t.length())));
    return best;
}

std::uint32_t default_cap(const GentlePresentation& A) {
    return injdim(A).value() + 1; // injdim of a gentle algebra is finite
}

Dim pd_injective(const GentlePresentation& A, VertexId v) {
    return pd_string(A, StringSum::of(string_of_injective(A, v)), default_cap(A));
}

ResolutionLadder resolution_of(const GentlePresentation& A, const StringSum& m,
                               std::size_t max_terms) {
    ResolutionLadder ladder;
    std::map<StringSum, std::size_t> seen; // syzygy state -> degree index
    StringSum cur = m;
    for (std::size_t k = 0; k < max_terms; ++k) {
        if (cur.is_zero()) {
            ladder.terminates = true;
            return ladder;
        }
        auto [it, fresh] = seen.insert({cur, k});
        if (!fresh) {
            ladder.first_period_degree = it->second;
            ladder.period = std::vector<std::vector<VertexId>>(
                ladder.degrees.begin() + static_cast<std::ptrdiff_t>(it->second),
                ladder.degrees.begin() + static_cast<std::ptrdiff_t>(k));
            return ladder;
        }
        CoverResult cov = projective_cover(A, cur);
        ladder.degrees.push_back(top(A, cur));
        cur = std::move(cov.syzygy);
    }
    ladder.terminates = cur.is_zero();
    return ladder;
}

ResolutionLadder resolution_of_simple(const GentlePresentation& A, VertexId v,
                                      std::size_t max_terms) {
    return resolution_of(A, StringSum::of(StringWord::simple(v)), max_terms);
}

ResolutionLadder resolution_of_injective(const GentlePresentation& A, VertexId v,
                                         std::size_t max_terms) {
    return resolution_of(A, StringSum::of(string_of_injective(A, v)), max_terms);
}

GorensteinReport gorenstein_projectives(const GentlePresentation& A) {
    GorensteinReport rep;
    for (std::size_t v = 0; v < A.vertex_count(); ++v)
        rep.projectives.push_back(static_cast<VertexId>(v));
    for (const auto& cyc : full_relation_cycles(A)) {
        for (ArrowId a : cyc) {
            // alpha*A: the maximal permitted path out of t(alpha), entered
            // along the unique non-relation continuation of alpha.
            const ArrowId cont = A.next_permitted(a);
            if (cont == kNone) {
                rep.nonprojectives.push_back(StringWord::simple(A.target(a)));
            } else {
                std::vector<Letter> ls;
                for (ArrowId b : A.permitted_chain_from(cont)) ls.push_back({b, false});
                rep.nonprojectives.push_back(StringWord::make(A, std::move(ls)));
            }
        }
    }
    rep.count_by_formula = gp_count_via_ag(A);
    return rep;
}

std::uint64_t gp_count_via_ag(const GentlePresentation& A) {
    std::uint64_t total = 0;
    for (auto [m, n] : ag_invariant(A).pairs)
        if (m == 0) total += n;
    return total;
}

bool is_gldim_finite_via_ag(const GentlePresentation& A) {
    for (auto [m, n] : ag_invariant(A).pairs)
        if (m == 0) return false;
    return true;
}

} // namespace gentle
