#include "gentle/threads.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gentle {

std::vector<VertexId> Thread::vertices(const GentlePresentation& A) const {
    if (is_trivial()) return {trivial_at};
    std::vector<VertexId> vs;
    vs.push_back(A.source(arrows.front()));
    for (ArrowId a : arrows) vs.push_back(A.target(a));
    return vs;
}

std::string Thread::str(const GentlePresentation& A) const {
    if (is_trivial()) return "e(" + A.vertex_name(trivial_at) + ")";
    std::string s;
    for (ArrowId a : arrows) s += (s.empty() ? "" : " ") + A.arrow_name(a);
    return s;
}

bool has_trivial_permitted(const GentlePresentation& A, VertexId v) {
    const auto& in = A.in_arrows(v);
    const auto& out = A.out_arrows(v);
    if (in.size() > 1 || out.size() > 1) return false;
    if (in.size() == 1 && out.size() == 1 && A.in_ideal(in[0], out[0])) return false;
    return true;
}

bool has_trivial_forbidden(const GentlePresentation& A, VertexId v) {
    const auto& in = A.in_arrows(v);
    const auto& out = A.out_arrows(v);
    if (in.size() > 1 || out.size() > 1) return false;
    if (in.size() == 1 && out.size() == 1 && !A.in_ideal(in[0], out[0])) return false;
    return true;
}

namespace {

// Walks maximal chains of `next`, starting from arrows with no
// predecessor under the matching `prev`. Arrows lying on cycles of the
// map never start a chain and are skipped here.
std::vector<Thread> maximal_chains(const GentlePresentation& A, ThreadKind kind,
                                   ArrowId (GentlePresentation::*next)(ArrowId) const,
                                   ArrowId (GentlePresentation::*prev)(ArrowId) const) {
    std::vector<Thread> out;
    for (std::size_t i = 0; i < A.arrow_count(); ++i) {
        const ArrowId a = static_cast<ArrowId>(i);
        if ((A.*prev)(a) != kNone) continue;
        Thread t;
        t.kind = kind;
        for (ArrowId cur = a; cur != kNone; cur = (A.*next)(cur)) t.arrows.push_back(cur);
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const Thread& x, const Thread& y) {
        return *std::min_element(x.arrows.begin(), x.arrows.end()) <
               *std::min_element(y.arrows.begin(), y.arrows.end());
    });
    return out;
}

void append_trivial(const GentlePresentation& A, ThreadKind kind,
                    bool (*pred)(const GentlePresentation&, VertexId),
                    std::vector<Thread>& out) {
    for (std::size_t v = 0; v < A.vertex_count(); ++v)
        if (pred(A, static_cast<VertexId>(v))) {
            Thread t;
            t.kind = kind;
            t.trivial_at = static_cast<VertexId>(v);
            out.push_back(std::move(t));
        }
}

} // namespace

std::vector<Thread> permitted_threads(const GentlePresentation& A) {
    auto out = maximal_chains(A, ThreadKind::Permitted, &GentlePresentation::next_permitted,
                              &GentlePresentation::prev_permitted);
    append_trivial(A, ThreadKind::Permitted, &has_trivial_permitted, out);
    return out;
}

ThreadSet forbidden_threads(const GentlePresentation& A) {
    ThreadSet ts;
    ts.infinite_cycles = full_relation_cycles(A);
    std::set<ArrowId> on_cycle;
    for (const auto& c : ts.infinite_cycles) on_cycle.insert(c.begin(), c.end());

    ts.forbidden_finite = maximal_chains(A, ThreadKind::Forbidden,
                                         &GentlePresentation::next_in_ideal,
                                         &GentlePresentation::prev_in_ideal);
    // A chain started off-cycle can never run into a cycle: an arrow on
    // a full-relation cycle already has its relation predecessor there.
    for (const auto& t : ts.forbidden_finite)
        for (ArrowId a : t.arrows)
            if (on_cycle.count(a)) throw std::logic_error("finite forbidden thread meets a cycle");

    append_trivial(A, ThreadKind::Forbidden, &has_trivial_forbidden, ts.forbidden_finite);
    return ts;
}

ThreadSet all_threads(const GentlePresentation& A) {
    ThreadSet ts = forbidden_threads(A);
    ts.permitted = permitted_threads(A);
    return ts;
}

} // namespace gentle
