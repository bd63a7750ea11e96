#include "gentle/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gentle {

std::string AGInvariant::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) s += ", ";
        s += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
    }
    return s + "]";
}

namespace {

struct WalkIndex {
    std::vector<Thread> permitted;
    std::vector<Thread> forbidden; // finite only
    std::vector<std::vector<ArrowId>> cycles;
    std::map<ArrowId, std::size_t> perm_by_first;
    std::map<ArrowId, std::size_t> forb_by_last;
    std::map<VertexId, std::size_t> triv_perm_at;
    std::map<VertexId, std::size_t> triv_forb_at;
};

WalkIndex build_index(const GentlePresentation& A) {
    WalkIndex ix;
    ThreadSet ts = all_threads(A);
    ix.permitted = std::move(ts.permitted);
    ix.forbidden = std::move(ts.forbidden_finite);
    ix.cycles = std::move(ts.infinite_cycles);
    for (std::size_t i = 0; i < ix.permitted.size(); ++i) {
        const Thread& t = ix.permitted[i];
        if (t.is_trivial())
            ix.triv_perm_at[t.trivial_at] = i;
        else
            ix.perm_by_first[t.arrows.front()] = i;
    }
    for (std::size_t i = 0; i < ix.forbidden.size(); ++i) {
        const Thread& t = ix.forbidden[i];
        if (t.is_trivial())
            ix.triv_forb_at[t.trivial_at] = i;
        else
            ix.forb_by_last[t.arrows.back()] = i;
    }
    return ix;
}

[[noreturn]] void walk_error(const std::string& what) {
    throw std::logic_error("pairing walk: no unique successor (" + what + ")");
}

// Step 2: the forbidden thread paired after a permitted thread.
std::size_t pair_forbidden(const GentlePresentation& A, const WalkIndex& ix, const Thread& H) {
    const VertexId v = H.target(A);
    if (!H.is_trivial()) {
        const ArrowId x = H.arrows.back();
        for (ArrowId y : A.in_arrows(v))
            if (y != x)
                if (auto it = ix.forb_by_last.find(y); it != ix.forb_by_last.end())
                    return it->second;
        if (auto it = ix.triv_forb_at.find(v); it != ix.triv_forb_at.end()) return it->second;
        walk_error("after nontrivial permitted thread at vertex " + A.vertex_name(v));
    }
    for (ArrowId y : A.in_arrows(v))
        if (auto it = ix.forb_by_last.find(y); it != ix.forb_by_last.end()) return it->second;
    if (auto it = ix.triv_forb_at.find(v); it != ix.triv_forb_at.end()) return it->second;
    walk_error("after trivial permitted thread at vertex " + A.vertex_name(v));
}

// Step 3: the permitted thread paired after a forbidden thread.
std::size_t pair_permitted(const GentlePresentation& A, const WalkIndex& ix, const Thread& F) {
    const VertexId w = F.source(A);
    if (!F.is_trivial()) {
        const ArrowId z = F.arrows.front();
        for (ArrowId d : A.out_arrows(w))
            if (d != z)
                if (auto it = ix.perm_by_first.find(d); it != ix.perm_by_first.end())
                    return it->second;
        if (auto it = ix.triv_perm_at.find(w); it != ix.triv_perm_at.end()) return it->second;
        walk_error("after nontrivial forbidden thread at vertex " + A.vertex_name(w));
    }
    for (ArrowId d : A.out_arrows(w))
        if (auto it = ix.perm_by_first.find(d); it != ix.perm_by_first.end()) return it->second;
    if (auto it = ix.triv_perm_at.find(w); it != ix.triv_perm_at.end()) return it->second;
    walk_error("after trivial forbidden thread at vertex " + A.vertex_name(w));
}

struct WalkResult {
    // One entry per marked boundary component, in traversal order.
    struct Component {
        std::vector<std::size_t> permitted;
        std::vector<std::size_t> forbidden;
    };
    std::vector<Component> components;
    WalkIndex ix;
};

WalkResult run_walk(const GentlePresentation& A, const std::vector<std::size_t>& start_order) {
    WalkResult res;
    res.ix = build_index(A);
    const auto& ix = res.ix;

    std::vector<char> perm_used(ix.permitted.size(), 0);
    std::vector<char> forb_used(ix.forbidden.size(), 0);

    for (std::size_t start : start_order) {
        if (start >= ix.permitted.size() || perm_used[start]) continue;
        WalkResult::Component comp;
        std::size_t h = start;
        do {
            perm_used[h] = 1;
            comp.permitted.push_back(h);
            const std::size_t f = pair_forbidden(A, ix, ix.permitted[h]);
            if (forb_used[f]) walk_error("forbidden thread consumed twice");
            forb_used[f] = 1;
            comp.forbidden.push_back(f);
            h = pair_permitted(A, ix, ix.forbidden[f]);
        } while (h != start);
        res.components.push_back(std::move(comp));
    }
    for (char u : perm_used)
        if (!u) walk_error("permitted thread never consumed");
    for (char u : forb_used)
        if (!u) walk_error("finite forbidden thread never consumed");
    return res;
}

std::vector<std::size_t> default_order(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

} // namespace

AGInvariant ag_invariant(const GentlePresentation& A,
                         const std::vector<std::size_t>& start_order) {
    WalkResult walk = run_walk(A, start_order);
    AGInvariant phi;
    for (const auto& comp : walk.components) {
        std::uint32_t m = static_cast<std::uint32_t>(comp.permitted.size());
        std::uint32_t n = 0;
        for (std::size_t f : comp.forbidden)
            n += static_cast<std::uint32_t>(walk.ix.forbidden[f].length());
        phi.pairs.push_back({m, n});
    }
    for (const auto& cyc : walk.ix.cycles)
        phi.pairs.push_back({0, static_cast<std::uint32_t>(cyc.size())});
    std::sort(phi.pairs.begin(), phi.pairs.end(), [](auto a, auto b) {
        return a.first != b.first ? a.first > b.first : a.second > b.second;
    });
    return phi;
}

AGInvariant ag_invariant(const GentlePresentation& A) {
    return ag_invariant(A, default_order(permitted_threads(A).size()));
}

SurfaceModel surface_model(const GentlePresentation& A) {
    WalkResult walk = run_walk(A, default_order(permitted_threads(A).size()));
    SurfaceModel model;
    model.arc_count = A.vertex_count();

    for (const auto& comp : walk.components) {
        BoundaryComponent bc;
        bc.id = model.boundary_components.size();
        bc.marked_point_count = comp.permitted.size();
        for (std::size_t p : comp.permitted) bc.marked_points.push_back(walk.ix.permitted[p]);
        for (std::size_t f : comp.forbidden) {
            const Thread& t = walk.ix.forbidden[f];
            ElementaryPolygon poly;
            poly.arc_sides = t.vertices(A);
            poly.c_number = Dim(static_cast<std::uint32_t>(t.length() + 1));
            poly.source_thread = t;
            poly.boundary_component = bc.id;
            bc.polygon_indices.push_back(model.polygons.size());
            model.polygons.push_back(std::move(poly));
        }
        model.marked_point_total += bc.marked_point_count;
        model.boundary_components.push_back(std::move(bc));
    }
    for (const auto& cyc : walk.ix.cycles) {
        BoundaryComponent bc;
        bc.id = model.boundary_components.size();
        bc.unmarked = true;
        ElementaryPolygon poly;
        for (ArrowId a : cyc) poly.arc_sides.push_back(A.source(a));
        poly.c_number = Dim::infinity();
        poly.infinite = true;
        poly.source_thread.kind = ThreadKind::Forbidden;
        poly.source_thread.arrows = cyc;
        poly.boundary_component = bc.id;
        bc.polygon_indices.push_back(model.polygons.size());
        model.polygons.push_back(std::move(poly));
        model.boundary_components.push_back(std::move(bc));
    }
    return model;
}

std::vector<Dim> c_numbers(const GentlePresentation& A) {
    std::vector<Dim> cs;
    for (const auto& p : surface_model(A).polygons) cs.push_back(p.c_number);
    return cs;
}

SurfaceStats surface_stats(const GentlePresentation& A) {
    SurfaceStats st;
    if (A.arrow_count() == 0) {
        // Disk with one marked point and one arc; the cell-complex count
        // below degenerates on it, so it is reported directly.
        st.boundary_count = 1;
        st.marked_total = 1;
        st.arc_count = 1;
        st.polygon_count = 1;
        st.genus = 0;
        return st;
    }
    SurfaceModel model = surface_model(A);
    st.boundary_count = model.boundary_components.size();
    st.marked_total = model.marked_point_total;
    st.arc_count = model.arc_count;
    st.polygon_count = model.polygons.size();

    std::int64_t unmarked = 0;
    std::int64_t finite_polys = 0;
    for (const auto& bc : model.boundary_components)
        if (bc.unmarked) ++unmarked;
    for (const auto& p : model.polygons)
        if (!p.infinite) ++finite_polys;

    const std::int64_t V = static_cast<std::int64_t>(st.marked_total) + unmarked;
    const std::int64_t E = static_cast<std::int64_t>(st.arc_count) +
                           static_cast<std::int64_t>(st.marked_total) + unmarked;
    const std::int64_t F = finite_polys; // an infinity-polygon is an annular face
    const std::int64_t chi = V - E + F;
    const std::int64_t twice_genus = 2 - static_cast<std::int64_t>(st.boundary_count) - chi;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw std::logic_error("surface bookkeeping produced a bad genus");
    st.genus = twice_genus / 2;
    return st;
}

} // namespace gentle
