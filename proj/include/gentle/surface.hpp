// The AG-invariant pairing walk and the combinatorial marked-ribbon-
// surface model it induces: boundary components, marked points,
// elementary polygons and their consecutive-arcs numbers.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gentle/dimension.hpp"
#include "gentle/presentation.hpp"
#include "gentle/threads.hpp"

namespace gentle {

struct AGInvariant {
    // Sorted descending by m, then by n. One (0, l) entry per
    // full-relation cycle of length l.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

    bool operator==(const AGInvariant&) const = default;
    std::string str() const;
};

struct ElementaryPolygon {
    std::vector<VertexId> arc_sides; // thread vertices, with multiplicity
    Dim c_number;                    // sides count; infinity for an infinity-polygon
    Thread source_thread;            // the forbidden thread it is dual to
    bool infinite = false;           // unmarked boundary component polygon
    std::size_t boundary_component = 0;
};

struct BoundaryComponent {
    std::size_t id = 0;
    std::size_t marked_point_count = 0;       // m_t
    std::vector<std::size_t> polygon_indices; // into SurfaceModel::polygons
    std::vector<Thread> marked_points;        // the permitted threads, walk order
    bool unmarked = false;
};

struct SurfaceModel {
    std::vector<BoundaryComponent> boundary_components;
    std::vector<ElementaryPolygon> polygons;
    std::size_t marked_point_total = 0;
    std::size_t arc_count = 0; // one arc per vertex of Q
};

struct SurfaceStats {
    std::size_t boundary_count = 0;
    std::size_t marked_total = 0;
    std::size_t arc_count = 0;
    std::size_t polygon_count = 0;
    std::int64_t genus = 0;
};

// The pairing walk. `start_order`, when given, is a permutation of the
// permitted-thread indices used to pick the next unconsumed starting
// thread; the resulting pair multiset is independent of it.
AGInvariant ag_invariant(const GentlePresentation& A);
AGInvariant ag_invariant(const GentlePresentation& A,
                         const std::vector<std::size_t>& start_order);

SurfaceModel surface_model(const GentlePresentation& A);

// Consecutive-arcs numbers, one per polygon, same order as
// surface_model(A).polygons.
std::vector<Dim> c_numbers(const GentlePresentation& A);

SurfaceStats surface_stats(const GentlePresentation& A);

} // namespace gentle
