// Permitted and forbidden threads: the maximal non-relation paths,
// the maximal relation chains, and the trivial threads at low-degree
// vertices. Dual skeleton of the surface model.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gentle/presentation.hpp"

namespace gentle {

enum class ThreadKind { Permitted, Forbidden };

struct Thread {
    ThreadKind kind;
    std::vector<ArrowId> arrows; // empty for a trivial thread
    VertexId trivial_at = kNone; // set iff arrows is empty

    bool is_trivial() const { return arrows.empty(); }
    std::size_t length() const { return arrows.size(); }

    VertexId source(const GentlePresentation& A) const {
        return is_trivial() ? trivial_at : A.source(arrows.front());
    }
    VertexId target(const GentlePresentation& A) const {
        return is_trivial() ? trivial_at : A.target(arrows.back());
    }
    // Vertices visited in order, length()+1 of them (1 when trivial).
    std::vector<VertexId> vertices(const GentlePresentation& A) const;

    std::string str(const GentlePresentation& A) const;
};

struct ThreadSet {
    std::vector<Thread> permitted;
    std::vector<Thread> forbidden_finite;
    std::vector<std::vector<ArrowId>> infinite_cycles; // full-relation cycles
};

// All permitted threads, nontrivial then trivial, each deterministic:
// nontrivial ordered by least contained arrow index, trivial by vertex.
std::vector<Thread> permitted_threads(const GentlePresentation& A);

// Finite forbidden threads (same ordering) and, separately, the
// full-relation cycles standing for infinite forbidden threads.
ThreadSet forbidden_threads(const GentlePresentation& A);

ThreadSet all_threads(const GentlePresentation& A);

// Trivial-thread existence rules (degree bounds plus the composition
// test when both an in- and an out-arrow are present).
bool has_trivial_permitted(const GentlePresentation& A, VertexId v);
bool has_trivial_forbidden(const GentlePresentation& A, VertexId v);

} // namespace gentle
