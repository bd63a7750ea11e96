// Quivers with length-2 relations, gentleness validation and the
// composition tables everything downstream runs on.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gentle/dimension.hpp"

namespace gentle {

using VertexId = std::int32_t; // index into Quiver::vertices (input order)
using ArrowId = std::int32_t;  // index into Quiver::arrows (input order)

inline constexpr std::int32_t kNone = -1;

struct Arrow {
    std::string name;
    VertexId source = kNone;
    VertexId target = kNone;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
};

// A length-2 path first*second with t(first) == s(second).
struct Relation {
    ArrowId first = kNone;
    ArrowId second = kNone;
};

// Raw, unvalidated input as read from a file or built programmatically.
struct RawPresentation {
    Quiver quiver;
    std::vector<Relation> relations;
};

enum class ViolationKind {
    OutDegree,           // more than two arrows leave a vertex
    InDegree,            // more than two arrows enter a vertex
    DoubleRelationLeft,  // two relations a*b, a*b' share the first arrow
    DoubleRelationRight, // two relations a*b, a'*b share the second arrow
    DoubleNonRelationLeft,  // arrow has two composable non-relation successors
    DoubleNonRelationRight, // arrow has two composable non-relation predecessors
    RelationFreeCycle,   // oriented cycle avoiding I: infinite dimensional
    Disconnected,        // underlying graph is not connected
    DuplicateRelation,
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

struct ValidationResult;

class GentlePresentation {
public:
    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }

    std::size_t vertex_count() const { return quiver_.vertices.size(); }
    std::size_t arrow_count() const { return quiver_.arrows.size(); }

    const std::string& vertex_name(VertexId v) const { return quiver_.vertices[v]; }
    const std::string& arrow_name(ArrowId a) const { return quiver_.arrows[a].name; }
    VertexId source(ArrowId a) const { return quiver_.arrows[a].source; }
    VertexId target(ArrowId a) const { return quiver_.arrows[a].target; }

    std::optional<VertexId> vertex_index(const std::string& name) const;
    std::optional<ArrowId> arrow_index(const std::string& name) const;

    const std::vector<ArrowId>& out_arrows(VertexId v) const { return out_[v]; }
    const std::vector<ArrowId>& in_arrows(VertexId v) const { return in_[v]; }

    bool in_ideal(ArrowId a, ArrowId b) const; // is a*b a relation

    // Unique continuations (kNone when absent). Gentleness makes each
    // of the four partial maps single valued.
    ArrowId next_in_ideal(ArrowId a) const { return next_rel_[a]; }
    ArrowId next_permitted(ArrowId a) const { return next_perm_[a]; }
    ArrowId prev_in_ideal(ArrowId a) const { return prev_rel_[a]; }
    ArrowId prev_permitted(ArrowId a) const { return prev_perm_[a]; }

    // Maximal permitted path starting with `a` (a, then the unique
    // non-relation continuation, ...). Never cycles on a valid input.
    std::vector<ArrowId> permitted_chain_from(ArrowId a) const;

    // Length of the maximal forbidden path starting with `a`; infinite
    // exactly when the relation chain enters a full-relation cycle.
    Dim forbidden_tail(ArrowId a) const;

    friend ValidationResult validate_gentle(const RawPresentation& raw);

private:
    Quiver quiver_;
    std::vector<Relation> relations_;
    std::vector<std::vector<ArrowId>> out_, in_;
    std::vector<ArrowId> next_rel_, next_perm_, prev_rel_, prev_perm_;
};

// Structural problems that make the raw input unusable before
// gentleness is even considered (parse-level per the file format).
struct StructuralError {
    std::string message;
};

struct ValidationResult {
    std::optional<GentlePresentation> presentation; // set iff violations empty
    std::vector<Violation> violations;
    bool ok() const { return presentation.has_value(); }
};

// Checks ids, endpoints and composability. Empty result means sound.
std::vector<StructuralError> structural_errors(const RawPresentation& raw);

// Full gentleness check (degree bounds, unique relation / non-relation
// continuations, no relation-free oriented cycle, connectivity).
// Requires structural_errors(raw) to be empty.
ValidationResult validate_gentle(const RawPresentation& raw);

// Arrows reversed, relations reversed pairwise; an involution.
RawPresentation opposite(const GentlePresentation& A);

// Every oriented cycle whose consecutive compositions (cyclically) all
// lie in I. Each cycle reported once, rotated so the least arrow index
// comes first; cycles sorted by that least index.
std::vector<std::vector<ArrowId>> full_relation_cycles(const GentlePresentation& A);

} // namespace gentle
