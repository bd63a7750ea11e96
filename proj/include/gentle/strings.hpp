// String words (reduced relation-free walks) standing for string
// modules: tops, socles, projective/injective strings, projective
// covers and syzygies of formal direct sums.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gentle/dimension.hpp"
#include "gentle/presentation.hpp"

namespace gentle {

struct Letter {
    ArrowId arrow;
    bool inverse; // direct: v(i-1) -> v(i); inverse: v(i) -> v(i-1)

    friend bool operator==(Letter, Letter) = default;
    friend auto operator<=>(const Letter& a, const Letter& b) {
        if (auto c = a.arrow <=> b.arrow; c != 0) return c;
        return a.inverse <=> b.inverse;
    }
};

// A reduced relation-free walk, identified with its formal reverse and
// stored in the lexicographically smaller of the two renderings.
class StringWord {
public:
    // The simple string 1_v.
    static StringWord simple(VertexId v);
    // From letters; base ignored unless letters is empty. Canonicalizes.
    static StringWord make(const GentlePresentation& A, std::vector<Letter> letters,
                           VertexId base = kNone);

    bool is_simple() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }
    std::size_t position_count() const { return letters_.size() + 1; }

    const std::vector<Letter>& letters() const { return letters_; }
    VertexId base_vertex() const { return base_; } // for simple strings

    // Vertex at walk position i (0..length()).
    VertexId vertex_at(const GentlePresentation& A, std::size_t i) const;
    std::vector<VertexId> position_vertices(const GentlePresentation& A) const;

    std::map<VertexId, std::uint32_t> dim_vector(const GentlePresentation& A) const;
    std::uint32_t total_dim() const { return static_cast<std::uint32_t>(position_count()); }

    std::string str(const GentlePresentation& A) const;

    friend bool operator==(const StringWord&, const StringWord&) = default;
    friend auto operator<=>(const StringWord& a, const StringWord& b) {
        if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
        return a.base_ <=> b.base_;
    }

private:
    std::vector<Letter> letters_;
    VertexId base_ = kNone;
};

// Formal direct sum; the empty multiset is the zero module.
struct StringSum {
    std::vector<StringWord> summands; // kept sorted for canonical identity

    static StringSum zero() { return {}; }
    static StringSum of(StringWord w);
    void add(StringWord w);
    bool is_zero() const { return summands.empty(); }

    std::map<VertexId, std::uint32_t> dim_vector(const GentlePresentation& A) const;
    std::uint32_t total_dim() const;
    std::string str(const GentlePresentation& A) const;

    friend bool operator==(const StringSum&, const StringSum&) = default;
    friend auto operator<=>(const StringSum& a, const StringSum& b) {
        return a.summands <=> b.summands;
    }
};

// Reduced and relation-free.
bool is_valid_string(const GentlePresentation& A, const std::vector<Letter>& letters);
bool is_valid_string(const GentlePresentation& A, const StringWord& w);

// Walk syntax "a b- c": arrow names, '-' suffix for a formal inverse.
// Throws std::invalid_argument on unknown arrow names.
StringWord parse_string(const GentlePresentation& A, const std::string& text);

// The string of the indecomposable projective P(v): the two maximal
// permitted paths out of v, one inverted, joined at v.
StringWord string_of_projective(const GentlePresentation& A, VertexId v);

// Dual: built from the maximal permitted paths ending at v.
StringWord string_of_injective(const GentlePresentation& A, VertexId v);

// Multisets of vertices (sorted).
std::vector<VertexId> top(const GentlePresentation& A, const StringWord& w);
std::vector<VertexId> socle(const GentlePresentation& A, const StringWord& w);
std::vector<VertexId> top(const GentlePresentation& A, const StringSum& m);

struct CoverResult {
    StringSum cover;  // direct sum of projective strings
    StringSum syzygy; // kernel of the canonical surjection
};

// Projective cover P(top M) -> M together with its kernel, computed by
// the valley-tail construction. dim P = dim M + dim Omega.
CoverResult projective_cover(const GentlePresentation& A, const StringSum& m);

// Iterated syzygies; infinity when still nonzero after `cap` steps.
// Sound once cap exceeds the self-injective dimension.
Dim pd_string(const GentlePresentation& A, const StringSum& m, std::uint32_t cap);

} // namespace gentle
