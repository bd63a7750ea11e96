// Brute-force verification layer: quiver representations over a small
// prime field, projective covers and kernels by rank/nullspace linear
// algebra. Builds its modules straight from the presentation (paths),
// independent of the string-combinatorics implementation it checks.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gentle/dimension.hpp"
#include "gentle/presentation.hpp"
#include "gentle/strings.hpp"

namespace gentle {

// Dense matrix over F_p, row-major. Row vectors act on the left:
// a module element x maps to x*T under an arrow.
struct FpMat {
    std::uint32_t rows = 0, cols = 0;
    std::vector<std::uint8_t> a;

    FpMat() = default;
    FpMat(std::uint32_t r, std::uint32_t c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}
    std::uint8_t& at(std::uint32_t i, std::uint32_t j) { return a[std::size_t(i) * cols + j]; }
    std::uint8_t at(std::uint32_t i, std::uint32_t j) const {
        return a[std::size_t(i) * cols + j];
    }
};

FpMat fp_mul(const FpMat& x, const FpMat& y, int p);
std::uint32_t fp_rank(FpMat m, int p);
// Basis (as rows) of {x : x*m == 0}.
FpMat fp_left_nullspace(const FpMat& m, int p);
// Solves x*b == c for one x; b must have full row rank and c must lie
// in the row space. Throws std::logic_error otherwise.
std::vector<std::uint8_t> fp_solve_row(const FpMat& b, const std::vector<std::uint8_t>& c, int p);

struct LinearRep {
    int p = 2;
    std::vector<std::uint32_t> dims; // per vertex
    std::vector<FpMat> mats;         // per arrow, dims[s(a)] x dims[t(a)]

    std::uint32_t total_dim() const;
    std::map<VertexId, std::uint32_t> dim_vector() const;
};

LinearRep rep_of_string(const GentlePresentation& A, const StringWord& w, int p = 2);
LinearRep rep_of_simple(const GentlePresentation& A, VertexId v, int p = 2);
// e_v A, basis the relation-free paths out of v.
LinearRep rep_of_projective(const GentlePresentation& A, VertexId v, int p = 2);
// D(A e_v), basis dual to the relation-free paths into v.
LinearRep rep_of_injective(const GentlePresentation& A, VertexId v, int p = 2);

// All relation products vanish and shapes line up.
bool satisfies_relations(const GentlePresentation& A, const LinearRep& m);

// Number of relation-free paths, trivial ones included (= dim_k A).
std::uint64_t algebra_dimension(const GentlePresentation& A);

struct OracleSyzygyStep {
    std::map<VertexId, std::uint32_t> cover_tops; // multiplicity of P(v)
    std::map<VertexId, std::uint32_t> kernel_dims;
};

// One projective-cover step: cover of the top, explicit cover matrix,
// kernel by nullspace.
OracleSyzygyStep syzygy_step(const GentlePresentation& A, LinearRep& m);

Dim pd_linear(const GentlePresentation& A, LinearRep m, std::uint32_t cap);

struct OracleCheck {
    std::string name;
    std::string combinatorial;
    std::string oracle;
    bool agree = false;
};

struct OracleReport {
    std::vector<OracleCheck> checks;
    bool all_agree() const;
};

// Verifies, per vertex, the combinatorial pd of S(v) and I(v) against
// the linear-algebra route, plus the global identities (both gl.dim
// formulas, self-injective dimension and its opposite, Gorenstein
// counts, thread/marked-point/polygon counts) and the stepwise
// agreement of the string syzygy with the oracle kernel.
OracleReport check_equalities(const GentlePresentation& A, int p = 2,
                              std::uint32_t cap = 0 /* 0 = auto */);

} // namespace gentle
