#include "gentle/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gentle/homdim.hpp"
#include "gentle/threads.hpp"

namespace gentle {

namespace {

int norm(int x, int p) {
    int r = x % p;
    return r < 0 ? r + p : r;
}

// Row-reduce in place; returns pivot columns.
std::vector<std::uint32_t> rref(FpMat& m, int p) {
    std::vector<std::uint32_t> pivots;
    std::uint32_t row = 0;
    for (std::uint32_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::uint32_t sel = row;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        for (std::uint32_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        // scale pivot to 1
        int inv = 1;
        for (int k = 1; k < p; ++k)
            if (norm(k * m.at(row, col), p) == 1) inv = k;
        for (std::uint32_t j = 0; j < m.cols; ++j)
            m.at(row, j) = static_cast<std::uint8_t>(norm(m.at(row, j) * inv, p));
        for (std::uint32_t i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            const int f = m.at(i, col);
            for (std::uint32_t j = 0; j < m.cols; ++j)
                m.at(i, j) = static_cast<std::uint8_t>(norm(m.at(i, j) - f * m.at(row, j), p));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

FpMat transpose(const FpMat& m) {
    FpMat t(m.cols, m.rows);
    for (std::uint32_t i = 0; i < m.rows; ++i)
        for (std::uint32_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

} // namespace

FpMat fp_mul(const FpMat& x, const FpMat& y, int p) {
    if (x.cols != y.rows) throw std::logic_error("fp_mul shape mismatch");
    FpMat z(x.rows, y.cols);
    for (std::uint32_t i = 0; i < x.rows; ++i)
        for (std::uint32_t k = 0; k < x.cols; ++k) {
            const int xi = x.at(i, k);
            if (!xi) continue;
            for (std::uint32_t j = 0; j < y.cols; ++j)
                z.at(i, j) = static_cast<std::uint8_t>(norm(z.at(i, j) + xi * y.at(k, j), p));
        }
    return z;
}

std::uint32_t fp_rank(FpMat m, int p) {
    return static_cast<std::uint32_t>(rref(m, p).size());
}

FpMat fp_left_nullspace(const FpMat& m, int p) {
    // x*m == 0  <=>  m^T x^T == 0; read the right nullspace of m^T.
    FpMat t = transpose(m);
    auto pivots = rref(t, p);
    std::vector<char> is_pivot(t.cols, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    std::vector<std::uint32_t> free_cols;
    for (std::uint32_t c = 0; c < t.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    FpMat basis(static_cast<std::uint32_t>(free_cols.size()), t.cols);
    for (std::uint32_t k = 0; k < free_cols.size(); ++k) {
        const std::uint32_t fc = free_cols[k];
        basis.at(k, fc) = 1;
        for (std::uint32_t r = 0; r < pivots.size(); ++r)
            basis.at(k, pivots[r]) = static_cast<std::uint8_t>(norm(-t.at(r, fc), p));
    }
    return basis;
}

std::vector<std::uint8_t> fp_solve_row(const FpMat& b, const std::vector<std::uint8_t>& c,
                                       int p) {
    // Solve x*b == c: reduce [b^T | c^T].
    FpMat aug(b.cols, b.rows + 1);
    for (std::uint32_t i = 0; i < b.rows; ++i)
        for (std::uint32_t j = 0; j < b.cols; ++j) aug.at(j, i) = b.at(i, j);
    for (std::uint32_t j = 0; j < b.cols; ++j) aug.at(j, b.rows) = c[j];
    auto pivots = rref(aug, p);
    std::vector<std::uint8_t> x(b.rows, 0);
    for (std::uint32_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == b.rows) throw std::logic_error("fp_solve_row: inconsistent system");
        x[pivots[r]] = aug.at(r, b.rows);
    }
    return x;
}

std::uint32_t LinearRep::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), 0u);
}

std::map<VertexId, std::uint32_t> LinearRep::dim_vector() const {
    std::map<VertexId, std::uint32_t> d;
    for (std::size_t v = 0; v < dims.size(); ++v)
        if (dims[v]) d[static_cast<VertexId>(v)] = dims[v];
    return d;
}

namespace {

// Representation with a distinguished basis indexed by "cells", each
// living at a vertex, and arrows acting by partial cell maps.
struct CellRep {
    const GentlePresentation& A;
    int p;
    std::vector<VertexId> cell_vertex;
    std::vector<std::uint32_t> cell_local; // index within its vertex block

    explicit CellRep(const GentlePresentation& a, int prime) : A(a), p(prime) {}

    std::uint32_t add_cell(VertexId v, std::vector<std::uint32_t>& dims) {
        cell_vertex.push_back(v);
        cell_local.push_back(dims[v]++);
        return static_cast<std::uint32_t>(cell_vertex.size() - 1);
    }

    LinearRep finish(std::vector<std::uint32_t> dims,
                     const std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>&
                         per_arrow) const {
        LinearRep rep;
        rep.p = p;
        rep.dims = std::move(dims);
        rep.mats.reserve(A.arrow_count());
        for (std::size_t a = 0; a < A.arrow_count(); ++a) {
            FpMat m(rep.dims[A.source(static_cast<ArrowId>(a))],
                    rep.dims[A.target(static_cast<ArrowId>(a))]);
            for (auto [from, to] : per_arrow[a]) m.at(cell_local[from], cell_local[to]) = 1;
            rep.mats.push_back(std::move(m));
        }
        return rep;
    }
};

} // namespace

LinearRep rep_of_string(const GentlePresentation& A, const StringWord& w, int p) {
    CellRep cr(A, p);
    std::vector<std::uint32_t> dims(A.vertex_count(), 0);
    std::vector<std::uint32_t> pos_cell;
    for (std::size_t i = 0; i < w.position_count(); ++i)
        pos_cell.push_back(cr.add_cell(w.vertex_at(A, i), dims));
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> act(A.arrow_count());
    for (std::size_t k = 0; k < w.length(); ++k) {
        const Letter& l = w.letters()[k];
        if (l.inverse)
            act[l.arrow].push_back({pos_cell[k + 1], pos_cell[k]});
        else
            act[l.arrow].push_back({pos_cell[k], pos_cell[k + 1]});
    }
    return cr.finish(std::move(dims), act);
}

LinearRep rep_of_simple(const GentlePresentation& A, VertexId v, int p) {
    return rep_of_string(A, StringWord::simple(v), p);
}

namespace {

// Shared machinery for path bases: cells are paths, the action either
// appends at the back (projectives) or strips at the front (injective
// duals).
LinearRep path_basis_rep(const GentlePresentation& A, int p,
                         const std::vector<std::vector<ArrowId>>& paths,
                         const std::vector<VertexId>& at_vertex, bool strip_front) {
    CellRep cr(A, p);
    std::vector<std::uint32_t> dims(A.vertex_count(), 0);
    std::map<std::vector<ArrowId>, std::uint32_t> index;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        cr.add_cell(at_vertex[i], dims);
        index[paths[i]] = static_cast<std::uint32_t>(i);
    }
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> act(A.arrow_count());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (strip_front) {
            if (paths[i].empty()) continue;
            const ArrowId a = paths[i].front();
            std::vector<ArrowId> rest(paths[i].begin() + 1, paths[i].end());
            act[a].push_back({static_cast<std::uint32_t>(i), index.at(rest)});
        } else {
            const VertexId w = at_vertex[i];
            for (ArrowId a : A.out_arrows(w)) {
                if (!paths[i].empty() && !(A.next_permitted(paths[i].back()) == a)) continue;
                std::vector<ArrowId> ext = paths[i];
                ext.push_back(a);
                auto it = index.find(ext);
                if (it != index.end())
                    act[a].push_back({static_cast<std::uint32_t>(i), it->second});
            }
        }
    }
    return cr.finish(std::move(dims), act);
}

} // namespace

LinearRep rep_of_projective(const GentlePresentation& A, VertexId v, int p) {
    std::vector<std::vector<ArrowId>> paths{{}};
    std::vector<VertexId> at{v};
    for (ArrowId a : A.out_arrows(v)) {
        std::vector<ArrowId> cur;
        for (ArrowId b : A.permitted_chain_from(a)) {
            cur.push_back(b);
            paths.push_back(cur);
            at.push_back(A.target(b));
        }
    }
    return path_basis_rep(A, p, paths, at, /*strip_front=*/false);
}

LinearRep rep_of_injective(const GentlePresentation& A, VertexId v, int p) {
    std::vector<std::vector<ArrowId>> paths{{}};
    std::vector<VertexId> at{v};
    for (ArrowId b : A.in_arrows(v)) {
        std::vector<ArrowId> cur; // path listed source-to-target, ends at v
        for (ArrowId c = b; c != kNone; c = A.prev_permitted(c)) {
            cur.insert(cur.begin(), c);
            paths.push_back(cur);
            at.push_back(A.source(cur.front()));
        }
    }
    return path_basis_rep(A, p, paths, at, /*strip_front=*/true);
}

bool satisfies_relations(const GentlePresentation& A, const LinearRep& m) {
    for (std::size_t a = 0; a < A.arrow_count(); ++a) {
        const auto& mat = m.mats[a];
        if (mat.rows != m.dims[A.source(static_cast<ArrowId>(a))] ||
            mat.cols != m.dims[A.target(static_cast<ArrowId>(a))])
            return false;
    }
    for (const auto& r : A.relations()) {
        FpMat prod = fp_mul(m.mats[r.first], m.mats[r.second], m.p);
        for (auto x : prod.a)
            if (x) return false;
    }
    return true;
}

std::uint64_t algebra_dimension(const GentlePresentation& A) {
    std::uint64_t total = A.vertex_count(); // trivial paths
    for (std::size_t a = 0; a < A.arrow_count(); ++a) {
        // Relation-free paths starting with `a`: the permitted chain and
        // its prefixes.
        total += A.permitted_chain_from(static_cast<ArrowId>(a)).size();
    }
    return total;
}

OracleSyzygyStep syzygy_step(const GentlePresentation& A, LinearRep& m) {
    const int p = m.p;
    const std::size_t nv = A.vertex_count();
    OracleSyzygyStep step;

    // Radical at each vertex: joint row space of arrows acting in.
    std::vector<FpMat> lifts(nv); // complement representatives, rows
    for (std::size_t v = 0; v < nv; ++v) {
        const std::uint32_t dv = m.dims[v];
        if (dv == 0) continue;
        std::uint32_t in_rows = 0;
        for (ArrowId a : A.in_arrows(static_cast<VertexId>(v))) in_rows += m.dims[A.source(a)];
        FpMat stack(in_rows, dv);
        std::uint32_t off = 0;
        for (ArrowId a : A.in_arrows(static_cast<VertexId>(v))) {
            const FpMat& t = m.mats[a];
            for (std::uint32_t i = 0; i < t.rows; ++i)
                for (std::uint32_t j = 0; j < dv; ++j) stack.at(off + i, j) = t.at(i, j);
            off += t.rows;
        }
        auto pivots = rref(stack, p);
        std::vector<char> is_pivot(dv, 0);
        for (auto c : pivots) is_pivot[c] = 1;
        std::vector<std::uint32_t> free_cols;
        for (std::uint32_t c = 0; c < dv; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        FpMat lift(static_cast<std::uint32_t>(free_cols.size()), dv);
        for (std::uint32_t k = 0; k < free_cols.size(); ++k) lift.at(k, free_cols[k]) = 1;
        lifts[v] = std::move(lift);
        if (!free_cols.empty())
            step.cover_tops[static_cast<VertexId>(v)] =
                static_cast<std::uint32_t>(free_cols.size());
    }

    // Assemble the cover P = (+) P(v)^mult and the cover map into m.
    LinearRep cover;
    cover.p = p;
    cover.dims.assign(nv, 0);
    cover.mats.reserve(A.arrow_count());
    std::vector<FpMat> phi(nv); // per-vertex block of the cover map
    for (std::size_t v = 0; v < nv; ++v) phi[v] = FpMat(0, m.dims[v]);

    struct Pending {
        LinearRep rep;
        std::vector<std::vector<std::uint8_t>> images; // per cell, a row in m at its vertex
        std::vector<VertexId> cell_vertex;
    };
    std::vector<Pending> parts;

    for (auto [v, mult] : step.cover_tops) {
        for (std::uint32_t copy = 0; copy < mult; ++copy) {
            Pending part;
            part.rep = rep_of_projective(A, v, p);
            // Recover cell order: rep_of_projective enumerates e_v then
            // chain prefixes; rebuild the same order here.
            std::vector<std::vector<ArrowId>> paths{{}};
            std::vector<VertexId> at{v};
            for (ArrowId a : A.out_arrows(v)) {
                std::vector<ArrowId> cur;
                for (ArrowId b : A.permitted_chain_from(a)) {
                    cur.push_back(b);
                    paths.push_back(cur);
                    at.push_back(A.target(b));
                }
            }
            part.cell_vertex = at;
            std::vector<std::uint8_t> gen(m.dims[v], 0);
            for (std::uint32_t j = 0; j < m.dims[v]; ++j) gen[j] = lifts[v].at(copy, j);
            for (std::size_t i = 0; i < paths.size(); ++i) {
                std::vector<std::uint8_t> img = gen;
                VertexId cur_v = v;
                for (ArrowId b : paths[i]) {
                    FpMat row(1, static_cast<std::uint32_t>(img.size()));
                    for (std::uint32_t j = 0; j < img.size(); ++j) row.at(0, j) = img[j];
                    FpMat out = fp_mul(row, m.mats[b], p);
                    img.assign(out.a.begin(), out.a.end());
                    cur_v = A.target(b);
                }
                (void)cur_v;
                part.images.push_back(std::move(img));
            }
            parts.push_back(std::move(part));
        }
    }

    // Direct sum of parts, accumulating per-vertex map blocks.
    for (const auto& part : parts)
        for (std::size_t v = 0; v < nv; ++v) cover.dims[v] += part.rep.dims[v];
    for (std::size_t v = 0; v < nv; ++v) phi[v] = FpMat(cover.dims[v], m.dims[v]);
    for (std::size_t a = 0; a < A.arrow_count(); ++a)
        cover.mats.push_back(FpMat(cover.dims[A.source(static_cast<ArrowId>(a))],
                                   cover.dims[A.target(static_cast<ArrowId>(a))]));

    std::vector<std::uint32_t> row_off(nv, 0);
    for (auto& part : parts) {
        // Copy arrow blocks.
        for (std::size_t a = 0; a < A.arrow_count(); ++a) {
            const FpMat& src = part.rep.mats[a];
            FpMat& dst = cover.mats[a];
            const std::uint32_t ro = row_off[A.source(static_cast<ArrowId>(a))];
            const std::uint32_t co = row_off[A.target(static_cast<ArrowId>(a))];
            for (std::uint32_t i = 0; i < src.rows; ++i)
                for (std::uint32_t j = 0; j < src.cols; ++j)
                    if (src.at(i, j)) dst.at(ro + i, co + j) = src.at(i, j);
        }
        // Copy map rows, tracking per-vertex local indices.
        std::vector<std::uint32_t> local(nv, 0);
        for (std::size_t cell = 0; cell < part.cell_vertex.size(); ++cell) {
            const VertexId v = part.cell_vertex[cell];
            const std::uint32_t r = row_off[v] + local[v]++;
            for (std::uint32_t j = 0; j < m.dims[v]; ++j) phi[v].at(r, j) = part.images[cell][j];
        }
        for (std::size_t v = 0; v < nv; ++v) row_off[v] += part.rep.dims[v];
    }
    // Surjectivity of the cover.
    for (std::size_t v = 0; v < nv; ++v)
        if (m.dims[v] && fp_rank(phi[v], p) != m.dims[v])
            throw std::logic_error("oracle cover map is not surjective");

    // Kernel, vertex by vertex (the map is graded).
    LinearRep kernel;
    kernel.p = p;
    kernel.dims.assign(nv, 0);
    std::vector<FpMat> kbasis(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        kbasis[v] = fp_left_nullspace(phi[v], p);
        kernel.dims[v] = kbasis[v].rows;
        if (kernel.dims[v])
            step.kernel_dims[static_cast<VertexId>(v)] = kernel.dims[v];
    }
    kernel.mats.reserve(A.arrow_count());
    for (std::size_t a = 0; a < A.arrow_count(); ++a) {
        const VertexId s = A.source(static_cast<ArrowId>(a));
        const VertexId t = A.target(static_cast<ArrowId>(a));
        FpMat ka(kernel.dims[s], kernel.dims[t]);
        if (kernel.dims[s] && kernel.dims[t]) {
            FpMat moved = fp_mul(kbasis[s], cover.mats[a], p);
            for (std::uint32_t i = 0; i < moved.rows; ++i) {
                std::vector<std::uint8_t> row(moved.cols);
                for (std::uint32_t j = 0; j < moved.cols; ++j) row[j] = moved.at(i, j);
                auto coeff = fp_solve_row(kbasis[t], row, p);
                for (std::uint32_t j = 0; j < ka.cols; ++j) ka.at(i, j) = coeff[j];
            }
        } else if (kernel.dims[s]) {
            // Image must vanish: the kernel is a submodule.
            FpMat moved = fp_mul(kbasis[s], cover.mats[a], p);
            for (auto x : moved.a)
                if (x) throw std::logic_error("oracle kernel is not a submodule");
        }
        kernel.mats.push_back(std::move(ka));
    }
    m = std::move(kernel);
    return step;
}

Dim pd_linear(const GentlePresentation& A, LinearRep m, std::uint32_t cap) {
    for (std::uint32_t k = 0; k <= cap; ++k) {
        if (m.total_dim() == 0) return Dim(k == 0 ? 0 : k - 1);
        syzygy_step(A, m);
        if (m.total_dim() == 0) return Dim(k);
    }
    return Dim::infinity();
}

bool OracleReport::all_agree() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.agree; });
}

namespace {

std::string dims_str(const std::map<VertexId, std::uint32_t>& d) {
    std::string s = "{";
    for (auto [v, k] : d) s += std::to_string(v) + ":" + std::to_string(k) + " ";
    return s + "}";
}

} // namespace

OracleReport check_equalities(const GentlePresentation& A, int p, std::uint32_t cap_arg) {
    OracleReport rep;
    const std::uint32_t cap = cap_arg ? cap_arg : default_cap(A);
    auto push = [&](const std::string& name, const std::string& lhs, const std::string& rhs) {
        rep.checks.push_back({name, lhs, rhs, lhs == rhs});
    };

    Dim maxs_comb(0), maxs_lin(0), maxi_comb(0), maxi_lin(0);
    for (std::size_t vi = 0; vi < A.vertex_count(); ++vi) {
        const VertexId v = static_cast<VertexId>(vi);
        const Dim ps = pd_simple(A, v);
        const Dim ps_lin = pd_linear(A, rep_of_simple(A, v, p), cap);
        push("pd S(" + A.vertex_name(v) + ")", ps.str(), ps_lin.str());
        const Dim pi = pd_injective(A, v);
        const Dim pi_lin = pd_linear(A, rep_of_injective(A, v, p), cap);
        push("pd I(" + A.vertex_name(v) + ")", pi.str(), pi_lin.str());
        maxs_comb = max(maxs_comb, ps);
        maxs_lin = max(maxs_lin, ps_lin);
        maxi_comb = max(maxi_comb, pi);
        maxi_lin = max(maxi_lin, pi_lin);
    }

    const Dim gl_poly = gldim_via_polygons(A);
    push("gl.dim polygons vs threads", gl_poly.str(), gldim_via_threads(A).str());
    push("gl.dim vs max pd S", gl_poly.str(), maxs_comb.str());
    push("gl.dim vs oracle max pd S", gl_poly.str(), maxs_lin.str());

    const Dim inj = injdim(A);
    push("inj.dim vs max pd I", inj.str(), maxi_comb.str());
    push("inj.dim vs oracle max pd I", inj.str(), maxi_lin.str());
    {
        auto op = validate_gentle(opposite(A));
        if (!op.ok()) throw std::logic_error("opposite of a gentle presentation must be gentle");
        push("inj.dim vs opposite side", inj.str(), injdim(*op.presentation).str());
    }

    {
        auto gp = gorenstein_projectives(A);
        std::uint64_t arrows_on_cycles = 0;
        for (const auto& c : full_relation_cycles(A)) arrows_on_cycles += c.size();
        push("GP count vs AG formula", std::to_string(gp.nonprojectives.size()),
             std::to_string(gp.count_by_formula));
        push("GP count vs arrows on cycles", std::to_string(gp.nonprojectives.size()),
             std::to_string(arrows_on_cycles));
    }

    {
        ThreadSet ts = all_threads(A);
        SurfaceModel sm = surface_model(A);
        push("permitted threads vs marked points", std::to_string(ts.permitted.size()),
             std::to_string(sm.marked_point_total));
        push("forbidden threads vs polygons",
             std::to_string(ts.forbidden_finite.size() + ts.infinite_cycles.size()),
             std::to_string(sm.polygons.size()));
        push("permitted vs finite forbidden", std::to_string(ts.permitted.size()),
             std::to_string(ts.forbidden_finite.size()));
        std::uint64_t sum_m = 0;
        for (auto [m, n] : ag_invariant(A).pairs) sum_m += m;
        push("permitted threads vs sum of m", std::to_string(ts.permitted.size()),
             std::to_string(sum_m));
        push("gl.dim finite vs AG", gl_poly.is_finite() ? "finite" : "infinite",
             is_gldim_finite_via_ag(A) ? "finite" : "infinite");
        push("gl.dim finite vs no cycles", gl_poly.is_finite() ? "finite" : "infinite",
             ts.infinite_cycles.empty() ? "finite" : "infinite");
        // Throws on a non-integral or negative genus.
        SurfaceStats st = surface_stats(A);
        push("boundary count vs AG pairs", std::to_string(st.boundary_count),
             std::to_string(ag_invariant(A).pairs.size()));
    }

    // Stepwise: the string-combinatorics syzygy must match the oracle
    // kernel dimension vector at every resolution step.
    for (std::size_t vi = 0; vi < A.vertex_count(); ++vi) {
        const VertexId v = static_cast<VertexId>(vi);
        for (int inj_side = 0; inj_side < 2; ++inj_side) {
            StringSum comb = inj_side ? StringSum::of(string_of_injective(A, v))
                                      : StringSum::of(StringWord::simple(v));
            LinearRep lin = inj_side ? rep_of_injective(A, v, p) : rep_of_simple(A, v, p);
            const std::string what = (inj_side ? "I(" : "S(") + A.vertex_name(v) + ")";
            push("dim-vector seed " + what, dims_str(comb.dim_vector(A)),
                 dims_str(lin.dim_vector()));
            for (std::uint32_t k = 1; k <= cap; ++k) {
                if (comb.is_zero() && lin.total_dim() == 0) break;
                comb = projective_cover(A, comb).syzygy;
                syzygy_step(A, lin);
                push("dim-vector of syzygy " + std::to_string(k) + " of " + what,
                     dims_str(comb.dim_vector(A)), dims_str(lin.dim_vector()));
            }
        }
    }
    return rep;
}

} // namespace gentle
