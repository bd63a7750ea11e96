#include "gentle/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gentle {

std::optional<VertexId> GentlePresentation::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < quiver_.vertices.size(); ++i)
        if (quiver_.vertices[i] == name) return static_cast<VertexId>(i);
    return std::nullopt;
}

std::optional<ArrowId> GentlePresentation::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < quiver_.arrows.size(); ++i)
        if (quiver_.arrows[i].name == name) return static_cast<ArrowId>(i);
    return std::nullopt;
}

bool GentlePresentation::in_ideal(ArrowId a, ArrowId b) const {
    return next_rel_[a] == b && b != kNone;
}

std::vector<ArrowId> GentlePresentation::permitted_chain_from(ArrowId a) const {
    std::vector<ArrowId> chain;
    for (ArrowId cur = a; cur != kNone; cur = next_perm_[cur]) chain.push_back(cur);
    return chain;
}

Dim GentlePresentation::forbidden_tail(ArrowId a) const {
    std::uint32_t len = 0;
    ArrowId cur = a;
    while (cur != kNone) {
        ++len;
        if (len > arrow_count()) return Dim::infinity(); // entered a cycle
        cur = next_rel_[cur];
    }
    return Dim(len);
}

std::vector<StructuralError> structural_errors(const RawPresentation& raw) {
    std::vector<StructuralError> errs;
    auto fail = [&](const std::string& m) { errs.push_back({m}); };

    std::set<std::string> vnames;
    for (const auto& v : raw.quiver.vertices) {
        if (v.empty()) fail("empty vertex id");
        if (!vnames.insert(v).second) fail("duplicate vertex id '" + v + "'");
    }
    if (raw.quiver.vertices.empty()) fail("vertex set is empty");

    std::set<std::string> anames;
    const auto nv = static_cast<std::int32_t>(raw.quiver.vertices.size());
    for (const auto& a : raw.quiver.arrows) {
        if (a.name.empty()) fail("empty arrow id");
        if (!anames.insert(a.name).second) fail("duplicate arrow id '" + a.name + "'");
        if (vnames.count(a.name)) fail("id '" + a.name + "' used for both a vertex and an arrow");
        if (a.source < 0 || a.source >= nv)
            fail("arrow '" + a.name + "' has a dangling source");
        if (a.target < 0 || a.target >= nv)
            fail("arrow '" + a.name + "' has a dangling target");
    }

    const auto na = static_cast<std::int32_t>(raw.quiver.arrows.size());
    for (const auto& r : raw.relations) {
        if (r.first < 0 || r.first >= na || r.second < 0 || r.second >= na) {
            fail("relation references an unknown arrow");
            continue;
        }
        const auto& f = raw.quiver.arrows[r.first];
        const auto& s = raw.quiver.arrows[r.second];
        if (f.target != s.source)
            fail("relation " + f.name + "*" + s.name + " is not a composable length-2 path");
    }
    return errs;
}

namespace {

bool connected(const RawPresentation& raw) {
    const std::size_t n = raw.quiver.vertices.size();
    if (n == 0) return false;
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& a : raw.quiver.arrows) {
        adj[a.source].push_back(a.target);
        adj[a.target].push_back(a.source);
    }
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

} // namespace

ValidationResult validate_gentle(const RawPresentation& raw) {
    ValidationResult res;
    auto bad = [&](ViolationKind k, const std::string& m) { res.violations.push_back({k, m}); };

    const auto& Q = raw.quiver;
    const std::size_t nv = Q.vertices.size();
    const std::size_t na = Q.arrows.size();

    std::vector<std::vector<ArrowId>> out(nv), in(nv);
    for (std::size_t i = 0; i < na; ++i) {
        out[Q.arrows[i].source].push_back(static_cast<ArrowId>(i));
        in[Q.arrows[i].target].push_back(static_cast<ArrowId>(i));
    }
    for (std::size_t v = 0; v < nv; ++v) {
        if (out[v].size() > 2)
            bad(ViolationKind::OutDegree, "vertex '" + Q.vertices[v] + "' has out-degree " +
                                              std::to_string(out[v].size()) + " > 2");
        if (in[v].size() > 2)
            bad(ViolationKind::InDegree, "vertex '" + Q.vertices[v] + "' has in-degree " +
                                             std::to_string(in[v].size()) + " > 2");
    }

    std::set<std::pair<ArrowId, ArrowId>> rel;
    for (const auto& r : raw.relations)
        if (!rel.insert({r.first, r.second}).second)
            bad(ViolationKind::DuplicateRelation,
                "relation " + Q.arrows[r.first].name + "*" + Q.arrows[r.second].name +
                    " listed twice");

    std::vector<ArrowId> next_rel(na, kNone), next_perm(na, kNone);
    std::vector<ArrowId> prev_rel(na, kNone), prev_perm(na, kNone);
    auto aname = [&](ArrowId a) { return Q.arrows[a].name; };

    for (std::size_t i = 0; i < na; ++i) {
        const ArrowId a = static_cast<ArrowId>(i);
        for (ArrowId b : out[Q.arrows[i].target]) {
            const bool is_rel = rel.count({a, b}) > 0;
            if (is_rel) {
                if (next_rel[a] != kNone)
                    bad(ViolationKind::DoubleRelationLeft,
                        "arrow '" + aname(a) + "' has two relation continuations ('" +
                            aname(next_rel[a]) + "', '" + aname(b) + "')");
                next_rel[a] = b;
                if (prev_rel[b] != kNone)
                    bad(ViolationKind::DoubleRelationRight,
                        "arrow '" + aname(b) + "' has two relation predecessors ('" +
                            aname(prev_rel[b]) + "', '" + aname(a) + "')");
                prev_rel[b] = a;
            } else {
                if (next_perm[a] != kNone)
                    bad(ViolationKind::DoubleNonRelationLeft,
                        "arrow '" + aname(a) + "' has two non-relation continuations ('" +
                            aname(next_perm[a]) + "', '" + aname(b) + "')");
                next_perm[a] = b;
                if (prev_perm[b] != kNone)
                    bad(ViolationKind::DoubleNonRelationRight,
                        "arrow '" + aname(b) + "' has two non-relation predecessors ('" +
                            aname(prev_perm[b]) + "', '" + aname(a) + "')");
                prev_perm[b] = a;
            }
        }
    }

    // Finite dimensionality: no oriented cycle all of whose consecutive
    // compositions avoid I. next_perm is a partial function, so cycles
    // of it are exactly such cycles.
    {
        std::vector<char> state(na, 0); // 0 fresh, 1 on stack, 2 done
        for (std::size_t s = 0; s < na; ++s) {
            if (state[s]) continue;
            std::vector<ArrowId> path;
            ArrowId cur = static_cast<ArrowId>(s);
            while (cur != kNone && state[cur] == 0) {
                state[cur] = 1;
                path.push_back(cur);
                cur = next_perm[cur];
            }
            if (cur != kNone && state[cur] == 1) {
                std::string cyc;
                auto it = std::find(path.begin(), path.end(), cur);
                for (; it != path.end(); ++it) cyc += (cyc.empty() ? "" : " ") + aname(*it);
                bad(ViolationKind::RelationFreeCycle,
                    "oriented cycle avoiding all relations (infinite dimensional): " + cyc);
            }
            for (ArrowId a : path) state[a] = 2;
        }
    }

    if (!connected(raw))
        bad(ViolationKind::Disconnected, "underlying graph is not connected");

    if (!res.violations.empty()) return res;

    GentlePresentation A;
    A.quiver_ = raw.quiver;
    A.relations_ = raw.relations;
    A.out_ = std::move(out);
    A.in_ = std::move(in);
    A.next_rel_ = std::move(next_rel);
    A.next_perm_ = std::move(next_perm);
    A.prev_rel_ = std::move(prev_rel);
    A.prev_perm_ = std::move(prev_perm);
    res.presentation = std::move(A);
    return res;
}

RawPresentation opposite(const GentlePresentation& A) {
    RawPresentation raw;
    raw.quiver.vertices = A.quiver().vertices;
    for (const auto& a : A.quiver().arrows)
        raw.quiver.arrows.push_back({a.name, a.target, a.source});
    for (const auto& r : A.relations()) raw.relations.push_back({r.second, r.first});
    return raw;
}

std::vector<std::vector<ArrowId>> full_relation_cycles(const GentlePresentation& A) {
    const std::size_t na = A.arrow_count();
    std::vector<std::vector<ArrowId>> cycles;
    std::vector<char> state(na, 0);
    for (std::size_t s = 0; s < na; ++s) {
        if (state[s]) continue;
        std::vector<ArrowId> path;
        ArrowId cur = static_cast<ArrowId>(s);
        while (cur != kNone && state[cur] == 0) {
            state[cur] = 1;
            path.push_back(cur);
            cur = A.next_in_ideal(cur);
        }
        if (cur != kNone && state[cur] == 1) {
            auto it = std::find(path.begin(), path.end(), cur);
            std::vector<ArrowId> cyc(it, path.end());
            auto least = std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), least, cyc.end());
            cycles.push_back(std::move(cyc));
        }
        for (ArrowId a : path) state[a] = 2;
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return cycles;
}

} // namespace gentle
