#include "gentle/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gentle/threads.hpp"

namespace gentle {

namespace {

struct Draw {
    RawPresentation raw;
    bool ok = false;
};

Draw draw_once(const GeneratorConfig& cfg, std::mt19937_64& rng) {
    Draw d;
    const std::uint32_t n = cfg.vertex_count;
    RawPresentation& raw = d.raw;
    for (std::uint32_t v = 0; v < n; ++v) raw.quiver.vertices.push_back("v" + std::to_string(v + 1));

    std::vector<std::uint32_t> outdeg(n, 0), indeg(n, 0);
    auto add_arrow = [&](std::uint32_t s, std::uint32_t t) {
        raw.quiver.arrows.push_back({"e" + std::to_string(raw.quiver.arrows.size() + 1),
                                     static_cast<VertexId>(s), static_cast<VertexId>(t)});
        ++outdeg[s];
        ++indeg[t];
    };

    // Spanning tree first so the quiver is connected, orientations drawn
    // under the degree caps.
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::uint32_t i = 1; i < n; ++i) {
        const std::uint32_t w = order[i];
        std::vector<std::pair<std::uint32_t, bool>> slots; // (anchor, w_is_source)
        for (std::uint32_t j = 0; j < i; ++j) {
            const std::uint32_t u = order[j];
            if (outdeg[w] < 2 && indeg[u] < 2) slots.push_back({u, true});
            if (outdeg[u] < 2 && indeg[w] < 2) slots.push_back({u, false});
        }
        if (slots.empty()) return d; // degree-capped dead end; redraw
        auto [u, w_src] = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
        if (w_src)
            add_arrow(w, u);
        else
            add_arrow(u, w);
    }

    std::uint32_t target = cfg.target_arrow_count;
    if (target == 0 && n > 1)
        target = n - 1 + std::uniform_int_distribution<std::uint32_t>(0, n)(rng);
    for (auto k = static_cast<std::uint32_t>(raw.quiver.arrows.size()); k < target; ++k) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
        for (std::uint32_t s = 0; s < n; ++s) {
            if (outdeg[s] == 2) continue;
            for (std::uint32_t t = 0; t < n; ++t)
                if (indeg[t] < 2) slots.push_back({s, t});
        }
        if (slots.empty()) break;
        auto [s, t] = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
        add_arrow(s, t);
    }

    // Relations: at each vertex classify every composable pair. The
    // degree caps leave exactly two consistent labelings per vertex
    // (swap relation and non-relation roles), so one bit decides.
    for (std::uint32_t v = 0; v < n; ++v) {
        std::vector<ArrowId> ins, outs;
        for (std::size_t a = 0; a < raw.quiver.arrows.size(); ++a) {
            if (raw.quiver.arrows[a].target == static_cast<VertexId>(v))
                ins.push_back(static_cast<ArrowId>(a));
            if (raw.quiver.arrows[a].source == static_cast<VertexId>(v))
                outs.push_back(static_cast<ArrowId>(a));
        }
        if (ins.empty() || outs.empty()) continue;
        const bool flip = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
        for (std::size_t i = 0; i < ins.size(); ++i)
            for (std::size_t j = 0; j < outs.size(); ++j) {
                // Diagonal pairs get one label, off-diagonal the other;
                // this satisfies the row/column uniqueness constraints.
                const bool rel = ((i == j) != flip);
                if (rel) raw.relations.push_back({ins[i], outs[j]});
            }
    }
    d.ok = true;
    return d;
}

} // namespace

GentlePresentation gen_gentle(const GeneratorConfig& cfg) {
    if (cfg.vertex_count < 1) throw std::invalid_argument("vertex_count must be at least 1");
    std::mt19937_64 rng(cfg.seed);
    constexpr int kBudget = 4096;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        Draw d = draw_once(cfg, rng);
        if (!d.ok) continue;
        if (!structural_errors(d.raw).empty())
            throw std::logic_error("generator produced a structurally bad draw");
        ValidationResult res = validate_gentle(d.raw);
        if (!res.ok()) continue; // relation-free cycle or disconnected: redraw
        if (!cfg.allow_full_cycles && !full_relation_cycles(*res.presentation).empty()) continue;
        return std::move(*res.presentation);
    }
    throw std::runtime_error("gen_gentle: sampling budget exhausted for seed " +
                             std::to_string(cfg.seed));
}

} // namespace gentle
