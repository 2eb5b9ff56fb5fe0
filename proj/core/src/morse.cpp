#include "magtop/morse.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "magtop/errors.hpp"

namespace magtop {

namespace {

std::vector<Cell> faces_of(const Cell& c) {
    std::vector<Cell> out;
    if (c.size() < 2) return out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        Cell f = c;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        out.push_back(std::move(f));
    }
    return out;
}

bool is_face(const Cell& face, const Cell& coface) {
    if (face.size() + 1 != coface.size()) return false;
    const auto f = faces_of(coface);
    return std::find(f.begin(), f.end(), face) != f.end();
}

struct Digraph {
    std::map<Cell, std::size_t> index;
    std::vector<std::optional<std::size_t>> up;    // matched coface of a face
    std::vector<std::optional<std::size_t>> down;  // matched face of a coface
    std::vector<std::vector<std::size_t>> edges;
};

Digraph build(const std::vector<Cell>& cells, const Matching& M) {
    Digraph g;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!g.index.emplace(cells[i], i).second) throw NotAMatching("cell listed twice");
    }
    g.up.assign(cells.size(), std::nullopt);
    g.down.assign(cells.size(), std::nullopt);
    std::vector<bool> used(cells.size(), false);
    for (const auto& [face, coface] : M.pairs) {
        const auto fi = g.index.find(face);
        const auto ci = g.index.find(coface);
        if (fi == g.index.end() || ci == g.index.end()) throw NotAMatching("matched cell outside the complex");
        if (!is_face(face, coface)) throw NotAMatching("matched pair is not a codimension-one face");
        if (used[fi->second] || used[ci->second]) throw NotAMatching("cell matched twice");
        used[fi->second] = used[ci->second] = true;
        g.up[fi->second] = ci->second;
        g.down[ci->second] = fi->second;
    }
    g.edges.resize(cells.size());
    for (std::size_t a = 0; a < cells.size(); ++a) {
        if (g.up[a]) g.edges[a].push_back(*g.up[a]);
        for (const auto& f : faces_of(cells[a])) {
            const auto it = g.index.find(f);
            if (it == g.index.end() || g.down[a] == it->second) continue;
            g.edges[a].push_back(it->second);
        }
    }
    return g;
}

}  // namespace

AcyclicityResult verify_acyclic(const std::vector<Cell>& cells, const Matching& M) {
    const Digraph g = build(cells, M);
    AcyclicityResult result;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!g.up[i] && !g.down[i]) result.critical.push_back(cells[i]);
    }

    // Kahn's algorithm; whatever is left lies on or upstream of a cycle.
    std::vector<std::size_t> indegree(cells.size(), 0);
    for (const auto& out : g.edges) {
        for (std::size_t v : out) ++indegree[v];
    }
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (indegree[i] == 0) queue.push_back(i);
    }
    std::size_t removed = 0;
    while (!queue.empty()) {
        const std::size_t u = queue.back();
        queue.pop_back();
        ++removed;
        for (std::size_t v : g.edges[u]) {
            if (--indegree[v] == 0) queue.push_back(v);
        }
    }
    if (removed == cells.size()) return result;

    result.acyclic = false;
    // Every leftover node has a leftover predecessor; walk predecessors until one repeats.
    std::vector<std::vector<std::size_t>> preds(cells.size());
    for (std::size_t u = 0; u < cells.size(); ++u) {
        for (std::size_t v : g.edges[u]) preds[v].push_back(u);
    }
    std::size_t u = 0;
    while (indegree[u] == 0) ++u;
    std::vector<std::size_t> path;
    std::vector<std::optional<std::size_t>> seen_at(cells.size());
    while (!seen_at[u]) {
        seen_at[u] = path.size();
        path.push_back(u);
        for (std::size_t p : preds[u]) {
            if (indegree[p] > 0) {
                u = p;
                break;
            }
        }
    }
    for (std::size_t i = path.size(); i-- > *seen_at[u];) result.cycle.push_back(cells[path[i]]);
    result.cycle.push_back(result.cycle.front());
    // Start the witness at a coface so it reads a_1 > b_1 |- a_2 ...
    if (result.cycle.size() > 1 && result.cycle[0].size() < result.cycle[1].size()) {
        result.cycle.pop_back();
        std::rotate(result.cycle.begin(), result.cycle.begin() + 1, result.cycle.end());
        result.cycle.push_back(result.cycle.front());
    }
    return result;
}

BoundednessResult verify_bounded(const std::vector<Cell>& cells, const Matching& M) {
    BoundednessResult result;
    if (!verify_acyclic(cells, M).acyclic) {
        result.bounded = false;
        return result;
    }
    const Digraph g = build(cells, M);
    // f(a) = max over faces b != d(a) of 1 + f(u(b)), with f(u(b)) = 0 when b is unmatched.
    std::vector<std::optional<std::size_t>> memo(cells.size());
    auto descent = [&](auto&& self, std::size_t a) -> std::size_t {
        if (memo[a]) return *memo[a];
        std::size_t best = 0;
        for (const auto& f : faces_of(cells[a])) {
            const auto it = g.index.find(f);
            std::size_t steps = 1;
            if (it != g.index.end()) {
                if (g.down[a] == it->second) continue;
                if (g.up[it->second]) steps += self(self, *g.up[it->second]);
            }
            best = std::max(best, steps);
        }
        memo[a] = best;
        return best;
    };
    for (std::size_t a = 0; a < cells.size(); ++a) {
        result.n.push_back(std::max<std::size_t>(1, descent(descent, a)));
        result.max = std::max(result.max, result.n.back());
    }
    return result;
}

}  // namespace magtop
