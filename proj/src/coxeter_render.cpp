#include "ruled/coxeter.hpp"

#include <algorithm>
#include <sstream>

namespace ruled {

namespace {

std::string edge_symbol(const CoxeterSystem& s, size_t from, size_t to,
                        const std::optional<CrystallographicStructure>& crystal) {
    const auto& m = s.m(from, to);
    if (m.is_infinite())
        return "--inf--";
    switch (m.value()) {
    case 3:
        return "---";
    case 4:
        if (crystal) {
            if (crystal->short_set.count(to))
                return "==>";
            if (crystal->short_set.count(from))
                return "<==";
        }
        return "===";
    default:
        return "-" + m.to_string() + "-";
    }
}

bool joined(const CoxeterSystem& s, size_t i, size_t j) {
    return i != j && s.m(i, j) != CoxeterLabel::finite(2);
}

// BFS from root inside the component; returns distances and parents,
// scanning neighbours in index order so ties are deterministic.
void bfs(const CoxeterSystem& s, const std::vector<size_t>& comp, size_t root, std::vector<long>& dist,
         std::vector<size_t>& parent) {
    size_t n = s.rank();
    dist.assign(n, -1);
    parent.assign(n, n);
    std::vector<size_t> queue{root};
    dist[root] = 0;
    for (size_t q = 0; q < queue.size(); ++q)
        for (size_t w = 0; w < n; ++w)
            if (dist[w] < 0 && joined(s, queue[q], w)) {
                dist[w] = dist[queue[q]] + 1;
                parent[w] = queue[q];
                queue.push_back(w);
            }
    (void)comp;
}

size_t farthest(const std::vector<size_t>& comp, const std::vector<long>& dist) {
    size_t best = comp.front();
    for (size_t v : comp)
        if (dist[v] > dist[best] || (dist[v] == dist[best] && v < best))
            best = v;
    return best;
}

} // namespace

std::string render_ascii(const CoxeterSystem& s,
                         const std::optional<CrystallographicStructure>& crystal) {
    size_t n = s.rank();
    std::vector<bool> seen(n, false);
    std::ostringstream os;
    bool first_line = true;
    // Per component: the spine is a longest BFS path (double sweep from the
    // lowest-index leaf), printed from its lower-index end; remaining edges
    // follow on indented lines.
    for (size_t i = 0; i < n; ++i) {
        if (seen[i])
            continue;
        std::vector<size_t> comp{i};
        seen[i] = true;
        for (size_t q = 0; q < comp.size(); ++q)
            for (size_t w = 0; w < n; ++w)
                if (!seen[w] && joined(s, comp[q], w)) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        size_t start = comp.front(), best_deg = n + 1;
        for (size_t v : comp) {
            size_t deg = 0;
            for (size_t w = 0; w < n; ++w)
                deg += joined(s, v, w);
            if (deg < best_deg) {
                best_deg = deg;
                start = v;
            }
        }
        std::vector<long> dist;
        std::vector<size_t> parent;
        bfs(s, comp, start, dist, parent);
        size_t a = farthest(comp, dist);
        bfs(s, comp, a, dist, parent);
        size_t b = farthest(comp, dist);
        std::vector<size_t> spine;
        for (size_t v = b; v != n; v = parent[v])
            spine.push_back(v);
        if (spine.front() > spine.back())
            std::reverse(spine.begin(), spine.end());

        if (!first_line)
            os << "\n";
        first_line = false;
        std::vector<std::vector<bool>> drawn(n, std::vector<bool>(n, false));
        os << s.vertex_name(spine[0]);
        for (size_t k = 1; k < spine.size(); ++k) {
            os << " " << edge_symbol(s, spine[k - 1], spine[k], crystal) << " " << s.vertex_name(spine[k]);
            drawn[spine[k - 1]][spine[k]] = drawn[spine[k]][spine[k - 1]] = true;
        }
        for (size_t x : comp)
            for (size_t y : comp)
                if (x < y && joined(s, x, y) && !drawn[x][y])
                    os << "\n  " << s.vertex_name(x) << " " << edge_symbol(s, x, y, crystal) << " "
                       << s.vertex_name(y);
    }
    return os.str();
}

} // namespace ruled
