#include "ugspec/bruteforce.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ugspec/canonical.hpp"
#include "ugspec/graph.hpp"

namespace ugspec {

namespace {

struct Scan {
    int n;
    std::vector<std::pair<int, int>> all_edges;  // 0-based endpoints, lexicographic
    std::map<int, std::set<std::string>> found;

    void leaf(const std::vector<int>& chosen) {
        int deg[16] = {0};
        uint16_t adj[16] = {0};
        for (int e : chosen) {
            auto [u, v] = all_edges[e];
            deg[u]++;
            deg[v]++;
            adj[u] |= uint16_t(1) << v;
            adj[v] |= uint16_t(1) << u;
        }
        // connectivity over bitmasks
        uint16_t full = uint16_t((1u << n) - 1);
        uint16_t seen = 1;
        while (true) {
            uint16_t grow = seen;
            for (int v = 0; v < n; ++v)
                if (seen & (uint16_t(1) << v)) grow |= adj[v];
            if (grow == seen) break;
            seen = grow;
        }
        if (seen != full) return;

        // girth: strip pendant vertices; the survivors form the cycle
        int d2[16];
        std::copy(deg, deg + n, d2);
        int stack[16], top = 0, alive = n;
        for (int v = 0; v < n; ++v)
            if (d2[v] == 1) stack[top++] = v;
        while (top > 0) {
            int v = stack[--top];
            d2[v] = 0;
            --alive;
            uint16_t nb = adj[v];
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= uint16_t(nb - 1);
                if (d2[w] > 0 && --d2[w] == 1) stack[top++] = w;
            }
        }
        int g = alive;

        // Only canonicalize labelings whose (degree, neighbor-degree-sum)
        // keys are already sorted; every class keeps at least one such
        // labeling, so the canonical set is unaffected.
        long key[16];
        for (int v = 0; v < n; ++v) {
            long s = 0;
            uint16_t nb = adj[v];
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= uint16_t(nb - 1);
                s += deg[w];
            }
            key[v] = 100L * deg[v] + s;
        }
        for (int v = 0; v + 1 < n; ++v)
            if (key[v] < key[v + 1]) return;

        std::vector<Edge> edges;
        edges.reserve(n);
        for (int e : chosen)
            edges.emplace_back(all_edges[e].first + 1, all_edges[e].second + 1);
        found[g].insert(canonical_form(Graph(n, edges)));
    }

    void rec(int from, int need, uint16_t covered, std::vector<int>& chosen) {
        if (need == 0) {
            if (covered == uint16_t((1u << n) - 1)) leaf(chosen);
            return;
        }
        int m = static_cast<int>(all_edges.size());
        if (from + need > m) return;
        int uncovered = n - std::popcount(covered);
        if (2 * need < uncovered) return;
        for (int e = from; e <= m - need; ++e) {
            auto [u, v] = all_edges[e];
            // once the scan has moved past every edge touching the lowest
            // uncovered vertex, this branch is dead
            int low = std::countr_zero(uint16_t(~covered));
            if (low < n && u > low) return;
            chosen.push_back(e);
            rec(e + 1, need - 1,
                uint16_t(covered | (uint16_t(1) << u) | (uint16_t(1) << v)), chosen);
            chosen.pop_back();
        }
    }
};

}  // namespace

std::map<int, std::set<std::string>> unicyclic_classes_bruteforce(int n, int jobs) {
    if (n < 3 || n > 12)
        throw std::invalid_argument("unicyclic_classes_bruteforce: n out of supported range");
    std::vector<std::pair<int, int>> all_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_edges.emplace_back(u, v);

    int m = static_cast<int>(all_edges.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min(jobs, m);

    std::vector<Scan> scans(jobs);
    std::atomic<int> next_first{0};
    auto worker = [&](int w) {
        scans[w].n = n;
        scans[w].all_edges = all_edges;
        std::vector<int> chosen;
        for (int e = next_first.fetch_add(1); e < m; e = next_first.fetch_add(1)) {
            auto [u, v] = all_edges[e];
            if (u > 0) break;  // vertex 0 must appear in some edge; edge list is sorted
            chosen.assign(1, e);
            scans[w].rec(e + 1, n - 1,
                         uint16_t((uint16_t(1) << u) | (uint16_t(1) << v)), chosen);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }

    std::map<int, std::set<std::string>> out;
    for (const auto& s : scans)
        for (const auto& [g, forms] : s.found) out[g].insert(forms.begin(), forms.end());
    return out;
}

namespace {

std::string ahu_encode(const std::vector<std::vector<int>>& children, int v) {
    std::vector<std::string> parts;
    for (int c : children[v]) parts.push_back(ahu_encode(children, c));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const auto& p : parts) out += p;
    out += ")";
    return out;
}

}  // namespace

long rooted_tree_count_bruteforce(int size) {
    if (size <= 0) return 0;
    if (size == 1) return 1;
    if (size > 8) throw std::invalid_argument("rooted_tree_count_bruteforce: size too large");

    std::set<std::string> shapes;
    int m = size;
    long total = 1;
    for (int i = 0; i < m - 2; ++i) total *= m;
    for (long code = 0; code < total; ++code) {
        // Pruefer decode
        std::vector<int> seq(m - 2);
        long c = code;
        for (int i = 0; i < m - 2; ++i) {
            seq[i] = static_cast<int>(c % m);
            c /= m;
        }
        std::vector<int> deg(m, 1);
        for (int s : seq) deg[s]++;
        std::vector<std::pair<int, int>> edges;
        std::vector<bool> used(m, false);
        for (int s : seq) {
            int leaf = -1;
            for (int v = 0; v < m; ++v)
                if (deg[v] == 1 && !used[v]) {
                    leaf = v;
                    break;
                }
            used[leaf] = true;
            deg[s]--;
            edges.emplace_back(leaf, s);
        }
        int a = -1, b = -1;
        for (int v = 0; v < m; ++v)
            if (!used[v]) (a < 0 ? a : b) = v;
        edges.emplace_back(a, b);

        std::vector<std::vector<int>> adj(m);
        for (auto [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        for (int root = 0; root < m; ++root) {
            std::vector<std::vector<int>> children(m);
            std::vector<int> stack{root}, parent(m, -1);
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : adj[u])
                    if (w != parent[u]) {
                        parent[w] = u;
                        children[u].push_back(w);
                        stack.push_back(w);
                    }
            }
            shapes.insert(ahu_encode(children, root));
        }
    }
    return static_cast<long>(shapes.size());
}

}  // namespace ugspec
