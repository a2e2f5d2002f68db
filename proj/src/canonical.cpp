#include "ugspec/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

namespace ugspec {

namespace {

constexpr int kMaxN = 32;

struct Search {
    int n = 0;
    std::array<uint32_t, kMaxN> adj{};     // adjacency bitmask per vertex (0-based bits)
    std::vector<int> cls;                  // class index per vertex (0-based)
    std::vector<int> pos_class;            // required class per position
    std::vector<uint32_t> best_cols;       // best column bits per position
    std::vector<uint32_t> cur_cols;
    std::vector<int> placed;               // vertex (0-based) at each filled position
    uint32_t used = 0;
    bool have_best = false;

    void run(int pos, bool strictly_greater) {
        if (pos == n) {
            if (strictly_greater || !have_best) {
                best_cols = cur_cols;
                have_best = true;
            }
            return;
        }
        // Candidates of the required class, one representative per twin
        // orbit (vertices whose swap is an automorphism), largest column
        // bits first so the first leaf is the greedy maximum.
        std::vector<std::pair<uint32_t, int>> cands;
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            if (cls[v] != pos_class[pos]) continue;
            bool twin_seen = false;
            for (auto [c, u] : cands) {
                uint32_t strip = ~((1u << u) | (1u << v));
                if ((adj[u] & strip) == (adj[v] & strip)) {
                    twin_seen = true;
                    break;
                }
            }
            if (twin_seen) continue;
            uint32_t col = 0;
            for (int i = 0; i < pos; ++i)
                col |= ((adj[v] >> placed[i]) & 1u) << (pos - 1 - i);
            cands.emplace_back(col, v);
        }
        std::sort(cands.begin(), cands.end(),
                  [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first : a.second < b.second;
                  });
        for (auto [col, v] : cands) {
            bool greater = strictly_greater;
            if (!greater && have_best) {
                if (col < best_cols[pos]) break;  // sorted: the rest are smaller too
                if (col > best_cols[pos]) greater = true;
            }
            cur_cols[pos] = col;
            placed[pos] = v;
            used |= 1u << v;
            run(pos + 1, greater);
            used &= ~(1u << v);
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > kMaxN) throw std::invalid_argument("canonical_form: graph too large");

    Search s;
    s.n = n;
    for (auto [u, v] : g.edges()) {
        s.adj[u - 1] |= 1u << (v - 1);
        s.adj[v - 1] |= 1u << (u - 1);
    }

    // Initial invariant: degree + sorted distance profile (unreachable -> n).
    std::vector<std::vector<int>> key(n);
    for (int v = 1; v <= n; ++v) {
        auto dist = bfs_distances(g, v);
        for (auto& d : dist)
            if (d < 0) d = n;
        std::sort(dist.begin(), dist.end());
        key[v - 1].push_back(g.degree(v));
        key[v - 1].insert(key[v - 1].end(), dist.begin(), dist.end());
    }
    s.cls.assign(n, 0);
    // Class 0 gets the largest key (hubs first), which pairs well with the
    // maximal-bit-string convention.
    auto assign_classes = [&](const std::vector<std::vector<int>>& k) {
        std::map<std::vector<int>, int, std::greater<>> order;
        for (const auto& kv : k) order.emplace(kv, 0);
        int idx = 0;
        for (auto& [kv, i] : order) i = idx++;
        int count = idx;
        for (int v = 0; v < n; ++v) s.cls[v] = order[k[v]];
        return count;
    };
    int classes = assign_classes(key);

    // Refine by sorted neighbor classes until stable.
    while (classes < n) {
        std::vector<std::vector<int>> rk(n);
        for (int v = 0; v < n; ++v) {
            rk[v].push_back(s.cls[v]);
            std::vector<int> nb;
            for (int w : g.neighbors(v + 1)) nb.push_back(s.cls[w - 1]);
            std::sort(nb.begin(), nb.end());
            rk[v].insert(rk[v].end(), nb.begin(), nb.end());
        }
        int refined = assign_classes(rk);
        if (refined == classes) break;
        classes = refined;
    }

    // Positions take classes in order; class sizes fix the block layout.
    std::vector<int> class_size(classes, 0);
    for (int v = 0; v < n; ++v) class_size[s.cls[v]]++;
    s.pos_class.reserve(n);
    for (int c = 0; c < classes; ++c)
        s.pos_class.insert(s.pos_class.end(), class_size[c], c);

    s.cur_cols.assign(n, 0);
    s.placed.assign(n, 0);
    s.run(0, false);

    // Pack columns into a bit stream (column-major, row 0 first), then hex.
    std::string out = "v" + std::to_string(n) + ":";
    int nbits = n * (n - 1) / 2;
    std::vector<uint8_t> bytes((nbits + 7) / 8, 0);
    int bit = 0;
    for (int p = 1; p < n; ++p) {
        for (int i = 0; i < p; ++i) {
            if ((s.best_cols[p] >> (p - 1 - i)) & 1u) bytes[bit / 8] |= 0x80u >> (bit % 8);
            ++bit;
        }
    }
    static const char* hexdig = "0123456789abcdef";
    for (uint8_t b : bytes) {
        out.push_back(hexdig[b >> 4]);
        out.push_back(hexdig[b & 0xf]);
    }
    return out;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace ugspec
