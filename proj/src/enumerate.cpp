#include "ugspec/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "ugspec/canonical.hpp"
#include "ugspec/spectra.hpp"
#include "ugspec/unicyclic.hpp"

namespace ugspec {

void for_each_rooted_tree(int size, const std::function<void(const std::vector<int>&)>& visit) {
    if (size < 0) throw std::invalid_argument("rooted_trees: negative size");
    if (size == 0) return;
    std::vector<int> level(size);
    for (int i = 0; i < size; ++i) level[i] = i;  // the path
    while (true) {
        visit(level);
        int p = -1;
        for (int i = size - 1; i >= 0; --i)
            if (level[i] >= 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (level[i] == level[p] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < size; ++i) level[i] = level[i - (p - q)];
    }
}

std::vector<std::vector<int>> rooted_trees(int size) {
    std::vector<std::vector<int>> out;
    for_each_rooted_tree(size, [&](const std::vector<int>& t) { out.push_back(t); });
    return out;
}

namespace {

const std::vector<std::vector<int>>& rooted_trees_cached(int size) {
    static std::map<int, std::vector<std::vector<int>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(size);
    if (it == cache.end()) it = cache.emplace(size, rooted_trees(size)).first;
    return it->second;
}

using Assignment = std::vector<const std::vector<int>*>;

bool dihedrally_minimal(const Assignment& a) {
    int g = static_cast<int>(a.size());
    auto leq_image = [&](bool reflect, int shift) {
        // true if a <= its image; false means a is not minimal
        for (int i = 0; i < g; ++i) {
            int j = reflect ? ((shift - i) % g + g) % g : (i + shift) % g;
            if (*a[i] != *a[j]) return *a[i] < *a[j];
        }
        return true;
    };
    for (int shift = 0; shift < g; ++shift) {
        if (shift != 0 && !leq_image(false, shift)) return false;
        if (!leq_image(true, shift)) return false;
    }
    return true;
}

Graph assignment_graph(int n, int g, const Assignment& a) {
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 1; i < g; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, g);
    int next = g + 1;
    for (int p = 0; p < g; ++p) {
        const auto& level = *a[p];
        int m = static_cast<int>(level.size());
        std::vector<int> ids(m);
        ids[0] = p + 1;
        for (int j = 1; j < m; ++j) {
            ids[j] = next++;
            int parent = -1;
            for (int i = j - 1; i >= 0; --i)
                if (level[i] == level[j] - 1) {
                    parent = i;
                    break;
                }
            edges.emplace_back(std::min(ids[parent], ids[j]), std::max(ids[parent], ids[j]));
        }
    }
    return Graph(n, edges);
}

void recurse_slots(int n, int g, int pos, int remaining, Assignment& a,
                   const std::function<void(const Graph&)>& visit) {
    if (pos == g) {
        if (remaining != 0) return;
        if (!dihedrally_minimal(a)) return;
        visit(assignment_graph(n, g, a));
        return;
    }
    for (int l = 0; l <= remaining; ++l) {
        if (pos == g - 1 && l != remaining) continue;
        for (const auto& tree : rooted_trees_cached(l + 1)) {
            a[pos] = &tree;
            recurse_slots(n, g, pos + 1, remaining - l, a, visit);
        }
    }
    a[pos] = nullptr;
}

}  // namespace

void for_each_unicyclic(int n, int g, const std::function<void(const Graph&)>& visit) {
    if (g < 3) throw std::invalid_argument("for_each_unicyclic: girth must be at least 3");
    if (g > n) throw std::invalid_argument("for_each_unicyclic: girth exceeds vertex count");
    Assignment a(g, nullptr);
    recurse_slots(n, g, 0, n - g, a, visit);
}

std::vector<Graph> unicyclic_graphs(int n, int g) {
    std::vector<Graph> out;
    for_each_unicyclic(n, g, [&](const Graph& gr) { out.push_back(gr); });
    return out;
}

long count_unicyclic(int n, int g) {
    long count = 0;
    for_each_unicyclic(n, g, [&](const Graph&) { ++count; });
    return count;
}

std::string VerificationReport::to_csv() const {
    std::string out = "rank,canonical_form,lambda,is_u_ng\n";
    char buf[64];
    long rank = 1;
    for (const auto& e : lambda_table) {
        std::snprintf(buf, sizeof(buf), "%ld,", rank++);
        out += buf;
        out += e.canonical;
        std::snprintf(buf, sizeof(buf), ",%.15g,%d\n", e.lambda, e.is_u ? 1 : 0);
        out += buf;
    }
    return out;
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["g"] = g;
    j["total"] = total;
    j["minimizer_is_u"] = minimizer_is_u;
    j["unique"] = unique;
    j["margin"] = margin;
    j["near_ties"] = near_ties;
    j["lambda_table"] = nlohmann::json::array();
    for (const auto& e : lambda_table)
        j["lambda_table"].push_back(
            {{"canonical_form", e.canonical}, {"lambda", e.lambda}, {"is_u_ng", e.is_u}});
    return j.dump(2) + "\n";
}

VerificationReport verify_minimizer(int n, int g, double tol, int jobs) {
    if (n <= g) throw std::invalid_argument("verify_minimizer: need n > g");
    if (jobs < 1) jobs = 1;

    std::string u_canon = canonical_form(make_u_ng(n, g));

    VerificationReport rep;
    rep.n = n;
    rep.g = g;

    auto process = [&](const Graph& gr) -> VerificationEntry {
        VerificationEntry e;
        e.canonical = canonical_form(gr);
        try {
            e.lambda = eigenvalues_symmetric(laplacian(gr), tol).eigenvalues.back();
        } catch (const std::exception& ex) {
            throw std::runtime_error("verify_minimizer: solver failed on " + e.canonical +
                                     ": " + ex.what());
        }
        e.is_u = (e.canonical == u_canon);
        return e;
    };

    const size_t batch_size = 256;
    std::vector<Graph> batch;
    batch.reserve(batch_size);
    auto flush = [&]() {
        if (batch.empty()) return;
        size_t base = rep.lambda_table.size();
        rep.lambda_table.resize(base + batch.size());
        if (jobs == 1 || batch.size() == 1) {
            for (size_t i = 0; i < batch.size(); ++i)
                rep.lambda_table[base + i] = process(batch[i]);
        } else {
            std::atomic<size_t> next{0};
            std::vector<std::thread> workers;
            std::mutex err_mu;
            std::exception_ptr err;
            int w = std::min<size_t>(jobs, batch.size());
            for (int t = 0; t < w; ++t) {
                workers.emplace_back([&]() {
                    for (size_t i = next.fetch_add(1); i < batch.size(); i = next.fetch_add(1)) {
                        try {
                            rep.lambda_table[base + i] = process(batch[i]);
                        } catch (...) {
                            std::lock_guard<std::mutex> lock(err_mu);
                            if (!err) err = std::current_exception();
                        }
                    }
                });
            }
            for (auto& th : workers) th.join();
            if (err) std::rethrow_exception(err);
        }
        batch.clear();
    };

    for_each_unicyclic(n, g, [&](const Graph& gr) {
        batch.push_back(gr);
        if (batch.size() >= batch_size) flush();
    });
    flush();

    std::sort(rep.lambda_table.begin(), rep.lambda_table.end(),
              [](const VerificationEntry& a, const VerificationEntry& b) {
                  return a.lambda != b.lambda ? a.lambda < b.lambda : a.canonical < b.canonical;
              });
    rep.total = static_cast<long>(rep.lambda_table.size());
    rep.minimizer_is_u = !rep.lambda_table.empty() && rep.lambda_table.front().is_u;
    if (rep.total >= 2) {
        rep.margin = rep.lambda_table[1].lambda - rep.lambda_table[0].lambda;
        rep.unique = rep.margin > kStrictMargin;
        for (long i = 0; i + 1 < rep.total; ++i) {
            double gap = rep.lambda_table[i + 1].lambda - rep.lambda_table[i].lambda;
            if (gap < kNearTieGap) rep.near_ties.push_back(gap);
        }
    } else {
        rep.margin = 0.0;
        rep.unique = true;  // a single class is vacuously the unique minimizer
    }
    return rep;
}

}  // namespace ugspec
