#include "ugspec/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ugspec/spectra.hpp"

namespace ugspec {

FSequence f_sequence(double y, int imax) {
    if (y < 4.0)
        throw std::invalid_argument("f_sequence: y must be at least 4");
    if (imax < 1) throw std::invalid_argument("f_sequence: imax must be positive");
    FSequence f;
    f.y = y;
    f.values.reserve(imax);
    f.values.push_back(y - 1.0);
    for (int i = 2; i <= imax; ++i) f.values.push_back(y - 2.0 - 1.0 / f.values.back());
    return f;
}

FPropertyReport check_f_properties(const std::vector<double>& y_grid, int imax) {
    FPropertyReport rep;
    double inf = std::numeric_limits<double>::infinity();
    rep.min_margin_1 = rep.min_margin_2 = rep.min_margin_3 = inf;
    for (double y : y_grid) {
        auto f = f_sequence(y, imax).values;
        // (ii) strictly decreasing and above 1, for y >= 4
        for (int i = 0; i + 1 < imax; ++i) {
            double m = f[i] - f[i + 1];
            rep.min_margin_2 = std::min(rep.min_margin_2, m);
            ++rep.checks;
            if (!(m > 0)) rep.failures.push_back({y, 2, i + 1, i + 2});
        }
        double tail = f[imax - 1] - 1.0;
        rep.min_margin_2 = std::min(rep.min_margin_2, tail);
        ++rep.checks;
        if (!(tail > 0)) rep.failures.push_back({y, 2, imax, 0});

        if (y < 4.383) continue;
        // (i) f_i(y) > y/(y-2)
        double bound = y / (y - 2.0);
        for (int i = 0; i < imax; ++i) {
            double m = f[i] - bound;
            rep.min_margin_1 = std::min(rep.min_margin_1, m);
            ++rep.checks;
            if (!(m > 0)) rep.failures.push_back({y, 1, i + 1, 0});
        }
        // (iii) f_i f_{i+1} > f_j
        double fmax = *std::max_element(f.begin(), f.end());
        for (int i = 0; i + 1 < imax; ++i) {
            double prod = f[i] * f[i + 1];
            rep.min_margin_3 = std::min(rep.min_margin_3, prod - fmax);
            rep.checks += imax;
            if (!(prod > fmax)) {
                for (int j = 0; j < imax; ++j)
                    if (!(prod > f[j])) rep.failures.push_back({y, 3, i + 1, j + 1});
            }
        }
    }
    return rep;
}

WitnessVector witness_vector(int g) {
    if (g < 4 || g % 2 != 0)
        throw std::invalid_argument("witness_vector: girth must be even and at least 4");
    WitnessVector w;
    w.g = g;
    w.k = g / 2;
    w.n = g + w.k;
    w.a.assign(w.n, 0);
    w.a[g - 1] = 1LL << w.k;
    for (int i = 1; i <= w.k; ++i) {
        long long val = 1LL << (w.k - i);
        w.a[i - 1] = val;
        w.a[g - i - 1] = val;
        w.a[g + i - 1] = val;
    }
    for (long long v : w.a) w.a_sq += v * v;
    for (auto [u, v] : make_u_ng(w.n, g).edges()) {
        long long t = w.a[u - 1] + w.a[v - 1];
        w.edge_sum += t * t;
    }
    return w;
}

bool EigvecReport::all_hold() const {
    for (const auto& c : clauses)
        if (c.status == ClauseStatus::Fail) return false;
    return true;
}

std::string EigvecReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["g"] = g;
    j["mu"] = mu;
    j["clauses"] = nlohmann::json::array();
    for (const auto& c : clauses) {
        const char* st = c.status == ClauseStatus::Pass   ? "pass"
                         : c.status == ClauseStatus::Fail ? "fail"
                                                          : "not-applicable";
        j["clauses"].push_back({{"name", c.name}, {"status", st}, {"margin", c.margin}});
    }
    return j.dump(2) + "\n";
}

namespace {

ClauseResult strict_clause(const std::string& name, double min_margin, double threshold) {
    ClauseResult c;
    c.name = name;
    c.margin = min_margin;
    c.status = min_margin > threshold ? ClauseStatus::Pass : ClauseStatus::Fail;
    return c;
}

ClauseResult equality_clause(const std::string& name, double max_dev, double tol) {
    ClauseResult c;
    c.name = name;
    c.margin = max_dev;
    c.status = max_dev < tol ? ClauseStatus::Pass : ClauseStatus::Fail;
    return c;
}

ClauseResult na_clause(const std::string& name) {
    ClauseResult c;
    c.name = name;
    c.status = ClauseStatus::NotApplicable;
    c.margin = 0.0;
    return c;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

EigvecReport check_ung_eigvec_even(int n, int g, double tol) {
    if (g % 2 != 0) throw std::invalid_argument("check_ung_eigvec_even: girth must be even");
    if (n <= g) throw std::invalid_argument("check_ung_eigvec_even: need n > g");
    auto pv = perron_vector(make_u_ng(n, g));
    const auto& x = pv.components;
    auto at = [&](int v) { return x[v - 1]; };

    EigvecReport rep;
    rep.n = n;
    rep.g = g;
    rep.mu = pv.mu;

    double dev = 0.0;
    for (int j = 1; j <= g / 2; ++j) dev = std::max(dev, std::abs(at(j) - at(g - j)));
    rep.clauses.push_back(equality_clause("i: x_j = x_{g-j}", dev, tol));

    double m2 = kInf;
    for (int j = g; j < n; ++j) m2 = std::min(m2, at(j) - at(j + 1));
    rep.clauses.push_back(strict_clause("ii: tail decreasing", m2, kStrictMargin));

    double m3 = at(g) - at(1);
    for (int j = 1; j <= g / 2 - 1; ++j) m3 = std::min(m3, at(j) - at(j + 1));
    rep.clauses.push_back(strict_clause("iii: cycle decreasing from g", m3, kStrictMargin));

    if (pv.mu >= 4.5) {
        double m4 = kInf;
        for (int j = g; j < n; ++j) m4 = std::min(m4, at(j) - 2.0 * at(j + 1));
        m4 = std::min(m4, 2.0 * at(1) - at(g));
        for (int j = 1; j <= g / 2 - 1; ++j) m4 = std::min(m4, 2.0 * at(j + 1) - at(j));
        rep.clauses.push_back(strict_clause("iv: halving bounds", m4, kStrictMargin));

        double m5 = kInf;
        for (int i = 1; i <= std::min(g / 2, n - g); ++i) m5 = std::min(m5, at(i) - at(g + i));
        rep.clauses.push_back(strict_clause("v: x_i > x_{g+i}", m5, kStrictMargin));
    } else {
        rep.clauses.push_back(na_clause("iv: halving bounds"));
        rep.clauses.push_back(na_clause("v: x_i > x_{g+i}"));
    }

    // The proof of clause iii stops one step short of the cycle midpoint;
    // report that boundary comparison on its own.
    ClauseResult boundary;
    boundary.name = "iii boundary: x_{g/2-1} - x_{g/2}";
    boundary.margin = at(g / 2 - 1) - at(g / 2);
    boundary.status = ClauseStatus::Pass;
    rep.clauses.push_back(boundary);
    return rep;
}

EigvecReport check_ubar_eigvec(int n, int g, double tol) {
    if (g % 2 == 0) throw std::invalid_argument("check_ubar_eigvec: girth must be odd");
    if (n <= g) throw std::invalid_argument("check_ubar_eigvec: need n > g");
    auto pv = perron_vector(make_ubar_ng(n, g));
    const auto& x = pv.components;
    auto at = [&](int v) { return x[v - 1]; };

    EigvecReport rep;
    rep.n = n;
    rep.g = g;
    rep.mu = pv.mu;

    double dev = 0.0;
    for (int j = 1; j <= (g - 1) / 2; ++j) dev = std::max(dev, std::abs(at(j) - at(g - j)));
    rep.clauses.push_back(equality_clause("i: x_j = x_{g-j}", dev, tol));

    double m2 = kInf;
    for (int j = g; j < n; ++j) m2 = std::min(m2, at(j) - at(j + 1));
    rep.clauses.push_back(strict_clause("ii: tail decreasing", m2, kStrictMargin));

    double m3 = at(g) - at(1);
    for (int j = 1; j <= (g - 3) / 2; ++j) m3 = std::min(m3, at(j) - at(j + 1));
    rep.clauses.push_back(strict_clause("iii: arm decreasing from g", m3, kStrictMargin));

    if (pv.mu >= 4.383) {
        double m4 = kInf;
        int imax = std::min((g - 1) / 2, (n - g) / 2);
        for (int i = 1; i <= imax; ++i) m4 = std::min(m4, at(i) - at(g + 2 * i));
        rep.clauses.push_back(strict_clause("iv: x_i > x_{g+2i}", m4, kStrictMargin));
    } else {
        rep.clauses.push_back(na_clause("iv: x_i > x_{g+2i}"));
    }

    // Tail recursion x_{v_i} = f_{k-i}(mu) x_{v_{i+1}} along g, g+1, ..., n.
    // The recursion itself needs no mu >= 4 guarantee, so evaluate it raw:
    // mu(Ubar_{4,3}) = 4 exactly and can land a hair below in floating point.
    int k = n - g;
    std::vector<double> f{rep.mu - 1.0};
    for (int i = 2; i <= k; ++i) f.push_back(rep.mu - 2.0 - 1.0 / f.back());
    double rec_dev = 0.0;
    for (int i = 0; i < k; ++i)
        rec_dev = std::max(rec_dev, std::abs(at(g + i) - f[k - i - 1] * at(g + i + 1)));
    rep.clauses.push_back(equality_clause("tail f-recursion", rec_dev, 1e-8));
    return rep;
}

namespace {

// Shared pair search over explicit l values; distances come from the
// decomposition's cycle metric.
std::optional<std::pair<int, int>> best_pair(const UnicyclicDecomposition& d,
                                             const std::map<int, long>& l_of, int factor) {
    std::optional<std::pair<int, int>> best;
    long best_slack = -1;
    for (const auto& [i, li] : l_of) {
        for (const auto& [j, lj] : l_of) {
            if (i == j) continue;
            long slack = li - static_cast<long>(factor) * d.cycle_distance(i, j);
            if (slack < 0) continue;
            if (slack > best_slack ||
                (slack == best_slack && std::pair(i, j) < *best)) {
                best_slack = slack;
                best = {i, j};
            }
        }
    }
    return best;
}

std::optional<std::vector<int>> build_rec(const UnicyclicDecomposition& d,
                                          std::map<int, long> l_of, int factor) {
    if (l_of.size() == 1) return std::vector<int>{l_of.begin()->first};
    auto pr = best_pair(d, l_of, factor);
    if (!pr) return std::nullopt;
    auto [i, j] = *pr;  // l_i >= factor * d(i,j); j's path will move onto i's
    l_of[i] += l_of[j];
    l_of.erase(j);
    auto sub = build_rec(d, std::move(l_of), factor);
    if (!sub) return std::nullopt;
    std::vector<int> out;
    for (int v : *sub) {
        out.push_back(v);
        if (v == i) out.push_back(j);
    }
    return out;
}

}  // namespace

std::optional<std::pair<int, int>> find_pair(const UnicyclicDecomposition& d, int factor) {
    if (d.c_set.size() < 2)
        throw std::invalid_argument("find_pair: need at least two attachment vertices");
    std::map<int, long> l_of;
    for (int v : d.c_set) l_of[v] = d.attach_size.at(v);
    return best_pair(d, l_of, factor);
}

bool satisfies_prefix_condition(const UnicyclicDecomposition& d,
                                const std::vector<int>& ordering, int factor) {
    if (ordering.size() != d.c_set.size()) return false;
    std::set<int> seen;
    for (int v : ordering)
        if (!d.c_set.count(v) || !seen.insert(v).second) return false;
    long prefix = 0;
    for (size_t j = 1; j < ordering.size(); ++j) {
        prefix += d.attach_size.at(ordering[j - 1]);
        if (prefix < static_cast<long>(factor) * d.cycle_distance(ordering[0], ordering[j]))
            return false;
    }
    return true;
}

std::optional<AttachOrdering> build_ordering(const UnicyclicDecomposition& d, int factor) {
    if (d.c_set.size() < 2)
        throw std::invalid_argument("build_ordering: need at least two attachment vertices");
    std::map<int, long> l_of;
    for (int v : d.c_set) l_of[v] = d.attach_size.at(v);
    auto seq = build_rec(d, std::move(l_of), factor);
    if (!seq) return std::nullopt;
    AttachOrdering ord{*seq, factor};
    if (!satisfies_prefix_condition(d, ord.sequence, factor))
        throw std::logic_error("build_ordering: constructed ordering fails its own check");
    return ord;
}

std::string HypothesisClass::label() const {
    std::vector<std::string> parts;
    if (girth3) parts.push_back("girth3");
    if (girth4or6) parts.push_back("girth4or6");
    if (even_covered) parts.push_back("even-covered");
    if (odd_covered) parts.push_back("odd-covered");
    if (parts.empty()) return "uncovered";
    std::string out = parts.front();
    for (size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
    return out;
}

HypothesisClass check_theorem_hypotheses(int n, int g) {
    if (n <= g) throw std::invalid_argument("check_theorem_hypotheses: need n > g");
    HypothesisClass h;
    h.girth3 = (g == 3);
    h.girth4or6 = (g == 4 || g == 6);
    h.even_covered = (g % 2 == 0 && n >= 2 * g - 1);
    h.odd_covered = (g % 2 == 1 && n >= 3 * g - 1);
    return h;
}

}  // namespace ugspec
