#include "ugspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ugspec {

double SymmetricMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : a) s += x * x;
    return std::sqrt(s);
}

SymmetricMatrix laplacian(const Graph& g) {
    SymmetricMatrix m(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        m.at(u - 1, u - 1) += 1.0;
        m.at(v - 1, v - 1) += 1.0;
        m.at(u - 1, v - 1) = -1.0;
        m.at(v - 1, u - 1) = -1.0;
    }
    return m;
}

SymmetricMatrix signless(const Graph& g) {
    SymmetricMatrix m(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        m.at(u - 1, u - 1) += 1.0;
        m.at(v - 1, v - 1) += 1.0;
        m.at(u - 1, v - 1) = 1.0;
        m.at(v - 1, u - 1) = 1.0;
    }
    return m;
}

namespace {

double offdiag_norm(const SymmetricMatrix& m) {
    double s = 0.0;
    for (int p = 0; p < m.order; ++p)
        for (int q = p + 1; q < m.order; ++q) s += m.at(p, q) * m.at(p, q);
    return std::sqrt(2.0 * s);
}

}  // namespace

Spectrum eigenvalues_symmetric(const SymmetricMatrix& m, double tol, int max_sweeps) {
    int n = m.order;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i))
                throw std::invalid_argument("eigenvalues_symmetric: matrix is not symmetric");

    SymmetricMatrix a = m;
    std::vector<double> vmat(n * n, 0.0);  // row-major rotation accumulator
    for (int i = 0; i < n; ++i) vmat[i * n + i] = 1.0;

    double norm = m.frobenius_norm();
    double target = tol * norm;
    int sweep = 0;
    while (n > 1 && offdiag_norm(a) > target) {
        if (sweep++ >= max_sweeps)
            throw std::runtime_error("eigenvalues_symmetric: no convergence after " +
                                     std::to_string(max_sweeps) + " sweeps");
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a.at(p, q);
                if (apq == 0.0) continue;
                double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = a.at(p, p), aqq = a.at(q, q);
                a.at(p, p) = app - t * apq;
                a.at(q, q) = aqq + t * apq;
                a.at(p, q) = a.at(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        double arp = a.at(r, p), arq = a.at(r, q);
                        a.at(r, p) = a.at(p, r) = arp - s * (arq + tau * arp);
                        a.at(r, q) = a.at(q, r) = arq + s * (arp - tau * arq);
                    }
                    double vrp = vmat[r * n + p], vrq = vmat[r * n + q];
                    vmat[r * n + p] = vrp - s * (vrq + tau * vrp);
                    vmat[r * n + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a.at(i, i) < a.at(j, j); });

    Spectrum sp;
    sp.sweeps = sweep;
    sp.eigenvalues.reserve(n);
    sp.vectors.reserve(n);
    for (int k : order) {
        sp.eigenvalues.push_back(a.at(k, k));
        std::vector<double> x(n);
        for (int r = 0; r < n; ++r) x[r] = vmat[r * n + k];
        sp.vectors.push_back(std::move(x));
    }
    for (int k = 0; k < n; ++k) {
        double r2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double mi = 0.0;
            for (int j = 0; j < n; ++j) mi += m.at(i, j) * sp.vectors[k][j];
            double diff = mi - sp.eigenvalues[k] * sp.vectors[k][i];
            r2 += diff * diff;
        }
        sp.residual = std::max(sp.residual, std::sqrt(r2));
    }
    return sp;
}

double laplacian_spectral_radius(const Graph& g) {
    return eigenvalues_symmetric(laplacian(g)).eigenvalues.back();
}

PerronVector perron_vector(const Graph& g, double tol) {
    if (!is_connected(g))
        throw std::invalid_argument("perron_vector: graph must be connected");
    int n = g.vertex_count();
    SymmetricMatrix b = signless(g);

    PerronVector out;
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    double mu_prev = 0.0;
    const long max_iter = 1000000;
    for (long it = 1; it <= max_iter; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += b.at(i, j) * x[j];
            y[i] = s;
        }
        double mu = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
        double r2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double diff = y[i] - mu * x[i];
            r2 += diff * diff;
        }
        double residual = std::sqrt(r2);
        if (std::abs(mu - mu_prev) < tol && residual < tol) {
            out.mu = mu;
            out.components = x;
            out.iterations = static_cast<int>(it);
            out.residual = residual;
            for (double c : out.components)
                if (!(c > 0.0))
                    throw std::runtime_error("perron_vector: non-positive component");
            return out;
        }
        mu_prev = mu;
        double ny = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
        if (ny == 0.0) {
            // B = 0 only for the single-vertex graph; the start vector is exact.
            out.mu = 0.0;
            out.components = x;
            out.iterations = static_cast<int>(it);
            out.residual = 0.0;
            return out;
        }
        for (int i = 0; i < n; ++i) x[i] = y[i] / ny;
    }
    throw std::runtime_error("perron_vector: no convergence within iteration limit");
}

double rayleigh_b(const Graph& g, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != g.vertex_count())
        throw std::invalid_argument("rayleigh_b: vector size mismatch");
    double nx = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
    if (nx == 0.0) throw std::invalid_argument("rayleigh_b: zero vector");
    double s = 0.0;
    for (auto [u, v] : g.edges()) {
        double t = x[u - 1] + x[v - 1];
        s += t * t;
    }
    return s / nx;
}

}  // namespace ugspec
