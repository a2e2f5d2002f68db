#pragma once

#include <vector>

#include "ugspec/graph.hpp"

namespace ugspec {

// Verification policy: strict inequalities are asserted with this slack on
// the winning side; smaller gaps count as near-ties and are surfaced
// instead of silently passing.
inline constexpr double kStrictMargin = 1e-9;
inline constexpr double kNearTieGap = 1e-7;

struct SymmetricMatrix {
    int order = 0;
    std::vector<double> a;  // row-major, order*order

    explicit SymmetricMatrix(int order_ = 0) : order(order_), a(order_ * order_, 0.0) {}
    double& at(int i, int j) { return a[i * order + j]; }
    double at(int i, int j) const { return a[i * order + j]; }
    double frobenius_norm() const;
};

// L(G) = D(G) - A(G)
SymmetricMatrix laplacian(const Graph& g);
// B(G) = D(G) + A(G)
SymmetricMatrix signless(const Graph& g);

struct Spectrum {
    std::vector<double> eigenvalues;           // ascending
    std::vector<std::vector<double>> vectors;  // vectors[k] pairs with eigenvalues[k]
    double residual = 0.0;                     // max_k ||M x_k - lambda_k x_k||_2
    int sweeps = 0;
};

// Full spectrum by cyclic Jacobi rotations. Convergence: off-diagonal
// Frobenius mass below tol * ||M||_F. Throws after max_sweeps.
Spectrum eigenvalues_symmetric(const SymmetricMatrix& m, double tol = 1e-12,
                               int max_sweeps = 64);

// Largest eigenvalue of L(G).
double laplacian_spectral_radius(const Graph& g);

struct PerronVector {
    double mu = 0.0;
    std::vector<double> components;  // positive, unit 2-norm
    int iterations = 0;
    double residual = 0.0;
};

// Positive unit eigenvector of B(G) for the largest eigenvalue, by power
// iteration from the all-ones vector. Requires a connected graph.
PerronVector perron_vector(const Graph& g, double tol = 1e-12);

// sum over edges of (x_u + x_v)^2, divided by ||x||^2.
double rayleigh_b(const Graph& g, const std::vector<double>& x);

}  // namespace ugspec
