#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ugspec/unicyclic.hpp"

namespace ugspec {

// f_1(y) = y - 1, f_i(y) = y - 2 - 1/f_{i-1}(y). Defined here for y >= 4,
// where the sequence stays strictly decreasing and above 1.
struct FSequence {
    double y = 0.0;
    std::vector<double> values;  // values[i-1] = f_i(y)
};
FSequence f_sequence(double y, int imax);

struct FPropertyFailure {
    double y;
    int clause;  // 1, 2 or 3
    int i, j;
};
struct FPropertyReport {
    long checks = 0;
    std::vector<FPropertyFailure> failures;
    double min_margin_1 = 0.0;  // f_i(y) - y/(y-2)
    double min_margin_2 = 0.0;  // min(f_i - f_{i+1}, f_imax - 1)
    double min_margin_3 = 0.0;  // f_i f_{i+1} - f_j
    bool ok() const { return failures.empty(); }
};
// Clause 2 is checked for every y >= 4 on the grid; clauses 1 and 3 only
// where y >= 4.383, their stated range.
FPropertyReport check_f_properties(const std::vector<double>& y_grid, int imax);

// Integer test vector on U_{g+k,g} (k = g/2, g even) with
//   sum a_j^2            = 2(2^{2k} - 1)
//   sum_edges (a_i+a_j)^2 = 9(2^{2k} - 1)
// so its Rayleigh quotient for B is exactly 9/2.
struct WitnessVector {
    int g = 0, k = 0, n = 0;
    std::vector<long long> a;  // a[v-1] for vertex v of U_{n,g}
    long long a_sq = 0;
    long long edge_sum = 0;
};
WitnessVector witness_vector(int g);

enum class ClauseStatus { Pass, Fail, NotApplicable };

struct ClauseResult {
    std::string name;
    ClauseStatus status = ClauseStatus::NotApplicable;
    // For strict-inequality clauses the smallest difference encountered;
    // for equality clauses the largest deviation.
    double margin = 0.0;
};

struct EigvecReport {
    int n = 0, g = 0;
    double mu = 0.0;
    std::vector<ClauseResult> clauses;
    bool all_hold() const;
    std::string to_json() const;
};

// Perron-component orderings of B(U_{n,g}) for even g. Clauses iv and v
// are evaluated only when mu >= 4.5, their stated hypothesis; below that
// they report NotApplicable. Also reports the cycle-side boundary margin
// x_{g/2-1} - x_{g/2} as its own entry.
EigvecReport check_ung_eigvec_even(int n, int g, double tol = 1e-9);

// Perron-component orderings of B(Ubar_{n,g}) for odd g; clause iv is
// gated on mu >= 4.383. Additionally cross-checks the f-recursion along
// the pendant tail against the actual Perron components.
EigvecReport check_ubar_eigvec(int n, int g, double tol = 1e-9);

// A pair i, j in C_G with l_i >= factor * d(i, j), if one exists; the pair
// maximizing the slack, ties by smallest (i, j).
std::optional<std::pair<int, int>> find_pair(const UnicyclicDecomposition& d, int factor);

struct AttachOrdering {
    std::vector<int> sequence;
    int factor = 1;
};

bool satisfies_prefix_condition(const UnicyclicDecomposition& d,
                                const std::vector<int>& ordering, int factor);

// Builds an ordering of C_G with l_{i_1}+...+l_{i_{j-1}} >= factor*d(i_1,i_j)
// by repeatedly merging the moved path into its target and splicing.
// Returns nullopt when no qualifying pair exists at some stage.
std::optional<AttachOrdering> build_ordering(const UnicyclicDecomposition& d, int factor);

struct HypothesisClass {
    bool girth3 = false;
    bool girth4or6 = false;
    bool even_covered = false;  // g even, n >= 2g-1
    bool odd_covered = false;   // g odd,  n >= 3g-1
    bool covered() const { return girth3 || girth4or6 || even_covered || odd_covered; }
    std::string label() const;
};
HypothesisClass check_theorem_hypotheses(int n, int g);

}  // namespace ugspec
