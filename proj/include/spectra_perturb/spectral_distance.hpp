#ifndef SPECTRA_PERTURB_SPECTRAL_DISTANCE_HPP
#define SPECTRA_PERTURB_SPECTRAL_DISTANCE_HPP

// l2-optimal pairing of two spectra. `optimal_match` solves the assignment
// problem with costs |b_j - a_i|^2 exactly (Kuhn-Munkres with potentials,
// O(n^3)); `brute_force_match` enumerates all n! pairings and serves as an
// oracle for small n.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "spectra_perturb/errors.hpp"
#include "spectra_perturb/matrix_core.hpp"

namespace spectra_perturb {

/// Pairing a_i <-> b_{permutation[i]} (0-based) with its l2 and max mismatch.
struct SpectrumMatch {
    std::vector<Eigen::Index> permutation;
    double d2 = 0.0;
    double d_inf = 0.0;
};

inline constexpr Eigen::Index brute_force_max_size = 8;

namespace detail {

template <typename Real>
void require_matchable(const ComplexVector<Real>& a, const ComplexVector<Real>& b, const char* what)
{
    if (a.size() == 0 || b.size() == 0) {
        throw DimensionError(std::string(what) + ": empty spectrum");
    }
    if (a.size() != b.size()) {
        throw DimensionError(std::string(what) + ": spectra of different lengths (" + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()) + ")");
    }
}

template <typename Real>
SpectrumMatch finish_match(const ComplexVector<Real>& a, const ComplexVector<Real>& b,
                           std::vector<Eigen::Index> permutation)
{
    SpectrumMatch m;
    double sum = 0.0;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        const double d = static_cast<double>(std::abs(b(permutation[static_cast<std::size_t>(i)]) - a(i)));
        sum += d * d;
        worst = std::max(worst, d);
    }
    m.permutation = std::move(permutation);
    m.d2 = std::sqrt(sum);
    m.d_inf = worst;
    return m;
}

}  // namespace detail

/// Minimum-cost assignment for a square cost matrix; returns, for each row,
/// the assigned column.
inline std::vector<Eigen::Index> solve_assignment(const Eigen::MatrixXd& cost)
{
    const Eigen::Index n = cost.rows();
    if (n != cost.cols()) {
        throw DimensionError("solve_assignment: cost matrix must be square");
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    // 1-based potentials; column 0 is the virtual source.
    std::vector<double> u(static_cast<std::size_t>(n + 1), 0.0);
    std::vector<double> v(static_cast<std::size_t>(n + 1), 0.0);
    std::vector<Eigen::Index> owner(static_cast<std::size_t>(n + 1), 0);  // owner[col] = row
    std::vector<Eigen::Index> way(static_cast<std::size_t>(n + 1), 0);

    for (Eigen::Index row = 1; row <= n; ++row) {
        owner[0] = row;
        Eigen::Index col0 = 0;
        std::vector<double> minv(static_cast<std::size_t>(n + 1), inf);
        std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
        do {
            used[static_cast<std::size_t>(col0)] = 1;
            const Eigen::Index r = owner[static_cast<std::size_t>(col0)];
            double delta = inf;
            Eigen::Index col1 = 0;
            for (Eigen::Index c = 1; c <= n; ++c) {
                const auto cs = static_cast<std::size_t>(c);
                if (used[cs]) {
                    continue;
                }
                const double reduced = cost(r - 1, c - 1) - u[static_cast<std::size_t>(r)] - v[cs];
                if (reduced < minv[cs]) {
                    minv[cs] = reduced;
                    way[cs] = col0;
                }
                if (minv[cs] < delta) {
                    delta = minv[cs];
                    col1 = c;
                }
            }
            for (Eigen::Index c = 0; c <= n; ++c) {
                const auto cs = static_cast<std::size_t>(c);
                if (used[cs]) {
                    u[static_cast<std::size_t>(owner[cs])] += delta;
                    v[cs] -= delta;
                } else {
                    minv[cs] -= delta;
                }
            }
            col0 = col1;
        } while (owner[static_cast<std::size_t>(col0)] != 0);
        do {
            const Eigen::Index prev = way[static_cast<std::size_t>(col0)];
            owner[static_cast<std::size_t>(col0)] = owner[static_cast<std::size_t>(prev)];
            col0 = prev;
        } while (col0 != 0);
    }

    std::vector<Eigen::Index> assignment(static_cast<std::size_t>(n), 0);
    for (Eigen::Index c = 1; c <= n; ++c) {
        assignment[static_cast<std::size_t>(owner[static_cast<std::size_t>(c)] - 1)] = c - 1;
    }
    return assignment;
}

/// Exact l2-optimal pairing of spec_a with spec_b. d_inf is reported under
/// the same pairing.
template <typename Real>
SpectrumMatch optimal_match(const ComplexVector<Real>& spec_a, const ComplexVector<Real>& spec_b)
{
    detail::require_matchable(spec_a, spec_b, "optimal_match");
    const Eigen::Index n = spec_a.size();
    Eigen::MatrixXd cost(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            cost(i, j) = static_cast<double>(std::norm(spec_b(j) - spec_a(i)));
        }
    }
    return detail::finish_match(spec_a, spec_b, solve_assignment(cost));
}

/// Exhaustive minimum over all n! pairings; refuses n > 8.
template <typename Real>
SpectrumMatch brute_force_match(const ComplexVector<Real>& spec_a, const ComplexVector<Real>& spec_b)
{
    detail::require_matchable(spec_a, spec_b, "brute_force_match");
    const Eigen::Index n = spec_a.size();
    if (n > brute_force_max_size) {
        throw std::invalid_argument("brute_force_match: n = " + std::to_string(n) + " exceeds " +
                                    std::to_string(brute_force_max_size));
    }
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Eigen::Index{0});
    std::vector<Eigen::Index> best = perm;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
        double c = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            c += static_cast<double>(std::norm(spec_b(perm[static_cast<std::size_t>(i)]) - spec_a(i)));
        }
        if (c < best_cost) {
            best_cost = c;
            best = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return detail::finish_match(spec_a, spec_b, std::move(best));
}

}  // namespace spectra_perturb

#endif  // SPECTRA_PERTURB_SPECTRAL_DISTANCE_HPP
