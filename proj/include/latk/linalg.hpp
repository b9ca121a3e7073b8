// Quotient presentations and invertibility search in affine matrix families.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace latk {

/// Presentation of ambient / span(subspace_basis): a full-row-rank projection
/// whose kernel is exactly the subspace, plus a right inverse for lifting.
struct QuotientPresentation {
    int ambient_dim = 0;
    Matrix subspace_basis; // echelonized
    Matrix projection;     // quotient_dim x ambient_dim
    Matrix section;        // ambient_dim x quotient_dim, projection * section = id
    int quotient_dim = 0;

    Vec project(const Vec& v) const { return projection * v; }
    Vec lift(const Vec& v) const { return section * v; }
};

inline QuotientPresentation quotient(int ambient_dim, const Matrix& subspace_basis) {
    if (subspace_basis.cols() > 0 && subspace_basis.rows() != ambient_dim)
        throw std::invalid_argument("quotient: subspace basis does not live in the ambient space");
    Matrix basis = subspace_basis.cols() == 0 ? Matrix(ambient_dim, 0)
                                              : column_space_basis(subspace_basis);
    // rows of the projection span the annihilator of the subspace
    Matrix proj = kernel_basis(basis.transpose()).transpose();
    int q = proj.rows();
    Matrix section(ambient_dim, q);
    for (int j = 0; j < q; ++j) {
        Vec e(q);
        e[j] = Rational(1);
        auto sol = solve_affine(proj, e);
        for (int i = 0; i < ambient_dim; ++i) section(i, j) = sol->particular[i];
    }
    return QuotientPresentation{ambient_dim, std::move(basis), std::move(proj),
                                std::move(section), q};
}

/// Outcome of the deterministic grid search for an invertible member of
/// offset + sum c_i * directions_i.
struct InvertibleSearch {
    enum class Status { found, none_exists, undecided };
    Status status = Status::undecided;
    std::vector<Rational> coefficients; // set when status == found

    bool found() const { return status == Status::found; }
};

/// det(offset + sum c_i D_i) has total degree <= n in the c_i, so a grid with
/// n+1 integer values per coefficient is a sound zero test: if every grid
/// point is singular, the family has no invertible member at all. Families
/// with more than `max_directions` parameters come back undecided, never as a
/// silent wrong answer.
inline InvertibleSearch find_invertible_in_family(const Matrix& offset,
                                                  const std::vector<Matrix>& directions,
                                                  std::size_t max_directions = 4) {
    int n = offset.rows();
    if (offset.cols() != n) throw std::invalid_argument("find_invertible_in_family: offset not square");
    for (const auto& d : directions)
        if (d.rows() != n || d.cols() != n)
            throw std::invalid_argument("find_invertible_in_family: direction shape mismatch");

    if (directions.size() > max_directions)
        return {InvertibleSearch::Status::undecided, {}};

    std::size_t k = directions.size();
    std::vector<int> point(k, 0);
    const int grid = n + 1;
    while (true) {
        Matrix m = offset;
        for (std::size_t i = 0; i < k; ++i)
            if (point[i] != 0) m = m + (Rational(point[i]) * directions[i]);
        if (rank(m) == n) {
            std::vector<Rational> coeffs(k);
            for (std::size_t i = 0; i < k; ++i) coeffs[i] = Rational(point[i]);
            return {InvertibleSearch::Status::found, std::move(coeffs)};
        }
        std::size_t i = 0;
        for (; i < k; ++i) {
            if (++point[i] < grid) break;
            point[i] = 0;
        }
        if (i == k) break;
    }
    return {InvertibleSearch::Status::none_exists, {}};
}

/// Basis of the space of matrices x with x * a_i = b_i * x for every pair
/// (a_i, b_i), found as the kernel of the stacked linear conditions.
inline std::vector<Matrix> intertwiner_space(int n,
                                             const std::vector<std::pair<Matrix, Matrix>>& pairs) {
    // unknown x is vectorized row-major: x_{ij} -> n*i + j
    Matrix system(static_cast<int>(pairs.size()) * n * n, n * n);
    int r = 0;
    for (const auto& [a, b] : pairs) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    system(r, i * n + k) += a(k, j); // (x a)_{ij}
                    system(r, k * n + j) -= b(i, k); // (b x)_{ij}
                }
                ++r;
            }
    }
    Matrix kernel = kernel_basis(system);
    std::vector<Matrix> basis;
    for (int c = 0; c < kernel.cols(); ++c) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = kernel(i * n + j, c);
        basis.push_back(std::move(m));
    }
    return basis;
}

} // namespace latk
