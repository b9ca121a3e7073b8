// Finite-dimensional Lie algebras over the rationals, given by structure
// constants. Construction rejects anything that fails antisymmetry or the
// Jacobi identity.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace latk {

class LieAlgebra {
public:
    /// Structure tensor c[i][j][k]: [e_i, e_j] = sum_k c[i][j][k] e_k,
    /// flattened as c[(i*n + j)*n + k].
    LieAlgebra(int dim, std::vector<Rational> structure_constants)
        : dim_(dim), c_(std::move(structure_constants)) {
        if (dim < 0) throw std::invalid_argument("negative Lie algebra dimension");
        if (c_.size() != static_cast<std::size_t>(dim) * dim * dim)
            throw std::invalid_argument("structure constant tensor has wrong size");
        check_antisymmetry();
        check_jacobi();
    }

    /// Build from the brackets [e_i, e_j] for i < j; omitted pairs are zero.
    static LieAlgebra from_brackets(int dim,
                                    const std::vector<std::tuple<int, int, Vec>>& brackets) {
        std::vector<Rational> c(static_cast<std::size_t>(dim) * dim * dim);
        for (const auto& [i, j, value] : brackets) {
            if (i < 0 || j < 0 || i >= dim || j >= dim || i >= j)
                throw std::invalid_argument("bracket indices must satisfy 0 <= i < j < dim");
            if (value.size() != static_cast<std::size_t>(dim))
                throw std::invalid_argument("bracket value has wrong length");
            for (int k = 0; k < dim; ++k) {
                c[(static_cast<std::size_t>(i) * dim + j) * dim + k] = value[k];
                c[(static_cast<std::size_t>(j) * dim + i) * dim + k] = -value[k];
            }
        }
        return LieAlgebra(dim, std::move(c));
    }

    int dim() const { return dim_; }

    const Rational& c(int i, int j, int k) const {
        return c_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
    }

    /// [e_i, e_j] as a coordinate vector.
    Vec bracket_basis(int i, int j) const {
        Vec v(dim_);
        for (int k = 0; k < dim_; ++k) v[k] = c(i, j, k);
        return v;
    }

    Vec bracket(const Vec& u, const Vec& v) const {
        if (u.size() != static_cast<std::size_t>(dim_) || v.size() != static_cast<std::size_t>(dim_))
            throw std::invalid_argument("bracket: vector length mismatch");
        Vec out(dim_);
        for (int i = 0; i < dim_; ++i) {
            if (u[i].is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                if (v[j].is_zero()) continue;
                Rational f = u[i] * v[j];
                for (int k = 0; k < dim_; ++k)
                    if (!c(i, j, k).is_zero()) out[k] += f * c(i, j, k);
            }
        }
        return out;
    }

    bool is_abelian() const {
        for (const auto& e : c_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LieAlgebra& a, const LieAlgebra& b) { return !(a == b); }

private:
    void check_antisymmetry() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k)
                    if (c(i, j, k) != -c(j, i, k))
                        throw std::invalid_argument("structure constants are not antisymmetric at (" +
                                                    std::to_string(i) + "," + std::to_string(j) + ")");
    }
    void check_jacobi() const {
        for (int i = 0; i < dim_; ++i)
            for (int j = i + 1; j < dim_; ++j)
                for (int k = j + 1; k < dim_; ++k) {
                    Vec ei(dim_), ej(dim_), ek(dim_);
                    ei[i] = Rational(1);
                    ej[j] = Rational(1);
                    ek[k] = Rational(1);
                    Vec total = vec_add(vec_add(bracket(bracket_basis(i, j), ek),
                                                bracket(bracket_basis(j, k), ei)),
                                        bracket(bracket_basis(k, i), ej));
                    if (!vec_is_zero(total))
                        throw std::invalid_argument("Jacobi identity fails on basis triple (" +
                                                    std::to_string(i) + "," + std::to_string(j) + "," +
                                                    std::to_string(k) + ")");
                }
    }

    int dim_;
    std::vector<Rational> c_;
};

/// Does the matrix preserve brackets between the two algebras? Checked on all
/// basis pairs, which suffices by bilinearity.
inline bool is_homomorphism(const LieAlgebra& source, const LieAlgebra& target, const Matrix& m) {
    if (m.rows() != target.dim() || m.cols() != source.dim())
        throw std::invalid_argument("is_homomorphism: matrix shape mismatch");
    for (int i = 0; i < source.dim(); ++i)
        for (int j = i + 1; j < source.dim(); ++j) {
            Vec lhs = m * source.bracket_basis(i, j);
            Vec rhs = target.bracket(m.col(i), m.col(j));
            if (lhs != rhs) return false;
        }
    return true;
}

inline bool is_homomorphism(const LieAlgebra& g, const Matrix& m) {
    return is_homomorphism(g, g, m);
}

inline bool is_automorphism(const LieAlgebra& g, const Matrix& m) {
    return m.rows() == g.dim() && m.cols() == g.dim() && is_invertible(m) && is_homomorphism(g, m);
}

/// Basis of [g, g] (columns), echelonized.
inline Matrix derived_subalgebra(const LieAlgebra& g) {
    std::vector<Vec> cols;
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) cols.push_back(g.bracket_basis(i, j));
    return column_space_basis(Matrix::from_columns(g.dim(), cols));
}

inline LieAlgebra builtin_lie_algebra(const std::string& name) {
    if (name == "abelian1") return LieAlgebra::from_brackets(1, {});
    if (name == "abelian2") return LieAlgebra::from_brackets(2, {});
    if (name == "abelian3") return LieAlgebra::from_brackets(3, {});
    if (name == "heisenberg") // [e0, e1] = e2
        return LieAlgebra::from_brackets(3, {{0, 1, Vec{Rational(0), Rational(0), Rational(1)}}});
    if (name == "sl2") // basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
        return LieAlgebra::from_brackets(
            3, {{0, 1, Vec{Rational(0), Rational(2), Rational(0)}},
                {0, 2, Vec{Rational(0), Rational(0), Rational(-2)}},
                {1, 2, Vec{Rational(1), Rational(0), Rational(0)}}});
    throw std::invalid_argument("unknown builtin Lie algebra: " + name);
}

} // namespace latk
