// Chevalley-Eilenberg complex of a Lie algebra with trivial coefficients,
// homology dimensions, and the action an automorphism induces on homology.
//
// Basis of C_k = Lambda^k g: strictly increasing index tuples in lexicographic
// order. Boundary convention, with 1-based positions p < q inside the tuple:
//   d(x_{i1} ^ ... ^ x_{ik}) =
//     sum_{p<q} (-1)^{p+q} [x_{ip}, x_{iq}] ^ x_{i1} ^ ... ^{p,q omitted} ... ^ x_{ik}
#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "lie_algebra.hpp"
#include "linalg.hpp"

namespace latk {

/// Chain complex with boundary(k) : C_k -> C_{k-1}.
struct ChainComplex {
    std::vector<int> dims;           // dims[k] = dim C_k
    std::vector<Matrix> boundaries_; // boundaries_[k-1] = boundary(k)

    const Matrix& boundary(int k) const {
        if (k < 1 || k > static_cast<int>(boundaries_.size()))
            throw std::out_of_range("boundary degree out of range");
        return boundaries_[static_cast<std::size_t>(k) - 1];
    }
    int top_degree() const { return static_cast<int>(dims.size()) - 1; }

    /// d_{k-1} d_k = 0 for all k.
    bool is_complex() const {
        for (int k = 2; k <= top_degree(); ++k)
            if (!(boundary(k - 1) * boundary(k)).is_zero()) return false;
        return true;
    }
};

namespace detail {

inline std::vector<std::vector<int>> increasing_tuples(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) t[i] = i;
    while (true) {
        out.push_back(t);
        int i = k - 1;
        while (i >= 0 && t[i] == n - k + i) --i;
        if (i < 0) break;
        ++t[i];
        for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
    }
    return out;
}

/// Insert index v into the increasing tuple rest; returns sign (-1)^pos and
/// the merged tuple, or sign 0 when v already occurs.
inline std::pair<int, std::vector<int>> wedge_insert(int v, const std::vector<int>& rest) {
    std::vector<int> merged;
    merged.reserve(rest.size() + 1);
    int pos = 0;
    bool placed = false;
    for (int r : rest) {
        if (r == v) return {0, {}};
        if (!placed && r > v) {
            merged.push_back(v);
            placed = true;
        }
        if (!placed) ++pos;
        merged.push_back(r);
    }
    if (!placed) merged.push_back(v);
    return {pos % 2 == 0 ? 1 : -1, merged};
}

} // namespace detail

inline ChainComplex ce_complex(const LieAlgebra& g) {
    int n = g.dim();
    ChainComplex cc;
    std::vector<std::vector<std::vector<int>>> bases(n + 1);
    std::vector<std::map<std::vector<int>, int>> index(n + 1);
    for (int k = 0; k <= n; ++k) {
        bases[k] = detail::increasing_tuples(n, k);
        cc.dims.push_back(static_cast<int>(bases[k].size()));
        for (std::size_t b = 0; b < bases[k].size(); ++b) index[k][bases[k][b]] = static_cast<int>(b);
    }
    for (int k = 1; k <= n; ++k) {
        Matrix d(cc.dims[k - 1], cc.dims[k]);
        for (std::size_t col = 0; col < bases[k].size(); ++col) {
            const auto& tuple = bases[k][col];
            for (int p = 0; p < k; ++p)
                for (int q = p + 1; q < k; ++q) {
                    int sign_pq = ((p + 1) + (q + 1)) % 2 == 0 ? 1 : -1;
                    std::vector<int> rest;
                    for (int t = 0; t < k; ++t)
                        if (t != p && t != q) rest.push_back(tuple[t]);
                    Vec br = g.bracket_basis(tuple[p], tuple[q]);
                    for (int l = 0; l < n; ++l) {
                        if (br[l].is_zero()) continue;
                        auto [sign_ins, merged] = detail::wedge_insert(l, rest);
                        if (sign_ins == 0) continue;
                        int row = index[k - 1].at(merged);
                        d(row, static_cast<int>(col)) += Rational(sign_pq * sign_ins) * br[l];
                    }
                }
        }
        cc.boundaries_.push_back(std::move(d));
    }
    return cc;
}

/// dim H_k = dim ker d_k - rank d_{k+1}, for k = 0..top.
inline std::vector<int> homology_dims(const ChainComplex& cc) {
    if (!cc.is_complex()) throw std::invalid_argument("homology_dims: d.d != 0");
    int top = cc.top_degree();
    std::vector<int> out;
    for (int k = 0; k <= top; ++k) {
        int ker = k == 0 ? cc.dims[0] : cc.dims[k] - rank(cc.boundary(k));
        int im = k == top ? 0 : rank(cc.boundary(k + 1));
        out.push_back(ker - im);
    }
    return out;
}

/// Chosen basis of H_k: representative cycles plus maps expressing any cycle
/// in homology coordinates. Deterministic, so repeated calls agree.
struct HomologyBasis {
    Matrix cycle_basis;     // C_k coordinates of a basis of ker d_k (columns)
    QuotientPresentation q; // ker d_k / im d_{k+1} in cycle-basis coordinates
    Matrix representatives; // C_k coordinates of the chosen homology basis

    int dim() const { return q.quotient_dim; }

    /// Homology coordinates of a cycle given in C_k coordinates.
    Vec coords_of_cycle(const Vec& cycle) const {
        auto sol = solve_affine(cycle_basis, cycle);
        if (!sol) throw std::invalid_argument("vector is not a cycle");
        return q.project(sol->particular);
    }
};

inline HomologyBasis homology_basis(const ChainComplex& cc, int k) {
    int top = cc.top_degree();
    if (k < 0 || k > top) throw std::out_of_range("homology degree out of range");
    Matrix cycles = k == 0 ? Matrix::identity(cc.dims[0]) : kernel_basis(cc.boundary(k));
    Matrix boundaries =
        k == top ? Matrix(cc.dims[k], 0) : column_space_basis(cc.boundary(k + 1));
    // boundaries expressed in cycle coordinates
    Matrix bcoords(cycles.cols(), boundaries.cols());
    for (int j = 0; j < boundaries.cols(); ++j) {
        auto sol = solve_affine(cycles, boundaries.col(j));
        if (!sol) throw std::logic_error("boundary is not a cycle");
        for (int i = 0; i < cycles.cols(); ++i) bcoords(i, j) = sol->particular[i];
    }
    QuotientPresentation q = quotient(cycles.cols(), bcoords);
    Matrix reps = cycles * q.section;
    return HomologyBasis{std::move(cycles), std::move(q), std::move(reps)};
}

/// Matrix of Lambda^k m on the increasing-tuple basis: entry (T, S) is the
/// minor det m[T, S] (Cauchy-Binet makes this functorial).
inline Matrix exterior_power(const Matrix& m, int k) {
    int n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("exterior_power: matrix not square");
    auto tuples = detail::increasing_tuples(n, k);
    int N = static_cast<int>(tuples.size());
    Matrix out(N, N);
    for (int col = 0; col < N; ++col)
        for (int row = 0; row < N; ++row) {
            Matrix sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub(i, j) = m(tuples[row][i], tuples[col][j]);
            out(row, col) = determinant(sub);
        }
    return out;
}

/// The map an automorphism induces on H_k(g), in the basis homology_basis
/// picks. Functorial: induced(a b) = induced(a) induced(b), induced(id) = id.
inline Matrix induced_on_homology(const LieAlgebra& g, const Matrix& phi, int k) {
    if (!is_automorphism(g, phi))
        throw std::invalid_argument("induced_on_homology: matrix is not a Lie algebra automorphism");
    ChainComplex cc = ce_complex(g);
    HomologyBasis hb = homology_basis(cc, k);
    Matrix lambda = exterior_power(phi, k);
    int h = hb.dim();
    Matrix out(h, h);
    for (int j = 0; j < h; ++j) {
        Vec image = lambda * hb.representatives.col(j);
        Vec coords = hb.coords_of_cycle(image);
        for (int i = 0; i < h; ++i) out(i, j) = coords[i];
    }
    return out;
}

} // namespace latk
