// Shared test helpers: deterministic pseudo-random generators for matrices,
// automorphisms, flat systems, descriptors and gauge data. Generators may use
// library solvers; the acceptance oracles never do.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <latk/latk.hpp>

namespace testsupport {

using namespace latk;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }
    /// uniform in [lo, hi] inclusive
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
    Rational small_rational() {
        int num = range(-3, 3);
        int den = range(1, 3);
        return Rational(num, den);
    }
    Rational small_nonzero() {
        Rational r = small_rational();
        while (r.is_zero()) r = small_rational();
        return r;
    }

private:
    std::uint64_t state_;
};

inline Matrix random_matrix(Rng& rng, int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.small_rational();
    return m;
}

/// Product of unit triangular matrices and a diagonal: always invertible,
/// entries stay small.
inline Matrix random_invertible(Rng& rng, int n) {
    Matrix lower = Matrix::identity(n);
    Matrix upper = Matrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            lower(i, j) = Rational(rng.range(-2, 2));
            upper(j, i) = Rational(rng.range(-2, 2));
        }
    Matrix diag(n, n);
    for (int i = 0; i < n; ++i) diag(i, i) = rng.small_nonzero();
    return lower * diag * upper;
}

/// Random automorphism of the supported reference algebras.
inline Matrix random_automorphism(Rng& rng, const LieAlgebra& g) {
    if (g.is_abelian()) return random_invertible(rng, g.dim());
    if (g == builtin_lie_algebra("heisenberg")) {
        // phi(e0), phi(e1) span a complement of the center, phi(e2) = det * e2
        while (true) {
            Rational a(rng.range(-2, 2)), b(rng.range(-2, 2));
            Rational c(rng.range(-2, 2)), d(rng.range(-2, 2));
            Rational det = a * d - b * c;
            if (det.is_zero()) continue;
            Matrix m(3, 3);
            m(0, 0) = a;
            m(1, 0) = c;
            m(2, 0) = Rational(rng.range(-2, 2));
            m(0, 1) = b;
            m(1, 1) = d;
            m(2, 1) = Rational(rng.range(-2, 2));
            m(2, 2) = det;
            return m;
        }
    }
    if (g == builtin_lie_algebra("sl2")) {
        // products of exp(t ad_e) and exp(t ad_f); both ad's square to
        // something with cube zero, so the exponential is polynomial
        auto exp_t_ad = [&](int gen, int t) {
            Matrix ad(3, 3);
            Vec x(3);
            x[gen] = Rational(1);
            for (int j = 0; j < 3; ++j) {
                Vec ej(3);
                ej[j] = Rational(1);
                Vec col = g.bracket(x, ej);
                for (int i = 0; i < 3; ++i) ad(i, j) = col[i];
            }
            Matrix t_ad = Rational(t) * ad;
            Matrix sq = t_ad * t_ad;
            return Matrix::identity(3) + t_ad + (Rational(1, 2) * sq);
        };
        Matrix m = Matrix::identity(3);
        for (int step = 0; step < 3; ++step) {
            int gen = rng.range(0, 1) == 0 ? 1 : 2; // e or f
            m = m * exp_t_ad(gen, rng.range(-2, 2));
        }
        return m;
    }
    throw std::invalid_argument("no automorphism generator for this algebra");
}

/// Arbitrary invertible vertex matrices for gauge conjugation.
inline std::vector<Matrix> random_vertex_gauge(Rng& rng, int vertices, int n) {
    std::vector<Matrix> out;
    for (int v = 0; v < vertices; ++v) out.push_back(random_invertible(rng, n));
    return out;
}

/// Random flat system: a flat seed conjugated by a random vertex gauge.
/// Seeds: trivial, or powers of a fixed invertible matrix along an integral
/// 1-cocycle (flat because the powers commute).
inline SystemHandle random_flat_system(Rng& rng, const SimplicialComplex& base, int n,
                                       bool allow_nontrivial_holonomy = true) {
    std::map<std::pair<int, int>, Matrix> seed;
    if (allow_nontrivial_holonomy && base.triangles().empty()) {
        for (const auto& e : base.edges())
            if (rng.range(0, 1) == 1)
                seed.emplace(std::make_pair(e[0], e[1]), random_invertible(rng, n));
    } else if (allow_nontrivial_holonomy) {
        // integral 1-cocycle via the untwisted coboundary kernel
        SystemHandle triv = make_system(base, 1, {});
        Matrix kernel = kernel_basis(delta_matrix(triv, 1));
        if (kernel.cols() > 0) {
            int pick = rng.range(0, kernel.cols() - 1);
            Vec z = kernel.col(pick);
            std::int64_t lcm = 1;
            for (const auto& r : z) lcm = std::lcm(lcm, r.den());
            Matrix lambda(n, n);
            for (int i = 0; i < n; ++i) lambda(i, i) = Rational(rng.range(0, 1) == 0 ? -1 : 2);
            auto edges = base.simplices_of_dim(1);
            for (std::size_t i = 0; i < edges.size(); ++i) {
                std::int64_t power = (Rational(lcm) * z[i]).num();
                Matrix t = Matrix::identity(n);
                Matrix lam = power >= 0 ? lambda : inverse_or_throw(lambda);
                for (std::int64_t p = 0; p < (power >= 0 ? power : -power); ++p) t = lam * t;
                seed.emplace(std::make_pair(edges[i][0], edges[i][1]), t);
            }
        }
    }
    SystemHandle seeded = make_system(base, n, std::move(seed));
    if (!seeded->check_flat().ok) throw std::logic_error("seed system not flat");
    return gauge_conjugate(*seeded, random_vertex_gauge(rng, base.vertex_count(), n));
}

inline TwistedCochain random_cochain(Rng& rng, SystemHandle system, int degree) {
    TwistedCochain c = TwistedCochain::zero(system, degree);
    for (const auto& s : system->base().simplices_of_dim(degree)) {
        Vec v(system->fiber_dim());
        for (auto& x : v) x = rng.small_rational();
        c.set_value(s, v);
    }
    return c;
}

/// Random descriptor with abelian g over a 2-dimensional base: edge
/// automorphisms from a flat system, omega arbitrary (top degree, cocycle
/// condition vacuous).
inline AlgebroidDescriptor random_abelian_descriptor(Rng& rng, const LieAlgebra& g,
                                                     const SimplicialComplex& base) {
    SystemHandle sys = random_flat_system(rng, base, g.dim());
    std::map<std::pair<int, int>, Matrix> phi;
    for (const auto& e : base.edges())
        phi.emplace(std::make_pair(e[0], e[1]), sys->transport(e[0], e[1]));
    std::map<Simplex, Vec> omega;
    for (const auto& t : base.triangles()) {
        Vec v(g.dim());
        for (auto& x : v) x = rng.small_rational();
        omega.emplace(t, v);
    }
    return AlgebroidDescriptor(g, base, std::move(phi), std::move(omega));
}

inline GaugeDatum random_gauge_datum(Rng& rng, const LieAlgebra& g,
                                     const SimplicialComplex& base) {
    GaugeDatum h;
    for (int v = 0; v < base.vertex_count(); ++v) h.eta[v] = random_automorphism(rng, g);
    for (const auto& e : base.edges()) {
        Vec v(g.dim());
        for (auto& x : v) x = rng.small_rational();
        h.m[{e[0], e[1]}] = v;
    }
    return h;
}

// ---- polynomial / local-model generators -------------------------------------

inline Poly random_poly(Rng& rng, int d, int max_degree = 2) {
    Poly p(d);
    int terms = rng.range(0, 3);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(d, 0);
        int degree = rng.range(0, max_degree);
        for (int g = 0; g < degree; ++g) e[rng.range(0, d - 1)] += 1;
        p.add_term(e, rng.small_rational());
    }
    return p;
}

inline VectorField random_field(Rng& rng, int d) {
    VectorField x = VectorField::zero(d);
    for (int i = 0; i < d; ++i) x.components[i] = random_poly(rng, d);
    return x;
}

inline GSection random_gsection(Rng& rng, int d, int n) {
    GSection u = GSection::zero(d, n);
    for (int i = 0; i < n; ++i) u.components[i] = random_poly(rng, d);
    return u;
}

inline LocalSection random_local_section(Rng& rng, int d, int n) {
    return {random_field(rng, d), random_gsection(rng, d, n)};
}

inline GaugeMap random_gauge_map(Rng& rng, const LieAlgebra& g, int d) {
    GaugeMap a = GaugeMap::identity(d, g.dim());
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j) a.phi[i][j] = random_poly(rng, d, 1);
    for (int i = 0; i < d; ++i) a.omega.components[i] = random_gsection(rng, d, g.dim());
    return a;
}

/// phi constant invertible, omega the differential of a potential: passes the
/// compatibility system for abelian g.
inline GaugeMap abelian_positive_gauge(Rng& rng, int n, int d) {
    GaugeMap a = GaugeMap::identity(d, n);
    Matrix phi = random_invertible(rng, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.phi[i][j] = Poly::constant(d, phi(i, j));
    std::vector<Poly> potential;
    for (int c = 0; c < n; ++c) potential.push_back(random_poly(rng, d, 2));
    for (int i = 0; i < d; ++i)
        for (int c = 0; c < n; ++c) a.omega.components[i].components[c] = potential[c].derivative(i);
    return a;
}

/// Nonconstant positive for the heisenberg algebra: phi adds f(x) e2 to the
/// image of e0, omega = df tensor e1.
inline GaugeMap heisenberg_positive_gauge(Rng& rng, int d) {
    GaugeMap a = GaugeMap::identity(d, 3);
    Poly f = random_poly(rng, d, 2);
    a.phi[2][0] = f;
    for (int i = 0; i < d; ++i) a.omega.components[i].components[1] = f.derivative(i);
    return a;
}

} // namespace testsupport
