// Single-chart model of a trivial transitive Lie algebroid: sections are
// pairs (vector field, g-valued function) with polynomial coefficients, the
// bracket is [(X,u),(Y,v)] = ([X,Y], [u,v] + X(v) - Y(u)), and gauge maps
// act by (X,u) |-> (X, phi(x) u(x) + omega(X)).
//
// The compatibility system for a gauge map is implemented literally as
//   (a) phi(x) is pointwise a bracket homomorphism,
//   (b) d omega(X1,X2) + [omega(X1), omega(X2)] = 0   (no 1/2 factor),
//   (c) d phi(X)(u) = [phi(u), omega(X)],
// evaluated symbolically on coordinate fields and basis sections.
#pragma once

#include <string>
#include <vector>

#include "lie_algebra.hpp"
#include "poly.hpp"

namespace latk {

/// X = sum_i components[i] d/dx_i on a chart with d variables.
struct VectorField {
    std::vector<Poly> components;

    int chart_dim() const { return static_cast<int>(components.size()); }
    static VectorField zero(int d) { return {std::vector<Poly>(d, Poly(d))}; }
    static VectorField coordinate(int d, int i) {
        VectorField x = zero(d);
        x.components[i] = Poly::constant(d, Rational(1));
        return x;
    }
    friend bool operator==(const VectorField&, const VectorField&) = default;
};

/// Map chart -> g, one polynomial per g-coordinate.
struct GSection {
    std::vector<Poly> components;

    int fiber_dim() const { return static_cast<int>(components.size()); }
    static GSection zero(int d, int n) { return {std::vector<Poly>(n, Poly(d))}; }
    static GSection constant(int d, const Vec& value) {
        GSection s;
        for (const auto& c : value) s.components.push_back(Poly::constant(d, c));
        return s;
    }
    bool is_zero() const {
        for (const auto& p : components)
            if (!p.is_zero()) return false;
        return true;
    }
    friend bool operator==(const GSection&, const GSection&) = default;
};

inline GSection gs_add(const GSection& a, const GSection& b) {
    if (a.components.size() != b.components.size())
        throw std::invalid_argument("section fiber dimension mismatch");
    GSection r = a;
    for (std::size_t i = 0; i < r.components.size(); ++i) r.components[i] += b.components[i];
    return r;
}
inline GSection gs_sub(const GSection& a, const GSection& b) {
    if (a.components.size() != b.components.size())
        throw std::invalid_argument("section fiber dimension mismatch");
    GSection r = a;
    for (std::size_t i = 0; i < r.components.size(); ++i) r.components[i] -= b.components[i];
    return r;
}

struct LocalSection {
    VectorField horizontal;
    GSection vertical;
    friend bool operator==(const LocalSection&, const LocalSection&) = default;
};

/// omega = sum_i components[i] dx_i with g-valued coefficients.
struct GOneForm {
    std::vector<GSection> components;

    int chart_dim() const { return static_cast<int>(components.size()); }
    static GOneForm zero(int d, int n) { return {std::vector<GSection>(d, GSection::zero(d, n))}; }

    /// omega(X) = sum_i X_i * omega_i.
    GSection evaluate(const VectorField& x) const {
        if (x.chart_dim() != chart_dim())
            throw std::invalid_argument("one-form / field chart dimension mismatch");
        if (components.empty()) return GSection{};
        GSection out = GSection::zero(0, 0);
        out.components.assign(components[0].components.size(), Poly(x.components.empty() ? 0 : x.components[0].nvars()));
        for (int i = 0; i < chart_dim(); ++i)
            for (std::size_t j = 0; j < components[i].components.size(); ++j)
                out.components[j] += x.components[i] * components[i].components[j];
        return out;
    }
};

/// A = [[phi(x), omega], [0, 1]] with phi an n x n matrix of polynomials.
struct GaugeMap {
    std::vector<std::vector<Poly>> phi;
    GOneForm omega;

    int fiber_dim() const { return static_cast<int>(phi.size()); }
    static GaugeMap identity(int d, int n) {
        GaugeMap a;
        a.phi.assign(n, std::vector<Poly>(n, Poly(d)));
        for (int i = 0; i < n; ++i) a.phi[i][i] = Poly::constant(d, Rational(1));
        a.omega = GOneForm::zero(d, n);
        return a;
    }

    /// phi(x) applied to a g-valued section.
    GSection apply_phi(const GSection& u) const {
        int n = fiber_dim();
        if (u.fiber_dim() != n) throw std::invalid_argument("gauge map fiber dimension mismatch");
        GSection out;
        out.components.assign(n, Poly(u.components.empty() ? 0 : u.components[0].nvars()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.components[i] += phi[i][j] * u.components[j];
        return out;
    }

    /// Column j of phi as a section (the image of basis vector e_j).
    GSection phi_column(int j) const {
        GSection out;
        for (int i = 0; i < fiber_dim(); ++i) out.components.push_back(phi[i][j]);
        return out;
    }
};

/// Derivative of each component of u along X.
inline GSection derive_along(const VectorField& x, const GSection& u) {
    GSection out = u;
    for (std::size_t j = 0; j < u.components.size(); ++j) {
        Poly acc(u.components[j].nvars());
        for (int i = 0; i < x.chart_dim(); ++i)
            acc += x.components[i] * u.components[j].derivative(i);
        out.components[j] = acc;
    }
    return out;
}

/// Standard commutator of derivations: [X,Y]_j = X(Y_j) - Y(X_j).
inline VectorField vf_bracket(const VectorField& x, const VectorField& y) {
    if (x.chart_dim() != y.chart_dim())
        throw std::invalid_argument("vector field chart dimension mismatch");
    VectorField out = VectorField::zero(x.chart_dim());
    for (int j = 0; j < x.chart_dim(); ++j) {
        Poly acc(x.components[j].nvars());
        for (int i = 0; i < x.chart_dim(); ++i) {
            acc += x.components[i] * y.components[j].derivative(i);
            acc -= y.components[i] * x.components[j].derivative(i);
        }
        out.components[j] = acc;
    }
    return out;
}

/// Pointwise Lie bracket of two g-valued sections via structure constants.
inline GSection g_bracket(const LieAlgebra& g, const GSection& u, const GSection& v) {
    int n = g.dim();
    if (u.fiber_dim() != n || v.fiber_dim() != n)
        throw std::invalid_argument("g_bracket: fiber dimension mismatch");
    int d = n > 0 ? u.components[0].nvars() : 0;
    GSection out = GSection::zero(d, n);
    for (int i = 0; i < n; ++i) {
        if (u.components[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (v.components[j].is_zero()) continue;
            Poly prod = u.components[i] * v.components[j];
            for (int k = 0; k < n; ++k)
                if (!g.c(i, j, k).is_zero()) out.components[k] += g.c(i, j, k) * prod;
        }
    }
    return out;
}

/// [(X,u),(Y,v)] = ([X,Y], [u,v] + X(v) - Y(u)).
inline LocalSection section_bracket(const LieAlgebra& g, const LocalSection& s1,
                                    const LocalSection& s2) {
    VectorField h = vf_bracket(s1.horizontal, s2.horizontal);
    GSection v = gs_add(g_bracket(g, s1.vertical, s2.vertical),
                        gs_sub(derive_along(s1.horizontal, s2.vertical),
                               derive_along(s2.horizontal, s1.vertical)));
    return LocalSection{std::move(h), std::move(v)};
}

/// (X, u) |-> (X, phi(x) u(x) + omega(X)); the horizontal (anchor) part is
/// untouched.
inline LocalSection apply_gauge(const GaugeMap& a, const LocalSection& s) {
    GSection v = gs_add(a.apply_phi(s.vertical), a.omega.evaluate(s.horizontal));
    return LocalSection{s.horizontal, std::move(v)};
}

/// d omega(X,Y) = X(omega(Y)) - Y(omega(X)) - omega([X,Y]).
inline GSection exterior_derivative_eval(const GOneForm& omega, const VectorField& x,
                                         const VectorField& y) {
    return gs_sub(gs_sub(derive_along(x, omega.evaluate(y)), derive_along(y, omega.evaluate(x))),
                  omega.evaluate(vf_bracket(x, y)));
}

/// One residual family of the compatibility system; all entries zero == pass.
struct ResidualEntry {
    std::string label;
    GSection residual;
};

struct Eq1Report {
    std::vector<ResidualEntry> homomorphism; // phi([e_i,e_j]) - [phi e_i, phi e_j]
    std::vector<ResidualEntry> maurer_cartan; // d omega(di,dj) + [omega_i, omega_j]
    std::vector<ResidualEntry> compatibility; // d phi(di)(e_j) - [phi e_j, omega_i]

    bool pass() const {
        for (const auto* fam : {&homomorphism, &maurer_cartan, &compatibility})
            for (const auto& e : *fam)
                if (!e.residual.is_zero()) return false;
        return true;
    }
};

/// Evaluate the three compatibility conditions on coordinate fields and basis
/// sections. All-zero residuals are equivalent to the gauge map being a
/// bracket homomorphism (the identities are function-linear in both slots).
inline Eq1Report check_eq1(const LieAlgebra& g, const GaugeMap& a) {
    int n = g.dim();
    int d = a.omega.chart_dim();
    Eq1Report report;

    // (a) pointwise homomorphism on basis pairs
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            GSection lhs = a.apply_phi(GSection::constant(d, g.bracket_basis(i, j)));
            GSection rhs = g_bracket(g, a.phi_column(i), a.phi_column(j));
            report.homomorphism.push_back(
                {"phi[e" + std::to_string(i) + ",e" + std::to_string(j) + "]",
                 gs_sub(lhs, rhs)});
        }

    // (b) d omega + [omega, omega] on coordinate pairs
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            VectorField xi = VectorField::coordinate(d, i);
            VectorField xj = VectorField::coordinate(d, j);
            GSection res = gs_add(exterior_derivative_eval(a.omega, xi, xj),
                                  g_bracket(g, a.omega.components[i], a.omega.components[j]));
            report.maurer_cartan.push_back(
                {"domega(d" + std::to_string(i) + ",d" + std::to_string(j) + ")", std::move(res)});
        }

    // (c) d phi(X)(u) = [phi(u), omega(X)] on coordinate fields and basis sections
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) {
            GSection dphi;
            for (int r = 0; r < n; ++r) dphi.components.push_back(a.phi[r][j].derivative(i));
            GSection rhs = g_bracket(g, a.phi_column(j), a.omega.components[i]);
            report.compatibility.push_back(
                {"dphi(d" + std::to_string(i) + ")(e" + std::to_string(j) + ")",
                 gs_sub(dphi, rhs)});
        }

    return report;
}

/// Spanning family of sections for the bracket-homomorphism test: coordinate
/// fields paired with zero, and zero fields paired with constant basis
/// sections.
inline std::vector<LocalSection> spanning_sections(const LieAlgebra& g, int d) {
    std::vector<LocalSection> out;
    for (int i = 0; i < d; ++i)
        out.push_back({VectorField::coordinate(d, i), GSection::zero(d, g.dim())});
    for (int j = 0; j < g.dim(); ++j) {
        Vec e(g.dim());
        e[j] = Rational(1);
        out.push_back({VectorField::zero(d), GSection::constant(d, e)});
    }
    return out;
}

/// Exact symbolic check of A([s1,s2]) = [A s1, A s2] on the supplied pairs.
inline bool is_bracket_homomorphism(const LieAlgebra& g, const GaugeMap& a,
                                    const std::vector<std::pair<LocalSection, LocalSection>>& trials) {
    for (const auto& [s1, s2] : trials) {
        LocalSection lhs = apply_gauge(a, section_bracket(g, s1, s2));
        LocalSection rhs = section_bracket(g, apply_gauge(a, s1), apply_gauge(a, s2));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

inline std::vector<std::pair<LocalSection, LocalSection>> spanning_pairs(const LieAlgebra& g,
                                                                         int d) {
    auto sections = spanning_sections(g, d);
    std::vector<std::pair<LocalSection, LocalSection>> pairs;
    for (std::size_t i = 0; i < sections.size(); ++i)
        for (std::size_t j = i; j < sections.size(); ++j)
            pairs.emplace_back(sections[i], sections[j]);
    return pairs;
}

} // namespace latk
