// Combinatorial transitive-Lie-algebroid descriptors over the nerve of a
// good cover: edge automorphisms phi plus a twisted degree-2 cocycle omega,
// the gauge action eta/m, commutative-case classification, the induced class
// over the H_1(g) system, and pullback along simplicial maps.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ce_homology.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "local_system.hpp"
#include "simplicial.hpp"

namespace latk {

/// One block-triangular transition [[phi, omega],[0, 1]] over a single
/// overlap; composition follows the block product.
struct TransitionMatrix {
    Matrix phi;
    Vec omega_part;
};

/// t2 . t1 = (phi2 phi1, phi2 omega1 + omega2).
inline TransitionMatrix compose_transitions(const TransitionMatrix& t2, const TransitionMatrix& t1) {
    if (t2.phi.cols() != t1.phi.rows() || t2.omega_part.size() != static_cast<std::size_t>(t2.phi.rows()))
        throw std::invalid_argument("compose_transitions: fiber dimension mismatch");
    return TransitionMatrix{t2.phi * t1.phi, vec_add(t2.phi * t1.omega_part, t2.omega_part)};
}

class AlgebroidDescriptor {
public:
    AlgebroidDescriptor(LieAlgebra g, SimplicialComplex base,
                        std::map<std::pair<int, int>, Matrix> edge_phi,
                        std::map<Simplex, Vec> omega2)
        : g_(std::move(g)), base_(std::move(base)) {
        for (auto& [edge, m] : edge_phi) {
            if (!base_.has({edge.first, edge.second}))
                throw std::invalid_argument("edge_phi on a pair that is not an edge of the base");
            if (m.rows() != g_.dim() || m.cols() != g_.dim())
                throw std::invalid_argument("edge_phi matrix shape does not match the Lie algebra");
            if (!m.is_identity()) edge_phi_.emplace(edge, std::move(m));
        }
        for (auto& [tri, v] : omega2) {
            if (tri.size() != 3 || !base_.has(tri))
                throw std::invalid_argument("omega2 value on a non-triangle");
            if (v.size() != static_cast<std::size_t>(g_.dim()))
                throw std::invalid_argument("omega2 value length does not match the Lie algebra");
            if (!vec_is_zero(v)) omega2_.emplace(tri, std::move(v));
        }
    }

    const LieAlgebra& g() const { return g_; }
    const SimplicialComplex& base() const { return base_; }
    const std::map<std::pair<int, int>, Matrix>& edge_phi() const { return edge_phi_; }
    const std::map<Simplex, Vec>& omega2() const { return omega2_; }

    Matrix phi(int a, int b) const {
        if (a == b) return Matrix::identity(g_.dim());
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        auto it = edge_phi_.find(key);
        Matrix m = it == edge_phi_.end() ? Matrix::identity(g_.dim()) : it->second;
        return a < b ? m : inverse_or_throw(m);
    }

    Vec omega_value(const Simplex& tri) const {
        auto it = omega2_.find(tri);
        return it == omega2_.end() ? Vec(g_.dim()) : it->second;
    }

    /// Flat system carried by the edge automorphisms (requires invertibility).
    SystemHandle phi_system() const { return make_system(base_, g_.dim(), edge_phi_); }

    TwistedCochain omega_cochain(SystemHandle system) const {
        TwistedCochain c = TwistedCochain::zero(std::move(system), 2);
        for (const auto& [tri, v] : omega2_) c.set_value(tri, v);
        return c;
    }
    TwistedCochain omega_cochain() const { return omega_cochain(phi_system()); }

    friend bool operator==(const AlgebroidDescriptor& a, const AlgebroidDescriptor& b) {
        return a.g_ == b.g_ && a.base_ == b.base_ && a.edge_phi_ == b.edge_phi_ &&
               a.omega2_ == b.omega2_;
    }

private:
    LieAlgebra g_;
    SimplicialComplex base_;
    std::map<std::pair<int, int>, Matrix> edge_phi_; // identity entries dropped
    std::map<Simplex, Vec> omega2_;                  // zero values dropped
};

struct DescriptorValidation {
    bool ok = true;
    std::vector<std::string> violations;
};

/// (a) every edge matrix is a Lie algebra automorphism, (b) the triangle
/// cocycle condition on phi, (c) omega2 is a twisted cocycle. Reports every
/// failure with its location.
inline DescriptorValidation validate(const AlgebroidDescriptor& d) {
    DescriptorValidation out;
    bool all_invertible = true;
    for (const auto& [edge, m] : d.edge_phi()) {
        std::string loc = "edge (" + std::to_string(edge.first) + "," + std::to_string(edge.second) + ")";
        if (!is_invertible(m)) {
            out.violations.push_back(loc + ": matrix is singular");
            all_invertible = false;
        } else if (!is_homomorphism(d.g(), m)) {
            out.violations.push_back(loc + ": matrix is not a Lie algebra homomorphism");
        }
    }
    bool cocycle_ok = all_invertible;
    if (all_invertible) {
        for (const auto& t : d.base().triangles()) {
            Matrix lhs = d.phi(t[1], t[2]) * d.phi(t[0], t[1]);
            if (lhs != d.phi(t[0], t[2])) {
                out.violations.push_back("triangle " + SimplicialComplex::simplex_str(t) +
                                         ": phi cocycle condition fails");
                cocycle_ok = false;
            }
        }
    }
    if (cocycle_ok && out.violations.empty()) {
        TwistedCochain omega = d.omega_cochain();
        TwistedCochain delta = coboundary(omega);
        if (!delta.is_zero()) {
            for (const auto& [s, v] : delta.values())
                if (!vec_is_zero(v)) {
                    out.violations.push_back("tetrahedron " + SimplicialComplex::simplex_str(s) +
                                             ": omega2 is not a twisted cocycle");
                    break;
                }
        }
    }
    out.ok = out.violations.empty();
    return out;
}

inline AlgebroidDescriptor trivial_descriptor(const LieAlgebra& g, const SimplicialComplex& base) {
    return AlgebroidDescriptor(g, base, {}, {});
}

/// Gauge datum: a Lie algebra automorphism per vertex plus a g-valued
/// 1-cochain on edges; omitted vertices/edges default to identity/zero.
struct GaugeDatum {
    std::map<int, Matrix> eta;
    std::map<std::pair<int, int>, Vec> m;

    Matrix eta_at(int v, int dim) const {
        auto it = eta.find(v);
        return it == eta.end() ? Matrix::identity(dim) : it->second;
    }
    Vec m_at(const std::pair<int, int>& edge, int dim) const {
        auto it = m.find(edge);
        return it == m.end() ? Vec(dim) : it->second;
    }
};

namespace detail {

inline std::vector<Matrix> eta_vector(const GaugeDatum& h, int vertex_count, int dim) {
    std::vector<Matrix> out;
    out.reserve(static_cast<std::size_t>(vertex_count));
    for (int v = 0; v < vertex_count; ++v) out.push_back(h.eta_at(v, dim));
    return out;
}

inline TwistedCochain m_cochain(const GaugeDatum& h, SystemHandle system) {
    TwistedCochain c = TwistedCochain::zero(std::move(system), 1);
    int dim = c.system()->fiber_dim();
    for (const auto& e : c.system()->base().edges())
        c.set_value(e, h.m_at({e[0], e[1]}, dim));
    return c;
}

} // namespace detail

/// phi'(a->b) = eta_b phi(a->b) eta_a^{-1};
/// omega2' = eta.omega2 (pushed to the phi' complex) + d_{phi'}(eta.m).
inline AlgebroidDescriptor gauge_transform(const AlgebroidDescriptor& d, const GaugeDatum& h) {
    int n = d.g().dim();
    std::vector<Matrix> eta = detail::eta_vector(h, d.base().vertex_count(), n);
    for (int v = 0; v < d.base().vertex_count(); ++v)
        if (!is_automorphism(d.g(), eta[v]))
            throw std::invalid_argument("gauge_transform: eta at vertex " + std::to_string(v) +
                                        " is not a Lie algebra automorphism");

    SystemHandle old_system = d.phi_system();
    SystemHandle new_system = gauge_conjugate(*old_system, eta);

    TwistedCochain omega_pushed = pushforward_cochain(d.omega_cochain(old_system), eta, new_system);
    TwistedCochain m_pushed =
        pushforward_cochain(detail::m_cochain(h, old_system), eta, new_system);
    TwistedCochain omega_new = omega_pushed + coboundary(m_pushed);

    std::map<std::pair<int, int>, Matrix> new_phi;
    for (const auto& e : d.base().edges())
        new_phi.emplace(std::make_pair(e[0], e[1]), new_system->transport(e[0], e[1]));
    std::map<Simplex, Vec> new_omega(omega_new.values().begin(), omega_new.values().end());
    return AlgebroidDescriptor(d.g(), d.base(), std::move(new_phi), std::move(new_omega));
}

/// Composite datum of h2-after-h1: (eta2 eta1, m1 + eta1^{-1}.m2), matching
/// the block product of the transition matrices.
inline GaugeDatum compose_gauge(const GaugeDatum& h2, const GaugeDatum& h1,
                                const SimplicialComplex& base, int dim) {
    GaugeDatum out;
    for (int v = 0; v < base.vertex_count(); ++v)
        out.eta[v] = h2.eta_at(v, dim) * h1.eta_at(v, dim);
    for (const auto& e : base.edges()) {
        std::pair<int, int> key{e[0], e[1]};
        Matrix eta1_inv = inverse_or_throw(h1.eta_at(e[1], dim));
        out.m[key] = vec_add(h1.m_at(key, dim), eta1_inv * h2.m_at(key, dim));
    }
    return out;
}

struct ClassificationResult {
    std::vector<Matrix> holonomy; // cotree edges in lexicographic order
    CohomologyClass omega_class;
    int h2_dim = 0;
    std::optional<TwistedCochain> primitive; // set iff the class is exact
    std::optional<Vec> pairing;              // vs the fundamental 2-cycle, when defined
};

/// Classifying invariants in the commutative case: flat-bundle holonomy, the
/// degree-2 class of omega, and dim H^2. Refuses nonabelian g.
inline ClassificationResult classify_commutative(const AlgebroidDescriptor& d) {
    if (!d.g().is_abelian())
        throw std::domain_error(
            "classify_commutative requires an abelian structure algebra; use induced_class");
    DescriptorValidation v = validate(d);
    if (!v.ok) throw std::invalid_argument("classify_commutative: invalid descriptor: " + v.violations[0]);
    SystemHandle system = d.phi_system();
    CohomologyClass cls(d.omega_cochain(system));
    ClassificationResult out{holonomy(*system), cls, cohomology_dim(system, 2),
                             is_exact(cls.representative()),
                             pair_with_fundamental_cycle(cls)};
    return out;
}

/// Given eta conjugating d1's automorphisms onto d2's, decide whether the
/// remaining omega condition is solvable: d_{phi2}(eta.m) = omega2 - eta.omega1.
/// Returns the full gauge datum witnessing d2 = gauge_transform(d1, datum).
inline std::optional<GaugeDatum> equivalent_given_eta(const AlgebroidDescriptor& d1,
                                                      const AlgebroidDescriptor& d2,
                                                      const std::map<int, Matrix>& eta) {
    if (!(d1.g() == d2.g()) || !(d1.base() == d2.base()))
        throw std::invalid_argument("equivalent_given_eta: descriptors live over different data");
    int n = d1.g().dim();
    GaugeDatum probe{eta, {}};
    std::vector<Matrix> eta_vec = detail::eta_vector(probe, d1.base().vertex_count(), n);
    for (const auto& ev : eta_vec)
        if (!is_automorphism(d1.g(), ev))
            throw std::invalid_argument("equivalent_given_eta: eta is not an automorphism");
    for (const auto& e : d1.base().edges()) {
        Matrix conj = eta_vec[e[1]] * d1.phi(e[0], e[1]) * inverse_or_throw(eta_vec[e[0]]);
        if (conj != d2.phi(e[0], e[1]))
            throw std::invalid_argument("equivalent_given_eta: eta does not conjugate phi1 onto phi2 on edge " +
                                        SimplicialComplex::simplex_str(e));
    }
    SystemHandle sys2 = d2.phi_system();
    TwistedCochain pushed = pushforward_cochain(d1.omega_cochain(), eta_vec, sys2);
    TwistedCochain rhs = d2.omega_cochain(sys2) - pushed;
    Matrix delta = delta_matrix(sys2, 1);
    auto sol = solve_affine(delta, cochain_to_vec(rhs));
    if (!sol) return std::nullopt;
    TwistedCochain m_hat = cochain_from_vec(sys2, 1, sol->particular);
    GaugeDatum out{eta, {}};
    for (const auto& [edge, value] : m_hat.values()) {
        // gauge_transform applies eta before m, so pull the solution back
        Vec m_val = inverse_or_throw(eta_vec[edge[1]]) * value;
        if (!vec_is_zero(m_val)) out.m[{edge[0], edge[1]}] = std::move(m_val);
    }
    return out;
}

struct EquivalenceDecision {
    enum class Verdict { equivalent, inequivalent, undecided };
    Verdict verdict = Verdict::undecided;
    std::optional<GaugeDatum> witness;
};

/// Full isomorphism decision for abelian g: tree-normalize both descriptors,
/// search the holonomy intertwiner space for a constant eta that also makes
/// omega2 - eta.omega1 exact, then look for an invertible member of the
/// resulting affine matrix family. "undecided" only past the search cap.
inline EquivalenceDecision equivalent_abelian(const AlgebroidDescriptor& d1,
                                              const AlgebroidDescriptor& d2,
                                              std::size_t search_cap = 4) {
    if (!(d1.g() == d2.g())) throw std::invalid_argument("equivalent_abelian: different structure algebras");
    if (!(d1.base() == d2.base())) throw std::invalid_argument("equivalent_abelian: different bases");
    if (!d1.g().is_abelian()) throw std::domain_error("equivalent_abelian requires abelian g");
    for (const auto* d : {&d1, &d2}) {
        DescriptorValidation v = validate(*d);
        if (!v.ok) throw std::invalid_argument("equivalent_abelian: invalid descriptor: " + v.violations[0]);
    }
    int n = d1.g().dim();
    const SimplicialComplex& base = d1.base();

    NormalizedSystem norm1 = tree_normalize(*d1.phi_system());
    NormalizedSystem norm2 = tree_normalize(*d2.phi_system());
    GaugeDatum to_norm1, to_norm2;
    for (int v = 0; v < base.vertex_count(); ++v) {
        to_norm1.eta[v] = norm1.vertex_gauge[v];
        to_norm2.eta[v] = norm2.vertex_gauge[v];
    }
    AlgebroidDescriptor n1 = gauge_transform(d1, to_norm1);
    AlgebroidDescriptor n2 = gauge_transform(d2, to_norm2);

    std::vector<std::pair<Matrix, Matrix>> holonomy_pairs;
    for (std::size_t i = 0; i < norm1.tree.cotree_edges.size(); ++i) {
        auto [a, b] = norm1.tree.cotree_edges[i];
        holonomy_pairs.emplace_back(n1.phi(a, b), n2.phi(a, b));
    }
    std::vector<Matrix> basis = intertwiner_space(n, holonomy_pairs);
    if (basis.empty()) return {EquivalenceDecision::Verdict::inequivalent, std::nullopt};

    // joint affine system: sum_i c_i (E_i . omega1) + delta m = omega2
    SystemHandle sys2 = n2.phi_system();
    Matrix delta = delta_matrix(sys2, 1);
    std::vector<Vec> pushed_columns;
    for (const auto& e_mat : basis) {
        std::vector<Matrix> const_eta(base.vertex_count(), e_mat);
        TwistedCochain pushed = pushforward_cochain(n1.omega_cochain(n1.phi_system()), const_eta, sys2);
        pushed_columns.push_back(cochain_to_vec(pushed));
    }
    Vec target = cochain_to_vec(n2.omega_cochain(sys2));

    int r = static_cast<int>(basis.size());
    int m_cols = delta.cols();
    Matrix joint(delta.rows(), r + m_cols);
    for (int i = 0; i < r; ++i)
        for (int row = 0; row < delta.rows(); ++row) joint(row, i) = pushed_columns[i][row];
    for (int j = 0; j < m_cols; ++j)
        for (int row = 0; row < delta.rows(); ++row) joint(row, r + j) = delta(row, j);

    auto sol = solve_affine(joint, target);
    if (!sol) return {EquivalenceDecision::Verdict::inequivalent, std::nullopt};

    // project the solution space onto the eta coefficients, keeping the m part
    std::vector<Vec> directions; // full-length kernel columns with independent c-parts
    std::vector<int> pivot_rows;
    for (int col = 0; col < sol->kernel.cols(); ++col) {
        Vec v = sol->kernel.col(col);
        for (std::size_t t = 0; t < directions.size(); ++t) {
            if (v[pivot_rows[t]].is_zero()) continue;
            Vec reduced = vec_sub(v, vec_scale(v[pivot_rows[t]], directions[t]));
            v = std::move(reduced);
        }
        int pivot = -1;
        for (int i = 0; i < r; ++i)
            if (!v[i].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == -1) continue; // pure-m direction, any m works
        v = vec_scale(v[pivot].inverse(), v);
        directions.push_back(std::move(v));
        pivot_rows.push_back(pivot);
    }

    auto family_matrix = [&](const Vec& coeffs) {
        Matrix acc(n, n);
        for (int i = 0; i < r; ++i)
            if (!coeffs[i].is_zero()) acc = acc + (coeffs[i] * basis[i]);
        return acc;
    };
    Vec c_part(sol->particular.begin(), sol->particular.begin() + r);
    Matrix offset = family_matrix(c_part);
    std::vector<Matrix> dir_matrices;
    for (const auto& dvec : directions)
        dir_matrices.push_back(family_matrix(Vec(dvec.begin(), dvec.begin() + r)));

    InvertibleSearch search = find_invertible_in_family(offset, dir_matrices, search_cap);
    if (search.status == InvertibleSearch::Status::undecided)
        return {EquivalenceDecision::Verdict::undecided, std::nullopt};
    if (search.status == InvertibleSearch::Status::none_exists)
        return {EquivalenceDecision::Verdict::inequivalent, std::nullopt};

    // reconstruct the full solution at the found grid point
    Vec full = sol->particular;
    for (std::size_t j = 0; j < directions.size(); ++j)
        full = vec_add(full, vec_scale(search.coefficients[j], directions[j]));
    Matrix eta0 = family_matrix(Vec(full.begin(), full.begin() + r));

    GaugeDatum mid;
    for (int v = 0; v < base.vertex_count(); ++v) mid.eta[v] = eta0;
    Matrix eta0_inv = inverse_or_throw(eta0);
    {
        Vec m_flat(full.begin() + r, full.end());
        TwistedCochain m_hat = cochain_from_vec(sys2, 1, m_flat);
        for (const auto& [edge, value] : m_hat.values()) {
            Vec m_val = eta0_inv * value;
            if (!vec_is_zero(m_val)) mid.m[{edge[0], edge[1]}] = std::move(m_val);
        }
    }

    // full witness: denormalize2 . mid . normalize1
    GaugeDatum from_norm2;
    for (int v = 0; v < base.vertex_count(); ++v)
        from_norm2.eta[v] = inverse_or_throw(norm2.vertex_gauge[v]);
    GaugeDatum witness = compose_gauge(
        from_norm2, compose_gauge(mid, to_norm1, base, n), base, n);

    if (!(gauge_transform(d1, witness) == d2))
        throw std::logic_error("equivalent_abelian: witness failed to round-trip");
    return {EquivalenceDecision::Verdict::equivalent, std::move(witness)};
}

struct InducedClassResult {
    QuotientPresentation h1;   // g -> H_1(g) = g/[g,g]
    SystemHandle system;       // induced flat system with fiber H_1(g)
    CohomologyClass omega_bar; // class of the projected cocycle
    int h2_dim = 0;
    std::optional<TwistedCochain> primitive;
    std::optional<Vec> pairing;
};

/// The degree-2 class of omega pushed through g -> H_1(g), over the induced
/// flat system. Defined for arbitrary (also nonabelian) g.
inline InducedClassResult induced_class(const AlgebroidDescriptor& d) {
    DescriptorValidation v = validate(d);
    if (!v.ok) throw std::invalid_argument("induced_class: invalid descriptor: " + v.violations[0]);
    QuotientPresentation h1 = quotient(d.g().dim(), derived_subalgebra(d.g()));
    SystemHandle induced = induced_system(d.g(), d.base(), d.edge_phi(), 1);
    if (induced->fiber_dim() != h1.quotient_dim)
        throw std::logic_error("induced_class: homology fiber dimension mismatch");
    TwistedCochain omega_bar = TwistedCochain::zero(induced, 2);
    for (const auto& tri : d.base().triangles())
        omega_bar.set_value(tri, h1.project(d.omega_value(tri)));
    CohomologyClass cls(std::move(omega_bar)); // construction verifies the cocycle condition
    InducedClassResult out{std::move(h1), induced, cls, cohomology_dim(induced, 2),
                           is_exact(cls.representative()),
                           pair_with_fundamental_cycle(cls)};
    return out;
}

/// phi'(a,b) = phi(f(a), f(b)) (identity on collapsed edges); omega'(sigma) =
/// sign-and-transport-adjusted omega(f(sigma)) (zero on collapsed triangles).
inline AlgebroidDescriptor pullback_descriptor(const AlgebroidDescriptor& d,
                                               const SimplicialMap& f) {
    ComplexCheck ok = validate_map(f);
    if (!ok.ok) throw std::invalid_argument("pullback_descriptor: " + ok.message);
    if (!(f.target == d.base()))
        throw std::invalid_argument("pullback_descriptor: map target is not the descriptor base");

    std::map<std::pair<int, int>, Matrix> new_phi;
    for (const auto& e : f.source.edges()) {
        int w0 = f(e[0]), w1 = f(e[1]);
        if (w0 == w1) continue;
        new_phi.emplace(std::make_pair(e[0], e[1]), d.phi(w0, w1));
    }

    std::map<Simplex, Vec> new_omega;
    for (const auto& tri : f.source.triangles()) {
        std::vector<int> image{f(tri[0]), f(tri[1]), f(tri[2])};
        Simplex sorted = image;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue; // collapsed
        // parity of the permutation sorting the image tuple
        int sign = 1;
        std::vector<int> perm = image;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) {
                    std::swap(perm[i], perm[j]);
                    sign = -sign;
                }
        // omega(sorted) lives over max(sorted); move it to the fiber over the
        // image of the last source vertex, inside the image triangle
        Vec value = d.phi(sorted[2], image[2]) * d.omega_value(sorted);
        if (sign < 0) value = vec_scale(Rational(-1), value);
        if (!vec_is_zero(value)) new_omega.emplace(tri, std::move(value));
    }
    return AlgebroidDescriptor(d.g(), f.source, std::move(new_phi), std::move(new_omega));
}

} // namespace latk
