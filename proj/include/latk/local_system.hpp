// Flat bundles over a simplicial complex as invertible edge transports with
// triangle compatibility, twisted simplicial cochains, and the cocycle /
// coboundary solvers behind class computations.
//
// Conventions, fixed once for the whole artifact:
//   * transports are stored on edges (i, j) with i < j; the reverse direction
//     is the inverse matrix; identity transports may be omitted.
//   * a k-cochain value on a simplex lives in the fiber over its LAST vertex.
//   * twisted coboundary: only the face missing the last vertex is
//     transported,
//       (dc)(v0..v_{k+1}) = sum_{i=0}^{k} (-1)^i c(v0,..,v_i omitted,..,v_{k+1})
//                           + (-1)^{k+1} rho(v_k -> v_{k+1}) c(v0..v_k),
//     which satisfies d.d = 0 exactly when the system is flat.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ce_homology.hpp"
#include "lie_algebra.hpp"
#include "matrix.hpp"
#include "simplicial.hpp"

namespace latk {

inline bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertex_count() == b.vertex_count() && a.simplices() == b.simplices();
}

struct FlatCheck {
    bool ok = true;
    Simplex violating_triangle;
    std::string message;
};

class LocalSystem {
public:
    LocalSystem() : fiber_dim_(0) {}
    LocalSystem(SimplicialComplex base, int fiber_dim,
                std::map<std::pair<int, int>, Matrix> transports)
        : base_(std::move(base)), fiber_dim_(fiber_dim) {
        for (auto& [edge, m] : transports) {
            if (edge.first >= edge.second)
                throw std::invalid_argument("transport edge must be stored as (i, j) with i < j");
            if (!base_.has({edge.first, edge.second}))
                throw std::invalid_argument("transport on a pair that is not an edge of the base");
            if (m.rows() != fiber_dim_ || m.cols() != fiber_dim_)
                throw std::invalid_argument("transport matrix shape does not match fiber");
            if (!is_invertible(m)) throw std::invalid_argument("transport matrix is singular");
            if (!m.is_identity()) transports_.emplace(edge, std::move(m));
        }
    }

    const SimplicialComplex& base() const { return base_; }
    int fiber_dim() const { return fiber_dim_; }
    const std::map<std::pair<int, int>, Matrix>& stored_transports() const { return transports_; }

    /// Transport fiber(a) -> fiber(b) for any oriented pair; identity on a
    /// vertex, inverse of the stored matrix against the orientation.
    Matrix transport(int a, int b) const {
        if (a == b) return Matrix::identity(fiber_dim_);
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        auto it = transports_.find(key);
        Matrix m = it == transports_.end() ? Matrix::identity(fiber_dim_) : it->second;
        return a < b ? m : inverse_or_throw(m);
    }

    /// Exhaustive triangle check of transport(v1->v2) transport(v0->v1) =
    /// transport(v0->v2); reports the first violation.
    FlatCheck check_flat() const {
        for (const auto& t : base_.triangles()) {
            Matrix lhs = transport(t[1], t[2]) * transport(t[0], t[1]);
            if (lhs != transport(t[0], t[2]))
                return {false, t,
                        "flatness fails on triangle " + SimplicialComplex::simplex_str(t)};
        }
        return {};
    }

    friend bool operator==(const LocalSystem& a, const LocalSystem& b) {
        return a.fiber_dim_ == b.fiber_dim_ && a.base_ == b.base_ &&
               a.transports_ == b.transports_;
    }

private:
    SimplicialComplex base_;
    int fiber_dim_;
    std::map<std::pair<int, int>, Matrix> transports_; // identity entries dropped
};

using SystemHandle = std::shared_ptr<const LocalSystem>;

inline SystemHandle make_system(SimplicialComplex base, int fiber_dim,
                                std::map<std::pair<int, int>, Matrix> transports) {
    return std::make_shared<const LocalSystem>(std::move(base), fiber_dim, std::move(transports));
}

/// Twisted k-cochain: one fiber vector per k-simplex of the base.
class TwistedCochain {
public:
    TwistedCochain() : degree_(0) {}
    TwistedCochain(SystemHandle system, int degree, std::map<Simplex, Vec> values)
        : system_(std::move(system)), degree_(degree), values_(std::move(values)) {
        for (const auto& s : system_->base().simplices_of_dim(degree_)) {
            auto it = values_.find(s);
            if (it == values_.end())
                values_.emplace(s, Vec(system_->fiber_dim()));
            else if (it->second.size() != static_cast<std::size_t>(system_->fiber_dim()))
                throw std::invalid_argument("cochain value length does not match fiber");
        }
        if (values_.size() != system_->base().simplices_of_dim(degree_).size())
            throw std::invalid_argument("cochain value on a non-simplex");
    }

    static TwistedCochain zero(SystemHandle system, int degree) {
        return TwistedCochain(std::move(system), degree, {});
    }

    const SystemHandle& system() const { return system_; }
    int degree() const { return degree_; }
    const std::map<Simplex, Vec>& values() const { return values_; }

    const Vec& value(const Simplex& s) const {
        auto it = values_.find(s);
        if (it == values_.end()) throw std::out_of_range("no cochain value on that simplex");
        return it->second;
    }
    void set_value(const Simplex& s, Vec v) {
        auto it = values_.find(s);
        if (it == values_.end()) throw std::out_of_range("no cochain slot on that simplex");
        if (v.size() != it->second.size()) throw std::invalid_argument("cochain value length");
        it->second = std::move(v);
    }

    bool is_zero() const {
        for (const auto& [s, v] : values_)
            if (!vec_is_zero(v)) return false;
        return true;
    }

    /// Same degree and structurally equal system required.
    friend TwistedCochain operator+(const TwistedCochain& a, const TwistedCochain& b) {
        a.check_compatible(b);
        TwistedCochain r = a;
        for (auto& [s, v] : r.values_) v = vec_add(v, b.value(s));
        return r;
    }
    friend TwistedCochain operator-(const TwistedCochain& a, const TwistedCochain& b) {
        a.check_compatible(b);
        TwistedCochain r = a;
        for (auto& [s, v] : r.values_) v = vec_sub(v, b.value(s));
        return r;
    }
    friend bool operator==(const TwistedCochain& a, const TwistedCochain& b) {
        return a.degree_ == b.degree_ && *a.system_ == *b.system_ && a.values_ == b.values_;
    }

private:
    void check_compatible(const TwistedCochain& o) const {
        if (degree_ != o.degree_ || !(*system_ == *o.system_))
            throw std::invalid_argument("cochain arithmetic across different complexes");
    }

    SystemHandle system_;
    int degree_;
    std::map<Simplex, Vec> values_;
};

inline TwistedCochain coboundary(const TwistedCochain& c) {
    if (c.degree() < 0) throw std::invalid_argument("coboundary of negative degree");
    const LocalSystem& rho = *c.system();
    int k = c.degree();
    TwistedCochain out = TwistedCochain::zero(c.system(), k + 1);
    for (const auto& sigma : rho.base().simplices_of_dim(k + 1)) {
        Vec acc(rho.fiber_dim());
        for (int i = 0; i <= k; ++i) {
            Simplex face;
            for (int t = 0; t <= k + 1; ++t)
                if (t != i) face.push_back(sigma[t]);
            Vec term = c.value(face);
            if (i % 2 == 1) term = vec_scale(Rational(-1), term);
            acc = vec_add(acc, term);
        }
        Simplex last_face(sigma.begin(), sigma.end() - 1);
        Vec transported = rho.transport(sigma[k], sigma[k + 1]) * c.value(last_face);
        if ((k + 1) % 2 == 1) transported = vec_scale(Rational(-1), transported);
        acc = vec_add(acc, transported);
        out.set_value(sigma, std::move(acc));
    }
    return out;
}

/// Cochain flattened over lexicographically ordered simplices.
inline Vec cochain_to_vec(const TwistedCochain& c) {
    Vec out;
    for (const auto& s : c.system()->base().simplices_of_dim(c.degree())) {
        const Vec& v = c.value(s);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

inline TwistedCochain cochain_from_vec(SystemHandle system, int degree, const Vec& flat) {
    TwistedCochain out = TwistedCochain::zero(system, degree);
    int n = system->fiber_dim();
    auto simplices = system->base().simplices_of_dim(degree);
    if (flat.size() != simplices.size() * static_cast<std::size_t>(n))
        throw std::invalid_argument("flattened cochain has wrong length");
    std::size_t pos = 0;
    for (const auto& s : simplices) {
        Vec v(flat.begin() + pos, flat.begin() + pos + n);
        out.set_value(s, std::move(v));
        pos += n;
    }
    return out;
}

/// Matrix of the twisted coboundary C^k -> C^{k+1} in the flattened bases.
inline Matrix delta_matrix(const SystemHandle& system, int k) {
    int n = system->fiber_dim();
    auto domain = k < 0 ? std::vector<Simplex>{} : system->base().simplices_of_dim(k);
    int rows = static_cast<int>(system->base().simplices_of_dim(k + 1).size()) * n;
    Matrix d(rows, static_cast<int>(domain.size()) * n);
    int col = 0;
    for (const auto& s : domain)
        for (int f = 0; f < n; ++f, ++col) {
            TwistedCochain basis = TwistedCochain::zero(system, k);
            Vec e(n);
            e[f] = Rational(1);
            basis.set_value(s, e);
            Vec image = cochain_to_vec(coboundary(basis));
            for (int r = 0; r < rows; ++r) d(r, col) = image[r];
        }
    return d;
}

/// dim H^k = dim ker d_k - rank d_{k-1}; computed exactly.
inline int cohomology_dim(const SystemHandle& system, int k) {
    if (k < 0) throw std::invalid_argument("negative cohomology degree");
    FlatCheck flat = system->check_flat();
    if (!flat.ok) throw std::domain_error(flat.message);
    Matrix dk = delta_matrix(system, k);
    int ker = dk.cols() - rank(dk);
    int im = k == 0 ? 0 : rank(delta_matrix(system, k - 1));
    return ker - im;
}

/// A primitive m with dm = c, or nullopt when the class of c is nonzero.
/// Requires c to be a cocycle.
inline std::optional<TwistedCochain> is_exact(const TwistedCochain& c) {
    if (!coboundary(c).is_zero()) throw std::invalid_argument("is_exact: input is not a cocycle");
    Matrix d = delta_matrix(c.system(), c.degree() - 1);
    auto sol = solve_affine(d, cochain_to_vec(c));
    if (!sol) return std::nullopt;
    return cochain_from_vec(c.system(), c.degree() - 1, sol->particular);
}

/// Cocycle wrapper; construction enforces the cocycle condition.
class CohomologyClass {
public:
    explicit CohomologyClass(TwistedCochain representative) : rep_(std::move(representative)) {
        if (!coboundary(rep_).is_zero())
            throw std::invalid_argument("cohomology class representative is not a cocycle");
    }
    const TwistedCochain& representative() const { return rep_; }
    bool is_trivial() const { return is_exact(rep_).has_value(); }

private:
    TwistedCochain rep_;
};

/// Lexicographic BFS spanning tree from vertex 0 with path transports
/// P_v : fiber(0) -> fiber(v). Deterministic by construction.
struct SpanningTreeData {
    std::vector<int> parent; // parent[0] = -1
    std::vector<Matrix> path_transport;
    std::vector<std::pair<int, int>> cotree_edges; // lexicographic
};

inline SpanningTreeData spanning_tree(const LocalSystem& rho) {
    const SimplicialComplex& base = rho.base();
    if (!base.is_connected()) throw std::domain_error("base complex is disconnected");
    int nv = base.vertex_count();
    std::vector<std::vector<int>> adj(nv);
    for (const auto& e : base.edges()) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    SpanningTreeData out;
    out.parent.assign(nv, -2);
    out.path_transport.assign(nv, Matrix::identity(rho.fiber_dim()));
    std::queue<int> q;
    q.push(0);
    out.parent[0] = -1;
    std::set<std::pair<int, int>> tree_edges;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v]) {
            if (out.parent[w] != -2) continue;
            out.parent[w] = v;
            out.path_transport[w] = rho.transport(v, w) * out.path_transport[v];
            tree_edges.insert(std::minmax(v, w));
            q.push(w);
        }
    }
    for (const auto& e : base.edges()) {
        std::pair<int, int> key{e[0], e[1]};
        if (!tree_edges.count(key)) out.cotree_edges.push_back(key);
    }
    return out;
}

/// Loop transports of the cotree edges, conjugated to the root fiber. The
/// all-identity list certifies the system is trivializable by the tree gauge.
inline std::vector<Matrix> holonomy(const LocalSystem& rho) {
    SpanningTreeData tree = spanning_tree(rho);
    std::vector<Matrix> out;
    for (const auto& [a, b] : tree.cotree_edges)
        out.push_back(inverse_or_throw(tree.path_transport[b]) * rho.transport(a, b) *
                      tree.path_transport[a]);
    return out;
}

/// Conjugate every transport by invertible vertex matrices:
/// rho'(a->b) = eta_b rho(a->b) eta_a^{-1}.
inline SystemHandle gauge_conjugate(const LocalSystem& rho, const std::vector<Matrix>& eta) {
    if (static_cast<int>(eta.size()) != rho.base().vertex_count())
        throw std::invalid_argument("gauge_conjugate: one matrix per vertex required");
    std::map<std::pair<int, int>, Matrix> transports;
    for (const auto& e : rho.base().edges())
        transports.emplace(std::make_pair(e[0], e[1]),
                           eta[e[1]] * rho.transport(e[0], e[1]) * inverse_or_throw(eta[e[0]]));
    return make_system(rho.base(), rho.fiber_dim(), std::move(transports));
}

/// Push a cochain through vertex matrices onto the conjugated system:
/// (eta . c)(sigma) = eta_{last(sigma)} c(sigma). A chain isomorphism of the
/// twisted complexes.
inline TwistedCochain pushforward_cochain(const TwistedCochain& c, const std::vector<Matrix>& eta,
                                          SystemHandle target) {
    TwistedCochain out = TwistedCochain::zero(std::move(target), c.degree());
    for (const auto& [s, v] : c.values()) out.set_value(s, eta[s.back()] * v);
    return out;
}

/// Tree-normalized copy: tree edges become identity, cotree edges carry the
/// holonomy. Returns the normalized system, the normalizing vertex gauge, and
/// the tree data.
struct NormalizedSystem {
    SystemHandle system;
    std::vector<Matrix> vertex_gauge; // eta_v = P_v^{-1}
    SpanningTreeData tree;
};

inline NormalizedSystem tree_normalize(const LocalSystem& rho) {
    SpanningTreeData tree = spanning_tree(rho);
    std::vector<Matrix> eta;
    eta.reserve(tree.path_transport.size());
    for (const auto& p : tree.path_transport) eta.push_back(inverse_or_throw(p));
    SystemHandle norm = gauge_conjugate(rho, eta);
    return {std::move(norm), std::move(eta), std::move(tree)};
}

/// Associated flat system with fiber H_k(g) induced by edge automorphisms.
inline SystemHandle induced_system(const LieAlgebra& g, const SimplicialComplex& base,
                                   const std::map<std::pair<int, int>, Matrix>& edge_autos,
                                   int k) {
    for (const auto& [edge, phi] : edge_autos)
        if (!is_automorphism(g, phi))
            throw std::invalid_argument("induced_system: edge matrix is not an automorphism");
    // cocycle condition on the automorphisms themselves
    LocalSystem phi_system(base, g.dim(), edge_autos);
    FlatCheck flat = phi_system.check_flat();
    if (!flat.ok) throw std::invalid_argument("induced_system: " + flat.message);

    std::map<std::pair<int, int>, Matrix> transports;
    for (const auto& e : base.edges()) {
        Matrix phi = phi_system.transport(e[0], e[1]);
        transports.emplace(std::make_pair(e[0], e[1]), induced_on_homology(g, phi, k));
    }
    SystemHandle out = make_system(base, transports.empty()
                                             ? homology_dims(ce_complex(g)).at(k)
                                             : transports.begin()->second.rows(),
                                   std::move(transports));
    FlatCheck induced_flat = out->check_flat();
    if (!induced_flat.ok) throw std::logic_error("induced system lost flatness: functoriality bug");
    return out;
}

/// Pullback along a simplicial map: transport over (a, b) is the transport
/// over (f(a), f(b)), identity when the edge collapses.
inline SystemHandle pullback_system(const LocalSystem& rho, const SimplicialMap& f) {
    ComplexCheck ok = validate_map(f);
    if (!ok.ok) throw std::invalid_argument("pullback_system: " + ok.message);
    if (!(f.target == rho.base()))
        throw std::invalid_argument("pullback_system: map target is not the system base");
    std::map<std::pair<int, int>, Matrix> transports;
    for (const auto& e : f.source.edges()) {
        int w0 = f(e[0]), w1 = f(e[1]);
        if (w0 == w1) continue;
        transports.emplace(std::make_pair(e[0], e[1]), rho.transport(w0, w1));
    }
    SystemHandle out = make_system(f.source, rho.fiber_dim(), std::move(transports));
    FlatCheck flat = out->check_flat();
    if (!flat.ok) throw std::logic_error("pullback lost flatness");
    return out;
}

/// Generator of ker of the untwisted boundary C_2 -> C_1 when it is one
/// dimensional: integral entries, gcd 1, first nonzero positive. This is the
/// fundamental 2-cycle used for pairing reports on closed oriented surfaces.
inline std::optional<std::map<Simplex, Rational>> fundamental_two_cycle(
    const SimplicialComplex& base) {
    auto tris = base.simplices_of_dim(2);
    auto edges = base.simplices_of_dim(1);
    if (tris.empty()) return std::nullopt;
    std::map<Simplex, int> edge_index;
    for (std::size_t i = 0; i < edges.size(); ++i) edge_index[edges[i]] = static_cast<int>(i);
    Matrix boundary(static_cast<int>(edges.size()), static_cast<int>(tris.size()));
    for (std::size_t j = 0; j < tris.size(); ++j) {
        const Simplex& t = tris[j];
        boundary(edge_index.at({t[1], t[2]}), static_cast<int>(j)) += Rational(1);
        boundary(edge_index.at({t[0], t[2]}), static_cast<int>(j)) += Rational(-1);
        boundary(edge_index.at({t[0], t[1]}), static_cast<int>(j)) += Rational(1);
    }
    Matrix kernel = kernel_basis(boundary);
    if (kernel.cols() != 1) return std::nullopt;
    // clear denominators, reduce content, fix the sign
    std::int64_t lcm = 1;
    for (int i = 0; i < kernel.rows(); ++i)
        lcm = std::lcm(lcm, kernel(i, 0).den());
    std::int64_t content = 0;
    for (int i = 0; i < kernel.rows(); ++i)
        content = std::gcd(content, (Rational(lcm) * kernel(i, 0)).num());
    Rational scale = content == 0 ? Rational(1) : Rational(lcm, content);
    int first_sign = 0;
    for (int i = 0; i < kernel.rows() && first_sign == 0; ++i)
        first_sign = (scale * kernel(i, 0)).sign();
    if (first_sign < 0) scale = -scale;
    std::map<Simplex, Rational> out;
    for (std::size_t j = 0; j < tris.size(); ++j) out[tris[j]] = scale * kernel(static_cast<int>(j), 0);
    return out;
}

/// Pairing of a degree-2 class with the fundamental 2-cycle, available when
/// the system is trivializable (all holonomies identity) and the base has a
/// one-dimensional top cycle space. The cochain is transported to the
/// trivialized frame first, so the value is independent of the tree gauge.
inline std::optional<Vec> pair_with_fundamental_cycle(const CohomologyClass& cls) {
    const TwistedCochain& rep = cls.representative();
    if (rep.degree() != 2) return std::nullopt;
    const LocalSystem& rho = *rep.system();
    if (!rho.base().is_connected()) return std::nullopt;
    NormalizedSystem norm = tree_normalize(rho);
    for (const auto& [edge, m] : norm.system->stored_transports()) {
        (void)edge;
        if (!m.is_identity()) return std::nullopt; // nontrivial holonomy
    }
    auto cycle = fundamental_two_cycle(rho.base());
    if (!cycle) return std::nullopt;
    TwistedCochain flat_rep = pushforward_cochain(rep, norm.vertex_gauge, norm.system);
    Vec acc(rho.fiber_dim());
    for (const auto& [tri, coeff] : *cycle)
        acc = vec_add(acc, vec_scale(coeff, flat_rep.value(tri)));
    return acc;
}

} // namespace latk
