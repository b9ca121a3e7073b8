// Finite abstract simplicial complexes (nerves of good covers) and
// simplicial maps. Vertices are 0..n-1; simplices are strictly increasing
// tuples under that order.
#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace latk {

using Simplex = std::vector<int>;

struct ComplexCheck {
    bool ok = true;
    std::string message;
};

class SimplicialComplex {
public:
    SimplicialComplex() : vertex_count_(0) {}
    SimplicialComplex(int vertex_count, std::set<Simplex> simplices)
        : vertex_count_(vertex_count), simplices_(std::move(simplices)) {}

    /// Build from maximal simplices; all faces (including vertices) are
    /// completed automatically.
    static SimplicialComplex from_maximal(int vertex_count, const std::vector<Simplex>& maximal) {
        std::set<Simplex> all;
        for (int v = 0; v < vertex_count; ++v) all.insert({v});
        for (Simplex s : maximal) {
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw std::invalid_argument("simplex with repeated vertex");
            for (int v : s)
                if (v < 0 || v >= vertex_count)
                    throw std::invalid_argument("simplex vertex out of range");
            // all nonempty subsets
            std::size_t k = s.size();
            for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
                Simplex face;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (std::size_t(1) << i)) face.push_back(s[i]);
                all.insert(std::move(face));
            }
        }
        return SimplicialComplex(vertex_count, std::move(all));
    }

    int vertex_count() const { return vertex_count_; }
    const std::set<Simplex>& simplices() const { return simplices_; }
    bool has(const Simplex& s) const { return simplices_.count(s) > 0; }

    /// Simplices of dimension k in lexicographic order.
    std::vector<Simplex> simplices_of_dim(int k) const {
        std::vector<Simplex> out;
        for (const auto& s : simplices_)
            if (static_cast<int>(s.size()) == k + 1) out.push_back(s);
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<Simplex> edges() const { return simplices_of_dim(1); }
    std::vector<Simplex> triangles() const { return simplices_of_dim(2); }

    int max_dim() const {
        int d = -1;
        for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
        return d;
    }

    int euler_characteristic() const {
        int chi = 0;
        for (const auto& s : simplices_) chi += (s.size() % 2 == 1) ? 1 : -1;
        return chi;
    }

    /// Face closure, vertex coverage and ordering; reports the first problem.
    ComplexCheck validate() const {
        for (const auto& s : simplices_) {
            if (s.empty()) return {false, "empty simplex stored"};
            if (!std::is_sorted(s.begin(), s.end()) ||
                std::adjacent_find(s.begin(), s.end()) != s.end())
                return {false, "simplex " + simplex_str(s) + " is not strictly increasing"};
            for (int v : s)
                if (v < 0 || v >= vertex_count_)
                    return {false, "simplex " + simplex_str(s) + " has a vertex out of range"};
            if (s.size() > 1) {
                for (std::size_t skip = 0; skip < s.size(); ++skip) {
                    Simplex face;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != skip) face.push_back(s[i]);
                    if (!has(face))
                        return {false, "missing face " + simplex_str(face) + " of " + simplex_str(s)};
                }
            }
        }
        for (int v = 0; v < vertex_count_; ++v)
            if (!has({v})) return {false, "vertex " + std::to_string(v) + " does not appear"};
        return {};
    }

    bool is_connected() const {
        if (vertex_count_ == 0) return true;
        std::vector<std::vector<int>> adj(vertex_count_);
        for (const auto& e : edges()) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
        std::vector<bool> seen(vertex_count_, false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    }

    static std::string simplex_str(const Simplex& s) {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(s[i]);
        }
        return out + "}";
    }

private:
    int vertex_count_;
    std::set<Simplex> simplices_;
};

/// Named test fixtures: circle3 (hollow triangle), sphere_tetra (boundary of
/// the 3-simplex), torus7 (7-vertex minimal torus triangulation).
inline SimplicialComplex builtin_complex(const std::string& name) {
    if (name == "circle3")
        return SimplicialComplex::from_maximal(3, {{0, 1}, {1, 2}, {0, 2}});
    if (name == "sphere_tetra")
        return SimplicialComplex::from_maximal(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    if (name == "torus7") {
        std::vector<Simplex> tris;
        for (int i = 0; i < 7; ++i) {
            tris.push_back({i, (i + 1) % 7, (i + 3) % 7});
            tris.push_back({i, (i + 2) % 7, (i + 3) % 7});
        }
        return SimplicialComplex::from_maximal(7, tris);
    }
    throw std::invalid_argument("unknown builtin complex: " + name);
}

struct SimplicialMap {
    SimplicialComplex source;
    SimplicialComplex target;
    std::vector<int> vertex_map;

    int operator()(int v) const { return vertex_map.at(static_cast<std::size_t>(v)); }

    /// Image of a simplex: deduplicated and sorted.
    Simplex image(const Simplex& s) const {
        Simplex img;
        for (int v : s) img.push_back((*this)(v));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        return img;
    }
};

/// Exhaustive simplex-preservation check; names the offending simplex.
inline ComplexCheck validate_map(const SimplicialMap& f) {
    if (static_cast<int>(f.vertex_map.size()) != f.source.vertex_count())
        return {false, "vertex map length does not match source vertex count"};
    for (int v : f.vertex_map)
        if (v < 0 || v >= f.target.vertex_count())
            return {false, "vertex image out of range"};
    for (const auto& s : f.source.simplices()) {
        Simplex img = f.image(s);
        if (!f.target.has(img))
            return {false, "image " + SimplicialComplex::simplex_str(img) + " of simplex " +
                               SimplicialComplex::simplex_str(s) + " is not a simplex of the target"};
    }
    return {};
}

inline SimplicialMap compose_maps(const SimplicialMap& g, const SimplicialMap& f) {
    if (f.target.vertex_count() != g.source.vertex_count())
        throw std::invalid_argument("compose_maps: middle complexes do not match");
    std::vector<int> vm(f.vertex_map.size());
    for (std::size_t i = 0; i < vm.size(); ++i) vm[i] = g.vertex_map[f.vertex_map[i]];
    return SimplicialMap{f.source, g.target, std::move(vm)};
}

} // namespace latk
