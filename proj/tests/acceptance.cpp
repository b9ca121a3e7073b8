// Acceptance suite: one pass/fail line per criterion, exact arithmetic, zero
// tolerance. Oracles for the homology and cohomology criteria are built here,
// independently of the library's elimination code.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <latk/io.hpp>
#include <latk/latk.hpp>

#include "support.hpp"

using namespace latk;
using testsupport::Rng;

namespace {

struct Check {
    int total = 0;
    int failed = 0;
    std::vector<std::string> messages;

    void expect(bool cond, const std::string& what) {
        ++total;
        if (!cond) {
            ++failed;
            if (messages.size() < 12) messages.push_back(what);
        }
    }
};

// ---------------------------------------------------------------------------
// independent rank oracle: plain forward elimination, first-nonzero pivots,
// written against std::vector rows rather than the library Matrix type
// ---------------------------------------------------------------------------

using OracleMatrix = std::vector<std::vector<Rational>>;

int oracle_rank(OracleMatrix m) {
    if (m.empty()) return 0;
    std::size_t cols = m[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t piv = m.size();
        for (std::size_t i = r; i < m.size(); ++i)
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == m.size()) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(r)]);
        const std::vector<Rational>& prow = m[static_cast<std::size_t>(r)];
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / prow[c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * prow[j];
        }
        ++r;
    }
    return r;
}

// ---------------------------------------------------------------------------
// independent Chevalley-Eilenberg boundary: bitmask subsets, positions read
// off with popcount arithmetic
// ---------------------------------------------------------------------------

std::vector<unsigned> subsets_of_size(int n, int k) {
    std::vector<unsigned> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) == k) out.push_back(mask);
    return out;
}

OracleMatrix oracle_ce_boundary(const LieAlgebra& g, int k) {
    int n = g.dim();
    std::vector<unsigned> domain = subsets_of_size(n, k);
    std::vector<unsigned> codomain = subsets_of_size(n, k - 1);
    std::map<unsigned, std::size_t> row_of;
    for (std::size_t r = 0; r < codomain.size(); ++r) row_of[codomain[r]] = r;
    OracleMatrix m(codomain.size(), std::vector<Rational>(domain.size()));
    for (std::size_t col = 0; col < domain.size(); ++col) {
        unsigned mask = domain[col];
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            for (int j = i + 1; j < n; ++j) {
                if (!(mask & (1u << j))) continue;
                // 1-based positions of i and j inside the sorted tuple
                int pos_i = __builtin_popcount(mask & ((1u << i) - 1)) + 1;
                int pos_j = __builtin_popcount(mask & ((1u << j) - 1)) + 1;
                int sign_pq = ((pos_i + pos_j) % 2 == 0) ? 1 : -1;
                unsigned rest = mask & ~(1u << i) & ~(1u << j);
                for (int l = 0; l < n; ++l) {
                    const Rational& c = g.c(i, j, l);
                    if (c.is_zero()) continue;
                    if (rest & (1u << l)) continue;
                    int pos_l = __builtin_popcount(rest & ((1u << l) - 1));
                    int sign_l = (pos_l % 2 == 0) ? 1 : -1;
                    m[row_of.at(rest | (1u << l))][col] += Rational(sign_pq * sign_l) * c;
                }
            }
        }
    }
    return m;
}

std::vector<int> oracle_ce_homology(const LieAlgebra& g) {
    int n = g.dim();
    std::vector<int> dims;
    std::vector<int> ranks(n + 2, 0); // ranks[k] = rank of boundary C_k -> C_{k-1}
    for (int k = 1; k <= n; ++k) ranks[k] = oracle_rank(oracle_ce_boundary(g, k));
    for (int k = 0; k <= n; ++k) {
        int ck = static_cast<int>(subsets_of_size(n, k).size());
        dims.push_back(ck - ranks[k] - ranks[k + 1]);
    }
    return dims;
}

// ---------------------------------------------------------------------------
// independent twisted coboundary matrix: assembled directly from the simplex
// lists and the stated last-face-transport convention
// ---------------------------------------------------------------------------

OracleMatrix oracle_delta(const LocalSystem& rho, int k) {
    int n = rho.fiber_dim();
    auto domain = rho.base().simplices_of_dim(k);
    auto codomain = rho.base().simplices_of_dim(k + 1);
    std::map<Simplex, std::size_t> col_of;
    for (std::size_t c = 0; c < domain.size(); ++c) col_of[domain[c]] = c;
    OracleMatrix m(codomain.size() * n, std::vector<Rational>(domain.size() * n));
    for (std::size_t row_s = 0; row_s < codomain.size(); ++row_s) {
        const Simplex& sigma = codomain[row_s];
        for (int skip = 0; skip <= k + 1; ++skip) {
            Simplex face;
            for (int t = 0; t <= k + 1; ++t)
                if (t != skip) face.push_back(sigma[t]);
            std::size_t col_s = col_of.at(face);
            int sign = (skip % 2 == 0) ? 1 : -1;
            if (skip == k + 1) {
                Matrix t = rho.transport(sigma[k], sigma[k + 1]);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        m[row_s * n + a][col_s * n + b] += Rational(sign) * t(a, b);
            } else {
                for (int a = 0; a < n; ++a) m[row_s * n + a][col_s * n + a] += Rational(sign);
            }
        }
    }
    return m;
}

int oracle_cohomology_dim(const LocalSystem& rho, int k) {
    int n = rho.fiber_dim();
    int ck = static_cast<int>(rho.base().simplices_of_dim(k).size()) * n;
    int rank_k = oracle_rank(oracle_delta(rho, k));
    int rank_prev = k == 0 ? 0 : oracle_rank(oracle_delta(rho, k - 1));
    return (ck - rank_k) - rank_prev;
}

// ---------------------------------------------------------------------------
// CLI process runner for criterion 7
// ---------------------------------------------------------------------------

struct RunResult {
    int exit_code = -1;
    std::string stdout_bytes;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = "cd '" LATK_SOURCE_DIR "' && '" LATK_CLI_PATH "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult out;
    if (!pipe) return out;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.stdout_bytes.append(buffer, got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) out.exit_code = WEXITSTATUS(status);
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

AlgebroidDescriptor indicator_descriptor(const LieAlgebra& g, const SimplicialComplex& base) {
    Vec v(g.dim());
    v[0] = Rational(1);
    Simplex first = base.triangles().front();
    return AlgebroidDescriptor(g, base, {}, {{first, v}});
}

/// torus descriptor with -1 holonomy along a nontrivial integral cocycle
AlgebroidDescriptor twisted_torus_descriptor(const LieAlgebra& g, const SimplicialComplex& base) {
    SystemHandle triv = make_system(base, 1, {});
    Matrix kernel = kernel_basis(delta_matrix(triv, 1));
    Vec z;
    for (int c = 0; c < kernel.cols(); ++c) {
        TwistedCochain candidate = cochain_from_vec(triv, 1, kernel.col(c));
        if (!is_exact(candidate).has_value()) {
            z = kernel.col(c);
            break;
        }
    }
    std::int64_t lcm = 1;
    for (const auto& r : z) lcm = std::lcm(lcm, r.den());
    std::map<std::pair<int, int>, Matrix> phi;
    auto edges = base.simplices_of_dim(1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::int64_t power = (Rational(lcm) * z[i]).num();
        Matrix t = Matrix::identity(g.dim());
        if (power % 2 != 0) t = Rational(-1) * t;
        phi.emplace(std::make_pair(edges[i][0], edges[i][1]), t);
    }
    return AlgebroidDescriptor(g, base, std::move(phi), {});
}

void criterion_classification_suite(Check& check) {
    Rng rng(101);
    std::vector<SimplicialComplex> bases{builtin_complex("sphere_tetra"),
                                         builtin_complex("torus7")};
    std::vector<LieAlgebra> algebras{builtin_lie_algebra("abelian1"),
                                     builtin_lie_algebra("abelian2")};

    int produced = 0;
    for (int i = 0; produced < 50; ++i) {
        const SimplicialComplex& base = bases[i % 2];
        const LieAlgebra& g = algebras[(i / 2) % 2];
        AlgebroidDescriptor seed = [&]() {
            switch (i % 3) {
                case 0: return trivial_descriptor(g, base);
                case 1: return indicator_descriptor(g, base);
                default:
                    return base.vertex_count() == 7 ? twisted_torus_descriptor(g, base)
                                                    : indicator_descriptor(g, base);
            }
        }();
        GaugeDatum h = testsupport::random_gauge_datum(rng, g, base);
        AlgebroidDescriptor gauged = gauge_transform(seed, h);
        ++produced;

        ClassificationResult before = classify_commutative(seed);
        ClassificationResult after = classify_commutative(gauged);
        check.expect(before.primitive.has_value() == after.primitive.has_value(),
                     "exactness verdict changed under a gauge");
        check.expect(before.h2_dim == after.h2_dim, "H^2 dimension changed under a gauge");

        Matrix eta0 = h.eta_at(0, g.dim());
        Matrix eta0_inv = inverse_or_throw(eta0);
        check.expect(before.holonomy.size() == after.holonomy.size(), "holonomy length changed");
        for (std::size_t e = 0; e < before.holonomy.size(); ++e)
            check.expect(after.holonomy[e] == eta0 * before.holonomy[e] * eta0_inv,
                         "holonomy conjugacy data not preserved exactly");
        check.expect(before.pairing.has_value() == after.pairing.has_value(),
                     "pairing definedness changed under a gauge");
        if (before.pairing && after.pairing)
            check.expect(*after.pairing == eta0 * *before.pairing,
                         "pairing did not transform by the root automorphism");

        EquivalenceDecision dec = equivalent_abelian(seed, gauged);
        check.expect(dec.verdict == EquivalenceDecision::Verdict::equivalent,
                     "gauge pair not recognized as equivalent");
        if (dec.witness)
            check.expect(gauge_transform(seed, *dec.witness) == gauged,
                         "equivalence witness failed the round trip");
        else
            check.expect(false, "missing equivalence witness");
    }

    // differing H^2 pairings are inequivalent, in both argument orders
    for (const auto& base : bases)
        for (const auto& g : algebras) {
            AlgebroidDescriptor zero = trivial_descriptor(g, base);
            AlgebroidDescriptor one = indicator_descriptor(g, base);
            ClassificationResult rz = classify_commutative(zero);
            ClassificationResult ro = classify_commutative(one);
            check.expect(rz.pairing.has_value() && ro.pairing.has_value() &&
                             !(*rz.pairing == *ro.pairing),
                         "seed pairings do not differ");
            check.expect(equivalent_abelian(zero, one).verdict ==
                             EquivalenceDecision::Verdict::inequivalent,
                         "differing pairings judged equivalent");
            check.expect(equivalent_abelian(one, zero).verdict ==
                             EquivalenceDecision::Verdict::inequivalent,
                         "differing pairings judged equivalent (swapped)");
        }
}

void criterion_eq1_suite(Check& check) {
    Rng rng(103);
    std::vector<LieAlgebra> algebras{builtin_lie_algebra("abelian1"),
                                     builtin_lie_algebra("abelian2"),
                                     builtin_lie_algebra("heisenberg")};
    int discrepancies = 0, passes = 0, fails = 0;
    for (int t = 0; t < 100; ++t) {
        const LieAlgebra& g = algebras[t % 3];
        int d = rng.range(1, 2);
        GaugeMap a;
        switch (t % 4) {
            case 0:
                a = g.is_abelian() ? testsupport::abelian_positive_gauge(rng, g.dim(), d)
                                   : testsupport::heisenberg_positive_gauge(rng, d);
                break;
            default: a = testsupport::random_gauge_map(rng, g, d); break;
        }
        bool eq1 = check_eq1(g, a).pass();
        bool hom = is_bracket_homomorphism(g, a, spanning_pairs(g, d));
        if (eq1 != hom) ++discrepancies;
        eq1 ? ++passes : ++fails;
    }
    check.expect(discrepancies == 0, "eq1 and bracket-homomorphism verdicts disagree");
    check.expect(passes >= 25, "too few passing gauge maps in the sample");
    check.expect(fails >= 25, "too few failing gauge maps in the sample");

    // constructed failing witness: omega = y dx, residual exactly -1
    LieAlgebra q = builtin_lie_algebra("abelian1");
    GaugeMap a = GaugeMap::identity(2, 1);
    a.omega.components[0].components[0] = Poly::variable(2, 1);
    Eq1Report report = check_eq1(q, a);
    check.expect(!report.pass(), "y dx witness unexpectedly passes");
    check.expect(report.maurer_cartan.size() == 1 &&
                     report.maurer_cartan[0].residual == GSection::constant(2, Vec{Rational(-1)}),
                 "y dx witness residual is not exactly -1");
    check.expect(!is_bracket_homomorphism(q, a, spanning_pairs(q, 2)),
                 "y dx witness passes the bracket-homomorphism test");
}

void criterion_ce_homology(Check& check) {
    std::vector<std::pair<std::string, std::vector<int>>> expected{
        {"abelian2", {1, 2, 1}}, {"sl2", {1, 0, 0, 1}}, {"heisenberg", {1, 2, 2, 1}}};
    for (const auto& [name, dims] : expected) {
        LieAlgebra g = builtin_lie_algebra(name);
        check.expect(oracle_ce_homology(g) == dims, name + ": oracle dims mismatch");
        check.expect(homology_dims(ce_complex(g)) == dims, name + ": library dims mismatch");
    }

    Rng rng(107);
    std::vector<LieAlgebra> algebras{builtin_lie_algebra("heisenberg"),
                                     builtin_lie_algebra("sl2"),
                                     builtin_lie_algebra("abelian3")};
    for (int t = 0; t < 20; ++t) {
        const LieAlgebra& g = algebras[t % 3];
        Matrix a = testsupport::random_automorphism(rng, g);
        Matrix b = testsupport::random_automorphism(rng, g);
        for (int k = 1; k <= 2; ++k) {
            check.expect(induced_on_homology(g, a * b, k) ==
                             induced_on_homology(g, a, k) * induced_on_homology(g, b, k),
                         "induced action is not multiplicative");
            check.expect(induced_on_homology(g, Matrix::identity(g.dim()), k).is_identity(),
                         "induced action of the identity is not the identity");
        }
    }
}

void criterion_twisted_cohomology(Check& check) {
    Rng rng(109);
    for (const char* name : {"circle3", "sphere_tetra", "torus7"}) {
        SimplicialComplex base = builtin_complex(name);
        for (int t = 0; t < 20; ++t) {
            SystemHandle sys = testsupport::random_flat_system(rng, base, rng.range(1, 2));
            for (int k = 0; k <= 1; ++k) {
                TwistedCochain c = testsupport::random_cochain(rng, sys, k);
                check.expect(coboundary(coboundary(c)).is_zero(), "d.d != 0 on a flat system");
            }
        }
    }

    auto check_dims = [&](const LocalSystem& rho, std::vector<int> expected,
                          const std::string& what) {
        for (std::size_t k = 0; k < expected.size(); ++k) {
            check.expect(oracle_cohomology_dim(rho, static_cast<int>(k)) == expected[k],
                         what + ": oracle dim mismatch at degree " + std::to_string(k));
            check.expect(cohomology_dim(std::make_shared<const LocalSystem>(rho),
                                        static_cast<int>(k)) == expected[k],
                         what + ": library dim mismatch at degree " + std::to_string(k));
        }
    };

    Matrix minus(1, 1);
    minus(0, 0) = Rational(-1);
    check_dims(LocalSystem(builtin_complex("circle3"), 1, {{{0, 1}, minus}}), {0, 0},
               "circle3 twisted");
    check_dims(LocalSystem(builtin_complex("circle3"), 1, {}), {1, 1}, "circle3 trivial");
    check_dims(LocalSystem(builtin_complex("sphere_tetra"), 1, {}), {1, 0, 1}, "sphere_tetra");
    check_dims(LocalSystem(builtin_complex("torus7"), 1, {}), {1, 2, 1}, "torus7");
}

void criterion_induced_class(Check& check) {
    Rng rng(113);
    LieAlgebra h = builtin_lie_algebra("heisenberg");

    // omega inside [g, g] dies in the induced class
    for (int t = 0; t < 20; ++t) {
        SimplicialComplex base = builtin_complex(t % 2 == 0 ? "sphere_tetra" : "torus7");
        std::vector<Matrix> eta;
        for (int v = 0; v < base.vertex_count(); ++v)
            eta.push_back(testsupport::random_automorphism(rng, h));
        std::map<std::pair<int, int>, Matrix> phi;
        for (const auto& e : base.edges())
            phi.emplace(std::make_pair(e[0], e[1]), eta[e[1]] * inverse_or_throw(eta[e[0]]));
        std::map<Simplex, Vec> omega;
        for (const auto& tri : base.triangles())
            omega.emplace(tri, Vec{Rational(0), Rational(0), rng.small_rational()});
        AlgebroidDescriptor d(h, base, std::move(phi), std::move(omega));
        InducedClassResult r = induced_class(d);
        check.expect(r.omega_bar.representative().is_zero(),
                     "derived-subalgebra omega gives a nonzero induced cocycle");
        check.expect(r.primitive.has_value() && r.primitive->is_zero(),
                     "derived-subalgebra omega class is not exactly zero");
    }

    // abelian g: induced class coincides with the commutative classification
    for (int t = 0; t < 20; ++t) {
        LieAlgebra g = builtin_lie_algebra(t % 2 == 0 ? "abelian1" : "abelian2");
        SimplicialComplex base = builtin_complex(t % 3 == 0 ? "torus7" : "sphere_tetra");
        AlgebroidDescriptor d = testsupport::random_abelian_descriptor(rng, g, base);
        InducedClassResult induced = induced_class(d);
        ClassificationResult direct = classify_commutative(d);
        check.expect(induced.h1.projection.is_identity(),
                     "H1 of an abelian algebra is not the identity presentation");
        check.expect(induced.omega_bar.representative().values() ==
                         direct.omega_class.representative().values(),
                     "induced class differs from the commutative class");
        check.expect(induced.primitive.has_value() == direct.primitive.has_value(),
                     "induced exactness verdict differs");
        check.expect(induced.h2_dim == direct.h2_dim, "induced H^2 dimension differs");
    }

    // projection of a twisted cocycle is again a twisted cocycle
    int cocycles = 0, projected_cocycles = 0;
    for (int t = 0; t < 30; ++t) {
        SimplicialComplex base =
            builtin_complex(t % 3 == 0 ? "circle3" : t % 3 == 1 ? "sphere_tetra" : "torus7");
        std::vector<Matrix> eta;
        for (int v = 0; v < base.vertex_count(); ++v)
            eta.push_back(testsupport::random_automorphism(rng, h));
        std::map<std::pair<int, int>, Matrix> phi;
        for (const auto& e : base.edges())
            phi.emplace(std::make_pair(e[0], e[1]), eta[e[1]] * inverse_or_throw(eta[e[0]]));
        std::map<Simplex, Vec> omega;
        for (const auto& tri : base.triangles()) {
            Vec v(3);
            for (auto& x : v) x = rng.small_rational();
            omega.emplace(tri, v);
        }
        AlgebroidDescriptor d(h, base, std::move(phi), std::move(omega));
        if (!coboundary(d.omega_cochain()).is_zero()) continue;
        ++cocycles;
        InducedClassResult r = induced_class(d); // class construction checks the cocycle condition
        if (coboundary(r.omega_bar.representative()).is_zero()) ++projected_cocycles;
    }
    check.expect(cocycles == 30, "descriptor generator produced a non-cocycle");
    check.expect(projected_cocycles == cocycles,
                 "projection failed to stay a cocycle in some case");
}

void criterion_pullback(Check& check) {
    Rng rng(127);
    LieAlgebra q2 = builtin_lie_algebra("abelian2");
    SimplicialComplex sphere = builtin_complex("sphere_tetra");
    SimplicialComplex torus = builtin_complex("torus7");
    SimplicialComplex face = SimplicialComplex::from_maximal(3, {{0, 1, 2}});

    int pairs_checked = 0;
    for (int t = 0; pairs_checked < 10; ++t) {
        AlgebroidDescriptor d = testsupport::random_abelian_descriptor(rng, q2, sphere);
        std::vector<int> into_sphere(3), within(3);
        for (auto& v : into_sphere) v = rng.range(0, 3);
        for (auto& v : within) v = rng.range(0, 2);
        SimplicialMap f{face, sphere, into_sphere};
        SimplicialMap g{face, face, within};
        if (!validate_map(f).ok || !validate_map(g).ok) continue;
        ++pairs_checked;
        AlgebroidDescriptor via_composite = pullback_descriptor(d, compose_maps(f, g));
        AlgebroidDescriptor via_steps = pullback_descriptor(pullback_descriptor(d, f), g);
        check.expect(via_composite == via_steps, "pullback functoriality fails");
        check.expect(validate(via_composite).ok, "pullback broke validity");
    }

    // torus rotations: functoriality and validity on a closed surface
    for (int t = 0; t < 5; ++t) {
        AlgebroidDescriptor d = testsupport::random_abelian_descriptor(rng, q2, torus);
        int r1 = rng.range(1, 6), r2 = rng.range(1, 6);
        std::vector<int> rot1(7), rot2(7);
        for (int v = 0; v < 7; ++v) {
            rot1[v] = (v + r1) % 7;
            rot2[v] = (v + r2) % 7;
        }
        SimplicialMap f{torus, torus, rot1};
        SimplicialMap g{torus, torus, rot2};
        check.expect(validate_map(f).ok && validate_map(g).ok, "torus rotation is not simplicial");
        AlgebroidDescriptor via_composite = pullback_descriptor(d, compose_maps(f, g));
        AlgebroidDescriptor via_steps = pullback_descriptor(pullback_descriptor(d, f), g);
        check.expect(via_composite == via_steps, "torus pullback functoriality fails");
        check.expect(validate(via_steps).ok, "torus pullback broke validity");
    }

    // exact classes pull back to exact classes
    for (int t = 0; t < 10; ++t) {
        AlgebroidDescriptor seed = testsupport::random_abelian_descriptor(rng, q2, sphere);
        SystemHandle sys = seed.phi_system();
        TwistedCochain omega = coboundary(testsupport::random_cochain(rng, sys, 1));
        std::map<Simplex, Vec> omega_map(omega.values().begin(), omega.values().end());
        AlgebroidDescriptor d(q2, sphere, seed.edge_phi(), omega_map);
        check.expect(is_exact(d.omega_cochain()).has_value(), "seed class is not exact");
        SimplicialMap inc{face, sphere, {rng.range(0, 1), 2, 3}};
        if (!validate_map(inc).ok) continue;
        AlgebroidDescriptor pulled = pullback_descriptor(d, inc);
        check.expect(validate(pulled).ok, "pullback of a valid descriptor is invalid");
        check.expect(is_exact(pulled.omega_cochain()).has_value(),
                     "pullback of an exact class is not exact");
    }
}

void criterion_cli(Check& check) {
    struct Fixture {
        std::string args;
        std::string golden; // file under tests/golden, empty = skip byte check
        int exit_code;
    };
    const std::vector<Fixture> fixtures{
        {"check fixtures/trivial_sphere_q.json", "check_trivial_sphere.out", 0},
        {"check fixtures/invalid_swap_edge.json", "check_invalid_swap.out", 1},
        {"check fixtures/bad_rational.json", "check_bad_rational.out", 2},
        {"lie-homology fixtures/heisenberg_algebra.json", "lie_homology_heisenberg.out", 0},
        {"lie-homology fixtures/sl2_algebra.json", "lie_homology_sl2.out", 0},
        {"lie-homology fixtures/abelian2_algebra.json", "lie_homology_abelian2.out", 0},
        {"cohomology fixtures/torus_system_trivial.json", "cohomology_torus_trivial.out", 0},
        {"cohomology fixtures/circle_system_minus.json --max-degree 1",
         "cohomology_circle_minus.out", 0},
        {"classify fixtures/trivial_sphere_q.json", "classify_trivial_sphere.out", 0},
        {"classify fixtures/one_triangle_sphere_q.json", "classify_one_triangle.out", 0},
        {"classify fixtures/circle_holonomy_minus.json", "classify_circle_minus.out", 0},
        {"classify fixtures/heisenberg_sphere_e0.json", "classify_heisenberg_e0.out", 0},
        {"equiv fixtures/one_triangle_sphere_q.json fixtures/scaled_triangle_sphere_q.json",
         "equiv_scaled.out", 0},
        {"equiv fixtures/trivial_sphere_q.json fixtures/one_triangle_sphere_q.json",
         "equiv_obstructed.out", 1},
        {"equiv fixtures/trivial_sphere_q2.json fixtures/trivial_sphere_q2.json --search-cap 0",
         "equiv_undecided.out", 3},
        {"pullback fixtures/one_triangle_sphere_q.json fixtures/face_inclusion_map.json "
         "--out /tmp/latk_pullback_face.json",
         "pullback_face.out", 0},
        {"pullback fixtures/trivial_sphere_q.json fixtures/constant_map_circle_to_sphere.json "
         "--out /tmp/latk_pullback_constant.json",
         "pullback_constant.out", 0},
        {"eq1-check fixtures/gauge_pass.json", "eq1_pass.out", 0},
        {"eq1-check fixtures/gauge_fail.json", "eq1_fail.out", 1},
        {"check fixtures/with_local_gauges.json", "check_local_gauges.out", 0},
        {"check fixtures/bad_local_gauge.json", "check_bad_local_gauge.out", 1},
        {"classify fixtures/trivial_sphere_q.json --complex builtin:torus7",
         "classify_override_torus.out", 0},
        {"cohomology fixtures/sphere_system_nonflat.json", "cohomology_nonflat.out", 1},
        {"pullback fixtures/trivial_sphere_q.json fixtures/bad_map.json --out /tmp/latk_never.json",
         "pullback_bad_map.out", 2},
    };

    std::set<int> seen_codes;
    for (const auto& f : fixtures) {
        RunResult first = run_cli(f.args);
        RunResult second = run_cli(f.args);
        seen_codes.insert(first.exit_code);
        check.expect(first.exit_code == f.exit_code,
                     f.args + ": exit code " + std::to_string(first.exit_code) + " != " +
                         std::to_string(f.exit_code));
        check.expect(first.stdout_bytes == second.stdout_bytes,
                     f.args + ": output differs between identical runs");
        std::string golden = slurp(std::string(LATK_SOURCE_DIR) + "/tests/golden/" + f.golden);
        check.expect(!golden.empty(), f.args + ": missing golden file " + f.golden);
        check.expect(first.stdout_bytes == golden, f.args + ": output differs from golden file");
    }
    for (int code : {0, 1, 2, 3})
        check.expect(seen_codes.count(code) == 1,
                     "exit code " + std::to_string(code) + " never exercised");

    // written pullback files are byte-stable too
    check.expect(slurp("/tmp/latk_pullback_face.json") ==
                     slurp(std::string(LATK_SOURCE_DIR) + "/tests/golden/pullback_face_descriptor.json"),
                 "pullback output file differs from golden");
    check.expect(slurp("/tmp/latk_pullback_constant.json") ==
                     slurp(std::string(LATK_SOURCE_DIR) +
                           "/tests/golden/pullback_constant_descriptor.json"),
                 "constant pullback output file differs from golden");

    // identity-map round trip: canonical serialization is byte-identical
    RunResult id_run = run_cli(
        "pullback fixtures/one_triangle_sphere_q.json fixtures/identity_map_sphere.json "
        "--out /tmp/latk_pullback_identity.json");
    check.expect(id_run.exit_code == 0, "identity pullback failed");
    json original = load_json_file(std::string(LATK_SOURCE_DIR) + "/fixtures/one_triangle_sphere_q.json");
    AlgebroidDescriptor d = descriptor_from_json(original);
    check.expect(slurp("/tmp/latk_pullback_identity.json") == descriptor_to_json(d).dump(2) + "\n",
                 "identity pullback is not the canonical serialization");
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria{
        {"classification invariants: gauge invariance and equivalence decisions", criterion_classification_suite},
        {"compatibility suite: residuals match bracket homomorphism", criterion_eq1_suite},
        {"Lie algebra homology vs brute-force oracle", criterion_ce_homology},
        {"twisted cohomology vs brute-force oracle", criterion_twisted_cohomology},
        {"induced class over H1(g)", criterion_induced_class},
        {"pullback functoriality and exactness", criterion_pullback},
        {"CLI determinism and exit codes", criterion_cli},
    };

    int criterion_failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        try {
            criteria[i].run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        bool pass = check.failed == 0;
        if (!pass) ++criterion_failures;
        std::cout << "[acceptance] criterion " << (i + 1) << " (" << criteria[i].name
                  << "): " << (pass ? "PASS" : "FAIL") << " [" << (check.total - check.failed)
                  << "/" << check.total << " checks]\n";
        for (const auto& m : check.messages) std::cout << "    - " << m << "\n";
    }
    return criterion_failures == 0 ? 0 : 1;
}
