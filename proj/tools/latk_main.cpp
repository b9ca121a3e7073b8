// Command-line front end: validation, homology, cohomology, classification,
// equivalence, induced-class and pullback runs over JSON inputs.
//
// Machine-readable report on stdout (sorted keys, canonical rationals, no
// timing), human summary and timing on stderr. Exit codes: 0 success or
// positive verdict, 1 negative domain verdict, 2 input error, 3 undecided.
#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <latk/io.hpp>
#include <latk/latk.hpp>

using namespace latk;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int fail_input(const std::string& command, const std::string& message) {
    emit(json{{"command", command}, {"error", message}});
    std::cerr << command << ": error: " << message << "\n";
    return 2;
}

json load_with_complex_override(const std::string& path, const std::string& complex_override) {
    json j = load_json_file(path);
    if (!complex_override.empty()) {
        if (complex_override.rfind("builtin:", 0) == 0)
            j["complex"] = complex_override;
        else
            j["complex"] = load_json_file(complex_override);
    }
    return j;
}

json cochain_values_to_json(const TwistedCochain& c) {
    json out = json::array();
    for (const auto& [s, v] : c.values()) {
        if (c.degree() == 2)
            out.push_back(json{{"triangle", s}, {"value", vec_to_json(v)}});
        else if (c.degree() == 1)
            out.push_back(json{{"edge", s}, {"value", vec_to_json(v)}});
        else
            out.push_back(json{{"simplex", s}, {"value", vec_to_json(v)}});
    }
    return out;
}

json class_report(const CohomologyClass& cls, const std::optional<TwistedCochain>& primitive,
                  const std::optional<Vec>& pairing) {
    json out{{"representative", cochain_values_to_json(cls.representative())},
             {"exact", primitive.has_value()}};
    out["primitive"] = primitive ? cochain_values_to_json(*primitive) : json(nullptr);
    out["pairing"] = pairing ? vec_to_json(*pairing) : json(nullptr);
    return out;
}

json holonomy_to_json(const std::vector<Matrix>& hol) {
    json out = json::array();
    for (const auto& m : hol) out.push_back(matrix_to_json(m));
    return out;
}

int cmd_check(const std::string& path, const std::string& complex_override) {
    Timer timer;
    AlgebroidDescriptor d = descriptor_from_json(load_with_complex_override(path, complex_override));
    DescriptorValidation v = validate(d);

    json gauges_pass = json::array();
    json raw = load_json_file(path);
    if (raw.contains("local_gauges")) {
        const json& gs = raw.at("local_gauges");
        if (!gs.is_array()) throw ParseError("descriptor.local_gauges: expected an array");
        for (std::size_t i = 0; i < gs.size(); ++i) {
            json entry = gs[i];
            entry["lie_algebra"] = raw.at("lie_algebra");
            GaugeMapFile gf = gauge_map_from_json(entry);
            bool pass = check_eq1(gf.g, gf.map).pass();
            gauges_pass.push_back(pass);
            if (!pass)
                v.violations.push_back("local_gauges[" + std::to_string(i) +
                                       "]: compatibility system fails");
        }
    }
    v.ok = v.violations.empty();

    json report{{"command", "check"}, {"input", path}, {"valid", v.ok},
                {"violations", v.violations}};
    if (!gauges_pass.empty()) report["local_gauges_pass"] = gauges_pass;
    emit(report);
    std::cerr << "check: " << (v.ok ? "valid" : "invalid") << " (" << timer.ms() << " ms)\n";
    return v.ok ? 0 : 1;
}

int cmd_lie_homology(const std::string& path) {
    Timer timer;
    LieAlgebra g = lie_algebra_from_json(load_json_file(path));
    std::vector<int> dims = homology_dims(ce_complex(g));
    emit(json{{"command", "lie-homology"}, {"dim", g.dim()}, {"dims", dims}, {"input", path}});
    std::cerr << "lie-homology:";
    for (int d : dims) std::cerr << " " << d;
    std::cerr << " (" << timer.ms() << " ms)\n";
    return 0;
}

int cmd_cohomology(const std::string& path, const std::string& complex_override, int max_degree) {
    Timer timer;
    SystemHandle sys = local_system_from_json(load_with_complex_override(path, complex_override));
    FlatCheck flat = sys->check_flat();
    if (!flat.ok) {
        emit(json{{"command", "cohomology"}, {"flat", false}, {"input", path},
                  {"violation", flat.message}});
        std::cerr << "cohomology: not flat (" << timer.ms() << " ms)\n";
        return 1;
    }
    std::vector<int> dims;
    for (int k = 0; k <= max_degree; ++k) dims.push_back(cohomology_dim(sys, k));
    emit(json{{"command", "cohomology"}, {"dims", dims}, {"flat", true}, {"input", path},
              {"max_degree", max_degree}});
    std::cerr << "cohomology:";
    for (int d : dims) std::cerr << " " << d;
    std::cerr << " (" << timer.ms() << " ms)\n";
    return 0;
}

int cmd_classify(const std::string& path, const std::string& complex_override) {
    Timer timer;
    AlgebroidDescriptor d = descriptor_from_json(load_with_complex_override(path, complex_override));
    DescriptorValidation v = validate(d);
    if (!v.ok) {
        emit(json{{"command", "classify"}, {"input", path}, {"valid", false},
                  {"violations", v.violations}});
        std::cerr << "classify: invalid descriptor (" << timer.ms() << " ms)\n";
        return 1;
    }
    json report{{"command", "classify"}, {"input", path}, {"valid", true}};
    if (d.g().is_abelian()) {
        ClassificationResult r = classify_commutative(d);
        report["mode"] = "commutative";
        report["holonomy"] = holonomy_to_json(r.holonomy);
        report["h2_dim"] = r.h2_dim;
        report["class"] = class_report(r.omega_class, r.primitive, r.pairing);
    } else {
        InducedClassResult r = induced_class(d);
        report["mode"] = "induced";
        report["notice"] = "structure algebra is not abelian; reporting the induced class over H1(g)";
        report["fiber_dim"] = r.system->fiber_dim();
        report["holonomy"] = holonomy_to_json(holonomy(*r.system));
        report["h2_dim"] = r.h2_dim;
        report["class"] = class_report(r.omega_bar, r.primitive, r.pairing);
    }
    emit(report);
    std::cerr << "classify: " << report["mode"].get<std::string>() << " (" << timer.ms()
              << " ms)\n";
    return 0;
}

int cmd_equiv(const std::string& path1, const std::string& path2, std::size_t search_cap) {
    Timer timer;
    AlgebroidDescriptor d1 = descriptor_from_json(load_json_file(path1));
    AlgebroidDescriptor d2 = descriptor_from_json(load_json_file(path2));
    EquivalenceDecision dec = equivalent_abelian(d1, d2, search_cap);
    const char* verdict = dec.verdict == EquivalenceDecision::Verdict::equivalent ? "equivalent"
                          : dec.verdict == EquivalenceDecision::Verdict::inequivalent
                              ? "inequivalent"
                              : "undecided";
    json report{{"command", "equiv"}, {"inputs", {path1, path2}}, {"verdict", verdict}};
    report["witness"] = dec.witness ? gauge_datum_to_json(*dec.witness) : json(nullptr);
    emit(report);
    std::cerr << "equiv: " << verdict << " (" << timer.ms() << " ms)\n";
    switch (dec.verdict) {
        case EquivalenceDecision::Verdict::equivalent: return 0;
        case EquivalenceDecision::Verdict::inequivalent: return 1;
        default: return 3;
    }
}

int cmd_pullback(const std::string& descriptor_path, const std::string& map_path,
                 const std::string& out_path) {
    Timer timer;
    AlgebroidDescriptor d = descriptor_from_json(load_json_file(descriptor_path));
    SimplicialMap f = map_from_json(load_json_file(map_path));
    AlgebroidDescriptor pulled = pullback_descriptor(d, f);
    DescriptorValidation v = validate(pulled);
    if (!v.ok) {
        emit(json{{"command", "pullback"}, {"input", descriptor_path}, {"map", map_path},
                  {"valid", false}, {"violations", v.violations}});
        std::cerr << "pullback: result invalid (" << timer.ms() << " ms)\n";
        return 1;
    }
    write_json_file(out_path, descriptor_to_json(pulled));
    emit(json{{"command", "pullback"}, {"input", descriptor_path}, {"map", map_path},
              {"out", out_path}, {"valid", true}});
    std::cerr << "pullback: wrote " << out_path << " (" << timer.ms() << " ms)\n";
    return 0;
}

json residual_family_to_json(const std::vector<ResidualEntry>& family) {
    json out = json::array();
    for (const auto& e : family) {
        json comps = json::array();
        for (const auto& p : e.residual.components) comps.push_back(p.str());
        out.push_back(json{{"label", e.label}, {"residual", comps},
                           {"zero", e.residual.is_zero()}});
    }
    return out;
}

int cmd_eq1_check(const std::string& path) {
    Timer timer;
    GaugeMapFile gf = gauge_map_from_json(load_json_file(path));
    Eq1Report report = check_eq1(gf.g, gf.map);
    bool pass = report.pass();
    emit(json{{"command", "eq1-check"}, {"input", path}, {"pass", pass},
              {"residuals",
               json{{"homomorphism", residual_family_to_json(report.homomorphism)},
                    {"maurer_cartan", residual_family_to_json(report.maurer_cartan)},
                    {"compatibility", residual_family_to_json(report.compatibility)}}}});
    std::cerr << "eq1-check: " << (pass ? "pass" : "fail") << " (" << timer.ms() << " ms)\n";
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"transitive Lie algebroid descriptors over nerves: validation and invariants"};
    app.require_subcommand(1);

    std::string input, input2, map_path, out_path, complex_override;
    int max_degree = 2;
    std::size_t search_cap = 4;

    CLI::App* check = app.add_subcommand("check", "validate a descriptor file");
    check->add_option("descriptor", input)->required();
    check->add_option("--complex", complex_override, "override the complex (builtin:NAME or path)");

    CLI::App* lie = app.add_subcommand("lie-homology", "Lie algebra homology dimensions");
    lie->add_option("algebra", input)->required();

    CLI::App* cohom = app.add_subcommand("cohomology", "twisted cohomology dimensions of a local system");
    cohom->add_option("system", input)->required();
    cohom->add_option("--complex", complex_override);
    cohom->add_option("--max-degree", max_degree)->check(CLI::NonNegativeNumber);

    CLI::App* classify = app.add_subcommand("classify", "classifying invariants of a descriptor");
    classify->add_option("descriptor", input)->required();
    classify->add_option("--complex", complex_override);

    CLI::App* equiv = app.add_subcommand("equiv", "decide gauge equivalence of two descriptors");
    equiv->add_option("first", input)->required();
    equiv->add_option("second", input2)->required();
    equiv->add_option("--search-cap", search_cap);

    CLI::App* pullback = app.add_subcommand("pullback", "pull a descriptor back along a simplicial map");
    pullback->add_option("descriptor", input)->required();
    pullback->add_option("map", map_path)->required();
    pullback->add_option("--out", out_path)->required();

    CLI::App* eq1 = app.add_subcommand("eq1-check", "compatibility residuals of a local gauge map");
    eq1->add_option("gauge", input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (check->parsed()) return cmd_check(input, complex_override);
        if (lie->parsed()) return cmd_lie_homology(input);
        if (cohom->parsed()) return cmd_cohomology(input, complex_override, max_degree);
        if (classify->parsed()) return cmd_classify(input, complex_override);
        if (equiv->parsed()) return cmd_equiv(input, input2, search_cap);
        if (pullback->parsed()) return cmd_pullback(input, map_path, out_path);
        if (eq1->parsed()) return cmd_eq1_check(input);
    } catch (const ParseError& e) {
        return fail_input(command, e.what());
    } catch (const std::invalid_argument& e) {
        return fail_input(command, e.what());
    } catch (const std::domain_error& e) {
        return fail_input(command, e.what());
    } catch (const std::overflow_error& e) {
        return fail_input(command, e.what());
    }
    return 2;
}
