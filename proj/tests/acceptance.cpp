// Acceptance suite: every release-gating check in one binary, one PASS/FAIL
// line per criterion. Exits nonzero if anything fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "a1kit/invariants.hpp"
#include "a1kit/registry.hpp"
#include "a1kit/render.hpp"
#include "a1kit/resolution.hpp"
#include "bar_ext.hpp"
#include "oracles.hpp"

using namespace a1kit;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

std::vector<A1Element> rel(std::initializer_list<const char*> relators) {
    std::vector<A1Element> out;
    for (const char* r : relators)
        out.push_back(A1Element::parse(r));
    return out;
}

A1Module f2() { return cyclic_quotient(rel({"Sq1", "Sq2"}), "F2"); }

fs::path scratch_dir() {
    fs::path d = fs::temp_directory_path() / "a1kit-acceptance";
    fs::create_directories(d);
    return d;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_cli(const std::string& args, std::string& output) {
    fs::path out_file = scratch_dir() / "cli-out.txt";
    std::string cmd =
        std::string(A1KIT_BIN_PATH) + " " + args + " > " + out_file.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    output = slurp(out_file);
    return status == -1 ? -1 : WEXITSTATUS(status);
}

// ---- criterion bodies -------------------------------------------------------

bool algebra_certification(std::string& detail) {
    A1Algebra alg = A1Algebra::build();  // throws on any internal failure
    if (alg.basis().size() != 8) {
        detail = "total dimension is not 8";
        return false;
    }
    int expected[] = {1, 1, 1, 2, 1, 1, 1};
    for (int d = 0; d <= 6; ++d)
        if (alg.dim_in_degree(d) != expected[d]) {
            detail = "wrong dimension in degree " + std::to_string(d);
            return false;
        }
    int triples = 0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k) {
                A1Element a = A1Element::basis(i), b = A1Element::basis(j),
                          c = A1Element::basis(k);
                if (!((a * b) * c == a * (b * c))) {
                    detail = "associativity fails on a basis triple";
                    return false;
                }
                ++triples;
            }
    auto [q0, q1] = q_operators();
    if (!(q0 * q0).is_zero() || !(q1 * q1).is_zero() || !(q0 * q1 == q1 * q0)) {
        detail = "Milnor primitive identities fail";
        return false;
    }
    detail = "dimension vector (1,1,1,2,1,1,1), " + std::to_string(triples) +
             " associativity triples, Q0/Q1 identities";
    return true;
}

bool registry_verification(std::string& detail) {
    std::string output;
    int code = run_cli("verify-paper", output);
    if (code != 0) {
        detail = "verify-paper exited with " + std::to_string(code);
        return false;
    }
    if (output.find("10/10 exact") == std::string::npos) {
        detail = "verify-paper did not report 10/10 exact";
        return false;
    }
    RegistryReport report = verify_all();
    for (const EntryReport& e : report.entries)
        if (!e.exact || !e.dims_additive || e.pair_count < 1) {
            detail = "entry " + e.id + " failed";
            return false;
        }
    detail = "10/10 exact with degreewise additivity and nonempty exact-pair searches";
    return true;
}

bool ideal_identifications(std::string& detail) {
    auto ideal_module = [](const char* x) {
        A1Module source = free_module({*A1Element::parse(x).degree()});
        A1Module target = free_module({0});
        GF2Vector img = act(target, A1Element::parse(x), 0, generator_vector(target));
        return image(from_generator_image(source, target, img)).module;
    };
    EntryMorphisms s3 = build_entry_morphisms(*find_entry("S3"));
    if (!is_isomorphic(image(s3.inj).module, suspend(ideal_module("Sq2"), 1))) {
        detail = "S3 image is not the suspended ideal (Sq2)";
        return false;
    }
    EntryMorphisms s4 = build_entry_morphisms(*find_entry("S4"));
    if (!is_isomorphic(image(s4.inj).module, suspend(ideal_module("Sq3"), 2))) {
        detail = "S4 image is not the suspended ideal (Sq3)";
        return false;
    }
    detail = "S3 image = S(Sq2), S4 image = S^2(Sq3), up to isomorphism";
    return true;
}

bool ku_pattern(std::string& detail) {
    const int max_s = 8, max_t = 24;
    A1Module m = cyclic_quotient(rel({"Sq1", "Sq3"}));
    ExtChart chart = ext_chart(minimal_resolution(m, max_s, max_t + 6));
    if (chart.reliable_max_t < max_t) {
        detail = "window too small";
        return false;
    }
    for (int s = 0; s <= max_s; ++s)
        for (int t = 0; t <= max_t; ++t) {
            int closed_form = (t >= s && (t - s) % 2 == 0 && (t - s) / 2 <= s) ? 1 : 0;
            if (chart.at(s, t) != closed_form) {
                detail = "mismatch at (s,t) = (" + std::to_string(s) + "," + std::to_string(t) +
                         ")";
                return false;
            }
        }
    detail = "chart equals #{a+b=s, a+3b=t} on s <= 8, t <= 24";
    return true;
}

bool ko_pattern(std::string& detail) {
    const int max_t = 30;
    const int reliable = max_t - 6;
    const int max_s = reliable;  // stem-0 tower visible up to t = s <= 24
    ExtChart chart = ext_chart(minimal_resolution(f2(), max_s, max_t));

    auto expected = [](int stem, int s) -> int {
        switch (stem) {
            case 0:
                return 1;  // one class per filtration: pi_0 = Z
            case 1:
                return s == 1 ? 1 : 0;  // eta
            case 2:
                return s == 2 ? 1 : 0;  // eta^2
            case 4:
                return s >= 3 ? 1 : 0;  // alpha tower
            case 8:
                return s >= 4 ? 1 : 0;  // beta tower
            case 9:
                return s == 5 ? 1 : 0;  // eta beta
            case 10:
                return s == 6 ? 1 : 0;  // eta^2 beta
            default:
                return 0;  // stems 3, 5, 6, 7, 11 are empty
        }
    };

    for (int stem = 0; stem <= 11; ++stem)
        for (int s = 0; s <= max_s; ++s) {
            int t = stem + s;
            if (t > reliable)
                continue;
            if (chart.at(s, t) != expected(stem, s)) {
                detail = "mismatch at stem " + std::to_string(stem) + ", filtration " +
                         std::to_string(s);
                return false;
            }
        }
    detail = "stems 0..11 match the additive pattern of ko homotopy (window t <= " +
             std::to_string(reliable) + ")";
    return true;
}

bool oracle_equivalence(std::string& detail) {
    const int max_s = 4, max_t = 12;
    struct Case {
        const char* label;
        A1Module module;
    };
    std::vector<Case> cases;
    cases.push_back({"F2", f2()});
    cases.push_back({"A1", free_module({0})});
    cases.push_back({"A1/(Sq2)", cyclic_quotient(rel({"Sq2"}))});
    cases.push_back({"A1/(Sq1,Sq3)", cyclic_quotient(rel({"Sq1", "Sq3"}))});
    for (const Case& c : cases) {
        ExtChart from_bar = bar_ext(c.module, max_s, max_t);
        ExtChart from_res = ext_chart(minimal_resolution(c.module, max_s, max_t + 6));
        if (!charts_agree(from_bar, from_res, max_s, max_t)) {
            detail = std::string("bar complex disagrees with the minimal resolution for ") +
                     c.label;
            return false;
        }
    }
    detail = "bar complex agrees with minimal resolutions on s <= 4, t <= 12 (4 modules)";
    return true;
}

bool property_suites(std::string& detail) {
    // (a) rank/kernel identities on 1000 random matrices, oracles on <= 6x6
    std::mt19937 rng(424242);
    std::uniform_int_distribution<std::size_t> dim(0, 12);
    std::bernoulli_distribution bit(0.5);
    for (int trial = 0; trial < 1000; ++trial) {
        GF2Matrix m(dim(rng), dim(rng));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m.set(r, c, bit(rng));
        std::size_t rk = rank(m);
        if (rk != rank(m.transposed()) || rk + kernel_basis(m).rows() != m.cols()) {
            detail = "rank identity fails on a random matrix";
            return false;
        }
        if (m.rows() <= 6 && m.cols() <= 6) {
            if (rk != oracle::rank_by_minors(m)) {
                detail = "rank disagrees with the minor oracle";
                return false;
            }
            if (kernel_basis(m).rows() != oracle::kernel_dim_by_enumeration(m)) {
                detail = "kernel dimension disagrees with enumeration";
                return false;
            }
        }
    }

    // (b) kernel/image/cokernel outputs pass verify_action
    std::vector<A1Module> universe = {f2(),
                                      suspend(f2(), 2),
                                      cyclic_quotient(rel({"Sq1", "Sq3"})),
                                      cyclic_quotient(rel({"Sq2"})),
                                      cyclic_quotient(rel({"Sq1"})),
                                      free_module({0})};
    for (const A1Module& a : universe)
        for (const A1Module& b : universe)
            for (const ModuleMorphism& f : hom_basis(a, b)) {
                if (!verify_action(kernel(f).module).ok || !verify_action(image(f).module).ok ||
                    !verify_action(cokernel(f).module).ok) {
                    detail = "a kernel/image/cokernel fails verify_action";
                    return false;
                }
            }

    // (c) find_exact_pairs vs exhaustive enumeration on total dim <= 4
    std::vector<A1Module> small = {free_module({}),
                                   f2(),
                                   suspend(f2(), 1),
                                   suspend(f2(), 2),
                                   cyclic_quotient(rel({"Sq1", "Sq3"})),
                                   suspend(cyclic_quotient(rel({"Sq1", "Sq3"})), 1),
                                   direct_sum(f2(), suspend(f2(), 1)),
                                   cyclic_quotient(rel({"Sq2"})),
                                   cyclic_quotient(rel({"Sq1"}))};
    for (const A1Module& a : small)
        for (const A1Module& b : small)
            for (const A1Module& c : small) {
                if (a.total_dim() + c.total_dim() > 4 || b.total_dim() > 4)
                    continue;
                if (find_exact_pairs(a, b, c).size() !=
                    oracle::exact_pairs_by_enumeration(a, b, c).size()) {
                    detail = "find_exact_pairs disagrees with exhaustive enumeration";
                    return false;
                }
            }

    // (d) Margolis homology: free vanishing, additivity, suspension shift
    for (const A1Module& free : {free_module({0}), free_module({1, 4})})
        for (MargolisOp op : {MargolisOp::Q0, MargolisOp::Q1})
            if (!margolis_homology(free, op).empty()) {
                detail = "Margolis homology of a free module does not vanish";
                return false;
            }
    A1Module x = cyclic_quotient(rel({"Sq1"}));
    A1Module y = suspend(cyclic_quotient(rel({"Sq1", "Sq3"})), 2);
    for (MargolisOp op : {MargolisOp::Q0, MargolisOp::Q1}) {
        GradedDims sum = margolis_homology(direct_sum(x, y), op);
        GradedDims expected = margolis_homology(x, op);
        for (const auto& [d, n] : margolis_homology(y, op))
            expected[d] += n;
        if (sum != expected) {
            detail = "Margolis homology is not additive over direct sums";
            return false;
        }
        GradedDims shifted = margolis_homology(suspend(x, 7), op);
        GradedDims manual;
        for (const auto& [d, n] : margolis_homology(x, op))
            manual[d + 7] = n;
        if (shifted != manual) {
            detail = "Margolis homology does not shift under suspension";
            return false;
        }
    }

    detail = "1000 random matrices, morphism factor modules, exact-pair enumeration, "
             "Margolis properties";
    return true;
}

bool determinism(std::string& detail) {
    // CLI registry export, twice
    fs::path j1 = scratch_dir() / "determinism1.json";
    fs::path j2 = scratch_dir() / "determinism2.json";
    std::string out;
    if (run_cli("verify-paper --json " + j1.string(), out) != 0 ||
        run_cli("verify-paper --json " + j2.string(), out) != 0) {
        detail = "verify-paper failed while exporting JSON";
        return false;
    }
    if (slurp(j1) != slurp(j2) || slurp(j1).empty()) {
        detail = "registry JSON differs between runs";
        return false;
    }

    // in-process registry and chart reports, twice
    if (registry_json(verify_all()) != registry_json(verify_all())) {
        detail = "in-process registry reports differ";
        return false;
    }
    auto chart_dump = [] {
        ExtChart chart = ext_chart(minimal_resolution(f2(), 8, 18));
        return chart_json(chart, "F2");
    };
    if (chart_dump() != chart_dump()) {
        detail = "chart JSON differs between runs";
        return false;
    }
    detail = "byte-identical JSON across consecutive runs (CLI and in-process)";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"algebra certification", 1.0, algebra_certification},
        {"registry: 10/10 short exact sequences", 10.0, registry_verification},
        {"ideal identifications for S3 and S4", 10.0, ideal_identifications},
        {"ku chart closed form", 30.0, ku_pattern},
        {"ko chart additive pattern", 60.0, ko_pattern},
        {"bar-complex oracle equivalence", 120.0, oracle_equivalence},
        {"property suites (gf2 / morphisms / pairs / Margolis)", 300.0, property_suites},
        {"determinism of JSON reports", 60.0, determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && seconds > c.budget_seconds) {
            ok = false;
            detail = "exceeded the time budget (" + std::to_string(seconds) + "s > " +
                     std::to_string(c.budget_seconds) + "s)";
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << c.name << ": " << detail
                  << " (" << static_cast<int>(seconds * 1000) << " ms)\n";
        if (!ok)
            ++failures;
    }
    if (failures == 0) {
        std::cout << "acceptance: all " << criteria.size() << " criteria pass\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
    return 1;
}
