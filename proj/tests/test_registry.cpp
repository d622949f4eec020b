#include <doctest.h>

#include "a1kit/registry.hpp"

using namespace a1kit;

TEST_CASE("registry: ten entries, all buildable") {
    const auto& entries = registry();
    REQUIRE(entries.size() == 10);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        CHECK(entries[i].id == "S" + std::to_string(i + 1));
        CHECK_NOTHROW(build_module(entries[i].sub));
        CHECK_NOTHROW(build_module(entries[i].mid));
        CHECK_NOTHROW(build_module(entries[i].quot));
    }
}

TEST_CASE("registry: S6 dimensions add degreewise against the middle") {
    const RegistryEntry* e = find_entry("S6");
    REQUIRE(e != nullptr);
    A1Module sub = build_module(e->sub), mid = build_module(e->mid),
             quot = build_module(e->quot);
    CHECK(mid.dims() == std::map<int, int>{{0, 1}, {2, 1}});
    for (const auto& [d, n] : mid.dims())
        CHECK(sub.dim(d) + quot.dim(d) == n);
}

TEST_CASE("registry: S10's subobject sits in degree 8") {
    const RegistryEntry* e = find_entry("S10");
    REQUIRE(e != nullptr);
    A1Module sub = build_module(e->sub);
    CHECK(sub.dims() == std::map<int, int>{{8, 1}});
    EntryMorphisms ms = build_entry_morphisms(*e);
    SubmoduleResult ker = kernel(ms.surj);
    CHECK(ker.module.dims() == std::map<int, int>{{8, 1}});
}

TEST_CASE("verify_entry: S1 and S5 come out exact") {
    for (const char* id : {"S1", "S5"}) {
        const RegistryEntry* e = find_entry(id);
        REQUIRE(e != nullptr);
        EntryReport report = verify_entry(*e);
        CHECK(report.exact);
        CHECK(report.dims_additive);
        CHECK(report.pair_count >= 1);
    }
}

TEST_CASE("verify_entry: S5's subobject is the unique nonzero degree-9 class") {
    const RegistryEntry* e = find_entry("S5");
    REQUIRE(e != nullptr);
    CHECK(e->inj.kind == GenImageSpec::kUniqueNonzeroClass);
    A1Module mid = build_module(e->mid);
    CHECK(mid.dim(9) == 1);
    EntryMorphisms ms = build_entry_morphisms(*e);
    CHECK(ms.inj.block(9) == GF2Matrix::identity(1));
}

TEST_CASE("verify_entry: a deliberately wrong suspension is not exact") {
    const RegistryEntry* e = find_entry("S10");
    REQUIRE(e != nullptr);
    RegistryEntry wrong = *e;
    wrong.sub.suspension = 7;  // S^7 F2 instead of S^8 F2
    EntryReport report = verify_entry(wrong);
    CHECK_FALSE(report.exact);
    CHECK_FALSE(report.dims_additive);
    CHECK(!report.failures.empty());
}

TEST_CASE("verify_all: every sequence verifies, reports are deterministic") {
    RegistryReport r1 = verify_all();
    CHECK(r1.all_exact);
    CHECK(r1.exact_count == 10);
    for (const EntryReport& e : r1.entries) {
        CHECK(e.dims_additive);
        CHECK(e.pair_count >= 1);  // pair counts recorded for every entry
    }
    RegistryReport r2 = verify_all();
    CHECK(registry_json(r1) == registry_json(r2));
}

TEST_CASE("registry invariants: surjections send generator to generator") {
    for (const RegistryEntry& e : registry()) {
        EntryMorphisms ms = build_entry_morphisms(e);
        REQUIRE(ms.mid.cyclic().has_value());
        REQUIRE(ms.quot.cyclic().has_value());
        int g = ms.mid.cyclic()->gen_degree;
        CHECK(ms.surj.apply(g, generator_vector(ms.mid)) == generator_vector(ms.quot));
    }
}

TEST_CASE("registry invariants: S3 and S4 subobjects are the suspended left ideals") {
    // the left ideal (x) inside A(1), built as the image of right
    // multiplication by x on the free module
    auto ideal_module = [](const char* x) {
        A1Module source = free_module({*A1Element::parse(x).degree()});
        A1Module target = free_module({0});
        GF2Vector img = act(target, A1Element::parse(x), 0, generator_vector(target));
        return image(from_generator_image(source, target, img)).module;
    };

    const RegistryEntry* s3 = find_entry("S3");
    EntryMorphisms m3 = build_entry_morphisms(*s3);
    CHECK(is_isomorphic(image(m3.inj).module, suspend(ideal_module("Sq2"), 1)).has_value());
    CHECK(is_isomorphic(build_module(s3->sub), suspend(ideal_module("Sq2"), 1)).has_value());

    const RegistryEntry* s4 = find_entry("S4");
    EntryMorphisms m4 = build_entry_morphisms(*s4);
    CHECK(is_isomorphic(image(m4.inj).module, suspend(ideal_module("Sq3"), 2)).has_value());
    CHECK(is_isomorphic(build_module(s4->sub), suspend(ideal_module("Sq3"), 2)).has_value());
}

TEST_CASE("registry invariants: all S7 exact pairs share kernel and image subspaces") {
    const RegistryEntry* e = find_entry("S7");
    REQUIRE(e != nullptr);
    A1Module sub = build_module(e->sub), mid = build_module(e->mid),
             quot = build_module(e->quot);
    auto pairs = find_exact_pairs(sub, mid, quot);
    REQUIRE(!pairs.empty());
    for (const auto& [f, g] : pairs) {
        for (const auto& [d, n] : mid.dims()) {
            (void)n;
            CHECK(same_row_space(f.block(d).transposed(), pairs[0].first.block(d).transposed()));
            CHECK(same_row_space(kernel_basis(g.block(d)),
                                 kernel_basis(pairs[0].second.block(d))));
        }
    }
}

TEST_CASE("registry json: stable field set and ten entries") {
    std::string json = registry_json(verify_all());
    CHECK(json.find("\"id\": \"S1\"") != std::string::npos);
    CHECK(json.find("\"id\": \"S10\"") != std::string::npos);
    CHECK(json.find("\"citation\"") != std::string::npos);
    CHECK(json.find("\"verdict\"") != std::string::npos);
    CHECK(json.find("\"unique-nonzero-class\"") != std::string::npos);
    CHECK(json.find("\"pairs\": 1") != std::string::npos);
}

TEST_CASE("spec_name: canonical builtin names") {
    CHECK(spec_name({{}, 0}) == "A1");
    CHECK(spec_name({{}, 1}) == "S^1 A1");
    CHECK(spec_name({{"Sq1", "Sq2"}, 0}) == "F2");
    CHECK(spec_name({{"Sq1", "Sq2"}, 2}) == "S^2 F2");
    CHECK(spec_name({{"Sq1", "Sq3"}, 3}) == "S^3 A1/(Sq1,Sq3)");
}
