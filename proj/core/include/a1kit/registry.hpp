#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "a1kit/morphism.hpp"

namespace a1kit {

/// Recipe for a suspended cyclic quotient of A(1): Sigma^suspension
/// A1/(relators). Empty relator list means the free module A1 itself;
/// relators {Sq1, Sq2} give F2.
struct ModuleSpec {
    std::vector<std::string> relators;
    int suspension = 0;
};

A1Module build_module(const ModuleSpec& spec);
/// Canonical display name, e.g. "S^3 A1/(Sq1,Sq3)", "F2", "A1".
std::string spec_name(const ModuleSpec& spec);

/// How a morphism's generator image is recorded. Most maps send generator to
/// generator, or to (element)·generator; where the relevant degree of the
/// target is one-dimensional the entry just says "unique nonzero class" and
/// the builder resolves it.
struct GenImageSpec {
    enum Kind { kGenerator, kElement, kUniqueNonzeroClass } kind = kGenerator;
    std::string element;  // for kElement

    static GenImageSpec generator() { return {kGenerator, ""}; }
    static GenImageSpec elem(std::string e) { return {kElement, std::move(e)}; }
    static GenImageSpec unique_class() { return {kUniqueNonzeroClass, ""}; }
    std::string str() const;
};

/// One short exact sequence sub -> mid -> quot of A(1)-modules, induced in
/// cohomology by a cofiber sequence of connective K-theory spectra (recorded
/// in `citation` as the inducing maps).
struct RegistryEntry {
    std::string id;        // "S1" .. "S10"
    std::string citation;  // inducing maps of spectra, e.g. "ku -> HZ -> S^3 ku"
    std::string notes;     // optional remarks on the encoding
    ModuleSpec sub, mid, quot;
    GenImageSpec inj, surj;
};

/// The ten sequences relating the Postnikov covers of ko and ku.
const std::vector<RegistryEntry>& registry();
/// Entry lookup by id; nullptr if unknown.
const RegistryEntry* find_entry(const std::string& id);

struct EntryReport {
    std::string id;
    std::string citation;
    std::string sub_name, mid_name, quot_name;
    std::map<int, int> sub_dims, mid_dims, quot_dims;
    bool dims_additive = false;
    bool exact = false;
    int pair_count = -1;  // -1 if the exhaustive search tripped its guard
    std::vector<std::string> failures;
    std::string notes;
};

/// Builds the three modules, checks degreewise dimension additivity, builds
/// the two morphisms from the recorded generator images and runs the
/// exactness check, then counts all exact pairs by exhaustive Hom-space
/// enumeration. Failures are report content, never exceptions.
EntryReport verify_entry(const RegistryEntry& e);

struct RegistryReport {
    std::vector<EntryReport> entries;
    bool all_exact = false;
    int exact_count = 0;
};

RegistryReport verify_all();

/// JSON export of the registry with verdicts: an array of entries with
/// fields {id, citation, sub, mid, quot, images, verdict} in stable order.
std::string registry_json(const RegistryReport& report);

/// Also expose the morphisms of an entry (used by the ideal-identification
/// checks and the CLI).
struct EntryMorphisms {
    A1Module sub, mid, quot;
    ModuleMorphism inj, surj;
};
EntryMorphisms build_entry_morphisms(const RegistryEntry& e);

}  // namespace a1kit
