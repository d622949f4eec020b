#include "a1kit/registry.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace a1kit {

namespace {

std::vector<A1Element> parse_relators(const std::vector<std::string>& relators) {
    std::vector<A1Element> out;
    out.reserve(relators.size());
    for (const std::string& r : relators)
        out.push_back(A1Element::parse(r));
    return out;
}

/// Resolves a generator-image spec to a coordinate vector of `target` in the
/// degree of `sub`'s generator. Throws std::invalid_argument when the image
/// cannot be resolved.
GF2Vector resolve_image(const GenImageSpec& spec, const A1Module& sub, const A1Module& target) {
    if (!sub.cyclic())
        throw std::invalid_argument("resolve_image: source is not cyclic");
    int g = sub.cyclic()->gen_degree;
    switch (spec.kind) {
        case GenImageSpec::kGenerator:
            if (!target.cyclic() || target.cyclic()->gen_degree != g)
                throw std::invalid_argument(
                    "resolve_image: generator image needs a cyclic target in the same degree");
            return generator_vector(target);
        case GenImageSpec::kElement: {
            if (!target.cyclic())
                throw std::invalid_argument("resolve_image: element image needs a cyclic target");
            A1Element x = A1Element::parse(spec.element);
            std::optional<int> xd = x.degree();
            if (!xd)
                return GF2Vector(static_cast<std::size_t>(target.dim(g)));  // zero image
            int tg = target.cyclic()->gen_degree;
            if (tg + *xd != g)
                throw std::invalid_argument("resolve_image: element degree mismatch");
            return act(target, x, tg, generator_vector(target));
        }
        case GenImageSpec::kUniqueNonzeroClass: {
            if (target.dim(g) != 1)
                throw std::invalid_argument(
                    "resolve_image: degree " + std::to_string(g) +
                    " of the target is not one-dimensional");
            return GF2Vector::unit(1, 0);
        }
    }
    throw std::logic_error("resolve_image: unreachable");
}

}  // namespace

A1Module build_module(const ModuleSpec& spec) {
    A1Module base = spec.relators.empty()
                        ? free_module({0})
                        : cyclic_quotient(parse_relators(spec.relators));
    A1Module m = suspend(base, spec.suspension);
    m.set_name(spec_name(spec));
    return m;
}

std::string spec_name(const ModuleSpec& spec) {
    std::ostringstream os;
    if (spec.suspension != 0)
        os << "S^" << spec.suspension << " ";
    if (spec.relators.empty()) {
        os << "A1";
    } else if (spec.relators == std::vector<std::string>{"Sq1", "Sq2"}) {
        os << "F2";
    } else {
        os << "A1/(";
        for (std::size_t i = 0; i < spec.relators.size(); ++i)
            os << (i ? "," : "") << spec.relators[i];
        os << ")";
    }
    return os.str();
}

std::string GenImageSpec::str() const {
    switch (kind) {
        case kGenerator:
            return "generator";
        case kElement:
            return element;
        case kUniqueNonzeroClass:
            return "unique-nonzero-class";
    }
    return "";
}

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> entries = [] {
        std::vector<RegistryEntry> v;
        auto add = [&v](std::string id, std::string citation, ModuleSpec sub, ModuleSpec mid,
                        ModuleSpec quot, GenImageSpec inj, std::string notes = "") {
            v.push_back({std::move(id), std::move(citation), std::move(notes), std::move(sub),
                         std::move(mid), std::move(quot), std::move(inj),
                         GenImageSpec::generator()});
        };
        add("S1", "ku -> HZ -> S^3 ku",
            {{"Sq1", "Sq3"}, 3}, {{"Sq1"}, 0}, {{"Sq1", "Sq3"}, 0},
            GenImageSpec::unique_class());
        add("S2", "ko -> HZ -> S ko<1>",
            {{"Sq2"}, 2}, {{"Sq1"}, 0}, {{"Sq1", "Sq2"}, 0},
            GenImageSpec::elem("Sq2"));
        add("S3", "ko<1> -> S HF2 -> S ko<2>",
            {{"Sq3"}, 3}, {{}, 1}, {{"Sq2"}, 1},
            GenImageSpec::elem("Sq2"));
        add("S4", "ko<2> -> S^2 HF2 -> S ko<4>",
            {{"Sq1", "Sq2Sq3"}, 5}, {{}, 2}, {{"Sq3"}, 2},
            GenImageSpec::elem("Sq3"));
        add("S5", "ko<4> -> S^4 HZ -> S ko<8>",
            {{"Sq1", "Sq2"}, 9}, {{"Sq1"}, 4}, {{"Sq1", "Sq2Sq3"}, 4},
            GenImageSpec::unique_class(),
            "the kernel of the quotient map is one-dimensional and sits in degree 9, "
            "forcing the S^9 suspension of the subobject");
        add("S6", "ko -> ku -> S^2 ko",
            {{"Sq1", "Sq2"}, 2}, {{"Sq1", "Sq3"}, 0}, {{"Sq1", "Sq2"}, 0},
            GenImageSpec::elem("Sq2"));
        add("S7", "S ko -> ko<1> -> S^2 ku",
            {{"Sq1", "Sq3"}, 2}, {{"Sq2"}, 1}, {{"Sq1", "Sq2"}, 1},
            GenImageSpec::elem("Sq1"));
        add("S8", "S ko<1> -> ko<2> -> S^4 ku",
            {{"Sq1", "Sq3"}, 4}, {{"Sq3"}, 2}, {{"Sq2"}, 2},
            GenImageSpec::elem("Sq2"));
        add("S9", "S^3 ku -> S ko<2> -> ko<4>",
            {{"Sq1", "Sq2Sq3"}, 4}, {{"Sq3"}, 3}, {{"Sq1", "Sq3"}, 3},
            GenImageSpec::elem("Sq1"));
        add("S10", "S^5 ku -> S ko<4> -> ko<8>",
            {{"Sq1", "Sq2"}, 8}, {{"Sq1", "Sq2Sq3"}, 5}, {{"Sq1", "Sq3"}, 5},
            GenImageSpec::unique_class());
        return v;
    }();
    return entries;
}

const RegistryEntry* find_entry(const std::string& id) {
    for (const RegistryEntry& e : registry())
        if (e.id == id)
            return &e;
    return nullptr;
}

EntryMorphisms build_entry_morphisms(const RegistryEntry& e) {
    A1Module sub = build_module(e.sub);
    A1Module mid = build_module(e.mid);
    A1Module quot = build_module(e.quot);
    GF2Vector inj_image = resolve_image(e.inj, sub, mid);
    GF2Vector surj_image = resolve_image(e.surj, mid, quot);
    ModuleMorphism inj = from_generator_image(sub, mid, inj_image);
    ModuleMorphism surj = from_generator_image(mid, quot, surj_image);
    return {std::move(sub), std::move(mid), std::move(quot), std::move(inj), std::move(surj)};
}

EntryReport verify_entry(const RegistryEntry& e) {
    EntryReport report;
    report.id = e.id;
    report.citation = e.citation;
    report.notes = e.notes;
    report.sub_name = spec_name(e.sub);
    report.mid_name = spec_name(e.mid);
    report.quot_name = spec_name(e.quot);

    A1Module sub, mid, quot;
    try {
        sub = build_module(e.sub);
        mid = build_module(e.mid);
        quot = build_module(e.quot);
    } catch (const std::exception& ex) {
        report.failures.push_back(std::string("module construction failed: ") + ex.what());
        return report;
    }
    report.sub_dims = sub.dims();
    report.mid_dims = mid.dims();
    report.quot_dims = quot.dims();

    report.dims_additive = true;
    for (const auto& [d, n] : mid.dims())
        if (sub.dim(d) + quot.dim(d) != n)
            report.dims_additive = false;
    for (const auto& [d, n] : sub.dims())
        (void)n, report.dims_additive = report.dims_additive && mid.dim(d) >= sub.dim(d);
    for (const auto& [d, n] : quot.dims())
        (void)n, report.dims_additive = report.dims_additive && mid.dim(d) >= quot.dim(d);
    if (!report.dims_additive)
        report.failures.push_back("degreewise dimensions are not additive");

    try {
        GF2Vector inj_image = resolve_image(e.inj, sub, mid);
        GF2Vector surj_image = resolve_image(e.surj, mid, quot);
        ModuleMorphism inj = from_generator_image(sub, mid, inj_image);
        ModuleMorphism surj = from_generator_image(mid, quot, surj_image);
        SesReport ses = is_short_exact({inj, surj});
        report.exact = ses.exact;
        for (const std::string& f : ses.failures)
            report.failures.push_back(f);
    } catch (const std::exception& ex) {
        report.exact = false;
        report.failures.push_back(std::string("morphism construction failed: ") + ex.what());
    }

    try {
        report.pair_count = static_cast<int>(find_exact_pairs(sub, mid, quot).size());
    } catch (const SearchGuardError& ex) {
        report.pair_count = -1;
        report.failures.push_back(ex.what());
    }
    return report;
}

RegistryReport verify_all() {
    RegistryReport report;
    for (const RegistryEntry& e : registry()) {
        report.entries.push_back(verify_entry(e));
        if (report.entries.back().exact)
            ++report.exact_count;
    }
    report.all_exact = report.exact_count == static_cast<int>(report.entries.size());
    return report;
}

std::string registry_json(const RegistryReport& report) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        const EntryReport& r = report.entries[i];
        const RegistryEntry& e = registry()[i];
        auto dims_json = [](const std::map<int, int>& d) {
            nlohmann::ordered_json out = nlohmann::ordered_json::object();
            for (const auto& [deg, n] : d)
                out[std::to_string(deg)] = n;
            return out;
        };
        nlohmann::ordered_json entry = {
            {"id", r.id},
            {"citation", r.citation},
            {"sub", nlohmann::ordered_json{{"name", r.sub_name}, {"dims", dims_json(r.sub_dims)}}},
            {"mid", nlohmann::ordered_json{{"name", r.mid_name}, {"dims", dims_json(r.mid_dims)}}},
            {"quot",
             nlohmann::ordered_json{{"name", r.quot_name}, {"dims", dims_json(r.quot_dims)}}},
            {"images",
             nlohmann::ordered_json{{"inj", e.inj.str()}, {"surj", e.surj.str()}}},
            {"verdict",
             nlohmann::ordered_json{{"dims_additive", r.dims_additive},
                                    {"exact", r.exact},
                                    {"pairs", r.pair_count}}},
        };
        if (!r.notes.empty())
            entry["notes"] = r.notes;
        if (!r.failures.empty())
            entry["failures"] = r.failures;
        arr.push_back(std::move(entry));
    }
    return arr.dump(2) + "\n";
}

}  // namespace a1kit
