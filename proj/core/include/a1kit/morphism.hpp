#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "a1kit/module.hpp"

namespace a1kit {

/// Thrown when an exhaustive search would exceed its size guard.
class SearchGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Degree-0 module morphism: one block per degree, commuting with the Sq1 and
/// Sq2 actions. The constructor checks shapes and both commutation squares.
class ModuleMorphism {
public:
    ModuleMorphism(A1Module source, A1Module target, std::map<int, GF2Matrix> blocks);
    static ModuleMorphism zero(A1Module source, A1Module target);
    static ModuleMorphism identity(A1Module m);

    const A1Module& source() const { return source_; }
    const A1Module& target() const { return target_; }
    /// Block at degree d, materialized at shape target.dim(d) x source.dim(d).
    GF2Matrix block(int d) const;
    GF2Vector apply(int d, const GF2Vector& v) const;
    bool is_zero() const;

    ModuleMorphism operator+(const ModuleMorphism& other) const;

private:
    struct Unchecked {};
    ModuleMorphism(Unchecked, A1Module source, A1Module target, std::map<int, GF2Matrix> blocks);
    friend std::vector<ModuleMorphism> hom_basis(const A1Module&, const A1Module&);
    friend ModuleMorphism combine(const std::vector<ModuleMorphism>&, unsigned);

    A1Module source_, target_;
    std::map<int, GF2Matrix> blocks_;  // stored iff both ends have positive dim
};

/// g after f; f.target must equal g.source degreewise in dimension.
ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f);

/// The morphism with all degrees shifted by n.
ModuleMorphism suspend(const ModuleMorphism& f, int n);

/// The unique A(1)-linear map sending the canonical generator of a cyclic
/// module to `image` (a coordinate vector of the target in degree
/// source.cyclic()->gen_degree). Throws std::invalid_argument with the
/// offending relator's name if some relator does not annihilate the image,
/// i.e. if no such morphism exists.
ModuleMorphism from_generator_image(const A1Module& source, const A1Module& target,
                                    const GF2Vector& image);

struct SubmoduleResult {
    A1Module module;
    ModuleMorphism embedding;
};
struct QuotientResult {
    A1Module module;
    ModuleMorphism projection;
};

/// Degreewise kernel with its induced action and the inclusion into the
/// source.
SubmoduleResult kernel(const ModuleMorphism& f);
/// Degreewise image with its induced action and the inclusion into the
/// target.
SubmoduleResult image(const ModuleMorphism& f);
/// Degreewise cokernel with its induced action and the projection from the
/// target.
QuotientResult cokernel(const ModuleMorphism& f);

/// Basis of the space of degree-0 morphisms a -> b, computed as the null
/// space of the combined commutation constraints. Deterministic order.
std::vector<ModuleMorphism> hom_basis(const A1Module& a, const A1Module& b);

/// The span element sum_{i: mask bit i} basis[i]; mask 0 gives the zero
/// morphism.
ModuleMorphism combine(const std::vector<ModuleMorphism>& basis, unsigned mask);

struct ShortExactSeq {
    ModuleMorphism inj;   // A -> B
    ModuleMorphism surj;  // B -> C
};

struct SesReport {
    bool exact = true;
    std::vector<std::string> failures;
};

/// Checks injectivity, surjectivity and image = kernel degreewise; failures
/// are listed per degree.
SesReport is_short_exact(const ShortExactSeq& s);

/// All pairs (f: a->b, g: b->c) forming a short exact sequence, found by
/// exhaustive enumeration over both Hom spaces. Throws SearchGuardError when
/// the product of the Hom-space sizes exceeds 2^20.
std::vector<std::pair<ModuleMorphism, ModuleMorphism>> find_exact_pairs(const A1Module& a,
                                                                        const A1Module& b,
                                                                        const A1Module& c);

/// An invertible morphism a -> b if one exists (enumerates the Hom span and
/// tests degreewise invertibility), else nullopt. Same guard as above.
std::optional<ModuleMorphism> is_isomorphic(const A1Module& a, const A1Module& b);

}  // namespace a1kit
