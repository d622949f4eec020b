#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "a1kit/a1algebra.hpp"
#include "a1kit/gf2.hpp"

namespace a1kit {

/// Extra structure carried by modules built as cyclic quotients (and by free
/// modules on one generator): the generator degree, the relator list, and
/// per-degree labels tying each coordinate to the algebra basis word it
/// represents. Morphisms out of cyclic modules are built from this data.
struct CyclicInfo {
    int gen_degree = 0;
    std::vector<A1Element> relators;
    /// basis_words.at(d)[i] = global algebra basis index of coordinate i.
    std::map<int, std::vector<int>> basis_words;
};

/// Finite graded module over A(1): dimension per degree plus per-degree
/// action matrices for Sq1 (degree +1) and Sq2 (degree +2). Degrees are
/// arbitrary integers; degrees outside the support have dimension 0 and all
/// maps touching them are zero matrices of the right shape. The name is
/// display-only metadata and never takes part in equality.
class A1Module {
public:
    A1Module() = default;

    /// Validates matrix shapes against dims. Action matrices may be given
    /// only where both source and target dimensions are positive; missing
    /// ones default to zero.
    static A1Module build(std::string name, std::map<int, int> dims,
                          std::map<int, GF2Matrix> sq1, std::map<int, GF2Matrix> sq2);

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    int dim(int d) const;
    const std::map<int, int>& dims() const { return dims_; }
    int total_dim() const;
    bool is_zero_module() const { return dims_.empty(); }
    /// Degree support bounds; only meaningful when the module is nonzero.
    int min_degree() const;
    int max_degree() const;

    /// Action matrix from degree d to d+1, materialized at shape
    /// dim(d+1) x dim(d).
    GF2Matrix sq1(int d) const;
    /// Action matrix from degree d to d+2, shape dim(d+2) x dim(d).
    GF2Matrix sq2(int d) const;

    /// Structural equality: dims and actions, ignoring name and any cyclic
    /// metadata.
    bool operator==(const A1Module& other) const;

    const std::optional<CyclicInfo>& cyclic() const { return cyclic_; }
    void set_cyclic(CyclicInfo info) { cyclic_ = std::move(info); }

private:
    std::string name_;
    std::map<int, int> dims_;             // only degrees with positive dimension
    std::map<int, GF2Matrix> sq1_, sq2_;  // stored iff both ends have positive dim
    std::optional<CyclicInfo> cyclic_;
};

/// Deterministic basis of a free module in one degree: (generator index,
/// algebra basis index) pairs with gen_degrees[g] + deg(e) = degree, ordered
/// by generator then by algebra basis index.
std::vector<std::pair<int, int>> free_basis_in_degree(std::span<const int> gen_degrees,
                                                      int degree);

/// Free module on generators in the given degrees, with the left
/// multiplication action. A single generator yields a cyclic module (with
/// empty relator list).
A1Module free_module(const std::vector<int>& gen_degrees);

/// Quotient of A(1) by the left ideal generated by the relators. The degree-0
/// image of the unit is the canonical generator; the quotient basis in each
/// degree is the echelon complement of the ideal. Relators must be
/// homogeneous (A1Element enforces that); zero relators are ignored.
A1Module cyclic_quotient(const std::vector<A1Element>& relators, std::string name = "");

/// All degrees shifted by n; action matrices unchanged.
A1Module suspend(const A1Module& m, int n);

/// Degreewise block sum; a's coordinates come first in every degree.
A1Module direct_sum(const A1Module& a, const A1Module& b);

struct ActionReport {
    bool ok = true;
    std::vector<std::string> failures;  // one line per failing degree/identity
};

/// Checks Sq1 Sq1 = 0 and Sq2 Sq2 = Sq1 Sq2 Sq1 degreewise.
ActionReport verify_action(const A1Module& m);

/// Action of a single basis word on a coordinate vector in degree `degree`;
/// the result lives in degree + deg(word). Letters act right to left.
GF2Vector act_word(const A1Module& m, const Word& word, int degree, GF2Vector v);

/// Action of a homogeneous algebra element (sum over its basis words).
GF2Vector act(const A1Module& m, const A1Element& e, int degree, const GF2Vector& v);

/// Coordinate vector of the canonical generator of a cyclic module.
GF2Vector generator_vector(const A1Module& m);

}  // namespace a1kit
