#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "a1kit/gf2.hpp"

namespace a1kit {

/// A word in the generators Sq1, Sq2, stored as its letter sequence
/// (1 for Sq1, 2 for Sq2). The empty word is the unit.
using Word = std::vector<std::uint8_t>;

int word_degree(const Word& w);
std::string word_name(const Word& w);

/// The subalgebra of the mod-2 Steenrod algebra generated by Sq1 and Sq2,
/// subject to Sq1 Sq1 = 0 and Sq2 Sq2 = Sq1 Sq2 Sq1. Built by degreewise
/// linear algebra over the free associative algebra: in each degree, the span
/// of all words modulo the span of every (word)·relation·(word) product. The
/// construction certifies itself: total dimension must come out as 8 with
/// degree vector (1,1,1,2,1,1,1), every product of two basis words must land
/// back in the quotient, and the resulting table must be associative.
class A1Algebra {
public:
    static constexpr int kDim = 8;
    static constexpr int kTopDegree = 6;

    struct BasisElement {
        Word word;         // canonical representative word
        int degree;
        std::string name;  // "1", "Sq1", "Sq2", "Sq3", "Sq2Sq1", ...
    };

    /// Runs the degreewise quotient construction and its consistency checks.
    /// Throws std::logic_error with a diagnostic if any check fails.
    static A1Algebra build();

    const std::vector<BasisElement>& basis() const { return basis_; }
    const BasisElement& basis_element(int i) const { return basis_[static_cast<std::size_t>(i)]; }
    int dim_in_degree(int d) const;
    /// Global basis indices in degree d, ascending.
    const std::vector<int>& basis_indices_in_degree(int d) const;
    /// Index of the canonical basis word equal to w in the quotient, if w is
    /// itself a canonical representative.
    std::optional<int> index_of_word(const Word& w) const;

    /// Product of two basis elements as a bitmask over the global basis.
    std::uint8_t multiply_basis(int i, int j) const;
    /// Normal form of an arbitrary word as a bitmask over the global basis.
    std::uint8_t word_normal_form(const Word& w) const;

private:
    A1Algebra() = default;

    std::vector<BasisElement> basis_;
    std::map<int, std::vector<int>> by_degree_;
    std::array<std::array<std::uint8_t, kDim>, kDim> table_{};
    std::map<Word, std::uint8_t> normal_forms_;  // words of degree <= kTopDegree
};

/// The canonical built instance (the construction is deterministic, so all
/// callers can share one copy).
const A1Algebra& a1();

/// Homogeneous element of A(1), stored as a bitmask over the canonical basis.
/// All factory functions and operations preserve homogeneity; adding elements
/// of different degrees is a contract violation.
class A1Element {
public:
    A1Element() = default;

    static A1Element zero() { return A1Element(); }
    static A1Element unit() { return basis(0); }
    static A1Element basis(int index);
    static A1Element sq1() { return basis(1); }
    static A1Element sq2() { return basis(2); }
    /// Grammar (whitespace ignored between tokens):
    ///   element := "0" | term ("+" term)*
    ///   term    := ("Sq1" | "Sq2" | "Sq3")+
    /// Sq3 abbreviates Sq1 Sq2. Throws std::invalid_argument on malformed
    /// input or an inhomogeneous sum.
    static A1Element parse(std::string_view text);

    bool is_zero() const { return bits_ == 0; }
    std::uint8_t bits() const { return bits_; }
    /// Degree of a nonzero homogeneous element; nullopt for zero.
    std::optional<int> degree() const;

    A1Element operator+(const A1Element& other) const;
    A1Element operator*(const A1Element& other) const;
    bool operator==(const A1Element&) const = default;

    std::string str() const;

private:
    explicit A1Element(std::uint8_t bits) : bits_(bits) {}
    std::uint8_t bits_ = 0;
};

/// The Milnor primitives Q0 = Sq1 and Q1 = Sq3 + Sq2Sq1. Both square to zero
/// and they commute.
std::pair<A1Element, A1Element> q_operators();

}  // namespace a1kit
