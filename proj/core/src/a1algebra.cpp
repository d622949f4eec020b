#include "a1kit/a1algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace a1kit {

namespace {

// Highest degree the construction has to understand: a product of two basis
// elements of A(1) has degree at most 12. Every component above the top
// degree 6 must come out zero, which build() verifies.
constexpr int kMaxWorkDegree = 2 * A1Algebra::kTopDegree;

/// All words of the given degree over letters of degree 1 and 2, in
/// lexicographic order with Sq1 < Sq2.
std::vector<Word> words_of_degree(int degree) {
    if (degree == 0)
        return {Word{}};
    std::vector<Word> out;
    for (std::uint8_t letter : {std::uint8_t(1), std::uint8_t(2)}) {
        if (letter > degree)
            break;
        for (const Word& tail : words_of_degree(degree - letter)) {
            Word w;
            w.reserve(tail.size() + 1);
            w.push_back(letter);
            w.insert(w.end(), tail.begin(), tail.end());
            out.push_back(std::move(w));
        }
    }
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

// The defining relations: Sq1 Sq1 = 0 and Sq2 Sq2 + Sq1 Sq2 Sq1 = 0, each as
// a list of words to be summed.
const std::vector<std::vector<Word>>& relations() {
    static const std::vector<std::vector<Word>> rels = {
        {{1, 1}},
        {{2, 2}, {1, 2, 1}},
    };
    return rels;
}

}  // namespace

int word_degree(const Word& w) {
    int d = 0;
    for (std::uint8_t letter : w)
        d += letter;
    return d;
}

std::string word_name(const Word& w) {
    if (w.empty())
        return "1";
    if (w == Word{1, 2})
        return "Sq3";  // the Adem relation Sq1 Sq2 = Sq3 names this class
    std::string s;
    for (std::uint8_t letter : w)
        s += (letter == 1) ? "Sq1" : "Sq2";
    return s;
}

A1Algebra A1Algebra::build() {
    A1Algebra alg;

    // Per degree: the word list, and the relation span in reversed-coordinate
    // order. Reversing the coordinates makes the left-to-right echelon pivots
    // fall on the lexicographically largest words, so the surviving basis
    // representatives are the least words (Sq1Sq2 rather than Sq2Sq2 in
    // degree 3+1, and so on).
    for (int d = 0; d <= kMaxWorkDegree; ++d) {
        std::vector<Word> words = words_of_degree(d);
        std::size_t n = words.size();
        auto rev = [n](std::size_t i) { return n - 1 - i; };
        std::map<Word, std::size_t> index;
        for (std::size_t i = 0; i < n; ++i)
            index[words[i]] = i;

        RowSpace span(n);
        for (const auto& rel : relations()) {
            int rel_degree = word_degree(rel.front());
            for (int du = 0; du + rel_degree <= d; ++du) {
                int dv = d - rel_degree - du;
                for (const Word& u : words_of_degree(du))
                    for (const Word& v : words_of_degree(dv)) {
                        GF2Vector row(n);
                        for (const Word& r : rel) {
                            std::size_t i = index.at(concat(concat(u, r), v));
                            row.set(rev(i), !row.get(rev(i)));
                        }
                        span.insert(std::move(row));
                    }
            }
        }

        std::vector<std::size_t> free = span.free_coords();
        std::vector<int> degree_basis;  // global indices, built below
        std::vector<std::size_t> basis_word_idx;
        for (auto it = free.rbegin(); it != free.rend(); ++it)
            basis_word_idx.push_back(rev(*it));  // ascending lex order

        if (d <= kTopDegree) {
            for (std::size_t wi : basis_word_idx) {
                int global = static_cast<int>(alg.basis_.size());
                alg.basis_.push_back({words[wi], d, word_name(words[wi])});
                degree_basis.push_back(global);
            }
            alg.by_degree_[d] = degree_basis;

            // Normal form of every degree-d word over the canonical basis.
            std::map<std::size_t, int> coord_to_global;
            for (std::size_t k = 0; k < basis_word_idx.size(); ++k)
                coord_to_global[basis_word_idx[k]] = degree_basis[k];
            for (std::size_t i = 0; i < n; ++i) {
                GF2Vector red = span.reduce(GF2Vector::unit(n, rev(i)));
                std::uint8_t mask = 0;
                for (std::size_t c : red.ones())
                    mask = static_cast<std::uint8_t>(mask | (1u << coord_to_global.at(rev(c))));
                alg.normal_forms_[words[i]] = mask;
            }
        } else if (!basis_word_idx.empty()) {
            std::ostringstream os;
            os << "A(1) construction: degree " << d << " has dimension "
               << basis_word_idx.size() << ", expected 0";
            throw std::logic_error(os.str());
        }
    }

    // Certify the presentation: the degreewise quotient must be exactly the
    // 8-dimensional algebra with degree vector (1,1,1,2,1,1,1).
    static const std::map<int, int> expected = {{0, 1}, {1, 1}, {2, 1}, {3, 2},
                                                {4, 1}, {5, 1}, {6, 1}};
    if (alg.basis_.size() != kDim)
        throw std::logic_error("A(1) construction: total dimension is not 8");
    for (const auto& [d, n] : expected)
        if (alg.dim_in_degree(d) != n)
            throw std::logic_error("A(1) construction: wrong dimension in degree " +
                                   std::to_string(d));

    // Multiplication table, closed over the quotient by construction.
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            Word prod = concat(alg.basis_[i].word, alg.basis_[j].word);
            alg.table_[i][j] = alg.word_normal_form(prod);
        }

    // Unit, associativity on all basis triples, gradedness.
    for (int i = 0; i < kDim; ++i) {
        if (alg.table_[0][i] != (1u << i) || alg.table_[i][0] != (1u << i))
            throw std::logic_error("A(1) construction: degree-0 element is not a unit");
    }
    auto mul_mask = [&alg](std::uint8_t a, std::uint8_t b) {
        std::uint8_t out = 0;
        for (int i = 0; i < kDim; ++i)
            if (a & (1u << i))
                for (int j = 0; j < kDim; ++j)
                    if (b & (1u << j))
                        out ^= alg.table_[i][j];
        return out;
    };
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            for (int k = 0; k < kDim; ++k)
                if (mul_mask(alg.table_[i][j], 1u << k) != mul_mask(1u << i, alg.table_[j][k]))
                    throw std::logic_error("A(1) construction: associativity failure");
            if (alg.table_[i][j]) {
                int d = alg.basis_[i].degree + alg.basis_[j].degree;
                for (int k = 0; k < kDim; ++k)
                    if ((alg.table_[i][j] & (1u << k)) && alg.basis_[k].degree != d)
                        throw std::logic_error("A(1) construction: product not graded");
            }
        }

    return alg;
}

int A1Algebra::dim_in_degree(int d) const {
    auto it = by_degree_.find(d);
    return it == by_degree_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<int>& A1Algebra::basis_indices_in_degree(int d) const {
    static const std::vector<int> empty;
    auto it = by_degree_.find(d);
    return it == by_degree_.end() ? empty : it->second;
}

std::optional<int> A1Algebra::index_of_word(const Word& w) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].word == w)
            return static_cast<int>(i);
    return std::nullopt;
}

std::uint8_t A1Algebra::multiply_basis(int i, int j) const {
    return table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

std::uint8_t A1Algebra::word_normal_form(const Word& w) const {
    if (word_degree(w) > kTopDegree)
        return 0;
    return normal_forms_.at(w);
}

const A1Algebra& a1() {
    static const A1Algebra instance = A1Algebra::build();
    return instance;
}

A1Element A1Element::basis(int index) {
    if (index < 0 || index >= A1Algebra::kDim)
        throw std::invalid_argument("A1Element::basis: index out of range");
    return A1Element(static_cast<std::uint8_t>(1u << index));
}

std::optional<int> A1Element::degree() const {
    if (bits_ == 0)
        return std::nullopt;
    const A1Algebra& alg = a1();
    int d = -1;
    for (int i = 0; i < A1Algebra::kDim; ++i)
        if (bits_ & (1u << i)) {
            if (d < 0)
                d = alg.basis_element(i).degree;
            else if (alg.basis_element(i).degree != d)
                throw std::logic_error("A1Element: inhomogeneous bit pattern");
        }
    return d;
}

A1Element A1Element::operator+(const A1Element& other) const {
    if (!is_zero() && !other.is_zero() && degree() != other.degree())
        throw std::invalid_argument("A1Element: sum of elements of different degrees");
    return A1Element(static_cast<std::uint8_t>(bits_ ^ other.bits_));
}

A1Element A1Element::operator*(const A1Element& other) const {
    const A1Algebra& alg = a1();
    std::uint8_t out = 0;
    for (int i = 0; i < A1Algebra::kDim; ++i)
        if (bits_ & (1u << i))
            for (int j = 0; j < A1Algebra::kDim; ++j)
                if (other.bits_ & (1u << j))
                    out ^= alg.multiply_basis(i, j);
    return A1Element(out);
}

A1Element A1Element::parse(std::string_view text) {
    // Tokenize: Sq1 / Sq2 / Sq3 / '+' / '0', whitespace ignored.
    struct Token {
        char kind;  // '1','2','3' for generators, '+' and '0'
    };
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '+') {
            tokens.push_back({'+'});
            ++i;
            continue;
        }
        if (c == '0') {
            tokens.push_back({'0'});
            ++i;
            continue;
        }
        if (text.substr(i, 2) == "Sq" && i + 2 < text.size() &&
            (text[i + 2] == '1' || text[i + 2] == '2' || text[i + 2] == '3')) {
            tokens.push_back({text[i + 2]});
            i += 3;
            continue;
        }
        throw std::invalid_argument("A1Element::parse: malformed token at \"" +
                                    std::string(text.substr(i)) + "\"");
    }
    if (tokens.empty())
        throw std::invalid_argument("A1Element::parse: empty input");
    if (tokens.size() == 1 && tokens[0].kind == '0')
        return zero();

    // Split into '+'-separated terms of juxtaposed generators.
    std::vector<Word> terms;
    Word current;
    bool expect_term = true;
    for (const Token& t : tokens) {
        switch (t.kind) {
            case '+':
                if (current.empty())
                    throw std::invalid_argument("A1Element::parse: empty term");
                terms.push_back(std::move(current));
                current.clear();
                expect_term = true;
                break;
            case '0':
                throw std::invalid_argument("A1Element::parse: '0' cannot appear in a sum");
            case '1':
                current.push_back(1);
                expect_term = false;
                break;
            case '2':
                current.push_back(2);
                expect_term = false;
                break;
            case '3':
                current.push_back(1);
                current.push_back(2);
                expect_term = false;
                break;
        }
    }
    if (expect_term || current.empty())
        throw std::invalid_argument("A1Element::parse: trailing '+' or empty term");
    terms.push_back(std::move(current));

    int degree = word_degree(terms.front());
    std::uint8_t bits = 0;
    for (const Word& w : terms) {
        if (word_degree(w) != degree)
            throw std::invalid_argument("A1Element::parse: inhomogeneous sum");
        bits ^= a1().word_normal_form(w);
    }
    return A1Element(bits);
}

std::string A1Element::str() const {
    if (bits_ == 0)
        return "0";
    std::string out;
    for (int i = 0; i < A1Algebra::kDim; ++i)
        if (bits_ & (1u << i)) {
            if (!out.empty())
                out += " + ";
            out += a1().basis_element(i).name;
        }
    return out;
}

std::pair<A1Element, A1Element> q_operators() {
    A1Element q0 = A1Element::sq1();
    A1Element q1 = A1Element::parse("Sq3 + Sq2Sq1");
    return {q0, q1};
}

}  // namespace a1kit
