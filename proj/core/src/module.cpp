#include "a1kit/module.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace a1kit {

A1Module A1Module::build(std::string name, std::map<int, int> dims,
                         std::map<int, GF2Matrix> sq1, std::map<int, GF2Matrix> sq2) {
    A1Module m;
    m.name_ = std::move(name);
    for (const auto& [d, n] : dims) {
        if (n < 0)
            throw std::invalid_argument("A1Module: negative dimension");
        if (n > 0)
            m.dims_[d] = n;
    }
    auto adopt = [&m](std::map<int, GF2Matrix>& dst, std::map<int, GF2Matrix>& src,
                      int shift, const char* which) {
        for (auto& [d, mat] : src) {
            std::size_t srcdim = static_cast<std::size_t>(m.dim(d));
            std::size_t tgtdim = static_cast<std::size_t>(m.dim(d + shift));
            if (mat.rows() != tgtdim || mat.cols() != srcdim) {
                std::ostringstream os;
                os << "A1Module: " << which << " matrix at degree " << d
                   << " has shape " << mat.rows() << "x" << mat.cols()
                   << ", expected " << tgtdim << "x" << srcdim;
                throw std::invalid_argument(os.str());
            }
            if (srcdim > 0 && tgtdim > 0)
                dst[d] = std::move(mat);
        }
        // fill in zero matrices where both ends are present
        for (const auto& [d, n] : m.dims_) {
            (void)n;
            if (m.dim(d + shift) > 0 && !dst.count(d))
                dst[d] = GF2Matrix(static_cast<std::size_t>(m.dim(d + shift)),
                                   static_cast<std::size_t>(m.dim(d)));
        }
    };
    adopt(m.sq1_, sq1, 1, "sq1");
    adopt(m.sq2_, sq2, 2, "sq2");
    return m;
}

int A1Module::dim(int d) const {
    auto it = dims_.find(d);
    return it == dims_.end() ? 0 : it->second;
}

int A1Module::total_dim() const {
    int n = 0;
    for (const auto& [d, k] : dims_)
        n += k;
    return n;
}

int A1Module::min_degree() const {
    if (dims_.empty())
        throw std::logic_error("A1Module::min_degree: zero module");
    return dims_.begin()->first;
}

int A1Module::max_degree() const {
    if (dims_.empty())
        throw std::logic_error("A1Module::max_degree: zero module");
    return dims_.rbegin()->first;
}

GF2Matrix A1Module::sq1(int d) const {
    auto it = sq1_.find(d);
    if (it != sq1_.end())
        return it->second;
    return GF2Matrix(static_cast<std::size_t>(dim(d + 1)), static_cast<std::size_t>(dim(d)));
}

GF2Matrix A1Module::sq2(int d) const {
    auto it = sq2_.find(d);
    if (it != sq2_.end())
        return it->second;
    return GF2Matrix(static_cast<std::size_t>(dim(d + 2)), static_cast<std::size_t>(dim(d)));
}

bool A1Module::operator==(const A1Module& other) const {
    return dims_ == other.dims_ && sq1_ == other.sq1_ && sq2_ == other.sq2_;
}

std::vector<std::pair<int, int>> free_basis_in_degree(std::span<const int> gen_degrees,
                                                      int degree) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t g = 0; g < gen_degrees.size(); ++g) {
        int e_degree = degree - gen_degrees[g];
        for (int idx : a1().basis_indices_in_degree(e_degree))
            out.emplace_back(static_cast<int>(g), idx);
    }
    return out;
}

A1Module free_module(const std::vector<int>& gen_degrees) {
    std::map<int, int> dims;
    std::map<int, std::vector<std::pair<int, int>>> basis;
    if (!gen_degrees.empty()) {
        int lo = *std::min_element(gen_degrees.begin(), gen_degrees.end());
        int hi = *std::max_element(gen_degrees.begin(), gen_degrees.end()) + A1Algebra::kTopDegree;
        for (int d = lo; d <= hi; ++d) {
            auto b = free_basis_in_degree(gen_degrees, d);
            if (!b.empty()) {
                dims[d] = static_cast<int>(b.size());
                basis[d] = std::move(b);
            }
        }
    }

    auto action = [&](int shift) {
        std::map<int, GF2Matrix> mats;
        A1Element op = (shift == 1) ? A1Element::sq1() : A1Element::sq2();
        for (const auto& [d, src] : basis) {
            auto tgt_it = basis.find(d + shift);
            if (tgt_it == basis.end())
                continue;
            const auto& tgt = tgt_it->second;
            std::map<std::pair<int, int>, std::size_t> tgt_index;
            for (std::size_t i = 0; i < tgt.size(); ++i)
                tgt_index[tgt[i]] = i;
            GF2Matrix mat(tgt.size(), src.size());
            for (std::size_t j = 0; j < src.size(); ++j) {
                auto [g, e] = src[j];
                std::uint8_t prod = (op * A1Element::basis(e)).bits();
                for (int k = 0; k < A1Algebra::kDim; ++k)
                    if (prod & (1u << k))
                        mat.set(tgt_index.at({g, k}), j, true);
            }
            mats[d] = std::move(mat);
        }
        return mats;
    };

    std::ostringstream name;
    if (gen_degrees.empty()) {
        name << "0";
    } else if (gen_degrees.size() == 1) {
        if (gen_degrees[0] != 0)
            name << "S^" << gen_degrees[0] << " ";
        name << "A1";
    } else {
        name << "free(";
        for (std::size_t i = 0; i < gen_degrees.size(); ++i)
            name << (i ? "," : "") << gen_degrees[i];
        name << ")";
    }

    A1Module m = A1Module::build(name.str(), dims, action(1), action(2));
    if (gen_degrees.size() == 1) {
        CyclicInfo info;
        info.gen_degree = gen_degrees[0];
        for (const auto& [d, b] : basis) {
            std::vector<int>& words = info.basis_words[d];
            for (const auto& [g, e] : b) {
                (void)g;
                words.push_back(e);
            }
        }
        m.set_cyclic(std::move(info));
    }
    return m;
}

A1Module cyclic_quotient(const std::vector<A1Element>& relators, std::string name) {
    const A1Algebra& alg = a1();

    // Left ideal span per degree, in coordinates given by the canonical
    // algebra basis of that degree.
    std::map<int, RowSpace> ideal;
    for (int d = 0; d <= A1Algebra::kTopDegree; ++d)
        ideal.emplace(d, RowSpace(static_cast<std::size_t>(alg.dim_in_degree(d))));
    for (const A1Element& r : relators) {
        if (r.is_zero())
            continue;
        for (int b = 0; b < A1Algebra::kDim; ++b) {
            A1Element prod = A1Element::basis(b) * r;
            if (prod.is_zero())
                continue;
            int d = *prod.degree();
            const std::vector<int>& degree_basis = alg.basis_indices_in_degree(d);
            GF2Vector row(degree_basis.size());
            for (std::size_t i = 0; i < degree_basis.size(); ++i)
                if (prod.bits() & (1u << degree_basis[i]))
                    row.set(i, true);
            ideal.at(d).insert(std::move(row));
        }
    }

    // Quotient basis: non-pivot coordinates of the ideal echelon, per degree.
    std::map<int, int> dims;
    CyclicInfo info;
    info.gen_degree = 0;
    info.relators = relators;
    std::map<int, std::vector<std::size_t>> free_pos;
    for (int d = 0; d <= A1Algebra::kTopDegree; ++d) {
        std::vector<std::size_t> free = ideal.at(d).free_coords();
        if (free.empty())
            continue;
        dims[d] = static_cast<int>(free.size());
        const std::vector<int>& degree_basis = alg.basis_indices_in_degree(d);
        for (std::size_t f : free)
            info.basis_words[d].push_back(degree_basis[f]);
        free_pos[d] = std::move(free);
    }

    auto action = [&](int shift) {
        std::map<int, GF2Matrix> mats;
        A1Element op = (shift == 1) ? A1Element::sq1() : A1Element::sq2();
        for (const auto& [d, words] : info.basis_words) {
            auto tgt = info.basis_words.find(d + shift);
            if (tgt == info.basis_words.end())
                continue;
            const std::vector<int>& tgt_degree_basis = alg.basis_indices_in_degree(d + shift);
            GF2Matrix mat(tgt->second.size(), words.size());
            for (std::size_t j = 0; j < words.size(); ++j) {
                A1Element prod = op * A1Element::basis(words[j]);
                if (prod.is_zero())
                    continue;
                GF2Vector ambient(tgt_degree_basis.size());
                for (std::size_t i = 0; i < tgt_degree_basis.size(); ++i)
                    if (prod.bits() & (1u << tgt_degree_basis[i]))
                        ambient.set(i, true);
                GF2Vector q = ideal.at(d + shift).quotient_coords(ambient);
                for (std::size_t i = 0; i < q.size(); ++i)
                    if (q.get(i))
                        mat.set(i, j, true);
            }
            mats[d] = std::move(mat);
        }
        return mats;
    };

    if (name.empty()) {
        std::ostringstream os;
        os << "A1/(";
        bool first = true;
        for (const A1Element& r : relators) {
            os << (first ? "" : ",") << r.str();
            first = false;
        }
        os << ")";
        name = os.str();
    }
    A1Module m = A1Module::build(std::move(name), dims, action(1), action(2));
    m.set_cyclic(std::move(info));
    return m;
}

A1Module suspend(const A1Module& m, int n) {
    if (n == 0)
        return m;
    std::map<int, int> dims;
    for (const auto& [d, k] : m.dims())
        dims[d + n] = k;
    std::map<int, GF2Matrix> sq1, sq2;
    for (const auto& [d, k] : m.dims()) {
        (void)k;
        if (m.dim(d + 1) > 0)
            sq1[d + n] = m.sq1(d);
        if (m.dim(d + 2) > 0)
            sq2[d + n] = m.sq2(d);
    }
    std::ostringstream name;
    // fold iterated suspensions into a single prefix
    std::string base = m.name();
    int total = n;
    if (base.rfind("S^", 0) == 0) {
        std::size_t sp = base.find(' ');
        if (sp != std::string::npos) {
            try {
                total += std::stoi(base.substr(2, sp - 2));
                base = base.substr(sp + 1);
            } catch (const std::exception&) {
            }
        }
    }
    if (total != 0)
        name << "S^" << total << " ";
    name << base;
    A1Module out = A1Module::build(name.str(), std::move(dims), std::move(sq1), std::move(sq2));
    if (m.cyclic()) {
        CyclicInfo info;
        info.gen_degree = m.cyclic()->gen_degree + n;
        info.relators = m.cyclic()->relators;
        for (const auto& [d, words] : m.cyclic()->basis_words)
            info.basis_words[d + n] = words;
        out.set_cyclic(std::move(info));
    }
    return out;
}

A1Module direct_sum(const A1Module& a, const A1Module& b) {
    std::map<int, int> dims;
    for (const auto& [d, k] : a.dims())
        dims[d] += k;
    for (const auto& [d, k] : b.dims())
        dims[d] += k;

    auto block = [&](const GF2Matrix& ma, const GF2Matrix& mb) {
        GF2Matrix out(ma.rows() + mb.rows(), ma.cols() + mb.cols());
        for (std::size_t r = 0; r < ma.rows(); ++r)
            for (std::size_t c = 0; c < ma.cols(); ++c)
                if (ma.get(r, c))
                    out.set(r, c, true);
        for (std::size_t r = 0; r < mb.rows(); ++r)
            for (std::size_t c = 0; c < mb.cols(); ++c)
                if (mb.get(r, c))
                    out.set(ma.rows() + r, ma.cols() + c, true);
        return out;
    };

    std::map<int, GF2Matrix> sq1, sq2;
    for (const auto& [d, k] : dims) {
        (void)k;
        if (dims.count(d + 1))
            sq1[d] = block(a.sq1(d), b.sq1(d));
        if (dims.count(d + 2))
            sq2[d] = block(a.sq2(d), b.sq2(d));
    }
    return A1Module::build(a.name() + " + " + b.name(), std::move(dims), std::move(sq1),
                           std::move(sq2));
}

ActionReport verify_action(const A1Module& m) {
    ActionReport report;
    if (m.is_zero_module())
        return report;
    int lo = m.min_degree(), hi = m.max_degree();
    for (int d = lo; d <= hi; ++d) {
        if (m.dim(d) == 0)
            continue;
        if (!(m.sq1(d + 1) * m.sq1(d)).is_zero()) {
            report.ok = false;
            std::ostringstream os;
            os << "degree " << d << ": Sq1 Sq1 != 0";
            report.failures.push_back(os.str());
        }
        GF2Matrix lhs = m.sq2(d + 2) * m.sq2(d);
        GF2Matrix rhs = m.sq1(d + 3) * (m.sq2(d + 1) * m.sq1(d));
        if (!(lhs + rhs).is_zero()) {
            report.ok = false;
            std::ostringstream os;
            os << "degree " << d << ": Sq2 Sq2 != Sq1 Sq2 Sq1";
            report.failures.push_back(os.str());
        }
    }
    return report;
}

GF2Vector act_word(const A1Module& m, const Word& word, int degree, GF2Vector v) {
    if (v.size() != static_cast<std::size_t>(m.dim(degree)))
        throw std::invalid_argument("act_word: vector length does not match dim");
    int d = degree;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        v = (*it == 1) ? m.sq1(d).apply(v) : m.sq2(d).apply(v);
        d += *it;
    }
    return v;
}

GF2Vector act(const A1Module& m, const A1Element& e, int degree, const GF2Vector& v) {
    std::optional<int> ed = e.degree();
    if (!ed)
        throw std::invalid_argument("act: zero element has no target degree");
    GF2Vector out(static_cast<std::size_t>(m.dim(degree + *ed)));
    for (int i = 0; i < A1Algebra::kDim; ++i)
        if (e.bits() & (1u << i))
            out ^= act_word(m, a1().basis_element(i).word, degree, v);
    return out;
}

GF2Vector generator_vector(const A1Module& m) {
    if (!m.cyclic())
        throw std::invalid_argument("generator_vector: module has no cyclic structure");
    int g = m.cyclic()->gen_degree;
    const auto& words = m.cyclic()->basis_words;
    auto it = words.find(g);
    if (it == words.end())
        throw std::invalid_argument("generator_vector: generator degree has dimension 0");
    GF2Vector v(it->second.size());
    for (std::size_t i = 0; i < it->second.size(); ++i)
        if (it->second[i] == 0) {  // the unit word
            v.set(i, true);
            return v;
        }
    throw std::invalid_argument("generator_vector: unit class not present");
}

}  // namespace a1kit
