#include "a1kit/morphism.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace a1kit {

namespace {

std::map<int, GF2Matrix> normalize_blocks(const A1Module& src, const A1Module& tgt,
                                          std::map<int, GF2Matrix>&& blocks) {
    std::map<int, GF2Matrix> out;
    for (auto& [d, mat] : blocks) {
        std::size_t s = static_cast<std::size_t>(src.dim(d));
        std::size_t t = static_cast<std::size_t>(tgt.dim(d));
        if (mat.rows() != t || mat.cols() != s) {
            std::ostringstream os;
            os << "ModuleMorphism: block at degree " << d << " has shape " << mat.rows()
               << "x" << mat.cols() << ", expected " << t << "x" << s;
            throw std::invalid_argument(os.str());
        }
        if (s > 0 && t > 0)
            out[d] = std::move(mat);
    }
    for (const auto& [d, s] : src.dims()) {
        (void)s;
        if (tgt.dim(d) > 0 && !out.count(d))
            out[d] = GF2Matrix(static_cast<std::size_t>(tgt.dim(d)),
                               static_cast<std::size_t>(src.dim(d)));
    }
    return out;
}

/// Degrees where either module is nonzero (so every commutation square and
/// exactness condition is covered).
std::vector<int> support(const A1Module& a, const A1Module& b) {
    std::set<int> s;
    for (const auto& [d, n] : a.dims()) {
        (void)n;
        s.insert(d);
    }
    for (const auto& [d, n] : b.dims()) {
        (void)n;
        s.insert(d);
    }
    return {s.begin(), s.end()};
}

/// Builds a submodule of `ambient` from per-degree basis rows (rows are
/// coordinate vectors of ambient in that degree). The rows must span an
/// action-closed subspace; the induced action is expressed in the given
/// bases.
SubmoduleResult submodule_from_rows(const A1Module& ambient, std::map<int, GF2Matrix> rows,
                                    const std::string& name) {
    std::map<int, int> dims;
    for (const auto& [d, mat] : rows)
        if (mat.rows() > 0)
            dims[d] = static_cast<int>(mat.rows());

    auto basis_at = [&](int d) -> const GF2Matrix* {
        auto it = rows.find(d);
        return it == rows.end() ? nullptr : &it->second;
    };

    auto induced = [&](int shift) {
        std::map<int, GF2Matrix> mats;
        for (const auto& [d, mat] : rows) {
            const GF2Matrix* tgt = basis_at(d + shift);
            if (!tgt || mat.rows() == 0 || tgt->rows() == 0)
                continue;
            GF2Matrix action = (shift == 1) ? ambient.sq1(d) : ambient.sq2(d);
            GF2Matrix out(tgt->rows(), mat.rows());
            GF2Matrix tgt_t = tgt->transposed();
            for (std::size_t j = 0; j < mat.rows(); ++j) {
                GF2Vector w = action.apply(mat.row(j));
                std::optional<GF2Vector> coords = solve(tgt_t, w);
                if (!coords)
                    throw std::logic_error("submodule_from_rows: subspace not action-closed");
                for (std::size_t i = 0; i < coords->size(); ++i)
                    if (coords->get(i))
                        out.set(i, j, true);
            }
            mats[d] = std::move(out);
        }
        return mats;
    };

    A1Module sub = A1Module::build(name, dims, induced(1), induced(2));

    std::map<int, GF2Matrix> inc_blocks;
    for (const auto& [d, mat] : rows)
        if (mat.rows() > 0)
            inc_blocks[d] = mat.transposed();  // columns are the basis vectors
    ModuleMorphism inc(sub, ambient, std::move(inc_blocks));
    return {std::move(sub), std::move(inc)};
}

}  // namespace

ModuleMorphism::ModuleMorphism(A1Module source, A1Module target, std::map<int, GF2Matrix> blocks)
    : source_(std::move(source)),
      target_(std::move(target)),
      blocks_(normalize_blocks(source_, target_, std::move(blocks))) {
    // check both commutation squares on the whole support
    for (int d : support(source_, target_)) {
        GF2Matrix sq1_square = target_.sq1(d) * block(d) + block(d + 1) * source_.sq1(d);
        if (!sq1_square.is_zero()) {
            std::ostringstream os;
            os << "ModuleMorphism: does not commute with Sq1 at degree " << d;
            throw std::invalid_argument(os.str());
        }
        GF2Matrix sq2_square = target_.sq2(d) * block(d) + block(d + 2) * source_.sq2(d);
        if (!sq2_square.is_zero()) {
            std::ostringstream os;
            os << "ModuleMorphism: does not commute with Sq2 at degree " << d;
            throw std::invalid_argument(os.str());
        }
    }
}

ModuleMorphism::ModuleMorphism(Unchecked, A1Module source, A1Module target,
                               std::map<int, GF2Matrix> blocks)
    : source_(std::move(source)),
      target_(std::move(target)),
      blocks_(normalize_blocks(source_, target_, std::move(blocks))) {}

ModuleMorphism ModuleMorphism::zero(A1Module source, A1Module target) {
    return ModuleMorphism(Unchecked{}, std::move(source), std::move(target), {});
}

ModuleMorphism ModuleMorphism::identity(A1Module m) {
    std::map<int, GF2Matrix> blocks;
    for (const auto& [d, n] : m.dims())
        blocks[d] = GF2Matrix::identity(static_cast<std::size_t>(n));
    A1Module copy = m;
    return ModuleMorphism(Unchecked{}, std::move(copy), std::move(m), std::move(blocks));
}

GF2Matrix ModuleMorphism::block(int d) const {
    auto it = blocks_.find(d);
    if (it != blocks_.end())
        return it->second;
    return GF2Matrix(static_cast<std::size_t>(target_.dim(d)),
                     static_cast<std::size_t>(source_.dim(d)));
}

GF2Vector ModuleMorphism::apply(int d, const GF2Vector& v) const {
    return block(d).apply(v);
}

bool ModuleMorphism::is_zero() const {
    for (const auto& [d, mat] : blocks_) {
        (void)d;
        if (!mat.is_zero())
            return false;
    }
    return true;
}

ModuleMorphism ModuleMorphism::operator+(const ModuleMorphism& other) const {
    if (!(source_ == other.source_) || !(target_ == other.target_))
        throw std::invalid_argument("ModuleMorphism sum: source/target mismatch");
    std::map<int, GF2Matrix> blocks = blocks_;
    for (const auto& [d, mat] : other.blocks_) {
        auto it = blocks.find(d);
        if (it == blocks.end())
            blocks[d] = mat;
        else
            it->second = it->second + mat;
    }
    return ModuleMorphism(Unchecked{}, source_, target_, std::move(blocks));
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
    if (!(f.target() == g.source()))
        throw std::invalid_argument("compose: target of f does not match source of g");
    std::map<int, GF2Matrix> blocks;
    for (const auto& [d, n] : f.source().dims()) {
        (void)n;
        if (g.target().dim(d) > 0)
            blocks[d] = g.block(d) * f.block(d);
    }
    return ModuleMorphism(f.source(), g.target(), std::move(blocks));
}

ModuleMorphism suspend(const ModuleMorphism& f, int n) {
    A1Module src = suspend(f.source(), n);
    A1Module tgt = suspend(f.target(), n);
    std::map<int, GF2Matrix> blocks;
    for (const auto& [d, k] : f.source().dims()) {
        (void)k;
        if (f.target().dim(d) > 0)
            blocks[d + n] = f.block(d);
    }
    return ModuleMorphism(std::move(src), std::move(tgt), std::move(blocks));
}

ModuleMorphism from_generator_image(const A1Module& source, const A1Module& target,
                                    const GF2Vector& image) {
    if (!source.cyclic())
        throw std::invalid_argument("from_generator_image: source is not cyclic");
    const CyclicInfo& info = *source.cyclic();
    int g = info.gen_degree;
    if (image.size() != static_cast<std::size_t>(target.dim(g)))
        throw std::invalid_argument(
            "from_generator_image: image vector does not live in the generator degree");

    for (const A1Element& r : info.relators) {
        if (r.is_zero())
            continue;
        if (!act(target, r, g, image).is_zero())
            throw std::invalid_argument("from_generator_image: relator not annihilated: " +
                                        r.str());
    }

    std::map<int, GF2Matrix> blocks;
    for (const auto& [d, words] : info.basis_words) {
        if (target.dim(d) == 0)
            continue;
        GF2Matrix mat(static_cast<std::size_t>(target.dim(d)), words.size());
        for (std::size_t j = 0; j < words.size(); ++j) {
            GF2Vector col = act_word(target, a1().basis_element(words[j]).word, g, image);
            for (std::size_t i = 0; i < col.size(); ++i)
                if (col.get(i))
                    mat.set(i, j, true);
        }
        blocks[d] = std::move(mat);
    }
    return ModuleMorphism(source, target, std::move(blocks));
}

SubmoduleResult kernel(const ModuleMorphism& f) {
    std::map<int, GF2Matrix> rows;
    for (const auto& [d, n] : f.source().dims()) {
        (void)n;
        rows[d] = kernel_basis(f.block(d));
    }
    return submodule_from_rows(f.source(), std::move(rows), "ker(" + f.source().name() + ")");
}

SubmoduleResult image(const ModuleMorphism& f) {
    std::map<int, GF2Matrix> rows;
    for (const auto& [d, n] : f.target().dims()) {
        (void)n;
        RowSpace span(f.block(d).transposed());
        rows[d] = span.basis_matrix();
    }
    return submodule_from_rows(f.target(), std::move(rows), "im(" + f.source().name() + ")");
}

QuotientResult cokernel(const ModuleMorphism& f) {
    const A1Module& tgt = f.target();
    std::map<int, RowSpace> img;
    for (const auto& [d, n] : tgt.dims()) {
        (void)n;
        img.emplace(d, RowSpace(f.block(d).transposed()));
    }
    auto img_at = [&](int d) -> const RowSpace* {
        auto it = img.find(d);
        return it == img.end() ? nullptr : &it->second;
    };

    std::map<int, int> dims;
    for (const auto& [d, n] : tgt.dims()) {
        std::size_t q = static_cast<std::size_t>(n) - img.at(d).dim();
        if (q > 0)
            dims[d] = static_cast<int>(q);
    }

    auto induced = [&](int shift) {
        std::map<int, GF2Matrix> mats;
        for (const auto& [d, q] : dims) {
            if (!dims.count(d + shift))
                continue;
            const RowSpace& src_space = img.at(d);
            const RowSpace& tgt_space = img.at(d + shift);
            std::vector<std::size_t> free = src_space.free_coords();
            GF2Matrix action = (shift == 1) ? tgt.sq1(d) : tgt.sq2(d);
            GF2Matrix out(static_cast<std::size_t>(dims.at(d + shift)),
                          static_cast<std::size_t>(q));
            for (std::size_t j = 0; j < free.size(); ++j) {
                GF2Vector w = action.apply(
                    GF2Vector::unit(static_cast<std::size_t>(tgt.dim(d)), free[j]));
                GF2Vector qc = tgt_space.quotient_coords(w);
                for (std::size_t i = 0; i < qc.size(); ++i)
                    if (qc.get(i))
                        out.set(i, j, true);
            }
            mats[d] = std::move(out);
        }
        return mats;
    };

    A1Module quot = A1Module::build("coker(" + f.target().name() + ")", dims, induced(1),
                                    induced(2));

    std::map<int, GF2Matrix> proj_blocks;
    for (const auto& [d, q] : dims) {
        const RowSpace* space = img_at(d);
        GF2Matrix mat(static_cast<std::size_t>(q), static_cast<std::size_t>(tgt.dim(d)));
        for (std::size_t c = 0; c < static_cast<std::size_t>(tgt.dim(d)); ++c) {
            GF2Vector qc =
                space->quotient_coords(GF2Vector::unit(static_cast<std::size_t>(tgt.dim(d)), c));
            for (std::size_t i = 0; i < qc.size(); ++i)
                if (qc.get(i))
                    mat.set(i, c, true);
        }
        proj_blocks[d] = std::move(mat);
    }
    ModuleMorphism proj(tgt, quot, std::move(proj_blocks));
    return {std::move(quot), std::move(proj)};
}

std::vector<ModuleMorphism> hom_basis(const A1Module& a, const A1Module& b) {
    // Unknowns: the entries of every block, ordered by (degree, row, col).
    std::vector<int> degrees;
    std::map<int, std::size_t> offset;
    std::size_t total = 0;
    for (const auto& [d, n] : a.dims()) {
        if (b.dim(d) == 0)
            continue;
        degrees.push_back(d);
        offset[d] = total;
        total += static_cast<std::size_t>(n) * static_cast<std::size_t>(b.dim(d));
    }
    auto unknown = [&](int d, std::size_t r, std::size_t c) {
        return offset.at(d) + r * static_cast<std::size_t>(a.dim(d)) + c;
    };

    // Constraints: for each degree and each action, the commutation square.
    std::vector<GF2Vector> constraint_rows;
    auto add_constraints = [&](int shift) {
        for (int d : support(a, b)) {
            std::size_t s_d = static_cast<std::size_t>(a.dim(d));
            std::size_t t_up = static_cast<std::size_t>(b.dim(d + shift));
            if (s_d == 0 || t_up == 0)
                continue;
            GF2Matrix tgt_action = (shift == 1) ? b.sq1(d) : b.sq2(d);
            GF2Matrix src_action = (shift == 1) ? a.sq1(d) : a.sq2(d);
            for (std::size_t i = 0; i < t_up; ++i)
                for (std::size_t j = 0; j < s_d; ++j) {
                    GF2Vector row(total);
                    // (target action . B(d))[i][j]
                    if (b.dim(d) > 0)
                        for (std::size_t k = 0; k < static_cast<std::size_t>(b.dim(d)); ++k)
                            if (tgt_action.get(i, k))
                                row.set(unknown(d, k, j), !row.get(unknown(d, k, j)));
                    // (B(d+shift) . source action)[i][j]
                    if (a.dim(d + shift) > 0)
                        for (std::size_t l = 0; l < static_cast<std::size_t>(a.dim(d + shift));
                             ++l)
                            if (src_action.get(l, j)) {
                                std::size_t u = unknown(d + shift, i, l);
                                row.set(u, !row.get(u));
                            }
                    if (!row.is_zero())
                        constraint_rows.push_back(std::move(row));
                }
        }
    };
    add_constraints(1);
    add_constraints(2);

    GF2Matrix constraints = GF2Matrix::from_row_vectors(total, constraint_rows);
    GF2Matrix basis = kernel_basis(constraints);

    std::vector<ModuleMorphism> out;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        std::map<int, GF2Matrix> blocks;
        for (int d : degrees) {
            std::size_t s_d = static_cast<std::size_t>(a.dim(d));
            std::size_t t_d = static_cast<std::size_t>(b.dim(d));
            GF2Matrix blk(t_d, s_d);
            for (std::size_t i = 0; i < t_d; ++i)
                for (std::size_t j = 0; j < s_d; ++j)
                    if (basis.get(r, unknown(d, i, j)))
                        blk.set(i, j, true);
            blocks[d] = std::move(blk);
        }
        out.push_back(ModuleMorphism(ModuleMorphism::Unchecked{}, a, b, std::move(blocks)));
    }
    return out;
}

ModuleMorphism combine(const std::vector<ModuleMorphism>& basis, unsigned mask) {
    if (basis.empty())
        throw std::invalid_argument("combine: empty basis");
    ModuleMorphism out = ModuleMorphism::zero(basis.front().source(), basis.front().target());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (mask & (1u << i))
            out = out + basis[i];
    return out;
}

SesReport is_short_exact(const ShortExactSeq& s) {
    SesReport report;
    if (!(s.inj.target() == s.surj.source())) {
        report.exact = false;
        report.failures.push_back("middle modules do not match");
        return report;
    }
    const A1Module& a = s.inj.source();
    const A1Module& b = s.inj.target();
    const A1Module& c = s.surj.target();

    std::set<int> degrees;
    for (const auto& [d, n] : a.dims())
        (void)n, degrees.insert(d);
    for (const auto& [d, n] : b.dims())
        (void)n, degrees.insert(d);
    for (const auto& [d, n] : c.dims())
        (void)n, degrees.insert(d);

    for (int d : degrees) {
        GF2Matrix fd = s.inj.block(d);
        GF2Matrix gd = s.surj.block(d);
        if (rank(fd) != static_cast<std::size_t>(a.dim(d))) {
            report.exact = false;
            report.failures.push_back("degree " + std::to_string(d) + ": injection has kernel");
        }
        if (rank(gd) != static_cast<std::size_t>(c.dim(d))) {
            report.exact = false;
            report.failures.push_back("degree " + std::to_string(d) +
                                      ": surjection has cokernel");
        }
        if (!same_row_space(fd.transposed(), kernel_basis(gd))) {
            report.exact = false;
            report.failures.push_back("degree " + std::to_string(d) + ": image != kernel");
        }
    }
    return report;
}

std::vector<std::pair<ModuleMorphism, ModuleMorphism>> find_exact_pairs(const A1Module& a,
                                                                        const A1Module& b,
                                                                        const A1Module& c) {
    std::vector<ModuleMorphism> hom_ab = hom_basis(a, b);
    std::vector<ModuleMorphism> hom_bc = hom_basis(b, c);
    if (hom_ab.size() + hom_bc.size() > 20)
        throw SearchGuardError("find_exact_pairs: search space too large (" +
                               std::to_string(hom_ab.size()) + " + " +
                               std::to_string(hom_bc.size()) + " Hom dimensions)");

    std::vector<std::pair<ModuleMorphism, ModuleMorphism>> out;
    // quick dimension obstruction
    for (const auto& [d, n] : b.dims())
        if (a.dim(d) + c.dim(d) != n)
            return out;
    for (const auto& [d, n] : a.dims())
        if (b.dim(d) < n)
            return out;
    for (const auto& [d, n] : c.dims())
        if (b.dim(d) < n)
            return out;

    unsigned f_count = 1u << hom_ab.size();
    unsigned g_count = 1u << hom_bc.size();
    for (unsigned fm = 0; fm < f_count; ++fm) {
        ModuleMorphism f = hom_ab.empty() ? ModuleMorphism::zero(a, b) : combine(hom_ab, fm);
        // injectivity prefilter before looping over g
        bool injective = true;
        for (const auto& [d, n] : a.dims())
            if (rank(f.block(d)) != static_cast<std::size_t>(n)) {
                injective = false;
                break;
            }
        if (!injective)
            continue;
        for (unsigned gm = 0; gm < g_count; ++gm) {
            ModuleMorphism g = hom_bc.empty() ? ModuleMorphism::zero(b, c) : combine(hom_bc, gm);
            if (is_short_exact({f, g}).exact)
                out.emplace_back(f, g);
        }
        if (hom_ab.empty())
            break;
    }
    return out;
}

std::optional<ModuleMorphism> is_isomorphic(const A1Module& a, const A1Module& b) {
    if (!(a.dims() == b.dims()))
        return std::nullopt;
    if (a.is_zero_module())
        return ModuleMorphism::zero(a, b);
    std::vector<ModuleMorphism> basis = hom_basis(a, b);
    if (basis.size() > 20)
        throw SearchGuardError("is_isomorphic: search space too large (" +
                               std::to_string(basis.size()) + " Hom dimensions)");
    unsigned count = 1u << basis.size();
    for (unsigned mask = 1; mask < count; ++mask) {
        ModuleMorphism f = combine(basis, mask);
        bool invertible = true;
        for (const auto& [d, n] : a.dims())
            if (rank(f.block(d)) != static_cast<std::size_t>(n)) {
                invertible = false;
                break;
            }
        if (invertible)
            return f;
    }
    return std::nullopt;
}

}  // namespace a1kit
