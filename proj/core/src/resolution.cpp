#include "a1kit/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace a1kit {

namespace {

/// Minimal generators of M in internal degrees <= max_t, with the covering
/// map from the corresponding free module. Generators in degree t are chosen
/// one per basis vector of M_t modulo the span of (positive-degree action on
/// generators already chosen below t); the echelon complement fixes the
/// choice deterministically.
std::pair<std::vector<int>, ModuleMorphism> minimal_cover(const A1Module& m, int max_t) {
    std::vector<int> gen_degrees;
    std::vector<std::pair<int, GF2Vector>> gen_images;  // (degree, image in M)

    if (!m.is_zero_module()) {
        for (int t = m.min_degree(); t <= max_t; ++t) {
            std::size_t n = static_cast<std::size_t>(m.dim(t));
            if (n == 0)
                continue;
            RowSpace covered(n);
            for (const auto& [g_deg, g_img] : gen_images) {
                int e_deg = t - g_deg;
                if (e_deg <= 0 || e_deg > A1Algebra::kTopDegree)
                    continue;
                for (int idx : a1().basis_indices_in_degree(e_deg))
                    covered.insert(act_word(m, a1().basis_element(idx).word, g_deg, g_img));
            }
            for (std::size_t f : covered.free_coords()) {
                gen_degrees.push_back(t);
                gen_images.emplace_back(t, GF2Vector::unit(n, f));
            }
        }
    }

    A1Module free = free_module(gen_degrees);
    std::map<int, GF2Matrix> blocks;
    for (const auto& [d, k] : free.dims()) {
        (void)k;
        if (m.dim(d) == 0)
            continue;
        auto basis = free_basis_in_degree(gen_degrees, d);
        GF2Matrix mat(static_cast<std::size_t>(m.dim(d)), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto [g, e] = basis[j];
            GF2Vector col = act_word(m, a1().basis_element(e).word, gen_degrees[g],
                                     gen_images[g].second);
            for (std::size_t i = 0; i < col.size(); ++i)
                if (col.get(i))
                    mat.set(i, j, true);
        }
        blocks[d] = std::move(mat);
    }
    ModuleMorphism cover(std::move(free), m, std::move(blocks));
    return {std::move(gen_degrees), std::move(cover)};
}

}  // namespace

Resolution minimal_resolution(const A1Module& m, int max_s, int max_t) {
    if (max_s < 0)
        throw std::invalid_argument("minimal_resolution: max_s must be nonnegative");

    Resolution res;
    res.target = m;
    res.max_s = max_s;
    res.max_t = max_t;

    auto [gen0, d0] = minimal_cover(m, max_t);
    res.stages.push_back({std::move(gen0), d0});

    for (int s = 1; s <= max_s; ++s) {
        SubmoduleResult ker = kernel(res.stages.back().differential);
        if (ker.module.is_zero_module())
            break;  // free resolution terminated
        auto [gens, cover] = minimal_cover(ker.module, max_t);
        ModuleMorphism diff = compose(ker.embedding, cover);
        res.stages.push_back({std::move(gens), std::move(diff)});
        if (res.stages.back().gen_degrees.empty())
            break;  // nothing below the cutoff; later stages would be empty too
    }
    return res;
}

ExtChart ext_chart(const Resolution& r) {
    ExtChart chart;
    chart.max_s = r.max_s;
    chart.max_t = r.max_t;
    chart.reliable_max_t = r.max_t - A1Algebra::kTopDegree;
    for (std::size_t s = 0; s < r.stages.size(); ++s)
        for (int t : r.stages[s].gen_degrees)
            if (t <= chart.reliable_max_t)
                ++chart.counts[{static_cast<int>(s), t}];
    return chart;
}

bool charts_agree(const ExtChart& a, const ExtChart& b, int max_s, int max_t) {
    int lo = 0;
    for (const auto& chart : {a, b})
        for (const auto& [st, n] : chart.counts) {
            (void)n;
            if (st.first <= max_s)
                lo = std::min(lo, st.second);
        }
    for (int s = 0; s <= max_s; ++s)
        for (int t = lo; t <= max_t; ++t) {
            if (!a.reliable(s, t) || !b.reliable(s, t))
                return false;
            if (a.at(s, t) != b.at(s, t))
                return false;
        }
    return true;
}

}  // namespace a1kit
