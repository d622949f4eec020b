#include "a1kit/invariants.hpp"

namespace a1kit {

GF2Matrix margolis_differential(const A1Module& m, MargolisOp which, int d) {
    if (which == MargolisOp::Q0)
        return m.sq1(d);
    return m.sq1(d + 2) * m.sq2(d) + m.sq2(d + 1) * m.sq1(d);
}

GradedDims margolis_homology(const A1Module& m, MargolisOp which) {
    GradedDims out;
    if (m.is_zero_module())
        return out;
    int step = (which == MargolisOp::Q0) ? 1 : 3;
    int lo = m.min_degree(), hi = m.max_degree();
    for (int d = lo; d <= hi; ++d) {
        if (m.dim(d) == 0)
            continue;
        GF2Matrix out_map = margolis_differential(m, which, d);
        GF2Matrix in_map = margolis_differential(m, which, d - step);
        std::size_t cycles = static_cast<std::size_t>(m.dim(d)) - rank(out_map);
        std::size_t boundaries = rank(in_map);
        if (cycles > boundaries)
            out[d] = static_cast<int>(cycles - boundaries);
    }
    return out;
}

GradedDims poincare_series(const A1Module& m) {
    GradedDims out;
    for (const auto& [d, n] : m.dims())
        if (n > 0)
            out[d] = n;
    return out;
}

int euler_characteristic(const A1Module& m) {
    int chi = 0;
    for (const auto& [d, n] : m.dims())
        chi += (d % 2 == 0) ? n : -n;
    return chi;
}

}  // namespace a1kit
