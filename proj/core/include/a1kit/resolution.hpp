#pragma once

#include <map>
#include <utility>
#include <vector>

#include "a1kit/morphism.hpp"

namespace a1kit {

/// One stage of a free resolution: a free module described by its generator
/// degrees, together with the differential into the previous stage (into the
/// resolved module for stage 0).
struct ResolutionStage {
    std::vector<int> gen_degrees;  // ascending
    ModuleMorphism differential;
};

/// Minimal free resolution of a module, built stage by stage up to the given
/// filtration and internal-degree bounds. Minimality means every differential
/// lands in augmentation-ideal multiples of the generators, so the generator
/// counts read off Ext directly.
struct Resolution {
    A1Module target;
    std::vector<ResolutionStage> stages;
    int max_s = 0;
    int max_t = 0;
};

Resolution minimal_resolution(const A1Module& m, int max_s, int max_t);

/// Bigraded dimension table for Ext^{s,t}(M, F2). Counts are only recorded in
/// the reliable window t <= reliable_max_t = max_t - 6 (6 being the top
/// degree of A(1)); outside it, generator counts could be affected by kernel
/// classes above the computation cutoff.
struct ExtChart {
    std::map<std::pair<int, int>, int> counts;  // (s, t) -> dimension
    int max_s = 0;
    int max_t = 0;
    int reliable_max_t = 0;

    int at(int s, int t) const {
        auto it = counts.find({s, t});
        return it == counts.end() ? 0 : it->second;
    }
    bool reliable(int s, int t) const { return s <= max_s && t <= reliable_max_t; }
};

/// Generator-count table of a minimal resolution, restricted to the reliable
/// window.
ExtChart ext_chart(const Resolution& r);

/// True if the two charts agree at every (s, t) with s <= max_s and
/// t <= max_t (both must be reliable there).
bool charts_agree(const ExtChart& a, const ExtChart& b, int max_s, int max_t);

}  // namespace a1kit
