// Copyright 2026 The cvgkp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Walks one pass through the library: GKP synthesis, a Kerr plan, and a sampled circuit.

#include <cstdio>

#include "cvgkp/comb.hpp"
#include "cvgkp/kerrplan.hpp"
#include "cvgkp/sampler.hpp"

int main() {
    using namespace cvgkp;

    std::puts("m  sigma    dB     P_succ(eta=1e-4)  peaks");
    for (int m = 1; m <= 4; ++m) {
        const auto sq = comb::sigma_of_m(m);
        const auto syn = comb::synthesize_gkp(m, sq.sigma, 1e-4);
        std::printf("%d  %.4f  %5.2f  %.3e      %zu\n", m, sq.sigma, sq.squeezing_db, syn.success_prob,
                    syn.comb.terms.size());
    }

    const auto pl = kerr::plan(0.1);
    std::printf("\nKerr plan y=0.1: p=%d k=%d l=%d, %.0f elementary gates\n", pl.p, pl.k, pl.l, pl.total_count);

    const auto spec = sampler::draw_circuit(sampler::CircuitModel::random_cv(), 1, 6, 11);
    const auto dist = sampler::simulate_distribution(spec);
    const auto &md = dist.modes[0];
    std::printf("\nRandom circuit (%zu gates, %s path): bin masses above 1e-4\n", spec.gates.size(),
                sampler::path_name(dist.path));
    for (std::size_t i = 0; i < md.masses.size(); ++i) {
        if (md.masses[i] < 1e-4) continue;
        std::printf("  k=%+ld  %.4f\n", md.k_min + static_cast<long>(i), md.masses[i]);
    }
    std::printf("  tails %.2e / %.2e\n", md.underflow, md.overflow);
    return 0;
}
