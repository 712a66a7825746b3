#pragma once

#include <random>
#include <vector>

#include "wgqed/model.hpp"
#include "wgqed/types.hpp"

namespace wgqed::testing {

inline EmitterArray pair_array(double d, double gamma_wg, double gamma_free,
                               double detuning1 = 0.0, double detuning2 = 0.0,
                               double z1 = 0.0) {
    return EmitterArray({{z1, gamma_wg, gamma_free, detuning1},
                         {z1 + d, gamma_wg, gamma_free, detuning2}});
}

inline EmitterArray chain_array(std::size_t n, double spacing, double gamma_wg,
                                double gamma_free) {
    std::vector<Emitter> es;
    for (std::size_t i = 0; i < n; ++i)
        es.push_back({spacing * double(i), gamma_wg, gamma_free, 0.0});
    return EmitterArray(std::move(es));
}

inline EmitterArray random_array(std::mt19937& rng, std::size_t max_n,
                                 bool lossless) {
    std::uniform_int_distribution<std::size_t> nd(1, max_n);
    std::uniform_real_distribution<double> zd(0.0, 2.0);
    std::uniform_real_distribution<double> gd(0.5, 3.0);
    std::uniform_real_distribution<double> fd(0.01, 2.0);
    std::uniform_real_distribution<double> dd(-2.0, 2.0);
    const std::size_t n = nd(rng);
    std::vector<Emitter> es;
    while (true) {
        es.clear();
        std::vector<double> zs;
        for (std::size_t i = 0; i < n; ++i) zs.push_back(zd(rng));
        std::sort(zs.begin(), zs.end());
        bool ok = true;
        for (std::size_t i = 1; i < n; ++i)
            if (zs[i] - zs[i - 1] < 1e-3) ok = false;
        if (!ok) continue;
        for (std::size_t i = 0; i < n; ++i)
            es.push_back({zs[i], gd(rng), lossless ? 0.0 : fd(rng), dd(rng)});
        break;
    }
    return EmitterArray(std::move(es));
}

}  // namespace wgqed::testing
