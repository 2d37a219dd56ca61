// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>

#include "geomprob/kernels.hpp"

namespace geomprob::kernels {

const KernelSet& active_kernels() {
    static const KernelSet& chosen = []() -> const KernelSet& {
        if (const char* env = std::getenv("GEOMPROB_FORCE_SCALAR");
            env && env[0] == '1')
            return scalar_kernels();
        if (const KernelSet* avx2 = avx2_kernels()) return *avx2;
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace geomprob::kernels
