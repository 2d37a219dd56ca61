// SPDX-License-Identifier: Apache-2.0
#include "geomprob/closed_forms.hpp"

#include <cmath>

#include "geomprob/dilog.hpp"

namespace geomprob {

double p_contain(InteriorPoint x) {
    const double pi = std::numbers::pi;
    return 0.25 - 3.0 / (2.0 * pi * pi) * li2(x.r * x.r);
}

double chord_cdf(double r) {
    if (!(r >= 0.0 && r <= 1.0))
        throw std::domain_error("chord CDF argument must lie in [0, 1]");
    const double pi = std::numbers::pi;
    return 6.0 / (pi * pi) * li2(r * r);
}

double three_circle_probability() {
    const double pi = std::numbers::pi;
    const double ln2 = std::log(2.0);
    const double rt2 = std::sqrt(2.0);
    return 0.75 - 2.0 / (pi * pi)
                      * (0.375 * ln2 * ln2 + li2(-rt2) + 3.0 * li2(1.0 / rt2));
}

}  // namespace geomprob
