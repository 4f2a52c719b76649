#ifndef ISOTAU_TEST_HELPERS_HPP
#define ISOTAU_TEST_HELPERS_HPP

#include <optional>
#include <random>

#include "isotau/pii_stokes.hpp"
#include "isotau/pvi_monodromy.hpp"

namespace isotau::testing {

inline std::mt19937& test_rng() {
    static std::mt19937 rng(987654321);
    return rng;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(test_rng());
}

inline Complex random_complex(double re_scale, double im_scale) {
    return {uniform(-re_scale, re_scale), uniform(-im_scale, im_scale)};
}

// a random monodromy satisfying all genericity constraints, including those
// of the crossed chart (resampled until everything holds)
inline pvi::PVIMonodromy random_generic_monodromy(double im_scale = 0.05) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        try {
            pvi::ThetaData th{
                Complex(uniform(0.05, 0.35), uniform(-im_scale, im_scale)),
                Complex(uniform(0.05, 0.35), uniform(-im_scale, im_scale)),
                Complex(uniform(0.05, 0.35), uniform(-im_scale, im_scale)),
                Complex(uniform(0.05, 0.35), uniform(-im_scale, im_scale))};
            Complex sg(uniform(0.06, 0.42), uniform(-im_scale, im_scale));
            Complex eta(uniform(-1.5, 1.5), uniform(-0.3, 0.3));
            pvi::PVIMonodromy m(th, sg, eta, 1e-3);
            (void)pvi::crossing(m, 1e-3);   // require the crossed chart generic too
            return m;
        } catch (const IsotauError&) {
            continue;
        }
    }
    throw GenericityError("random_generic_monodromy: sampling failed");
}

inline pii::PIIStokes random_generic_stokes() {
    for (int attempt = 0; attempt < 200; ++attempt) {
        try {
            pii::PIIStokes s = pii::PIIStokes::from_s1s2(
                random_complex(0.25, 0.25),
                Complex(uniform(-0.25, 0.25),
                        uniform(0.05, 0.4) * (uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0)));
            pii::require_generic(s);
            (void)pii::exponents_from_stokes(s);
            return s;
        } catch (const IsotauError&) {
            continue;
        }
    }
    throw GenericityError("random_generic_stokes: sampling failed");
}

} // namespace isotau::testing

#endif
