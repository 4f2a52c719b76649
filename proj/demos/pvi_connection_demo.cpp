// Evaluate the PVI connection constant for a sample monodromy and verify it
// against the Schlesinger flow at a modest matching point.
#include <cstdio>

#include "isotau/isotau.hpp"

int main() {
    using namespace isotau;
    pvi::PVIMonodromy m({{0.11, 0}, {0.17, 0}, {0.23, 0}, {0.31, 0}}, {0.13, 0}, {0.4, 0});

    const pvi::UpsilonResult closed = pvi::upsilon_pvi(m);
    std::printf("closed form:  Upsilon = %.12f %+.12fi\n",
                closed.upsilon.real(), closed.upsilon.imag());

    const pvi::UpsilonNumericResult num = pvi::upsilon_numeric(m, 1e-3, 1e-10);
    std::printf("Schlesinger:  Upsilon = %.12f %+.12fi  (rel err %.2e)\n",
                num.upsilonNumeric.real(), num.upsilonNumeric.imag(), num.relError);
    return 0;
}
