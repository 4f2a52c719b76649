// The PII connection coefficient for the default small Stokes data, closed
// form vs the tau integral along the real line.
#include <cstdio>

#include "isotau/isotau.hpp"

int main() {
    using namespace isotau;
    const pii::PIIStokes s = pii::PIIStokes::from_s1s2({0.0, 0.1}, {0.0, 0.2 / 1.01});

    const Complex closed = pii::upsilon_pii_closed(s);
    std::printf("closed form:  Upsilon = %.12f %+.12fi\n", closed.real(), closed.imag());

    const pii::UpsilonPIINumeric num = pii::upsilon_pii_numeric(s, 40.0, 1e-11);
    std::printf("tau integral: Upsilon = %.12f %+.12fi  (rel err %.2e)\n",
                num.upsilonNumeric.real(), num.upsilonNumeric.imag(), num.relError);

    const pii::HastingsMcLeodResult hm = pii::hastings_mcleod_check(12.0, 1e-12);
    std::printf("Hastings-McLeod: %.8f vs %.8f  (rel err %.2e)\n",
                hm.upsilonNumeric, hm.target, hm.relError);
    return 0;
}
