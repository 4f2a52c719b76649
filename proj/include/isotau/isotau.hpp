#ifndef ISOTAU_ISOTAU_HPP
#define ISOTAU_ISOTAU_HPP

// Isomonodromic tau-function connection constants for Painleve VI and
// Painleve II: closed-form evaluation and independent ODE verification.

#include "isotau/complex_util.hpp"
#include "isotau/errors.hpp"
#include "isotau/mat2.hpp"
#include "isotau/ode.hpp"
#include "isotau/pii_asymptotics.hpp"
#include "isotau/pii_dynamics.hpp"
#include "isotau/pii_stokes.hpp"
#include "isotau/pii_tau.hpp"
#include "isotau/pvi_monodromy.hpp"
#include "isotau/pvi_parametrix.hpp"
#include "isotau/pvi_schlesinger.hpp"
#include "isotau/pvi_tau.hpp"
#include "isotau/specfun.hpp"

#endif
