#pragma once

#include "bandedge/dynamics.hpp"
#include "bandedge/errors.hpp"
#include "bandedge/exact.hpp"
#include "bandedge/lorentzian.hpp"
#include "bandedge/oracle.hpp"
#include "bandedge/quadrature.hpp"
#include "bandedge/quartic.hpp"
#include "bandedge/reservoir.hpp"
#include "bandedge/specfun.hpp"
#include "bandedge/types.hpp"
#include "bandedge/version.hpp"
