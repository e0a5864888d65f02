#ifndef QEDVAC_QEDVAC_HPP
#define QEDVAC_QEDVAC_HPP

// Umbrella header: the whole calculation library.

#include "qedvac/blackbody.hpp"
#include "qedvac/constants.hpp"
#include "qedvac/critical_fields.hpp"
#include "qedvac/errors.hpp"
#include "qedvac/particles.hpp"
#include "qedvac/quadrature.hpp"
#include "qedvac/root_finding.hpp"
#include "qedvac/running.hpp"
#include "qedvac/sweep.hpp"
#include "qedvac/units.hpp"
#include "qedvac/vacuum_model.hpp"

#endif  // QEDVAC_QEDVAC_HPP
