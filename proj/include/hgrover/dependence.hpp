#pragma once

#include <string_view>

#include "hgrover/schedule.hpp"

namespace hgrover {

/// Straight lines through (pi, pi) along which the phase plane is cut.
/// PhiEqPi sweeps omega; all others sweep phi.
enum class Dependence { OmegaEqPhi, OmegaEqTwoPiMinusPhi, OmegaEqPi, PhiEqPi };

inline constexpr Dependence kAllDependences[] = {
    Dependence::OmegaEqPhi, Dependence::OmegaEqTwoPiMinusPhi, Dependence::OmegaEqPi,
    Dependence::PhiEqPi};

/// (phi, omega) on the line for sweep value x in [0, 2pi].
PhasePair phases_on_line(Dependence dep, double x);

std::string_view to_string(Dependence dep);
/// omega-eq-phi, omega-eq-2pi-minus-phi, omega-eq-pi, phi-eq-pi.
Dependence parse_dependence(std::string_view name);

}  // namespace hgrover
