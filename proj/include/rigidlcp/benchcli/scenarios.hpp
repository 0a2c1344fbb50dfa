/***************************************************************************
 * Copyright 2026 The rigidlcp Authors
 * This library is distributed under the terms of the Apache V2.0
 * License (obtainable from http://www.apache.org/licenses/LICENSE-2.0).
 ****************************************************************************/

#pragma once

#include <vector>

#include "rigidlcp/benchcli/config.hpp"
#include "rigidlcp/rigidsim/multibody.hpp"
#include "rigidlcp/rigidsim/stepper.hpp"

namespace rigidlcp::bench {

struct Scenario {
  MultibodySystem sys;
  // Bodies whose center-of-mass drift is reported.
  std::vector<int> tracked;
};

/// Scenes, all built from unit boxes (mass 1) and point particles:
///   grasp            two gripper boxes squeeze two boxes between them along x,
///                    no floor; 12 contacts before duplication
///   stack            two boxes stacked on the plane z = 0; 8 contacts
///   incline-slide    one box on a 30 degree incline
///   particle-impact  three particles hitting the plane at seeded velocities
///   scaling-sweep    the stack, meant to be run with a duplication factor
Scenario make_scenario(const ScenarioConfig& cfg);

/// Stepping options implied by the config.
StepOptions step_options(const ScenarioConfig& cfg);

/// LCP size the configured model builds at the scenario's current state.
Index lcp_size(const ScenarioConfig& cfg, const MultibodySystem& sys);

}  // namespace rigidlcp::bench
