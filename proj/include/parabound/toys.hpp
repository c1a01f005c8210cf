#pragma once

#include <string>
#include <utility>
#include <vector>

#include "parabound/model.hpp"

namespace parabound {

/// Four small two-variable instances with free variables, exercising erratic
/// objective profiles, infeasible robust counterparts and dual routes.
ParametricLP toy1();
ParametricLP toy2();
ParametricLP toy3();
ParametricLP toy4();

std::vector<std::pair<std::string, ParametricLP>> all_toys();

/// Render a ParametricLP as an MPS file (rows R1.., S1.., free columns X1..)
/// and the matching perturbation sidecar; used to ship the toys as on-disk
/// fixtures for the CLI.
std::string to_mps(const ParametricLP& p, const std::string& name);
std::string to_perturbation_json(const ParametricLP& p);

/// Write <name>.mps and <name>.json for every toy into dir.
void write_toy_fixtures(const std::string& dir);

}  // namespace parabound
