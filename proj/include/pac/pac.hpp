// Umbrella header.
#pragma once

#include "pac/controller.hpp"
#include "pac/linalg.hpp"
#include "pac/metrics.hpp"
#include "pac/network.hpp"
#include "pac/pid.hpp"
#include "pac/plant.hpp"
#include "pac/presets.hpp"
#include "pac/scenario.hpp"
#include "pac/simulate.hpp"
#include "pac/sliding.hpp"
#include "pac/stats.hpp"
#include "pac/trajectory.hpp"
