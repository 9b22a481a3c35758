// Copyright 2026 The qcool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header for the qcool library: simulation and verification of
// ground-state cooling through a single post-selected ancilla measurement.

#pragma once

#include "qcool/composite.hpp"
#include "qcool/condition.hpp"
#include "qcool/expm.hpp"
#include "qcool/integrator.hpp"
#include "qcool/jaynes_cummings.hpp"
#include "qcool/matrix.hpp"
#include "qcool/models.hpp"
#include "qcool/protocol.hpp"
#include "qcool/random.hpp"
#include "qcool/scan.hpp"
#include "qcool/selfcheck.hpp"
#include "qcool/su2.hpp"
