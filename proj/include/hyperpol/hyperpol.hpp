// Copyright 2026 hyperpol developers
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

#pragma once

/// Umbrella header pulling in the whole core library: exact two-outcome
/// transform algebra, regime classification and phase extraction, the
/// phase-parameterized procedure families, and the finite-ensemble
/// simulation / convergence machinery.  The command-line front end under
/// hyperpol/cli/ is deliberately not included here.

#include "hyperpol/convergence.hpp"
#include "hyperpol/deviation.hpp"
#include "hyperpol/ensemble.hpp"
#include "hyperpol/errors.hpp"
#include "hyperpol/phase.hpp"
#include "hyperpol/prob_pair.hpp"
#include "hyperpol/profile.hpp"
#include "hyperpol/regime.hpp"
#include "hyperpol/rng.hpp"
#include "hyperpol/transform.hpp"
