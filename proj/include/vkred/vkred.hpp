// Copyright 2026 The vkred Authors
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

#include "vkred/approx.hpp"
#include "vkred/caps.hpp"
#include "vkred/csp.hpp"
#include "vkred/csp_chain.hpp"
#include "vkred/discretize.hpp"
#include "vkred/disperser.hpp"
#include "vkred/embedding.hpp"
#include "vkred/errors.hpp"
#include "vkred/generate.hpp"
#include "vkred/graph.hpp"
#include "vkred/io.hpp"
#include "vkred/knapsack.hpp"
#include "vkred/lp.hpp"
#include "vkred/numeric.hpp"
#include "vkred/rng.hpp"
#include "vkred/sat_reduction.hpp"
#include "vkred/verify.hpp"
#include "vkred/vk_reduction.hpp"
