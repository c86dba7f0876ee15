// Copyright 2026 The rdp Authors.
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

#ifndef RDP_RDP_HPP_
#define RDP_RDP_HPP_

#include "rdp/analysis.hpp"
#include "rdp/beliefs.hpp"
#include "rdp/cost.hpp"
#include "rdp/dispersion.hpp"
#include "rdp/equilibrium.hpp"
#include "rdp/errors.hpp"
#include "rdp/io.hpp"
#include "rdp/market.hpp"
#include "rdp/numeric.hpp"
#include "rdp/paths.hpp"
#include "rdp/pricing.hpp"
#include "rdp/rationalizability.hpp"

#endif  // RDP_RDP_HPP_
