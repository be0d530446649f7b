// Copyright 2026 The passnet Authors
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

#ifndef PASSNET_PASSNET_HPP_
#define PASSNET_PASSNET_HPP_

#include "passnet/analysis.hpp"
#include "passnet/centrality.hpp"
#include "passnet/cohesion.hpp"
#include "passnet/geodesics.hpp"
#include "passnet/net_model.hpp"
#include "passnet/report.hpp"
#include "passnet/svg.hpp"

#endif  // PASSNET_PASSNET_HPP_
