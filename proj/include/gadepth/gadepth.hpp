// Copyright 2026 The gadepth Authors
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

#include "gadepth/calibration.hpp"
#include "gadepth/circuit.hpp"
#include "gadepth/compare.hpp"
#include "gadepth/depth.hpp"
#include "gadepth/error.hpp"
#include "gadepth/format.hpp"
#include "gadepth/manifest.hpp"
#include "gadepth/parallel.hpp"
#include "gadepth/qasm.hpp"
#include "gadepth/report.hpp"
#include "gadepth/runtime.hpp"
#include "gadepth/stats.hpp"
