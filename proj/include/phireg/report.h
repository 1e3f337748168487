// Copyright 2026 The phireg Authors.
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

#ifndef PHIREG_REPORT_H_
#define PHIREG_REPORT_H_

#include <iosfwd>
#include <string>

#include "phireg/dynamics.h"

namespace phireg {

inline constexpr const char* kCsvHeader =
    "t,player,trigger_regret,external_regret,avg_regret";

// One row per (checkpoint, player), players numbered from 0, floats printed
// with 12 significant digits.
void EmitCsv(const DynamicsLog& log, std::ostream& out);

// Config echo, per-player final regrets, equilibrium gap and wall-clock time.
void EmitSummary(const DynamicsLog& log, std::ostream& out);

// "%.12g".
std::string FormatDouble(double v);

}  // namespace phireg

#endif  // PHIREG_REPORT_H_
