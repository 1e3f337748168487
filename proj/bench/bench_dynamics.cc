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

// Times the serial reference loop against the OpenMP one and checks that
// both produce the same log.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "phireg/dynamics.h"
#include "phireg/games.h"

namespace {

double Seconds(const phireg::IndexedGame& game, phireg::DynamicsConfig config,
               phireg::DynamicsLog* log) {
  const auto start = std::chrono::steady_clock::now();
  *log = phireg::RunDynamics(game, config);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string spec = argc > 1 ? argv[1] : "kuhn:players=3,ranks=3";
  const int T = argc > 2 ? std::atoi(argv[2]) : 500;
  const phireg::IndexedGame game(phireg::LoadGame(spec));

  std::printf("game %s, T = %d, %d OpenMP threads\n", spec.c_str(), T,
              omp_get_max_threads());
  bool identical = true;
  for (auto alg : {phireg::Algorithm::kLrlOftrl, phireg::Algorithm::kCfrRm}) {
    phireg::DynamicsConfig config;
    config.algorithm = alg;
    config.T = T;
    config.record_history = false;
    phireg::DynamicsLog serial, parallel;
    config.policy = phireg::ExecPolicy::kSerial;
    const double ts = Seconds(game, config, &serial);
    config.policy = phireg::ExecPolicy::kParallel;
    const double tp = Seconds(game, config, &parallel);

    bool same = serial.records.size() == parallel.records.size();
    for (std::size_t k = 0; same && k < serial.records.size(); ++k) {
      same = serial.records[k].trigger_regret ==
                 parallel.records[k].trigger_regret &&
             serial.records[k].psi_regret == parallel.records[k].psi_regret;
    }
    identical = identical && same;
    std::printf("%-10s serial %8.3f s  parallel %8.3f s  speedup %5.2fx  %s\n",
                std::string(phireg::AlgorithmName(alg)).c_str(), ts, tp,
                ts / tp, same ? "identical" : "MISMATCH");
  }
  return identical ? 0 : 1;
}
