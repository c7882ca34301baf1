// Copyright 2023 The Authors.
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

#ifndef WARDROP_EQUILIBRIA_VERIFY_H_
#define WARDROP_EQUILIBRIA_VERIFY_H_

#include "wardrop/core/deviation.h"
#include "wardrop/core/flow.h"
#include "wardrop/core/instance.h"
#include "wardrop/core/sensitivity.h"
#include "wardrop/core/tolerance.h"
#include "wardrop/equilibria/certificate.h"

namespace wardrop {

// A strategy counts as used by a class when its class flow exceeds tol.abs.

// l_P <= l_P' for every used P and every P' of the commodity.
EquilibriumCertificate VerifyNash(const GameInstance& instance,
                                  const Flow& flow, const Tolerance& tol = {});

// l_P <= (1 + eps_ij) l_P' with eps_ij read from the profile's
// sensitivities. Throws InputError when the profile's class layout differs
// from the flow's.
EquilibriumCertificate VerifyApproxNash(const GameInstance& instance,
                                        const Flow& flow,
                                        const SensitivityProfile& eps,
                                        const Tolerance& tol = {});
// Every class with the same eps.
EquilibriumCertificate VerifyApproxNash(const GameInstance& instance,
                                        const Flow& flow, double eps,
                                        const Tolerance& tol = {});

// l_P + gamma_ij delta_P <= l_P' + gamma_ij delta_P'. Throws InputError
// naming the offending path when the deviations are outside Delta(beta) at
// the flow.
EquilibriumCertificate VerifyDeviatedNash(const GameInstance& instance,
                                          const Flow& flow,
                                          const DeviationProfile& deviations,
                                          const SensitivityProfile& gamma,
                                          const Tolerance& tol = {});

// The approximate-equilibrium certificate with eps_ij = beta gamma_ij.
// Whenever the deviated certificate passes, this one passes too.
EquilibriumCertificate DeviatedAsApprox(const GameInstance& instance,
                                        const Flow& flow,
                                        const DeviationProfile& deviations,
                                        const SensitivityProfile& gamma,
                                        const Tolerance& tol = {});

// Deviations turning an eps-approximate flow of a single-commodity
// homogeneous population with sensitivity gamma > 0 into a beta-deviated
// flow with beta = eps / gamma. Used strategies get (l_max - l_P) / gamma,
// where l_max is the largest used latency; unused strategies Q get
// beta l_Q. Throws PreconditionError when the flow is not eps-approximate
// or the instance has several commodities.
DeviationProfile DeviationsFromApprox(const GameInstance& instance,
                                      const Flow& flow, double eps,
                                      double gamma = 1.0,
                                      const Tolerance& tol = {});

}  // namespace wardrop

#endif  // WARDROP_EQUILIBRIA_VERIFY_H_
