/*
 Copyright 2026 The singular-sos Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "singular_sos/bounds.hpp"
#include "singular_sos/driver.hpp"
#include "singular_sos/hyperbolic.hpp"
#include "singular_sos/relaxation.hpp"
#include "singular_sos/variety.hpp"

namespace singular_sos {

using Json = nlohmann::ordered_json;

/// Finite doubles as numbers; infinities as "+inf" / "-inf"; NaN as null.
Json number_json(double v);

Json to_json(const OrderResult& r);
Json to_json(const VerifyResult& v, const std::vector<std::string>& names);
Json to_json(const NodeRecord& rec);
Json to_json(const SolveReport& report);
Json to_json(const MinimizerResult& m);
Json to_json(const VarietyNode& node, const std::vector<std::string>& names);
Json to_json(const Decomposition& d, const std::vector<std::string>& names);
Json to_json(const KKTSystem& sys, const std::vector<std::string>& x_names);

/// xi and Gram entries as rational strings, Gram dense and row-major, basis monomials and
/// multipliers as polynomial strings over `names`.
Json certificate_json(const Certificate& cert, const std::vector<std::string>& names);
/// Inverse of certificate_json; the names fix the ring.
Certificate certificate_from_json(const Json& j, const std::vector<std::string>& names);

Json bounds_json(OrderCase c, const OrderParams& p);

}  // namespace singular_sos
