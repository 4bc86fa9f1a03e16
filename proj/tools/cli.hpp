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

#include <ostream>

namespace singular_sos::cli {

/// Runs one command line. JSON (or problem text) goes to `out`, errors to `err`.
/// Returns 0 on success, 2 when advisories or warnings were raised, 1 on errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace singular_sos::cli
