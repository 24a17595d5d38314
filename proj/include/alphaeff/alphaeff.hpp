/*
 * Copyright 2026 The alphaeff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Everything except alphaeff/fetch.hpp, which pulls in cpp-httplib and
// OpenSSL and is included separately.

#pragma once

#include "alphaeff/amdahl.hpp"
#include "alphaeff/csv.hpp"
#include "alphaeff/error.hpp"
#include "alphaeff/ingest.hpp"
#include "alphaeff/regression.hpp"
#include "alphaeff/svg.hpp"
#include "alphaeff/synth.hpp"
#include "alphaeff/timeline.hpp"
