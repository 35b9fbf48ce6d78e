// Copyright 2026 The fable-cc developers
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

#include "fable/angles.hpp"
#include "fable/circuit.hpp"
#include "fable/compress.hpp"
#include "fable/encode.hpp"
#include "fable/errors.hpp"
#include "fable/linalg.hpp"
#include "fable/matrix_market.hpp"
#include "fable/models.hpp"
#include "fable/qasm.hpp"
#include "fable/report.hpp"
#include "fable/simulate.hpp"
