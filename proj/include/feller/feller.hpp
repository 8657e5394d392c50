// Copyright 2026 The Feller Lab Authors.
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

#ifndef FELLER_FELLER_HPP_
#define FELLER_FELLER_HPP_

#include "feller/examples.hpp"
#include "feller/fm.hpp"
#include "feller/io.hpp"
#include "feller/kernel.hpp"
#include "feller/lipapprox.hpp"
#include "feller/measure.hpp"
#include "feller/probe.hpp"
#include "feller/rational.hpp"
#include "feller/simplex.hpp"
#include "feller/space.hpp"
#include "feller/svc.hpp"

#endif  // FELLER_FELLER_HPP_
