/*
   Copyright 2026 The hyperaut Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HYPERAUT_HYPERAUT_HPP
#define HYPERAUT_HYPERAUT_HPP

#include "exactnum.hpp"
#include "numeric.hpp"
#include "polyalg.hpp"
#include "binform.hpp"
#include "invariants.hpp"
#include "registry.hpp"
#include "families.hpp"
#include "roots.hpp"
#include "symmetry.hpp"
#include "dihedral.hpp"
#include "classify.hpp"
#include "serialize.hpp"

#endif
