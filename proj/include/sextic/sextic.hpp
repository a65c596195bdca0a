/*
   Copyright 2026 The sextic-strata Authors

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

#ifndef SEXTIC_SEXTIC_HPP
#define SEXTIC_SEXTIC_HPP

#include "cohomology.hpp"
#include "dimensions.hpp"
#include "error.hpp"
#include "field.hpp"
#include "form.hpp"
#include "form_algebra.hpp"
#include "group_action.hpp"
#include "io.hpp"
#include "kronecker.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "orbit_oracle.hpp"
#include "polarization.hpp"
#include "poly_matrix.hpp"
#include "presentation.hpp"
#include "random.hpp"
#include "sampler.hpp"
#include "strata.hpp"
#include "verify.hpp"

#endif
