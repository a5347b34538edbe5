/******************************************************************************
 * Copyright 2026 The wfac Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#ifndef WFAC_WFAC_HPP
#define WFAC_WFAC_HPP

#include "wfac/bounds.hpp"
#include "wfac/constants.hpp"
#include "wfac/grid_oracle.hpp"
#include "wfac/primary_factor.hpp"
#include "wfac/special_functions.hpp"
#include "wfac/tables.hpp"
#include "wfac/verify.hpp"

#endif  // WFAC_WFAC_HPP
