// Copyright 2026 The sigpoly Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SIGPOLY_SIGPOLY_HPP_
#define SIGPOLY_SIGPOLY_HPP_

#include "sigpoly/error.hpp"
#include "sigpoly/io.hpp"
#include "sigpoly/poly.hpp"
#include "sigpoly/polymap.hpp"
#include "sigpoly/rational.hpp"
#include "sigpoly/signature.hpp"
#include "sigpoly/tensor.hpp"
#include "sigpoly/word.hpp"
#include "sigpoly/zinbiel.hpp"

#endif  // SIGPOLY_SIGPOLY_HPP_
