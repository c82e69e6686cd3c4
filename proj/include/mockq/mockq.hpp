// Copyright 2026 The mockq Authors
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

#ifndef MOCKQ_MOCKQ_HPP
#define MOCKQ_MOCKQ_HPP

#include <mockq/complex.hpp>
#include <mockq/errors.hpp>
#include <mockq/mocktheta.hpp>
#include <mockq/mordell.hpp>
#include <mockq/numkernel.hpp>
#include <mockq/qexpand.hpp>
#include <mockq/real.hpp>
#include <mockq/verify.hpp>

#endif
