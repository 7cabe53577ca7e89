// Copyright 2026 The qtwoblock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QTWOBLOCK_QTWOBLOCK_HPP
#define QTWOBLOCK_QTWOBLOCK_HPP

#include "qtwoblock/classify.hpp"
#include "qtwoblock/commands.hpp"
#include "qtwoblock/distance.hpp"
#include "qtwoblock/error.hpp"
#include "qtwoblock/finite_group.hpp"
#include "qtwoblock/fq_algebra.hpp"
#include "qtwoblock/fq_linalg.hpp"
#include "qtwoblock/group_algebra.hpp"
#include "qtwoblock/spec_file.hpp"
#include "qtwoblock/two_block_code.hpp"

#endif
