// Copyright 2026 The Modality Toolkit Authors.
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

#include "modality/baseline.hpp"
#include "modality/chunking.hpp"
#include "modality/conll.hpp"
#include "modality/corpus.hpp"
#include "modality/error.hpp"
#include "modality/eval.hpp"
#include "modality/pipeline.hpp"
#include "modality/schemes.hpp"
#include "modality/splits.hpp"
#include "modality/stats.hpp"
#include "modality/tags.hpp"
#include "modality/taxonomy.hpp"
