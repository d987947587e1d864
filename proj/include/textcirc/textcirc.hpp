// Copyright 2026 The textcirc Authors
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

/**
 * @file textcirc.hpp
 *
 * Umbrella header: English/Urdu hybrid-grammar texts, their compilation to
 * text circuits, translation, generation and file formats.
 */
#pragma once

#include "textcirc/circuit.hpp"
#include "textcirc/circuit_io.hpp"
#include "textcirc/error.hpp"
#include "textcirc/fixture.hpp"
#include "textcirc/generate.hpp"
#include "textcirc/grammar.hpp"
#include "textcirc/hybrid.hpp"
#include "textcirc/lexicon.hpp"
#include "textcirc/lexicon_io.hpp"
#include "textcirc/render.hpp"
#include "textcirc/text_circuit.hpp"
#include "textcirc/text_diagram.hpp"
#include "textcirc/tree_io.hpp"
#include "textcirc/xlang.hpp"
