// Copyright 2026 The MUB Shadow Authors
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

#ifndef MUBSHADOW_SHADOW_IO_HPP
#define MUBSHADOW_SHADOW_IO_HPP

#include <filesystem>
#include <iosfwd>

#include "mubshadow/observable.hpp"
#include "mubshadow/shadow.hpp"

namespace mubshadow {

// Shadow files are JSON lines. Line 1 is the header
//   {"N":100,"ensemble":"mub","n":3,"seed":7,"state":"ghz"}
// and each further line is one record {"b":"011","j":5}, bitstring
// most-significant qubit first. For Clifford shadows "j" is the element seed.

void write_shadow(std::ostream& out, const ShadowSet& shadow);
/// Throws std::runtime_error with the offending line number on malformed input.
ShadowSet read_shadow(std::istream& in);

void save_shadow(const std::filesystem::path& path, const ShadowSet& shadow);
ShadowSet load_shadow(const std::filesystem::path& path);

/// 2^n lines of `re im` in lexicographic basis order; normalized on load.
Observable load_projector_observable(const std::filesystem::path& path, unsigned n);
/// 2^n lines, each holding 2^n `re im` pairs of one matrix row.
Observable load_dense_observable(const std::filesystem::path& path, unsigned n);

}  // namespace mubshadow

#endif
