/*
 *   Copyright 2026 The heisrb Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HEISRB_JSON_IO_HPP
#define HEISRB_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "heisrb/heisenberg.hpp"
#include "heisrb/rbo_algebra.hpp"
#include "heisrb/rbo_group.hpp"
#include "heisrb/semidirect.hpp"

// JSON encodings. Scalars are canonical strings; readers also take integer
// numbers. Malformed input raises InputError, bad scalar text ParseError.
namespace heisrb::io {

using nlohmann::json;

json encode(const Scalar &s);
json encode(const GaussianRational &s);
json encode(const AlgebraElement &x);
json encode(const GroupElement &g);
json encode(const OperatorMatrix &R);
json encode(const FamilyTag &tag);
json encode(const AlgebraAutomorphism &psi);
json encode(const SemiAlgebraElement &u);
json encode(const SemiGroupElement &u);
json encode(const JordanForm &j);
json encode(const Classification &c);
json encode(const TransferReport &report);

Scalar decode_scalar(const json &j);
AlgebraElement decode_algebra(const json &j);
GroupElement decode_group(const json &j);
/// {"r": [[...],[...],[...]]}, a bare 3x3 array, or a family tag object.
OperatorMatrix decode_operator(const json &j);
FamilyTag decode_family(const json &j);
/// {"m": [[m11,m12,m13],[m21,m22,m23]]} or the bare 2x3 array.
AlgebraAutomorphism decode_automorphism(const json &j);
SemiAlgebraElement decode_semi_algebra(const json &j);
SemiGroupElement decode_semi_group(const json &j);

/// nlohmann::json::parse with InputError on malformed text.
json parse(const std::string &text);

} // namespace heisrb::io

#endif
