// Copyright 2026 The mtc-cardy Authors
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

#include <iosfwd>
#include <string>

#include "mtc/cardy.hpp"

namespace mtc {

/// Which category an algebra lives in.
enum class Space { kC, kCC };
const char* space_name(Space s);

struct NamedAlgebra {
  Space space = Space::kC;
  Algebra alg;
  std::string name;
};

/**
 * Algebra documents (JSON):
 *
 *   { "category": "<fixture or path>", "space": "C" | "CxC",
 *     "object": [mult per label],
 *     "m": [entry...], "eta": [...], "delta": [...], "eps": [...] }
 *
 * The object is the atom with labels ascending. In CxC the label of the
 * pair (i, j) is i * rank + j, and "object" may also be a rank x rank
 * matrix. An entry is
 *
 *   { "sector": k, "row": [[label, copy], ...], "col": [[label, copy], ...],
 *     "mu_row": 0, "mu_col": 0, "value": [re, im] }
 *
 * where rows index the target and columns the source: [] or [[0, 0]] is the
 * unit, [[a, x]] is copy x of U_a in A, and [[a, x], [b, y]] with mu is the
 * vertex mu of U_a (x) U_b -> U_k. Entries left out are zero.
 */
std::string algebra_category_ref(const std::string& text);
NamedAlgebra parse_algebra(const FunctorContext& ctx, const std::string& text);
std::string algebra_to_json(const FunctorContext& ctx, const NamedAlgebra& a,
                            const std::string& category_ref);
/// Same algebra on the atom with ascending labels.
Algebra canonical_form(const Engine& e, const Algebra& a);

/**
 * Built-in algebras. In C: unit, cx2, mat<n>, diag<n>, endo:<label>, zero.
 * In CxC: 1x1, R1, Z1, box:<C name>, emb:<C name> for (A x 1) (x) R(1),
 * Z:<C name> for the full centre. Names joined by '+' give direct sums.
 */
NamedAlgebra builtin_algebra(const FunctorContext& ctx,
                             const std::string& name);
/// A file path when it exists, otherwise a built-in name.
NamedAlgebra resolve_algebra(const FunctorContext& ctx,
                             const std::string& ref);
std::string read_text(const std::string& path);

/**
 * Triple documents (JSON):
 *
 *   { "category": ..., "op": <algebra ref or inline document>,
 *     "cl": <algebra ref, inline document or "full-centre">,
 *     "iota": "canonical" | "unit-map" | [entry...], "iota_scale": 1 }
 *
 * Relative paths resolve against the directory of the triple file. With
 * "canonical" iota is the embedding Z(op) -> R(op) and cl must be the full
 * centre. With "unit-map" iota is R(eta_op) and cl must live on R(1).
 * Entries of iota key both sides by [[label, copy]] of cl and R(op).
 */
std::string triple_category_ref(const std::string& path);
CardyTriple load_triple(const FunctorContext& ctx, const std::string& path);
std::string triple_to_json(const FunctorContext& ctx, const CardyTriple& t,
                           const std::string& category_ref);

/// Fixture name or category file, with an optional tolerance override.
CatPtr load_category(const std::string& ref, double tolerance = 0);

/// Human readable dump: source and target slots followed by dense blocks.
std::string dump_mor(const Engine& e, const Mor& f);

/// Fixed-precision formatting used by every report so that output is
/// byte-stable across runs.
std::string fmt_num(double x);
std::string fmt_cplx(cplx z);

}  // namespace mtc
