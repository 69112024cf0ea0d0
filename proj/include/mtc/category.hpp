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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtc {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One basis vector of a 3-leaf fusion space: intermediate label plus the two
// vertex multiplicity indices.
struct Tree3 {
  int mid, v1, v2;
};

/**
 * Skeletal data of a (modular) ribbon fusion category.
 *
 * F blocks are stored in the convention
 *   left tree (a b)_m c -> d  =  sum_n F[(m,a1,b1),(n,g,d1)] * right tree a (b c)_n -> d
 * with rows ordered by (m, alpha, beta) and columns by (n, gamma, delta).
 * R blocks map the (a,b) vertex to the (b,a) vertex: rows index N_ba^k,
 * columns N_ab^k.
 */
struct Category {
  std::string name;
  int rank = 0;
  std::vector<std::string> labels;
  std::vector<int> dual;
  std::vector<int> N;  // rank^3, N[(i*rank+j)*rank+k]
  std::vector<Mat> F;  // rank^4 blocks
  std::vector<Mat> R;  // rank^3 blocks
  std::vector<cplx> theta;
  double tolerance = 1e-9;
  std::optional<std::vector<cplx>> dims_hint;
  std::optional<Mat> s_hint;

  int n(int i, int j, int k) const { return N[(i * rank + j) * rank + k]; }
  size_t idx3(int i, int j, int k) const {
    return static_cast<size_t>((i * rank + j) * rank + k);
  }
  size_t idx4(int a, int b, int c, int d) const {
    return static_cast<size_t>(((a * rank + b) * rank + c) * rank + d);
  }
  const Mat& Fblock(int a, int b, int c, int d) const {
    return F[idx4(a, b, c, d)];
  }
  const Mat& Rblock(int a, int b, int k) const { return R[idx3(a, b, k)]; }

  std::vector<Tree3> left_basis(int a, int b, int c, int d) const;
  std::vector<Tree3> right_basis(int a, int b, int c, int d) const;
  int find_label(const std::string& name) const;

  // Associator blocks in the splitting basis: rows left-nested, cols
  // right-nested. Built by finalize() together with cached bases and inverse
  // braiding blocks.
  std::vector<Mat> assoc_fwd, assoc_bwd, Rinv;
  std::vector<std::vector<Tree3>> lbasis, rbasis;
  int left_pos(int a, int b, int c, int d, int m, int x, int y) const;
  int right_pos(int a, int b, int c, int d, int m, int x, int y) const;
  void finalize();
};

using CatPtr = std::shared_ptr<const Category>;

// Fixture registry: vec, vec_z2, vec_z2_symmetric, fibonacci, ising,
// ising-broken.
CatPtr fixture(const std::string& name);
std::vector<std::string> fixture_names();

// JSON category documents.
CatPtr load_category_json(const std::string& text);
CatPtr load_category_file(const std::string& path);
std::string category_to_json(const Category& cat);
/// Accepts a fixture name or a path; fixture names win when the path does not
/// exist.
CatPtr resolve_category(const std::string& name_or_path);

CatPtr reverse_category(const Category& cat);
CatPtr product_category(const Category& a, const Category& b);
/// C boxtimes reverse(C).
CatPtr doubled_category(const Category& cat);

struct CheckEntry {
  std::string name;
  double residual = 0;
  bool pass = true;
};

struct ValidationReport {
  std::vector<CheckEntry> entries;
  bool pass() const;
  double residual(const std::string& name) const;
};

ValidationReport validate_category(const CatPtr& cat);

struct DerivedData {
  std::vector<cplx> dims;
  cplx globalDim;
  cplx sqrtDim;
  Mat s;
  Mat S;
};

/// Throws InputError if s is not invertible.
DerivedData derive(const CatPtr& cat);

}  // namespace mtc
