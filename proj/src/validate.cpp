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

#include <cmath>

#include "mtc/engine.hpp"
#include "mtc/linalg.hpp"

namespace mtc {

namespace {

Mat s_matrix(const Engine& e) {
  const int r = e.rank();
  Mat s(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Obj a = e.simple(i), b = e.simple(j);
      s(i, j) = e.trace(e.compose(e.braid(b, a), e.braid(a, b)));
    }
  return s;
}

cplx global_dim(const std::vector<cplx>& dims) {
  cplx d = 0;
  for (auto x : dims) d += x * x;
  return d;
}

}  // namespace

ValidationReport validate_category(const CatPtr& cp) {
  const Category& c = *cp;
  const int r = c.rank;
  const double tol = c.tolerance;
  ValidationReport rep;
  auto add = [&](const std::string& name, double res) {
    rep.entries.push_back({name, res, res < tol});
  };

  double fu = 0, df = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      fu += std::abs(c.n(0, i, j) - (i == j)) + std::abs(c.n(i, 0, j) - (i == j));
      df += std::abs(c.n(i, j, 0) - (j == c.dual[i]));
    }
  add("fusion-unit", fu);
  add("fusion-dual", df);
  add("theta-unit", std::abs(c.theta[0] - 1.0));
  if (fu > 0 || df > 0) return rep;

  std::unique_ptr<Engine> ep;
  try {
    ep = std::make_unique<Engine>(cp);
  } catch (const std::exception&) {
    add("zigzag", INFINITY);
    return rep;
  }
  const Engine& e = *ep;
  std::vector<Obj> U;
  for (int i = 0; i < r; ++i) U.push_back(e.simple(i));

  double pent = 0, tri = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Mor a = e.assoc(U[i], U[0], U[j]);
      tri = std::max(tri, norm_max(a - e.reassociate(a.src, a.tgt)));
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          const Obj &x = U[i], &y = U[j], &z = U[k], &w = U[l];
          Mor lhs = e.compose(e.assoc(e.tensor(x, y), z, w),
                              e.assoc(x, y, e.tensor(z, w)));
          Mor rhs = e.compose({e.tensor(e.assoc(x, y, z), e.id(w)),
                               e.assoc(x, e.tensor(y, z), w),
                               e.tensor(e.id(x), e.assoc(y, z, w))});
          pent = std::max(pent, norm_max(lhs - rhs));
        }
    }
  add("pentagon", pent);
  add("triangle", tri);

  double hex1 = 0, hex2 = 0, rib = 0, binv = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Obj &x = U[i], &y = U[j];
      rib = std::max(rib, e.diff(e.twist(e.tensor(x, y)),
                                 e.compose({e.braid(y, x), e.braid(x, y),
                                            e.tensor(e.twist(x), e.twist(y))})));
      binv = std::max(binv, e.diff(e.compose(e.braid_inv(x, y), e.braid(x, y)),
                                   e.id(e.tensor(x, y))));
      for (int k = 0; k < r; ++k) {
        const Obj& z = U[k];
        Mor l1 = e.braid(x, e.tensor(y, z));
        Mor r1 = e.compose(e.tensor(e.id(y), e.braid(x, z)),
                           e.tensor(e.braid(x, y), e.id(z)));
        hex1 = std::max(hex1, e.diff(l1, r1));
        Mor l2 = e.braid(e.tensor(x, y), z);
        Mor r2 = e.compose(e.tensor(e.braid(x, z), e.id(y)),
                           e.tensor(e.id(x), e.braid(y, z)));
        hex2 = std::max(hex2, e.diff(l2, r2));
      }
    }
  add("hexagon", std::max(hex1, hex2));
  add("ribbon", rib);
  add("braid-inverse", binv);

  double zz = 0, dimres = 0;
  for (int i = 0; i < r; ++i) {
    const Obj& u = U[i];
    Obj ud = e.dual(u);
    zz = std::max(zz, e.diff(e.compose(e.tensor(e.id(u), e.ev(u)),
                                       e.tensor(e.coev(u), e.id(u))),
                             e.id(u)));
    zz = std::max(zz, e.diff(e.compose(e.tensor(e.ev(u), e.id(ud)),
                                       e.tensor(e.id(ud), e.coev(u))),
                             e.id(ud)));
    zz = std::max(zz, e.diff(e.compose(e.tensor(e.ev_r(u), e.id(u)),
                                       e.tensor(e.id(u), e.coev_r(u))),
                             e.id(u)));
    zz = std::max(zz, e.diff(e.compose(e.tensor(e.id(ud), e.ev_r(u)),
                                       e.tensor(e.coev_r(u), e.id(ud))),
                             e.id(ud)));
    cplx dl = e.compose(e.ev(u), e.coev_r(u)).blk[0](0, 0);
    cplx dr = e.compose(e.ev_r(u), e.coev(u)).blk[0](0, 0);
    dimres = std::max(dimres, std::abs(dl - dr));
    if (c.dims_hint)
      dimres = std::max(dimres, std::abs(dl - (*c.dims_hint)[i]));
  }
  add("zigzag", zz);
  add("dimension", dimres);

  Mat s = s_matrix(e);
  cplx D = global_dim(e.dims());
  Mat C = Mat::Zero(r, r);
  for (int i = 0; i < r; ++i) C(i, c.dual[i]) = D;
  double sres = max_abs(s * s - C);
  if (std::abs(D) < tol) sres = INFINITY;
  add("s-invertibility", sres);
  if (c.s_hint) add("s-crosscheck", max_abs(s - *c.s_hint));
  return rep;
}

DerivedData derive(const CatPtr& cp) {
  Engine e(cp);
  DerivedData d;
  d.dims = e.dims();
  d.globalDim = global_dim(d.dims);
  d.sqrtDim = std::sqrt(d.globalDim);
  d.s = s_matrix(e);
  Eigen::FullPivLU<Mat> lu(d.s);
  if (!lu.isInvertible())
    throw InputError("s-matrix is singular: category is not modular");
  d.S = d.s / d.sqrtDim;
  return d;
}

}  // namespace mtc
