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

#include "mtc/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace mtc {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

// Objects spread over lines, lists of entries one entry per line.
std::string pretty(const ojson& j, int depth = 0) {
  const std::string pad(static_cast<size_t>(depth + 1), ' ');
  const std::string end(static_cast<size_t>(depth), ' ');
  if (j.is_object()) {
    std::string s = "{\n";
    size_t n = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++n) {
      s += pad + ojson(it.key()).dump() + ": " + pretty(it.value(), depth + 1);
      s += n + 1 < j.size() ? ",\n" : "\n";
    }
    return s + end + "}";
  }
  if (j.is_array() && !j.empty() && j[0].is_object()) {
    std::string s = "[\n";
    for (size_t i = 0; i < j.size(); ++i)
      s += pad + j[i].dump() + (i + 1 < j.size() ? ",\n" : "\n");
    return s + end + "]";
  }
  return j.dump();
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

// Drops round-off noise; other values keep full precision.
double clean(double x) { return std::abs(x) < 1e-14 ? 0.0 : x; }

ojson write_value(cplx z) {
  return ojson::array({clean(z.real()), clean(z.imag())});
}

cplx read_value(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw InputError("complex value must be a number or [re, im]");
}

// [[label, copy], ...] for slot s; mu of the top vertex for tensors.
json slot_key(const Obj& x, int s, int* mu) {
  *mu = 0;
  if (!x->tensor) {
    if (x->is_unit()) return json::array();
    return json::array({json::array({x->labels[s], x->copy[s]})});
  }
  const auto& p = x->parts[s];
  int dummy = 0;
  json l = slot_key(x->left, p.l, &dummy);
  json r = slot_key(x->right, p.r, &dummy);
  for (auto& v : r) l.push_back(v);
  *mu = p.mu;
  return l;
}

bool key_equal(const json& a, const json& b) {
  auto norm = [](const json& k) {
    if (k.size() == 1 && k[0].is_array() && k[0].size() == 2 &&
        k[0][0] == 0 && k[0][1] == 0)
      return json::array();
    return k;
  };
  return norm(a) == norm(b);
}

int find_copy(const Obj& x, int k, const json& key, int mu, const char* side) {
  if (k < 0 || k >= static_cast<int>(x->slots.size()))
    throw InputError("sector out of range");
  for (int s : x->slots[k]) {
    int m = 0;
    json kk = slot_key(x, s, &m);
    if (m == mu && key_equal(kk, key)) return x->copy[s];
  }
  throw InputError(std::string("no ") + side + " basis vector " + key.dump() +
                   " in sector " + std::to_string(k));
}

Mor read_mor(const Engine& e, const json& entries, const Obj& src,
             const Obj& tgt) {
  Mor f = e.zero(src, tgt);
  if (!entries.is_array()) throw InputError("morphism must be a list");
  for (const auto& en : entries) {
    if (!en.is_object() || !en.contains("sector") || !en.contains("value"))
      throw InputError("entry needs 'sector' and 'value'");
    const int k = en["sector"].get<int>();
    json row = en.value("row", json::array());
    json col = en.value("col", json::array());
    int r = find_copy(tgt, k, row, en.value("mu_row", 0), "row");
    int c = find_copy(src, k, col, en.value("mu_col", 0), "column");
    f.blk[k](r, c) += read_value(en["value"]);
  }
  return f;
}

ojson write_mor(const Mor& f) {
  ojson out = ojson::array();
  for (size_t k = 0; k < f.blk.size(); ++k) {
    const Mat& b = f.blk[k];
    for (Eigen::Index r = 0; r < b.rows(); ++r)
      for (Eigen::Index c = 0; c < b.cols(); ++c) {
        cplx v = b(r, c);
        if (clean(v.real()) == 0 && clean(v.imag()) == 0) continue;
        int mr = 0, mc = 0;
        ojson en;
        en["sector"] = k;
        en["row"] = ojson::parse(slot_key(f.tgt, f.tgt->slots[k][r], &mr).dump());
        en["col"] = ojson::parse(slot_key(f.src, f.src->slots[k][c], &mc).dump());
        if (mr) en["mu_row"] = mr;
        if (mc) en["mu_col"] = mc;
        en["value"] = write_value(v);
        out.push_back(en);
      }
  }
  return out;
}

Obj sorted_atom(const Engine& e, const std::vector<int>& mult) {
  std::vector<int> labels;
  for (size_t k = 0; k < mult.size(); ++k)
    labels.insert(labels.end(), mult[k], static_cast<int>(k));
  return e.atom(labels);
}

const Engine& engine_of(const FunctorContext& ctx, Space s) {
  return s == Space::kC ? ctx.C() : ctx.P();
}

std::vector<int> read_object(const FunctorContext& ctx, Space s,
                             const json& j) {
  const int n = engine_of(ctx, s).rank();
  std::vector<int> mult;
  if (!j.is_array()) throw InputError("'object' must be a list");
  if (s == Space::kCC && !j.empty() && j[0].is_array()) {
    for (auto& row : j)
      for (auto& v : row) mult.push_back(v.get<int>());
  } else {
    for (auto& v : j) mult.push_back(v.get<int>());
  }
  if (static_cast<int>(mult.size()) != n)
    throw InputError("'object' has " + std::to_string(mult.size()) +
                     " entries, expected " + std::to_string(n));
  for (int v : mult)
    if (v < 0) throw InputError("negative multiplicity");
  return mult;
}

Algebra zero_algebra(const Engine& e) {
  Obj z = e.zero_obj();
  Obj zz = e.tensor(z, z);
  return make_algebra(e, z, e.zero(zz, z), e.zero(e.unit(), z),
                      e.zero(z, zz), e.zero(z, e.unit()));
}

int parse_count(const std::string& s, const std::string& name) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos == s.size() && v > 0) return v;
  } catch (...) {
  }
  throw InputError("bad size in built-in algebra '" + name + "'");
}

NamedAlgebra builtin_term(const FunctorContext& ctx, const std::string& t) {
  const Engine &C = ctx.C(), &P = ctx.P();
  auto in_c = [&](Algebra a) { return NamedAlgebra{Space::kC, std::move(a), t}; };
  auto in_cc = [&](Algebra a) { return NamedAlgebra{Space::kCC, std::move(a), t}; };
  auto sub_c = [&](const std::string& rest) {
    NamedAlgebra a = builtin_term(ctx, rest);
    if (a.space != Space::kC)
      throw InputError("'" + t + "' needs an algebra in C");
    return a.alg;
  };
  if (t == "unit" || t == "1") return in_c(unit_algebra(C));
  if (t == "zero") return in_c(zero_algebra(C));
  if (t == "cx2") return in_c(cx2_algebra(C));
  if (t.rfind("mat", 0) == 0) return in_c(matrix_algebra(C, parse_count(t.substr(3), t)));
  if (t.rfind("diag", 0) == 0) return in_c(diagonal_algebra(C, parse_count(t.substr(4), t)));
  if (t.rfind("endo:", 0) == 0) {
    int l = C.cat().find_label(t.substr(5));
    if (l < 0) throw InputError("unknown label in '" + t + "'");
    return in_c(endo_algebra(C, C.simple(l)));
  }
  if (t == "1x1") return in_cc(unit_algebra(P));
  if (t == "R1") return in_cc(transport_algebra(ctx, Functor::kR, unit_algebra(C)));
  if (t == "Z1") return in_cc(full_centre(ctx, unit_algebra(C)).alg);
  if (t.rfind("box:", 0) == 0) return in_cc(box_unit(ctx, sub_c(t.substr(4))));
  if (t.rfind("emb:", 0) == 0)
    return in_cc(tensor_algebra(P, box_unit(ctx, sub_c(t.substr(4))),
                                transport_algebra(ctx, Functor::kR, unit_algebra(C))));
  if (t.rfind("Z:", 0) == 0) return in_cc(full_centre(ctx, sub_c(t.substr(2))).alg);
  throw InputError("unknown algebra '" + t + "'");
}

std::string dir_of(const std::string& path) {
  return fs::path(path).parent_path().string();
}

NamedAlgebra algebra_from_json_or_ref(const FunctorContext& ctx, const json& j,
                                      const std::string& base) {
  if (j.is_object()) return parse_algebra(ctx, j.dump());
  if (!j.is_string()) throw InputError("algebra reference must be a string");
  std::string ref = j.get<std::string>();
  fs::path p = base.empty() ? fs::path(ref) : fs::path(base) / ref;
  if (fs::exists(p) && fs::is_regular_file(p)) {
    NamedAlgebra a = parse_algebra(ctx, read_text(p.string()));
    a.name = ref;
    return a;
  }
  return resolve_algebra(ctx, ref);
}

}  // namespace

const char* space_name(Space s) { return s == Space::kC ? "C" : "CxC"; }

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string algebra_category_ref(const std::string& text) {
  json doc = parse_json(text, "algebra document");
  if (!doc.is_object() || !doc.contains("category"))
    throw InputError("algebra document needs a 'category' field");
  return doc["category"].get<std::string>();
}

NamedAlgebra parse_algebra(const FunctorContext& ctx, const std::string& text) {
  json doc = parse_json(text, "algebra document");
  if (!doc.is_object()) throw InputError("algebra document must be an object");
  NamedAlgebra out;
  std::string sp = doc.value("space", std::string("C"));
  if (sp == "C") out.space = Space::kC;
  else if (sp == "CxC") out.space = Space::kCC;
  else throw InputError("'space' must be C or CxC");
  out.name = doc.value("name", std::string("algebra"));
  const Engine& e = engine_of(ctx, out.space);
  if (!doc.contains("object") || !doc.contains("m") || !doc.contains("eta"))
    throw InputError("algebra document needs 'object', 'm' and 'eta'");
  Obj x = sorted_atom(e, read_object(ctx, out.space, doc["object"]));
  Obj xx = e.tensor(x, x);
  Mor m = read_mor(e, doc["m"], xx, x);
  Mor eta = read_mor(e, doc["eta"], e.unit(), x);
  std::optional<Mor> delta, eps;
  if (doc.contains("delta") != doc.contains("eps"))
    throw InputError("'delta' and 'eps' must be given together");
  if (doc.contains("delta")) {
    delta = read_mor(e, doc["delta"], x, xx);
    eps = read_mor(e, doc["eps"], x, e.unit());
  }
  out.alg = make_algebra(e, x, m, eta, delta, eps);
  return out;
}

Algebra canonical_form(const Engine& e, const Algebra& a) {
  const Obj& x = a.obj;
  Obj s = sorted_atom(e, e.multiplicities(x));
  std::vector<int> map(s->size());
  for (int t = 0; t < s->size(); ++t)
    map[t] = x->slots[s->labels[t]][s->copy[t]];
  Mor E = e.embed(s, x, map);
  Mor Pj = e.project(x, s, map);
  Obj ss = e.tensor(s, s);
  Mor m = e.coerce(e.compose({Pj, a.m, e.tensor(E, E)}), ss, s);
  Mor eta = e.coerce(e.compose(Pj, a.eta), e.unit(), s);
  std::optional<Mor> delta, eps;
  if (a.has_coalgebra()) {
    delta = e.coerce(e.compose({e.tensor(Pj, Pj), *a.delta, E}), s, ss);
    eps = e.coerce(e.compose(*a.eps, E), s, e.unit());
  }
  return make_algebra(e, s, m, eta, delta, eps);
}

namespace {

ojson algebra_doc(const FunctorContext& ctx, const NamedAlgebra& a,
                  const std::string& category_ref) {
  const Engine& e = engine_of(ctx, a.space);
  Algebra c = canonical_form(e, a.alg);
  ojson doc;
  doc["category"] = category_ref;
  doc["space"] = space_name(a.space);
  doc["name"] = a.name;
  auto mult = e.multiplicities(c.obj);
  if (a.space == Space::kCC) {
    ojson rows = ojson::array();
    const int n = ctx.rank();
    for (int i = 0; i < n; ++i) {
      ojson row = ojson::array();
      for (int j = 0; j < n; ++j) row.push_back(mult[ctx.pair(i, j)]);
      rows.push_back(row);
    }
    doc["object"] = rows;
  } else {
    doc["object"] = mult;
  }
  doc["m"] = write_mor(c.m);
  doc["eta"] = write_mor(c.eta);
  if (c.has_coalgebra()) {
    doc["delta"] = write_mor(*c.delta);
    doc["eps"] = write_mor(*c.eps);
  }
  return doc;
}

}  // namespace

std::string algebra_to_json(const FunctorContext& ctx, const NamedAlgebra& a,
                            const std::string& category_ref) {
  return pretty(algebra_doc(ctx, a, category_ref)) + "\n";
}

NamedAlgebra builtin_algebra(const FunctorContext& ctx,
                             const std::string& name) {
  std::vector<std::string> terms;
  std::stringstream ss(name);
  std::string t;
  while (std::getline(ss, t, '+')) terms.push_back(t);
  if (terms.empty()) throw InputError("empty algebra name");
  NamedAlgebra out = builtin_term(ctx, terms[0]);
  for (size_t i = 1; i < terms.size(); ++i) {
    NamedAlgebra b = builtin_term(ctx, terms[i]);
    if (b.space != out.space)
      throw InputError("direct sum of algebras in different categories");
    out.alg = direct_sum(engine_of(ctx, out.space), out.alg, b.alg);
  }
  out.name = name;
  return out;
}

NamedAlgebra resolve_algebra(const FunctorContext& ctx,
                             const std::string& ref) {
  if (fs::exists(ref) && fs::is_regular_file(ref)) {
    NamedAlgebra a = parse_algebra(ctx, read_text(ref));
    return a;
  }
  return builtin_algebra(ctx, ref);
}

CatPtr load_category(const std::string& ref, double tolerance) {
  CatPtr c;
  if (!fs::exists(ref) && fs::exists(ref + ".json"))
    c = load_category_file(ref + ".json");
  else
    c = resolve_category(ref);
  if (tolerance > 0) {
    auto copy = std::make_shared<Category>(*c);
    copy->tolerance = tolerance;
    c = copy;
  }
  return c;
}

std::string triple_category_ref(const std::string& path) {
  json doc = parse_json(read_text(path), "triple document");
  if (!doc.is_object() || !doc.contains("category"))
    throw InputError("triple document needs a 'category' field");
  return doc["category"].get<std::string>();
}

CardyTriple load_triple(const FunctorContext& ctx, const std::string& path) {
  const Engine& P = ctx.P();
  json doc = parse_json(read_text(path), "triple document");
  if (!doc.contains("op") || !doc.contains("cl"))
    throw InputError("triple document needs 'op' and 'cl'");
  const std::string base = dir_of(path);
  NamedAlgebra op = algebra_from_json_or_ref(ctx, doc["op"], base);
  if (op.space != Space::kC) throw InputError("'op' must be an algebra in C");
  const cplx scale = doc.contains("iota_scale") ? read_value(doc["iota_scale"]) : cplx(1);
  json iota = doc.value("iota", json("canonical"));
  if (doc["cl"].is_string() && doc["cl"].get<std::string>() == "full-centre") {
    if (!(iota.is_string() && iota.get<std::string>() == "canonical"))
      throw InputError("'cl': 'full-centre' needs 'iota': 'canonical'");
    CardyTriple t = canonical_cardy(ctx, op.alg);
    if (scale != cplx(1)) t = make_triple(ctx, t.op, t.cl, scale * t.iota);
    return t;
  }
  NamedAlgebra cl = algebra_from_json_or_ref(ctx, doc["cl"], base);
  if (cl.space != Space::kCC) throw InputError("'cl' must be an algebra in CxC");
  Mor f;
  if (iota.is_string() && iota.get<std::string>() == "unit-map") {
    // R(eta_op) : R(1) -> R(op), read on cl through the slot identification.
    Obj r1 = ctx.R(ctx.C().unit());
    if (P.multiplicities(r1) != P.multiplicities(cl.alg.obj))
      throw InputError("'unit-map' needs cl on the object R(1)");
    std::vector<int> map(cl.alg.obj->size());
    for (int s = 0; s < cl.alg.obj->size(); ++s)
      map[s] = r1->slots[cl.alg.obj->labels[s]][cl.alg.obj->copy[s]];
    f = P.compose(ctx.R(op.alg.eta), P.embed(cl.alg.obj, r1, map));
  } else if (iota.is_array()) {
    f = read_mor(P, iota, cl.alg.obj, ctx.R(op.alg.obj));
  } else {
    throw InputError("'iota' must be 'canonical', 'unit-map' or a list");
  }
  return make_triple(ctx, op.alg, cl.alg, scale * f);
}

std::string triple_to_json(const FunctorContext& ctx, const CardyTriple& t,
                           const std::string& category_ref) {
  const Engine &C = ctx.C(), &P = ctx.P();
  Algebra op = canonical_form(C, t.op);
  Algebra cl = canonical_form(P, t.cl);
  // Re-express iota on the canonical objects.
  auto iso = [&](const Engine& e, const Obj& from, const Obj& to) {
    std::vector<int> map(from->size());
    for (int s = 0; s < from->size(); ++s)
      map[s] = to->slots[from->labels[s]][from->copy[s]];
    return e.embed(from, to, map);
  };
  Mor r_iso = ctx.R(iso(C, t.op.obj, op.obj));
  Mor c_iso = iso(P, cl.obj, t.cl.obj);
  Mor f = P.compose({r_iso, t.iota, c_iso});
  ojson doc;
  doc["category"] = category_ref;
  doc["op"] = algebra_doc(ctx, {Space::kC, op, "op"}, category_ref);
  doc["cl"] = algebra_doc(ctx, {Space::kCC, cl, "cl"}, category_ref);
  doc["iota"] = write_mor(P.coerce(f, cl.obj, ctx.R(op.obj)));
  return pretty(doc) + "\n";
}

std::string fmt_num(double x) {
  // Round-off noise differs between builds; keep reports byte-stable.
  if (std::abs(x) < 1e-12) return "<1e-12";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string fmt_cplx(cplx z) {
  double re = std::abs(z.real()) < 5e-10 ? 0.0 : z.real();
  double im = z.imag();
  char buf[64];
  if (std::abs(im) < 1e-9)
    std::snprintf(buf, sizeof buf, "%.9f", re);
  else
    std::snprintf(buf, sizeof buf, "%.9f%+.9fi", re, im);
  return buf;
}

std::string dump_mor(const Engine& e, const Mor& f) {
  std::ostringstream os;
  os << "source: " << e.describe(f.src) << "\n";
  os << "target: " << e.describe(f.tgt) << "\n";
  for (size_t k = 0; k < f.blk.size(); ++k) {
    const Mat& b = f.blk[k];
    if (b.size() == 0) continue;
    os << "block " << e.cat().labels[k] << " " << b.rows() << "x" << b.cols()
       << ":\n";
    for (Eigen::Index r = 0; r < b.rows(); ++r) {
      os << " ";
      for (Eigen::Index c = 0; c < b.cols(); ++c) os << " " << fmt_cplx(b(r, c));
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace mtc
