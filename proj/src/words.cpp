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

#include <cctype>

#include "mtc/engine.hpp"

namespace mtc {

namespace {

struct Parser {
  const Category& cat;
  const std::string& s;
  size_t pos = 0;

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw InputError("bad word '" + s + "' at " + std::to_string(pos) + ": " +
                     what);
  }
  std::string name() {
    ws();
    size_t b = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_' || s[pos] == '|' || s[pos] == '-'))
      ++pos;
    if (b == pos) fail("expected a label");
    return s.substr(b, pos - b);
  }
  Word word() {
    Word w;
    if (eat('(')) {
      Word l = word();
      if (!eat('*')) fail("expected '*'");
      Word r = word();
      if (!eat(')')) fail("expected ')'");
      w.kind = Word::kTensor;
      w.l = std::make_shared<Word>(l);
      w.r = std::make_shared<Word>(r);
      return w;
    }
    std::string n = name();
    int k = cat.find_label(n);
    if (k < 0) fail("unknown label '" + n + "'");
    w.kind = k == 0 ? Word::kEmpty : Word::kLeaf;
    w.label = k;
    if (eat('^')) w.dual = true;
    return w;
  }
};

void collect(const Category& cat, const Word& w, std::vector<int>& out) {
  switch (w.kind) {
    case Word::kEmpty:
      return;
    case Word::kLeaf:
      out.push_back(w.dual ? cat.dual[w.label] : w.label);
      return;
    case Word::kTensor:
      collect(cat, *w.l, out);
      collect(cat, *w.r, out);
  }
}

void walk(const Obj& x, int s, std::vector<int>& internal,
          std::vector<int>& mult) {
  if (!x->tensor) return;
  const auto& p = x->parts[s];
  walk(x->left, p.l, internal, mult);
  internal.push_back(x->labels[s]);
  mult.push_back(p.mu);
}

}  // namespace

Word parse_word(const Category& cat, const std::string& text) {
  Parser p{cat, text};
  Word w = p.word();
  p.ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  return w;
}

std::vector<Word> parse_sum(const Category& cat, const std::string& text) {
  Parser p{cat, text};
  std::vector<Word> out{p.word()};
  while (p.eat('+')) out.push_back(p.word());
  p.ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  return out;
}

Obj realize(const Engine& e, const Word& w) {
  switch (w.kind) {
    case Word::kEmpty:
      return e.unit();
    case Word::kLeaf:
      return e.simple(w.dual ? e.cat().dual[w.label] : w.label);
    case Word::kTensor:
      return e.tensor(realize(e, *w.l), realize(e, *w.r));
  }
  return e.unit();
}

Obj realize_sum(const Engine& e, const std::vector<Word>& ws) {
  if (ws.size() == 1) return realize(e, ws[0]);
  std::vector<Obj> parts;
  for (auto& w : ws) parts.push_back(realize(e, w));
  return e.concat(parts);
}

std::vector<int> word_leaves(const Category& cat, const Word& w) {
  std::vector<int> out;
  collect(cat, w, out);
  return out;
}

namespace {
Obj left_nested(const Engine& e, const std::vector<int>& leaves) {
  if (leaves.empty()) return e.unit();
  Obj o = e.simple(leaves[0]);
  for (size_t i = 1; i < leaves.size(); ++i)
    o = e.tensor(o, e.simple(leaves[i]));
  return o;
}
}  // namespace

std::vector<FusionTree> splitting(const Engine& e, const Word& w, int k) {
  Obj ln = left_nested(e, word_leaves(e.cat(), w));
  std::vector<FusionTree> out;
  for (int s : ln->slots[k]) {
    FusionTree t;
    walk(ln, s, t.internal, t.mult);
    out.push_back(t);
  }
  return out;
}

Mat splitting_transport(const Engine& e, const Word& w, int k) {
  Obj ln = left_nested(e, word_leaves(e.cat(), w));
  return e.reassociate(ln, realize(e, w)).blk[k];
}

}  // namespace mtc
