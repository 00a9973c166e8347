#include "outerlabel/delta4.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>

#include "outerlabel/delta3.hpp"
#include "outerlabel/exact.hpp"

namespace outerlabel {

bool AvailabilitySet::contains(Label l) const { return std::find(labels.begin(), labels.end(), l) != labels.end(); }

std::vector<Label> availability_labels(Label f_w, Label f_uw, int k) {
  std::vector<Label> out;
  for (Label l = 0; l <= k; ++l) {
    if (l != f_w && std::abs(l - f_uw) > 1) out.push_back(l);
  }
  return out;
}

AvailabilitySet availability(const TotalLabeling& f, Vertex endpoint, Vertex w, int k) {
  auto fw = f.get(w);
  auto fe = f.get(Edge(endpoint, w));
  if (!fw || !fe) throw LabelingError("availability needs f(w) and f(uw)");
  return {endpoint, availability_labels(*fw, *fe, k)};
}

const std::array<LabelPair, 14>& claim_pairs() {
  static const std::array<LabelPair, 14> pairs = {{{0, 6},
                                                   {0, 1},
                                                   {1, 2},
                                                   {2, 3},
                                                   {3, 4},
                                                   {4, 5},
                                                   {5, 6},
                                                   {6, 0},
                                                   {6, 5},
                                                   {5, 4},
                                                   {4, 3},
                                                   {3, 2},
                                                   {2, 1},
                                                   {1, 0}}};
  return pairs;
}

LabelPair claim_pair(const std::vector<Label>& l1, const std::vector<Label>& l2) {
  auto in = [](const std::vector<Label>& s, Label l) { return std::find(s.begin(), s.end(), l) != s.end(); };
  for (const LabelPair& p : claim_pairs()) {
    if (in(l1, p.first) && in(l2, p.second)) return p;
  }
  throw NoPair("no listed pair fits the availability sets");
}

LabelPair apply_transform(const ChainCase& c, LabelPair p) {
  if (c.reverse) std::swap(p.first, p.second);
  if (c.complement) p = {6 - p.first, 6 - p.second};
  return p;
}

ChainCase canonicalize(LabelPair p) {
  static const std::array<LabelPair, 4> canon = {{{0, 6}, {0, 1}, {1, 2}, {2, 3}}};
  for (bool rev : {false, true}) {
    for (bool comp : {false, true}) {
      ChainCase c;
      c.reverse = rev;
      c.complement = comp;
      LabelPair q = apply_transform(c, p);
      for (size_t i = 0; i < canon.size(); ++i) {
        if (q == canon[i]) {
          c.case_id = static_cast<int>(i) + 1;
          c.pair = q;
          return c;
        }
      }
    }
  }
  throw std::invalid_argument("pair is not one of the listed end-label pairs");
}

Graph chain_stub_graph(int t) {
  if (t < 2) throw std::invalid_argument("chain needs t >= 2");
  const int last = 2 * t;
  std::vector<Edge> es;
  for (int i = 0; i < last; ++i) es.emplace_back(i, i + 1);
  for (int i = 0; i + 2 <= last; i += 2) es.emplace_back(i, i + 2);
  es.emplace_back(0, last);
  es.emplace_back(0, last + 1);
  es.emplace_back(last, last + 2);
  return Graph(last + 3, es);
}

namespace {

// ---- template tables -------------------------------------------------------
//
// Spine positions are written as absolute (u_n), block-relative (u_{4i+n},
// used inside the i = 2..k loop) or end-relative (u_{2t+n}).

struct Idx {
  char base;  // 'a', 'b', 't'
  int off;
};

struct Ref {
  char kind;  // 'v' vertex, 'e' edge, '1' host edge at u1, '2' host edge at u_{2t+1}
  Idx a{'a', 0};
  Idx b{'a', 0};
};

struct Step {
  char op = 's';  // 's' set, 'c' choose, 'w' conditional set
  Ref target{'v'};
  Label label = 0;
  unsigned mask = 0;         // 'c': candidates, 'w': trigger labels
  std::vector<Ref> exclude;  // 'c'
  Ref cond{'v'};             // 'w'
};

Idx A(int n) { return {'a', n}; }
Idx B(int n) { return {'b', n}; }
Idx T(int n) { return {'t', n}; }
Ref V(Idx i) { return {'v', i}; }
Ref E(Idx i, Idx j) { return {'e', i, j}; }
Ref v(int n) { return V(A(n)); }
Ref e(int a, int b) { return E(A(a), A(b)); }
Ref vt(int n) { return V(T(n)); }
Ref et(int a, int b) { return E(T(a), T(b)); }
Ref vb(int n) { return V(B(n)); }
Ref eb(int a, int b) { return E(B(a), B(b)); }
const Ref X = E(A(1), T(1));  // (u1, u_{2t+1})
const Ref Y = E(A(1), A(2));  // (u1, u2)
const Ref Z = E(T(0), T(1));  // (u_{2t}, u_{2t+1})
const Ref E1{'1'};
const Ref E2{'2'};

unsigned mask_of(std::initializer_list<int> ls) {
  unsigned m = 0;
  for (int l : ls) m |= 1u << l;
  return m;
}
Step S(Ref r, Label l) {
  Step s;
  s.op = 's';
  s.target = r;
  s.label = l;
  return s;
}
Step C(Ref r, std::initializer_list<int> cand, std::vector<Ref> excl) {
  Step s;
  s.op = 'c';
  s.target = r;
  s.mask = mask_of(cand);
  s.exclude = std::move(excl);
  return s;
}
Step W(Ref cond, std::initializer_list<int> trig, Ref r, Label l) {
  Step s;
  s.op = 'w';
  s.target = r;
  s.label = l;
  s.mask = mask_of(trig);
  s.cond = cond;
  return s;
}

struct Base {
  std::vector<Step> head;
  std::vector<Step> loop;
};

// Base labelings keyed by (case, odd t).
const Base& base_template(int case_id, bool odd) {
  static const std::map<std::pair<int, bool>, Base> table = {
      {{1, false},
       {{S(v(2), 6), S(v(3), 3), S(v(4), 0), S(v(5), 6), S(e(2, 3), 1), S(e(1, 3), 6), S(e(3, 4), 5),
         S(e(4, 5), 4), S(e(3, 5), 0)},
        {S(vb(-2), 1), S(vb(-1), 3), S(vb(0), 0), S(vb(1), 6), S(eb(-3, -2), 3), S(eb(-2, -1), 6),
         S(eb(-3, -1), 1), S(eb(-1, 0), 5), S(eb(0, 1), 4), S(eb(-1, 1), 0)}}},
      {{1, true},
       {{S(v(2), 6), S(v(3), 3), S(v(4), 0), S(v(5), 4), S(v(6), 0), S(v(7), 6), S(e(2, 3), 0), S(e(1, 3), 6),
         S(e(3, 4), 5), S(e(4, 5), 2), S(e(3, 5), 1), S(e(5, 6), 6), S(e(6, 7), 4), S(e(5, 7), 0)},
        {S(vb(0), 0), S(vb(1), 4), S(vb(2), 0), S(vb(3), 6), S(eb(-1, 0), 3), S(eb(0, 1), 2), S(eb(-1, 1), 1),
         S(eb(1, 2), 6), S(eb(2, 3), 4), S(eb(1, 3), 0)}}},
      {{2, false},
       {{S(v(2), 2), S(v(3), 6), S(v(4), 5), S(v(5), 1), S(e(2, 3), 0), S(e(1, 3), 2), S(e(3, 4), 1),
         S(e(4, 5), 3), S(e(3, 5), 4)},
        {S(vb(-2), 4), S(vb(-1), 0), S(vb(0), 2), S(vb(1), 1), S(eb(-3, -2), 6), S(eb(-2, -1), 2),
         S(eb(-3, -1), 5), S(eb(-1, 0), 6), S(eb(0, 1), 4), S(eb(-1, 1), 3)}}},
      {{2, true},
       {{S(v(2), 2), S(v(3), 6), S(v(4), 4), S(v(5), 0), S(v(6), 6), S(v(7), 1), S(e(2, 3), 0), S(e(1, 3), 2),
         S(e(3, 4), 1), S(e(4, 5), 6), S(e(3, 5), 4), S(e(5, 6), 2), S(e(6, 7), 3), S(e(5, 7), 5)},
        {S(vb(0), 6), S(vb(1), 0), S(vb(2), 6), S(vb(3), 1), S(eb(-1, 0), 4), S(eb(0, 1), 3), S(eb(-1, 1), 6),
         S(eb(1, 2), 2), S(eb(2, 3), 3), S(eb(1, 3), 5)}}},
      {{3, false},
       {{S(v(2), 0), S(v(3), 5), S(v(4), 3), S(v(5), 2), S(e(2, 3), 2), S(e(1, 3), 3), S(e(3, 4), 1),
         S(e(4, 5), 6), S(e(3, 5), 0)},
        {S(vb(-2), 0), S(vb(-1), 6), S(vb(0), 0), S(vb(1), 2), S(eb(-3, -2), 5), S(eb(-2, -1), 3),
         S(eb(-3, -1), 4), S(eb(-1, 0), 2), S(eb(0, 1), 6), S(eb(-1, 1), 0)}}},
      {{3, true},
       {{S(v(2), 0), S(v(3), 5), S(v(4), 2), S(v(5), 6), S(v(6), 0), S(v(7), 2), S(e(2, 3), 2), S(e(1, 3), 3),
         S(e(3, 4), 0), S(e(4, 5), 4), S(e(3, 5), 1), S(e(5, 6), 2), S(e(6, 7), 6), S(e(5, 7), 0)},
        {S(vb(0), 0), S(vb(1), 6), S(vb(2), 0), S(vb(3), 2), S(eb(-1, 0), 5), S(eb(0, 1), 3), S(eb(-1, 1), 4),
         S(eb(1, 2), 2), S(eb(2, 3), 6), S(eb(1, 3), 0)}}},
      {{4, false},
       {{S(v(2), 1), S(v(3), 6), S(v(4), 4), S(v(5), 3), S(e(2, 3), 3), S(e(1, 3), 4), S(e(3, 4), 2),
         S(e(4, 5), 0), S(e(3, 5), 1)},
        {S(vb(-2), 2), S(vb(-1), 4), S(vb(0), 5), S(vb(1), 3), S(eb(-3, -2), 5), S(eb(-2, -1), 0),
         S(eb(-3, -1), 6), S(eb(-1, 0), 2), S(eb(0, 1), 0), S(eb(-1, 1), 1)}}},
      {{4, true},
       {{S(v(2), 1), S(v(3), 0), S(v(4), 1), S(v(5), 6), S(v(6), 2), S(v(7), 3), S(e(2, 3), 3), S(e(1, 3), 4),
         S(e(3, 4), 5), S(e(4, 5), 3), S(e(3, 5), 2), S(e(5, 6), 4), S(e(6, 7), 0), S(e(5, 7), 1)},
        {S(vb(0), 2), S(vb(1), 4), S(vb(2), 5), S(vb(3), 3), S(eb(-1, 0), 5), S(eb(0, 1), 0), S(eb(-1, 1), 6),
         S(eb(1, 2), 2), S(eb(2, 3), 0), S(eb(1, 3), 1)}}},
  };
  return table.at({case_id, odd});
}

// Condition on a host edge label: label ∈ mask (in = true) or ∉ mask.
struct Cond {
  unsigned mask;
  bool in;
  bool holds(Label l) const { return ((mask >> l) & 1u) == (in ? 1u : 0u); }
};
Cond is(std::initializer_list<int> ls) { return {mask_of(ls), true}; }
Cond isnt(std::initializer_list<int> ls) { return {mask_of(ls), false}; }

struct Subcase {
  std::string name;
  int case_id;
  bool odd;
  Cond first;  // on f(u1 w1)
  Cond last;   // on f(u_{2t+1} w_{2t+1})
  std::vector<Step> small;  // t = 2 (even) or t = 3 (odd)
  std::vector<Step> large;  // larger t
};

std::vector<Step> concat(std::vector<Step> a, const std::vector<Step>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const std::vector<Subcase>& subcases() {
  static const std::vector<Subcase> table = [] {
    std::vector<Subcase> s;
    auto both = [](std::vector<Step> steps) { return std::make_pair(steps, steps); };
    auto add = [&](std::string name, int c, bool odd, Cond f, Cond l, std::pair<std::vector<Step>, std::vector<Step>> st) {
      s.push_back({std::move(name), c, odd, f, l, std::move(st.first), std::move(st.second)});
    };
    auto split = [](std::vector<Step> small, std::vector<Step> large) { return std::make_pair(small, large); };

    // Case 1: u1 = 0, u_{2t+1} = 6.
    const std::vector<Step> c1_head = {S(v(2), 1), S(v(3), 2), S(e(1, 2), 5), S(e(2, 3), 6), S(e(1, 3), 4)};
    const std::vector<Step> c1_tail = {S(vt(-1), 4), S(vt(0), 5), S(et(-1, 0), 0), S(et(0, 1), 1), S(et(-1, 1), 2)};
    add("1.1.1", 1, false, isnt({6}), isnt({0}),
        both({C(X, {2, 3, 4}, {E1, E2}), C(Y, {2, 3, 4}, {E1, X}), C(Z, {2, 3, 4}, {E2, X})}));
    add("1.1.2", 1, false, is({6}), isnt({0}),
        both(concat(c1_head, {C(X, {2, 3}, {E2}), C(Z, {2, 3, 4}, {X, E2})})));
    add("1.1.3", 1, false, isnt({6}), is({0}),
        both(concat(c1_tail, {C(X, {3, 4}, {E1}), C(Y, {2, 3, 4}, {X, E1})})));
    add("1.1.4", 1, false, is({6}), is({0}),
        split({S(v(2), 3), S(v(3), 1), S(v(4), 3), S(e(1, 2), 5), S(e(2, 3), 6), S(e(1, 3), 4), S(e(3, 4), 5),
               S(e(4, 5), 1), S(e(3, 5), 3), S(e(1, 5), 2)},
              concat(concat(c1_head, c1_tail), {S(X, 3)})));
    const std::vector<Step> c1o_head = {S(v(2), 2), S(v(3), 6), S(e(1, 2), 5), S(e(1, 3), 4), S(e(3, 4), 3)};
    const std::vector<Step> c1o_tail = {S(vt(-1), 5), S(vt(0), 3), S(et(-1, 0), 0), S(et(0, 1), 1), S(et(-1, 1), 3)};
    add("1.2.1", 1, true, isnt({6}), isnt({0}),
        both({C(X, {2, 3, 4}, {E1, E2}), C(Y, {2, 3, 4}, {E1, X}), C(Z, {2, 3, 4}, {E2, X})}));
    add("1.2.2", 1, true, is({6}), isnt({0}),
        both(concat(c1o_head, {C(X, {2, 3}, {E2}), C(Z, {2, 3, 4}, {X, E2})})));
    add("1.2.3", 1, true, isnt({6}), is({0}),
        both(concat(c1o_tail, {C(X, {2, 4}, {E1}), C(Y, {2, 3, 4}, {E1, X})})));
    add("1.2.4", 1, true, is({6}), is({0}), both(concat(concat(c1o_head, c1o_tail), {S(X, 2)})));

    // Case 2: u1 = 0, u_{2t+1} = 1.
    const std::vector<Step> c2_small = {C(X, {3, 5, 6}, {E1, E2}), C(Y, {4, 5, 6}, {E1, X}),
                                        C(Z, {3, 5, 6}, {E2, X}), W(Z, {5, 6}, v(4), 3)};
    const std::vector<Step> c2_large = {C(X, {4, 5, 6}, {E1, E2}), C(Y, {4, 5, 6}, {E1, X}),
                                        C(Z, {4, 5, 6}, {E2, X}), W(Z, {6}, et(-1, 0), 4)};
    const std::vector<Step> c22_small = {S(e(1, 3), 3), C(X, {5, 6}, {E2}), C(Y, {4, 5, 6}, {X}),
                                         C(Z, {3, 5, 6}, {E2, X}), W(Z, {5, 6}, v(4), 3)};
    const std::vector<Step> c22_large = {S(e(1, 3), 3), C(X, {4, 5, 6}, {E2}), C(Y, {4, 5, 6}, {X}),
                                         C(Z, {4, 5, 6}, {E2, X}), W(Z, {6}, et(-1, 0), 4)};
    add("2.1.1", 2, false, isnt({2}), isnt({3, 4}), split(c2_small, c2_large));
    add("2.1.2", 2, false, is({2}), isnt({3, 4}), split(c22_small, c22_large));
    add("2.1.3", 2, false, isnt({2}), is({3}),
        split(c2_small, {S(et(-1, 1), 6), C(X, {4, 5}, {E1}), C(Y, {4, 5, 6}, {X, E1}), C(Z, {4, 5}, {X}),
                         W(Z, {4}, vt(0), 6), W(Z, {4}, et(-1, 0), 3), W(Z, {5}, et(-1, 0), 4)}));
    add("2.1.4", 2, false, isnt({2}), is({4}),
        split({S(e(3, 5), 3), S(v(4), 3), C(X, {5, 6}, {E1}), C(Y, {4, 5, 6}, {X, E1}), C(Z, {5, 6}, {X})},
              c2_large));
    add("2.1.5", 2, false, is({2}), is({3}),
        split(c22_small, {S(e(1, 2), 4), S(e(1, 3), 3), S(vt(0), 6), S(et(-1, 0), 3), S(et(0, 1), 4),
                          S(et(-1, 1), 6), S(X, 5)}));
    add("2.1.6", 2, false, is({2}), is({4}),
        split({S(v(2), 2), S(v(3), 6), S(v(4), 3), S(e(1, 2), 5), S(e(2, 3), 0), S(e(1, 3), 4), S(e(3, 4), 1),
               S(e(4, 5), 5), S(e(3, 5), 3), S(e(1, 5), 6)},
              c22_large));
    add("2.2.1", 2, true, isnt({2}), isnt({5}),
        both({C(X, {3, 4, 6}, {E1, E2}), C(Y, {4, 5, 6}, {E1, X}), C(Z, {3, 4, 6}, {E2, X}),
              W(Z, {6}, vt(0), 4)}));
    add("2.2.2", 2, true, is({2}), isnt({5}),
        both({S(e(1, 2), 5), S(e(1, 3), 3), C(X, {4, 6}, {E2}), C(Z, {3, 4, 6}, {X, E2}), W(Z, {6}, vt(0), 4)}));
    add("2.2.3", 2, true, isnt({2}), is({5}),
        split({S(v(6), 2), S(e(5, 6), 5), S(e(5, 7), 3), C(X, {4, 6}, {E1}), C(Y, {4, 5, 6}, {E1, X}),
               C(Z, {4, 6}, {X})},
              {S(et(-1, 1), 4), C(X, {3, 6}, {E1}), C(Y, {4, 5, 6}, {E1, X}), C(Z, {3, 6}, {X}),
               W(Z, {6}, vt(0), 4)}));
    add("2.2.4", 2, true, is({2}), is({5}),
        split({S(e(1, 2), 5), S(e(1, 3), 3), S(v(6), 2), S(e(5, 6), 5), S(e(6, 7), 6), S(e(5, 7), 3),
               S(e(1, 7), 4)},
              {S(e(1, 2), 5), S(e(1, 3), 3), S(et(-1, 1), 4), S(X, 6)}));

    // Case 3: u1 = 1, u_{2t+1} = 2.
    add("3.1.1", 3, false, isnt({3}), isnt({0}),
        both({C(X, {4, 5, 6}, {E1, E2}), C(Y, {4, 5, 6}, {E1, X}), C(Z, {4, 5, 6}, {E2, X}),
              W(e(4, 5), {4}, v(4), 6)}));
    add("3.1.2", 3, false, is({3}), isnt({0}),
        both({S(v(3), 6), S(e(2, 3), 3), S(e(1, 3), 4), C(X, {5, 6}, {E2}), C(Y, {5, 6}, {X}),
              C(Z, {4, 5, 6}, {E2, X}), W(e(4, 5), {4}, v(4), 0), W(e(4, 5), {4}, e(3, 4), 2)}));
    add("3.1.3", 3, false, isnt({3}), is({0}),
        split({S(e(3, 5), 4), S(v(3), 6), C(X, {5, 6}, {E1}), C(Y, {4, 5, 6}, {X, E1}), C(Z, {5, 6}, {X})},
              {S(et(-1, 1), 5), S(vt(-2), 1), S(vt(-1), 0), C(X, {4, 6}, {E1}), C(Y, {4, 5, 6}, {X, E1}),
               C(Z, {4, 6}, {X}), W(Z, {4}, vt(0), 6), W(Z, {6}, vt(0), 4)}));
    add("3.1.4", 3, false, is({3}), is({0}),
        split({S(v(2), 2), S(v(3), 0), S(v(4), 6), S(e(1, 2), 6), S(e(2, 3), 5), S(e(1, 3), 4), S(e(3, 4), 2),
               S(e(4, 5), 4), S(e(3, 5), 6), S(e(1, 5), 5)},
              {S(e(1, 2), 5), S(v(3), 6), S(e(1, 3), 4), S(vt(-2), 1), S(vt(-1), 0), S(vt(0), 6), S(et(0, 1), 4),
               S(et(-1, 1), 5), S(X, 6)}));
    add("3.2.1", 3, true, isnt({3}), isnt({0}),
        both({C(X, {4, 5, 6}, {E1, E2}), C(Y, {4, 5, 6}, {E1, X}), C(Z, {4, 5, 6}, {E2, X})}));
    add("3.2.2", 3, true, is({3}), isnt({0}),
        both({S(e(1, 3), 6), S(v(3), 4), C(X, {4, 5}, {E2}), C(Y, {4, 5}, {X}), C(Z, {4, 5, 6}, {X, E2})}));
    add("3.2.3", 3, true, isnt({3}), is({0}),
        split({S(v(4), 4), S(e(4, 5), 2), S(e(5, 6), 3), S(e(5, 7), 4), C(X, {5, 6}, {E1}),
               C(Y, {4, 5, 6}, {E1, X}), C(Z, {5, 6}, {X})},
              {S(vt(-2), 6), S(vt(-1), 0), S(et(-3, -2), 4), S(et(-3, -1), 5), S(et(-1, 1), 6), C(X, {4, 5}, {E1}),
               C(Y, {4, 5, 6}, {E1, X}), C(Z, {4, 5}, {X}), W(Z, {4}, vt(0), 6), W(Z, {4}, et(-1, 0), 2),
               W(Z, {5}, vt(0), 1), W(Z, {5}, et(-1, 0), 4)}));
    add("3.2.4", 3, true, is({3}), is({0}),
        split({S(e(1, 2), 4), S(e(1, 3), 6), S(v(3), 4), S(v(4), 5), S(e(3, 4), 1), S(e(4, 5), 2), S(e(3, 5), 0),
               S(e(5, 6), 3), S(e(6, 7), 6), S(e(5, 7), 4), S(e(1, 7), 5)},
              {S(e(1, 2), 5), S(e(1, 3), 6), S(v(3), 4), S(vt(-2), 6), S(vt(-1), 0), S(vt(0), 1),
               S(et(-3, -2), 4), S(et(-3, -1), 5), S(et(-1, 0), 4), S(et(0, 1), 5), S(et(-1, 1), 6), S(X, 4)}));

    // Case 4: u1 = 2, u_{2t+1} = 3.
    const std::vector<Step> c4_plain = {C(X, {0, 5, 6}, {E1, E2}), C(Y, {0, 5, 6}, {E1, X}),
                                        C(Z, {0, 5, 6}, {E2, X}), W(Y, {0}, v(2), 5), W(Z, {5, 6}, vt(0), 0)};
    add("4.1.1", 4, false, isnt({4}), isnt({1}), both(c4_plain));
    add("4.1.2", 4, false, is({4}), isnt({1}),
        both({S(e(1, 3), 0), C(X, {5, 6}, {E2}), C(Y, {5, 6}, {X}), C(Z, {0, 5, 6}, {E2, X}),
              W(Z, {5, 6}, vt(0), 0)}));
    add("4.1.3", 4, false, isnt({4}), is({1}),
        split({S(e(3, 5), 0), S(v(4), 0), C(X, {5, 6}, {E1}), C(Y, {0, 5, 6}, {X, E1}), C(Z, {5, 6}, {X}),
               W(Y, {0}, v(2), 5)},
              {S(et(-1, 1), 5), S(vt(-2), 1), S(vt(-1), 0), S(et(-2, -1), 3), S(vt(0), 4), C(X, {0, 6}, {E1}),
               C(Y, {0, 5, 6}, {X, E1}), C(Z, {0, 6}, {X}), W(Y, {0}, v(2), 5)}));
    add("4.1.4", 4, false, is({4}), is({1}),
        split({S(v(2), 4), S(v(3), 0), S(v(4), 1), S(e(1, 2), 6), S(e(2, 3), 2), S(e(1, 3), 5), S(e(3, 4), 3),
               S(e(4, 5), 5), S(e(3, 5), 6), S(e(1, 5), 0)},
              {S(e(1, 2), 5), S(e(1, 3), 0), S(vt(-2), 1), S(vt(-1), 0), S(vt(0), 4), S(et(-2, -1), 3),
               S(et(-1, 1), 5), S(X, 6)}));
    add("4.2.1", 4, true, isnt({4}), isnt({1}), both(c4_plain));
    add("4.2.2", 4, true, is({4}), isnt({1}),
        both({S(e(1, 3), 6), C(X, {0, 5}, {E2}), C(Y, {0, 5}, {X}), C(Z, {0, 5, 6}, {X, E2}), W(Y, {0}, v(2), 5),
              W(Z, {5, 6}, vt(0), 0)}));
    add("4.2.3", 4, true, isnt({4}), is({1}),
        split({S(e(5, 7), 0), C(X, {5, 6}, {E1}), C(Y, {0, 5, 6}, {E1, X}), C(Z, {5, 6}, {X}), W(Y, {0}, v(2), 5)},
              {S(vt(-2), 0), S(vt(-1), 1), S(et(-2, -1), 4), S(et(-1, 0), 3), S(et(-1, 1), 5), C(X, {0, 6}, {E1}),
               C(Y, {0, 5, 6}, {E1, X}), C(Z, {0, 6}, {X}), W(Y, {0}, v(2), 5), W(Z, {6}, vt(0), 0)}));
    add("4.2.4", 4, true, is({4}), is({1}),
        split({S(e(1, 2), 0), S(e(1, 3), 6), S(v(2), 5), S(e(6, 7), 6), S(e(5, 7), 0), S(e(1, 7), 5)},
              {S(e(1, 2), 5), S(e(1, 3), 6), S(vt(-2), 0), S(vt(-1), 1), S(vt(0), 0), S(et(-2, -1), 4),
               S(et(-1, 0), 3), S(et(0, 1), 6), S(et(-1, 1), 5), S(X, 0)}));
    return s;
  }();
  return table;
}

const Subcase& find_subcase(int case_id, int t, Label e1, Label e2) {
  const bool odd = t % 2 == 1;
  for (const Subcase& s : subcases()) {
    if (s.case_id == case_id && s.odd == odd && s.first.holds(e1) && s.last.holds(e2)) return s;
  }
  throw std::logic_error("subcase table is not exhaustive");
}

constexpr std::array<LabelPair, 4> kEnds = {{{0, 6}, {0, 1}, {1, 2}, {2, 3}}};

// Executes template steps on the stub graph of one chain.
class TemplateRun {
 public:
  TemplateRun(int t, int i) : t_(t), i_(i) {}

  int pos(Idx x) const {
    switch (x.base) {
      case 'a': return x.off;
      case 'b': return 4 * i_ + x.off;
      default: return 2 * t_ + x.off;
    }
  }
  Element resolve(const Ref& r) const {
    const int last = 2 * t_;
    switch (r.kind) {
      case 'v': return Element::of(static_cast<Vertex>(pos(r.a) - 1));
      case 'e': return Element::of(Edge(pos(r.a) - 1, pos(r.b) - 1));
      case '1': return Element::of(Edge(0, last + 1));
      default: return Element::of(Edge(last, last + 2));
    }
  }

 private:
  int t_;
  int i_;
};

bool run_steps(TotalLabeling& f, const std::vector<Step>& steps, size_t at, int t, int& backtracks) {
  TemplateRun r(t, 0);
  for (; at < steps.size(); ++at) {
    const Step& s = steps[at];
    const Element target = r.resolve(s.target);
    if (s.op == 's') {
      f.set(target, s.label);
    } else if (s.op == 'w') {
      auto l = f.get(r.resolve(s.cond));
      if (l && ((s.mask >> *l) & 1u)) f.set(target, s.label);
    } else {
      unsigned cand = s.mask;
      for (const Ref& x : s.exclude) {
        if (auto l = f.get(r.resolve(x))) cand &= ~(1u << *l);
      }
      for (Label l = 0; l <= 6; ++l) {
        if (!((cand >> l) & 1u)) continue;
        TotalLabeling g = f;
        g.set(target, l);
        if (run_steps(g, steps, at + 1, t, backtracks)) {
          f = std::move(g);
          return true;
        }
        ++backtracks;
      }
      return false;
    }
  }
  return is_valid(f);
}

}  // namespace

std::string chain_subcase(int case_id, int t, Label edge_first, Label edge_last) {
  return find_subcase(case_id, t, edge_first, edge_last).name;
}

TotalLabeling chain_template(int case_id, int t, const HostContext& ctx, TemplateInfo* info) {
  if (case_id < 1 || case_id > 4) throw std::invalid_argument("case id must be 1..4");
  const Graph g = chain_stub_graph(t);
  const int last = 2 * t;
  const LabelPair ends = kEnds[static_cast<size_t>(case_id - 1)];
  auto in_range = [](Label l) { return l >= 0 && l <= 6; };
  if (!in_range(ctx.w_first) || !in_range(ctx.edge_first) || !in_range(ctx.w_last) || !in_range(ctx.edge_last)) {
    throw PreconditionError("host context labels must lie in 0..6");
  }
  auto fits = [](Label u, Label w, Label uw) { return u != w && std::abs(u - uw) >= 2 && std::abs(w - uw) >= 2; };
  if (!fits(ends.first, ctx.w_first, ctx.edge_first) || !fits(ends.second, ctx.w_last, ctx.edge_last)) {
    throw PreconditionError("host context does not admit the case's end labels");
  }

  TotalLabeling f(g, 6);
  f.set(static_cast<Vertex>(last + 1), ctx.w_first);
  f.set(Edge(0, last + 1), ctx.edge_first);
  f.set(static_cast<Vertex>(last + 2), ctx.w_last);
  f.set(Edge(last, last + 2), ctx.edge_last);
  f.set(0, ends.first);
  f.set(last, ends.second);

  const bool odd = t % 2 == 1;
  const Base& base = base_template(case_id, odd);
  const int k = odd ? (t - 1) / 2 : t / 2;
  TemplateRun head(t, 0);
  for (const Step& s : base.head) f.set(head.resolve(s.target), s.label);
  for (int i = 2; i <= k; ++i) {
    TemplateRun blk(t, i);
    for (const Step& s : base.loop) f.set(blk.resolve(s.target), s.label);
  }

  const Subcase& sc = find_subcase(case_id, t, ctx.edge_first, ctx.edge_last);
  const bool small = t == (odd ? 3 : 2);
  const std::vector<Step>& steps = small ? sc.small : sc.large;
  int backtracks = 0;
  const bool ok = run_steps(f, steps, 0, t, backtracks);
  if (info) {
    info->subcase = sc.name;
    info->backtracks = backtracks;
  }
  if (!ok) {
    throw CaseFault("subcase " + sc.name + " with t=" + std::to_string(t) + " and host edges (" +
                    std::to_string(ctx.edge_first) + "," + std::to_string(ctx.edge_last) + ") does not verify");
  }
  return f;
}

TemplateSweepResult template_sweep(int t_min, int t_max, bool parallel) {
  struct Job {
    int case_id, t;
    HostContext ctx;
  };
  std::vector<Job> jobs;
  for (int c = 1; c <= 4; ++c) {
    const LabelPair ends = kEnds[static_cast<size_t>(c - 1)];
    for (int t = std::max(2, t_min); t <= t_max; ++t) {
      for (Label w1 = 0; w1 <= 6; ++w1) {
        for (Label e1 = 0; e1 <= 6; ++e1) {
          if (std::abs(w1 - e1) < 2 || w1 == ends.first || std::abs(ends.first - e1) < 2) continue;
          for (Label w2 = 0; w2 <= 6; ++w2) {
            for (Label e2 = 0; e2 <= 6; ++e2) {
              if (std::abs(w2 - e2) < 2 || w2 == ends.second || std::abs(ends.second - e2) < 2) continue;
              jobs.push_back({c, t, {w1, e1, w2, e2}});
            }
          }
        }
      }
    }
  }
  std::vector<std::string> names(jobs.size());
  std::vector<int> backtracks(jobs.size(), 0);
  std::vector<char> failed(jobs.size(), 0);
  std::vector<std::string> messages(jobs.size());
  auto work = [&](size_t j) {
    try {
      TemplateInfo info;
      chain_template(jobs[j].case_id, jobs[j].t, jobs[j].ctx, &info);
      names[j] = info.subcase;
      backtracks[j] = info.backtracks;
    } catch (const CaseFault& e) {
      failed[j] = 1;
      messages[j] = e.what();
      names[j] = chain_subcase(jobs[j].case_id, jobs[j].t, jobs[j].ctx.edge_first, jobs[j].ctx.edge_last);
    }
  };
  const long n = static_cast<long>(jobs.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (long j = 0; j < n; ++j) work(static_cast<size_t>(j));
  } else {
    for (long j = 0; j < n; ++j) work(static_cast<size_t>(j));
  }
  TemplateSweepResult r;
  r.runs = n;
  std::map<std::string, long> per;
  for (size_t j = 0; j < jobs.size(); ++j) {
    per[names[j] + " t=" + std::to_string(jobs[j].t)]++;
    if (backtracks[j] > 0) ++r.backtracked;
    if (failed[j]) {
      ++r.faults;
      if (r.fault_samples.size() < 20) {
        const auto& c = jobs[j].ctx;
        r.fault_samples.push_back(messages[j] + " [w1=" + std::to_string(c.w_first) +
                                  ", w2=" + std::to_string(c.w_last) + "]");
      }
    }
  }
  r.per_subcase.assign(per.begin(), per.end());
  return r;
}

std::pair<Graph, std::vector<Element>> reduce_c1c2(const Graph& g, const Configuration& c) {
  if (c.kind == ConfigKind::kC3 || c.witnesses.empty()) throw PreconditionError("reduction needs C1 or C2");
  const Vertex u = c.witnesses.front();
  std::vector<Element> freed = {Element::of(u)};
  for (Vertex z : g.neighbors(u)) freed.push_back(Element::of(Edge(u, z)));
  Vertex rm[] = {u};
  return {remove_vertices(g, rm), freed};
}

namespace {

class Delta4 {
 public:
  Delta4(LabelReport* report, Orientation o) : report_(report), o_(o) {}

  TotalLabeling run(const Graph& g, int depth);

 private:
  void step(int depth, const std::string& s) {
    if (report_) report_->trace.push_back(std::string(static_cast<size_t>(2 * depth), ' ') + s);
  }
  void discrepancy(const std::string& s) {
    if (report_) {
      report_->discrepancies.push_back(s);
      ++report_->fallbacks;
    }
  }

  TotalLabeling pendant(const Graph& g, int depth);
  TotalLabeling reduction(const Graph& g, const Configuration& c, int depth);
  TotalLabeling chain(const Graph& g, const OuterplanarEmbedding& emb, int depth);
  TotalLabeling complete(const Graph& g, const TotalLabeling& base, std::vector<Element> free,
                         const std::string& why);

  LabelReport* report_;
  Orientation o_;
};

SearchOptions widened_search() {
  SearchOptions o;
  o.element_cap = 96;
  o.symmetry_pruning = false;
  o.time_budget_s = 30.0;
  return o;
}

// Completes `base` over `free`; widens to the closed neighborhood of the
// freed vertices and finally to the whole graph.
TotalLabeling Delta4::complete(const Graph& g, const TotalLabeling& base, std::vector<Element> free,
                               const std::string& why) {
  TotalLabeling f(g, 6);
  f.merge_from(base);
  for (int round = 0; round < 3; ++round) {
    TotalLabeling h = f;
    for (const Element& x : free) {
      if (h.assigned(x)) h.clear(x);
    }
    if (auto r = extend_bounded(h, free, 6, 2, widened_search())) {
      if (round > 0) discrepancy(why + ": completion needed widening round " + std::to_string(round));
      return *r;
    }
    std::set<Element> grown(free.begin(), free.end());
    for (const Element& x : free) {
      std::vector<Vertex> ends = x.is_vertex() ? std::vector<Vertex>{x.vertex()}
                                               : std::vector<Vertex>{x.edge().u, x.edge().v};
      for (Vertex a : ends) {
        for (Vertex z : g.neighbors(a)) {
          grown.insert(Element::of(z));
          grown.insert(Element::of(Edge(a, z)));
        }
      }
    }
    free.assign(grown.begin(), grown.end());
  }
  discrepancy(why + ": local completion failed, searched the whole graph");
  auto full = find_labeling_bounded(g, 2, 6, widened_search());
  if (full.labeling) return *full.labeling;
  throw CaseFault("no span-6 completion found: " + why);
}

TotalLabeling Delta4::run(const Graph& g, int depth) {
  if (g.empty()) return TotalLabeling(g, 6);
  auto comps = connected_components(g);
  if (comps.size() > 1) {
    step(depth, "disconnected: " + std::to_string(comps.size()) + " components");
    TotalLabeling f(g, 6);
    for (const Graph& c : comps) f.merge_from(run(c, depth + 1));
    return f;
  }
  if (g.max_degree() <= 3) {
    step(depth, "max degree <= 3: handing over to the delta-3 labeler");
    TotalLabeling f(g, 6);
    f.merge_from(label_upto_delta3(g, report_, o_));
    return f;
  }
  if (g.num_elements() <= 9) {
    step(depth, "base: oracle on " + std::to_string(g.num_elements()) + " elements");
    auto r = find_labeling_bounded(g, 2, 6);
    if (!r.labeling) throw CaseFault("oracle found no base labeling");
    return *r.labeling;
  }
  if (g.min_degree() == 1) return pendant(g, depth);
  OuterplanarEmbedding emb = recognize_embed(g, o_);
  for (ConfigKind k : {ConfigKind::kC1, ConfigKind::kC2}) {
    auto cs = all_configurations(emb, k);
    if (!cs.empty()) return reduction(g, cs.front(), depth);
  }
  return chain(g, emb, depth);
}

TotalLabeling Delta4::pendant(const Graph& g, int depth) {
  Vertex u1 = -1;
  for (Vertex v : g.vertices()) {
    if (g.degree(v) == 1) {
      u1 = v;
      break;
    }
  }
  const Vertex u2 = g.neighbors(u1)[0];
  step(depth, "pendant vertex " + std::to_string(u1));
  Vertex rm[] = {u1};
  const Graph h = remove_vertices(g, rm);
  TotalLabeling f(g, 6);
  f.merge_from(run(h, depth + 1));
  const int fu2 = f.at(u2);
  std::set<int> bad = {fu2 - 1, fu2, fu2 + 1};
  for (Vertex z : h.neighbors(u2)) bad.insert(f.at(Edge(u2, z)));
  int a = -1;
  for (int l = 0; l <= 6 && a < 0; ++l) {
    if (!bad.contains(l)) a = l;
  }
  int b = -1;
  for (int l = 0; l <= 6 && a >= 0 && b < 0; ++l) {
    if (l != fu2 && std::abs(l - a) > 1) b = l;
  }
  if (a >= 0 && b >= 0) {
    f.set(Edge(u1, u2), a);
    f.set(u1, b);
    if (is_valid(f)) return f;
  }
  return complete(g, f, {Element::of(u1), Element::of(Edge(u1, u2))}, "pendant extension");
}

TotalLabeling Delta4::reduction(const Graph& g, const Configuration& c, int depth) {
  auto [h, freed] = reduce_c1c2(g, c);
  step(depth, to_string(c.kind) + " reduction: removing 2-vertex " + std::to_string(c.witnesses.front()) +
                  " and completing by bounded search");
  TotalLabeling f(g, 6);
  f.merge_from(run(h, depth + 1));
  return complete(g, f, freed, to_string(c.kind) + " completion");
}

TotalLabeling Delta4::chain(const Graph& g, const OuterplanarEmbedding& emb, int depth) {
  const Chain ch = find_closed_chain(emb);
  const int t = ch.t();
  std::vector<Vertex> interior(ch.spine.begin() + 1, ch.spine.end() - 1);
  Graph h = remove_vertices(g, interior);
  Edge closing[] = {Edge(ch.first(), ch.last())};
  h = remove_edges(h, closing);
  step(depth, "closed chain t=" + std::to_string(t) + " from " + std::to_string(ch.first()) + " to " +
                  std::to_string(ch.last()));
  TotalLabeling fh(g, 6);
  fh.merge_from(run(h, depth + 1));

  const Vertex w1 = ch.w_first, w2 = ch.w_last;
  const AvailabilitySet l1 = availability(fh, ch.first(), w1);
  const AvailabilitySet l2 = availability(fh, ch.last(), w2);
  const LabelPair p = claim_pair(l1.labels, l2.labels);
  const ChainCase cc = canonicalize(p);
  auto tr = [&](Label l) { return cc.complement ? 6 - l : l; };
  HostContext ctx;
  const Vertex cw1 = cc.reverse ? w2 : w1, cw2 = cc.reverse ? w1 : w2;
  const Vertex cu1 = cc.reverse ? ch.last() : ch.first(), cu2 = cc.reverse ? ch.first() : ch.last();
  ctx.w_first = tr(fh.at(cw1));
  ctx.edge_first = tr(fh.at(Edge(cu1, cw1)));
  ctx.w_last = tr(fh.at(cw2));
  ctx.edge_last = tr(fh.at(Edge(cu2, cw2)));

  std::vector<Element> chain_elems;
  for (Vertex v : ch.spine) chain_elems.push_back(Element::of(v));
  for (int i = 1; i <= 2 * t; ++i) chain_elems.push_back(Element::of(Edge(ch.u(i), ch.u(i + 1))));
  for (int i = 1; i < 2 * t; i += 2) chain_elems.push_back(Element::of(Edge(ch.u(i), ch.u(i + 2))));
  chain_elems.push_back(Element::of(Edge(ch.first(), ch.last())));

  TemplateInfo info;
  std::string& sub = info.subcase;
  try {
    const TotalLabeling fc = chain_template(cc.case_id, t, ctx, &info);
    step(depth, "pair (" + std::to_string(p.first) + "," + std::to_string(p.second) + ") -> case " +
                    std::to_string(cc.case_id) + (cc.reverse ? ", reversed" : "") +
                    (cc.complement ? ", complemented" : "") + ", subcase " + sub);
    TotalLabeling f = fh;
    // Stub id j is canonical u_{j+1}; map back through the transform.
    auto spine_at = [&](int j) { return ch.spine[static_cast<size_t>(cc.reverse ? 2 * t - j : j)]; };
    for (int j = 0; j <= 2 * t; ++j) f.set(spine_at(j), tr(fc.at(static_cast<Vertex>(j))));
    const Graph stub = chain_stub_graph(t);
    for (const Edge& e : stub.edges()) {
      if (e.v > 2 * t) continue;
      f.set(Edge(spine_at(e.u), spine_at(e.v)), tr(fc.at(e)));
    }
    if (auto bad = verify(f); bad.empty()) return f;
    else
      return complete(g, fh, chain_elems, "chain subcase " + sub + " spliced (" + to_string(bad.front()) + ")");
  } catch (const CaseFault& e) {
    return complete(g, fh, chain_elems, e.what());
  }
}

}  // namespace

TotalLabeling label_upto_delta4(const Graph& g, LabelReport* report, Orientation o) {
  if (!g.empty() && g.max_degree() > 4) throw NotDelta4("maximum degree exceeds 4");
  recognize_embed(g, o);
  Delta4 d(report, o);
  TotalLabeling f = d.run(g, 0);
  f.set_k(6);
  return f;
}

TotalLabeling label_delta4(const Graph& g, LabelReport* report, Orientation o) {
  if (g.empty() || g.max_degree() != 4) throw NotDelta4("label_delta4 needs maximum degree 4");
  return label_upto_delta4(g, report, o);
}

}  // namespace outerlabel
