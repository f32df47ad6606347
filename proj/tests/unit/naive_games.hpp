#pragma once

#include <vector>

// Tiny reference implementation of partizan game comparison used to pin
// expected results independently of the interned kernel. Games are raw
// option trees; nothing is simplified, memoized, or shared.
namespace naive {

struct Tree {
  std::vector<Tree> left;
  std::vector<Tree> right;
};

inline Tree zero() { return {}; }

inline Tree star() { return Tree{{zero()}, {zero()}}; }

inline Tree nim(int k) {
  Tree t;
  for (int i = 0; i < k; ++i) {
    t.left.push_back(nim(i));
    t.right.push_back(nim(i));
  }
  return t;
}

inline Tree up() { return Tree{{zero()}, {star()}}; }

inline Tree integer(int n) {
  if (n == 0) return zero();
  Tree t;
  if (n > 0) {
    t.left.push_back(integer(n - 1));
  } else {
    t.right.push_back(integer(n + 1));
  }
  return t;
}

// 1/2^n
inline Tree half_power(int n) {
  if (n == 0) return integer(1);
  return Tree{{zero()}, {half_power(n - 1)}};
}

inline Tree neg(const Tree& g) {
  Tree t;
  for (const Tree& r : g.right) t.left.push_back(neg(r));
  for (const Tree& l : g.left) t.right.push_back(neg(l));
  return t;
}

inline Tree add(const Tree& a, const Tree& b) {
  Tree t;
  for (const Tree& l : a.left) t.left.push_back(add(l, b));
  for (const Tree& l : b.left) t.left.push_back(add(a, l));
  for (const Tree& r : a.right) t.right.push_back(add(r, b));
  for (const Tree& r : b.right) t.right.push_back(add(a, r));
  return t;
}

inline bool leq(const Tree& g, const Tree& h) {
  for (const Tree& gl : g.left) {
    if (leq(h, gl)) return false;
  }
  for (const Tree& hr : h.right) {
    if (leq(hr, g)) return false;
  }
  return true;
}

inline bool eq(const Tree& g, const Tree& h) { return leq(g, h) && leq(h, g); }

}  // namespace naive
