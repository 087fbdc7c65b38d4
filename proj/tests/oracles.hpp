#pragma once

// Reference computations that share no code with the library. They are slow
// and only meant for small inputs.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

namespace oracle {

using IntRows = std::vector<std::vector<long long>>;
using Cplx = std::complex<double>;

// Exact determinant by cofactor expansion.
inline long long det(const IntRows& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntRows minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(row);
    }
    const long long term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

inline std::vector<std::vector<int>> subsets(int n, int size) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

// Invariant factors from determinantal divisors: d_r = gcd of all r x r minors.
inline std::vector<long long> invariant_factors(const IntRows& a, int rows, int cols) {
  std::vector<long long> d{1};
  for (int r = 1; r <= std::min(rows, cols); ++r) {
    long long g = 0;
    for (const auto& rs : subsets(rows, r)) {
      for (const auto& cs : subsets(cols, r)) {
        IntRows minor;
        for (int i : rs) {
          std::vector<long long> row;
          for (int j : cs) row.push_back(a[i][j]);
          minor.push_back(row);
        }
        g = std::gcd(g, std::llabs(det(minor)));
      }
    }
    if (g == 0) break;
    d.push_back(g);
  }
  std::vector<long long> s;
  for (std::size_t i = 1; i < d.size(); ++i) s.push_back(d[i] / d[i - 1]);
  return s;
}

inline int rank(const IntRows& a, int rows, int cols) {
  return static_cast<int>(invariant_factors(a, rows, cols).size());
}

// |Hom(coker a, Z/q)| counted by enumerating x in (Z/q)^rows with x^T a = 0 mod q.
inline long long hom_count(const IntRows& a, int rows, int cols, int q) {
  long long count = 0;
  std::vector<int> x(rows, 0);
  while (true) {
    bool ok = true;
    for (int c = 0; c < cols && ok; ++c) {
      long long s = 0;
      for (int r = 0; r < rows; ++r) s += x[r] * a[r][c];
      ok = ((s % q) + q) % q == 0;
    }
    if (ok) ++count;
    int i = 0;
    while (i < rows && ++x[i] == q) x[i++] = 0;
    if (i == rows) break;
  }
  return count;
}

// Same count predicted from a free rank and torsion list.
inline long long predicted_hom_count(int free_rank, const std::vector<long long>& torsion, int q) {
  long long count = 1;
  for (int i = 0; i < free_rank; ++i) count *= q;
  for (long long t : torsion) count *= std::gcd(t, static_cast<long long>(q));
  return count;
}

// Winding number by counting signed crossings of the horizontal ray to the
// right of `point`.
inline int ray_crossing_winding(const std::vector<Cplx>& values, Cplx point) {
  int w = 0;
  const std::size_t n = values.size();
  for (std::size_t m = 0; m < n; ++m) {
    const Cplx a = values[m] - point;
    const Cplx b = values[(m + 1) % n] - point;
    if (a.imag() <= 0 && b.imag() > 0) {
      const double x = a.real() + (b.real() - a.real()) * (-a.imag()) / (b.imag() - a.imag());
      if (x > 0) ++w;
    } else if (a.imag() > 0 && b.imag() <= 0) {
      const double x = a.real() + (b.real() - a.real()) * (-a.imag()) / (b.imag() - a.imag());
      if (x > 0) --w;
    }
  }
  return w;
}

// A compact word as (letter, sign) pairs, letters as lowercase chars.
struct Letter {
  char name;
  int sign;
};

inline std::vector<Letter> letters(const std::string& compact) {
  std::vector<Letter> out;
  for (char c : compact) {
    const bool upper = c >= 'A' && c <= 'Z';
    out.push_back({static_cast<char>(upper ? c - 'A' + 'a' : c), upper ? -1 : +1});
  }
  return out;
}

// Vertex count by breadth-first search over corner identifications. Corner m
// sits after letter m. Corner m-1 is the tail of letter m and corner m its head
// (read in the direction the letter points when its sign is +1).
inline int vertex_count(const std::string& compact) {
  const auto w = letters(compact);
  const int n = static_cast<int>(w.size());
  auto corner = [n](int m) { return ((m % n) + n) % n; };
  std::vector<std::vector<int>> adj(n);
  std::map<char, std::vector<int>> where;
  for (int m = 0; m < n; ++m) where[w[m].name].push_back(m);
  for (const auto& [name, pos] : where) {
    const int p = pos[0], q = pos[1];
    int tail_p = corner(p - 1), head_p = corner(p);
    int tail_q = corner(q - 1), head_q = corner(q);
    if (w[p].sign < 0) std::swap(tail_p, head_p);
    if (w[q].sign < 0) std::swap(tail_q, head_q);
    adj[tail_p].push_back(tail_q);
    adj[tail_q].push_back(tail_p);
    adj[head_p].push_back(head_q);
    adj[head_q].push_back(head_p);
  }
  std::vector<bool> seen(n, false);
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    std::queue<int> todo;
    todo.push(s);
    seen[s] = true;
    while (!todo.empty()) {
      const int v = todo.front();
      todo.pop();
      for (int u : adj[v])
        if (!seen[u]) {
          seen[u] = true;
          todo.push(u);
        }
    }
  }
  return components;
}

// Number of letters that occur twice with the same exponent.
inline int same_exponent_pairs(const std::string& compact) {
  std::map<char, int> sum;
  for (const auto& l : letters(compact)) sum[l.name] += l.sign;
  int k = 0;
  for (const auto& [name, s] : sum) k += (s != 0);
  return k;
}

// Classical K-groups of closed surfaces, as (free rank, torsion) pairs.
struct Groups {
  int k0_free;
  std::vector<long long> k0_torsion;
  int k1_free;
};

inline Groups torus_groups(int g) { return {2, {}, 2 * g}; }
inline Groups projective_groups(int n) { return {1, {2}, n - 1}; }
inline Groups sphere_groups() { return {2, {}, 0}; }

}  // namespace oracle
