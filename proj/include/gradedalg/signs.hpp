#pragma once

#include <vector>

#include "gradedalg/rational.hpp"

namespace gradedalg {

/// Parity of a homogeneous element: 0 (even) or 1 (odd), arithmetic mod 2.
using Parity = int;

inline Parity par(int v) { return v & 1; }

/// (parity, external degree). A k-ary cochain has external degree k-1;
/// a word of length n has external degree n.
struct Bidegree {
  Parity parity = 0;
  int degree = 0;

  Bidegree operator+(const Bidegree& o) const {
    return {par(parity + o.parity), degree + o.degree};
  }
  bool operator==(const Bidegree&) const = default;
};

/// The three Z2-valued pairings on the grading groups. Z2 pairs parities;
/// the two Z2xZ forms pair bidegrees componentwise resp. through the sum
/// of the components.
enum class GradingForm { Z2, Z2Z_first, Z2Z_second };

Parity grading_pairing(GradingForm f, Bidegree a, Bidegree b);

/// Permutation in one-line image notation, 1-indexed: images[i-1] = s(i).
struct Permutation {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i - 1]; }  // 1-indexed
  bool operator==(const Permutation&) const = default;

  static Permutation identity(int n);
  /// (this . inner)(i) = this(inner(i)).
  Permutation compose(const Permutation& inner) const;
  Permutation inverse() const;
  bool valid() const;
};

/// Sign (-1)^s as +1/-1, via inversion count.
int perm_sign(const Permutation& s);

/// All permutations increasing on positions 1..p and p+1..p+q, ordered
/// lexicographically by the first block. Size binomial(p+q, p).
std::vector<Permutation> unshuffles(int p, int q);

/// All of S_n in lexicographic order (test sizes only).
std::vector<Permutation> all_permutations(int n);

/// Koszul sign eps(s; v_1..v_n): one factor (-1)^{|u||w|} per adjacent
/// transposition of u,w in a decomposition of s; the result is
/// decomposition-independent. With include_perm_sign, multiplied by (-1)^s.
int koszul_sign(const Permutation& s, const std::vector<Parity>& parities,
                bool include_perm_sign = false);

/// (v_{s(1)}, ..., v_{s(n)}).
template <typename T>
std::vector<T> apply_permutation(const Permutation& s, const std::vector<T>& v) {
  std::vector<T> out(v.size());
  for (int i = 1; i <= s.size(); ++i) out[i - 1] = v[s(i) - 1];
  return out;
}

}  // namespace gradedalg
