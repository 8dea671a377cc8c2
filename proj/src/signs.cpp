#include "gradedalg/signs.hpp"

#include <algorithm>
#include <numeric>

namespace gradedalg {

Parity grading_pairing(GradingForm f, Bidegree a, Bidegree b) {
  switch (f) {
    case GradingForm::Z2:
      return par(a.parity * b.parity);
    case GradingForm::Z2Z_first:
      return par(a.parity * b.parity + a.degree * b.degree);
    case GradingForm::Z2Z_second:
      return par((a.parity + a.degree) * (b.parity + b.degree));
  }
  return 0;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (size() != inner.size()) throw InternalError("compose: size mismatch");
  Permutation p;
  p.images.resize(size());
  for (int i = 1; i <= size(); ++i) p.images[i - 1] = (*this)(inner(i));
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images.resize(size());
  for (int i = 1; i <= size(); ++i) p.images[(*this)(i)-1] = i;
  return p;
}

bool Permutation::valid() const {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > size() || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

int perm_sign(const Permutation& s) {
  int inv = 0;
  int n = s.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (s(i) > s(j)) ++inv;
  return (inv & 1) ? -1 : 1;
}

std::vector<Permutation> unshuffles(int p, int q) {
  if (p < 1 || q < 0) throw InputError("unshuffles: need p >= 1, q >= 0");
  int n = p + q;
  std::vector<Permutation> out;
  // Choose the first block as a p-subset of 1..n; both blocks ascending.
  std::vector<int> pick(p);
  std::iota(pick.begin(), pick.end(), 1);
  while (true) {
    Permutation s;
    s.images = pick;
    std::vector<bool> used(n + 1, false);
    for (int v : pick) used[v] = true;
    for (int v = 1; v <= n; ++v)
      if (!used[v]) s.images.push_back(v);
    out.push_back(std::move(s));
    // next p-subset in lexicographic order
    int i = p - 1;
    while (i >= 0 && pick[i] == n - (p - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < p; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation{v});
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

int koszul_sign(const Permutation& s, const std::vector<Parity>& parities,
                bool include_perm_sign) {
  int n = s.size();
  if (static_cast<int>(parities.size()) != n)
    throw InputError("koszul_sign: parity count does not match permutation size");
  // Product over inversions of (-1)^{|v_{s(i)}| |v_{s(j)}|}; equivalent to
  // accumulating one adjacent-swap factor at a time.
  int e = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (s(i) > s(j)) {
        e += parities[s(i) - 1] * parities[s(j) - 1];
        if (include_perm_sign) ++e;
      }
  return (e & 1) ? -1 : 1;
}

}  // namespace gradedalg
