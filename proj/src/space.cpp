#include "gradedalg/space.hpp"

#include <set>

namespace gradedalg {

int GradedSpace::index_of(const std::string& n) const {
  for (int i = 0; i < dim(); ++i)
    if (basis[i].name == n) return i;
  return -1;
}

GradedSpace make_space(std::vector<BasisElem> basis) {
  if (basis.empty()) throw InputError("space needs dimension >= 1");
  std::set<std::string> names;
  for (const auto& b : basis) {
    if (b.name.empty()) throw InputError("empty basis name");
    if (!names.insert(b.name).second)
      throw InputError("duplicate basis name '" + b.name + "'");
    if (b.parity != 0 && b.parity != 1)
      throw InputError("parity must be 0 or 1 for '" + b.name + "'");
  }
  return GradedSpace{std::move(basis)};
}

Parity word_parity(const GradedSpace& sp, const Word& w) {
  int p = 0;
  for (int i : w) p += sp.parity(i);
  return par(p);
}

Bidegree word_bidegree(const GradedSpace& sp, const Word& w) {
  return {word_parity(sp, w), static_cast<int>(w.size())};
}

Normalized normalize(const GradedSpace& sp, Flavor f, Word w) {
  for (int i : w)
    if (i < 0 || i >= sp.dim()) throw InputError("basis index out of range");
  Normalized out;
  if (f == Flavor::Tensor) {
    out.mono = std::move(w);
    return out;
  }
  // Bubble sort; each adjacent swap of u,w contributes the flavor's factor.
  int n = static_cast<int>(w.size());
  int e = 0;
  for (int pass = 0; pass + 1 < n; ++pass)
    for (int i = 0; i + 1 < n - pass; ++i)
      if (w[i] > w[i + 1]) {
        e += sp.parity(w[i]) * sp.parity(w[i + 1]);
        if (f == Flavor::Ext) ++e;
        std::swap(w[i], w[i + 1]);
      }
  for (int i = 0; i + 1 < n; ++i)
    if (w[i] == w[i + 1]) {
      bool odd = sp.parity(w[i]) == 1;
      // Squares vanish for even indices in the exterior algebra and for
      // odd indices in the symmetric algebra.
      if ((f == Flavor::Ext && !odd) || (f == Flavor::Sym && odd)) {
        out.zero = true;
        return out;
      }
    }
  out.sign = (e & 1) ? -1 : 1;
  out.mono = std::move(w);
  return out;
}

bool is_canonical(const GradedSpace& sp, Flavor f, const Word& w) {
  for (int i : w)
    if (i < 0 || i >= sp.dim()) return false;
  if (f == Flavor::Tensor) return true;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) return false;
    if (w[i] == w[i + 1]) {
      bool odd = sp.parity(w[i]) == 1;
      if ((f == Flavor::Ext && !odd) || (f == Flavor::Sym && odd)) return false;
    }
  }
  return true;
}

namespace {
void enumerate_rec(const GradedSpace& sp, Flavor f, int k, Word& cur,
                   std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  int lo = (f == Flavor::Tensor || cur.empty()) ? 0 : cur.back();
  for (int i = lo; i < sp.dim(); ++i) {
    if (f != Flavor::Tensor && !cur.empty() && i == cur.back()) {
      bool odd = sp.parity(i) == 1;
      if ((f == Flavor::Ext && !odd) || (f == Flavor::Sym && odd)) continue;
    }
    cur.push_back(i);
    enumerate_rec(sp, f, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Word> basis_words(const GradedSpace& sp, Flavor f, int k) {
  if (k < 0) throw InputError("basis_words: arity must be >= 0");
  if (k == 0) return {Word{}};
  std::vector<Word> out;
  Word cur;
  enumerate_rec(sp, f, k, cur, out);
  return out;
}

std::string word_str(const GradedSpace& sp, Flavor f, const Word& w) {
  const char* sep = f == Flavor::Tensor ? "*" : (f == Flavor::Ext ? "^" : ".");
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += sep;
    s += sp.name(w[i]);
  }
  return s;
}

}  // namespace gradedalg
