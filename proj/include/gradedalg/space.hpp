#pragma once

#include <string>
#include <vector>

#include "gradedalg/signs.hpp"

namespace gradedalg {

struct BasisElem {
  std::string name;
  Parity parity = 0;
  bool operator==(const BasisElem&) const = default;
};

/// Finite-dimensional Z2-graded space over Q with a named, ordered basis.
struct GradedSpace {
  std::vector<BasisElem> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  Parity parity(int i) const { return basis[i].parity; }
  const std::string& name(int i) const { return basis[i].name; }
  int index_of(const std::string& n) const;
  bool operator==(const GradedSpace&) const = default;
};

/// Validates distinct names and dimension >= 1.
GradedSpace make_space(std::vector<BasisElem> basis);

/// The three monomial flavors: plain tensor words, graded-exterior
/// monomials, graded-symmetric monomials. Also names the corresponding
/// coalgebras.
enum class Flavor { Tensor, Ext, Sym };

/// Basis indices (0-based), length = external degree of the word.
using Word = std::vector<int>;

Parity word_parity(const GradedSpace& sp, const Word& w);
Bidegree word_bidegree(const GradedSpace& sp, const Word& w);

struct Normalized {
  bool zero = false;
  int sign = 1;
  Word mono;  // canonical, valid when !zero
};

/// Canonical form of a tuple in the given flavor.
/// Ext: sort by adjacent swaps, each contributing -(-1)^{|u||w|};
///      zero when an even index repeats.
/// Sym: each swap contributes +(-1)^{|u||w|}; zero when an odd index repeats.
/// Tensor: identity.
Normalized normalize(const GradedSpace& sp, Flavor f, Word w);

bool is_canonical(const GradedSpace& sp, Flavor f, const Word& w);

/// All canonical monomials of the k-th power, lexicographic.
std::vector<Word> basis_words(const GradedSpace& sp, Flavor f, int k);

std::string word_str(const GradedSpace& sp, Flavor f, const Word& w);

}  // namespace gradedalg
