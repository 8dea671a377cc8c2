#include "gradedalg/cochain.hpp"

namespace gradedalg {

std::vector<int> Cochain::arities() const {
  std::vector<int> out;
  for (const auto& [k, c] : comps) out.push_back(k);
  return out;
}

Bidegree Cochain::bidegree(int arity) const {
  auto it = comps.find(arity);
  if (it == comps.end()) throw InternalError("bidegree: arity not stored");
  return {it->second.parity, arity - 1};
}

Parity Cochain::parity() const {
  Parity p = 0;
  bool first = true;
  for (const auto& [k, c] : comps) {
    if (first) {
      p = c.parity;
      first = false;
    } else if (c.parity != p) {
      throw InputError("cochain has components of mixed parity");
    }
  }
  return p;
}

void Cochain::set_value(int arity, Parity map_parity, const Word& mono,
                        Vec value) {
  if (arity < 1 || static_cast<int>(mono.size()) != arity)
    throw InputError("set_value: arity/monomial length mismatch");
  if (!is_canonical(space, flavor, mono))
    throw InputError("set_value: monomial not canonical");
  if (static_cast<int>(value.size()) != codim())
    throw InputError("set_value: value dimension mismatch");
  Parity wp = word_parity(space, mono);
  for (int b = 0; b < codim(); ++b) {
    if (value[b] == 0) continue;
    Parity out_p = scalar ? 0 : space.parity(b);
    if (par(out_p + wp) != par(map_parity))
      throw InputError("set_value: value violates declared parity");
  }
  if (vec_is_zero(value)) return;
  auto it = comps.find(arity);
  if (it == comps.end()) {
    Component c;
    c.parity = par(map_parity);
    c.values[mono] = std::move(value);
    comps.emplace(arity, std::move(c));
  } else {
    if (it->second.parity != par(map_parity))
      throw InputError("set_value: parity clash within one arity");
    it->second.values[mono] = std::move(value);
  }
}

Vec Cochain::evaluate(const Word& args) const {
  Vec zero(codim(), Rat(0));
  auto it = comps.find(static_cast<int>(args.size()));
  if (it == comps.end()) return zero;
  Normalized n = normalize(space, flavor, args);
  if (n.zero) return zero;
  auto jt = it->second.values.find(n.mono);
  if (jt == it->second.values.end()) return zero;
  Vec out = jt->second;
  if (n.sign < 0)
    for (auto& x : out) x = -x;
  return out;
}

Cochain& Cochain::add_scaled(const Cochain& o, const Rat& c) {
  if (c == 0) return *this;
  if (!(space == o.space) || flavor != o.flavor || scalar != o.scalar)
    throw InputError("cochain addition: incompatible shapes");
  for (const auto& [k, comp] : o.comps) {
    auto it = comps.find(k);
    if (it == comps.end()) {
      Component nc;
      nc.parity = comp.parity;
      for (const auto& [w, v] : comp.values) {
        Vec sv = v;
        for (auto& x : sv) x *= c;
        nc.values[w] = std::move(sv);
      }
      comps.emplace(k, std::move(nc));
    } else {
      if (it->second.parity != comp.parity)
        throw InputError("cochain addition: parity clash at one arity");
      for (const auto& [w, v] : comp.values) {
        Vec& dst = it->second.values[w];
        if (dst.empty()) dst.assign(codim(), Rat(0));
        vec_axpy(dst, c, v);
      }
    }
  }
  prune();
  return *this;
}

Cochain& Cochain::scale(const Rat& c) {
  if (c == 0) {
    comps.clear();
    return *this;
  }
  for (auto& [k, comp] : comps)
    for (auto& [w, v] : comp.values)
      for (auto& x : v) x *= c;
  return *this;
}

void Cochain::prune() {
  for (auto it = comps.begin(); it != comps.end();) {
    auto& vals = it->second.values;
    for (auto jt = vals.begin(); jt != vals.end();)
      jt = vec_is_zero(jt->second) ? vals.erase(jt) : std::next(jt);
    it = vals.empty() ? comps.erase(it) : std::next(it);
  }
}

Cochain zero_cochain(const GradedSpace& sp, Flavor f, bool scalar) {
  Cochain c;
  c.space = sp;
  c.flavor = f;
  c.scalar = scalar;
  return c;
}

bool multilinear_equal(const Cochain& a, const Cochain& b) {
  if (!(a.space == b.space) || a.scalar != b.scalar) return false;
  std::vector<int> ks = a.arities();
  for (int k : b.arities())
    if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
  for (int k : ks)
    for (const Word& w : basis_words(a.space, Flavor::Tensor, k))
      if (a.evaluate(w) != b.evaluate(w)) return false;
  return true;
}

InnerProduct make_inner_product(const GradedSpace& sp, Matrix gram) {
  int n = sp.dim();
  if (gram.rows != n || gram.cols != n)
    throw InputError("inner product matrix has wrong shape");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (sp.parity(i) != sp.parity(j) && gram.at(i, j) != 0)
        throw InputError("inner product is not even");
      Rat rhs = gram.at(j, i);
      if (par(sp.parity(i) * sp.parity(j)) == 1) rhs = -rhs;
      if (gram.at(i, j) != rhs)
        throw InputError("inner product is not graded-symmetric");
    }
  if (rank(gram) != n) throw InputError("inner product is degenerate");
  Matrix gt(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gt.at(i, j) = gram.at(j, i);
  // invert gram^T column by column
  Matrix inv(n, n);
  for (int j = 0; j < n; ++j) {
    Vec e(n, Rat(0)), x;
    e[j] = 1;
    if (!solve(gt, e, x)) throw InternalError("inner product inversion failed");
    for (int i = 0; i < n; ++i) inv.at(i, j) = x[i];
  }
  return InnerProduct{sp, std::move(gram), std::move(inv)};
}

Rat ip_left(const InnerProduct& ip, const Vec& v, int j) {
  Rat out(0);
  for (int b = 0; b < ip.space.dim(); ++b)
    if (v[b] != 0) out += v[b] * ip.gram.at(b, j);
  return out;
}

Rat ip_right(const InnerProduct& ip, int i, const Vec& v) {
  Rat out(0);
  for (int b = 0; b < ip.space.dim(); ++b)
    if (v[b] != 0) out += ip.gram.at(i, b) * v[b];
  return out;
}

Cochain tilde(const Cochain& phi, const InnerProduct& ip) {
  if (phi.scalar) throw InputError("tilde expects a vector-valued cochain");
  if (!(phi.space == ip.space)) throw InputError("tilde: space mismatch");
  Cochain out = zero_cochain(phi.space, Flavor::Tensor, true);
  for (const auto& [k, comp] : phi.comps) {
    for (const Word& w : basis_words(phi.space, Flavor::Tensor, k + 1)) {
      Word head(w.begin(), w.end() - 1);
      Rat v = ip_left(ip, phi.evaluate(head), w.back());
      if (v != 0) out.set_value(k + 1, comp.parity, w, {v});
    }
  }
  return out;
}

Cochain untilde(const Cochain& f, const InnerProduct& ip) {
  if (!f.scalar) throw InputError("untilde expects a scalar cochain");
  if (!(f.space == ip.space)) throw InputError("untilde: space mismatch");
  if (f.flavor == Flavor::Sym)
    throw InputError("untilde: no symmetric-flavor correspondence");
  Cochain out = zero_cochain(f.space, f.flavor, false);
  int dim = f.space.dim();
  for (const auto& [N, comp] : f.comps) {
    if (N < 2) throw InputError("untilde needs arity >= 2");
    for (const Word& w : basis_words(f.space, f.flavor, N - 1)) {
      Vec y(dim);
      for (int j = 0; j < dim; ++j) {
        Word full = w;
        full.push_back(j);
        y[j] = f.evaluate(full)[0];
      }
      Vec x = mat_vec(ip.inv_gram_t, y);
      out.set_value(N - 1, comp.parity, w, std::move(x));
    }
  }
  return out;
}

Cochain ext_scalar_from_tilde(const Cochain& phi, const InnerProduct& ip) {
  if (phi.flavor != Flavor::Ext)
    throw InputError("ext_scalar_from_tilde expects an ext-flavor cochain");
  Cochain t = tilde(phi, ip);
  Cochain out = zero_cochain(phi.space, Flavor::Ext, true);
  for (const auto& [N, comp] : t.comps)
    for (const Word& w : basis_words(phi.space, Flavor::Ext, N)) {
      Rat v = t.evaluate(w)[0];
      if (v != 0) out.set_value(N, comp.parity, w, {v});
    }
  return out;
}

CyclicReport is_cyclic(const Cochain& phi, const InnerProduct& ip) {
  if (phi.scalar) throw InputError("is_cyclic expects a vector-valued cochain");
  CyclicReport rep;
  for (const auto& [k, comp] : phi.comps) {
    for (const Word& w : basis_words(phi.space, Flavor::Tensor, k + 1)) {
      Word head(w.begin(), w.end() - 1);
      Rat lhs = ip_left(ip, phi.evaluate(head), w.back());
      Word tail(w.begin() + 1, w.end());
      Rat rhs = ip_right(ip, w.front(), phi.evaluate(tail));
      if (par(k + phi.space.parity(w.front()) * comp.parity) == 1) rhs = -rhs;
      if (lhs != rhs) {
        rep.cyclic = false;
        rep.arity = k;
        rep.counterexample = w;
        return rep;
      }
    }
  }
  return rep;
}

CyclicReport is_cyclic_scalar(const Cochain& f) {
  if (!f.scalar || f.flavor != Flavor::Tensor)
    throw InputError("is_cyclic_scalar expects a scalar tensor cochain");
  CyclicReport rep;
  for (const auto& [N, comp] : f.comps) {
    for (const Word& w : basis_words(f.space, Flavor::Tensor, N)) {
      Word rot;
      rot.push_back(w.back());
      rot.insert(rot.end(), w.begin(), w.end() - 1);
      int rest = 0;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) rest += f.space.parity(w[i]);
      Rat rhs = f.evaluate(rot)[0];
      if (par((N - 1) + f.space.parity(w.back()) * rest) == 1) rhs = -rhs;
      if (f.evaluate(w)[0] != rhs) {
        rep.cyclic = false;
        rep.arity = N;
        rep.counterexample = w;
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace gradedalg
