#include "gradedalg/rational.hpp"

namespace gradedalg {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  // mpq set_str accepts more than we want (whitespace, hex); validate first.
  auto slash = s.find('/');
  auto digits_ok = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den))
    throw InputError("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);  // mpz_set_str rejects '+'
  if (den[0] == '+') den.erase(0, 1);
  mpq_class q;
  if (q.set_str(num + "/" + den, 10) != 0)
    throw InputError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0)
    throw InputError("zero denominator in rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

void vec_axpy(Vec& y, const Rat& a, const Vec& x) {
  if (y.size() != x.size()) throw InternalError("vec_axpy: size mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

}  // namespace gradedalg
