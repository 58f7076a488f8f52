#include "toricform/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace toricform {

Exp exp_add(const Exp& a, const Exp& b) {
  assert(a.size() == b.size());
  Exp r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Polynomial Polynomial::monomial(int n, const Exp& e, const Rat& c) {
  Polynomial p(n);
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::constant(int n, const Rat& c) { return monomial(n, Exp(n, Int(0)), c); }

bool Polynomial::is_constant() const {
  if (terms.empty()) return true;
  if (terms.size() > 1) return false;
  for (const auto& x : terms.begin()->first)
    if (x != 0) return false;
  return true;
}

void Polynomial::add_term(const Exp& e, const Rat& c) {
  assert(static_cast<int>(e.size()) == nvars);
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  assert(nvars == o.nvars);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars);
  for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  assert(nvars == o.nvars);
  Polynomial r(nvars);
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) r.add_term(exp_add(e1, e2), c1 * c2);
  return r;
}

Polynomial Polynomial::scale(const Rat& c) const {
  Polynomial r(nvars);
  if (c == 0) return r;
  for (const auto& [e, k] : terms) r.terms.emplace(e, k * c);
  return r;
}

Polynomial Polynomial::mul_monomial(const Exp& e) const {
  Polynomial r(nvars);
  for (const auto& [e1, c] : terms) r.terms.emplace(exp_add(e1, e), c);
  return r;
}

bool Polynomial::divisible_by_monomial(const Exp& e) const {
  for (const auto& [e1, c] : terms)
    for (size_t i = 0; i < e.size(); ++i)
      if (e1[i] < e[i]) return false;
  return true;
}

Polynomial Polynomial::div_monomial(const Exp& e) const {
  Polynomial r(nvars);
  for (const auto& [e1, c] : terms) {
    Exp q(nvars);
    for (int i = 0; i < nvars; ++i) {
      q[i] = e1[i] - e[i];
      if (q[i] < 0) throw theorem_violation("inexact monomial division");
    }
    r.terms.emplace(q, c);
  }
  return r;
}

Exp Polynomial::monomial_content() const {
  Exp m(nvars, Int(0));
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int i = 0; i < nvars; ++i)
        if (e[i] < m[i]) m[i] = e[i];
    }
  }
  return m;
}

Polynomial Polynomial::strip_content() const {
  if (terms.empty()) return *this;
  return div_monomial(monomial_content());
}

std::vector<int> Polynomial::active_vars() const {
  std::vector<int> out;
  for (int i = 0; i < nvars; ++i) {
    for (const auto& [e, c] : terms)
      if (e[i] > 0) {
        out.push_back(i);
        break;
      }
  }
  return out;
}

Polynomial Polynomial::restrict_to(const std::set<Exp>& exps) const {
  Polynomial r(nvars);
  for (const auto& [e, c] : terms)
    if (exps.count(e)) r.terms.emplace(e, c);
  return r;
}

Polynomial Polynomial::set_zero(const std::vector<int>& s) const {
  Polynomial r(nvars);
  for (const auto& [e, c] : terms) {
    bool keep = true;
    for (int v : s)
      if (e[v] > 0) {
        keep = false;
        break;
      }
    if (keep) r.terms.emplace(e, c);
  }
  return r;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
  assert(static_cast<int>(point.size()) == nvars);
  Rat total = 0;
  for (const auto& [e, c] : terms) {
    Rat v = c;
    for (int i = 0; i < nvars; ++i) {
      if (e[i] == 0) continue;
      v *= pow_rat(point[i], e[i]);
    }
    total += v;
  }
  return total;
}

Cplx Polynomial::evaluate(const std::vector<Cplx>& point) const {
  assert(static_cast<int>(point.size()) == nvars);
  Cplx total(0.0, 0.0);
  for (const auto& [e, c] : terms) {
    Cplx v(to_double(c), 0.0);
    for (int i = 0; i < nvars; ++i) {
      if (e[i] == 0) continue;
      v *= pow_cplx(point[i], e[i]);
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(nvars);
  for (const auto& [e, c] : terms) {
    if (e[var] == 0) continue;
    Exp d = e;
    d[var] -= 1;
    r.add_term(d, c * Rat(e[var]));
  }
  return r;
}

Polynomial Polynomial::monomial_substitute(const IntMat& m) const {
  assert(m.rows == nvars);
  Polynomial r(m.cols);
  for (const auto& [e, c] : terms) {
    Exp img(m.cols, Int(0));
    for (int k = 0; k < m.cols; ++k)
      for (int j = 0; j < nvars; ++j) img[k] += e[j] * m.a[j][k];
    r.add_term(img, c);
  }
  return r;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  assert(static_cast<int>(names.size()) == nvars);
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const Exp& e = it->first;
    Rat c = it->second;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (neg) c = -c;
    std::vector<std::string> factors;
    bool unit = (c == 1);
    if (!unit) factors.push_back(rat_string(c));
    for (int i = 0; i < nvars; ++i) {
      if (e[i] == 0) continue;
      if (e[i] == 1)
        factors.push_back(names[i]);
      else
        factors.push_back(names[i] + "^" + e[i].get_str());
    }
    if (factors.empty()) factors.push_back("1");
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

}  // namespace toricform
