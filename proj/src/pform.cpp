#include "toricform/pform.hpp"

#include <cassert>
#include <functional>
#include <sstream>

namespace toricform {

void StandardPForm::add(const Subset& j, const Polynomial& g) {
  if (g.is_zero()) return;
  auto it = coeffs.find(j);
  if (it == coeffs.end()) {
    coeffs.emplace(j, g);
  } else {
    it->second = it->second + g;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

std::string StandardPForm::str(const std::vector<std::string>& names) const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, g] : coeffs) {
    if (!first) os << " + ";
    first = false;
    os << "(" << g.str(names) << ") ";
    for (size_t s = 0; s < j.size(); ++s) {
      if (s) os << "^";
      os << "d" << names[j[s]];
    }
  }
  return os.str();
}

static void validate_shape(int n, int p, const std::map<Subset, Polynomial>& coeffs) {
  if (p < 1 || p >= n) throw input_error("form degree must satisfy 1 <= p < n");
  for (const auto& [j, g] : coeffs) {
    if (static_cast<int>(j.size()) != p) throw input_error("wedge subset of wrong size");
    for (size_t s = 0; s < j.size(); ++s) {
      if (j[s] < 0 || j[s] >= n) throw input_error("wedge index out of range");
      if (s > 0 && j[s] <= j[s - 1]) throw input_error("wedge subset not strictly increasing");
    }
    if (g.nvars != n) throw input_error("coefficient variable count mismatch");
    if (g.is_zero()) throw input_error("zero coefficient stored");
  }
}

void validate(const StandardPForm& f) { validate_shape(f.n, f.p, f.coeffs); }

void validate(const LogPForm& f) {
  validate_shape(f.n, f.p, f.coeffs);
  for (const auto& [j, fj] : f.coeffs)
    for (const auto& [e, c] : fj.terms)
      for (int v : j)
        if (e[v] < 1)
          throw input_error("logarithmic coefficient not divisible by its wedge monomial");
}

LogPForm to_logarithmic(const StandardPForm& f) {
  validate(f);
  LogPForm out;
  out.n = f.n;
  out.p = f.p;
  for (const auto& [j, g] : f.coeffs) {
    Exp xj(f.n, Int(0));
    for (int v : j) xj[v] = 1;
    out.coeffs.emplace(j, g.mul_monomial(xj));
  }
  return out;
}

StandardPForm to_standard(const LogPForm& f) {
  validate(f);
  StandardPForm out;
  out.n = f.n;
  out.p = f.p;
  for (const auto& [j, fj] : f.coeffs) {
    Exp xj(f.n, Int(0));
    for (int v : j) xj[v] = 1;
    out.coeffs.emplace(j, fj.div_monomial(xj));
  }
  return out;
}

std::vector<Exp> support(const LogPForm& f) {
  std::set<Exp> s;
  for (const auto& [j, fj] : f.coeffs)
    for (const auto& [e, c] : fj.terms) s.insert(e);
  return std::vector<Exp>(s.begin(), s.end());
}

LogPForm restrict_support(const LogPForm& f, const std::set<Exp>& points) {
  LogPForm out;
  out.n = f.n;
  out.p = f.p;
  for (const auto& [j, fj] : f.coeffs) {
    Polynomial r = fj.restrict_to(points);
    if (!r.is_zero()) out.coeffs.emplace(j, r);
  }
  return out;
}

template <typename T>
static std::vector<T> eval_all(const StandardPForm& f, const std::vector<T>& point) {
  auto subs = subsets_of_size(f.n, f.p);
  std::vector<T> out;
  out.reserve(subs.size());
  for (const auto& j : subs) {
    auto it = f.coeffs.find(j);
    if (it == f.coeffs.end())
      out.push_back(T(0));
    else
      out.push_back(it->second.evaluate(point));
  }
  return out;
}

std::vector<Rat> evaluate_coefficients(const StandardPForm& f, const std::vector<Rat>& point) {
  return eval_all(f, point);
}

std::vector<Cplx> evaluate_coefficients(const StandardPForm& f, const std::vector<Cplx>& point) {
  return eval_all(f, point);
}

LogPForm substitute_pullback_oracle(const LogPForm& f, const IntMat& m) {
  validate(f);
  int n = f.n, p = f.p;
  assert(m.rows == n && m.cols == n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.a[i][j] < 0) throw input_error("substitution matrix must be nonnegative");
  Int d = det(m);
  if (d != 1 && d != -1) throw input_error("substitution matrix must be unimodular");

  StandardPForm g = to_standard(f);
  StandardPForm out;
  out.n = n;
  out.p = p;
  // pull g_J dX_J through x_j = Y^{row j}: each dx_{j_s} becomes
  // sum_k m[j_s][k] Y^{row j_s - e_k} dy_k, expanded over injective k-choices.
  for (const auto& [J, gj] : g.coeffs) {
    for (const auto& [e, c] : gj.terms) {
      // exponent of the substituted monomial X^e * X_J
      Exp base(n, Int(0));
      for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) base[k] += e[j] * m.a[j][k];
        for (int j : J) base[k] += m.a[j][k];
      }
      std::vector<int> ks(p, 0);
      std::function<void(int, const Rat&)> expand = [&](int s, const Rat& acc) {
        if (s == p) {
          std::vector<int> sorted = ks;
          int sign = sort_sign(sorted);
          if (sign == 0) return;
          Exp img = base;
          for (int k : ks) {
            img[k] -= 1;
            if (img[k] < 0) throw theorem_violation("negative exponent in substitution");
          }
          Rat coeff = acc * Rat(sign);
          Polynomial t = Polynomial::monomial(n, img, coeff);
          out.add(sorted, t);
          return;
        }
        int j = J[s];
        for (int k = 0; k < n; ++k) {
          if (m.a[j][k] == 0) continue;
          ks[s] = k;
          expand(s + 1, acc * Rat(m.a[j][k]));
        }
      };
      expand(0, c);
    }
  }
  return to_logarithmic(out);
}

}  // namespace toricform
