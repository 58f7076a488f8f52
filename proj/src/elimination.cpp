#include "toricform/elimination.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace toricform {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat UniPoly::lc() const {
  if (c.empty()) throw input_error("zero polynomial has no leading coefficient");
  return c.back();
}

Rat UniPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

Cplx UniPoly::eval(const Cplx& x) const {
  Cplx r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + to_double(*it);
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
  for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scale(Rat(-1)); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rat> r(c.size() + o.c.size() - 1, Rat(0));
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::scale(const Rat& s) const {
  if (s == 0) return UniPoly();
  std::vector<Rat> r = c;
  for (auto& x : r) x *= s;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scale(Rat(1) / lc());
}

UniPoly UniPoly::derivative() const {
  if (c.size() <= 1) return UniPoly();
  std::vector<Rat> r(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * Rat(Int(i));
  return UniPoly(std::move(r));
}

int UniPoly::valuation() const {
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return static_cast<int>(i);
  return 0;
}

UniPoly UniPoly::strip_valuation() const {
  int v = valuation();
  if (v == 0) return *this;
  return UniPoly(std::vector<Rat>(c.begin() + v, c.end()));
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c[i] == 0) continue;
    Rat a = c[i];
    if (first) {
      if (a < 0) out << "-";
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    Rat mag = a < 0 ? -a : a;
    bool unit = mag == 1 && i > 0;
    if (!unit) out << rat_string(mag);
    if (i > 0) {
      if (!unit) out << "*";
      out << "x";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

UniPoly uni_rem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw input_error("division by the zero polynomial");
  UniPoly r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rat q = r.lc() / b.lc();
    int shift = r.degree() - b.degree();
    std::vector<Rat> t(shift + 1, Rat(0));
    t[shift] = q;
    r = r - b * UniPoly(std::move(t));
  }
  return r;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Rat uni_resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return Rat(0);
  int m = a.degree(), n = b.degree();
  if (m == 0) return pow_rat(a.c[0], Int(n));
  if (n == 0) return pow_rat(b.c[0], Int(m));

  int size = m + n;
  std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size, Rat(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + m - i] = a.c[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + n - i] = b.c[i];

  Rat detv = 1;
  for (int col = 0; col < size; ++col) {
    int piv = -1;
    for (int r = col; r < size; ++r)
      if (s[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(s[piv], s[col]);
      detv = -detv;
    }
    detv *= s[col][col];
    Rat inv = Rat(1) / s[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (s[r][col] == 0) continue;
      Rat f = s[r][col] * inv;
      for (int k = col; k < size; ++k) s[r][k] -= f * s[col][k];
    }
  }
  return detv;
}

UniPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.size() != ys.size()) throw input_error("interpolation point mismatch");
  UniPoly acc;
  for (size_t i = 0; i < xs.size(); ++i) {
    UniPoly basis({Rat(1)});
    Rat denom = 1;
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * UniPoly({-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    if (denom == 0) throw input_error("repeated interpolation node");
    acc = acc + basis.scale(ys[i] / denom);
  }
  return acc;
}

std::vector<Cplx> uni_roots(const UniPoly& a) {
  int n = a.degree();
  if (n < 1) throw input_error("root finding needs a nonconstant polynomial");
  std::vector<Cplx> p(n + 1);
  for (int i = 0; i <= n; ++i) p[i] = to_double(a.c[i]) / to_double(a.lc());

  double radius = 1.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, 1.0 + std::abs(p[i]));
  std::vector<Cplx> z(n);
  Cplx seed(0.4, 0.9);
  Cplx w = seed;
  for (int i = 0; i < n; ++i) {
    z[i] = radius * w;
    w *= seed;
  }

  auto value = [&](Cplx x) {
    Cplx r = 0;
    for (int i = n; i >= 0; --i) r = r * x + p[i];
    return r;
  };
  for (int step = 0; step < 500; ++step) {
    double moved = 0;
    for (int i = 0; i < n; ++i) {
      Cplx denom = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (std::abs(denom) < 1e-300) continue;
      Cplx delta = value(z[i]) / denom;
      z[i] -= delta;
      moved = std::max(moved, std::abs(delta) / (1.0 + std::abs(z[i])));
    }
    if (moved < 1e-14) break;
  }
  return z;
}

UniPoly deflate(const UniPoly& a, const Rat& r) {
  if (a.is_zero()) throw input_error("cannot deflate the zero polynomial");
  std::vector<Rat> q(a.c.size() - 1, Rat(0));
  Rat carry = 0;
  for (int i = a.degree(); i >= 1; --i) {
    carry = a.c[i] + carry * r;
    q[i - 1] = carry;
  }
  if (a.c[0] + carry * r != 0) throw theorem_violation("deflation by a non-root");
  return UniPoly(std::move(q));
}

namespace {

// rational square root when one exists
bool rat_sqrt(const Rat& v, Rat& out) {
  if (v < 0) return false;
  mpz_class num = v.get_num(), den = v.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  out = make_rat(rn, rd);
  return true;
}

// continued fraction convergents of a floating approximation
std::vector<Rat> convergents(double v, int depth = 18) {
  std::vector<Rat> out;
  if (!std::isfinite(v)) return out;
  double x = v;
  Int h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int i = 0; i < depth; ++i) {
    double fl = std::floor(x);
    if (std::abs(fl) > 9e15) break;
    Int ai(static_cast<long>(fl));
    Int h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (k1 != 0) out.push_back(make_rat(h1, k1));
    double frac = x - fl;
    if (frac < 1e-12) break;
    x = 1.0 / frac;
  }
  return out;
}

// one rational root of w (nonconstant, nonzero constant term), if found
bool find_rational_root(const UniPoly& w, Rat& out) {
  int d = w.degree();
  if (d == 1) {
    out = -w.c[0] / w.c[1];
    return true;
  }
  if (d == 2) {
    Rat disc = w.c[1] * w.c[1] - Rat(4) * w.c[2] * w.c[0];
    Rat s;
    if (!rat_sqrt(disc, s)) return false;
    out = (-w.c[1] + s) / (Rat(2) * w.c[2]);
    return true;
  }
  for (const Cplx& z : uni_roots(w)) {
    if (std::abs(z.imag()) > 1e-6) continue;
    for (const Rat& cand : convergents(z.real())) {
      if (w.eval(cand) == 0) {
        out = cand;
        return true;
      }
    }
    Rat rounded(Int(static_cast<long>(std::llround(z.real()))));
    if (w.eval(rounded) == 0) {
      out = rounded;
      return true;
    }
  }
  return false;
}

}  // namespace

RootSplit split_rational_roots(const UniPoly& a) {
  if (a.is_zero()) throw input_error("zero polynomial has every root");
  RootSplit out;
  UniPoly w = a;
  int val = w.valuation();
  if (val > 0) {
    out.roots.push_back({Rat(0), val});
    w = w.strip_valuation();
  }
  while (w.degree() >= 1) {
    Rat r;
    if (!find_rational_root(w, r)) break;
    int mult = 0;
    while (w.degree() >= 1 && w.eval(r) == 0) {
      w = deflate(w, r);
      ++mult;
    }
    out.roots.push_back({r, mult});
  }
  out.remainder = w;
  return out;
}

int degree_in(const Polynomial& f, int v) {
  Int d = -1;
  for (const auto& [e, c] : f.terms) d = std::max(d, e[v]);
  if (d < 0) return -1;
  return static_cast<int>(d.get_si());
}

UniPoly to_univariate(const Polynomial& f, int v) {
  std::vector<Rat> c;
  for (const auto& [e, coef] : f.terms) {
    for (size_t k = 0; k < e.size(); ++k)
      if (static_cast<int>(k) != v && e[k] != 0)
        throw input_error("polynomial involves more than the chosen variable");
    size_t idx = e[v].get_ui();
    if (c.size() <= idx) c.resize(idx + 1, Rat(0));
    c[idx] += coef;
  }
  return UniPoly(std::move(c));
}

UniPoly specialize(const Polynomial& f, int fixed_var, const Rat& value) {
  int other = -1;
  for (int k = 0; k < f.nvars; ++k)
    if (k != fixed_var) {
      if (other >= 0 && degree_in(f, k) > 0)
        throw input_error("specialization leaves more than one variable");
      if (degree_in(f, k) > 0) other = k;
    }
  std::vector<Rat> c;
  for (const auto& [e, coef] : f.terms) {
    size_t idx = other >= 0 ? e[other].get_ui() : 0;
    if (c.size() <= idx) c.resize(idx + 1, Rat(0));
    c[idx] += coef * pow_rat(value, e[fixed_var]);
  }
  return UniPoly(std::move(c));
}

UniPoly coeff_of_power(const Polynomial& f, int v, const Int& power) {
  int other = -1;
  for (int k = 0; k < f.nvars; ++k)
    if (k != v && degree_in(f, k) > 0) {
      if (other >= 0) throw input_error("coefficient extraction needs two variables");
      other = k;
    }
  std::vector<Rat> c;
  for (const auto& [e, coef] : f.terms) {
    if (e[v] != power) continue;
    size_t idx = other >= 0 ? e[other].get_ui() : 0;
    if (c.size() <= idx) c.resize(idx + 1, Rat(0));
    c[idx] += coef;
  }
  return UniPoly(std::move(c));
}

UniPoly resultant_eliminating_y(const Polynomial& f, const Polynomial& g) {
  if (f.nvars != 2 || g.nvars != 2) throw input_error("resultant expects two variables");
  int dfy = degree_in(f, 1), dgy = degree_in(g, 1);
  if (dfy < 0 || dgy < 0) throw input_error("resultant of a zero polynomial");
  int dfx = std::max(degree_in(f, 0), 0), dgx = std::max(degree_in(g, 0), 0);

  UniPoly lcf = coeff_of_power(f, 1, Int(dfy));
  UniPoly lcg = coeff_of_power(g, 1, Int(dgy));

  // degree bound for the resultant in x, then one extra sample for safety
  int bound = dfy * dgx + dgy * dfx + 1;
  std::vector<Rat> xs, ys;
  for (long k = 0; static_cast<int>(xs.size()) < bound; ++k) {
    Rat x0 = Rat(Int(k % 2 == 0 ? k / 2 + 1 : -(k / 2 + 1)));
    if (lcf.eval(x0) == 0 || lcg.eval(x0) == 0) continue;
    xs.push_back(x0);
    ys.push_back(uni_resultant(specialize(f, 0, x0), specialize(g, 0, x0)));
    if (k > 8 * bound + 64) throw theorem_violation("could not find good sample points");
  }
  return interpolate(xs, ys);
}

}  // namespace toricform
