#include "toricform/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace toricform {

namespace {

enum class Tok { ident, number, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

[[noreturn]] void fail_at(int line, int col, const std::string& msg) {
  std::ostringstream os;
  os << "line " << line << ", col " << col << ": " << msg;
  throw input_error(os.str());
}

[[noreturn]] void fail_at(const Token& t, const std::string& msg) { fail_at(t.line, t.col, msg); }

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// tokenize an expression, reporting positions relative to its place in the file
std::vector<Token> lex(const std::string& src, int line, int col) {
  std::vector<Token> out;
  size_t pos = 0;
  auto advance = [&] {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  };
  while (pos < src.size()) {
    char c = src[pos];
    if (c == '#') {
      while (pos < src.size() && src[pos] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    int l = line, cl = col;
    if (ident_start(c)) {
      std::string t;
      while (pos < src.size() && ident_char(src[pos])) {
        t += src[pos];
        advance();
      }
      out.push_back({Tok::ident, t, l, cl});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string t;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        t += src[pos];
        advance();
      }
      out.push_back({Tok::number, t, l, cl});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '^': k = Tok::caret; break;
      case '/': k = Tok::slash; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default: fail_at(l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), l, cl});
    advance();
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

struct ExprParser {
  std::vector<Token> toks;
  size_t i = 0;
  const std::vector<std::string>& vars;
  std::map<std::string, int> index;
  int n;

  ExprParser(std::vector<Token> t, const std::vector<std::string>& v)
      : toks(std::move(t)), vars(v), n(static_cast<int>(v.size())) {
    for (int k = 0; k < n; ++k) index.emplace(vars[k], k);
  }

  const Token& peek() const { return toks[i]; }
  Token take() { return toks[i++]; }

  int variable_of(const Token& t) const {
    auto it = index.find(t.text);
    return it == index.end() ? -1 : it->second;
  }

  // d<var> where <var> is declared and not itself shadowed by a variable
  int differential_of(const Token& t) const {
    if (variable_of(t) >= 0) return -1;
    if (t.text.size() < 2 || t.text[0] != 'd') return -1;
    auto it = index.find(t.text.substr(1));
    return it == index.end() ? -1 : it->second;
  }

  bool starts_factor() const {
    const Token& t = peek();
    if (t.kind == Tok::number || t.kind == Tok::lparen) return true;
    return t.kind == Tok::ident && variable_of(t) >= 0;
  }

  unsigned long small_exponent() {
    if (peek().kind != Tok::number) fail_at(peek(), "expected a nonnegative integer exponent");
    Int e(take().text);
    if (!e.fits_ulong_p()) fail_at(toks[i - 1], "exponent too large");
    return e.get_ui();
  }

  Rat number_literal() {
    Token t = take();
    Int num(t.text);
    if (peek().kind == Tok::slash) {
      take();
      if (peek().kind != Tok::number) fail_at(peek(), "expected a denominator");
      Token d = take();
      Int den(d.text);
      if (den == 0) fail_at(d, "zero denominator");
      Rat q(num, den);
      q.canonicalize();
      return q;
    }
    return Rat(num);
  }

  Polynomial factor() {
    const Token& t = peek();
    Polynomial base(n);
    if (t.kind == Tok::number) {
      base = Polynomial::constant(n, number_literal());
    } else if (t.kind == Tok::lparen) {
      take();
      base = additive();
      if (peek().kind != Tok::rparen) fail_at(peek(), "expected ')'");
      take();
    } else if (t.kind == Tok::ident) {
      int v = variable_of(t);
      if (v < 0) {
        if (differential_of(t) >= 0)
          fail_at(t, "differential not allowed inside a coefficient");
        fail_at(t, "unknown variable '" + t.text + "'");
      }
      take();
      Exp e(n, Int(0));
      e[v] = 1;
      base = Polynomial::monomial(n, e, 1);
    } else {
      fail_at(t, "expected a number, variable or '('");
    }
    if (peek().kind == Tok::caret) {
      take();
      unsigned long k = small_exponent();
      Polynomial pow = Polynomial::constant(n, 1);
      for (unsigned long s = 0; s < k; ++s) pow = pow * base;
      return pow;
    }
    return base;
  }

  Polynomial product() {
    Polynomial acc = factor();
    while (true) {
      if (peek().kind == Tok::star) {
        take();
        if (!starts_factor()) fail_at(peek(), "expected a factor after '*'");
        acc = acc * factor();
      } else if (starts_factor()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial additive() {
    Rat sign(1);
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      if (take().kind == Tok::minus) sign = -1;
    }
    Polynomial acc = product().scale(sign);
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      Rat s = take().kind == Tok::minus ? Rat(-1) : Rat(1);
      acc = acc + product().scale(s);
    }
    return acc;
  }

  // wedge block; returns (sorted subset, permutation sign)
  std::pair<Subset, int> wedge() {
    std::vector<int> raw;
    while (true) {
      const Token& t = peek();
      if (t.kind != Tok::ident || differential_of(t) < 0) {
        if (raw.empty()) {
          if (t.kind == Tok::ident && variable_of(t) < 0)
            fail_at(t, "unknown variable or differential '" + t.text + "'");
          fail_at(t, "expected a differential");
        }
        break;
      }
      raw.push_back(differential_of(take()));
      if (peek().kind == Tok::caret) {
        take();
        if (peek().kind != Tok::ident || differential_of(peek()) < 0)
          fail_at(peek(), "expected a differential after '^'");
      } else {
        break;
      }
    }
    int sign = 1;
    for (size_t a = 0; a < raw.size(); ++a)
      for (size_t b = a + 1; b < raw.size(); ++b) {
        if (raw[a] == raw[b]) fail_at(toks[i - 1], "repeated differential in a wedge");
        if (raw[a] > raw[b]) sign = -sign;
      }
    Subset j(raw.begin(), raw.end());
    std::sort(j.begin(), j.end());
    return {j, sign};
  }

  StandardPForm form(int declared_p) {
    StandardPForm f;
    f.n = n;
    f.p = declared_p;
    Rat sign(1);
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      if (take().kind == Tok::minus) sign = -1;
    }
    while (true) {
      const Token& head = peek();
      Polynomial coeff = starts_factor() ? product() : Polynomial::constant(n, 1);
      auto [j, wsign] = wedge();
      if (f.p < 0) f.p = static_cast<int>(j.size());
      if (static_cast<int>(j.size()) != f.p)
        fail_at(head, "wedge arity " + std::to_string(j.size()) + " does not match p = " +
                          std::to_string(f.p));
      f.add(j, coeff.scale(sign * wsign));
      if (peek().kind == Tok::end) break;
      if (peek().kind == Tok::plus)
        sign = 1;
      else if (peek().kind == Tok::minus)
        sign = -1;
      else
        fail_at(peek(), "expected '+' or '-' between terms");
      take();
    }
    return f;
  }
};

struct Line {
  std::string text;
  int number;
};

std::string strip_comment(const std::string& s) {
  auto h = s.find('#');
  return h == std::string::npos ? s : s.substr(0, h);
}

bool blank(const std::string& s) {
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

// leading `key:` on a line; returns the column just past the colon, or 0
int header_key(const std::string& s, const std::string& key) {
  size_t p = 0;
  while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  if (s.compare(p, key.size(), key) != 0) return 0;
  size_t q = p + key.size();
  while (q < s.size() && std::isspace(static_cast<unsigned char>(s[q]))) ++q;
  if (q >= s.size() || s[q] != ':') return 0;
  return static_cast<int>(q + 2);
}

}  // namespace

FormDocument parse_form(const std::string& text) {
  std::vector<Line> lines;
  {
    std::istringstream in(text);
    std::string l;
    int no = 1;
    while (std::getline(in, l)) lines.push_back({l, no++});
  }

  FormDocument doc;
  bool have_vars = false, have_p = false;
  int declared_p = -1;
  std::string form_src;
  int form_line = 0, form_col = 0;

  for (size_t li = 0; li < lines.size(); ++li) {
    std::string body = strip_comment(lines[li].text);
    if (blank(body)) continue;
    int no = lines[li].number;

    if (int c = header_key(body, "vars"); c) {
      if (have_vars) fail_at(no, 1, "duplicate vars line");
      have_vars = true;
      std::istringstream in(body.substr(c - 1));
      std::string name;
      while (in >> name) {
        if (!ident_start(name[0])) fail_at(no, c, "bad variable name '" + name + "'");
        for (char ch : name)
          if (!ident_char(ch)) fail_at(no, c, "bad variable name '" + name + "'");
        for (const auto& prev : doc.variables)
          if (prev == name) fail_at(no, c, "duplicate variable '" + name + "'");
        doc.variables.push_back(name);
      }
      if (doc.variables.empty()) fail_at(no, c, "vars line declares no variables");
      continue;
    }
    if (int c = header_key(body, "p"); c) {
      if (have_p) fail_at(no, 1, "duplicate p line");
      have_p = true;
      std::istringstream in(body.substr(c - 1));
      long v;
      if (!(in >> v) || v < 0) fail_at(no, c, "p must be a nonnegative integer");
      std::string extra;
      if (in >> extra) fail_at(no, c, "trailing text after p");
      declared_p = static_cast<int>(v);
      continue;
    }
    if (int c = header_key(body, "form"); c) {
      if (!have_vars) fail_at(no, 1, "vars must be declared before the form");
      form_src = body.substr(c - 1);
      for (size_t lj = li + 1; lj < lines.size(); ++lj) form_src += "\n" + lines[lj].text;
      form_line = no;
      form_col = c;
      break;
    }
    fail_at(no, 1, "expected a vars, p or form line");
  }
  if (form_line == 0) throw input_error("missing form line");

  // a name like dy would make the differential of y unwritable
  for (const auto& a : doc.variables)
    for (const auto& b : doc.variables)
      if (a == "d" + b)
        throw input_error("variable '" + a + "' shadows the differential of '" + b + "'");

  ExprParser ep(lex(form_src, form_line, form_col), doc.variables);
  doc.form = ep.form(declared_p);
  if (doc.form.coeffs.empty()) fail_at(form_line, form_col, "the form is identically zero");
  validate(doc.form);
  return doc;
}

FormDocument parse_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_form(buf.str());
}

std::string print_form(const FormDocument& doc) {
  std::ostringstream os;
  os << "vars:";
  for (const auto& v : doc.variables) os << " " << v;
  os << "\np: " << doc.form.p << "\nform: " << doc.form.str(doc.variables) << "\n";
  return os.str();
}

}  // namespace toricform
