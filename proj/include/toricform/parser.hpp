#pragma once

#include <string>
#include <vector>

#include "toricform/pform.hpp"

namespace toricform {

// Parsed .form file: the declared variable names and the form they define.
struct FormDocument {
  std::vector<std::string> variables;
  StandardPForm form;

  bool operator==(const FormDocument& o) const {
    return variables == o.variables && form == o.form;
  }
};

// Grammar: a `vars: x y z` line, an optional `p: <k>` line, then `form:`
// followed by a sum of terms running to the end of the file.  Each term is a
// coefficient expression (integer and fraction literals, + - * ^ and
// parentheses, products also by juxtaposition) followed by a wedge block
// d<var>^d<var>^...  Wedges normalize to increasing variable order with the
// sign of the permutation; `#` starts a comment.  Errors carry line and
// column positions.
FormDocument parse_form(const std::string& text);
FormDocument parse_form_file(const std::string& path);

// Canonical rendering; parsing it back yields an identical document.
std::string print_form(const FormDocument& doc);

}  // namespace toricform
