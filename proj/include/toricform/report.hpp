#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "toricform/pipeline.hpp"

namespace toricform {

using Json = nlohmann::ordered_json;

// y1 .. yn, the variable names of every chart.
std::vector<std::string> chart_names(int n);

// Facets are labeled F1, F2, ... in the stored order; a face is named by its
// defining facets, the full polyhedron by Gamma.
std::string facet_label(int index);
std::string face_label(const Face& face);

// The restriction of the form to a face, written in the monomial basis.
std::string initial_form_string(const LogPForm& f, const Face& face,
                                const std::vector<std::string>& names);

// Machine report.  Deterministic key order; integers as numbers, rationals as
// "num/den" strings, complex approximations as [re, im] pairs.
Json json_report(const Analysis& a, const std::vector<std::string>& names);

// Human-readable summary of the same data.
std::string text_report(const Analysis& a, const std::vector<std::string>& names);

}  // namespace toricform
