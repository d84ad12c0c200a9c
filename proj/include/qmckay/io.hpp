#pragma once
#include <string>
#include <vector>

#include "qmckay/mckay.hpp"

namespace qmckay {

struct AnalysisOptions {
    long max_group_order = 20000;
    bool emit_classes = true;
    bool duality_check = true;
};

struct AnalysisInput {
    long conductor = 1;
    QuinticForm quintic;
    std::vector<Mat> generators;
    AnalysisOptions options;
    std::vector<std::string> warnings;  // parse-time notes, carried into the report
};

// Exact inverse of Cyc::str with z = zeta_conductor. Terms look like
// "-1/2 + 3*z^7"; a bare rational never mentions z.
Cyc parse_cyc(const std::string& text, long conductor);

// 5x5 permutation matrix from disjoint cycles over 1..5, e.g. "(1 3)(2 4)".
// The matrix substitutes x_i by x_{sigma(i)}.
Mat parse_permutation(const std::string& cycles);

// Input document: top-level object with conductor, quintic (list of
// {coeff, monomial}), generators (5x5 entry matrices or {"perm": ...}),
// options. Unknown keys are schema errors.
AnalysisInput parse_input_text(const std::string& text);
AnalysisInput parse_input(const std::string& path);

struct AnalysisOutput {
    long group_order = 1;
    long num_classes = 1;
    OrbifoldResult result;
    bool include_classes = true;  // "classes" key present
    bool has_h22 = true;          // h22_check and per-class h22 present
    std::vector<std::string> warnings;
};

// Machine format; identical outputs serialize to identical bytes.
std::string output_to_json(const AnalysisOutput& out);

// Inverse of output_to_json over every field it emits.
AnalysisOutput output_from_json(const std::string& text);

// Human-readable class table with the global invariants underneath.
std::string output_to_table(const AnalysisOutput& out);

}  // namespace qmckay
