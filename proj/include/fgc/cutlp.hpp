#pragma once

#include "fgc/simplex.hpp"
#include "fgc/subroutines.hpp"

namespace fgc {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The cut formulation: one variable per edge, and for every proper vertex set S
// (canonically the sides avoiding vertex 0):
//   sum_{unsafe f in delta(S)} x_f + 2 * sum_{safe e in delta(S)} x_e >= 2.
LpProblem<Rational> build_cut_lp(const FgcInstance& instance);

// Optimal value of the LP relaxation (exact simplex). Requires n <= 16.
std::pair<std::vector<Rational>, Rational> lp_relaxation(const FgcInstance& instance);

// Writes the ILP in LP text format with rows ordered by canonical cut integer.
void export_ilp(const FgcInstance& instance, const std::string& path);
std::string ilp_text(const FgcInstance& instance);

}  // namespace fgc
