#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "strand/diagram.hpp"
#include "strand/word.hpp"

namespace strand {

// The right vine t_k: the (1,k)-diagram of k-1 splits chained along the
// rightmost strand; right_vine(1) is the trivial (1,1)-diagram.
StrandDiagram right_vine(int k);

// Witness family words (valid for n >= 2).
Word f_word(int n);
Word g_word(int n);

// Elements f_n, g_n built from the words; both published word forms are
// checked to give equal diagrams.
StrandDiagram f_element(int n);
StrandDiagram g_element(int n);

// The square counterparts: frak_f(n) = t_{2n+1}^-1 f_n t_{2n+1}, a
// (2n+1,2n+1)-diagram of norm 4n; frak_g(n) likewise with t_{3n}.
StrandDiagram frak_f(int n);
StrandDiagram frak_g(int n);

// The canonical (2n+1,3n) conjugating diagram with f_n.h_n = h_n.g_n and
// norm (n-1)(2n+1), located via the norm-minimizing shift of an aligned
// conjugator.
StrandDiagram frak_h(int n);

// The (1,1) conjugator element t_{2n+1} frak_h(n) t_{3n}^-1, verified to
// satisfy g_n = h^-1 f_n h.
StrandDiagram h_element(int n);

struct ExperimentRecord {
  int n = 0;
  int len_f = 0;
  int len_g = 0;
  int cd = 0;
  int minimizer_shift = 0;
  bool unique = false;
  int remark33_value = 0;
  long thm32_lower_num = 0;  // value = num / 2 (always an integer here)
  long cor25_upper = 0;
  bool match = false;
};

// One record per n: exact lengths, exact conjugator distance, and the
// bound comparisons.  Uses the table length engine.
std::vector<ExperimentRecord> run_clf_experiment(int n_from, int n_to);

std::string experiment_csv(const std::vector<ExperimentRecord>& rows);

}  // namespace strand
