#pragma once

#include <string>
#include <vector>

#include "lindblad/core.hpp"

namespace lindblad {

/// (|0><0| + |1><1| + |0><1| + |1><0|) / 2
DensityMatrix paper_example_state(int dim);

/// Parses `fock:n`, `gibbs`, `paper-example` or `file:PATH`.
/// Throws ParameterError on malformed specs or a file that is not a density
/// matrix (to 1e-10), and DimensionError when the state does not fit in `dim`.
DensityMatrix parse_initial_state(const std::string& spec, const ModelParams& params, int dim);

struct NamedState {
  std::string name;
  DensityMatrix rho;
};

/// Fixed ten-state comparison set. Everything except the Gibbs state lives on
/// levels 0..3.
std::vector<NamedState> reference_corpus(const ModelParams& params, int dim);

}  // namespace lindblad
