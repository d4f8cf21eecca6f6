#pragma once

#include "calderon/matrix_op.hpp"
#include "calderon/rng.hpp"
#include "calderon/step_function.hpp"

namespace calderon {

// Complex Ginibre: independent standard complex normal entries.
MatrixOp random_ginibre(Rng& rng, std::size_t n);

// GUE-style hermitian: (G + G^H) / 2 from a Ginibre draw.
MatrixOp random_gue(Rng& rng, std::size_t n);

// Positive semidefinite G G^H / n (unit-order spectrum).
MatrixOp random_positive(Rng& rng, std::size_t n);

// Random decreasing nonnegative step with up to `max_pieces` pieces,
// breakpoints log-uniform in [t_lo, t_hi].
DecreasingStep random_decreasing_step(Rng& rng, int max_pieces, double t_lo,
                                      double t_hi);

// Random signed step function on the same breakpoint model.
StepFunction random_signed_step(Rng& rng, int max_pieces, double t_lo,
                                double t_hi);

}  // namespace calderon
