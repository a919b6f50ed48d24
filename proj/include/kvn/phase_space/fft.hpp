#pragma once

#include <Eigen/Core>

namespace kvn::phase_space {

// Batched in-place FFTW transforms over the columns (along q) or the rows
// (along p) of a column-major matrix. Unnormalized; sign -1 is forward
// (kernel exp(-i k x)), +1 is backward. Plans are cached per shape and
// built with FFTW_ESTIMATE so results do not depend on timing.
void fft_along_q(Eigen::MatrixXcd& a, int sign);
void fft_along_p(Eigen::MatrixXcd& a, int sign);

// Thread count used by FFTW: the hardware concurrency, capped by KVN_THREADS.
int fft_threads();

}  // namespace kvn::phase_space
