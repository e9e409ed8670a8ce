#pragma once

#include <complex>

namespace splitmat {

using cdouble = std::complex<double>;

enum class EnsembleKind { gsce, gsqe, ginibre_real };

}  // namespace splitmat
