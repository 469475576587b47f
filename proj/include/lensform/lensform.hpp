#pragma once

#include "lensform/arith.hpp"
#include "lensform/counting.hpp"
#include "lensform/errors.hpp"
#include "lensform/harmonic_oracle.hpp"
#include "lensform/isospectral.hpp"
#include "lensform/lattice.hpp"
#include "lensform/lens.hpp"
#include "lensform/matrix.hpp"
#include "lensform/parallel.hpp"
#include "lensform/spectrum.hpp"
#include "lensform/toric.hpp"
