#pragma once

// Umbrella header: exact symbolic toolkit for multiparametric deformed
// commutation relations, vacuum bra-kets, Gram blocks and their determinant
// factorizations, chamber pairings on the braid arrangement, denominator
// bounds for inverse blocks, and positive-definiteness certification.

#include "quon/braid.hpp"
#include "quon/braket.hpp"
#include "quon/checks.hpp"
#include "quon/error.hpp"
#include "quon/gaussian.hpp"
#include "quon/gram.hpp"
#include "quon/matrix.hpp"
#include "quon/mpoly.hpp"
#include "quon/parallel.hpp"
#include "quon/rational.hpp"
#include "quon/sampling.hpp"
#include "quon/upoly.hpp"
