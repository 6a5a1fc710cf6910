#pragma once

// Umbrella header for the whole library.

#include "plethysm/cache.hpp"
#include "plethysm/character.hpp"
#include "plethysm/errors.hpp"
#include "plethysm/hwv.hpp"
#include "plethysm/partition.hpp"
#include "plethysm/permutation.hpp"
#include "plethysm/pieri.hpp"
#include "plethysm/power_sum.hpp"
#include "plethysm/quasipoly.hpp"
#include "plethysm/rational.hpp"
#include "plethysm/schur.hpp"
#include "plethysm/sequences.hpp"
#include "plethysm/tableau.hpp"
#include "plethysm/tensor_vector.hpp"
#include "plethysm/verify.hpp"
