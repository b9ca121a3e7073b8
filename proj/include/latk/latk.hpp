// Umbrella header.
#pragma once

#include "algebroid.hpp"
#include "ce_homology.hpp"
#include "lie_algebra.hpp"
#include "linalg.hpp"
#include "local_model.hpp"
#include "local_system.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "simplicial.hpp"
