#pragma once

#include "qdec/errors.hpp"
#include "qdec/complex_matrix.hpp"
#include "qdec/qexp.hpp"
#include "qdec/laguerre.hpp"
#include "qdec/distributions.hpp"
#include "qdec/density_matrix.hpp"
#include "qdec/eigensystem.hpp"
#include "qdec/entropy.hpp"
#include "qdec/propagators.hpp"
#include "qdec/ode.hpp"
#include "qdec/trapped_ion.hpp"
#include "qdec/time_series.hpp"
#include "qdec/analysis.hpp"
#include "qdec/commands.hpp"
