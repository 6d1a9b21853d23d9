#pragma once

#include "fsweno/boundary.hpp"
#include "fsweno/cases.hpp"
#include "fsweno/flux.hpp"
#include "fsweno/grid.hpp"
#include "fsweno/models.hpp"
#include "fsweno/solver.hpp"
#include "fsweno/weno.hpp"
