#pragma once

#include "xg/cyclic.hpp"
#include "xg/alternator.hpp"
#include "xg/graphs.hpp"
#include "xg/mycielski.hpp"
#include "xg/solver.hpp"
#include "xg/coloring.hpp"
#include "xg/serialize.hpp"
