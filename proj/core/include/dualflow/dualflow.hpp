#pragma once

#include "dualflow/circuits.hpp"
#include "dualflow/constructions.hpp"
#include "dualflow/contraction.hpp"
#include "dualflow/error.hpp"
#include "dualflow/graph_io.hpp"
#include "dualflow/network.hpp"
#include "dualflow/polyhedron.hpp"
#include "dualflow/rational.hpp"
#include "dualflow/skeleton.hpp"
#include "dualflow/vertices.hpp"
#include "dualflow/walk.hpp"
#include "dualflow/walk_builders.hpp"
