#pragma once

#include "netgame/branching.hpp"
#include "netgame/equilibrium.hpp"
#include "netgame/errors.hpp"
#include "netgame/exact.hpp"
#include "netgame/game.hpp"
#include "netgame/generators.hpp"
#include "netgame/graph.hpp"
#include "netgame/json_io.hpp"
#include "netgame/mincut.hpp"
#include "netgame/monte_carlo.hpp"
#include "netgame/parallel.hpp"
#include "netgame/percolation.hpp"
#include "netgame/rng.hpp"
#include "netgame/robustness.hpp"
#include "netgame/structure.hpp"
