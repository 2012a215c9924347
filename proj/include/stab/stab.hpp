#pragma once

#include "stab/bitset.hpp"
#include "stab/budget.hpp"
#include "stab/cnf.hpp"
#include "stab/dimacs.hpp"
#include "stab/enumerate.hpp"
#include "stab/gadgets.hpp"
#include "stab/graph.hpp"
#include "stab/graph_number.hpp"
#include "stab/laws.hpp"
#include "stab/oracle.hpp"
#include "stab/reductions.hpp"
#include "stab/solver.hpp"
#include "stab/stability.hpp"
