#pragma once

#include "sgcc/circuits.hpp"
#include "sgcc/cover.hpp"
#include "sgcc/cycle_tree.hpp"
#include "sgcc/cycles.hpp"
#include "sgcc/edge_set.hpp"
#include "sgcc/error.hpp"
#include "sgcc/generate.hpp"
#include "sgcc/negativeness.hpp"
#include "sgcc/oracle.hpp"
#include "sgcc/paths.hpp"
#include "sgcc/random.hpp"
#include "sgcc/set_cover.hpp"
#include "sgcc/signed_graph.hpp"
#include "sgcc/tree_cover.hpp"
