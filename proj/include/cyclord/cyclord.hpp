#pragma once

#include "cyclord/census.hpp"
#include "cyclord/cyclic_permutation.hpp"
#include "cyclord/error.hpp"
#include "cyclord/extendability.hpp"
#include "cyclord/format.hpp"
#include "cyclord/graph.hpp"
#include "cyclord/hypergraph.hpp"
#include "cyclord/relation.hpp"
#include "cyclord/solver.hpp"
#include "cyclord/triple.hpp"
